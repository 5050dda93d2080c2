// Command-line surface for the grammic library. Exit codes: 0 success,
// 1 property violation (inequivalence gaps, failed identities, failed
// verification), 2 usage or budget errors.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grammic/grammic.hpp"

namespace {

using namespace grammic;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Budgets {
  std::uint64_t steps = kDefaultStepBudget;
  std::uint64_t space = kDefaultSpaceBudget;
};

Budgets budgets_from_env() {
  Budgets b;
  if (const char* raw = std::getenv("GRAMMIC_BUDGET")) {
    const std::string s(raw);
    try {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(s);
      b.steps = std::stoull(s);
      if (b.steps == 0) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw misuse_error("GRAMMIC_BUDGET must be a positive integer, got '" + s + "'");
    }
    b.space = b.steps;
  }
  return b;
}

int resolve_rank(const std::optional<int>& rank, std::initializer_list<const Word*> words) {
  if (rank) {
    validate_rank(*rank);
    return *rank;
  }
  Letter m = 1;
  for (const Word* w : words) m = std::max(m, max_letter(*w));
  return m;
}

void print_tableau(const Tableau& t, bool json_mode) {
  if (json_mode) {
    std::cout << tableau_json(t).dump() << "\n";
    return;
  }
  if (t.rows.empty()) {
    std::cout << "ε\n";
    return;
  }
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) std::cout << word_to_string(*it) << "\n";
}

int run_verify_suite(std::uint64_t seed, const Budgets& budgets, bool json_mode) {
  std::vector<CriterionResult> results = run_all_criteria(seed, budgets.steps, budgets.space);
  int failures = 0;
  json arr = json::array();
  for (const CriterionResult& r : results) {
    if (!r.passed) ++failures;
    if (json_mode) {
      arr.push_back(json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      std::printf("%s %-22s (%6.2fs) %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                  r.detail.c_str());
    }
  }
  if (json_mode) std::cout << json{{"criteria", arr}, {"failures", failures}}.dump() << "\n";
  else std::printf("%zu/%zu criteria passed\n", results.size() - failures, results.size());
  return failures == 0 ? kOk : kViolation;
}

RelationSet parse_relset(const std::string& name, int n) {
  RelationSet out{name, n, {}};
  std::size_t pos = 0;
  while (pos <= name.size()) {
    std::size_t next = name.find('+', pos);
    std::string token = name.substr(pos, next == std::string::npos ? next : next - pos);
    if (token == "knuth") {
      out = merge(out, knuth_relations(n), name);
    } else if (token == "lps") {
      out = merge(out, lps_relations(n), name);
    } else if (token == "choffrut") {
      validate_rank({3, 2, 1, 2}, n);
      out = merge(out, RelationSet{"choffrut", n, {{{3, 2, 1, 2}, {2, 1, 3, 2}}}}, name);
    } else {
      throw misuse_error("unknown relation set '" + token + "' (knuth, lps, choffrut, joined by +)");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grammic monoid toolkit: tableaux, tropical fingerprints, relations"};
  app.require_subcommand(1);

  bool json_mode = false;
  app.add_flag("--json", json_mode, "machine-readable output");
  std::optional<int> rank;
  app.add_option("--rank", rank, "alphabet rank (default: largest letter present)");
  std::uint64_t seed = 3212;
  app.add_option("--seed", seed, "seed for randomized sweeps");
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for data-parallel sweeps")
      ->check(CLI::Range(1u, 4096u));

  std::string word_arg, u_arg, v_arg, gamma_arg, content_arg, relset_arg, identity_arg;
  int n_arg = 0, k_arg = 0, m_arg = 0, lo_arg = 0, hi_arg = 0;
  int max_len = 3;
  bool show_reps = false, show_edges = false;

  CLI::App* insert = app.add_subcommand("insert", "Schensted tableau of a word");
  insert->add_option("word", word_arg)->required();

  CLI::App* fp = app.add_subcommand("fingerprint", "tropical fingerprint matrix (JSON)");
  fp->add_option("word", word_arg)->required();

  CLI::App* eq = app.add_subcommand("equiv", "decide equivalence via fingerprints");
  eq->add_option("u", u_arg)->required();
  eq->add_option("v", v_arg)->required();

  CLI::App* oracle = app.add_subcommand("oracle", "decide equivalence via the row action");
  oracle->add_option("u", u_arg)->required();
  oracle->add_option("v", v_arg)->required();

  CLI::App* act = app.add_subcommand("act", "apply a word to a bottom-row vector");
  act->add_option("gamma", gamma_arg)->required();
  act->add_option("word", word_arg)->required();

  CLI::App* chs = app.add_subcommand("chseq", "charge sequence of a standard word");
  chs->add_option("word", word_arg)->required();

  CLI::App* transform = app.add_subcommand("transform", "word transforms");
  transform->require_subcommand(1);
  CLI::App* tr_pack = transform->add_subcommand("pack", "collapse the support onto [m]");
  tr_pack->add_option("word", word_arg)->required();
  CLI::App* tr_std = transform->add_subcommand("std", "standardise (left-to-right tie break)");
  tr_std->add_option("word", word_arg)->required();
  CLI::App* tr_inv = transform->add_subcommand("involute", "reverse and complement in [n]");
  tr_inv->add_option("word", word_arg)->required();
  CLI::App* tr_res = transform->add_subcommand("restrict", "keep letters inside [lo, hi]");
  tr_res->add_option("lo", lo_arg)->required();
  tr_res->add_option("hi", hi_arg)->required();
  tr_res->add_option("word", word_arg)->required();
  for (CLI::App* sub : {tr_pack, tr_std, tr_inv, tr_res}) sub->fallthrough();

  CLI::App* classes = app.add_subcommand("classes", "equivalence classes of [n]^k");
  classes->add_option("n", n_arg)->required()->check(CLI::PositiveNumber);
  classes->add_option("k", k_arg)->required()->check(CLI::NonNegativeNumber);
  classes->add_flag("--reps", show_reps, "list every member of every class");

  CLI::App* pres = app.add_subcommand("presentation", "congruence closure gap of a relation set");
  pres->add_option("relset", relset_arg)->required();
  pres->add_option("n", n_arg)->required()->check(CLI::PositiveNumber);
  pres->add_option("k", k_arg)->required()->check(CLI::NonNegativeNumber);

  CLI::App* rels = app.add_subcommand("relations", "relation families and column moves");
  rels->require_subcommand(1);
  CLI::App* rk = rels->add_subcommand("knuth", "plactic relations over [n]");
  CLI::App* rl = rels->add_subcommand("lps", "lps relations over [n]");
  int max_m = 0;
  rl->add_option("--max-m", max_m, "longest chain length (default n-1)");
  CLI::App* r2 = rels->add_subcommand("two-column", "single-letter column move check");
  std::vector<std::string> col_args;
  r2->add_option("columns", col_args, "c1 c2 d1 d2 as strictly decreasing words")
      ->expected(4);
  CLI::App* rm = rels->add_subcommand("m-column", "equivalent m-column tableau readings");
  rm->add_option("n", n_arg)->required()->check(CLI::PositiveNumber);
  rm->add_option("m", m_arg)->required()->check(CLI::PositiveNumber);
  for (CLI::App* sub : {rk, rl, r2, rm}) sub->fallthrough();

  CLI::App* ident = app.add_subcommand("identity", "two-sided identity checking");
  ident->require_subcommand(1);
  CLI::App* ic = ident->add_subcommand("check", "search for a counterexample");
  ic->add_option("identity", identity_arg, "e.g. \"xyyx=yxxy\"")->required();
  ic->add_option("--max-len", max_len, "largest substituted image (default 3)");
  CLI::App* ifa = ident->add_subcommand("falsify", "produce a counterexample");
  ifa->add_option("identity", identity_arg, "e.g. \"xyyx=yxxy\"")->required();
  ifa->add_option("--max-len", max_len, "largest substituted image (default 3)");
  for (CLI::App* sub : {ic, ifa}) sub->fallthrough();

  CLI::App* sg = app.add_subcommand("shiftgraph", "cyclic shift graph of one content");
  sg->add_option("n", n_arg)->required()->check(CLI::PositiveNumber);
  sg->add_option("content", content_arg, "word (\"1122\") or pairs (\"1:2,2:2\")")->required();
  sg->add_flag("--edges", show_edges, "print the edge list");

  CLI::App* suite = app.add_subcommand("verify-suite", "run every acceptance property");

  for (CLI::App* sub :
       {insert, fp, eq, oracle, act, chs, transform, classes, pres, rels, ident, sg, suite})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Budgets budgets = budgets_from_env();

    if (insert->parsed()) {
      Word w = parse_word(word_arg, rank);
      print_tableau(tableau_of(w), json_mode);
      return kOk;
    }

    if (fp->parsed()) {
      Word w = parse_word(word_arg, rank);
      int n = resolve_rank(rank, {&w});
      validate_rank(w, n);
      std::cout << fingerprint_json(fingerprint(w, n)).dump() << "\n";
      return kOk;
    }

    if (eq->parsed() || oracle->parsed()) {
      Word u = parse_word(u_arg, rank);
      Word v = parse_word(v_arg, rank);
      int n = resolve_rank(rank, {&u, &v});
      bool same = eq->parsed() ? equiv(u, v, n) : equiv_oracle(u, v, n, budgets.steps);
      if (json_mode) std::cout << json{{"equivalent", same}, {"rank", n}}.dump() << "\n";
      else std::cout << (same ? "equivalent" : "not equivalent") << "\n";
      return kOk;
    }

    if (act->parsed()) {
      RowVector gamma = parse_row_vector(gamma_arg);
      int n = static_cast<int>(gamma.size());
      if (rank && *rank != n) throw misuse_error("--rank must match the row vector length");
      Word w = parse_word(word_arg, n);
      RowVector out = act_word(std::move(gamma), w);
      if (json_mode) std::cout << json{{"gamma", out}}.dump() << "\n";
      else std::cout << row_vector_to_string(out) << "\n";
      return kOk;
    }

    if (chs->parsed()) {
      Word w = parse_word(word_arg, rank);
      ChargeSequence cs = charge_sequence(w);
      if (json_mode) std::cout << json{{"chseq", cs.values}, {"charge", cs.charge()}}.dump() << "\n";
      else std::cout << word_to_string(cs.values) << " (charge " << cs.charge() << ")\n";
      return kOk;
    }

    if (transform->parsed()) {
      Word w = parse_word(word_arg, rank);
      Word out;
      if (tr_pack->parsed()) {
        out = pack(w);
      } else if (tr_std->parsed()) {
        out = standardise(w);
      } else if (tr_inv->parsed()) {
        if (!rank) throw misuse_error("--rank is required for involution");
        out = involute(w, *rank);
      } else {
        out = restrict_to(w, lo_arg, hi_arg);
      }
      if (json_mode) std::cout << json{{"word", out}}.dump() << "\n";
      else std::cout << word_to_string(out) << "\n";
      return kOk;
    }

    if (classes->parsed()) {
      bool with_members = show_reps || json_mode;
      ClassMap map = enumerate_classes(n_arg, k_arg, with_members, budgets.space, jobs);
      if (json_mode) {
        std::cout << class_map_json(n_arg, k_arg, map).dump() << "\n";
      } else {
        std::cout << map.size() << " classes among " << n_arg << "^" << k_arg << " words\n";
        if (show_reps)
          for (const auto& [key, cls] : map) {
            std::cout << word_to_string(cls.representatives.front()) << " ("
                      << cls.representatives.size() << " words)\n";
          }
      }
      return kOk;
    }

    if (pres->parsed()) {
      RelationSet set = parse_relset(relset_arg, n_arg);
      auto gap = presentation_gap(set, n_arg, k_arg, budgets.space);
      if (json_mode) {
        json pairs = json::array();
        for (const RelationPair& p : gap) pairs.push_back(json::array({json(p.lhs), json(p.rhs)}));
        std::cout << json{{"relset", relset_arg}, {"n", n_arg}, {"k", k_arg}, {"gap", pairs}}.dump()
                  << "\n";
      } else if (gap.empty()) {
        std::cout << "gap empty: " << relset_arg << " joins every equivalent pair of length "
                  << k_arg << "\n";
      } else {
        for (const RelationPair& p : gap)
          std::cout << word_to_string(p.lhs) << " ~ " << word_to_string(p.rhs)
                    << " not joined\n";
      }
      return gap.empty() ? kOk : kViolation;
    }

    if (rels->parsed()) {
      if (rk->parsed() || rl->parsed()) {
        int n = rank.value_or(0);
        if (n == 0) throw misuse_error("--rank is required for relation families");
        RelationSet set = rk->parsed() ? knuth_relations(n) : lps_relations(n, max_m);
        if (json_mode) {
          std::cout << relation_set_json(set).dump() << "\n";
        } else {
          for (const RelationPair& p : set.pairs)
            std::cout << word_to_string(p.lhs) << " = " << word_to_string(p.rhs) << "\n";
        }
        return kOk;
      }
      if (r2->parsed()) {
        std::vector<Word> cols;
        for (const std::string& c : col_args) cols.push_back(parse_word(c, rank));
        int n = resolve_rank(rank, {&cols[0], &cols[1], &cols[2], &cols[3]});
        try {
          two_column_check(cols[0], cols[1], cols[2], cols[3], n);
        } catch (const precondition_error& e) {
          std::cout << "precondition failed: " << e.what() << "\n";
          return kViolation;
        } catch (const hypothesis_error& e) {
          std::cout << "hypotheses not met: " << e.what() << "\n";
          return kViolation;
        }
        Word lhs = concat(cols[0], cols[1]);
        Word rhs = concat(cols[2], cols[3]);
        if (json_mode)
          std::cout << json{{"lhs", lhs}, {"rhs", rhs}, {"equivalent", true}}.dump() << "\n";
        else
          std::cout << "equivalent: " << word_to_string(lhs) << " ~ " << word_to_string(rhs)
                    << "\n";
        return kOk;
      }
      MColumnReport report = enumerate_mcolumn_relations(n_arg, m_arg, budgets.steps);
      if (json_mode) {
        std::cout << mcolumn_report_json(report).dump() << "\n";
      } else {
        std::cout << report.tableaux << " tableaux, " << report.relations.size()
                  << " equivalent reading pairs\n";
        for (const MColumnRelation& rel : report.relations)
          std::cout << word_to_string(rel.lhs) << " ~ " << word_to_string(rel.rhs) << "\n";
        if (report.columns == 2)
          std::cout << report.explained.size() << " explained by a column move, "
                    << report.unexplained.size() << " not\n";
      }
      return kOk;
    }

    if (ident->parsed()) {
      Identity id = parse_identity(identity_arg);
      if (!rank) throw misuse_error("--rank is required for identities");
      validate_rank(*rank);
      std::optional<FalsifyResult> witness;
      if (!is_balanced(id)) witness = falsify_unbalanced(id);
      else witness = falsify(id, *rank, max_len, budgets.steps);
      bool holds = !witness.has_value();
      if (json_mode) {
        json j{{"identity", identity_to_string(id)},
               {"balanced", is_balanced(id)},
               {"rank", *rank},
               {"max_len", max_len},
               {"holds_up_to_budget", holds}};
        if (witness) j["witness"] = falsify_json(id, *witness);
        std::cout << j.dump() << "\n";
      } else if (witness) {
        std::cout << identity_to_string(id) << " fails: ";
        for (std::size_t i = 0; i < witness->assignment.size(); ++i)
          std::cout << static_cast<char>('a' + i) << " -> "
                    << word_to_string(witness->assignment[i]) << (i + 1 < witness->assignment.size() ? ", " : "");
        std::cout << " gives " << word_to_string(witness->lhs_image) << " vs "
                  << word_to_string(witness->rhs_image) << "\n";
      } else {
        std::cout << identity_to_string(id) << ": no counterexample with images up to length "
                  << max_len << " at rank " << *rank << "\n";
      }
      if (ic->parsed()) return holds ? kOk : kViolation;
      return witness ? kOk : kViolation;  // falsify: the witness is the deliverable
    }

    if (sg->parsed()) {
      Content c = parse_content(content_arg);
      ShiftGraph g = build_shift_graph(n_arg, c, budgets.space);
      if (json_mode) {
        std::cout << shift_graph_json(g).dump() << "\n";
      } else {
        std::cout << g.words << " words, " << g.keys.size() << " classes\n";
        for (const ShiftComponent& comp : shift_components(g))
          std::cout << "component: " << comp.members.size() << " classes, diameter "
                    << comp.diameter << "\n";
        if (show_edges) std::cout << shift_graph_edge_list(g);
      }
      return kOk;
    }

    if (suite->parsed()) return run_verify_suite(seed, budgets, json_mode);

    throw misuse_error("no subcommand dispatched");
  } catch (const budget_error& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kUsage;
  } catch (const misuse_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const hypothesis_error& e) {
    std::cerr << "hypothesis error: " << e.what() << "\n";
    return kViolation;
  } catch (const precondition_error& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kViolation;
  } catch (const rank_error& e) {
    std::cerr << "rank error: " << e.what() << "\n";
    return kUsage;
  } catch (const invalid_interval_error& e) {
    std::cerr << "interval error: " << e.what() << "\n";
    return kUsage;
  } catch (const not_standard_error& e) {
    std::cerr << "standardness error: " << e.what() << "\n";
    return kUsage;
  } catch (const empty_word_error& e) {
    std::cerr << "empty word error: " << e.what() << "\n";
    return kUsage;
  } catch (const dimension_error& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kUsage;
  } catch (const error& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    return kViolation;
  }
}
