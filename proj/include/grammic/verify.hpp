#ifndef GRAMMIC_VERIFY_HPP_
#define GRAMMIC_VERIFY_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grammic/action.hpp"
#include "grammic/identities.hpp"
#include "grammic/relations.hpp"
#include "grammic/serialize.hpp"
#include "grammic/shiftgraph.hpp"
#include "grammic/tableau.hpp"
#include "grammic/tropical.hpp"
#include "grammic/word.hpp"

namespace grammic {

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

// body(detail) returns pass/fail; exceptions fail the criterion.
template <typename Fn>
CriterionResult run_criterion(const char* name, Fn&& body) {
  CriterionResult r;
  r.name = name;
  auto start = std::chrono::steady_clock::now();
  try {
    std::ostringstream detail;
    r.passed = body(detail);
    r.detail = detail.str();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline Word random_word(std::mt19937_64& rng, int n, int len) {
  Word w(static_cast<std::size_t>(len));
  std::uniform_int_distribution<Letter> pick(1, n);
  for (Letter& a : w) a = pick(rng);
  return w;
}

inline std::vector<Word> words_up_to(int n, int max_len) {
  std::vector<Word> out;
  for (int len = 0; len <= max_len; ++len)
    for_each_word(n, len, [&](const Word& w) { out.push_back(w); });
  return out;
}

}  // namespace detail

// Fingerprint equality against the row-action oracle, exhaustively over all
// ordered pairs of equal-length words for (n, k) in (2,6), (3,5), (4,4).
inline CriterionResult verify_main_theorem(std::uint64_t step_budget = kDefaultStepBudget) {
  return detail::run_criterion("main-theorem", [&](std::ostringstream& detail) {
    std::uint64_t pairs = 0;
    for (auto [n, kmax] : {std::pair{2, 6}, {3, 5}, {4, 4}}) {
      for (int k = 0; k <= kmax; ++k) {
        std::vector<Word> words;
        detail::for_each_word(n, k, [&](const Word& w) { words.push_back(w); });
        for (const Word& u : words)
          for (const Word& v : words) {
            ++pairs;
            if (equiv(u, v, n) != equiv_oracle(u, v, n, step_budget)) {
              detail << "mismatch at n=" << n << ": " << word_to_string(u) << " vs "
                     << word_to_string(v);
              return false;
            }
          }
      }
    }
    detail << pairs << " ordered pairs, zero mismatches";
    return true;
  });
}

// fingerprint(uv) = fingerprint(u) * fingerprint(v), exhaustively at n=3 for
// |u|,|v| <= 4 and on 10^4 fuzzed cases with n <= 6, lengths <= 30.
inline CriterionResult verify_morphism(std::uint64_t seed) {
  return detail::run_criterion("fingerprint-morphism", [&](std::ostringstream& detail) {
    std::uint64_t checks = 0;
    std::vector<Word> words = detail::words_up_to(3, 4);
    for (const Word& u : words)
      for (const Word& v : words) {
        ++checks;
        if (!(fingerprint(concat(u, v), 3) == trop_mul(fingerprint(u, 3), fingerprint(v, 3)))) {
          detail << "exhaustive mismatch: " << word_to_string(u) << " . " << word_to_string(v);
          return false;
        }
      }
    std::mt19937_64 rng(seed ^ 0x6d6f7270u);
    std::uniform_int_distribution<int> rank(1, 6);
    std::uniform_int_distribution<int> len(0, 30);
    for (int t = 0; t < 10'000; ++t) {
      int n = rank(rng);
      Word u = detail::random_word(rng, n, len(rng));
      Word v = detail::random_word(rng, n, len(rng));
      ++checks;
      if (!(fingerprint(concat(u, v), n) == trop_mul(fingerprint(u, n), fingerprint(v, n)))) {
        detail << "fuzz mismatch at n=" << n << ": " << word_to_string(u) << " . "
               << word_to_string(v);
        return false;
      }
    }
    detail << checks << " products, all equal";
    return true;
  });
}

// The tableau bottom row read off from the matrix top row, exhaustively at
// n=4 for lengths <= 6 and on 10^4 fuzzed cases.
inline CriterionResult verify_bottom_row(std::uint64_t seed) {
  return detail::run_criterion("bottom-row-matrix", [&](std::ostringstream& detail) {
    std::uint64_t checks = 0;
    auto agree = [&](const Word& w, int n) {
      ++checks;
      return bottom_via_x(w, n) == bottom_row_vector(tableau_of(w), n);
    };
    for (int k = 1; k <= 6; ++k) {
      bool ok = true;
      Word bad;
      detail::for_each_word(4, k, [&](const Word& w) {
        if (ok && !agree(w, 4)) {
          ok = false;
          bad = w;
        }
      });
      if (!ok) {
        detail << "exhaustive mismatch: " << word_to_string(bad);
        return false;
      }
    }
    std::mt19937_64 rng(seed ^ 0x626f74u);
    std::uniform_int_distribution<int> rank(1, 6);
    std::uniform_int_distribution<int> len(1, 30);
    for (int t = 0; t < 10'000; ++t) {
      int n = rank(rng);
      Word w = detail::random_word(rng, n, len(rng));
      if (!agree(w, n)) {
        detail << "fuzz mismatch at n=" << n << ": " << word_to_string(w);
        return false;
      }
    }
    detail << checks << " words, bottom rows agree";
    return true;
  });
}

// The worked examples, frozen as golden values.
inline CriterionResult verify_worked_examples() {
  return detail::run_criterion("worked-examples", [&](std::ostringstream& detail) {
    const Word big{7, 8, 4, 6, 3, 5, 7, 2, 2, 5, 6};
    Tableau t = tableau_of(big);
    if (t.rows != std::vector<Word>{{2, 2, 5, 6}, {3, 5, 7}, {4, 6}, {7, 8}}) {
      detail << "insertion rows wrong for " << word_to_string(big);
      return false;
    }
    if (wis_length({1, 5, 3, 5, 3, 7, 2, 5, 4, 9}, 3, 5) != 3) {
      detail << "wis[3,5] wrong";
      return false;
    }
    Word bar = restrict_to(big, 6, 8);
    if (bar != Word{7, 8, 6, 7, 6} || tableau_of(bar).rows.at(0) != Word{6, 6}) {
      detail << "interval restriction wrong";
      return false;
    }
    if (act_word({0, 0, 0, 0, 0, 3, 0, 0}, big) != RowVector{0, 2, 0, 0, 1, 2, 0, 0}) {
      detail << "row action chain wrong";
      return false;
    }
    ChargeSequence cs = charge_sequence({8, 2, 4, 5, 6, 1, 3, 7});
    if (cs.values != std::vector<int>{0, 0, 1, 1, 2, 3, 4, 4} || cs.charge() != 15) {
      detail << "charge sequence wrong";
      return false;
    }
    Word a{3, 4, 1, 2}, b{1, 3, 2, 4};
    if (charge_sequence(a).values != charge_sequence(b).values || equiv(a, b, 4)) {
      detail << "3412/1324 example wrong";
      return false;
    }
    detail << "6 golden examples reproduced";
    return true;
  });
}

// Knuth relations plus (3212, 2132) close every length class at rank 3 up to
// k=6; the Knuth relations alone leave exactly that pair open at k=4.
inline CriterionResult verify_rank3_presentation(
    std::uint64_t space_budget = kDefaultSpaceBudget) {
  return detail::run_criterion("rank3-presentation", [&](std::ostringstream& detail) {
    RelationSet knuth3 = knuth_relations(3);
    RelationSet extra{"choffrut", 3, {{{3, 2, 1, 2}, {2, 1, 3, 2}}}};
    RelationSet full = merge(knuth3, extra, "knuth+choffrut");
    for (int k = 1; k <= 6; ++k) {
      auto gap = presentation_gap(full, 3, k, space_budget);
      if (!gap.empty()) {
        const RelationPair& p = *gap.begin();
        detail << "unexpected gap at k=" << k << ": " << word_to_string(p.lhs) << " vs "
               << word_to_string(p.rhs);
        return false;
      }
    }
    auto gap4 = presentation_gap(knuth3, 3, 4, space_budget);
    RelationPair choffrut{{2, 1, 3, 2}, {3, 2, 1, 2}};
    if (!gap4.contains(choffrut)) {
      detail << "knuth-only gap at k=4 misses (3212, 2132)";
      return false;
    }
    detail << "full set closes k<=6; knuth-only gap at k=4 has " << gap4.size()
           << " pairs incl. (3212, 2132)";
    return true;
  });
}

// Equivalence is preserved and reflected by restriction, packing,
// standardisation, and involution, exhaustively at n=3 for lengths <= 5.
inline CriterionResult verify_compatibility(std::uint64_t step_budget = kDefaultStepBudget) {
  return detail::run_criterion("compatibility", [&](std::ostringstream& detail) {
    CompatibilityReport r = compatibility_suite(3, 5, step_budget);
    if (!r.ok()) {
      const CompatibilityViolation& v = r.violations.front();
      detail << r.violations.size() << " violations, first " << v.property << " on "
             << word_to_string(v.u) << " vs " << word_to_string(v.v);
      return false;
    }
    detail << r.pairs << " pairs, four equivalences preserved";
    return true;
  });
}

// Every Knuth and lps instance (n <= 4) holds; fuzzed triples satisfy the
// commutation property; the five rank-4 pairs (dbac, badc) hold.
inline CriterionResult verify_relation_families(std::uint64_t seed) {
  return detail::run_criterion("relation-families", [&](std::ostringstream& detail) {
    std::uint64_t checks = 0;
    for (int n = 1; n <= 4; ++n) {
      for (const RelationSet& rels :
           {knuth_relations(n), lps_relations(n, std::min(n - 1, 3))}) {
        for (const RelationPair& p : rels.pairs) {
          ++checks;
          if (!equiv(p.lhs, p.rhs, n)) {
            detail << rels.name << " instance fails at n=" << n << ": " << word_to_string(p.lhs);
            return false;
          }
        }
      }
    }
    std::mt19937_64 rng(seed ^ 0x70726f70u);
    const int n = 6;
    std::uniform_int_distribution<int> ylow(2, n);
    std::uniform_int_distribution<int> short_len(0, 3);
    std::uniform_int_distribution<int> extra(0, 2);
    for (int t = 0; t < 1'000; ++t) {
      Letter y = ylow(rng);
      Word v(static_cast<std::size_t>(y > 1 ? short_len(rng) : 0));
      for (Letter& a : v) a = std::uniform_int_distribution<Letter>(1, y - 1)(rng);
      Word u(static_cast<std::size_t>(short_len(rng)));
      for (Letter& a : u) a = std::uniform_int_distribution<Letter>(y, n)(rng);
      Word w(v.size() + static_cast<std::size_t>(extra(rng)) + 1, y);
      std::size_t pad = static_cast<std::size_t>(short_len(rng));
      for (std::size_t i = 0; i < pad; ++i)
        w.push_back(std::uniform_int_distribution<Letter>(y, n)(rng));
      std::shuffle(w.begin(), w.end(), rng);
      ++checks;
      if (!prop_rel_check(w, u, v, n)) {
        detail << "commutation fails for w=" << word_to_string(w) << " u=" << word_to_string(u)
               << " v=" << word_to_string(v);
        return false;
      }
    }
    for (Letter a = 1; a <= 4; ++a)
      for (Letter b = a + 1; b <= 4; ++b)
        for (Letter c = b; c <= 4; ++c)
          for (Letter d = c + 1; d <= 4; ++d) {
            ++checks;
            if (!equiv({d, b, a, c}, {b, a, d, c}, 4)) {
              detail << "(dbac, badc) fails for a,b,c,d = " << a << b << c << d;
              return false;
            }
          }
    detail << checks << " instances hold";
    return true;
  });
}

// Equivalent standard words of length <= 6 share their charge sequence, and
// the 3412/1324 converse failure is reproduced.
inline CriterionResult verify_charge(std::uint64_t step_budget = kDefaultStepBudget) {
  return detail::run_criterion("charge", [&](std::ostringstream& detail) {
    ChargeReport r = charge_check(6, step_budget);
    if (!r.violations.empty()) {
      detail << "equivalent words with distinct charge sequences: "
             << word_to_string(r.violations.front().u) << " vs "
             << word_to_string(r.violations.front().v);
      return false;
    }
    if (!r.converse_counterexample_confirmed) {
      detail << "3412/1324 converse failure not reproduced";
      return false;
    }
    detail << r.words << " standard words in " << r.classes << " classes";
    return true;
  });
}

// Unbalanced identities (sides <= 5, <= 3 variables) fall constructively;
// every non-trivial identity with sides < n is falsified for n = 3, 4, 5.
inline CriterionResult verify_identities(std::uint64_t step_budget = kDefaultStepBudget) {
  return detail::run_criterion("identities", [&](std::ostringstream& detail) {
    UnbalancedSweep sweep = unbalanced_sweep(5, 3, step_budget);
    if (!sweep.ok()) {
      detail << "constructive assignment failed for " << identity_to_string(sweep.failures.front());
      return false;
    }
    detail << sweep.checked << " unbalanced identities fall constructively";
    for (int n : {3, 4, 5}) {
      MinLengthReport r = min_length_check(n, 3, step_budget);
      if (!r.ok()) {
        detail.str("");
        detail << "unfalsified identity at n=" << n << ": "
               << r.entries[r.unfalsified.front()].display;
        return false;
      }
      detail << "; n=" << n << ": " << r.entries.size() << " identities falsified";
    }
    return true;
  });
}

// Cyclic shift graphs for every content over [3] of total <= 7: component
// diameters stay <= 3 = 2n-3, and some content reaches >= 2 = n-1.
inline CriterionResult verify_shift_graph(std::uint64_t space_budget = kDefaultSpaceBudget) {
  return detail::run_criterion("shift-graph", [&](std::ostringstream& detail) {
    int max_diam = 0;
    bool lower_reached = false;
    std::uint64_t graphs = 0;
    for (int total = 1; total <= 7; ++total)
      for (const Content& c : enumerate_contents(3, total)) {
        ++graphs;
        int d = max_component_diameter(build_shift_graph(3, c, space_budget));
        max_diam = std::max(max_diam, d);
        if (d >= 2) lower_reached = true;
      }
    detail << graphs << " contents, max component diameter " << max_diam;
    if (max_diam > 3) {
      detail << " exceeds 2n-3 = 3";
      return false;
    }
    if (!lower_reached) {
      detail << "; no content reaches diameter n-1 = 2";
      return false;
    }
    detail << " <= 3, lower bound 2 reached";
    return true;
  });
}

// The row-action oracle gives the same verdict over [n] and [n+1] for all
// equal-length pairs over [3] with k <= 4.
inline CriterionResult verify_rank_stability(std::uint64_t step_budget = kDefaultStepBudget) {
  return detail::run_criterion("rank-stability", [&](std::ostringstream& detail) {
    std::uint64_t pairs = 0;
    for (int k = 0; k <= 4; ++k) {
      std::vector<Word> words;
      detail::for_each_word(3, k, [&](const Word& w) { words.push_back(w); });
      for (const Word& u : words)
        for (const Word& v : words) {
          ++pairs;
          rank_stability(u, v, 3, step_budget);  // throws on disagreement
        }
    }
    detail << pairs << " pairs stable between ranks 3 and 4";
    return true;
  });
}

inline std::vector<CriterionResult> run_all_criteria(std::uint64_t seed,
                                                     std::uint64_t step_budget = kDefaultStepBudget,
                                                     std::uint64_t space_budget = kDefaultSpaceBudget) {
  return {
      verify_main_theorem(step_budget),
      verify_morphism(seed),
      verify_bottom_row(seed),
      verify_worked_examples(),
      verify_rank3_presentation(space_budget),
      verify_compatibility(step_budget),
      verify_relation_families(seed),
      verify_charge(step_budget),
      verify_identities(step_budget),
      verify_shift_graph(space_budget),
      verify_rank_stability(step_budget),
  };
}

}  // namespace grammic

#endif  // GRAMMIC_VERIFY_HPP_
