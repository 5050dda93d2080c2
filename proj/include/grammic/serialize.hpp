#ifndef GRAMMIC_SERIALIZE_HPP_
#define GRAMMIC_SERIALIZE_HPP_

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "grammic/action.hpp"
#include "grammic/errors.hpp"
#include "grammic/identities.hpp"
#include "grammic/relations.hpp"
#include "grammic/shiftgraph.hpp"
#include "grammic/tableau.hpp"
#include "grammic/tropical.hpp"
#include "grammic/word.hpp"

namespace grammic {

// Insertion order is preserved so every schema serializes byte-identically
// after a parse/dump round trip.
using json = nlohmann::ordered_json;

// Word syntax: integers separated by whitespace or commas are always accepted;
// a bare digit string is one letter per digit and is rejected when the
// effective rank exceeds 9. "" and the two spellings of epsilon are empty.
inline Word parse_word(const std::string& text, std::optional<int> rank = std::nullopt) {
  std::string s;
  bool separated = false;
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      separated = true;
      s += ' ';
    } else {
      s += ch;
    }
  }
  Word w;
  if (s.find_first_not_of(' ') == std::string::npos || text == "ε" || text == "eps") return w;
  if (!separated) {
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw misuse_error("malformed word '" + text + "'");
      if (ch == '0') throw misuse_error("letters start at 1; '0' is not a letter");
      w.push_back(ch - '0');
    }
    if (rank && *rank > 9)
      throw misuse_error("bare digit words need rank <= 9; separate letters with commas");
    return w;
  }
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int value;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw misuse_error("malformed letter '" + tok + "'");
    }
    if (used != tok.size() || value < 1) throw misuse_error("malformed letter '" + tok + "'");
    w.push_back(value);
  }
  return w;
}

inline std::string word_to_string(const Word& w) {
  if (w.empty()) return "ε";
  bool compact = std::all_of(w.begin(), w.end(), [](Letter a) { return a <= 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

// Row vectors: comma- or whitespace-separated non-negative integers.
inline RowVector parse_row_vector(const std::string& text) {
  std::string s = text;
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  RowVector row;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int value;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw misuse_error("malformed row entry '" + tok + "'");
    }
    if (used != tok.size() || value < 0) throw misuse_error("malformed row entry '" + tok + "'");
    row.push_back(value);
  }
  if (row.empty()) throw misuse_error("row vector must be non-empty");
  return row;
}

inline std::string row_vector_to_string(const RowVector& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(row[i]);
  }
  return out;
}

// Contents: either "letter:mult" pairs ("1:2,3:1") or a word whose content is
// taken ("11233" and "1:2,2:1,3:2" name the same multiset).
inline Content parse_content(const std::string& text) {
  if (text.find(':') == std::string::npos) {
    Word w = parse_word(text);
    if (w.empty()) throw misuse_error("content must be non-empty");
    return content(w);
  }
  Content c;
  std::string s = text;
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
      throw misuse_error("malformed content entry '" + tok + "'");
    int letter, mult;
    try {
      letter = std::stoi(tok.substr(0, colon));
      mult = std::stoi(tok.substr(colon + 1));
    } catch (const std::exception&) {
      throw misuse_error("malformed content entry '" + tok + "'");
    }
    if (letter < 1 || mult < 1) throw misuse_error("malformed content entry '" + tok + "'");
    if (!c.emplace(letter, mult).second)
      throw misuse_error("content repeats letter " + std::to_string(letter));
  }
  if (c.empty()) throw misuse_error("content must be non-empty");
  return c;
}

inline std::string content_to_string(const Content& c) {
  std::string out;
  for (auto [a, mult] : c) {
    if (!out.empty()) out += ',';
    out += std::to_string(a) + ":" + std::to_string(mult);
  }
  return out;
}

inline json word_json(const Word& w) { return json(w); }

inline Word word_from_json(const json& j) {
  Word w = j.get<Word>();
  validate_word(w);
  return w;
}

inline json content_json(const Content& c) {
  json j = json::array();
  for (auto [a, mult] : c) j.push_back(json::array({a, mult}));
  return j;
}

inline Content content_from_json(const json& j) {
  Content c;
  for (const auto& entry : j) c[entry.at(0).get<Letter>()] = entry.at(1).get<int>();
  return c;
}

inline json tableau_json(const Tableau& t) {
  json rows = json::array();
  for (const auto& row : t.rows) rows.push_back(json(row));
  return json{{"rows", rows}};
}

inline Tableau tableau_from_json(const json& j) {
  Tableau t;
  for (const auto& row : j.at("rows")) t.rows.push_back(row.get<Word>());
  if (!is_valid(t)) throw misuse_error("rows do not form a tableau");
  return t;
}

// Entries are listed row-major over the upper triangle (p <= q), null for the
// tropical zero.
inline json fingerprint_json(const Fingerprint& m) {
  json entries = json::array();
  for (int p = 1; p <= m.dim(); ++p)
    for (int q = p; q <= m.dim(); ++q) {
      Trop v = m.at(p, q);
      if (v.is_neg_inf()) entries.push_back(nullptr);
      else entries.push_back(v.value());
    }
  return json{{"n", m.dim()}, {"entries", entries}};
}

inline Fingerprint fingerprint_from_json(const json& j) {
  int n = j.at("n").get<int>();
  validate_rank(n);
  const json& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != n * (n + 1) / 2)
    throw misuse_error("fingerprint entry count does not match n");
  Fingerprint m(n);
  std::size_t i = 0;
  for (int p = 1; p <= n; ++p)
    for (int q = p; q <= n; ++q, ++i) {
      if (entries[i].is_null()) m.set(p, q, Trop::neg_inf());
      else m.set(p, q, Trop::finite(entries[i].get<std::int64_t>()));
    }
  return m;
}

inline json relation_set_json(const RelationSet& rels) {
  json pairs = json::array();
  for (const RelationPair& p : rels.pairs)
    pairs.push_back(json::array({json(p.lhs), json(p.rhs)}));
  return json{{"name", rels.name}, {"rank", rels.rank}, {"pairs", pairs}};
}

inline RelationSet relation_set_from_json(const json& j) {
  RelationSet rels;
  rels.name = j.at("name").get<std::string>();
  rels.rank = j.at("rank").get<int>();
  for (const auto& p : j.at("pairs")) rels.pairs.push_back({p.at(0).get<Word>(), p.at(1).get<Word>()});
  validate_relation_set(rels);
  return rels;
}

inline json assignment_json(const Assignment& asg) {
  json j = json::array();
  for (const Word& w : asg) j.push_back(json(w));
  return j;
}

inline json falsify_json(const Identity& id, const FalsifyResult& r) {
  return json{{"identity", identity_to_string(id)},
              {"assignment", assignment_json(r.assignment)},
              {"lhs_image", json(r.lhs_image)},
              {"rhs_image", json(r.rhs_image)}};
}

inline json class_map_json(int n, int k, const ClassMap& classes) {
  json arr = json::array();
  for (const auto& [key, cls] : classes) {
    json reps = json::array();
    for (const Word& w : cls.representatives) reps.push_back(json(w));
    arr.push_back(json{{"fingerprint", fingerprint_json(cls.canonical)}, {"members", reps}});
  }
  return json{{"n", n}, {"k", k}, {"classes", arr}};
}

inline json mcolumn_report_json(const MColumnReport& r) {
  json rels = json::array();
  for (const MColumnRelation& rel : r.relations)
    rels.push_back(json::array({json(rel.lhs), json(rel.rhs)}));
  json j{{"rank", r.rank}, {"columns", r.columns}, {"tableaux", r.tableaux}, {"relations", rels}};
  if (r.columns == 2) {
    j["explained"] = r.explained;
    j["unexplained"] = r.unexplained;
  }
  return j;
}

inline json compatibility_report_json(const CompatibilityReport& r) {
  json violations = json::array();
  for (const CompatibilityViolation& v : r.violations)
    violations.push_back(json{{"property", v.property}, {"u", json(v.u)}, {"v", json(v.v)}});
  return json{{"rank", r.rank},
              {"max_len", r.max_len},
              {"words", r.words},
              {"pairs", r.pairs},
              {"violations", violations}};
}

inline json charge_report_json(const ChargeReport& r) {
  json violations = json::array();
  for (const ChargeViolation& v : r.violations)
    violations.push_back(json::array({json(v.u), json(v.v)}));
  return json{{"max_len", r.max_len},
              {"words", r.words},
              {"classes", r.classes},
              {"violations", violations},
              {"converse_counterexample_confirmed", r.converse_counterexample_confirmed}};
}

inline json min_length_report_json(const MinLengthReport& r, bool with_entries = false) {
  json j{{"rank", r.rank},
         {"side_limit", r.side_limit},
         {"identities", r.entries.size()},
         {"balanced", r.balanced},
         {"falsified", r.falsified},
         {"unfalsified", json::array()}};
  for (std::size_t i : r.unfalsified) j["unfalsified"].push_back(r.entries[i].display);
  if (with_entries) {
    json entries = json::array();
    for (const MinLengthEntry& e : r.entries) {
      json entry{{"identity", e.display}, {"balanced", e.balanced}, {"search_len", e.search_len}};
      if (e.witness) entry["assignment"] = assignment_json(e.witness->assignment);
      entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
  }
  return j;
}

inline json shift_graph_json(const ShiftGraph& g) {
  json classes = json::array();
  for (std::size_t i = 0; i < g.keys.size(); ++i) {
    json neighbours = json::array();
    for (std::size_t u : g.adjacency[i]) neighbours.push_back(u);
    classes.push_back(json{{"representative", json(g.representatives[i])}, {"neighbours", neighbours}});
  }
  json components = json::array();
  for (const ShiftComponent& c : shift_components(g))
    components.push_back(json{{"size", c.members.size()}, {"diameter", c.diameter}});
  return json{{"rank", g.rank},
              {"content", content_json(g.cont)},
              {"words", g.words},
              {"classes", classes},
              {"components", components}};
}

// One "keyA keyB" line per undirected edge, endpoints and lines sorted.
inline std::string shift_graph_edge_list(const ShiftGraph& g) {
  std::set<std::string> lines;
  for (std::size_t i = 0; i < g.adjacency.size(); ++i)
    for (std::size_t u : g.adjacency[i])
      if (i < u) lines.insert(g.keys[i] + " " + g.keys[u]);
  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace grammic

#endif  // GRAMMIC_SERIALIZE_HPP_
