#ifndef GRAMMIC_RELATIONS_HPP_
#define GRAMMIC_RELATIONS_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grammic/action.hpp"
#include "grammic/errors.hpp"
#include "grammic/tableau.hpp"
#include "grammic/tropical.hpp"
#include "grammic/word.hpp"

namespace grammic {

struct RelationPair {
  Word lhs;
  Word rhs;

  friend bool operator==(const RelationPair&, const RelationPair&) = default;
  friend auto operator<=>(const RelationPair&, const RelationPair&) = default;
};

struct RelationSet {
  std::string name;
  int rank = 0;
  std::vector<RelationPair> pairs;
};

// Both sides of every pair must share content (hence length); letters in [rank].
inline void validate_relation_set(const RelationSet& rels) {
  validate_rank(rels.rank);
  for (const RelationPair& p : rels.pairs) {
    validate_rank(p.lhs, rels.rank);
    validate_rank(p.rhs, rels.rank);
    if (content(p.lhs) != content(p.rhs))
      throw misuse_error("relation set '" + rels.name + "' contains an unbalanced pair");
  }
}

inline RelationSet merge(const RelationSet& a, const RelationSet& b, std::string name) {
  if (a.rank != b.rank) throw misuse_error("cannot merge relation sets of different ranks");
  RelationSet out{std::move(name), a.rank, a.pairs};
  out.pairs.insert(out.pairs.end(), b.pairs.begin(), b.pairs.end());
  return out;
}

// {(yzx, yxz) : x < y <= z} and {(zxy, xzy) : x <= y < z}, letters in [n].
inline RelationSet knuth_relations(int n) {
  validate_rank(n);
  RelationSet out{"knuth", n, {}};
  for (Letter x = 1; x <= n; ++x)
    for (Letter y = x + 1; y <= n; ++y)
      for (Letter z = y; z <= n; ++z)
        out.pairs.push_back({{y, z, x}, {y, x, z}});
  for (Letter z = 1; z <= n; ++z)
    for (Letter y = 1; y < z; ++y)
      for (Letter x = 1; x <= y; ++x)
        out.pairs.push_back({{z, x, y}, {x, z, y}});
  return out;
}

// {(y u_m...u_1 x, y x u_m...u_1) : x < y <= u_1 < ... < u_m}, 1 <= m <= max_m.
// max_m < 1 means the rank default n - 1; beyond n - 1 the chains run dry anyway.
inline RelationSet lps_relations(int n, int max_m = 0) {
  validate_rank(n);
  if (max_m < 1) max_m = n - 1;
  RelationSet out{"lps", n, {}};
  // chain = (u_1 < ... < u_m), built in increasing order, emitted for every prefix length.
  std::vector<Letter> chain;
  auto emit = [&] {
    Letter u1 = chain.front();
    for (Letter y = 2; y <= u1; ++y)
      for (Letter x = 1; x < y; ++x) {
        RelationPair p;
        p.lhs.push_back(y);
        p.lhs.insert(p.lhs.end(), chain.rbegin(), chain.rend());
        p.lhs.push_back(x);
        p.rhs.push_back(y);
        p.rhs.push_back(x);
        p.rhs.insert(p.rhs.end(), chain.rbegin(), chain.rend());
        out.pairs.push_back(std::move(p));
      }
  };
  auto extend = [&](auto&& self, Letter low) -> void {
    if (static_cast<int>(chain.size()) == max_m) return;
    for (Letter u = low; u <= n; ++u) {
      chain.push_back(u);
      emit();
      self(self, u + 1);
      chain.pop_back();
    }
  };
  extend(extend, 2);
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

// Checks wuv ~ wvu given min(w) = y, v over [1,y-1], u over [y,n], |w|_y >= |v|.
inline bool prop_rel_check(const Word& w, const Word& u, const Word& v, int n) {
  validate_rank(w, n);
  validate_rank(u, n);
  validate_rank(v, n);
  if (w.empty()) throw hypothesis_error("w must be non-empty");
  Letter y = *std::min_element(w.begin(), w.end());
  for (Letter a : v)
    if (a >= y) throw hypothesis_error("v must use letters strictly below min(w)");
  for (Letter a : u)
    if (a < y) throw hypothesis_error("u must use letters at least min(w)");
  auto copies = static_cast<std::size_t>(std::count(w.begin(), w.end(), y));
  if (copies < v.size())
    throw hypothesis_error("w needs at least |v| copies of its least letter");
  return equiv(concat(w, concat(u, v)), concat(w, concat(v, u)), n);
}

// Partition of [n]^k under the congruence generated by a balanced relation set.
// Words are indexed lexicographically (mixed radix, leftmost letter most significant).
class LengthPartition {
 public:
  LengthPartition(int n, int k, std::uint64_t space_budget = kDefaultSpaceBudget)
      : n_(n), k_(k) {
    validate_rank(n);
    if (k < 0) throw misuse_error("word length must be non-negative");
    std::uint64_t total = detail::saturating_pow(n, k, space_budget);
    if (total > space_budget) throw budget_error("n^k exceeds the space budget");
    parent_.resize(total);
    std::iota(parent_.begin(), parent_.end(), std::uint64_t{0});
  }

  int rank() const { return n_; }
  int length() const { return k_; }
  std::uint64_t size() const { return parent_.size(); }

  std::uint64_t index_of(const Word& w) const {
    if (static_cast<int>(w.size()) != k_) throw misuse_error("word has the wrong length");
    std::uint64_t idx = 0;
    for (Letter a : w) {
      if (a < 1 || a > n_) throw rank_error("letter out of range");
      idx = idx * n_ + static_cast<std::uint64_t>(a - 1);
    }
    return idx;
  }

  Word word_at(std::uint64_t idx) const {
    Word w(static_cast<std::size_t>(k_));
    for (int i = k_ - 1; i >= 0; --i) {
      w[static_cast<std::size_t>(i)] = static_cast<Letter>(idx % n_) + 1;
      idx /= n_;
    }
    return w;
  }

  std::uint64_t find(std::uint64_t i) const {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  void unite(std::uint64_t a, std::uint64_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  bool same(std::uint64_t a, std::uint64_t b) const { return find(a) == find(b); }

  bool same(const Word& a, const Word& b) const { return same(index_of(a), index_of(b)); }

  std::uint64_t class_count() const {
    std::uint64_t c = 0;
    for (std::uint64_t i = 0; i < parent_.size(); ++i)
      if (find(i) == i) ++c;
    return c;
  }

  std::map<std::uint64_t, std::vector<std::uint64_t>> groups() const {
    std::map<std::uint64_t, std::vector<std::uint64_t>> out;
    for (std::uint64_t i = 0; i < parent_.size(); ++i) out[find(i)].push_back(i);
    return out;
  }

 private:
  int n_;
  int k_;
  mutable std::vector<std::uint64_t> parent_;
};

// One pass over every lhs-occurrence suffices: relations are balanced, so every
// rewrite edge joins two words of [n]^k and is seen from its lhs side.
inline LengthPartition closure_by_length(const RelationSet& rels, int k,
                                         std::uint64_t space_budget = kDefaultSpaceBudget) {
  validate_relation_set(rels);
  LengthPartition part(rels.rank, k, space_budget);
  Word w(static_cast<std::size_t>(k), 1);
  Word scratch;
  for (std::uint64_t idx = 0; idx < part.size(); ++idx) {
    if (idx > 0) {
      int i = k - 1;
      while (w[static_cast<std::size_t>(i)] == rels.rank) w[static_cast<std::size_t>(i--)] = 1;
      ++w[static_cast<std::size_t>(i)];
    }
    for (const RelationPair& rel : rels.pairs) {
      auto len = rel.lhs.size();
      if (len > w.size() || len == 0) continue;
      for (std::size_t off = 0; off + len <= w.size(); ++off) {
        if (!std::equal(rel.lhs.begin(), rel.lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(off)))
          continue;
        scratch = w;
        std::copy(rel.rhs.begin(), rel.rhs.end(), scratch.begin() + static_cast<std::ptrdiff_t>(off));
        part.unite(idx, part.index_of(scratch));
      }
    }
  }
  return part;
}

// Pairs of length-k words that are grammically equivalent but lie in different
// closure classes of rels. Empty iff rels presents the monoid at this length.
inline std::set<RelationPair> presentation_gap(const RelationSet& rels, int n, int k,
                                               std::uint64_t space_budget = kDefaultSpaceBudget) {
  if (rels.rank != n) throw misuse_error("relation set rank does not match n");
  LengthPartition part = closure_by_length(rels, k, space_budget);
  std::map<std::string, std::vector<std::uint64_t>> by_fp;
  for (std::uint64_t idx = 0; idx < part.size(); ++idx)
    by_fp[fingerprint_key(fingerprint(part.word_at(idx), n))].push_back(idx);
  std::set<RelationPair> gap;
  for (const auto& [key, members] : by_fp)
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (!part.same(members[i], members[j]))
          gap.insert({part.word_at(members[i]), part.word_at(members[j])});
  return gap;
}

namespace detail {

inline std::set<Letter> column_set(const Word& c) { return {c.begin(), c.end()}; }

inline std::string column_quad(const Word& c1, const Word& c2, const Word& d1, const Word& d2) {
  std::ostringstream os;
  os << "(";
  for (Letter a : c1) os << a;
  os << ",";
  for (Letter a : c2) os << a;
  os << ") vs (";
  for (Letter a : d1) os << a;
  os << ",";
  for (Letter a : d2) os << a;
  os << ")";
  return os.str();
}

}  // namespace detail

// Two-tableau move check for a pair of two-column tableaux with columns
// (c1, c2) and (d1, d2), columns written as strictly decreasing words.
//
// Preconditions, each raised individually:
//   (a) both pairs are tableaux: c1 dominates c2 and d1 dominates d2;
//   (b) the tableaux are distinct;
//   (c) both readings share content;
//   (d) first-row entries agree columnwise: c1, d1 share their least letter,
//       c2, d2 share theirs, and the first is at most the second.
// Hypotheses, tried for every letter i and in both orientations:
//   (I)   the second tableau is the first with i moved from column 1 to column 2;
//   (II)  column 2 already holds the greatest letter of c1c2 strictly below i;
//   (III) every z > i in column 2 has a matching z' in column 1 with i < z' <= z.
// If no orientation admits such an i, throws hypothesis_error. Otherwise the
// readings are asserted equivalent and true is returned.
inline bool two_column_check(const Word& c1, const Word& c2, const Word& d1, const Word& d2,
                             int n) {
  for (const Word* c : {&c1, &c2, &d1, &d2}) {
    validate_rank(*c, n);
    if (!is_column_word(*c)) throw misuse_error("columns must be strictly decreasing words");
    if (c->empty()) throw misuse_error("columns must be non-empty");
  }
  if (!column_dominates(c1, c2) || !column_dominates(d1, d2))
    throw precondition_error("column 1 must dominate column 2 in both tableaux");
  Word cw = concat(c1, c2);
  Word dw = concat(d1, d2);
  if (tableau_of(cw) == tableau_of(dw))
    throw precondition_error("the two tableaux must be distinct");
  if (content(cw) != content(dw))
    throw precondition_error("the two readings must share content");
  if (c1.back() != d1.back() || c2.back() != d2.back() || c1.back() > c2.back())
    throw precondition_error("first-row entries must agree columnwise and weakly increase");

  auto admits_move = [](const Word& a1, const Word& a2, const Word& b1, const Word& b2) {
    std::set<Letter> s1 = detail::column_set(a1);
    std::set<Letter> s2 = detail::column_set(a2);
    std::set<Letter> t1 = detail::column_set(b1);
    std::set<Letter> t2 = detail::column_set(b2);
    for (Letter i : s1) {
      if (s2.contains(i)) continue;
      std::set<Letter> moved1 = s1;
      moved1.erase(i);
      std::set<Letter> moved2 = s2;
      moved2.insert(i);
      if (moved1 != t1 || moved2 != t2) continue;  // (I)
      Letter below = 0;
      for (Letter a : s1)
        if (a < i) below = std::max(below, a);
      for (Letter a : s2)
        if (a < i) below = std::max(below, a);
      if (below == 0 || !s2.contains(below)) continue;  // (II)
      bool covered = true;
      for (Letter z : s2) {
        if (z <= i) continue;
        bool hit = false;
        for (Letter zp : s1)
          if (i < zp && zp <= z) hit = true;
        if (!hit) covered = false;  // (III)
      }
      if (covered) return true;
    }
    return false;
  };

  if (!admits_move(c1, c2, d1, d2) && !admits_move(d1, d2, c1, c2))
    throw hypothesis_error("no single-letter column move satisfies the hypotheses for " +
                           detail::column_quad(c1, c2, d1, d2));
  if (!equiv(cw, dw, n))
    throw error("two_column_check: hypotheses hold but readings are inequivalent for " +
                detail::column_quad(c1, c2, d1, d2));
  return true;
}

struct MColumnRelation {
  Word lhs;                 // column reading of the lexicographically smaller tableau
  Word rhs;                 // column reading of the other
  std::vector<Word> lhs_columns;
  std::vector<Word> rhs_columns;
};

struct MColumnReport {
  int rank = 0;
  int columns = 0;
  std::uint64_t tableaux = 0;
  std::vector<MColumnRelation> relations;
  // For m = 2 only: indices into relations, split by whether two_column_check
  // accepts the pair in some orientation.
  std::vector<std::size_t> explained;
  std::vector<std::size_t> unexplained;
};

// All pairs of distinct m-column tableaux over [n] with equal content and
// equal bottom rows whose column readings are grammically equivalent.
inline MColumnReport enumerate_mcolumn_relations(int n, int m,
                                                 std::uint64_t step_budget = kDefaultStepBudget) {
  validate_rank(n);
  if (m < 1) throw misuse_error("column count must be positive");
  std::set<Word> column_set = enumerate_columns(n);
  std::vector<Word> columns(column_set.begin(), column_set.end());

  struct Entry {
    std::vector<Word> cols;
    Word reading;
  };
  std::map<std::string, std::vector<Entry>> groups;  // keyed by content + bottom row
  std::uint64_t count = 0;

  std::vector<Word> chain;
  auto build = [&](auto&& self) -> void {
    if (static_cast<int>(chain.size()) == m) {
      if (++count > step_budget) throw budget_error("tableau enumeration exceeds the step budget");
      Word reading;
      std::ostringstream key;
      for (const Word& c : chain) {
        reading.insert(reading.end(), c.begin(), c.end());
        key << int{c.back()} << ".";
      }
      key << "|";
      for (auto [a, mult] : content(reading)) key << a << ":" << mult << ",";
      groups[key.str()].push_back({chain, std::move(reading)});
      return;
    }
    for (const Word& c : columns) {
      if (!chain.empty() && !column_dominates(chain.back(), c)) continue;
      chain.push_back(c);
      self(self);
      chain.pop_back();
    }
  };
  build(build);

  MColumnReport report;
  report.rank = n;
  report.columns = m;
  report.tableaux = count;
  for (const auto& [key, entries] : groups) {
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = i + 1; j < entries.size(); ++j) {
        if (!equiv(entries[i].reading, entries[j].reading, n)) continue;
        MColumnRelation rel;
        bool order = entries[i].reading < entries[j].reading;
        const Entry& lo = order ? entries[i] : entries[j];
        const Entry& hi = order ? entries[j] : entries[i];
        rel.lhs = lo.reading;
        rel.rhs = hi.reading;
        rel.lhs_columns = lo.cols;
        rel.rhs_columns = hi.cols;
        report.relations.push_back(std::move(rel));
      }
  }
  std::sort(report.relations.begin(), report.relations.end(),
            [](const MColumnRelation& a, const MColumnRelation& b) {
              return std::tie(a.lhs, a.rhs) < std::tie(b.lhs, b.rhs);
            });
  if (m == 2) {
    for (std::size_t r = 0; r < report.relations.size(); ++r) {
      const MColumnRelation& rel = report.relations[r];
      bool ok = false;
      try {
        ok = two_column_check(rel.lhs_columns[0], rel.lhs_columns[1], rel.rhs_columns[0],
                              rel.rhs_columns[1], n);
      } catch (const hypothesis_error&) {
        ok = false;
      }
      (ok ? report.explained : report.unexplained).push_back(r);
    }
  }
  return report;
}

struct CompatibilityViolation {
  std::string property;
  Word u;
  Word v;
};

struct CompatibilityReport {
  int rank = 0;
  int max_len = 0;
  std::uint64_t words = 0;
  std::uint64_t pairs = 0;
  std::vector<CompatibilityViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks, for every unordered pair of words of length <= k over [n], that
// equivalence is preserved and reflected by interval restriction, packing,
// standardisation, and the order-reversing involution.
inline CompatibilityReport compatibility_suite(int n, int k,
                                               std::uint64_t step_budget = kDefaultStepBudget) {
  validate_rank(n);
  if (k < 0) throw misuse_error("word length must be non-negative");

  std::vector<Word> words;
  for (int len = 0; len <= k; ++len) {
    std::uint64_t total = detail::saturating_pow(n, len, step_budget);
    if (words.size() + total > step_budget) throw budget_error("word enumeration exceeds the step budget");
    detail::for_each_word(n, len, [&](const Word& w) { words.push_back(w); });
  }

  struct Keys {
    std::string plain;
    std::vector<std::string> restrictions;
    std::string packed;
    std::string standardised;
    std::string involuted;
    Content cont;
  };
  int std_rank = std::max(n, k);
  std::vector<Keys> keys(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Word& w = words[i];
    Keys& ks = keys[i];
    ks.plain = fingerprint_key(fingerprint(w, n));
    for (Letter lo = 1; lo <= n; ++lo)
      for (Letter hi = lo; hi <= n; ++hi)
        ks.restrictions.push_back(fingerprint_key(fingerprint(restrict_to(w, lo, hi), n)));
    ks.packed = fingerprint_key(fingerprint(pack(w), n));
    ks.standardised = fingerprint_key(fingerprint(standardise(w), std_rank));
    ks.involuted = fingerprint_key(fingerprint(involute(w, n), n));
    ks.cont = content(w);
  }

  CompatibilityReport report;
  report.rank = n;
  report.max_len = k;
  report.words = words.size();
  auto note = [&](const char* property, std::size_t i, std::size_t j) {
    report.violations.push_back({property, words[i], words[j]});
  };
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      ++report.pairs;
      bool eq = keys[i].plain == keys[j].plain;
      if (eq != (keys[i].restrictions == keys[j].restrictions)) note("restriction", i, j);
      bool same_content = keys[i].cont == keys[j].cont;
      if (eq != (same_content && keys[i].packed == keys[j].packed)) note("packing", i, j);
      if (eq != (same_content && keys[i].standardised == keys[j].standardised))
        note("standardisation", i, j);
      if (eq != (keys[i].involuted == keys[j].involuted)) note("involution", i, j);
    }
  return report;
}

struct ChargeViolation {
  Word u;
  Word v;
};

struct ChargeReport {
  int max_len = 0;
  std::uint64_t words = 0;
  std::uint64_t classes = 0;
  std::vector<ChargeViolation> violations;  // equivalent standard words with distinct chseq
  bool converse_counterexample_confirmed = false;

  bool ok() const { return violations.empty() && converse_counterexample_confirmed; }
};

// Equivalent standard words share their charge sequence (checked exhaustively
// up to max_len); the converse fails, witnessed by 3412 vs 1324.
inline ChargeReport charge_check(int max_len, std::uint64_t step_budget = kDefaultStepBudget) {
  if (max_len < 1) throw misuse_error("maximum length must be positive");
  ChargeReport report;
  report.max_len = max_len;
  std::uint64_t steps = 0;
  for (int len = 1; len <= max_len; ++len) {
    Word w(static_cast<std::size_t>(len));
    std::iota(w.begin(), w.end(), 1);
    std::map<std::string, std::vector<Word>> classes;
    do {
      if (++steps > step_budget) throw budget_error("permutation scan exceeds the step budget");
      classes[fingerprint_key(fingerprint(w, len))].push_back(w);
      ++report.words;
    } while (std::next_permutation(w.begin(), w.end()));
    report.classes += classes.size();
    for (const auto& [key, members] : classes) {
      const auto ref = charge_sequence(members.front()).values;
      for (std::size_t i = 1; i < members.size(); ++i)
        if (charge_sequence(members[i]).values != ref)
          report.violations.push_back({members.front(), members[i]});
    }
  }
  Word a{3, 4, 1, 2};
  Word b{1, 3, 2, 4};
  report.converse_counterexample_confirmed =
      charge_sequence(a).values == charge_sequence(b).values && !equiv(a, b, 4);
  return report;
}

}  // namespace grammic

#endif  // GRAMMIC_RELATIONS_HPP_
