#ifndef GRAMMIC_WORD_HPP_
#define GRAMMIC_WORD_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "errors.hpp"

namespace grammic {

// A letter is a positive integer; no upper bound is baked into the type.
// The alphabet ceiling (the rank n) is passed separately to the operations
// that depend on it, so one word value can be used at rank n and n + 1.
using Letter = int;

// A word over an ordered alphabet. The empty vector is the empty word.
using Word = std::vector<Letter>;

// letter -> multiplicity; letters with zero count are absent.
using Content = std::map<Letter, int>;

inline void validate_word(const Word& w) {
  for (Letter a : w) {
    if (a < 1) {
      throw rank_error("letters must be positive, got " + std::to_string(a));
    }
  }
}

inline void validate_rank(int n) {
  if (n < 1) {
    throw rank_error("rank must be at least 1, got " + std::to_string(n));
  }
}

inline void validate_rank(const Word& w, int n) {
  for (Letter a : w) {
    if (a < 1 || a > n) {
      throw rank_error("letter " + std::to_string(a) + " outside [1, " +
                       std::to_string(n) + "]");
    }
  }
}

// Largest letter of w, or 0 for the empty word.
inline Letter max_letter(const Word& w) {
  Letter m = 0;
  for (Letter a : w) {
    m = std::max(m, a);
  }
  return m;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Content content(const Word& w) {
  Content c;
  for (Letter a : w) {
    ++c[a];
  }
  return c;
}

// Subword of w keeping exactly the letters in [lo, hi], order preserved.
inline Word restrict_to(const Word& w, Letter lo, Letter hi) {
  if (lo > hi) {
    throw invalid_interval_error("restrict: interval [" + std::to_string(lo) +
                                 ", " + std::to_string(hi) + "] is empty");
  }
  Word out;
  for (Letter a : w) {
    if (lo <= a && a <= hi) {
      out.push_back(a);
    }
  }
  return out;
}

// Support of w as an increasing sequence of letters.
inline std::vector<Letter> support(const Word& w) {
  std::set<Letter> s(w.begin(), w.end());
  return std::vector<Letter>(s.begin(), s.end());
}

// Maps the support {a_1 < ... < a_m} order-isomorphically onto [m].
inline Word pack(const Word& w) {
  std::vector<Letter> supp = support(w);
  std::map<Letter, Letter> to_index;
  for (std::size_t i = 0; i < supp.size(); ++i) {
    to_index[supp[i]] = static_cast<Letter>(i + 1);
  }
  Word out;
  out.reserve(w.size());
  for (Letter a : w) {
    out.push_back(to_index[a]);
  }
  return out;
}

// The j-th instance (left to right) of the i-th smallest support letter
// becomes j + (number of occurrences of smaller support letters).
inline Word standardise(const Word& w) {
  Content cont = content(w);
  std::map<Letter, int> offset;  // letters below, cumulative
  int acc = 0;
  for (const auto& [a, cnt] : cont) {
    offset[a] = acc;
    acc += cnt;
  }
  std::map<Letter, int> seen;
  Word out;
  out.reserve(w.size());
  for (Letter a : w) {
    ++seen[a];
    out.push_back(static_cast<Letter>(seen[a] + offset[a]));
  }
  return out;
}

// True iff w is a permutation of [|w|].
inline bool is_standard(const Word& w) {
  std::vector<bool> seen(w.size(), false);
  for (Letter a : w) {
    if (a < 1 || static_cast<std::size_t>(a) > w.size() || seen[a - 1]) {
      return false;
    }
    seen[a - 1] = true;
  }
  return true;
}

// Schuetzenberger involution over rank n: i -> n - i + 1, then reverse.
inline Word involute(const Word& w, int n) {
  validate_rank(w, n);
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(n - *it + 1);
  }
  return out;
}

// Charge sequence of a standard word, indexed by letter: entry 1 is 0 and
// entry i is entry i-1, plus one exactly when i occurs to the right of i-1.
struct ChargeSequence {
  std::vector<int> values;  // values[i - 1] is the entry for letter i

  int charge() const {
    int s = 0;
    for (int v : values) {
      s += v;
    }
    return s;
  }
};

inline ChargeSequence charge_sequence(const Word& w) {
  if (!is_standard(w)) {
    throw not_standard_error("charge_sequence: word is not standard");
  }
  const int k = static_cast<int>(w.size());
  std::vector<int> pos(k + 1, 0);
  for (int i = 0; i < k; ++i) {
    pos[w[i]] = i;
  }
  ChargeSequence cs;
  cs.values.assign(k, 0);
  for (int i = 2; i <= k; ++i) {
    cs.values[i - 1] = cs.values[i - 2] + (pos[i] > pos[i - 1] ? 1 : 0);
  }
  return cs;
}

// All non-empty scattered subwords of w of length <= max_len, built
// incrementally: each prefix extends every shorter subword already seen.
inline std::set<Word> scattered_subwords(const Word& w, int max_len) {
  if (max_len < 0) {
    throw misuse_error("scattered_subwords: max_len must be >= 0");
  }
  std::set<Word> out;
  for (Letter a : w) {
    std::vector<Word> extended;
    for (const Word& s : out) {
      if (static_cast<int>(s.size()) < max_len) {
        Word t = s;
        t.push_back(a);
        extended.push_back(std::move(t));
      }
    }
    if (max_len >= 1) {
      extended.push_back(Word{a});
    }
    for (Word& t : extended) {
      out.insert(std::move(t));
    }
  }
  return out;
}

}  // namespace grammic

#endif  // GRAMMIC_WORD_HPP_
