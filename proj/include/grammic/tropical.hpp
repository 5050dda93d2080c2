#ifndef GRAMMIC_TROPICAL_HPP_
#define GRAMMIC_TROPICAL_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "tableau.hpp"
#include "word.hpp"

namespace grammic {

// Max-plus value: -inf or a finite integer. -inf is an explicit case, not a
// sentinel integer; it is neutral for max and absorbing for plus.
class Trop {
 public:
  constexpr Trop() : finite_(false), value_(0) {}  // -inf

  static constexpr Trop neg_inf() { return Trop(); }
  static constexpr Trop finite(std::int64_t v) { return Trop(v); }

  constexpr bool is_neg_inf() const { return !finite_; }

  constexpr std::int64_t value() const { return value_; }

  friend constexpr Trop t_max(Trop a, Trop b) {
    if (a.is_neg_inf()) return b;
    if (b.is_neg_inf()) return a;
    return Trop(a.value_ > b.value_ ? a.value_ : b.value_);
  }

  friend constexpr Trop t_plus(Trop a, Trop b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return Trop(a.value_ + b.value_);
  }

  friend constexpr bool operator==(Trop a, Trop b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }

 private:
  explicit constexpr Trop(std::int64_t v) : finite_(true), value_(v) {}

  bool finite_;
  std::int64_t value_;
};

// Upper triangular max-plus matrix: entries below the diagonal are -inf.
class TropMatrix {
 public:
  explicit TropMatrix(int n) : n_(n), entries_(std::size_t(n) * n) {}

  static TropMatrix identity(int n) {
    TropMatrix m(n);
    for (int i = 1; i <= n; ++i) {
      m.set(i, i, Trop::finite(0));
    }
    return m;
  }

  int dim() const { return n_; }

  // 1-based indices.
  Trop at(int p, int q) const { return entries_[idx(p, q)]; }

  void set(int p, int q, Trop v) {
    if (p > q && !v.is_neg_inf()) {
      throw dimension_error("TropMatrix: entry below the diagonal");
    }
    entries_[idx(p, q)] = v;
  }

  friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t idx(int p, int q) const {
    return std::size_t(p - 1) * n_ + (q - 1);
  }

  int n_;
  std::vector<Trop> entries_;
};

inline TropMatrix trop_mul(const TropMatrix& a, const TropMatrix& b) {
  const int n = a.dim();
  if (b.dim() != n) {
    throw dimension_error("trop_mul: dimension mismatch " +
                          std::to_string(n) + " vs " +
                          std::to_string(b.dim()));
  }
  TropMatrix c(n);
  for (int p = 1; p <= n; ++p) {
    for (int q = p; q <= n; ++q) {
      Trop acc = Trop::neg_inf();
      for (int k = p; k <= q; ++k) {
        acc = t_max(acc, t_plus(a.at(p, k), b.at(k, q)));
      }
      c.set(p, q, acc);
    }
  }
  return c;
}

// Maximal length of a weakly increasing subsequence of w with entries in
// [p, q]. Linear scan with one slot per letter of the interval.
inline int wis_length(const Word& w, Letter p, Letter q) {
  if (p > q) {
    throw invalid_interval_error("wis_length: interval [" + std::to_string(p) +
                                 ", " + std::to_string(q) + "] is empty");
  }
  if (p < 1) {
    throw rank_error("wis_length: letters are positive");
  }
  // best[a - p] = longest weakly increasing subsequence ending in letter a
  std::vector<int> best(q - p + 1, 0);
  for (Letter a : w) {
    if (a < p || a > q) {
      continue;
    }
    int longest = 0;
    for (int t = 0; t <= a - p; ++t) {
      longest = std::max(longest, best[t]);
    }
    best[a - p] = longest + 1;
  }
  int out = 0;
  for (int v : best) {
    out = std::max(out, v);
  }
  return out;
}

using Fingerprint = TropMatrix;

// The one-letter matrix: entry (p, q) is 1 if p <= a <= q, else 0, for
// p <= q; -inf below the diagonal.
inline TropMatrix letter_matrix(Letter a, int n) {
  TropMatrix m(n);
  for (int p = 1; p <= n; ++p) {
    for (int q = p; q <= n; ++q) {
      m.set(p, q, Trop::finite(p <= a && a <= q ? 1 : 0));
    }
  }
  return m;
}

// The upper triangular matrix of weakly-increasing-subsequence lengths of w,
// computed as the max-plus product of the per-letter matrices. The empty
// word maps to the identity matrix.
inline Fingerprint fingerprint(const Word& w, int n) {
  validate_rank(w, n);
  TropMatrix m = TropMatrix::identity(n);
  for (Letter a : w) {
    m = trop_mul(m, letter_matrix(a, n));
  }
  return m;
}

// The first matrix row (entries (1,1), ..., (1,n)); finite for non-empty w.
inline std::vector<int> top_row(const Word& w, int n) {
  if (w.empty()) {
    throw empty_word_error("top_row: defined for non-empty words only");
  }
  Fingerprint m = fingerprint(w, n);
  std::vector<int> t(n);
  for (int i = 1; i <= n; ++i) {
    t[i - 1] = static_cast<int>(m.at(1, i).value());
  }
  return t;
}

// Bottom row of the insertion tableau recovered from the top matrix row by
// an ordinary integer product with the difference matrix (first column e_1,
// i-th column e_i - e_{i-1}): component i is t_i - t_{i-1}.
inline RowVector bottom_via_x(const Word& w, int n) {
  std::vector<int> t = top_row(w, n);
  RowVector gamma(n);
  gamma[0] = t[0];
  for (int i = 1; i < n; ++i) {
    gamma[i] = t[i] - t[i - 1];
  }
  return gamma;
}

// Compact text key, e.g. for grouping words by fingerprint. Lists the
// on-and-above-diagonal entries row-major; "-" marks -inf.
inline std::string fingerprint_key(const Fingerprint& m) {
  std::string key = std::to_string(m.dim()) + "|";
  for (int p = 1; p <= m.dim(); ++p) {
    for (int q = p; q <= m.dim(); ++q) {
      Trop v = m.at(p, q);
      key += v.is_neg_inf() ? "-" : std::to_string(v.value());
      key += ',';
    }
  }
  return key;
}

}  // namespace grammic

#endif  // GRAMMIC_TROPICAL_HPP_
