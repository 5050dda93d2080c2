#ifndef GRAMMIC_TABLEAU_HPP_
#define GRAMMIC_TABLEAU_HPP_

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "errors.hpp"
#include "word.hpp"

namespace grammic {

// A semistandard Young tableau. rows[0] is the bottom row; each row is
// weakly increasing, row lengths weakly decrease upwards and columns are
// strictly increasing bottom to top. No rows = the empty tableau.
struct Tableau {
  std::vector<std::vector<Letter>> rows;

  bool empty() const { return rows.empty(); }

  std::size_t box_count() const {
    std::size_t n = 0;
    for (const auto& r : rows) {
      n += r.size();
    }
    return n;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

inline bool is_valid(const Tableau& t) {
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    if (row.empty()) {
      return false;
    }
    if (i + 1 < t.rows.size() && t.rows[i + 1].size() > row.size()) {
      return false;
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 1) {
        return false;
      }
      if (j + 1 < row.size() && row[j] > row[j + 1]) {
        return false;
      }
      if (i + 1 < t.rows.size() && j < t.rows[i + 1].size() &&
          t.rows[i + 1][j] <= row[j]) {
        return false;
      }
    }
  }
  return true;
}

// Schensted row insertion. Each row either takes the incoming letter at its
// right end or bumps its leftmost strictly greater entry into the row above;
// a letter bumped past the top row starts a new row.
inline Tableau insert(const Tableau& t, Letter a) {
  if (a < 1) {
    throw rank_error("insert: letters must be positive");
  }
  Tableau out = t;
  Letter carry = a;
  for (auto& row : out.rows) {
    auto it = std::upper_bound(row.begin(), row.end(), carry);
    if (it == row.end()) {
      row.push_back(carry);
      return out;
    }
    std::swap(carry, *it);
  }
  out.rows.push_back({carry});
  return out;
}

inline Tableau tableau_of(const Word& w) {
  Tableau t;
  for (Letter a : w) {
    t = insert(t, a);
  }
  return t;
}

// Rows left to right, top to bottom.
inline Word row_reading(const Tableau& t) {
  Word out;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) {
    out.insert(out.end(), it->begin(), it->end());
  }
  return out;
}

// Columns top to bottom, left to right.
inline Word column_reading(const Tableau& t) {
  Word out;
  if (t.empty()) {
    return out;
  }
  std::size_t width = t.rows[0].size();
  for (std::size_t j = 0; j < width; ++j) {
    std::size_t height = t.rows.size();
    while (t.rows[height - 1].size() <= j) {
      --height;
    }
    for (std::size_t i = height; i-- > 0;) {
      out.push_back(t.rows[i][j]);
    }
  }
  return out;
}

// Multiplicity vector of the bottom row: component i counts letter i.
using RowVector = std::vector<int>;

inline RowVector bottom_row_vector(const Tableau& t, int n) {
  RowVector gamma(n, 0);
  if (t.empty()) {
    return gamma;
  }
  for (Letter a : t.rows[0]) {
    if (a > n) {
      throw rank_error("bottom_row_vector: entry " + std::to_string(a) +
                       " exceeds rank " + std::to_string(n));
    }
    ++gamma[a - 1];
  }
  return gamma;
}

// --- Column words (strictly decreasing words; single-column tableaux) ---

inline bool is_column_word(const Word& w) {
  if (w.empty()) {
    return false;
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] <= w[i + 1]) {
      return false;
    }
  }
  return w.back() >= 1;
}

// True iff the columns of p and q can stand side by side in one tableau,
// p on the left: p is at least as long and, aligned at the bottom, each
// entry of p is <= the entry of q at the same height.
inline bool column_dominates(const Word& p, const Word& q) {
  if (p.size() < q.size()) {
    return false;
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    // i-th lowest entry = i-th from the back of the decreasing word
    if (p[p.size() - 1 - i] > q[q.size() - 1 - i]) {
      return false;
    }
  }
  return true;
}

// All 2^n - 1 column words over [n] (non-empty subsets, read decreasing).
inline std::set<Word> enumerate_columns(int n) {
  if (n < 1) {
    throw misuse_error("enumerate_columns: rank must be >= 1");
  }
  std::set<Word> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Word col;
    for (int a = n; a >= 1; --a) {
      if (mask & (1u << (a - 1))) {
        col.push_back(a);
      }
    }
    out.insert(std::move(col));
  }
  return out;
}

}  // namespace grammic

#endif  // GRAMMIC_TABLEAU_HPP_
