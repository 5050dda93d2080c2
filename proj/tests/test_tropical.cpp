#include <catch_amalgamated.hpp>

#include "grammic/grammic.hpp"

using namespace grammic;

namespace {

std::vector<Word> all_words(int n, int max_len) {
  std::vector<Word> out{{}};
  std::size_t lo = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t hi = out.size();
    for (std::size_t i = lo; i < hi; ++i) {
      for (Letter a = 1; a <= n; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    lo = hi;
  }
  return out;
}

// Quadratic reference: longest weakly increasing subsequence through each
// position, letters outside [p, q] skipped.
int wis_reference(const Word& w, Letter p, Letter q) {
  std::vector<int> best;
  std::vector<Letter> kept;
  int out = 0;
  for (Letter a : w) {
    if (a < p || a > q) continue;
    int len = 1;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (kept[i] <= a) len = std::max(len, best[i] + 1);
    }
    kept.push_back(a);
    best.push_back(len);
    out = std::max(out, len);
  }
  return out;
}

}  // namespace

TEST_CASE("tropical scalar algebra", "[tropical]") {
  Trop ninf = Trop::neg_inf();
  Trop two = Trop::finite(2);
  CHECK(t_max(ninf, two) == two);
  CHECK(t_plus(ninf, two) == ninf);
  CHECK(t_plus(two, Trop::finite(3)) == Trop::finite(5));
  CHECK(t_max(two, Trop::finite(3)) == Trop::finite(3));
  CHECK(ninf == Trop::neg_inf());
  CHECK(!(ninf == Trop::finite(0)));
}

TEST_CASE("matrix product", "[tropical]") {
  TropMatrix id = TropMatrix::identity(3);
  TropMatrix x = letter_matrix(2, 3);
  CHECK(trop_mul(id, x) == x);
  CHECK(trop_mul(x, id) == x);

  // Associativity over a handful of letter matrices.
  for (Letter a = 1; a <= 3; ++a) {
    for (Letter b = 1; b <= 3; ++b) {
      for (Letter c = 1; c <= 3; ++c) {
        TropMatrix ma = letter_matrix(a, 3), mb = letter_matrix(b, 3), mc = letter_matrix(c, 3);
        CHECK(trop_mul(trop_mul(ma, mb), mc) == trop_mul(ma, trop_mul(mb, mc)));
      }
    }
  }

  CHECK_THROWS_AS(trop_mul(TropMatrix(2), TropMatrix(3)), dimension_error);
  TropMatrix m(2);
  CHECK_THROWS_AS(m.set(2, 1, Trop::finite(0)), dimension_error);
}

TEST_CASE("subsequence lengths match the reference", "[tropical]") {
  CHECK(wis_length({1, 5, 3, 5, 3, 7, 2, 5, 4, 9}, 3, 5) == 3);
  CHECK(wis_length({1, 5, 3, 5, 3, 7, 2, 5, 4, 9}, 1, 9) == 5);
  CHECK(wis_length({}, 1, 4) == 0);
  CHECK_THROWS_AS(wis_length({1, 2}, 3, 2), invalid_interval_error);
  CHECK_THROWS_AS(wis_length({1, 2}, 0, 2), rank_error);

  for (const Word& w : all_words(3, 6)) {
    for (Letter p = 1; p <= 3; ++p) {
      for (Letter q = p; q <= 3; ++q) {
        CHECK(wis_length(w, p, q) == wis_reference(w, p, q));
      }
    }
  }
}

TEST_CASE("fingerprint entries are subsequence lengths", "[tropical]") {
  for (const Word& w :
       {Word{3, 2, 1, 2}, Word{1, 5, 3, 5, 3, 7, 2, 5, 4, 9}, Word{2, 2, 2}, Word{}}) {
    int n = std::max(max_letter(w), 1);
    Fingerprint m = fingerprint(w, n);
    for (Letter p = 1; p <= n; ++p) {
      for (Letter q = p; q <= n; ++q) {
        CHECK(m.at(p, q) == Trop::finite(wis_length(w, p, q)));
      }
    }
  }
  CHECK(fingerprint({}, 4) == TropMatrix::identity(4));
  CHECK(fingerprint({2}, 3) == letter_matrix(2, 3));
  CHECK_THROWS_AS(fingerprint({4}, 3), rank_error);
}

TEST_CASE("fingerprint is multiplicative", "[tropical]") {
  std::vector<Word> words = all_words(3, 4);
  for (std::size_t i = 0; i < words.size(); i += 7) {
    for (std::size_t j = 0; j < words.size(); j += 11) {
      CHECK(fingerprint(concat(words[i], words[j]), 3) ==
            trop_mul(fingerprint(words[i], 3), fingerprint(words[j], 3)));
    }
  }
}

TEST_CASE("bottom row from the top matrix row", "[tropical]") {
  CHECK(bottom_via_x({7, 8, 6, 7, 6}, 8) == RowVector{0, 0, 0, 0, 0, 2, 0, 0});
  for (const Word& w : all_words(3, 5)) {
    if (w.empty()) continue;
    CHECK(bottom_via_x(w, 3) == bottom_row_vector(tableau_of(w), 3));
  }
}

TEST_CASE("fingerprint keys", "[tropical]") {
  CHECK(fingerprint_key(fingerprint({3, 2, 1, 2}, 3)) == "3|1,2,2,2,2,1,");
  CHECK(fingerprint_key(TropMatrix(1)) == "1|-,");
  CHECK(fingerprint_key(fingerprint({3, 2, 1, 2}, 3)) !=
        fingerprint_key(fingerprint({3, 2, 1, 2}, 4)));
}
