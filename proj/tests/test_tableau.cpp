#include <map>

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

}  // namespace

TEST_CASE("row insertion golden", "[tableau]") {
  Tableau t = tableau_of({7, 8, 4, 6, 3, 5, 7, 2, 2, 5, 6});
  CHECK(t.rows == std::vector<Word>{{2, 2, 5, 6}, {3, 5, 7}, {4, 6}, {7, 8}});
  CHECK(is_valid(t));
  CHECK(bottom_row_vector(t, 8) == RowVector{0, 2, 0, 0, 1, 1, 0, 0});

  CHECK(tableau_of({}).rows.empty());
  CHECK(is_valid(tableau_of({})));
}

TEST_CASE("tableau validity", "[tableau]") {
  CHECK(is_valid(Tableau{{{1, 2, 2}, {2, 3}}}));
  CHECK(!is_valid(Tableau{{{1, 2}, {1}}}));     // column not strictly increasing
  CHECK(!is_valid(Tableau{{{1}, {2, 3}}}));     // upper row longer
  CHECK(!is_valid(Tableau{{{2, 1}}}));          // row not weakly increasing
  CHECK(!is_valid(Tableau{{{1, 0}}}));          // letters are positive
}

TEST_CASE("readings reproduce the tableau", "[tableau]") {
  CHECK(column_reading(tableau_of({3, 2, 1, 2})) == Word{3, 2, 1, 2});
  CHECK(row_reading(tableau_of({3, 2, 1, 2})) == Word{3, 2, 1, 2});

  for (const Word& w : all_words(3, 5)) {
    Tableau t = tableau_of(w);
    CHECK(is_valid(t));
    CHECK(tableau_of(row_reading(t)).rows == t.rows);
    CHECK(tableau_of(column_reading(t)).rows == t.rows);
  }
}

TEST_CASE("words with equal tableaux are equivalent", "[tableau]") {
  // The tableau congruence refines the fingerprint congruence.
  std::map<std::vector<Word>, std::string> seen;
  for (const Word& w : all_words(3, 5)) {
    std::string key = fingerprint_key(fingerprint(w, 3));
    auto [it, fresh] = seen.emplace(tableau_of(w).rows, key);
    CHECK(it->second == key);
  }
}

TEST_CASE("column words", "[tableau]") {
  CHECK(is_column_word({3, 2, 1}));
  CHECK(is_column_word({5}));
  CHECK(!is_column_word({3, 3, 1}));
  CHECK(!is_column_word({1, 2, 3}));

  std::set<Word> cols = enumerate_columns(3);
  CHECK(cols.size() == 7);
  for (const Word& c : cols) CHECK(is_column_word(c));

  CHECK(column_dominates({3, 2, 1}, {2}));
  CHECK(!column_dominates({2}, {3, 2, 1}));
  CHECK(!column_dominates({3, 1}, {2, 1}));
  CHECK(column_dominates({2, 1}, {3, 2}));
}
