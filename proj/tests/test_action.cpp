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

// A single row with multiplicities gamma is itself a tableau.
Tableau row_tableau(const RowVector& gamma) {
  Tableau t;
  Word row;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    row.insert(row.end(), static_cast<std::size_t>(gamma[i]), static_cast<Letter>(i) + 1);
  }
  if (!row.empty()) t.rows.push_back(std::move(row));
  return t;
}

}  // namespace

TEST_CASE("single letter action", "[action]") {
  CHECK(act_letter({1, 0, 1}, 1) == RowVector{2, 0, 0});
  CHECK(act_letter({0, 0, 0}, 2) == RowVector{0, 1, 0});
  CHECK(act_letter({1, 1, 1}, 3) == RowVector{1, 1, 2});
  CHECK(act_letter({0, 0, 0, 0, 0, 3, 0, 0}, 7) == RowVector{0, 0, 0, 0, 0, 3, 1, 0});
  CHECK_THROWS_AS(act_letter({0, 0}, 3), rank_error);
  CHECK_THROWS_AS(act_letter({0, 0}, 0), rank_error);

  CHECK(act_word({0, 0, 0, 0, 0, 3, 0, 0}, {7, 8, 4, 6, 3, 5, 7, 2, 2, 5, 6}) ==
        RowVector{0, 2, 0, 0, 1, 2, 0, 0});
  RowVector gamma{2, 1, 0};
  CHECK(act_word(gamma, {}) == gamma);
}

TEST_CASE("the action tracks insertion into a row", "[action]") {
  for (RowVector gamma : {RowVector{0, 0, 0}, RowVector{1, 0, 2}, RowVector{0, 2, 1},
                          RowVector{2, 2, 2}}) {
    for (const Word& w : all_words(3, 3)) {
      Tableau t = row_tableau(gamma);
      for (Letter a : w) t = insert(t, a);
      CHECK(act_word(gamma, w) == bottom_row_vector(t, 3));
    }
  }
}

TEST_CASE("equivalence via fingerprints", "[action]") {
  CHECK(equiv({3, 2, 1, 2}, {2, 1, 3, 2}, 3));
  CHECK(!equiv({3, 4, 1, 2}, {1, 3, 2, 4}, 4));
  CHECK(equiv({}, {}, 2));
  CHECK(!equiv({}, {1}, 2));
  CHECK(!equiv({1, 2}, {2, 1}, 2));
  CHECK_THROWS_AS(equiv({3}, {3}, 2), rank_error);
}

TEST_CASE("fingerprints agree with the row action oracle", "[action]") {
  std::vector<Word> words = all_words(3, 3);
  for (const Word& u : words) {
    for (const Word& v : words) {
      CHECK(equiv(u, v, 3) == equiv_oracle(u, v, 3));
    }
  }
  CHECK_THROWS_AS(equiv_oracle({1, 2, 3}, {3, 2, 1}, 3, 10), budget_error);
}

TEST_CASE("class enumeration", "[action]") {
  CHECK(enumerate_classes(2, 2).size() == 4);
  CHECK(enumerate_classes(2, 3).size() == 6);
  CHECK(enumerate_classes(3, 4).size() == 38);
  CHECK(enumerate_classes(3, 0).size() == 1);

  ClassMap classes = enumerate_classes(2, 3);
  auto it = classes.find(fingerprint_key(fingerprint({1, 2, 1}, 2)));
  REQUIRE(it != classes.end());
  CHECK(it->second.representatives == std::vector<Word>{{1, 2, 1}, {2, 1, 1}});
  CHECK(it->second.canonical == fingerprint({2, 1, 1}, 2));

  // The oracle partition gives the same number of classes.
  std::vector<Word> cube = all_words(2, 3);
  std::erase_if(cube, [](const Word& w) { return w.size() != 3; });
  int pairs_joined = 0;
  for (std::size_t i = 0; i < cube.size(); ++i) {
    for (std::size_t j = i + 1; j < cube.size(); ++j) {
      if (equiv_oracle(cube[i], cube[j], 2)) ++pairs_joined;
    }
  }
  // 6 classes of sizes 1,1,2,1,2,1: two joined pairs.
  CHECK(pairs_joined == 2);

  ClassMap seq = enumerate_classes(3, 4);
  ClassMap par = enumerate_classes(3, 4, true, kDefaultSpaceBudget, 2);
  REQUIRE(seq.size() == par.size());
  for (auto a = seq.begin(), b = par.begin(); a != seq.end(); ++a, ++b) {
    CHECK(a->first == b->first);
    CHECK(a->second.representatives == b->second.representatives);
  }
  CHECK_THROWS_AS(enumerate_classes(3, 20), budget_error);
}

TEST_CASE("rank stability", "[action]") {
  CHECK(rank_stability({3, 2, 1, 2}, {2, 1, 3, 2}, 3));
  CHECK(!rank_stability({1, 2}, {2, 1}, 2));
  CHECK_THROWS_AS(rank_stability({1}, {1, 1}, 2), precondition_error);
}
