#include <algorithm>
#include <bit>
#include <set>

#include <catch_amalgamated.hpp>

#include "grammic/grammic.hpp"

using namespace grammic;

namespace {

// Independent subword oracle: every index subset of size 1..max_len.
std::set<Word> subwords_by_mask(const Word& w, int max_len) {
  std::set<Word> out;
  const int k = static_cast<int>(w.size());
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    if (std::popcount(mask) > max_len) continue;
    Word s;
    for (int i = 0; i < k; ++i) {
      if (mask >> i & 1) s.push_back(w[i]);
    }
    out.insert(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("content and support", "[word]") {
  Word w{7, 8, 4, 6, 3, 5, 7, 2, 2, 5, 6};
  CHECK(max_letter(w) == 8);
  CHECK(content(w) == Content{{2, 2}, {3, 1}, {4, 1}, {5, 2}, {6, 2}, {7, 2}, {8, 1}});
  CHECK(support(w) == std::vector<Letter>{2, 3, 4, 5, 6, 7, 8});
  CHECK(max_letter({}) == 0);
  CHECK_THROWS_AS(validate_word({1, 0, 2}), error);
  CHECK_THROWS_AS(validate_rank({1, 4}, 3), rank_error);
  CHECK_THROWS_AS(validate_rank(0), rank_error);
}

TEST_CASE("interval restriction", "[word]") {
  Word w{7, 8, 4, 6, 3, 5, 7, 2, 2, 5, 6};
  CHECK(restrict_to(w, 3, 7) == Word{7, 4, 6, 3, 5, 7, 5, 6});
  CHECK(restrict_to(w, 1, 8) == w);
  CHECK(restrict_to(w, 9, 9).empty());
  CHECK_THROWS_AS(restrict_to(w, 5, 3), invalid_interval_error);

  // Restricting twice is restricting to the intersection.
  CHECK(restrict_to(restrict_to(w, 2, 7), 4, 8) == restrict_to(w, 4, 7));
}

TEST_CASE("packing", "[word]") {
  CHECK(pack({7, 8, 4, 6, 3, 5, 7}) == Word{5, 6, 2, 4, 1, 3, 5});
  CHECK(pack({2, 2, 9}) == Word{1, 1, 2});
  CHECK(pack({}) == Word{});

  Word p = pack({4, 9, 4, 2, 9});
  CHECK(pack(p) == p);
  CHECK(standardise(p) == standardise(Word{4, 9, 4, 2, 9}));
}

TEST_CASE("standardisation", "[word]") {
  Word w{7, 8, 4, 6, 3, 5, 7, 2, 2, 5, 6};
  Word s = standardise(w);
  CHECK(s == Word{9, 11, 4, 7, 3, 5, 10, 1, 2, 6, 8});
  CHECK(is_standard(s));
  CHECK(!is_standard(w));
  CHECK(is_standard({}));

  // Equal letters are ranked left to right.
  CHECK(standardise({2, 1, 2, 1}) == Word{3, 1, 4, 2});
  CHECK(standardise({1, 1, 1}) == Word{1, 2, 3});
}

TEST_CASE("involution", "[word]") {
  Word w{1, 2, 3};
  CHECK(involute(w, 4) == Word{2, 3, 4});
  CHECK(involute(involute(w, 5), 5) == w);
  CHECK(involute({}, 3) == Word{});
  CHECK_THROWS_AS(involute({5}, 4), rank_error);
}

TEST_CASE("charge sequence", "[word]") {
  ChargeSequence cs = charge_sequence({8, 2, 4, 5, 6, 1, 3, 7});
  CHECK(cs.values == std::vector<int>{0, 0, 1, 1, 2, 3, 4, 4});
  CHECK(cs.charge() == 15);

  // The identity word maxes charge out, its reverse zeroes it.
  CHECK(charge_sequence({1, 2, 3, 4, 5}).charge() == 10);
  CHECK(charge_sequence({5, 4, 3, 2, 1}).charge() == 0);
  CHECK_THROWS_AS(charge_sequence({1, 1, 3, 5}), not_standard_error);
}

TEST_CASE("scattered subwords match the index-subset oracle", "[word]") {
  for (Word w : {Word{1, 2, 1, 2}, Word{3, 1, 2, 2, 1}, Word{5}, Word{}}) {
    for (int max_len = 0; max_len <= 4; ++max_len) {
      CHECK(scattered_subwords(w, max_len) == subwords_by_mask(w, max_len));
    }
  }
}

TEST_CASE("concat", "[word]") {
  CHECK(concat({1, 2}, {3}) == Word{1, 2, 3});
  CHECK(concat({}, {4, 4}) == Word{4, 4});
}
