#include <algorithm>

#include <catch_amalgamated.hpp>

#include "grammic/grammic.hpp"

using namespace grammic;

TEST_CASE("word parsing", "[serialize]") {
  CHECK(parse_word("3212") == Word{3, 2, 1, 2});
  CHECK(parse_word("1,2, 10") == Word{1, 2, 10});
  CHECK(parse_word("1 2\t3") == Word{1, 2, 3});
  CHECK(parse_word("12,") == Word{12});
  CHECK(parse_word("") == Word{});
  CHECK(parse_word("ε") == Word{});
  CHECK(parse_word("eps") == Word{});
  CHECK(parse_word("3212", 9) == Word{3, 2, 1, 2});

  CHECK_THROWS_AS(parse_word("3212", 12), misuse_error);  // bare digits need rank <= 9
  CHECK_THROWS_AS(parse_word("102"), misuse_error);       // a zero digit is not a letter
  CHECK(parse_word("1,,2") == Word{1, 2});  // repeated separators collapse
  CHECK_THROWS_AS(parse_word("1,x"), misuse_error);
  CHECK_THROWS_AS(parse_word("1,-2"), misuse_error);
}

TEST_CASE("word display", "[serialize]") {
  CHECK(word_to_string({3, 2, 1, 2}) == "3212");
  CHECK(word_to_string({1, 2, 10}) == "1,2,10");
  CHECK(word_to_string({}) == "ε");
  CHECK(parse_word(word_to_string({11, 4, 9})) == Word{11, 4, 9});
}

TEST_CASE("row vectors and contents", "[serialize]") {
  CHECK(parse_row_vector("0,2,0,1") == RowVector{0, 2, 0, 1});
  CHECK(row_vector_to_string({0, 2, 0, 1}) == "0,2,0,1");
  CHECK_THROWS_AS(parse_row_vector("1,-1"), misuse_error);
  CHECK_THROWS_AS(parse_row_vector(""), misuse_error);

  CHECK(parse_content("1:2,3:1") == Content{{1, 2}, {3, 1}});
  CHECK(parse_content("1123") == Content{{1, 2}, {2, 1}, {3, 1}});
  CHECK(content_to_string({{1, 2}, {3, 1}}) == "1:2,3:1");
  CHECK_THROWS_AS(parse_content("1:2,1:1"), misuse_error);
  CHECK_THROWS_AS(parse_content("1:0"), misuse_error);
}

TEST_CASE("json round trips are byte identical", "[serialize]") {
  Fingerprint m = fingerprint({1, 5, 3, 5, 3, 7, 2, 5, 4, 9}, 9);
  std::string dumped = fingerprint_json(m).dump();
  Fingerprint back = fingerprint_from_json(json::parse(dumped));
  CHECK(back == m);
  CHECK(fingerprint_json(back).dump() == dumped);

  Tableau t = tableau_of({7, 8, 4, 6, 3, 5, 7, 2, 2, 5, 6});
  std::string tdump = tableau_json(t).dump();
  CHECK(tableau_json(tableau_from_json(json::parse(tdump))).dump() == tdump);

  RelationSet rels = lps_relations(3);
  std::string rdump = relation_set_json(rels).dump();
  RelationSet rback = relation_set_from_json(json::parse(rdump));
  CHECK(rback.pairs == rels.pairs);
  CHECK(relation_set_json(rback).dump() == rdump);

  ShiftGraph g = build_shift_graph(3, {{1, 1}, {2, 1}, {3, 1}});
  std::string gdump = shift_graph_json(g).dump();
  CHECK(json::parse(gdump).dump() == gdump);
}

TEST_CASE("json rejects malformed payloads", "[serialize]") {
  CHECK_THROWS_AS(word_from_json(json::parse("[1,0,2]")), error);
  CHECK_THROWS_AS(tableau_from_json(json::parse(R"({"rows":[[2,1]]})")), misuse_error);
  CHECK_THROWS_AS(fingerprint_from_json(json::parse(R"({"n":2,"entries":[1,1]})")), misuse_error);
}

TEST_CASE("fingerprint json encodes the upper triangle row by row", "[serialize]") {
  json j = fingerprint_json(fingerprint({3, 2, 1, 2}, 3));
  CHECK(j["n"] == 3);
  CHECK(j["entries"] == json::parse("[1,2,2,2,2,1]"));

  json big = fingerprint_json(fingerprint({1, 5, 3, 5, 3, 7, 2, 5, 4, 9}, 9));
  // Entry (3, 5) sits at offset 9 + 8 + (5 - 3).
  CHECK(big["entries"][19] == 3);
}

TEST_CASE("edge list is sorted and loop free", "[serialize]") {
  ShiftGraph g = build_shift_graph(3, {{1, 2}, {2, 1}, {3, 1}});
  std::string edges = shift_graph_edge_list(g);
  CHECK(!edges.empty());
  std::string prev;
  std::size_t pos = 0;
  std::size_t lines = 0;
  while (pos < edges.size()) {
    std::size_t nl = edges.find('\n', pos);
    std::string line = edges.substr(pos, nl - pos);
    CHECK(prev < line);
    std::size_t sp = line.find(' ');
    std::string a = line.substr(0, sp);
    std::string b = line.substr(sp + 1);
    CHECK(a != b);
    CHECK(std::find(g.keys.begin(), g.keys.end(), a) != g.keys.end());
    CHECK(std::find(g.keys.begin(), g.keys.end(), b) != g.keys.end());
    prev = line;
    pos = nl + 1;
    ++lines;
  }

  // One line per undirected edge.
  std::size_t degree_total = 0;
  for (const auto& nbrs : g.adjacency) degree_total += nbrs.size();
  CHECK(lines * 2 == degree_total);
}
