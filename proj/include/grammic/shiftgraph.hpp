#ifndef GRAMMIC_SHIFTGRAPH_HPP_
#define GRAMMIC_SHIFTGRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "grammic/action.hpp"
#include "grammic/errors.hpp"
#include "grammic/tropical.hpp"
#include "grammic/word.hpp"

namespace grammic {

// Vertices are the equivalence classes of words with the given content; two
// classes are adjacent when some word of one cyclically shifts into the other.
struct ShiftGraph {
  int rank = 0;
  Content cont;
  std::uint64_t words = 0;
  std::vector<std::string> keys;                 // canonical fingerprint key per class
  std::vector<Word> representatives;             // lexicographically least member
  std::vector<std::set<std::size_t>> adjacency;  // undirected, no self-loops
};

// Number of words with the given content, saturating at limit + 1.
inline std::uint64_t multinomial(const Content& cont, std::uint64_t limit) {
  unsigned __int128 result = 1;
  std::uint64_t seen = 0;
  for (auto [a, mult] : cont)
    for (int i = 1; i <= mult; ++i) {
      ++seen;
      result = result * seen / static_cast<unsigned>(i);  // exact: C(seen, i) is integral
      if (result > limit) return limit + 1;
    }
  return static_cast<std::uint64_t>(result);
}

inline ShiftGraph build_shift_graph(int n, const Content& cont,
                                    std::uint64_t space_budget = kDefaultSpaceBudget) {
  validate_rank(n);
  if (cont.empty()) throw misuse_error("content must be non-empty");
  Word sorted;
  for (auto [a, mult] : cont) {
    if (a < 1 || a > n) throw rank_error("content letter out of range");
    if (mult < 1) throw misuse_error("content multiplicities must be positive");
    sorted.insert(sorted.end(), static_cast<std::size_t>(mult), a);
  }
  if (multinomial(cont, space_budget) > space_budget)
    throw budget_error("word count for this content exceeds the space budget");

  ShiftGraph g;
  g.rank = n;
  g.cont = cont;
  std::map<std::string, std::size_t> index;
  Word w = sorted;
  do {
    ++g.words;
    std::string key = fingerprint_key(fingerprint(w, n));
    if (index.emplace(key, g.keys.size()).second) {
      g.keys.push_back(key);
      g.representatives.push_back(w);  // next_permutation visits words in lex order
    }
  } while (std::next_permutation(w.begin(), w.end()));

  g.adjacency.assign(g.keys.size(), {});
  w = sorted;
  do {
    std::size_t from = index.at(fingerprint_key(fingerprint(w, n)));
    Word rot = w;
    for (std::size_t d = 1; d < w.size(); ++d) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      std::size_t to = index.at(fingerprint_key(fingerprint(rot, n)));
      if (from != to) {
        g.adjacency[from].insert(to);
        g.adjacency[to].insert(from);
      }
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return g;
}

struct ShiftComponent {
  std::vector<std::size_t> members;
  int diameter = 0;
};

inline std::vector<ShiftComponent> shift_components(const ShiftGraph& g) {
  std::vector<ShiftComponent> out;
  std::vector<int> comp(g.keys.size(), -1);
  for (std::size_t start = 0; start < g.keys.size(); ++start) {
    if (comp[start] >= 0) continue;
    ShiftComponent c;
    comp[start] = static_cast<int>(out.size());
    std::queue<std::size_t> q;
    q.push(start);
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      c.members.push_back(v);
      for (std::size_t u : g.adjacency[v])
        if (comp[u] < 0) {
          comp[u] = comp[start];
          q.push(u);
        }
    }
    std::sort(c.members.begin(), c.members.end());
    for (std::size_t src : c.members) {
      std::map<std::size_t, int> dist{{src, 0}};
      std::queue<std::size_t> bfs;
      bfs.push(src);
      while (!bfs.empty()) {
        std::size_t v = bfs.front();
        bfs.pop();
        c.diameter = std::max(c.diameter, dist[v]);
        for (std::size_t u : g.adjacency[v])
          if (dist.emplace(u, dist[v] + 1).second) bfs.push(u);
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline int max_component_diameter(const ShiftGraph& g) {
  int best = 0;
  for (const ShiftComponent& c : shift_components(g)) best = std::max(best, c.diameter);
  return best;
}

// All contents over [n] with the given total, in lexicographic order of their
// count vectors (letters missing from a content are simply absent).
inline std::vector<Content> enumerate_contents(int n, int total) {
  validate_rank(n);
  if (total < 1) throw misuse_error("content total must be positive");
  std::vector<Content> out;
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  auto place = [&](auto&& self, int letter, int left) -> void {
    if (letter == n) {
      counts[static_cast<std::size_t>(n - 1)] = left;
      Content c;
      for (int a = 1; a <= n; ++a)
        if (counts[static_cast<std::size_t>(a - 1)] > 0) c[a] = counts[static_cast<std::size_t>(a - 1)];
      out.push_back(std::move(c));
      return;
    }
    for (int take = 0; take <= left; ++take) {
      counts[static_cast<std::size_t>(letter - 1)] = take;
      self(self, letter + 1, left - take);
    }
  };
  place(place, 1, total);
  return out;
}

}  // namespace grammic

#endif  // GRAMMIC_SHIFTGRAPH_HPP_
