#ifndef GRAMMIC_ACTION_HPP_
#define GRAMMIC_ACTION_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "tableau.hpp"
#include "tropical.hpp"
#include "word.hpp"

namespace grammic {

// Cost ceilings for the exhaustive operations; exceeding one throws
// budget_error before any work starts.
inline constexpr std::uint64_t kDefaultStepBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultSpaceBudget = 10'000'000;

namespace detail {

// base^exp, saturated at limit + 1.
inline std::uint64_t saturating_pow(std::uint64_t base, int exp,
                                    std::uint64_t limit) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > limit / base) {
      return limit + 1;
    }
    out *= base;
  }
  return out;
}

// Calls fn(word) for every word of length k over [n], in lexicographic
// order (index order of the mixed-radix odometer).
template <typename Fn>
void for_each_word(int n, int k, Fn&& fn) {
  Word w(k, 1);
  while (true) {
    fn(const_cast<const Word&>(w));
    int i = k - 1;
    while (i >= 0 && w[i] == n) {
      w[i] = 1;
      --i;
    }
    if (i < 0) {
      return;
    }
    ++w[i];
  }
}

}  // namespace detail

// One Schensted insertion seen from the bottom row only: letter a joins the
// row and bumps the least strictly greater letter present, if any.
inline RowVector act_letter(RowVector gamma, Letter a) {
  const int n = static_cast<int>(gamma.size());
  if (a < 1 || a > n) {
    throw rank_error("act_letter: letter " + std::to_string(a) +
                     " outside [1, " + std::to_string(n) + "]");
  }
  ++gamma[a - 1];
  for (int t = a + 1; t <= n; ++t) {
    if (gamma[t - 1] > 0) {
      --gamma[t - 1];
      break;
    }
  }
  return gamma;
}

inline RowVector act_word(RowVector gamma, const Word& w) {
  for (Letter a : w) {
    gamma = act_letter(std::move(gamma), a);
  }
  return gamma;
}

// Grammic equivalence via the invariant: equal length and content, then
// equal fingerprints.
inline bool equiv(const Word& u, const Word& v, int n) {
  validate_rank(u, n);
  validate_rank(v, n);
  if (u.size() != v.size() || content(u) != content(v)) {
    return false;
  }
  return fingerprint(u, n) == fingerprint(v, n);
}

// Ground-truth brute force: u and v are equivalent iff they act identically
// on every row gamma in {0, ..., k+1}^n, where k is the common length.
// (Rows with a component of k+1 or more behave alike beyond that bound, so
// this domain decides equivalence; zero components are included as well.)
inline bool equiv_oracle(const Word& u, const Word& v, int n,
                         std::uint64_t step_budget = kDefaultStepBudget) {
  validate_rank(u, n);
  validate_rank(v, n);
  if (u.size() != v.size()) {
    return false;
  }
  const int k = static_cast<int>(u.size());
  if (k == 0) {
    return true;
  }
  const std::uint64_t rows =
      detail::saturating_pow(static_cast<std::uint64_t>(k) + 2, n, step_budget);
  if (rows > step_budget / (2 * static_cast<std::uint64_t>(k))) {
    throw budget_error("equiv_oracle: (" + std::to_string(k) + "+2)^" +
                       std::to_string(n) + " rows exceed the step budget");
  }
  RowVector gamma(n, 0);
  while (true) {
    if (act_word(gamma, u) != act_word(gamma, v)) {
      return false;
    }
    int i = n - 1;
    while (i >= 0 && gamma[i] == k + 1) {
      gamma[i] = 0;
      --i;
    }
    if (i < 0) {
      return true;
    }
    ++gamma[i];
  }
}

// One congruence class: the shared fingerprint plus (optionally) every word
// of the enumerated block that carries it.
struct GrammicClass {
  Fingerprint canonical;
  std::vector<Word> representatives;
};

using ClassMap = std::map<std::string, GrammicClass>;

// Partition of all words of length k over [n] by fingerprint. Keys are
// fingerprint_key strings; representatives are in lexicographic order.
inline ClassMap enumerate_classes(int n, int k, bool with_representatives = true,
                                  std::uint64_t space_budget = kDefaultSpaceBudget,
                                  unsigned jobs = 1) {
  const std::uint64_t total =
      detail::saturating_pow(static_cast<std::uint64_t>(n), k, space_budget);
  if (total > space_budget) {
    throw budget_error("enumerate_classes: " + std::to_string(n) + "^" +
                       std::to_string(k) + " words exceed the space budget");
  }
  if (k == 0) {
    ClassMap out;
    Fingerprint id = fingerprint({}, n);
    out.emplace(fingerprint_key(id), GrammicClass{id, {Word{}}});
    return out;
  }

  auto scan = [&](std::uint64_t begin, std::uint64_t end, ClassMap& into) {
    Word w(k);
    for (std::uint64_t index = begin; index < end; ++index) {
      std::uint64_t rest = index;
      for (int j = k - 1; j >= 0; --j) {
        w[j] = static_cast<Letter>(rest % n) + 1;
        rest /= n;
      }
      Fingerprint fp = fingerprint(w, n);
      auto [it, inserted] =
          into.emplace(fingerprint_key(fp), GrammicClass{fp, {}});
      if (with_representatives || it->second.representatives.empty()) {
        it->second.representatives.push_back(w);
      }
    }
  };

  if (jobs <= 1 || total < 2 * jobs) {
    ClassMap out;
    scan(0, total, out);
    return out;
  }
  std::vector<ClassMap> partial(jobs);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (total + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    std::uint64_t begin = j * chunk;
    std::uint64_t end = std::min(total, begin + chunk);
    if (begin >= end) {
      break;
    }
    workers.emplace_back(scan, begin, end, std::ref(partial[j]));
  }
  for (auto& t : workers) {
    t.join();
  }
  // merge in chunk order to keep representatives lexicographic
  ClassMap out = std::move(partial[0]);
  for (unsigned j = 1; j < partial.size(); ++j) {
    for (auto& [key, cls] : partial[j]) {
      auto it = out.find(key);
      if (it == out.end()) {
        out.emplace(key, std::move(cls));
      } else if (with_representatives) {
        auto& reps = it->second.representatives;
        reps.insert(reps.end(), cls.representatives.begin(),
                    cls.representatives.end());
      }
    }
  }
  return out;
}

// Oracle equivalence over [n], cross-checked against the oracle over
// [n + 1]: the two verdicts agree for words on [n], and disagreement would
// falsify the rank embedding, so it is reported loudly.
inline bool rank_stability(const Word& u, const Word& v, int n,
                           std::uint64_t step_budget = kDefaultStepBudget) {
  if (u.size() != v.size()) {
    throw precondition_error("rank_stability: words must have equal length");
  }
  bool at_n = equiv_oracle(u, v, n, step_budget);
  bool at_n1 = equiv_oracle(u, v, n + 1, step_budget);
  if (at_n != at_n1) {
    throw error("rank_stability: oracle verdicts differ between rank " +
                std::to_string(n) + " and " + std::to_string(n + 1));
  }
  return at_n;
}

}  // namespace grammic

#endif  // GRAMMIC_ACTION_HPP_
