#ifndef GRAMMIC_IDENTITIES_HPP_
#define GRAMMIC_IDENTITIES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grammic/action.hpp"
#include "grammic/errors.hpp"
#include "grammic/word.hpp"

namespace grammic {

// Sides are words over variable indices 1..num_vars.
struct Identity {
  Word lhs;
  Word rhs;
  int num_vars = 0;

  friend bool operator==(const Identity&, const Identity&) = default;
};

// "xyyx = yxxy": single-letter variables a-z, indexed alphabetically, one '='.
inline Identity parse_identity(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || text.find('=', eq + 1) != std::string::npos)
    throw misuse_error("an identity needs exactly one '='");
  std::map<char, int> index;
  for (char ch : text) {
    if (ch >= 'a' && ch <= 'z') index.emplace(ch, 0);
    else if (ch != '=' && ch != ' ' && ch != '\t')
      throw misuse_error(std::string("unexpected character '") + ch + "' in identity");
  }
  int next = 1;
  for (auto& [ch, idx] : index) idx = next++;
  Identity id;
  id.num_vars = next - 1;
  auto side = [&](std::size_t from, std::size_t to) {
    Word w;
    for (std::size_t i = from; i < to; ++i)
      if (text[i] != ' ' && text[i] != '\t') w.push_back(index.at(text[i]));
    if (w.empty()) throw misuse_error("identity sides must be non-empty");
    return w;
  };
  id.lhs = side(0, eq);
  id.rhs = side(eq + 1, text.size());
  return id;
}

inline std::string identity_to_string(const Identity& id) {
  if (id.num_vars > 26) throw misuse_error("cannot render more than 26 variables");
  std::string out;
  for (Letter v : id.lhs) out += static_cast<char>('a' + v - 1);
  out += " = ";
  for (Letter v : id.rhs) out += static_cast<char>('a' + v - 1);
  return out;
}

// asg[i] is the image of variable i + 1; empty images are allowed.
using Assignment = std::vector<Word>;

inline Word substitute(const Word& side, const Assignment& asg) {
  Word out;
  for (Letter v : side) {
    if (v < 1 || static_cast<std::size_t>(v) > asg.size())
      throw misuse_error("assignment does not cover every variable");
    const Word& image = asg[static_cast<std::size_t>(v) - 1];
    out.insert(out.end(), image.begin(), image.end());
  }
  return out;
}

inline bool is_balanced(const Identity& id) { return content(id.lhs) == content(id.rhs); }

inline bool is_trivial(const Identity& id) { return id.lhs == id.rhs; }

struct FalsifyResult {
  Assignment assignment;
  Word lhs_image;
  Word rhs_image;
};

// Deterministic search: candidate words over [n] of length <= max_len ordered
// by length then lexicographically (the empty word first), variable 1 varying
// slowest. Absence of a result is evidence only up to these bounds.
inline std::optional<FalsifyResult> falsify(const Identity& id, int n, int max_len,
                                            std::uint64_t step_budget = kDefaultStepBudget) {
  validate_rank(n);
  if (max_len < 0) throw misuse_error("maximum image length must be non-negative");
  if (is_trivial(id)) return std::nullopt;
  std::vector<Word> candidates{Word{}};
  for (int len = 1; len <= max_len; ++len)
    detail::for_each_word(n, len, [&](const Word& w) { candidates.push_back(w); });
  std::uint64_t total = detail::saturating_pow(candidates.size(), id.num_vars, step_budget);
  if (total > step_budget) throw budget_error("assignment space exceeds the step budget");

  std::vector<std::size_t> pick(static_cast<std::size_t>(id.num_vars), 0);
  Assignment asg(static_cast<std::size_t>(id.num_vars));
  for (std::uint64_t t = 0; t < total; ++t) {
    for (std::size_t v = 0; v < asg.size(); ++v) asg[v] = candidates[pick[v]];
    Word su = substitute(id.lhs, asg);
    Word sv = substitute(id.rhs, asg);
    if (!equiv(su, sv, n)) return FalsifyResult{asg, std::move(su), std::move(sv)};
    for (std::size_t v = asg.size(); v-- > 0;) {
      if (++pick[v] < candidates.size()) break;
      pick[v] = 0;
    }
  }
  return std::nullopt;
}

// Unbalanced identities always fail: mapping every variable to 1, with one
// unevenly used variable mapped to 11 when the raw lengths tie, makes the two
// images differ in length.
inline FalsifyResult falsify_unbalanced(const Identity& id) {
  if (is_balanced(id)) throw misuse_error("identity is balanced");
  Assignment asg(static_cast<std::size_t>(id.num_vars), Word{1});
  if (id.lhs.size() == id.rhs.size()) {
    Content cl = content(id.lhs);
    Content cr = content(id.rhs);
    for (Letter v = 1; v <= id.num_vars; ++v) {
      auto count = [&](const Content& c) {
        auto it = c.find(v);
        return it == c.end() ? 0 : it->second;
      };
      if (count(cl) != count(cr)) {
        asg[static_cast<std::size_t>(v) - 1] = Word{1, 1};
        break;
      }
    }
  }
  FalsifyResult out{asg, substitute(id.lhs, asg), substitute(id.rhs, asg)};
  if (out.lhs_image.size() == out.rhs_image.size())
    throw error("falsify_unbalanced: constructive assignment failed to separate the sides");
  return out;
}

namespace detail {

// Renames variables of a.b by first occurrence, applied to both parts.
inline std::pair<Word, Word> renumber_sides(const Word& a, const Word& b) {
  std::map<Letter, Letter> rename;
  Letter next = 1;
  auto apply = [&](const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter v : w) {
      auto [it, fresh] = rename.emplace(v, next);
      if (fresh) ++next;
      out.push_back(it->second);
    }
    return out;
  };
  Word ra = apply(a);
  Word rb = apply(b);
  return {std::move(ra), std::move(rb)};
}

// Enumerates canonical identities, one per class under variable renaming and
// side swap: u.v is a restricted-growth string, sides non-empty with lengths
// in [1, side_limit], u != v, and (u, v) not larger than its swapped form.
template <typename Fn>
void for_each_identity(int side_limit, int max_vars, Fn&& fn) {
  for (int total = 2; total <= 2 * side_limit; ++total) {
    Word pattern(static_cast<std::size_t>(total));
    auto fill = [&](auto&& self, int pos, int used) -> void {
      if (pos == total) {
        for (int cut = std::max(1, total - side_limit); cut <= std::min(side_limit, total - 1);
             ++cut) {
          Word u(pattern.begin(), pattern.begin() + cut);
          Word v(pattern.begin() + cut, pattern.end());
          if (u == v) continue;
          auto swapped = renumber_sides(v, u);
          if (std::pair(u, v) > swapped) continue;
          fn(Identity{std::move(u), std::move(v), used});
        }
        return;
      }
      int top = std::min(used + 1, max_vars);
      for (int v = 1; v <= top; ++v) {
        pattern[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1, std::max(used, v));
      }
    };
    fill(fill, 0, 0);
  }
}

}  // namespace detail

struct UnbalancedSweep {
  int side_limit = 0;
  int max_vars = 0;
  std::uint64_t checked = 0;
  std::vector<Identity> failures;  // constructive assignment failed to separate

  bool ok() const { return failures.empty(); }
};

// Every unbalanced identity within the bounds must fall to the constructive
// assignment; the images then differ in length, so they differ at every rank.
inline UnbalancedSweep unbalanced_sweep(int side_limit, int max_vars,
                                        std::uint64_t step_budget = kDefaultStepBudget) {
  if (side_limit < 1 || max_vars < 1) throw misuse_error("bounds must be positive");
  UnbalancedSweep sweep{side_limit, max_vars, 0, {}};
  detail::for_each_identity(side_limit, max_vars, [&](const Identity& id) {
    if (is_balanced(id)) return;
    if (++sweep.checked > step_budget) throw budget_error("identity sweep exceeds the step budget");
    FalsifyResult r = falsify_unbalanced(id);
    if (equiv(r.lhs_image, r.rhs_image, 1)) sweep.failures.push_back(id);
  });
  return sweep;
}

struct MinLengthEntry {
  Identity id;
  std::string display;
  bool balanced = false;
  std::optional<FalsifyResult> witness;
  int search_len = 0;  // 0 = constructive, else the image length that sufficed
};

struct MinLengthReport {
  int rank = 0;
  int side_limit = 0;
  int fallback_len = 0;
  std::size_t balanced = 0;
  std::size_t falsified = 0;
  std::vector<MinLengthEntry> entries;
  std::vector<std::size_t> unfalsified;  // indices into entries

  bool ok() const { return unfalsified.empty(); }
};

// No non-trivial identity with sides of length < n holds at rank n. Unbalanced
// identities fall constructively; balanced ones are searched with single
// letters first, then images up to fallback_len (some need two-letter images:
// abba = baab survives every single-letter substitution at every rank).
inline MinLengthReport min_length_check(int n, int fallback_len = 3,
                                        std::uint64_t step_budget = kDefaultStepBudget) {
  validate_rank(n);
  if (fallback_len < 1) throw misuse_error("fallback length must be positive");
  MinLengthReport report;
  report.rank = n;
  report.side_limit = n - 1;
  report.fallback_len = fallback_len;
  if (n < 2) return report;
  detail::for_each_identity(n - 1, 2 * (n - 1), [&](const Identity& id) {
    MinLengthEntry entry;
    entry.id = id;
    entry.display = identity_to_string(id);
    entry.balanced = is_balanced(id);
    if (!entry.balanced) {
      entry.witness = falsify_unbalanced(id);
      entry.search_len = 0;
      ++report.falsified;
    } else {
      ++report.balanced;
      for (int len = 1; len <= fallback_len && !entry.witness; ++len) {
        entry.witness = falsify(id, n, len, step_budget);
        entry.search_len = len;
      }
      if (entry.witness) ++report.falsified;
    }
    if (!entry.witness) report.unfalsified.push_back(report.entries.size());
    report.entries.push_back(std::move(entry));
  });
  return report;
}

}  // namespace grammic

#endif  // GRAMMIC_IDENTITIES_HPP_
