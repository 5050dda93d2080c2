// Runs every acceptance property once and prints one line per criterion.
// Exit status is the number of failed criteria.

#include <cstdio>
#include <cstdlib>

#include "grammic/grammic.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 3212;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

  std::vector<grammic::CriterionResult> results = grammic::run_all_criteria(seed);
  int failures = 0;
  for (const grammic::CriterionResult& r : results) {
    if (!r.passed) ++failures;
    std::printf("%s %-22s (%6.2fs) %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", results.size() - failures, results.size());
  return failures;
}
