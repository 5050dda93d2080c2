#ifndef GRAMMIC_ERRORS_HPP_
#define GRAMMIC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace grammic {

// Base class for all errors thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A letter interval [lo, hi] with lo > hi.
struct invalid_interval_error : error {
  using error::error;
};

// A letter exceeds the rank it is being used with.
struct rank_error : error {
  using error::error;
};

// A word that must be standard (a permutation of [k]) is not.
struct not_standard_error : error {
  using error::error;
};

// An operation defined only on non-empty words received the empty word.
struct empty_word_error : error {
  using error::error;
};

// Matrix dimensions do not agree.
struct dimension_error : error {
  using error::error;
};

// The estimated cost of an exhaustive operation exceeds its budget.
struct budget_error : error {
  using error::error;
};

// The hypothesis of a conditional statement does not hold, so the
// conclusion is not asserted ("not applicable" rather than "false").
struct hypothesis_error : error {
  using error::error;
};

// A declared precondition on the inputs fails.
struct precondition_error : error {
  using error::error;
};

// The caller used an operation outside its documented domain.
struct misuse_error : error {
  using error::error;
};

}  // namespace grammic

#endif  // GRAMMIC_ERRORS_HPP_
