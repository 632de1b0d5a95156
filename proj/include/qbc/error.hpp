#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qbc {

enum class ErrorCode {
  kIndexOutOfRange,
  kDimensionMismatch,
  kInvalidType,
  kPositionOutOfRange,
  kEqualLetters,
  kAdjacentLetters,
  kPatternMismatch,
  kEmptyInterval,
  kNotIBox,
  kNotMovable,
  kNotCommuting,
  kHypothesisViolated,
  kRangeMismatch,
  kFrozenIndex,
  kIncompatible,
  kInexactDivision,
  kShapeMismatch,
  kDegenerateBox,
  kNegativeExponent,
  kChainConstruction,
  kOverflow,
};

std::string_view error_code_name(ErrorCode code);

// Single exception type for every precondition violation in the library.
// Callers that need to distinguish failure modes switch on code().
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw AlgebraError(code, what);
}

}  // namespace qbc
