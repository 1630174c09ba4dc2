#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acq {

enum class ErrorKind {
  kInvalidSubset,
  kInvalidStructure,
  kInvalidProbability,
  kInvalidUniformity,
  kIndexOutOfRange,
  kInvalidDelta,
  kInvalidSpine,
  kInvalidArity,
  kNotAMatching,
  kIllegalSwap,
  kSizeMismatch,
  kNotATree,
  kInvalidTree,
  kNotDivisible,
  kInvalidTarget,
  kStructuralAssumptionViolated,
  kPathUnavailable,
  kUnacquaintable,
  kSearchBudgetExceeded,
  kCapacityExceeded,
  kParse,
  kConfig,
  kIo,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; `kind()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace acq
