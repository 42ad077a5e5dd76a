#pragma once

#include <stdexcept>

namespace nlsdefect {

/// A parameter lies outside a family's existence window
/// (e.g. omega <= alpha^2/4 for the delta branch).
struct ThresholdError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Adaptive quadrature could not reach the requested tolerance.
struct ToleranceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A limit was requested for a family/limit pair that has no defined target.
struct UndefinedLimitError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace nlsdefect
