#pragma once

#include <optional>

#include "concavity/errors.hpp"

namespace concavity {

/// Outcome of a radius search. When `converged` is false, `failure` says why
/// and `value` holds the ceiling (or 0 when the search could not start).
struct RadiusResult {
  double value = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  std::optional<ErrorKind> failure;
};

}  // namespace concavity
