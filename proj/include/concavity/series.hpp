#pragma once

#include <span>
#include <vector>

#include "concavity/jet.hpp"

namespace concavity {

inline constexpr int kDefaultTruncationOrder = 64;
/// Series are only evaluated inside this radius by default. Truncation error
/// grows without bound as |z| approaches 1, so raising it trades accuracy
/// for reach.
inline constexpr double kDefaultEvaluationRadius = 0.95;

/// Truncated power series f(z) = z + a_2 z^2 + ... + a_N z^N, normalized
/// so that f(0) = 0 and f'(0) = 1.
class SeriesFunction {
 public:
  /// `coefficients` holds a_1..a_N; a_1 must equal 1 and N >= 2.
  explicit SeriesFunction(std::vector<Complex> coefficients,
                          double evaluation_radius = kDefaultEvaluationRadius);

  static SeriesFunction identity(int order = 2);

  int order() const { return static_cast<int>(coefficients_.size()); }
  /// a_k for 1 <= k <= order().
  Complex coefficient(int k) const { return coefficients_[static_cast<std::size_t>(k - 1)]; }
  std::span<const Complex> coefficients() const { return coefficients_; }
  double evaluation_radius() const { return evaluation_radius_; }
  /// |a_N|, a crude indicator of how much the truncation discards.
  double tail_indicator() const { return std::abs(coefficients_.back()); }

 private:
  std::vector<Complex> coefficients_;
  double evaluation_radius_;
};

/// Horner evaluation of f, f', f'' together. Throws OutsideValidityDisk when
/// |z| exceeds the series' evaluation radius.
Jet2 eval_series(const SeriesFunction& s, Complex z);

/// Dense coefficient arithmetic on truncated series c_0 + c_1 z + ... + c_N z^N.
/// Results are truncated to the length of the first operand.
namespace power_series {

std::vector<Complex> multiply(std::span<const Complex> a, std::span<const Complex> b);
/// a / b; requires b[0] != 0.
std::vector<Complex> divide(std::span<const Complex> a, std::span<const Complex> b);
/// exp(g); g[0] must be zero.
std::vector<Complex> exp(std::span<const Complex> g);
Complex evaluate(std::span<const Complex> c, Complex z);

}  // namespace power_series

}  // namespace concavity
