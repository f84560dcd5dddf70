#pragma once

#include <complex>

#include "concavity/errors.hpp"

namespace concavity {

using Complex = std::complex<double>;

/// Value, first and second complex derivative of an analytic function at a
/// point. Arithmetic on jets propagates derivatives by the Leibniz and chain
/// rules truncated at order two, so composing jets of elementary pieces gives
/// the jet of the composite.
struct Jet2 {
  Complex f{};
  Complex df{};
  Complex d2f{};

  static constexpr Jet2 constant(Complex c) { return {c, 0.0, 0.0}; }
  /// The jet of the identity map at z.
  static constexpr Jet2 variable(Complex z) { return {z, 1.0, 0.0}; }

  bool finite() const;
};

/// Quotient threshold: |b.f| must exceed this for a / b to be evaluated.
inline double divide_tolerance(const Jet2& numerator) {
  return 1e-14 * (1.0 + std::abs(numerator.f));
}

/// Distance from the negative real axis below which real powers and logs
/// refuse to pick a side of the principal branch cut.
inline constexpr double kBranchCutTolerance = 1e-12;

Jet2 jet_multiply(const Jet2& a, const Jet2& b);
/// Throws Error(NearPole) when |b.f| <= divide_tolerance(a).
Jet2 jet_divide(const Jet2& a, const Jet2& b);
/// Principal branch a^exponent. Throws Error(BranchCut) on or within
/// kBranchCutTolerance of (-inf, 0].
Jet2 jet_power_real(const Jet2& a, double exponent);
Jet2 jet_power_int(const Jet2& a, int exponent);
Jet2 jet_exp(const Jet2& a);
Jet2 jet_log(const Jet2& a);

inline Jet2 operator+(const Jet2& a, const Jet2& b) { return {a.f + b.f, a.df + b.df, a.d2f + b.d2f}; }
inline Jet2 operator-(const Jet2& a, const Jet2& b) { return {a.f - b.f, a.df - b.df, a.d2f - b.d2f}; }
inline Jet2 operator-(const Jet2& a) { return {-a.f, -a.df, -a.d2f}; }
inline Jet2 operator+(const Jet2& a, Complex c) { return {a.f + c, a.df, a.d2f}; }
inline Jet2 operator+(Complex c, const Jet2& a) { return a + c; }
inline Jet2 operator-(const Jet2& a, Complex c) { return {a.f - c, a.df, a.d2f}; }
inline Jet2 operator-(Complex c, const Jet2& a) { return {c - a.f, -a.df, -a.d2f}; }
inline Jet2 operator*(const Jet2& a, Complex c) { return {a.f * c, a.df * c, a.d2f * c}; }
inline Jet2 operator*(Complex c, const Jet2& a) { return a * c; }
inline Jet2 operator*(const Jet2& a, const Jet2& b) { return jet_multiply(a, b); }
inline Jet2 operator/(const Jet2& a, const Jet2& b) { return jet_divide(a, b); }
inline Jet2 operator/(const Jet2& a, Complex c) { return jet_divide(a, Jet2::constant(c)); }
inline Jet2 operator/(Complex c, const Jet2& b) { return jet_divide(Jet2::constant(c), b); }

}  // namespace concavity
