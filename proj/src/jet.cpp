#include "concavity/jet.hpp"

#include <cmath>
#include <sstream>

namespace concavity {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NearPole: return "NearPole";
    case ErrorKind::BranchCut: return "BranchCut";
    case ErrorKind::OutsideValidityDisk: return "OutsideValidityDisk";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NoRoot: return "NoRoot";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::TruncationOverflow: return "TruncationOverflow";
  }
  return "Unknown";
}

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

// Chain rule for g(a(z)) given g, g', g'' at a.f.
Jet2 compose(const Jet2& a, Complex g, Complex dg, Complex d2g) {
  return {g, dg * a.df, d2g * a.df * a.df + dg * a.d2f};
}

}  // namespace

bool Jet2::finite() const { return concavity::finite(f) && concavity::finite(df) && concavity::finite(d2f); }

Jet2 jet_multiply(const Jet2& a, const Jet2& b) {
  return {a.f * b.f, a.df * b.f + a.f * b.df, a.d2f * b.f + 2.0 * a.df * b.df + a.f * b.d2f};
}

Jet2 jet_divide(const Jet2& a, const Jet2& b) {
  if (!(std::abs(b.f) > divide_tolerance(a))) {
    std::ostringstream msg;
    msg << "denominator " << b.f << " vanishes";
    throw Error(ErrorKind::NearPole, msg.str());
  }
  // q = a/b, a = q b  =>  q' = (a' - q b')/b,  q'' = (a'' - 2 q' b' - q b'')/b
  const Complex q = a.f / b.f;
  const Complex dq = (a.df - q * b.df) / b.f;
  const Complex d2q = (a.d2f - 2.0 * dq * b.df - q * b.d2f) / b.f;
  return {q, dq, d2q};
}

Jet2 jet_power_real(const Jet2& a, double exponent) {
  if (exponent == 0.0) return Jet2::constant(1.0);
  if (std::abs(a.f) == 0.0 || (a.f.real() <= 0.0 && std::abs(a.f.imag()) <= kBranchCutTolerance)) {
    std::ostringstream msg;
    msg << "base " << a.f << " lies on the principal branch cut";
    throw Error(ErrorKind::BranchCut, msg.str());
  }
  const Complex g = std::pow(a.f, exponent);
  const Complex dg = exponent * g / a.f;
  const Complex d2g = (exponent - 1.0) * dg / a.f;
  return compose(a, g, dg, d2g);
}

Jet2 jet_power_int(const Jet2& a, int exponent) {
  if (exponent < 0) return jet_divide(Jet2::constant(1.0), jet_power_int(a, -exponent));
  Jet2 result = Jet2::constant(1.0);
  Jet2 base = a;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result = jet_multiply(result, base);
    if (e > 1) base = jet_multiply(base, base);
  }
  return result;
}

Jet2 jet_exp(const Jet2& a) {
  const Complex g = std::exp(a.f);
  return compose(a, g, g, g);
}

Jet2 jet_log(const Jet2& a) {
  if (std::abs(a.f) == 0.0 || (a.f.real() <= 0.0 && std::abs(a.f.imag()) <= kBranchCutTolerance)) {
    std::ostringstream msg;
    msg << "log argument " << a.f << " lies on the principal branch cut";
    throw Error(ErrorKind::BranchCut, msg.str());
  }
  const Complex inv = 1.0 / a.f;
  return compose(a, std::log(a.f), inv, -inv * inv);
}

}  // namespace concavity
