#include "concavity/functional.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace concavity {

namespace {

void require_in_disk(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !(std::abs(z) < 1.0)) {
    std::ostringstream msg;
    msg << "z = " << z << " is not in the open unit disk";
    throw Error(ErrorKind::OutOfDomain, msg.str());
  }
}

Complex checked_quotient(Complex num, Complex den, const char* what) {
  if (!(std::abs(den) > 1e-14 * (1.0 + std::abs(num)))) throw Error(ErrorKind::NearPole, what);
  return num / den;
}

}  // namespace

ConcavityParam::ConcavityParam(double a) : a_(a) {
  if (!(a > 1.0 && a <= 2.0)) {
    std::ostringstream msg;
    msg << "A = " << a << " must lie in (1, 2]";
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
}

PoleParam::PoleParam(double p) : p_(p) {
  if (!(p > 0.0 && p < 1.0)) {
    std::ostringstream msg;
    msg << "p = " << p << " must lie in (0, 1)";
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
}

Complex pre_schwarzian_term(const Jet2& jet, Complex z) {
  return z * checked_quotient(jet.d2f, jet.df, "f' vanishes");
}

Complex eval_Tf(const FunctionSpec& f, ConcavityParam A, Complex z) {
  require_in_disk(z);
  const double a = A.value();
  const Complex zf = pre_schwarzian_term(eval_function(f, z), z);
  const Complex w_minus_one = 2.0 * z / (1.0 - z);
  return 1.0 + ((a + 1.0) * w_minus_one - 2.0 * zf) / (a - 1.0);
}

Complex eval_Pf(const FunctionSpec& f, PoleParam p, Complex z) {
  require_in_disk(z);
  const double pv = p.value();
  const Complex zf = pre_schwarzian_term(eval_function(f, z), z);
  const Complex pole_term = checked_quotient(z + pv, z - pv, "z coincides with the pole p");
  const Complex mirror_term = (1.0 + pv * z) / (1.0 - pv * z);
  return -(1.0 + zf + pole_term - mirror_term);
}

PoleLimit limit_Pf_at_pole(const FunctionSpec& f, PoleParam p) {
  constexpr int kFirst = 3, kLast = 8;
  std::array<Complex, kLast - kFirst + 1> samples;
  for (int k = kFirst; k <= kLast; ++k)
    samples[k - kFirst] = eval_Pf(f, p, p.value() * (1.0 - std::pow(10.0, -k)));

  // P(p - h) = P(p) + O(h); step ratio 10 eliminates the linear term.
  std::array<Complex, samples.size() - 1> extrapolants;
  for (std::size_t i = 0; i < extrapolants.size(); ++i)
    extrapolants[i] = (10.0 * samples[i + 1] - samples[i]) / 9.0;

  PoleLimit best{extrapolants.back(), std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i + 1 < extrapolants.size(); ++i) {
    const double diff = std::abs(extrapolants[i + 1] - extrapolants[i]);
    if (diff < best.error_estimate) best = {extrapolants[i + 1], diff};
  }
  if (!(best.error_estimate <= 1e-6)) {
    std::ostringstream msg;
    msg << "extrapolants disagree by " << best.error_estimate << "; f has no simple pole at p?";
    throw Error(ErrorKind::NoConvergence, msg.str());
  }
  return best;
}

Complex eval_kp(PoleParam p, Complex z) {
  const double pv = p.value();
  const Complex den = (z - pv) * (1.0 - pv * z);
  return checked_quotient(-pv * z, den, "k_p has a pole at z = p or z = 1/p");
}

}  // namespace concavity
