#include "concavity/schwarz.hpp"

#include <cmath>

#include "concavity/series.hpp"

namespace concavity {

void validate(const SchwarzFunction& w) {
  if (w.zero_order < 1) throw Error(ErrorKind::InvalidArgument, "Schwarz function must vanish at 0");
  for (const auto& a : w.blaschke_zeros)
    if (!(std::abs(a) < 1.0))
      throw Error(ErrorKind::InvalidArgument, "Blaschke zeros must lie in the open unit disk");
  if (!std::isfinite(w.rotation)) throw Error(ErrorKind::InvalidArgument, "rotation must be finite");
}

Jet2 eval_schwarz(const SchwarzFunction& w, Complex z) {
  const Jet2 Z = Jet2::variable(z);
  Jet2 out = std::polar(1.0, w.rotation) * jet_power_int(Z, w.zero_order);
  for (const auto& a : w.blaschke_zeros) out = out * ((Z - a) / (1.0 - std::conj(a) * Z));
  return out;
}

std::vector<Complex> schwarz_taylor(const SchwarzFunction& w, int order) {
  const auto len = static_cast<std::size_t>(order + 1);
  std::vector<Complex> out(len, 0.0);
  if (w.zero_order <= order) out[static_cast<std::size_t>(w.zero_order)] = std::polar(1.0, w.rotation);
  for (const auto& a : w.blaschke_zeros) {
    // (z - a) / (1 - conj(a) z) = (z - a) sum_k (conj(a) z)^k
    std::vector<Complex> factor(len, 0.0);
    Complex pw = 1.0;  // conj(a)^k
    for (std::size_t k = 0; k < len; ++k) {
      factor[k] -= a * pw;
      if (k + 1 < len) factor[k + 1] += pw;
      pw *= std::conj(a);
    }
    out = power_series::multiply(out, factor);
  }
  return out;
}

void validate(const WitnessP& w) {
  validate(w.schwarz);
  if (!(-1.0 <= w.b_param && w.b_param < w.a_param && w.a_param <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "witness requires -1 <= B < A <= 1");
}

Jet2 make_p(const WitnessP& witness, int n, Complex z) {
  if (witness.schwarz.zero_order < n)
    throw Error(ErrorKind::InvalidArgument, "Schwarz function must vanish to order >= n");
  const Jet2 omega = eval_schwarz(witness.schwarz, z);
  return (1.0 + witness.a_param * omega) / (1.0 + witness.b_param * omega);
}

std::vector<Complex> p_minus_one_taylor(const WitnessP& witness, int order) {
  // p - 1 = (A - B) omega / (1 + B omega)
  const auto omega = schwarz_taylor(witness.schwarz, order);
  std::vector<Complex> num(omega.size()), den(omega.size());
  for (std::size_t k = 0; k < omega.size(); ++k) {
    num[k] = (witness.a_param - witness.b_param) * omega[k];
    den[k] = witness.b_param * omega[k];
  }
  den[0] += 1.0;
  return power_series::divide(num, den);
}

}  // namespace concavity
