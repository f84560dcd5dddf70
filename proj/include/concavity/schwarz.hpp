#pragma once

#include <vector>

#include "concavity/jet.hpp"

namespace concavity {

/// omega(z) = e^{i rotation} z^m prod_i (z - a_i) / (1 - conj(a_i) z): a finite
/// Blaschke product, so omega(0) = 0 and |omega| < 1 on the open disk.
struct SchwarzFunction {
  int zero_order = 1;
  std::vector<Complex> blaschke_zeros;
  double rotation = 0.0;

  static SchwarzFunction identity() { return {}; }
  static SchwarzFunction monomial(int m, double rotation = 0.0) { return {m, {}, rotation}; }
};

void validate(const SchwarzFunction& w);

Jet2 eval_schwarz(const SchwarzFunction& w, Complex z);

/// Taylor coefficients c_0..c_order of omega about 0.
std::vector<Complex> schwarz_taylor(const SchwarzFunction& w, int order);

/// p = (1 + A omega) / (1 + B omega) with -1 <= B < A <= 1, a member of
/// P_n[A, B] whenever omega vanishes to order >= n.
struct WitnessP {
  double a_param = 1.0;
  double b_param = -1.0;
  SchwarzFunction schwarz;
};

void validate(const WitnessP& w);

/// Jet of p at z. Throws InvalidArgument if the Schwarz function vanishes to
/// an order below n.
Jet2 make_p(const WitnessP& witness, int n, Complex z);

/// Taylor coefficients of p - 1 up to `order` (constant term is zero).
std::vector<Complex> p_minus_one_taylor(const WitnessP& witness, int order);

}  // namespace concavity
