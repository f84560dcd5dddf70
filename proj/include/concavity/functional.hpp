#pragma once

#include "concavity/function_spec.hpp"

namespace concavity {

/// The parameter A of the concave class Co(A), 1 < A <= 2.
class ConcavityParam {
 public:
  explicit ConcavityParam(double a);
  double value() const { return a_; }

 private:
  double a_;
};

/// Location of the simple pole for the meromorphic class A(p), 0 < p < 1.
class PoleParam {
 public:
  explicit PoleParam(double p);
  double value() const { return p_; }

 private:
  double p_;
};

/// z f''(z) / f'(z). Throws NearPole when f' vanishes at z.
Complex pre_schwarzian_term(const Jet2& jet, Complex z);

/// T_f(z) = 2/(A-1) [ (A+1)/2 (1+z)/(1-z) - 1 - z f''/f' ].
/// Evaluated as 1 + ((A+1)(w - 1) - 2 z f''/f') / (A-1) with w = (1+z)/(1-z),
/// which makes T_f(0) = 1 exact in floating point.
Complex eval_Tf(const FunctionSpec& f, ConcavityParam A, Complex z);

/// P_f(z) = -(1 + z f''/f' + (z+p)/(z-p) - (1+pz)/(1-pz)).
/// Throws NearPole at z = p; use limit_Pf_at_pole there.
Complex eval_Pf(const FunctionSpec& f, PoleParam p, Complex z);

struct PoleLimit {
  Complex value;
  double error_estimate = 0.0;
};

/// Limit of P_f along z = p(1 - 10^-k), k = 3..8, sharpened by Richardson
/// extrapolation. Throws NoConvergence when no two successive extrapolants
/// agree to 1e-6, which is what happens when f has no pole at p.
PoleLimit limit_Pf_at_pole(const FunctionSpec& f, PoleParam p);

/// k_p(z) = -p z / ((z - p)(1 - p z)).
Complex eval_kp(PoleParam p, Complex z);

}  // namespace concavity
