#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "concavity/function_spec.hpp"
#include "concavity/functional.hpp"

namespace concavity {

// Numerical checks of the coefficient-body lemmas on explicit members of the
// classes. Every *_violation function returns max(lhs - rhs) over the samples,
// so a valid inequality gives a value <= 0 up to rounding.

/// Lemma A: |p(z) - (1 - A B r^2n)/(1 - B^2 r^2n)| <= (A - B) r^n / (1 - B^2 r^2n).
double lemmaA_violation(const WitnessP& witness, int n, double r, int samples);

/// Lemma B: |z p'(z) / p(z)| <= 2 n r^n / (1 - r^2n). Requires A = 1, B = -1.
double lemmaB_violation(const WitnessP& witness, int n, double r, int samples);

/// |omega'(z)| (1 - |z|^2) - (1 - |omega(z)|^2); Schwarz-Pick says <= 0.
double schwarz_pick_violation(const SchwarzFunction& w, Complex z);

/// (1 - 2r - r^2)/(1 - r^2) - |z f'(z) / f(z)| maximized over |z| = r, for f
/// with Re(f/z) > 0. Requires 0 < r < sqrt(2) - 1.
double close_to_star_distortion_violation(const FunctionSpec& f, double r, int samples);

/// Largest order accepted by starlike_from_p.
inline constexpr int kMaxStarlikeOrder = 128;

/// Solves z f'/f = p for f: f = z exp(sum_k c_k z^k / k), truncated to
/// order N = p_minus_one.size() - 1. `p_minus_one` holds c_0..c_N with c_0 = 0.
/// Throws TruncationOverflow if z f'/f recomputed from the truncated f drifts
/// from p by more than 1e-6 on |z| = 0.5.
SeriesFunction starlike_from_p(std::span<const Complex> p_minus_one);

/// Seeded generator of random Schwarz functions: up to four Blaschke zeros
/// uniform in |a| <= 0.9, a uniform rotation, and zero order n or n + 1.
class WitnessGenerator {
 public:
  explicit WitnessGenerator(std::uint64_t seed) : rng_(seed) {}

  SchwarzFunction schwarz(int min_zero_order);
  WitnessP witness(double a_param, double b_param, int n) { return {a_param, b_param, schwarz(n)}; }
  /// Uniform point in |z| <= radius.
  Complex point_in_disk(double radius);

 private:
  std::mt19937_64 rng_;
};

enum class WitnessClass { S0n, CloseToStar };

struct ViolationSummary {
  long checks = 0;
  long violations = 0;
  double max_violation = -1e300;

  void record(double v, double tolerance);
  void merge(const ViolationSummary& other);
};

inline constexpr double kViolationTolerance = 1e-9;

/// Lemma A (and Lemma B when A = 1, B = -1) at r in {0.25, 0.5, 0.75, 0.9},
/// plus Schwarz-Pick at random points, over `count` seeded witnesses of P_n[A, B].
ViolationSummary run_lemma_suite(int n, double a_param, double b_param, int count, std::uint64_t seed,
                                 int samples = 256);

struct WitnessTestSummary {
  WitnessClass cls = WitnessClass::S0n;
  int n = 1;
  int count = 0;
  std::uint64_t seed = 0;
  double A = 2.0;
  double solver_radius = 0.0;
  ViolationSummary lemmas;
  /// Smallest empirical radius minus solver radius over the witnesses.
  double min_margin = 1e300;
  int margin_failures = 0;

  bool passed() const { return lemmas.violations == 0 && min_margin >= -1e-6; }
};

/// Builds `count` seeded members of the class, checks the lemma inequalities on
/// each, and compares each member's empirical concavity radius with the
/// solver radius for the class. Deterministic for a fixed seed regardless of
/// `threads` (0 picks the hardware concurrency).
WitnessTestSummary run_witness_test(WitnessClass cls, int n, int count, std::uint64_t seed, double A,
                                    int threads = 0);

std::string to_string(WitnessClass cls);

}  // namespace concavity
