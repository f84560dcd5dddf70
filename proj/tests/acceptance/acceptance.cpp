// One line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "concavity/errors.hpp"
#include "concavity/functional.hpp"
#include "concavity/phi.hpp"
#include "concavity/scan.hpp"
#include "concavity/witness.hpp"

using namespace concavity;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

double best_runtime(const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < 5; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

Outcome closed_form_roots() {
  const double koebe = 7.0 - 4.0 * std::sqrt(3.0), kab = 5.0 - 2.0 * std::sqrt(6.0);
  double r1 = 0.0, r2 = 0.0;
  const double t1 = best_runtime([&] { r1 = least_root(Phi1{1, 2.0}).value; });
  const double t2 = best_runtime([&] { r2 = least_root(Phi2{0.0, 2.0, 2.0}).value; });
  const double e = std::max(std::abs(r1 - koebe), std::abs(r2 - kab));
  return {e <= 1e-10 && t1 < 1e-3 && t2 < 1e-3, fmt("max error %.2e, runtimes %.2e s and %.2e s", e, t1, t2)};
}

Outcome class_coincidence() {
  double worst = 0.0;
  for (double A : {1.1, 1.25, 1.5, 1.75, 2.0})
    worst = std::max(worst, std::abs(least_root(Phi3{1.0, A}).value - least_root(Phi1{1, A}).value));
  return {worst <= 1e-10, fmt("max |Phi3 root - Phi1 root| = %.2e", worst)};
}

Outcome endpoint_identities() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double A = 2.0 - u(rng) * (1.0 - 1e-9);
    const double alpha = 0.999 * u(rng), beta = alpha + 4.0 * u(rng), b3 = 1.0 - u(rng) * (1.0 - 1e-9);
    worst = std::max(worst, std::abs(eval_phi(Phi2{alpha, beta, A}, 1.0) + 4.0 * beta));
    worst = std::max(worst, std::abs(eval_phi(Phi4{alpha, A}, 1.0) - (-8 * alpha * alpha - 4 * alpha + 4)));
    worst = std::max(worst, std::abs(eval_phi(Phi3{b3, A}, 0.0) - (A - 1.0)));
    worst = std::max(worst, std::abs(eval_phi(Phi6{A}, 0.0) - (A - 1.0)));
  }
  return {worst <= 1e-12, fmt("max deviation %.2e over 10000 random parameter sets", worst)};
}

Outcome sharpness_n1() {
  double worst = 0.0;
  const FunctionSpec f = CatalogFunction{RotatedKoebe{}};
  for (double A : {1.25, 1.5, 2.0}) {
    EmpiricalRadiusOptions o;
    o.samples = 2048;
    const auto e = empirical_concavity_radius(f, ConcavityParam(A), 1e-9, o);
    if (!e.radius.converged) return {false, fmt("empirical radius did not converge at A = %.2f", A)};
    worst = std::max(worst, std::abs(e.radius.value - least_root(Phi1{1, A}).value));
  }
  const double at2 = std::abs(least_root(Phi1{1, 2.0}).value - (7.0 - 4.0 * std::sqrt(3.0)));
  return {worst <= 1e-6 && at2 <= 1e-10, fmt("max |empirical - solver| = %.2e", worst)};
}

Outcome phi6_bracket() {
  const double root = least_root(Phi6{2.0}).value;
  const double lo = eval_phi(Phi6{2.0}, 0.06), hi = eval_phi(Phi6{2.0}, 0.07);
  return {root > 0.06 && root < 0.07 && lo > 0.0 && hi < 0.0,
          fmt("root %.10f, Phi6(0.06) = %.4f, Phi6(0.07) = %.4f", root, lo, hi)};
}

Outcome lemma_suites() {
  ViolationSummary total;
  int configs = 0;
  for (int n : {1, 2, 3}) {
    for (auto [A, B] : {std::pair{1.0, -1.0}, std::pair{0.5, -0.5}, std::pair{1.0, 0.0}, std::pair{0.2, -0.8}}) {
      total.merge(run_lemma_suite(n, A, B, 1000, 100 + static_cast<std::uint64_t>(configs)));
      ++configs;
    }
  }
  // Distortion bound for f = z h with h in P.
  WitnessGenerator gen(99);
  for (int i = 0; i < 1000; ++i) {
    const FunctionSpec f = CloseToStarWitness{gen.witness(1.0, -1.0, 1)};
    for (double r : {0.1, 0.2, 0.3, 0.4}) total.record(close_to_star_distortion_violation(f, r, 256), kViolationTolerance);
  }
  ++configs;
  return {total.violations == 0,
          fmt("%.0f checks over %.0f configurations, max violation %.2e", static_cast<double>(total.checks), configs,
              total.max_violation)};
}

Outcome lower_bound_property() {
  double margin = 1e300;
  int failures = 0;
  long violations = 0;
  for (int n : {1, 2, 3}) {
    const auto s = run_witness_test(WitnessClass::S0n, n, 200, 500 + static_cast<std::uint64_t>(n), 2.0);
    margin = std::min(margin, s.min_margin);
    failures += s.margin_failures;
    violations += s.lemmas.violations;
  }
  return {failures == 0 && margin >= -1e-6 && violations == 0,
          fmt("600 witnesses, min margin %.3e, %.0f below bound", margin, failures)};
}

Outcome functional_identities() {
  const std::vector<FunctionSpec> fs{
      SeriesFunction::identity(),         CatalogFunction{GeneralizedKoebe{1}},   CatalogFunction{GeneralizedKoebe{2}},
      CatalogFunction{GeneralizedKoebe{3}}, CatalogFunction{RotatedKoebe{}},      CatalogFunction{PowerDistortion{0, 2}},
      CatalogFunction{PowerDistortion{0.4, 1.3}}, CatalogFunction{Schild{0.3, -1}}, CatalogFunction{Schild{0.6, 0.2}},
      CatalogFunction{CloseToStarExtremal{}}};
  double worst = 0.0;
  for (const auto& f : fs)
    for (double A : {1.1, 1.5, 2.0}) worst = std::max(worst, std::abs(eval_Tf(f, ConcavityParam(A), 0.0) - 1.0));
  double pole = 0.0;
  for (double p : {0.2, 0.5, 0.8}) {
    const FunctionSpec kp = CatalogFunction{MeromorphicKp{p}};
    worst = std::max(worst, std::abs(eval_Pf(kp, PoleParam(p), 0.0) - 1.0));
    pole = std::max(pole, std::abs(limit_Pf_at_pole(kp, PoleParam(p)).value - (1 + p * p) / (1 - p * p)));
  }
  return {worst <= 1e-14 && pole <= 1e-6, fmt("max |T(0) - 1|, |P(0) - 1| = %.2e, pole limit error %.2e", worst, pole)};
}

Outcome differentiation() {
  const std::vector<CatalogFunction> suite{GeneralizedKoebe{1}, GeneralizedKoebe{3}, RotatedKoebe{},
                                           PowerDistortion{0.5, 2.5}, Monomial{1.0, 2}, Schild{0.4, -1.0},
                                           Schild{0.2, 0.5}, CloseToStarExtremal{}, MeromorphicKp{0.5}};
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto rel = [](Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1.0); };
  const double h = 1e-5;
  double worst = 0.0;
  for (const auto& c : suite) {
    int done = 0;
    while (done < 200) {
      const Complex z = std::polar(0.8 * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
      if (const auto* m = std::get_if<MeromorphicKp>(&c); m && std::abs(z - m->p) < 0.1) continue;
      ++done;
      const Jet2 j = eval_catalog(c, z);
      for (Complex step : {Complex(h, 0.0), Complex(0.0, h)}) {
        const Complex df = (eval_catalog(c, z + step).f - eval_catalog(c, z - step).f) / (2.0 * step);
        const Complex d2f = (eval_catalog(c, z + step).df - eval_catalog(c, z - step).df) / (2.0 * step);
        worst = std::max({worst, rel(j.df, df), rel(j.d2f, d2f)});
      }
    }
  }
  return {worst <= 1e-6, fmt("max relative error %.2e over 9 variants x 200 points", worst)};
}

Outcome convexity_formula() {
  const double a = std::abs(radius_of_convexity(1, 0.0) - (2.0 - std::sqrt(3.0)));
  const double b = std::abs(radius_of_convexity(1, 0.5) - (2.0 - std::sqrt(3.25)) / 1.5);
  return {a <= 1e-12 && b <= 1e-12, fmt("errors %.2e and %.2e", a, b)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"closed-form roots", closed_form_roots},
      {"class coincidence", class_coincidence},
      {"endpoint identities", endpoint_identities},
      {"sharpness for n = 1", sharpness_n1},
      {"Phi6 bracket", phi6_bracket},
      {"lemma suites", lemma_suites},
      {"lower-bound property", lower_bound_property},
      {"functional identities", functional_identities},
      {"differentiation soundness", differentiation},
      {"convexity radius formula", convexity_formula},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %zu: %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
