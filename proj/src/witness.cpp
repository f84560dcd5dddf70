#include "concavity/witness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "concavity/phi.hpp"
#include "concavity/scan.hpp"

namespace concavity {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::array kLemmaRadii{0.25, 0.5, 0.75, 0.9};
constexpr std::array kDistortionRadii{0.1, 0.2, 0.3, 0.4};
constexpr int kSchwarzPickPoints = 16;
constexpr int kWitnessSeriesOrder = 64;

void require_radius(double r, double upper) {
  if (!(r > 0.0 && r < upper)) {
    std::ostringstream msg;
    msg << "radius " << r << " must lie in (0, " << upper << ")";
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
}

template <class F>
double max_over_circle(double r, int samples, F&& gap) {
  if (samples < 1) throw Error(ErrorKind::InvalidArgument, "need at least one sample");
  double worst = -1e300;
  for (int k = 0; k < samples; ++k) worst = std::max(worst, gap(std::polar(r, kTwoPi * k / samples)));
  return worst;
}

int hardware_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs body(i) for i in [0, count) on up to `threads` workers.
template <class Body>
void parallel_for(int count, int threads, Body&& body) {
  threads = std::clamp(threads <= 0 ? hardware_threads() : threads, 1, std::max(count, 1));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (int i = t; i < count; i += threads) body(i);
        } catch (...) {
          errors[static_cast<std::size_t>(t)] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

double lemmaA_violation(const WitnessP& witness, int n, double r, int samples) {
  require_radius(r, 1.0);
  const double A = witness.a_param, B = witness.b_param;
  const double r2n = std::pow(r, 2 * n);
  const double centre = (1.0 - A * B * r2n) / (1.0 - B * B * r2n);
  const double radius = (A - B) * std::pow(r, n) / (1.0 - B * B * r2n);
  return max_over_circle(r, samples,
                         [&](Complex z) { return std::abs(make_p(witness, n, z).f - centre) - radius; });
}

double lemmaB_violation(const WitnessP& witness, int n, double r, int samples) {
  require_radius(r, 1.0);
  if (witness.a_param != 1.0 || witness.b_param != -1.0)
    throw Error(ErrorKind::InvalidArgument, "Lemma B applies to P_n, i.e. A = 1, B = -1");
  const double rn = std::pow(r, n);
  const double bound = 2.0 * n * rn / (1.0 - rn * rn);
  return max_over_circle(r, samples, [&](Complex z) {
    const Jet2 p = make_p(witness, n, z);
    if (!(std::abs(p.f) > 1e-14)) throw Error(ErrorKind::NearPole, "p vanishes");
    return std::abs(z * p.df / p.f) - bound;
  });
}

double schwarz_pick_violation(const SchwarzFunction& w, Complex z) {
  if (!(std::abs(z) < 1.0)) throw Error(ErrorKind::OutOfDomain, "z must lie in the open unit disk");
  const Jet2 omega = eval_schwarz(w, z);
  return std::abs(omega.df) * (1.0 - std::norm(z)) - (1.0 - std::norm(omega.f));
}

double close_to_star_distortion_violation(const FunctionSpec& f, double r, int samples) {
  require_radius(r, std::numbers::sqrt2 - 1.0);
  const double bound = (1.0 - 2.0 * r - r * r) / (1.0 - r * r);
  return max_over_circle(r, samples, [&](Complex z) {
    const Jet2 jet = eval_function(f, z);
    if (!(std::abs(jet.f) > 1e-14)) throw Error(ErrorKind::NearPole, "f vanishes");
    return bound - std::abs(z * jet.df / jet.f);
  });
}

SeriesFunction starlike_from_p(std::span<const Complex> p_minus_one) {
  if (p_minus_one.size() < 2)
    throw Error(ErrorKind::InvalidArgument, "p series needs at least one nonconstant term");
  const int order = static_cast<int>(p_minus_one.size()) - 1;
  if (order > kMaxStarlikeOrder) throw Error(ErrorKind::InvalidArgument, "p series order exceeds 128");
  if (std::abs(p_minus_one[0]) > 1e-15)
    throw Error(ErrorKind::InvalidArgument, "p - 1 must have zero constant term");

  // log(f/z) = sum c_k z^k / k; f/z has coefficients a_1..a_N.
  std::vector<Complex> log_series(p_minus_one.size(), 0.0);
  for (int k = 1; k <= order; ++k) log_series[static_cast<std::size_t>(k)] = p_minus_one[static_cast<std::size_t>(k)] / static_cast<double>(k);
  auto f_over_z = power_series::exp(log_series);
  f_over_z.resize(static_cast<std::size_t>(order));
  f_over_z[0] = 1.0;
  SeriesFunction f(std::move(f_over_z));

  constexpr int kChecks = 16;
  double drift = 0.0;
  for (int k = 0; k < kChecks; ++k) {
    const Complex z = std::polar(0.5, kTwoPi * k / kChecks);
    const Jet2 jet = eval_series(f, z);
    const Complex p = 1.0 + power_series::evaluate(p_minus_one, z);
    drift = std::max(drift, std::abs(z * jet.df / jet.f - p));
  }
  if (!(drift <= 1e-6)) {
    std::ostringstream msg;
    msg << "z f'/f differs from p by " << drift << " on |z| = 0.5 at order " << order;
    throw Error(ErrorKind::TruncationOverflow, msg.str());
  }
  return f;
}

SchwarzFunction WitnessGenerator::schwarz(int min_zero_order) {
  std::bernoulli_distribution extra_order(0.25);
  std::uniform_int_distribution<int> zero_count(0, 4);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  SchwarzFunction w;
  w.zero_order = min_zero_order + (extra_order(rng_) ? 1 : 0);
  const int zeros = zero_count(rng_);
  for (int i = 0; i < zeros; ++i) w.blaschke_zeros.push_back(point_in_disk(0.9));
  w.rotation = angle(rng_);
  return w;
}

Complex WitnessGenerator::point_in_disk(double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double rho = radius * std::sqrt(unit(rng_));
  return std::polar(rho, kTwoPi * unit(rng_));
}

void ViolationSummary::record(double v, double tolerance) {
  ++checks;
  if (v > tolerance) ++violations;
  max_violation = std::max(max_violation, v);
}

void ViolationSummary::merge(const ViolationSummary& other) {
  checks += other.checks;
  violations += other.violations;
  max_violation = std::max(max_violation, other.max_violation);
}

ViolationSummary run_lemma_suite(int n, double a_param, double b_param, int count, std::uint64_t seed,
                                 int samples) {
  WitnessGenerator gen(seed);
  const bool lemma_b = a_param == 1.0 && b_param == -1.0;
  ViolationSummary summary;
  for (int i = 0; i < count; ++i) {
    const WitnessP w = gen.witness(a_param, b_param, n);
    validate(w);
    for (double r : kLemmaRadii) {
      summary.record(lemmaA_violation(w, n, r, samples), kViolationTolerance);
      if (lemma_b) summary.record(lemmaB_violation(w, n, r, samples), kViolationTolerance);
    }
    for (int k = 0; k < kSchwarzPickPoints; ++k)
      summary.record(schwarz_pick_violation(w.schwarz, gen.point_in_disk(0.99)), kViolationTolerance);
  }
  return summary;
}

WitnessTestSummary run_witness_test(WitnessClass cls, int n, int count, std::uint64_t seed, double A,
                                    int threads) {
  if (count < 1) throw Error(ErrorKind::InvalidArgument, "witness count must be >= 1");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  if (cls == WitnessClass::CloseToStar && n != 1)
    throw Error(ErrorKind::InvalidArgument, "close_to_star witnesses use n = 1");
  const ConcavityParam param(A);

  WitnessTestSummary out;
  out.cls = cls;
  out.n = n;
  out.count = count;
  out.seed = seed;
  out.A = A;
  const PhiSpec solver = cls == WitnessClass::S0n ? PhiSpec{Phi1{n, A}} : PhiSpec{Phi6{A}};
  out.solver_radius = least_root(solver).value;

  // Draw everything random up front so the result does not depend on threading.
  struct Job {
    WitnessP p;
    std::vector<Complex> pick_points;
  };
  WitnessGenerator gen(seed);
  std::vector<Job> jobs;
  for (int i = 0; i < count; ++i) {
    Job job{gen.witness(1.0, -1.0, n), {}};
    for (int k = 0; k < kSchwarzPickPoints; ++k) job.pick_points.push_back(gen.point_in_disk(0.99));
    jobs.push_back(std::move(job));
  }

  struct Outcome {
    ViolationSummary lemmas;
    double margin = 0.0;
  };
  std::vector<Outcome> outcomes(jobs.size());
  parallel_for(count, threads, [&](int i) {
    const Job& job = jobs[static_cast<std::size_t>(i)];
    Outcome& o = outcomes[static_cast<std::size_t>(i)];
    for (double r : kLemmaRadii) {
      o.lemmas.record(lemmaA_violation(job.p, n, r, 256), kViolationTolerance);
      o.lemmas.record(lemmaB_violation(job.p, n, r, 256), kViolationTolerance);
    }
    for (const Complex& z : job.pick_points)
      o.lemmas.record(schwarz_pick_violation(job.p.schwarz, z), kViolationTolerance);

    EmpiricalRadiusOptions options;
    FunctionSpec f = SeriesFunction::identity();
    if (cls == WitnessClass::S0n) {
      f = starlike_from_p(p_minus_one_taylor(job.p, kWitnessSeriesOrder));
    } else {
      f = CloseToStarWitness{job.p};
      options.ceiling = std::numbers::sqrt2 - 1.0 - 1e-9;
      for (double r : kDistortionRadii)
        o.lemmas.record(close_to_star_distortion_violation(f, r, 256), kViolationTolerance);
    }
    o.margin = empirical_concavity_radius(f, param, 1e-9, options).radius.value - out.solver_radius;
  });

  for (const auto& o : outcomes) {
    out.lemmas.merge(o.lemmas);
    out.min_margin = std::min(out.min_margin, o.margin);
    if (o.margin < -1e-6) ++out.margin_failures;
  }
  return out;
}

std::string to_string(WitnessClass cls) { return cls == WitnessClass::S0n ? "s0n" : "close_to_star"; }

}  // namespace concavity
