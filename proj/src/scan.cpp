#include "concavity/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

namespace concavity {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGolden = 0.6180339887498949;  // (sqrt(5) - 1) / 2
constexpr double kAngleTolerance = 1e-12;
constexpr int kRefinedCandidates = 3;
constexpr double kRefineHalfWidthSteps = 1.5;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t >= kTwoPi ? 0.0 : t;
}

// NaN marks an excluded angle.
double guarded(const std::function<double(double)>& objective, double angle) {
  try {
    const double v = objective(angle);
    return std::isfinite(v) ? v : std::numeric_limits<double>::quiet_NaN();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NearPole) throw;
    return std::numeric_limits<double>::quiet_NaN();
  }
}

struct Minimum {
  double angle;
  double value;
};

// Golden-section search on [a, b]; returns the best point seen, or nullopt
// if the objective hit a pole inside the window.
std::optional<Minimum> golden_section(const std::function<double(double)>& objective, double a, double b) {
  double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
  double f1 = guarded(objective, x1), f2 = guarded(objective, x2);
  while (b - a > kAngleTolerance) {
    if (std::isnan(f1) || std::isnan(f2)) return std::nullopt;
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = guarded(objective, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = guarded(objective, x2);
    }
  }
  const double mid = 0.5 * (a + b);
  const double fm = guarded(objective, mid);
  if (std::isnan(fm)) return std::nullopt;
  return Minimum{mid, fm};
}

void require_radius(double r) {
  if (!(r > 0.0 && r < 1.0)) {
    std::ostringstream msg;
    msg << "circle radius " << r << " must lie in (0, 1)";
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
}

}  // namespace

CircleScan scan_circle_min(const std::function<double(double)>& objective, double r, int samples) {
  require_radius(r);
  if (samples < kMinCircleSamples) {
    std::ostringstream msg;
    msg << "circle scans need at least " << kMinCircleSamples << " samples, got " << samples;
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
  const double step = kTwoPi / samples;
  std::vector<double> values(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) values[static_cast<std::size_t>(k)] = guarded(objective, k * step);

  std::vector<int> order;
  order.reserve(values.size());
  for (int k = 0; k < samples; ++k)
    if (!std::isnan(values[static_cast<std::size_t>(k)])) order.push_back(k);
  CircleScan scan{r, samples, 0.0, 0.0, samples - static_cast<int>(order.size()), false};
  if (order.empty()) throw Error(ErrorKind::NearPole, "every sample on the circle hit a pole");

  const auto best_count = std::min<std::size_t>(kRefinedCandidates, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(best_count), order.end(),
                    [&](int a, int b) {
                      const double va = values[static_cast<std::size_t>(a)], vb = values[static_cast<std::size_t>(b)];
                      return va < vb || (va == vb && a < b);
                    });

  Minimum best{order.front() * step, values[static_cast<std::size_t>(order.front())]};
  bool refinement_ok = true;
  for (std::size_t i = 0; i < best_count; ++i) {
    const double centre = order[i] * step;
    const auto refined = golden_section(objective, centre - kRefineHalfWidthSteps * step,
                                        centre + kRefineHalfWidthSteps * step);
    if (!refined) {
      refinement_ok = false;
      continue;
    }
    if (refined->value < best.value) best = *refined;
  }
  scan.min_value = best.value;
  scan.argmin_angle = wrap_angle(best.angle);
  scan.refined = refinement_ok && scan.excluded * 100 <= samples;
  return scan;
}

CircleScan min_re_Tf_on_circle(const FunctionSpec& f, ConcavityParam A, double r, int samples,
                               Orientation orientation) {
  require_radius(r);
  if (orientation == Orientation::Fixed) {
    return scan_circle_min([&](double t) { return eval_Tf(f, A, std::polar(r, t)).real(); }, r, samples);
  }
  const double a = A.value();
  // (A+1)(w - 1) at the circle point where Re (1+z)/(1-z) is smallest.
  const double weight_term = (a + 1.0) * (-2.0 * r / (1.0 + r));
  return scan_circle_min(
      [&](double t) {
        const Complex w = std::polar(r, t);
        const double zf = pre_schwarzian_term(eval_function(f, w), w).real();
        return 1.0 + (weight_term - 2.0 * zf) / (a - 1.0);
      },
      r, samples);
}

EmpiricalRadius empirical_concavity_radius(const FunctionSpec& f, ConcavityParam A, double tol,
                                           const EmpiricalRadiusOptions& options) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  const double ceiling =
      options.ceiling > 0.0 ? std::min(options.ceiling, scan_ceiling(f)) : scan_ceiling(f);
  if (!(options.start > 0.0 && options.start < ceiling))
    throw Error(ErrorKind::InvalidArgument, "start radius must lie below the scan ceiling");

  EmpiricalRadius out;
  auto probe = [&](double r) {
    const auto scan = min_re_Tf_on_circle(f, A, r, options.samples, options.orientation);
    out.probes.push_back({r, scan.min_value});
    return scan;
  };

  RadiusResult& res = out.radius;
  const auto first = probe(options.start);
  if (first.min_value <= 0.0) {
    res = {0.0, 0.0, options.start, std::abs(first.min_value), 0, false, ErrorKind::PreconditionFailed};
    out.argmin_angle = first.argmin_angle;
    return out;
  }

  double lo = options.start;
  std::optional<double> hi;
  CircleScan last = first;
  for (int k = 1;; ++k) {
    const double r = std::min(k * options.coarse_step, ceiling);
    if (r <= lo) continue;
    last = probe(r);
    if (last.min_value <= 0.0) {
      hi = r;
      break;
    }
    lo = r;
    if (r >= ceiling) break;
  }
  if (!hi) {
    res = {ceiling, ceiling, ceiling, std::abs(last.min_value), 0, false, ErrorKind::NoSignChange};
    out.argmin_angle = last.argmin_angle;
    return out;
  }

  int iterations = 0;
  while (*hi - lo > tol) {
    const double mid = std::midpoint(lo, *hi);
    if (mid <= lo || mid >= *hi) break;
    if (probe(mid).min_value > 0.0)
      lo = mid;
    else
      hi = mid;
    ++iterations;
  }
  const double value = std::midpoint(lo, *hi);
  const auto final_scan = min_re_Tf_on_circle(f, A, value, options.samples, options.orientation);
  res = {value, lo, *hi, std::abs(final_scan.min_value), iterations, true, std::nullopt};
  out.argmin_angle = final_scan.argmin_angle;
  return out;
}

}  // namespace concavity
