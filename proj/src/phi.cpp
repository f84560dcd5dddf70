#include "concavity/phi.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>

namespace concavity {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

constexpr double kPhi6Limit = std::numbers::sqrt2 - 1.0;
constexpr double kEdge = 1e-12;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

void require_A(double A) { require(A > 1.0 && A <= 2.0, "A must lie in (1, 2]"); }

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

struct Quadratic {
  double a, b, c;
};

// Smallest root of a r^2 + b r + c strictly inside (0, 1).
std::optional<double> least_unit_root(Quadratic q) {
  std::optional<double> best;
  auto consider = [&](double r) {
    if (r > 0.0 && r < 1.0 && (!best || r < *best)) best = r;
  };
  if (std::abs(q.a) <= 1e-15 * (std::abs(q.b) + std::abs(q.c))) {
    if (q.b != 0.0) consider(-q.c / q.b);
    return best;
  }
  const double disc = q.b * q.b - 4.0 * q.a * q.c;
  if (disc < 0.0) return std::nullopt;
  const double t = -0.5 * (q.b + std::copysign(std::sqrt(disc), q.b));
  consider(t / q.a);
  if (t != 0.0) consider(q.c / t);
  return best;
}

}  // namespace

void validate(const PhiSpec& spec) {
  std::visit(overloaded{
                 [](const Phi1& p) {
                   require(p.n >= 1, "Phi1: n must be >= 1");
                   require_A(p.A);
                 },
                 [](const Phi2& p) {
                   require(std::isfinite(p.alpha) && std::isfinite(p.beta) && 0.0 <= p.alpha &&
                               p.alpha <= p.beta,
                           "Phi2: requires 0 <= alpha <= beta");
                   require_A(p.A);
                 },
                 [](const Phi3& p) {
                   require(p.beta > 0.0 && p.beta <= 1.0, "Phi3: beta must lie in (0, 1]");
                   require_A(p.A);
                 },
                 [](const Phi4& p) {
                   require(p.alpha >= 0.0 && p.alpha < 1.0, "Phi4: alpha must lie in [0, 1)");
                   require_A(p.A);
                 },
                 [](const Phi6& p) { require_A(p.A); },
             },
             spec);
}

std::string phi_id(const PhiSpec& spec) {
  return std::visit(
      overloaded{
          [](const Phi1& p) { return "Phi1(n=" + std::to_string(p.n) + ",A=" + fmt_g(p.A) + ")"; },
          [](const Phi2& p) {
            return "Phi2(alpha=" + fmt_g(p.alpha) + ",beta=" + fmt_g(p.beta) + ",A=" + fmt_g(p.A) + ")";
          },
          [](const Phi3& p) { return "Phi3(beta=" + fmt_g(p.beta) + ",A=" + fmt_g(p.A) + ")"; },
          [](const Phi4& p) { return "Phi4(alpha=" + fmt_g(p.alpha) + ",A=" + fmt_g(p.A) + ")"; },
          [](const Phi6& p) { return "Phi6(A=" + fmt_g(p.A) + ")"; },
      },
      spec);
}

double phi_domain_ceiling(const PhiSpec& spec) {
  return std::holds_alternative<Phi6>(spec) ? kPhi6Limit - kEdge : 1.0 - kEdge;
}

double eval_phi(const PhiSpec& spec, double r) {
  validate(spec);
  const bool polynomial = std::holds_alternative<Phi2>(spec) || std::holds_alternative<Phi4>(spec);
  const double upper = std::holds_alternative<Phi6>(spec) ? kPhi6Limit : 1.0;
  const bool inside = r >= 0.0 && (r < upper || (polynomial && r == upper));
  if (!inside) {
    std::ostringstream msg;
    msg << phi_id(spec) << ": r = " << r << " is outside the domain";
    throw Error(ErrorKind::OutOfDomain, msg.str());
  }
  return std::visit(
      overloaded{
          [r](const Phi1& p) {
            const double rn = std::pow(r, p.n), r2n = rn * rn;
            return (p.A + 1.0) / 2.0 * (1.0 - r) / (1.0 + r) -
                   (1.0 + 2.0 * (p.n + 1.0) * rn + r2n) / (1.0 - r2n);
          },
          [r](const Phi2& p) {
            return (p.A + 3.0 + 2.0 * p.alpha - 2.0 * p.beta) * r * r -
                   2.0 * (p.A + 1.0 + p.alpha + p.beta) * r + p.A - 1.0;
          },
          [r](const Phi3& p) {
            return (p.A + 1.0) * (1.0 - r) / (1.0 + r) - 4.0 * r * p.beta / (1.0 - r * r) -
                   2.0 * std::pow((1.0 + r) / (1.0 - r), p.beta);
          },
          [r](const Phi4& p) {
            const double a = p.alpha, A = p.A;
            return (-8.0 * a * a + 6.0 * a - 2.0 * A * a + A - 1.0) * r * r +
                   (2.0 * A * a - 2.0 * A - 10.0 * a + 6.0) * r + A - 1.0;
          },
          [r](const Phi6& p) {
            const double A = p.A;
            return -1.0 + A + r * (-(4.0 * A + 8.0) + r * ((A + 21.0) + r * (-20.0 - (A + 11.0) * r)));
          },
      },
      spec);
}

RadiusResult least_root(const PhiSpec& spec, double tol) {
  validate(spec);
  if (!(tol >= 1e-14)) throw Error(ErrorKind::InvalidArgument, "least_root: tol must be >= 1e-14");
  const double ceiling = phi_domain_ceiling(spec);
  auto phi = [&](double r) { return eval_phi(spec, r); };

  // First grid point with phi <= 0, scanning forward from 0.
  auto scan = [&](double step) -> std::optional<std::pair<double, double>> {
    double prev = 0.0;
    for (long k = 1;; ++k) {
      const double r = std::min(static_cast<double>(k) * step, ceiling);
      if (phi(r) <= 0.0) return std::pair{prev, r};
      if (r >= ceiling) return std::nullopt;
      prev = r;
    }
  };

  auto bracket = scan(kLeastRootScanStep);
  if (!bracket) bracket = scan(kLeastRootScanStep / 100.0);
  if (!bracket)
    return {ceiling, ceiling, ceiling, std::abs(phi(ceiling)), 0, false, ErrorKind::NoRoot};

  auto [lo, hi] = *bracket;
  int iterations = 0;
  while (hi - lo > tol) {
    const double mid = std::midpoint(lo, hi);
    if (mid <= lo || mid >= hi) break;
    (phi(mid) > 0.0 ? lo : hi) = mid;
    ++iterations;
  }
  const double value = std::midpoint(lo, hi);
  return {value, lo, hi, std::abs(phi(value)), iterations, true, std::nullopt};
}

std::optional<double> closed_form_root(const PhiSpec& spec) {
  validate(spec);
  // Phi1(n=1) times 2(1-r^2), and Phi3(beta=1) times (1-r^2), are both
  // (A-1) r^2 - (2A+10) r + (A-1).
  auto koebe_quadratic = [](double A) { return least_unit_root({A - 1.0, -(2.0 * A + 10.0), A - 1.0}); };
  return std::visit(
      overloaded{
          [&](const Phi1& p) -> std::optional<double> {
            return p.n == 1 ? koebe_quadratic(p.A) : std::nullopt;
          },
          [](const Phi2& p) -> std::optional<double> {
            return least_unit_root({p.A + 3.0 + 2.0 * p.alpha - 2.0 * p.beta,
                                    -2.0 * (p.A + 1.0 + p.alpha + p.beta), p.A - 1.0});
          },
          [&](const Phi3& p) -> std::optional<double> {
            return p.beta == 1.0 ? koebe_quadratic(p.A) : std::nullopt;
          },
          [](const Phi4& p) -> std::optional<double> {
            const double a = p.alpha, A = p.A;
            return least_unit_root({-8.0 * a * a + 6.0 * a - 2.0 * A * a + A - 1.0,
                                    2.0 * A * a - 2.0 * A - 10.0 * a + 6.0, A - 1.0});
          },
          [](const Phi6&) -> std::optional<double> { return std::nullopt; },
      },
      spec);
}

double radius_of_convexity(int n, double beta) {
  require(n >= 1, "radius_of_convexity: n must be >= 1");
  require(beta >= 0.0 && beta < 1.0, "radius_of_convexity: beta must lie in [0, 1)");
  const double nn = n;
  const double base = ((1.0 + nn) - std::sqrt(nn * nn + 2.0 * nn + beta * beta)) / (1.0 + beta);
  return std::pow(base, 1.0 / nn);
}

}  // namespace concavity
