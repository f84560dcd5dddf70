#include "concavity/catalog.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace concavity {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

constexpr double kDefaultScanCeiling = 0.999;
constexpr double kSingularityMargin = 1e-9;

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

void guard_denominator(Complex d, const char* what) {
  if (!(std::abs(d) > 1e-14)) throw Error(ErrorKind::NearPole, what);
}

}  // namespace

void validate(const CatalogFunction& c) {
  std::visit(overloaded{
                 [](const GeneralizedKoebe& v) { require(v.n >= 1, "generalized_koebe: n must be >= 1"); },
                 [](const RotatedKoebe&) {},
                 [](const PowerDistortion& v) {
                   require(std::isfinite(v.alpha) && std::isfinite(v.beta) && 0.0 <= v.alpha &&
                               v.alpha <= v.beta,
                           "power_distortion: requires 0 <= alpha <= beta");
                 },
                 [](const Monomial& v) {
                   require(v.n >= 1, "monomial: n must be >= 1");
                   require(v.lambda > 0.0 && v.lambda < v.n * (v.n + 1.0),
                           "monomial: lambda must lie in (0, n(n+1))");
                 },
                 [](const Schild& v) {
                   require(0.0 <= v.alpha && v.alpha < 1.0, "schild: alpha must lie in [0, 1)");
                   require(-1.0 <= v.b && v.b < 1.0, "schild: b must lie in [-1, 1)");
                 },
                 [](const CloseToStarExtremal&) {},
                 [](const MeromorphicKp& v) {
                   require(0.0 < v.p && v.p < 1.0, "meromorphic_kp: p must lie in (0, 1)");
                 },
             },
             c);
}

Jet2 eval_catalog(const CatalogFunction& c, Complex z) {
  const Jet2 Z = Jet2::variable(z);
  return std::visit(
      overloaded{
          [&](const GeneralizedKoebe& v) {
            return Z * jet_power_real(1.0 - jet_power_int(Z, v.n), -2.0 / v.n);
          },
          [&](const RotatedKoebe&) { return Z * jet_power_int(1.0 + Z, -2); },
          [&](const PowerDistortion& v) { return Z * jet_power_real(1.0 - Z, -(v.beta - v.alpha)); },
          [&](const Monomial& v) { return (v.lambda / (v.n * (v.n + 1.0))) * jet_power_int(Z, v.n + 1); },
          [&](const Schild& v) {
            return Z * jet_power_real(1.0 - 2.0 * v.b * Z + Z * Z, -(1.0 - v.alpha));
          },
          [&](const CloseToStarExtremal&) { return Z * (Z + 1.0) / (1.0 - Z); },
          [&](const MeromorphicKp& v) {
            return (-v.p * Z) / ((Z - v.p) * (1.0 - v.p * Z));
          },
      },
      c);
}

Jet2 eval_catalog_closed_form(const CatalogFunction& c, Complex z) {
  return std::visit(
      overloaded{
          [&](const GeneralizedKoebe& v) -> Jet2 {
            // f' = (1 + z^n)(1 - z^n)^(-2/n - 1)
            // f'' = z^(n-1) (2n + 2 + 2 z^n)(1 - z^n)^(-2/n - 2)
            const double n = v.n;
            const Complex zn = std::pow(z, v.n);
            const Complex u = 1.0 - zn;
            guard_denominator(u, "generalized_koebe: z^n = 1");
            return {z * std::pow(u, -2.0 / n), (1.0 + zn) * std::pow(u, -2.0 / n - 1.0),
                    std::pow(z, v.n - 1) * (2.0 * n + 2.0 + 2.0 * zn) * std::pow(u, -2.0 / n - 2.0)};
          },
          [&](const RotatedKoebe&) -> Jet2 {
            const Complex u = 1.0 + z;
            guard_denominator(u, "rotated_koebe: z = -1");
            return {z / (u * u), (1.0 - z) / (u * u * u), (2.0 * z - 4.0) / (u * u * u * u)};
          },
          [&](const PowerDistortion& v) -> Jet2 {
            // f' = (1 - z)^(-g-1) (1 + (g - 1) z),  f'' = (1 - z)^(-g-2) (2g + g(g - 1) z)
            const double g = v.beta - v.alpha;
            const Complex u = 1.0 - z;
            guard_denominator(u, "power_distortion: z = 1");
            return {z * std::pow(u, -g), std::pow(u, -g - 1.0) * (1.0 + (g - 1.0) * z),
                    std::pow(u, -g - 2.0) * (2.0 * g + g * (g - 1.0) * z)};
          },
          [&](const Monomial& v) -> Jet2 {
            const double n = v.n;
            return {v.lambda / (n * (n + 1.0)) * std::pow(z, v.n + 1), v.lambda / n * std::pow(z, v.n),
                    v.lambda * std::pow(z, v.n - 1)};
          },
          [&](const Schild& v) -> Jet2 {
            // q = 1 - 2bz + z^2, c = 1 - alpha, N = 1 - 2b(1-c) z + (1-2c) z^2
            // f' = q^(-c-1) N,  f'' = q^(-c-2) (q N' - 2(c+1)(z - b) N)
            const double cexp = 1.0 - v.alpha;
            const Complex q = 1.0 - 2.0 * v.b * z + z * z;
            guard_denominator(q, "schild: 1 - 2bz + z^2 = 0");
            const Complex num = 1.0 - 2.0 * v.b * (1.0 - cexp) * z + (1.0 - 2.0 * cexp) * z * z;
            const Complex dnum = -2.0 * v.b * (1.0 - cexp) + 2.0 * (1.0 - 2.0 * cexp) * z;
            return {z * std::pow(q, -cexp), std::pow(q, -cexp - 1.0) * num,
                    std::pow(q, -cexp - 2.0) * (q * dnum - 2.0 * (cexp + 1.0) * (z - v.b) * num)};
          },
          [&](const CloseToStarExtremal&) -> Jet2 {
            const Complex u = 1.0 - z;
            guard_denominator(u, "close_to_star_extremal: z = 1");
            return {z * (z + 1.0) / u, (1.0 + 2.0 * z - z * z) / (u * u), 4.0 / (u * u * u)};
          },
          [&](const MeromorphicKp& v) -> Jet2 {
            // Partial fractions: k_p = -(p^2/(z-p) + p/(1-pz)) / (1 - p^2)
            const double p = v.p;
            const Complex a = z - p, b = 1.0 - p * z;
            guard_denominator(a, "meromorphic_kp: z = p");
            guard_denominator(b, "meromorphic_kp: z = 1/p");
            const double s = 1.0 / (1.0 - p * p);
            return {-s * (p * p / a + p / b), s * p * p * (1.0 / (a * a) - 1.0 / (b * b)),
                    s * p * p * (-2.0 / (a * a * a) - 2.0 * p / (b * b * b))};
          },
      },
      c);
}

std::string catalog_id(const CatalogFunction& c) {
  return std::visit(
      overloaded{
          [](const GeneralizedKoebe& v) { return "generalized_koebe(n=" + std::to_string(v.n) + ")"; },
          [](const RotatedKoebe&) { return std::string("rotated_koebe"); },
          [](const PowerDistortion& v) {
            return "power_distortion(alpha=" + fmt_g(v.alpha) + ",beta=" + fmt_g(v.beta) + ")";
          },
          [](const Monomial& v) {
            return "monomial(lambda=" + fmt_g(v.lambda) + ",n=" + std::to_string(v.n) + ")";
          },
          [](const Schild& v) { return "schild(alpha=" + fmt_g(v.alpha) + ",b=" + fmt_g(v.b) + ")"; },
          [](const CloseToStarExtremal&) { return std::string("close_to_star_extremal"); },
          [](const MeromorphicKp& v) { return "meromorphic_kp(p=" + fmt_g(v.p) + ")"; },
      },
      c);
}

double catalog_scan_ceiling(const CatalogFunction& c) {
  auto below = [](double singular) {
    return std::min(kDefaultScanCeiling, singular - kSingularityMargin);
  };
  return std::visit(
      overloaded{
          [&](const PowerDistortion& v) {
            // f' vanishes at z = 1 / (1 - g), inside the disk once g > 2.
            const double g = v.beta - v.alpha;
            return g > 2.0 ? below(1.0 / (g - 1.0)) : kDefaultScanCeiling;
          },
          [&](const Schild& v) {
            // Zeros of 1 - 2 b alpha z + (2 alpha - 1) z^2.
            const double a2 = 2.0 * v.alpha - 1.0, a1 = -2.0 * v.b * v.alpha;
            double nearest = 1.0;
            if (a2 == 0.0) {
              if (a1 != 0.0) nearest = 1.0 / std::abs(a1);
            } else {
              const Complex disc = std::sqrt(Complex(a1 * a1 - 4.0 * a2, 0.0));
              for (Complex root : {(-a1 + disc) / (2.0 * a2), (-a1 - disc) / (2.0 * a2)})
                nearest = std::min(nearest, std::abs(root));
            }
            return nearest < 1.0 ? below(nearest) : kDefaultScanCeiling;
          },
          // f' vanishes at z = 1 - sqrt(2).
          [&](const CloseToStarExtremal&) { return below(std::numbers::sqrt2 - 1.0); },
          [&](const MeromorphicKp& v) { return below(v.p); },
          [&](const auto&) { return kDefaultScanCeiling; },
      },
      c);
}

}  // namespace concavity
