#pragma once

#include <optional>
#include <string>
#include <variant>

#include "concavity/radius_result.hpp"

namespace concavity {

// Real functions whose least positive root is the radius of concavity of a
// class. Each is positive at r = 0 (the lower bound on Re T_f is then
// positive) and the radius is the first place it stops being so.

/// S_0^(n): (A+1)/2 (1-r)/(1+r) - (1 + 2(n+1) r^n + r^2n) / (1 - r^2n)
struct Phi1 {
  int n = 1;
  double A = 2.0;
};
/// Kaplan class K(alpha, beta): (A+3+2a-2b) r^2 - 2(A+1+a+b) r + A - 1
struct Phi2 {
  double alpha = 0.0;
  double beta = 0.0;
  double A = 2.0;
};
/// Strongly starlike of order beta:
/// (A+1)(1-r)/(1+r) - 4 r beta / (1-r^2) - 2 ((1+r)/(1-r))^beta
struct Phi3 {
  double beta = 1.0;
  double A = 2.0;
};
/// Starlike of order alpha:
/// (-8a^2+6a-2Aa+A-1) r^2 + (2Aa-2A-10a+6) r + A - 1
struct Phi4 {
  double alpha = 0.0;
  double A = 2.0;
};
/// Close-to-star with Re(f/z) > 0, defined on [0, sqrt(2) - 1):
/// -1 + A - (4A+8) r + (A+21) r^2 - 20 r^3 - (A+11) r^4
struct Phi6 {
  double A = 2.0;
};

using PhiSpec = std::variant<Phi1, Phi2, Phi3, Phi4, Phi6>;

/// Throws InvalidArgument when parameters are outside their admissible ranges.
void validate(const PhiSpec& spec);

std::string phi_id(const PhiSpec& spec);

/// Right end of the scanned domain. Phi1..Phi4 stop just short of 1, Phi6
/// just short of sqrt(2) - 1.
double phi_domain_ceiling(const PhiSpec& spec);

/// Throws OutOfDomain outside [0, 1) (Phi1, Phi3), [0, 1] (Phi2, Phi4 are
/// polynomials) or [0, sqrt(2) - 1) (Phi6).
double eval_phi(const PhiSpec& spec, double r);

inline constexpr double kLeastRootScanStep = 1e-3;

/// Least root of Phi in its domain: forward scan from 0 in steps of 1e-3 (and
/// once more at 1e-5 if that finds nothing) up to the first r with Phi <= 0,
/// then bisection to a bracket of width <= tol. With no sign change the result
/// is not converged, has failure NoRoot, and value = phi_domain_ceiling.
RadiusResult least_root(const PhiSpec& spec, double tol = 1e-12);

/// Exact least root in (0, 1) when Phi reduces to a quadratic after clearing
/// denominators: Phi2 and Phi4 always, Phi1 for n = 1, Phi3 for beta = 1.
std::optional<double> closed_form_root(const PhiSpec& spec);

/// Radius of convexity of order beta in S_0^(n):
/// [((1+n) - sqrt(n^2 + 2n + beta^2)) / (1 + beta)]^(1/n).
double radius_of_convexity(int n, double beta);

/// Radius of uniform convexity in S_0^(n), radius_of_convexity(n, 1/2).
inline double radius_of_uniform_convexity(int n) { return radius_of_convexity(n, 0.5); }

// Classical radii for close-to-star functions, kept for reference.
namespace reference {
/// Starlikeness (and univalence) radius of the close-to-star class.
inline constexpr double kCloseToStarStarlikeness = 0.2679491924311227;  // 2 - sqrt(3)
/// Convexity radius of the close-to-star class.
inline constexpr double kCloseToStarConvexity = 0.10102051443364380;  // 5 - 2 sqrt(6)
/// Starlikeness radius when Re(f/z) > 0.
inline constexpr double kRealPartStarlikeness = 0.41421356237309515;  // sqrt(2) - 1
}  // namespace reference

}  // namespace concavity
