#pragma once

#include <string>
#include <variant>

#include "concavity/jet.hpp"

namespace concavity {

// Closed-form extremal functions of the radius results.

/// z / (1 - z^n)^(2/n)
struct GeneralizedKoebe {
  int n = 1;
};
/// z / (1 + z)^2, the orientation of the Koebe function whose worst point is z = -r.
struct RotatedKoebe {};
/// z / (1 - z)^(beta - alpha), 0 <= alpha <= beta.
struct PowerDistortion {
  double alpha = 0.0;
  double beta = 0.0;
};
/// lambda / (n (n + 1)) z^(n + 1). Not normalized: f'(0) = 0.
struct Monomial {
  double lambda = 1.0;
  int n = 1;
};
/// z / (1 - 2 b z + z^2)^(1 - alpha), 0 <= alpha < 1, -1 <= b < 1.
struct Schild {
  double alpha = 0.0;
  double b = -1.0;
};
/// z (z + 1) / (1 - z)
struct CloseToStarExtremal {};
/// k_p(z) = -p z / ((z - p)(1 - p z)), meromorphic with a simple pole at p in (0, 1).
struct MeromorphicKp {
  double p = 0.5;
};

using CatalogFunction = std::variant<GeneralizedKoebe, RotatedKoebe, PowerDistortion, Monomial,
                                     Schild, CloseToStarExtremal, MeromorphicKp>;

/// Throws InvalidArgument if the variant's parameters are out of range.
void validate(const CatalogFunction& c);

/// Jet of the catalog function at z, built from jet arithmetic.
Jet2 eval_catalog(const CatalogFunction& c, Complex z);

/// Hand-derived f, f', f'' for each variant. Kept independent of the jet path
/// so the two can be checked against each other.
Jet2 eval_catalog_closed_form(const CatalogFunction& c, Complex z);

/// Stable identifier such as "generalized_koebe(n=2)".
std::string catalog_id(const CatalogFunction& c);

/// Radius beyond which the circle scans should not go for this variant: the
/// distance to the nearest singularity of f'' / f' inside the unit disk.
double catalog_scan_ceiling(const CatalogFunction& c);

}  // namespace concavity
