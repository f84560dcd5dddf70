#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "concavity/errors.hpp"
#include "concavity/scan.hpp"
#include "helpers.hpp"

using namespace concavity;

TEST_CASE("circle minimum of the identity") {
  const auto s = min_re_Tf_on_circle(SeriesFunction::identity(), ConcavityParam(2.0), 0.5);
  CHECK(s.min_value == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(s.argmin_angle == doctest::Approx(std::numbers::pi).epsilon(1e-9));
  CHECK(s.refined);
  CHECK(s.excluded == 0);
}

TEST_CASE("RotatedKoebe changes sign near 7 - 4 sqrt 3") {
  const FunctionSpec f = CatalogFunction{RotatedKoebe{}};
  CHECK(min_re_Tf_on_circle(f, ConcavityParam(2.0), 0.05).min_value > 0.0);
  CHECK(min_re_Tf_on_circle(f, ConcavityParam(2.0), 0.10).min_value < 0.0);
}

TEST_CASE("empirical radii") {
  const ConcavityParam A(2.0);
  const auto koebe = empirical_concavity_radius(CatalogFunction{RotatedKoebe{}}, A);
  CHECK(koebe.radius.converged);
  CHECK(std::abs(koebe.radius.value - (7.0 - 4.0 * std::sqrt(3.0))) <= 1e-6);
  const auto id = empirical_concavity_radius(SeriesFunction::identity(), A);
  CHECK(std::abs(id.radius.value - 0.2) <= 1e-6);
  EmpiricalRadiusOptions cts;
  cts.ceiling = std::numbers::sqrt2 - 1.0 - 1e-9;
  const auto c = empirical_concavity_radius(CatalogFunction{CloseToStarExtremal{}}, A, 1e-9, cts);
  CHECK(c.radius.value > 0.0);
  CHECK(c.radius.value < std::numbers::sqrt2 - 1.0);
}

TEST_CASE("monotone bracketing") {
  const std::vector<FunctionSpec> fs{CatalogFunction{RotatedKoebe{}}, CatalogFunction{GeneralizedKoebe{2}},
                                     CatalogFunction{PowerDistortion{0.5, 1.0}}, SeriesFunction::identity()};
  for (const auto& f : fs) {
    for (auto orientation : {Orientation::Fixed, Orientation::RotationFamily}) {
      EmpiricalRadiusOptions o;
      o.orientation = orientation;
      const auto e = empirical_concavity_radius(f, ConcavityParam(1.5), 1e-9, o);
      REQUIRE(e.radius.converged);
      CHECK(e.radius.bracket_lo <= e.radius.value);
      CHECK(e.radius.value <= e.radius.bracket_hi);
      for (const auto& p : e.probes) {
        if (p.r <= e.radius.bracket_lo) CHECK(p.min_value > 0.0);
        if (p.r >= e.radius.bracket_hi) CHECK(p.min_value <= 0.0);
      }
    }
  }
}

TEST_CASE("doubling samples never raises the minimum") {
  const std::vector<FunctionSpec> fs{CatalogFunction{GeneralizedKoebe{1}},   CatalogFunction{GeneralizedKoebe{3}},
                                     CatalogFunction{RotatedKoebe{}},        CatalogFunction{PowerDistortion{0.3, 2.7}},
                                     CatalogFunction{Schild{0.5, -1.0}},     CatalogFunction{Schild{0.2, 0.3}},
                                     CatalogFunction{CloseToStarExtremal{}}, SeriesFunction::identity()};
  for (const auto& f : fs) {
    for (double r : {0.05, 0.15, 0.3}) {
      for (int n : {256, 1024}) {
        const double coarse = min_re_Tf_on_circle(f, ConcavityParam(2.0), r, n).min_value;
        const double fine = min_re_Tf_on_circle(f, ConcavityParam(2.0), r, 2 * n).min_value;
        CHECK(fine <= coarse + 1e-8);
      }
    }
  }
}

TEST_CASE("rotation family is at most the fixed orientation") {
  for (double r : {0.05, 0.2, 0.4}) {
    const FunctionSpec f = CatalogFunction{GeneralizedKoebe{3}};
    const auto fixed = min_re_Tf_on_circle(f, ConcavityParam(2.0), r, 2048, Orientation::Fixed);
    const auto family = min_re_Tf_on_circle(f, ConcavityParam(2.0), r, 2048, Orientation::RotationFamily);
    CHECK(family.min_value <= fixed.min_value + 1e-12);
  }
}

TEST_CASE("monomial extremal fails the start precondition") {
  const auto e = empirical_concavity_radius(CatalogFunction{Monomial{1.0, 1}}, ConcavityParam(2.0));
  CHECK_FALSE(e.radius.converged);
  CHECK(e.radius.failure == ErrorKind::PreconditionFailed);
  CHECK(e.radius.value == 0.0);
}

TEST_CASE("sample count is validated") {
  CHECK_THROWS_AS(min_re_Tf_on_circle(SeriesFunction::identity(), ConcavityParam(2.0), 0.5, 16), Error);
}
