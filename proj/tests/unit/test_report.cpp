#include <doctest.h>

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "concavity/errors.hpp"
#include "concavity/report.hpp"

using namespace concavity;

namespace {

bool has(const ReportRecord& r, const std::string& flag) {
  return std::find(r.flags.begin(), r.flags.end(), flag) != r.flags.end();
}

}  // namespace

TEST_CASE("radius reports") {
  const auto s0n = radius_report({ClassId::S0n, {{"n", 1}}, 2.0});
  CHECK(s0n.solver.value == doctest::Approx(0.0717968).epsilon(1e-6));
  CHECK(s0n.closed_form.has_value());
  const auto kab = radius_report({ClassId::Kab, {{"alpha", 0}, {"beta", 2}}, 2.0});
  CHECK(kab.solver.value == doctest::Approx(0.1010205).epsilon(1e-6));
  const auto cts = radius_report({ClassId::CloseToStar, {}, 2.0});
  CHECK(cts.solver.value > 0.06);
  CHECK(cts.solver.value < 0.07);
}

TEST_CASE("query validation names the parameter") {
  auto message = [](const RadiusQuery& q) {
    try {
      phi_for(q);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message({ClassId::S0n, {}, 2.0}).find("'n'") != std::string::npos);
  CHECK(message({ClassId::S0n, {{"n", 1.5}}, 2.0}).find("'n'") != std::string::npos);
  CHECK(message({ClassId::Kab, {{"alpha", 1}, {"beta", 0.5}}, 2.0}).find("'beta'") != std::string::npos);
  CHECK(message({ClassId::S0n, {{"n", 1}, {"beta", 1}}, 2.0}).find("'beta'") != std::string::npos);
  CHECK(message({ClassId::S0n, {{"n", 1}}, 3.0}).find("'A'") != std::string::npos);
  CHECK(message({ClassId::S0n, {{"n", 1}}, 2.0, 1e-16}).find("'tol'") != std::string::npos);
}

TEST_CASE("verify s0n n = 1") {
  const auto r = verify_report({ClassId::S0n, {{"n", 1}}, 2.0});
  CHECK(has(r, "MATCH"));
  CHECK(std::abs(*r.empirical_radius - (7.0 - 4.0 * std::sqrt(3.0))) <= 1e-6);
  REQUIRE(r.alternates.size() == 1);
  CHECK(r.alternates[0].extremal_id == "generalized_koebe(n=1)");
  CHECK(r.argmin_angle.has_value());
}

TEST_CASE("verify flags") {
  const auto ss = verify_report({ClassId::StronglyStarlike, {{"beta", 0.5}}, 2.0});
  CHECK(has(ss, "NORMALIZATION_VIOLATION"));
  const auto cts = verify_report({ClassId::CloseToStar, {}, 2.0});
  CHECK(cts.empirical_radius.has_value());
  CHECK(cts.argmin_angle.has_value());
  // The Schild identity printed for b = -1 is exact.
  const auto so = verify_report({ClassId::StarlikeOrder, {{"alpha", 0.3}}, 2.0});
  CHECK(*so.display_max_diff <= kExpressionTolerance);
  CHECK_FALSE(has(so, "PAPER_EXPR_MISMATCH"));
}

TEST_CASE("flags are nonempty whenever radii differ") {
  const std::vector<RadiusQuery> qs{{ClassId::S0n, {{"n", 2}}, 1.5},
                                    {ClassId::Kab, {{"alpha", 0.5}, {"beta", 1}}, 2.0},
                                    {ClassId::StarlikeOrder, {{"alpha", 0.75}}, 2.0},
                                    {ClassId::CloseToStar, {}, 1.5}};
  for (const auto& q : qs) {
    const auto r = verify_report(q);
    if (std::abs(*r.empirical_radius - r.solver.value) > kMatchTolerance) CHECK_FALSE(r.flags.empty());
    CHECK_FALSE(r.flags.empty());
  }
}

TEST_CASE("scan rows") {
  const auto rows = scan_rows(ClassId::S0n, {{"n", {1, 2, 3}}}, {1.5, 2.0});
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].params[0] == 1);
  CHECK(rows[0].A == 1.5);
  CHECK(rows[1].A == 2.0);
  CHECK(rows[5].params[0] == 3);
  for (const auto& r : rows) CHECK(r.result->converged);

  const auto ss = scan_rows(ClassId::StronglyStarlike, {{"beta", {0.25, 0.5, 1.0}}}, {2.0});
  CHECK(std::abs(ss[2].result->value - rows[1].result->value) <= 1e-10);

  const auto kab = scan_rows(ClassId::Kab, {{"alpha", {0.5}}, {"beta", {0.2, 1.0}}}, {2.0});
  REQUIRE(kab.size() == 2);
  CHECK_FALSE(kab[0].result.has_value());
  CHECK(kab[0].error.find("beta") != std::string::npos);
  CHECK(kab[1].result.has_value());

  CHECK_THROWS_AS(scan_rows(ClassId::S0n, {}, {2.0}), Error);
  CHECK_THROWS_AS(scan_rows(ClassId::S0n, {{"n", {1}}}, {}), Error);
}

TEST_CASE("grid cells") {
  const auto cells = grid_cells(make_function("identity", {}), 2.0, 0.5, 3);
  REQUIRE(cells.size() == 9);
  CHECK(cells[4].x == 0.0);
  CHECK(cells[4].y == 0.0);
  CHECK(*cells[4].re_tf == doctest::Approx(1.0));
  CHECK_FALSE(cells[0].re_tf.has_value());  // corner lies outside the disk

  // Sign change along the negative real axis near 7 - 4 sqrt 3.
  const int res = 401;
  const auto koebe = grid_cells(make_function("rotated_koebe", {}), 2.0, 0.2, res);
  const int mid = res / 2;
  double crossing = 0.0;
  for (int ix = mid; ix > 0; --ix) {
    const auto& c = koebe[static_cast<std::size_t>(mid * res + ix)];
    if (*c.re_tf <= 0.0) {
      crossing = -c.x;
      break;
    }
  }
  CHECK(crossing == doctest::Approx(0.0718).epsilon(0.02));

  CHECK_THROWS_AS(grid_cells(make_function("meromorphic_kp", {{"p", 0.5}}), 2.0, 0.5, 3), Error);
  CHECK_THROWS_AS(make_function("nope", {}), Error);
  CHECK_THROWS_AS(grid_cells(make_function("identity", {}), 2.0, 1.0, 3), Error);
  CHECK_THROWS_AS(grid_cells(make_function("identity", {}), 2.0, 0.5, 5000), Error);
}

TEST_CASE("json record") {
  const auto j = nlohmann::json::parse(to_json(verify_report({ClassId::S0n, {{"n", 1}}, 2.0})));
  CHECK(j["command"] == "verify");
  CHECK(j["query"]["class"] == "s0n");
  CHECK(j["solver_radius"].get<double>() == doctest::Approx(0.0717968).epsilon(1e-6));
  CHECK(j["flags"].size() >= 1);
  const auto k = nlohmann::json::parse(to_json(radius_report({ClassId::CloseToStar, {}, 2.0})));
  CHECK(k["closed_form"].is_null());
  CHECK(k["empirical_radius"].is_null());
}
