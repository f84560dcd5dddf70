#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "concavity/phi.hpp"
#include "concavity/scan.hpp"

namespace concavity {

// Query and report types behind the command-line interface.

enum class ClassId { S0n, Kab, StronglyStarlike, StarlikeOrder, CloseToStar };

std::optional<ClassId> parse_class_id(const std::string& name);
std::string to_string(ClassId cls);

/// Parameter names of a class, in the order scan rows are sorted by.
std::vector<std::string> class_parameters(ClassId cls);

using ParamMap = std::map<std::string, double>;

struct RadiusQuery {
  ClassId cls = ClassId::S0n;
  ParamMap params;
  double A = 2.0;
  double tol = 1e-12;
};

/// The Phi function of the query's class. Throws InvalidArgument naming the
/// offending parameter when one is missing, unknown, or out of range.
PhiSpec phi_for(const RadiusQuery& query);

struct AlternateExtremal {
  std::string extremal_id;
  double empirical_radius = 0.0;
  double argmin_angle = 0.0;
};

struct ReportRecord {
  std::string command;
  RadiusQuery query;
  RadiusResult solver;
  std::optional<double> closed_form;
  /// Radius over the extremal's whole rotation family.
  std::optional<double> empirical_radius;
  /// Radius of the extremal in its given orientation.
  std::optional<double> empirical_radius_fixed;
  std::string extremal_id;
  /// Where Re T_f is smallest on the circle at the fixed-orientation radius.
  std::optional<double> argmin_angle;
  /// Largest |displayed - computed| for the closed-form expression printed
  /// alongside the extremal, when there is one.
  std::optional<double> display_max_diff;
  std::vector<AlternateExtremal> alternates;
  std::vector<std::string> flags;
};

inline constexpr double kMatchTolerance = 1e-5;
inline constexpr double kExpressionTolerance = 1e-8;

ReportRecord radius_report(const RadiusQuery& query);

struct VerifyOptions {
  int samples = kDefaultCircleSamples;
  double empirical_tol = 1e-9;
};

/// Solver radius versus the empirical radius of the class extremal. Flags:
/// MATCH, EXTREMAL_LOOSE (empirical above solver), EXTREMAL_BELOW_BOUND
/// (empirical below solver), NORMALIZATION_VIOLATION, PAPER_EXPR_MISMATCH,
/// EMPIRICAL_NOT_CONVERGED, SOLVER_NO_ROOT.
/// Extra parameters: strongly_starlike takes n (default 1) and lambda
/// (default 1) for the monomial extremal; starlike_order takes b (default -1).
ReportRecord verify_report(const RadiusQuery& query, const VerifyOptions& options = {});

/// The catalog extremal used by verify_report for the query's class.
CatalogFunction class_extremal(const RadiusQuery& query);

struct ScanRow {
  std::vector<double> params;  // in class_parameters order
  double A = 0.0;
  std::optional<RadiusResult> result;
  std::string error;
};

/// One row per point of the product grid, in lexicographic grid order
/// (parameters in class_parameters order, then A).
std::vector<ScanRow> scan_rows(ClassId cls, const std::map<std::string, std::vector<double>>& grid,
                               const std::vector<double>& a_values, double tol = 1e-12);

/// Builds a function from a command-line id: identity, generalized_koebe (n),
/// rotated_koebe, power_distortion (alpha, beta), monomial (lambda, n),
/// schild (alpha, b), close_to_star_extremal, meromorphic_kp (p).
FunctionSpec make_function(const std::string& id, const ParamMap& params);

struct GridCell {
  double x = 0.0;
  double y = 0.0;
  std::optional<double> re_tf;
};

/// Re T_f on a res x res grid over [-r_max, r_max]^2, rows of constant y from
/// bottom to top. Cells outside |z| <= r_max, or where T_f is singular, are
/// empty. Functions outside class A (meromorphic_kp) are rejected.
std::vector<GridCell> grid_cells(const FunctionSpec& f, double A, double r_max, int resolution);

std::string to_json(const ReportRecord& record);

}  // namespace concavity
