#include "concavity/report.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

namespace concavity {

namespace {

constexpr double kCloseToStarCeiling = std::numbers::sqrt2 - 1.0 - 1e-9;

[[noreturn]] void bad_param(const std::string& name, const std::string& why) {
  throw Error(ErrorKind::InvalidArgument, "parameter '" + name + "': " + why);
}

std::vector<std::string> class_extras(ClassId cls) {
  switch (cls) {
    case ClassId::StronglyStarlike: return {"n", "lambda"};
    case ClassId::StarlikeOrder: return {"b"};
    default: return {};
  }
}

void check_known(const ParamMap& params, const std::set<std::string>& allowed) {
  for (const auto& [name, value] : params) {
    if (!allowed.count(name)) bad_param(name, "not recognized here");
    if (!std::isfinite(value)) bad_param(name, "must be finite");
  }
}

double required(const ParamMap& params, const std::string& name) {
  const auto it = params.find(name);
  if (it == params.end()) bad_param(name, "missing");
  return it->second;
}

double optional_param(const ParamMap& params, const std::string& name, double fallback) {
  const auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

int integer_param(const std::string& name, double v) {
  if (v != std::floor(v) || v < 1.0 || v > 1e6) bad_param(name, "must be a positive integer");
  return static_cast<int>(v);
}

// Rethrows an InvalidArgument from `fn` as one naming `name`.
template <class F>
auto naming(const std::string& name, F&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidArgument) throw;
    const std::string what = e.what();
    bad_param(name, what.substr(what.find(": ") + 2));
  }
}

void check_A(double A) {
  if (!(A > 1.0 && A <= 2.0)) bad_param("A", "must lie in (1, 2]");
}

// Published closed forms for T_f (or 1 + z f"/f') of each extremal, checked
// against the jet evaluation of the same quantity.
struct Display {
  CatalogFunction f;
  std::function<Complex(Complex)> displayed;
  std::function<Complex(Complex)> computed;
};

std::optional<Display> reference_display(const RadiusQuery& q, const CatalogFunction& extremal) {
  const double A = q.A;
  auto head = [A](Complex z) { return (A + 1.0) / 2.0 * (1.0 - z) / (1.0 + z); };
  auto scale = 2.0 / (A - 1.0);
  auto jet_T = [A](const CatalogFunction& f) {
    return [f, A](Complex z) { return eval_Tf(FunctionSpec{f}, ConcavityParam(A), z); };
  };
  switch (q.cls) {
    case ClassId::S0n: {
      const int n = static_cast<int>(q.params.at("n"));
      const CatalogFunction f = GeneralizedKoebe{n};
      return Display{f,
                     [=](Complex z) {
                       const Complex zn = std::pow(z, n), z2n = zn * zn;
                       return scale * (head(z) - 1.0 -
                                       ((2.0 * n + 2.0) * zn + (1.0 - n + 2.0 / n) * z2n) / (1.0 - z2n));
                     },
                     jet_T(f)};
    }
    case ClassId::Kab: {
      const double a = q.params.at("alpha"), b = q.params.at("beta");
      return Display{extremal,
                     [=](Complex z) {
                       return scale * (head(z) - 1.0 + 2.0 * (a - b) / std::pow(1.0 - z, 1.0 - a + b) -
                                       (-1.0 + a - b) * (a - b) * z / std::pow(1.0 - z, 2.0 - a + b));
                     },
                     jet_T(extremal)};
    }
    case ClassId::StronglyStarlike: {
      const auto& m = std::get<Monomial>(extremal);
      return Display{extremal,
                     [=](Complex z) {
                       const Complex lzn = m.lambda * std::pow(z, m.n);
                       return scale * (head(z) - (1.0 + (m.n + 1.0) * lzn) / (1.0 + lzn));
                     },
                     jet_T(extremal)};
    }
    case ClassId::StarlikeOrder: {
      const auto& s = std::get<Schild>(extremal);
      if (s.b != -1.0) return std::nullopt;
      const double d = 2.0 * s.alpha - 1.0;
      return Display{extremal,
                     [=](Complex z) {
                       return (d * d * z * z + (6.0 * s.alpha - 4.0) * z + 1.0) / ((1.0 + z) * (1.0 + d * z));
                     },
                     [=](Complex z) { return 1.0 + pre_schwarzian_term(eval_catalog(extremal, z), z); }};
    }
    case ClassId::CloseToStar:
      return Display{extremal,
                     [=](Complex z) {
                       const Complex u = 1.0 - z;
                       return scale * (head(z) - 1.0 - (7.0 * z - z * z) / (u * u * u));
                     },
                     jet_T(extremal)};
  }
  return std::nullopt;
}

double display_mismatch(const Display& d) {
  double worst = 0.0;
  for (double angle : {0.4, 1.3, 2.2, 3.1, 4.0, 5.3}) {
    const Complex z = std::polar(0.3, angle);
    worst = std::max(worst, std::abs(d.displayed(z) - d.computed(z)));
  }
  return worst;
}

}  // namespace

std::optional<ClassId> parse_class_id(const std::string& name) {
  if (name == "s0n") return ClassId::S0n;
  if (name == "kab") return ClassId::Kab;
  if (name == "strongly_starlike") return ClassId::StronglyStarlike;
  if (name == "starlike_order") return ClassId::StarlikeOrder;
  if (name == "close_to_star") return ClassId::CloseToStar;
  return std::nullopt;
}

std::string to_string(ClassId cls) {
  switch (cls) {
    case ClassId::S0n: return "s0n";
    case ClassId::Kab: return "kab";
    case ClassId::StronglyStarlike: return "strongly_starlike";
    case ClassId::StarlikeOrder: return "starlike_order";
    case ClassId::CloseToStar: return "close_to_star";
  }
  return "unknown";
}

std::vector<std::string> class_parameters(ClassId cls) {
  switch (cls) {
    case ClassId::S0n: return {"n"};
    case ClassId::Kab: return {"alpha", "beta"};
    case ClassId::StronglyStarlike: return {"beta"};
    case ClassId::StarlikeOrder: return {"alpha"};
    case ClassId::CloseToStar: return {};
  }
  return {};
}

PhiSpec phi_for(const RadiusQuery& q) {
  std::set<std::string> allowed;
  for (const auto& n : class_parameters(q.cls)) allowed.insert(n);
  for (const auto& n : class_extras(q.cls)) allowed.insert(n);
  check_known(q.params, allowed);
  check_A(q.A);
  if (!(q.tol >= 1e-14)) bad_param("tol", "must be >= 1e-14");

  PhiSpec spec;
  switch (q.cls) {
    case ClassId::S0n: spec = Phi1{integer_param("n", required(q.params, "n")), q.A}; break;
    case ClassId::Kab: {
      const double a = required(q.params, "alpha"), b = required(q.params, "beta");
      if (a < 0.0) bad_param("alpha", "must be >= 0");
      if (b < a) bad_param("beta", "must be >= alpha");
      spec = Phi2{a, b, q.A};
      break;
    }
    case ClassId::StronglyStarlike: {
      const double b = required(q.params, "beta");
      if (!(b > 0.0 && b <= 1.0)) bad_param("beta", "must lie in (0, 1]");
      spec = Phi3{b, q.A};
      break;
    }
    case ClassId::StarlikeOrder: {
      const double a = required(q.params, "alpha");
      if (!(a >= 0.0 && a < 1.0)) bad_param("alpha", "must lie in [0, 1)");
      spec = Phi4{a, q.A};
      break;
    }
    case ClassId::CloseToStar: spec = Phi6{q.A}; break;
  }
  validate(spec);
  return spec;
}

CatalogFunction class_extremal(const RadiusQuery& q) {
  phi_for(q);
  CatalogFunction f;
  switch (q.cls) {
    case ClassId::S0n: {
      const int n = static_cast<int>(q.params.at("n"));
      f = n == 1 ? CatalogFunction{RotatedKoebe{}} : CatalogFunction{GeneralizedKoebe{n}};
      break;
    }
    case ClassId::Kab: f = PowerDistortion{q.params.at("alpha"), q.params.at("beta")}; break;
    case ClassId::StronglyStarlike: {
      const int n = integer_param("n", optional_param(q.params, "n", 1.0));
      f = Monomial{optional_param(q.params, "lambda", 1.0), n};
      naming("lambda", [&] { validate(f); return 0; });
      break;
    }
    case ClassId::StarlikeOrder:
      f = Schild{q.params.at("alpha"), optional_param(q.params, "b", -1.0)};
      naming("b", [&] { validate(f); return 0; });
      break;
    case ClassId::CloseToStar: f = CloseToStarExtremal{}; break;
  }
  return f;
}

ReportRecord radius_report(const RadiusQuery& query) {
  const PhiSpec spec = phi_for(query);
  ReportRecord rec;
  rec.command = "radius";
  rec.query = query;
  rec.solver = least_root(spec, query.tol);
  rec.closed_form = closed_form_root(spec);
  rec.extremal_id = catalog_id(class_extremal(query));
  if (!rec.solver.converged) rec.flags.emplace_back("SOLVER_NO_ROOT");
  return rec;
}

ReportRecord verify_report(const RadiusQuery& query, const VerifyOptions& options) {
  ReportRecord rec = radius_report(query);
  rec.command = "verify";
  const CatalogFunction extremal = class_extremal(query);
  const FunctionSpec f{extremal};
  const ConcavityParam A(query.A);

  EmpiricalRadiusOptions opts;
  opts.samples = options.samples;
  if (query.cls == ClassId::CloseToStar) opts.ceiling = kCloseToStarCeiling;
  const auto fixed = empirical_concavity_radius(f, A, options.empirical_tol, opts);
  opts.orientation = Orientation::RotationFamily;
  const auto family = empirical_concavity_radius(f, A, options.empirical_tol, opts);

  rec.empirical_radius = family.radius.value;
  rec.empirical_radius_fixed = fixed.radius.value;
  rec.argmin_angle = fixed.argmin_angle;

  if (query.cls == ClassId::S0n && query.params.at("n") == 1.0) {
    // The Koebe function itself, in its usual orientation.
    EmpiricalRadiusOptions koebe_opts;
    koebe_opts.samples = options.samples;
    const auto koebe = empirical_concavity_radius(FunctionSpec{CatalogFunction{GeneralizedKoebe{1}}}, A,
                                                  options.empirical_tol, koebe_opts);
    rec.alternates.push_back({catalog_id(GeneralizedKoebe{1}), koebe.radius.value, koebe.argmin_angle});
  }

  auto& flags = rec.flags;
  const double delta = *rec.empirical_radius - rec.solver.value;
  if (std::abs(delta) <= kMatchTolerance)
    flags.emplace_back("MATCH");
  else
    flags.emplace_back(delta > 0.0 ? "EXTREMAL_LOOSE" : "EXTREMAL_BELOW_BOUND");
  if (!fixed.radius.converged || !family.radius.converged) flags.emplace_back("EMPIRICAL_NOT_CONVERGED");
  if (!is_normalized(f)) flags.emplace_back("NORMALIZATION_VIOLATION");
  if (const auto display = reference_display(query, extremal)) {
    rec.display_max_diff = display_mismatch(*display);
    if (!(*rec.display_max_diff <= kExpressionTolerance)) flags.emplace_back("PAPER_EXPR_MISMATCH");
  }
  return rec;
}

std::vector<ScanRow> scan_rows(ClassId cls, const std::map<std::string, std::vector<double>>& grid,
                               const std::vector<double>& a_values, double tol) {
  const auto names = class_parameters(cls);
  for (const auto& [name, values] : grid)
    if (std::find(names.begin(), names.end(), name) == names.end()) bad_param(name, "not a parameter of " + to_string(cls));
  std::vector<std::vector<double>> axes;
  for (const auto& name : names) {
    const auto it = grid.find(name);
    if (it == grid.end() || it->second.empty()) bad_param(name, "grid is empty");
    axes.push_back(it->second);
  }
  if (a_values.empty()) bad_param("A", "grid is empty");

  std::vector<ScanRow> rows;
  std::vector<std::size_t> index(axes.size(), 0);
  for (;;) {
    std::vector<double> point;
    for (std::size_t i = 0; i < axes.size(); ++i) point.push_back(axes[i][index[i]]);
    for (double A : a_values) {
      ScanRow row{point, A, std::nullopt, {}};
      RadiusQuery q{cls, {}, A, tol};
      for (std::size_t i = 0; i < names.size(); ++i) q.params[names[i]] = point[i];
      try {
        row.result = least_root(phi_for(q), tol);
      } catch (const Error& e) {
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
    // Odometer increment, last axis fastest.
    std::size_t axis = axes.size();
    while (axis > 0) {
      --axis;
      if (++index[axis] < axes[axis].size()) break;
      index[axis] = 0;
      if (axis == 0) return rows;
    }
    if (axes.empty()) return rows;
  }
}

FunctionSpec make_function(const std::string& id, const ParamMap& params) {
  auto only = [&](std::set<std::string> allowed) { check_known(params, allowed); };
  CatalogFunction c;
  if (id == "identity") {
    only({});
    return SeriesFunction::identity();
  } else if (id == "generalized_koebe" || id == "koebe") {
    only({"n"});
    c = GeneralizedKoebe{integer_param("n", optional_param(params, "n", 1.0))};
  } else if (id == "rotated_koebe") {
    only({});
    c = RotatedKoebe{};
  } else if (id == "power_distortion") {
    only({"alpha", "beta"});
    c = PowerDistortion{optional_param(params, "alpha", 0.0), optional_param(params, "beta", 2.0)};
    naming("beta", [&] { validate(c); return 0; });
  } else if (id == "monomial") {
    only({"lambda", "n"});
    c = Monomial{optional_param(params, "lambda", 1.0), integer_param("n", optional_param(params, "n", 1.0))};
    naming("lambda", [&] { validate(c); return 0; });
  } else if (id == "schild") {
    only({"alpha", "b"});
    c = Schild{optional_param(params, "alpha", 0.0), optional_param(params, "b", -1.0)};
    naming("alpha", [&] { validate(c); return 0; });
  } else if (id == "close_to_star_extremal") {
    only({});
    c = CloseToStarExtremal{};
  } else if (id == "meromorphic_kp") {
    only({"p"});
    c = MeromorphicKp{optional_param(params, "p", 0.5)};
    naming("p", [&] { validate(c); return 0; });
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown function id '" + id + "'");
  }
  return c;
}

std::vector<GridCell> grid_cells(const FunctionSpec& f, double A, double r_max, int resolution) {
  if (const auto* c = std::get_if<CatalogFunction>(&f); c && std::holds_alternative<MeromorphicKp>(*c))
    throw Error(ErrorKind::InvalidArgument, "T_f is defined for class A; meromorphic_kp is excluded");
  check_A(A);
  const ConcavityParam param(A);
  if (!(r_max > 0.0 && r_max < 1.0)) bad_param("r-max", "must lie in (0, 1)");
  if (resolution < 1 || resolution > 4096) bad_param("resolution", "must lie in [1, 4096]");

  auto coord = [&](int i) {
    return resolution == 1 ? 0.0 : -r_max + 2.0 * r_max * i / (resolution - 1);
  };
  std::vector<GridCell> cells;
  cells.reserve(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution));
  for (int iy = 0; iy < resolution; ++iy) {
    for (int ix = 0; ix < resolution; ++ix) {
      GridCell cell{coord(ix), coord(iy), std::nullopt};
      const Complex z(cell.x, cell.y);
      if (std::abs(z) <= r_max * (1.0 + 1e-12)) {
        try {
          const double v = eval_Tf(f, param, z).real();
          if (std::isfinite(v)) cell.re_tf = v;
        } catch (const Error&) {
        }
      }
      cells.push_back(cell);
    }
  }
  return cells;
}

std::string to_json(const ReportRecord& rec) {
  using nlohmann::ordered_json;
  auto opt = [](const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };

  ordered_json params = ordered_json::object();
  for (const auto& [name, value] : rec.query.params) params[name] = value;
  ordered_json alternates = ordered_json::array();
  for (const auto& a : rec.alternates)
    alternates.push_back({{"extremal_id", a.extremal_id},
                          {"empirical_radius", a.empirical_radius},
                          {"argmin_angle", a.argmin_angle}});

  ordered_json j;
  j["command"] = rec.command;
  j["query"] = {{"class", to_string(rec.query.cls)}, {"params", params}, {"A", rec.query.A}, {"tol", rec.query.tol}};
  j["solver_radius"] = rec.solver.value;
  j["converged"] = rec.solver.converged;
  j["bracket"] = {rec.solver.bracket_lo, rec.solver.bracket_hi};
  j["residual"] = rec.solver.residual;
  j["iterations"] = rec.solver.iterations;
  j["closed_form"] = opt(rec.closed_form);
  j["empirical_radius"] = opt(rec.empirical_radius);
  j["empirical_radius_fixed"] = opt(rec.empirical_radius_fixed);
  j["extremal_id"] = rec.extremal_id;
  j["argmin_angle"] = opt(rec.argmin_angle);
  j["display_max_diff"] = opt(rec.display_max_diff);
  j["alternates"] = alternates;
  j["flags"] = rec.flags;
  return j.dump(2);
}

}  // namespace concavity
