#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "concavity/report.hpp"
#include "concavity/witness.hpp"

using namespace concavity;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitEvaluation = 2;
constexpr int kExitViolation = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// key=value lines; '#' starts a comment. Keys are either plain ("A") or
// scoped to a subcommand ("verify.samples").
std::map<std::string, std::string> load_config() {
  std::map<std::string, std::string> out;
  const char* path = std::getenv("CONCAVITY_CONFIG");
  if (!path || !*path) return out;
  std::ifstream in(path);
  if (!in) throw UsageError(std::string("CONCAVITY_CONFIG: cannot open ") + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(std::string("CONCAVITY_CONFIG: line ") + std::to_string(lineno) + " has no '='");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

// Fills options the user did not pass from the config file. Flags win over the
// file, which wins over the built-in defaults.
void apply_config(CLI::App& sub, const std::map<std::string, std::string>& config) {
  for (CLI::Option* opt : sub.get_options()) {
    if (opt->count() > 0 || opt->get_lnames().empty()) continue;
    const std::string& name = opt->get_lnames().front();
    auto it = config.find(sub.get_name() + "." + name);
    if (it == config.end()) it = config.find(name);
    if (it == config.end()) continue;
    try {
      opt->add_result(it->second);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw UsageError("CONCAVITY_CONFIG: " + name + ": " + e.what());
    }
  }
}

double parse_number(const std::string& name, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v))
    throw UsageError("parameter '" + name + "': '" + text + "' is not a number");
  return v;
}

// Comma-separated values, each either a number or an inclusive range a:b:step.
std::vector<double> parse_grid(const std::string& name, const std::string& text) {
  std::vector<double> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    item = trim(item);
    if (item.empty()) throw UsageError("parameter '" + name + "': empty grid entry");
    std::vector<std::string> parts;
    std::stringstream range(item);
    std::string part;
    while (std::getline(range, part, ':')) parts.push_back(trim(part));
    if (parts.size() == 1) {
      out.push_back(parse_number(name, parts[0]));
    } else if (parts.size() == 3) {
      const double a = parse_number(name, parts[0]), b = parse_number(name, parts[1]),
                   step = parse_number(name, parts[2]);
      if (!(step > 0.0) || b < a) throw UsageError("parameter '" + name + "': range needs a <= b and step > 0");
      const double span = (b - a) / step;
      if (span > 1e6) throw UsageError("parameter '" + name + "': range has too many points");
      const long count = static_cast<long>(std::floor(span + 1e-9)) + 1;
      for (long k = 0; k < count; ++k) out.push_back(a + static_cast<double>(k) * step);
    } else {
      throw UsageError("parameter '" + name + "': expected a number or a:b:step, got '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("parameter '" + name + "': grid is empty");
  return out;
}

ClassId parse_class(const std::string& name) {
  if (const auto cls = parse_class_id(name)) return *cls;
  throw UsageError("parameter 'class': unknown class '" + name +
                   "' (expected s0n, kab, strongly_starlike, starlike_order, close_to_star)");
}

// Optional string-valued options for the class parameters, shared by the
// radius, verify and scan subcommands.
struct ParamOptions {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;

  void add(CLI::App& sub, const std::vector<std::pair<std::string, std::string>>& names) {
    for (const auto& [name, help] : names) options[name] = sub.add_option("--" + name, values[name], help);
  }
  std::map<std::string, std::string> given() const {
    std::map<std::string, std::string> out;
    for (const auto& [name, opt] : options)
      if (opt->count() > 0) out[name] = values.at(name);
    return out;
  }
};

ParamMap scalar_params(const ParamOptions& p) {
  ParamMap out;
  for (const auto& [name, text] : p.given()) out[name] = parse_number(name, text);
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

std::string witness_json(const WitnessTestSummary& s) {
  nlohmann::ordered_json j;
  j["command"] = "witness-test";
  j["class"] = to_string(s.cls);
  j["n"] = s.n;
  j["count"] = s.count;
  j["seed"] = s.seed;
  j["A"] = s.A;
  j["solver_radius"] = s.solver_radius;
  j["checks"] = s.lemmas.checks;
  j["violations"] = s.lemmas.violations;
  j["max_violation"] = s.lemmas.max_violation;
  j["min_margin"] = s.min_margin;
  j["margin_failures"] = s.margin_failures;
  j["passed"] = s.passed();
  return j.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radii of concavity for classes of analytic functions"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success, 1 usage error, 2 non-convergence or evaluation failure, 3 property violation.\n"
      "CONCAVITY_CONFIG may name a key=value file; keys are option names, optionally\n"
      "prefixed by the subcommand (verify.samples=4096). Flags override the file.");

  const std::vector<std::pair<std::string, std::string>> class_param_names{
      {"n", "s0n: gap order n >= 1"},
      {"alpha", "kab: alpha >= 0; starlike_order: alpha in [0, 1)"},
      {"beta", "kab: beta >= alpha; strongly_starlike: beta in (0, 1]"},
  };

  // radius
  auto* radius = app.add_subcommand("radius", "Solver radius of concavity for a class, as JSON");
  std::string radius_class;
  double radius_A = 2.0, radius_tol = 1e-12;
  ParamOptions radius_params;
  radius->add_option("--class", radius_class, "s0n, kab, strongly_starlike, starlike_order, close_to_star")
      ->required();
  radius_params.add(*radius, class_param_names);
  radius->add_option("--A", radius_A, "concavity parameter in (1, 2]")->capture_default_str();
  radius->add_option("--tol", radius_tol, "bisection tolerance, >= 1e-14")->capture_default_str();

  // scan
  auto* scan = app.add_subcommand("scan", "Solver radii over a parameter grid, as CSV");
  std::string scan_class, scan_A = "2", scan_out;
  double scan_tol = 1e-12;
  ParamOptions scan_params;
  scan->add_option("--class", scan_class, "class id")->required();
  scan_params.add(*scan, {{"n", "grid of n: comma list and/or a:b:step ranges"},
                          {"alpha", "grid of alpha"},
                          {"beta", "grid of beta"}});
  scan->add_option("--A", scan_A, "grid of A")->capture_default_str();
  scan->add_option("--tol", scan_tol, "bisection tolerance")->capture_default_str();
  scan->add_option("--out", scan_out, "output path (default: standard output)");

  // verify
  auto* verify = app.add_subcommand("verify", "Compare the solver radius with the class extremal, as JSON");
  std::string verify_class;
  double verify_A = 2.0, verify_tol = 1e-12;
  VerifyOptions verify_options;
  ParamOptions verify_params;
  verify->add_option("--class", verify_class, "class id")->required();
  verify_params.add(*verify, class_param_names);
  verify_params.add(*verify, {{"lambda", "strongly_starlike extremal: lambda (default 1)"},
                              {"b", "starlike_order extremal: Schild b in [-1, 1] (default -1)"}});
  verify->add_option("--A", verify_A, "concavity parameter in (1, 2]")->capture_default_str();
  verify->add_option("--tol", verify_tol, "solver tolerance")->capture_default_str();
  verify->add_option("--samples", verify_options.samples, "circle samples, >= 256")->capture_default_str();
  verify->add_option("--empirical-tol", verify_options.empirical_tol, "empirical bisection tolerance")
      ->capture_default_str();

  // grid
  auto* grid = app.add_subcommand("grid", "Re T_f on a square grid, as CSV (x,y,re_tf)");
  std::string grid_function;
  ParamOptions grid_params;
  double grid_A = 2.0, grid_rmax = 0.5;
  int grid_res = 101;
  std::string grid_out;
  grid->add_option("--function", grid_function,
                   "identity, generalized_koebe, rotated_koebe, power_distortion, monomial, schild, "
                   "close_to_star_extremal")
      ->required();
  grid_params.add(*grid, {{"n", "generalized_koebe / monomial n"},
                          {"alpha", "power_distortion / schild alpha"},
                          {"beta", "power_distortion beta"},
                          {"lambda", "monomial lambda"},
                          {"b", "schild b"}});
  grid->add_option("--A", grid_A, "concavity parameter in (1, 2]")->capture_default_str();
  grid->add_option("--r-max", grid_rmax, "half-width of the grid, < 1")->capture_default_str();
  grid->add_option("--resolution", grid_res, "points per axis, <= 4096")->capture_default_str();
  grid->add_option("--out", grid_out, "output path (default: standard output)");

  // witness-test
  auto* witness = app.add_subcommand("witness-test", "Lemma checks and radius margins on random witnesses, as JSON");
  std::string witness_class;
  int witness_n = 1, witness_count = 100, witness_threads = 0;
  std::uint64_t witness_seed = 7;
  double witness_A = 2.0;
  witness->add_option("--class", witness_class, "s0n or close_to_star")->required();
  witness->add_option("--n", witness_n, "gap order n >= 1 (close_to_star uses 1)")->capture_default_str();
  witness->add_option("--count", witness_count, "number of witnesses, >= 1")->capture_default_str();
  witness->add_option("--seed", witness_seed, "random seed")->capture_default_str();
  witness->add_option("--A", witness_A, "concavity parameter in (1, 2]")->capture_default_str();
  witness->add_option("--threads", witness_threads, "worker threads (0: hardware concurrency)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    const auto config = load_config();
    for (CLI::App* sub : app.get_subcommands()) apply_config(*sub, config);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (radius->parsed()) {
      const RadiusQuery q{parse_class(radius_class), scalar_params(radius_params), radius_A, radius_tol};
      const ReportRecord rec = radius_report(q);
      std::cout << to_json(rec) << '\n';
      return rec.solver.converged ? kExitOk : kExitEvaluation;
    }

    if (verify->parsed()) {
      const RadiusQuery q{parse_class(verify_class), scalar_params(verify_params), verify_A, verify_tol};
      phi_for(q);
      if (verify_options.samples < kMinCircleSamples)
        throw UsageError("parameter 'samples': must be >= " + std::to_string(kMinCircleSamples));
      std::cout << to_json(verify_report(q, verify_options)) << '\n';
      return kExitOk;
    }

    if (scan->parsed()) {
      const ClassId cls = parse_class(scan_class);
      std::map<std::string, std::vector<double>> grid_spec;
      for (const auto& [name, text] : scan_params.given()) grid_spec[name] = parse_grid(name, text);
      const auto rows = scan_rows(cls, grid_spec, parse_grid("A", scan_A), scan_tol);

      std::ofstream file;
      if (!scan_out.empty()) {
        file.open(scan_out);
        if (!file) throw UsageError("parameter 'out': cannot open " + scan_out);
      }
      std::ostream& out = scan_out.empty() ? std::cout : file;
      std::vector<std::string> header{"class"};
      for (const auto& name : class_parameters(cls)) header.push_back(name);
      for (const char* col : {"A", "radius", "converged", "residual", "iterations"}) header.emplace_back(col);
      write_row(out, header);

      std::size_t failures = 0;
      for (const auto& row : rows) {
        std::vector<std::string> cells{to_string(cls)};
        for (double v : row.params) cells.push_back(fmt17(v));
        cells.push_back(fmt17(row.A));
        if (row.result) {
          cells.push_back(fmt17(row.result->value));
          cells.emplace_back(row.result->converged ? "true" : "false");
          cells.push_back(fmt17(row.result->residual));
          cells.push_back(std::to_string(row.result->iterations));
        } else {
          cells.insert(cells.end(), {"", "false", "", ""});
          std::cerr << "row " << (&row - rows.data()) + 1 << ": " << row.error << '\n';
        }
        if (!row.result || !row.result->converged) ++failures;
        write_row(out, cells);
      }
      return failures == rows.size() ? kExitEvaluation : kExitOk;
    }

    if (grid->parsed()) {
      const FunctionSpec f = make_function(grid_function, scalar_params(grid_params));
      const auto cells = grid_cells(f, grid_A, grid_rmax, grid_res);
      std::ofstream file;
      if (!grid_out.empty()) {
        file.open(grid_out);
        if (!file) throw UsageError("parameter 'out': cannot open " + grid_out);
      }
      std::ostream& out = grid_out.empty() ? std::cout : file;
      out << "x,y,re_tf\n";
      for (const auto& c : cells) write_row(out, {fmt17(c.x), fmt17(c.y), c.re_tf ? fmt17(*c.re_tf) : ""});
      return kExitOk;
    }

    if (witness->parsed()) {
      WitnessClass cls;
      if (witness_class == "s0n")
        cls = WitnessClass::S0n;
      else if (witness_class == "close_to_star")
        cls = WitnessClass::CloseToStar;
      else
        throw UsageError("parameter 'class': witness-test supports s0n and close_to_star, got '" +
                         witness_class + "'");
      const auto summary = run_witness_test(cls, witness_n, witness_count, witness_seed, witness_A, witness_threads);
      std::cout << witness_json(summary) << '\n';
      return summary.passed() ? kExitOk : kExitViolation;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidArgument ? kExitUsage : kExitEvaluation;
  }
  return kExitUsage;
}
