#include <complex>
#include <string>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "concavity/errors.hpp"
#include "concavity/functional.hpp"
#include "concavity/phi.hpp"
#include "concavity/report.hpp"
#include "concavity/scan.hpp"
#include "concavity/witness.hpp"

namespace py = pybind11;
using namespace concavity;

namespace {

ClassId class_of(const std::string& name) {
  if (const auto cls = parse_class_id(name)) return *cls;
  throw Error(ErrorKind::InvalidArgument, "unknown class '" + name + "'");
}

double get(const ParamMap& params, const std::string& key, double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

PhiSpec phi_of(const std::string& name, const ParamMap& p) {
  const double A = get(p, "A", 2.0);
  if (name == "phi1") return Phi1{static_cast<int>(get(p, "n", 1.0)), A};
  if (name == "phi2") return Phi2{get(p, "alpha", 0.0), get(p, "beta", 0.0), A};
  if (name == "phi3") return Phi3{get(p, "beta", 1.0), A};
  if (name == "phi4") return Phi4{get(p, "alpha", 0.0), A};
  if (name == "phi6") return Phi6{A};
  throw Error(ErrorKind::InvalidArgument, "unknown phi '" + name + "' (phi1, phi2, phi3, phi4, phi6)");
}

py::dict result_dict(const RadiusResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["bracket"] = py::make_tuple(r.bracket_lo, r.bracket_hi);
  d["residual"] = r.residual;
  d["iterations"] = r.iterations;
  d["converged"] = r.converged;
  d["failure"] = r.failure ? py::cast(std::string(to_string(*r.failure))) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Radii of concavity: solvers, functional evaluation and numerical verification";

  static py::exception<Error> error(m, "ConcavityError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("radius_report", [](const std::string& cls, const ParamMap& params, double A, double tol) {
    return to_json(radius_report({class_of(cls), params, A, tol}));
  }, py::arg("cls"), py::arg("params") = ParamMap{}, py::arg("A") = 2.0, py::arg("tol") = 1e-12);

  m.def("verify_report", [](const std::string& cls, const ParamMap& params, double A, int samples,
                            double empirical_tol) {
    py::gil_scoped_release release;
    return to_json(verify_report({class_of(cls), params, A}, {samples, empirical_tol}));
  }, py::arg("cls"), py::arg("params") = ParamMap{}, py::arg("A") = 2.0,
     py::arg("samples") = kDefaultCircleSamples, py::arg("empirical_tol") = 1e-9);

  m.def("eval_phi", [](const std::string& name, double r, const ParamMap& params) {
    return eval_phi(phi_of(name, params), r);
  }, py::arg("name"), py::arg("r"), py::arg("params") = ParamMap{});

  m.def("least_root", [](const std::string& name, const ParamMap& params, double tol) {
    return result_dict(least_root(phi_of(name, params), tol));
  }, py::arg("name"), py::arg("params") = ParamMap{}, py::arg("tol") = 1e-12);

  m.def("closed_form_root", [](const std::string& name, const ParamMap& params) {
    return closed_form_root(phi_of(name, params));
  }, py::arg("name"), py::arg("params") = ParamMap{});

  m.def("radius_of_convexity", &radius_of_convexity, py::arg("n"), py::arg("beta"));

  m.def("eval_Tf", [](const std::string& function, const ParamMap& params, double A, std::complex<double> z) {
    return eval_Tf(make_function(function, params), ConcavityParam(A), z);
  }, py::arg("function"), py::arg("params") = ParamMap{}, py::arg("A") = 2.0, py::arg("z") = 0.0);

  m.def("eval_Pf", [](const std::string& function, const ParamMap& params, double p, std::complex<double> z) {
    return eval_Pf(make_function(function, params), PoleParam(p), z);
  }, py::arg("function"), py::arg("params") = ParamMap{}, py::arg("p") = 0.5, py::arg("z") = 0.0);

  m.def("limit_Pf_at_pole", [](const std::string& function, const ParamMap& params, double p) {
    const auto lim = limit_Pf_at_pole(make_function(function, params), PoleParam(p));
    return py::make_tuple(lim.value, lim.error_estimate);
  }, py::arg("function"), py::arg("params") = ParamMap{}, py::arg("p") = 0.5);

  m.def("empirical_radius", [](const std::string& function, const ParamMap& params, double A, double tol,
                               int samples, bool rotation_family) {
    EmpiricalRadiusOptions o;
    o.samples = samples;
    o.orientation = rotation_family ? Orientation::RotationFamily : Orientation::Fixed;
    EmpiricalRadius e;
    {
      py::gil_scoped_release release;
      e = empirical_concavity_radius(make_function(function, params), ConcavityParam(A), tol, o);
    }
    py::dict d = result_dict(e.radius);
    d["argmin_angle"] = e.argmin_angle;
    return d;
  }, py::arg("function"), py::arg("params") = ParamMap{}, py::arg("A") = 2.0, py::arg("tol") = 1e-9,
     py::arg("samples") = kDefaultCircleSamples, py::arg("rotation_family") = false);

  m.def("grid", [](const std::string& function, const ParamMap& params, double A, double r_max, int resolution) {
    const auto cells = grid_cells(make_function(function, params), A, r_max, resolution);
    py::list out;
    for (const auto& c : cells) out.append(py::make_tuple(c.x, c.y, c.re_tf ? py::cast(*c.re_tf) : py::none()));
    return out;
  }, py::arg("function"), py::arg("params") = ParamMap{}, py::arg("A") = 2.0, py::arg("r_max") = 0.5,
     py::arg("resolution") = 101);

  m.def("witness_test", [](const std::string& cls, int n, int count, std::uint64_t seed, double A, int threads) {
    WitnessClass wc;
    if (cls == "s0n")
      wc = WitnessClass::S0n;
    else if (cls == "close_to_star")
      wc = WitnessClass::CloseToStar;
    else
      throw Error(ErrorKind::InvalidArgument, "witness class must be s0n or close_to_star");
    WitnessTestSummary s;
    {
      py::gil_scoped_release release;
      s = run_witness_test(wc, n, count, seed, A, threads);
    }
    py::dict d;
    d["class"] = cls;
    d["n"] = s.n;
    d["count"] = s.count;
    d["seed"] = s.seed;
    d["A"] = s.A;
    d["solver_radius"] = s.solver_radius;
    d["checks"] = s.lemmas.checks;
    d["violations"] = s.lemmas.violations;
    d["max_violation"] = s.lemmas.max_violation;
    d["min_margin"] = s.min_margin;
    d["margin_failures"] = s.margin_failures;
    d["passed"] = s.passed();
    return d;
  }, py::arg("cls"), py::arg("n") = 1, py::arg("count") = 100, py::arg("seed") = 7, py::arg("A") = 2.0,
     py::arg("threads") = 0);
}
