// Python bindings: matrices cross the boundary as complex128 numpy arrays,
// reports as plain dicts.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "meantransform/classifiers.hpp"
#include "meantransform/generators.hpp"
#include "meantransform/json_io.hpp"
#include "meantransform/numerics.hpp"
#include "meantransform/phi_maps.hpp"
#include "meantransform/theorem_suite.hpp"
#include "meantransform/transforms.hpp"
#include "meantransform/verify.hpp"

namespace py = pybind11;
namespace mt = meantransform;

namespace {

mt::Tolerance tolerance(double tol) {
  mt::Tolerance t;
  t.abs_tol = tol;
  t.rel_tol = tol;
  t.validate();
  return t;
}

py::object to_python(const mt::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

mt::json from_python(const py::object& obj) {
  const std::string text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return mt::json::parse(text);
}

py::dict verdict_dict(const mt::ClassVerdict& v) {
  py::dict d;
  d["holds"] = v.holds == mt::Verdict::indeterminate ? py::object(py::none())
                                                     : py::object(py::bool_(v.yes()));
  d["verdict"] = std::string(mt::to_string(v.holds));
  d["residual"] = v.residual;
  d["normalized_residual"] = v.normalized_residual;
  d["description"] = v.description;
  return d;
}

mt::GeneratorSpec make_spec(const std::string& kind, int dim, std::uint64_t seed,
                            std::optional<int> rank) {
  mt::GeneratorSpec spec;
  spec.kind = mt::generator_kind_from_string(kind);
  spec.dim = dim;
  spec.seed = seed;
  spec.rank = rank;
  return spec;
}

using Classifier = mt::ClassVerdict (*)(const mt::ComplexMatrix&, const mt::Tolerance&);

void def_classifier(py::module_& m, const char* name, Classifier fn, const char* doc) {
  m.def(
      name, [fn](const mt::ComplexMatrix& t, double tol) { return verdict_dict(fn(t, tolerance(tol))); },
      py::arg("t"), py::arg("tol") = 1e-8, doc);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mean, Aluthge and Duggal transforms with a randomized property checker";

  m.def(
      "polar_decompose",
      [](const mt::ComplexMatrix& t, double tol) {
        const mt::PolarParts p = mt::polar_decompose(t, tolerance(tol));
        return py::make_tuple(p.V, p.P, p.rank);
      },
      py::arg("t"), py::arg("tol") = 1e-8, "Canonical polar decomposition; returns (V, P, rank).");
  m.def(
      "svd",
      [](const mt::ComplexMatrix& t) {
        const mt::SvdParts s = mt::svd(t);
        return py::make_tuple(s.U, s.sigma, s.Vh);
      },
      py::arg("t"), "Full SVD; returns (U, sigma, Vh).");
  m.def(
      "sqrt_psd", [](const mt::ComplexMatrix& p, double tol) { return mt::sqrt_psd(p, tolerance(tol)); },
      py::arg("p"), py::arg("tol") = 1e-8);
  m.def("operator_norm", &mt::operator_norm, py::arg("t"));
  m.def("rank_one", &mt::rank_one, py::arg("x"), py::arg("y"), "x (x) y, i.e. u -> <u, y> x.");

  m.def(
      "mean_transform",
      [](const mt::ComplexMatrix& t, double tol) { return mt::mean_transform(t, tolerance(tol)); },
      py::arg("t"), py::arg("tol") = 1e-8, "(V|T| + |T|V) / 2");
  m.def(
      "aluthge_transform",
      [](const mt::ComplexMatrix& t, double lam, double tol) {
        return mt::aluthge_transform(t, lam, tolerance(tol));
      },
      py::arg("t"), py::arg("lam") = 0.5, py::arg("tol") = 1e-8, "|T|^lam V |T|^(1 - lam)");
  m.def(
      "duggal_transform",
      [](const mt::ComplexMatrix& t, double tol) { return mt::duggal_transform(t, tolerance(tol)); },
      py::arg("t"), py::arg("tol") = 1e-8, "|T| V");
  m.def("jordan_product", &mt::jordan_product, py::arg("a"), py::arg("b"), "(AB + BA) / 2");
  m.def(
      "iterate_mean",
      [](const mt::ComplexMatrix& t, int max_steps, double stop_tol, double tol) {
        const mt::MeanIterationTrace tr = mt::iterate_mean(t, max_steps, stop_tol, tolerance(tol));
        py::dict d;
        d["iterates"] = tr.iterates;
        d["deltas"] = tr.deltas;
        d["converged"] = tr.converged;
        d["steps"] = tr.steps;
        return d;
      },
      py::arg("t"), py::arg("max_steps") = 50, py::arg("stop_tol") = 1e-12, py::arg("tol") = 1e-8);
  m.def("rank_one_mean", &mt::rank_one_mean, py::arg("x"), py::arg("y"),
        "Closed form of M(x (x) y).");

  def_classifier(m, "is_self_adjoint", &mt::is_self_adjoint, "T = T*");
  def_classifier(m, "is_orthogonal_projection", &mt::is_orthogonal_projection, "T^2 = T = T*");
  def_classifier(m, "is_partial_isometry", &mt::is_partial_isometry, "T T* T = T");
  def_classifier(m, "is_isometry", &mt::is_isometry, "T*T = I");
  def_classifier(m, "is_unitary", &mt::is_unitary, "T*T = TT* = I");
  def_classifier(m, "is_normal", &mt::is_normal, "T*T = TT*");
  def_classifier(m, "is_quasinormal", &mt::is_quasinormal, "T commutes with T*T");
  def_classifier(m, "is_nilpotent2", &mt::is_nilpotent2, "T^2 = 0");

  m.def(
      "generate",
      [](const std::string& kind, int dim, std::uint64_t seed, std::optional<int> rank) {
        return mt::generate(make_spec(kind, dim, seed, rank));
      },
      py::arg("kind"), py::arg("dim"), py::arg("seed") = 0, py::arg("rank") = py::none(),
      "Seeded, certified random matrix of the named class.");
  m.def("properties", []() {
    py::list out;
    for (const auto& info : mt::property_registry()) {
      py::dict d;
      d["id"] = info.id;
      d["statement"] = info.statement;
      d["expected_to_hold"] = info.expected_to_hold;
      d["min_dim"] = info.min_dim;
      out.append(d);
    }
    return out;
  });
  m.def(
      "falsify",
      [](const std::string& id, int dim, int trials, std::uint64_t seed, const std::string& kind,
         double tol) {
        return to_python(mt::report_to_json(
            mt::falsify(id, make_spec(kind, dim, seed, std::nullopt), trials, tolerance(tol))));
      },
      py::arg("property_id"), py::arg("dim"), py::arg("trials") = 200, py::arg("seed") = 0,
      py::arg("kind") = "ginibre", py::arg("tol") = 1e-8, "Run one registered property; returns the report.");
  m.def(
      "verify",
      [](const std::string& property, int trials, std::vector<int> dims, std::uint64_t seed,
         double tol) {
        mt::CliConfig config;
        config.trials = trials;
        config.dims = std::move(dims);
        config.seed = seed;
        config.tol = tol;
        return to_python(mt::verify_to_json(property, config, mt::run_verify(property, config)));
      },
      py::arg("property") = "all", py::arg("trials") = mt::CliConfig{}.trials,
      py::arg("dims") = mt::CliConfig{}.dims, py::arg("seed") = 0, py::arg("tol") = mt::CliConfig{}.tol,
      "Same sweep and JSON report as the command-line `verify`.");
  m.def(
      "check_identity_characterization",
      [](const mt::ComplexMatrix& t, int samples, std::uint64_t seed, double tol) {
        return to_python(mt::report_to_json(
            mt::check_identity_characterization(t, samples, seed, tolerance(tol))));
      },
      py::arg("t"), py::arg("samples") = 50, py::arg("seed") = 0, py::arg("tol") = 1e-8);

  m.def(
      "apply_phi",
      [](const py::object& map, const mt::ComplexMatrix& t) {
        return mt::apply_phi(mt::phimap_from_json(from_python(map)), t);
      },
      py::arg("map"), py::arg("t"), "Apply a map given in its JSON form (a dict).");
  m.def(
      "commuting_residual",
      [](const py::object& map, const mt::ComplexMatrix& a, const mt::ComplexMatrix& b, double tol) {
        const mt::Tolerance t = tolerance(tol);
        return mt::commuting_residual(mt::phimap_from_json(from_python(map), t), a, b, t);
      },
      py::arg("map"), py::arg("a"), py::arg("b"), py::arg("tol") = 1e-8);
  m.def(
      "verify_forward_theorem",
      [](int dim, int trials, std::uint64_t seed, double tol) {
        return to_python(mt::report_to_json(mt::verify_forward_theorem(dim, trials, seed, tolerance(tol))));
      },
      py::arg("dim"), py::arg("trials") = 100, py::arg("seed") = 0, py::arg("tol") = 1e-8);
  m.def(
      "adjoint_counterexample",
      [](const mt::ComplexVector& x, const mt::ComplexVector& xp, double tol) {
        return mt::adjoint_counterexample(x, xp, tolerance(tol));
      },
      py::arg("x"), py::arg("xp"), py::arg("tol") = 1e-8);
}
