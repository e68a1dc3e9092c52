#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dualspline/approx.hpp"
#include "dualspline/bspline.hpp"
#include "dualspline/dual_bspline.hpp"
#include "dualspline/dual_power.hpp"
#include "dualspline/errors.hpp"
#include "dualspline/legendre.hpp"
#include "dualspline/ortho_basis.hpp"
#include "dualspline/pear.hpp"

namespace py = pybind11;
using namespace dualspline;

namespace {

std::vector<Knot> knots_from_pairs(const std::vector<std::pair<double, int>>& pairs) {
  std::vector<Knot> out;
  out.reserve(pairs.size());
  for (const auto& [t, mult] : pairs) out.push_back({t, mult});
  return out;
}

py::dict report_dict(const ApproxReport& r) {
  py::dict d;
  d["e2"] = r.e2;
  d["einf"] = r.einf;
  d["source_dim"] = r.source_dim;
  d["target_dim"] = r.target_dim;
  d["elapsed"] = r.elapsed.count();
  return d;
}

py::tuple result_tuple(const ApproxResult& r) { return py::make_tuple(r.curve, report_dict(r.report)); }

}  // namespace

PYBIND11_MODULE(_dualspline, m) {
  m.doc() = "Dual B-spline and truncated power bases, least-squares spline approximation";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<KnotVector>(m, "KnotVector")
      .def(py::init([](int degree, const std::vector<std::pair<double, int>>& interior) {
             return KnotVector(degree, knots_from_pairs(interior));
           }),
           py::arg("degree"), py::arg("interior") = std::vector<std::pair<double, int>>{},
           "Clamped knot vector on [0,1]; interior is a list of (position, multiplicity).")
      .def_static("from_flat",
                  [](int degree, const std::vector<double>& flat) { return knot_vector_from_flat(degree, flat); },
                  py::arg("degree"), py::arg("interior"))
      .def_static("random", &random_knot_vector, py::arg("degree"), py::arg("interior_count"), py::arg("seed"))
      .def_property_readonly("degree", &KnotVector::degree)
      .def_property_readonly("interior_count", &KnotVector::interior_count)
      .def_property_readonly("dimension", &KnotVector::dimension)
      .def_property_readonly("interior",
                             [](const KnotVector& kv) {
                               std::vector<std::pair<double, int>> out;
                               for (const Knot& k : kv.interior()) out.emplace_back(k.position, k.multiplicity);
                               return out;
                             })
      .def_property_readonly("full",
                             [](const KnotVector& kv) { return std::vector<double>(kv.full().begin(), kv.full().end()); })
      .def("knot", &KnotVector::knot)
      .def("with_degree", &KnotVector::with_degree)
      .def("drop", [](const KnotVector& kv, const std::vector<double>& positions) { return drop_knots(kv, positions); })
      .def(py::self == py::self)
      .def("__repr__", [](const KnotVector& kv) {
        return "KnotVector(degree=" + std::to_string(kv.degree()) +
               ", interior_count=" + std::to_string(kv.interior_count()) + ")";
      });

  py::class_<SplineCurve>(m, "SplineCurve")
      .def(py::init<KnotVector, Matrix>(), py::arg("kv"), py::arg("points"))
      .def_readonly("kv", &SplineCurve::kv)
      .def_readonly("points", &SplineCurve::points)
      .def_property_readonly("dim", &SplineCurve::dim)
      .def("__call__", [](const SplineCurve& c, double t) -> Vector { return curve_eval(c, t); });

  m.def("basis", &basis_eval_all, py::arg("kv"), py::arg("t"), "All B-spline values at t.");
  m.def("knot_refine", py::overload_cast<const SplineCurve&, const KnotVector&>(&knot_refine),
        py::arg("curve"), py::arg("target"));

  m.def("shifted_legendre", &shifted_legendre_eval, py::arg("i"), py::arg("t"));
  m.def("clenshaw", [](const std::vector<double>& coeffs, double t) { return clenshaw_eval(coeffs, t); },
        py::arg("coeffs"), py::arg("t"));

  m.def("gram", [](const KnotVector& kv) { return gram_bsplines(kv).entries; }, py::arg("kv"));
  m.def("orthogonal_basis", [](const KnotVector& kv) {
        const OrthoSplineBasis ob = extend_orthogonal(kv);
        return py::make_tuple(ob.rows, ob.norms);
      }, py::arg("kv"), "(rows, norms): B-spline coefficients of L_i and <L_i, L_i>.");
  m.def("dual_matrix", [](const KnotVector& kv) { return build_dual(kv).coeffs; }, py::arg("kv"),
        "B-spline coefficients of the dual basis (row j is D_{-n+j}).");
  m.def("duality_residual", [](const KnotVector& kv) {
        const GramMatrix g = gram_bsplines(kv);
        return duality_residual(build_dual(extend_orthogonal(kv, g)), g);
      }, py::arg("kv"));

  py::class_<TruncatedDualState>(m, "TruncatedDual")
      .def_readonly("degree", &TruncatedDualState::degree)
      .def_readonly("knots", &TruncatedDualState::knots)
      .def_readonly("psi", &TruncatedDualState::psi)
      .def_readonly("lambda_", &TruncatedDualState::lambda)
      .def("__len__", &TruncatedDualState::size)
      .def("__call__", &dual_truncated_eval, py::arg("j"), py::arg("t"));
  m.def("dual_truncated", &build_dual_truncated, py::arg("degree"), py::arg("knots"));
  m.def("v_moments", &v_moment_vector, py::arg("degree"), py::arg("t_i"));

  py::class_<TruncatedPowerCurve>(m, "TruncatedPowerCurve")
      .def_readonly("degree", &TruncatedPowerCurve::degree)
      .def_readonly("knots", &TruncatedPowerCurve::knots)
      .def_readonly("coeffs", &TruncatedPowerCurve::coeffs)
      .def("__call__", [](const TruncatedPowerCurve& tp, double t) -> Vector { return eval_truncated_power(tp, t); });
  m.def("to_truncated_power", &to_truncated_power, py::arg("curve"));

  m.def("project", &project_curve, py::arg("curve"), py::arg("target"));
  m.def("degree_reduce", [](const SplineCurve& c, int n) { return result_tuple(degree_reduce(c, n)); },
        py::arg("curve"), py::arg("degree"), "(curve, report) of the best approximation of lower degree.");
  m.def("remove_knots", [](const SplineCurve& c, const KnotVector& keep) { return result_tuple(remove_knots(c, keep)); },
        py::arg("curve"), py::arg("keep"));
  m.def("reduce_and_remove",
        [](const SplineCurve& c, int n, const KnotVector& keep) { return result_tuple(reduce_and_remove(c, n, keep)); },
        py::arg("curve"), py::arg("degree"), py::arg("keep"));
  m.def("l2_error", &l2_error);
  m.def("linf_error", &linf_error, py::arg("a"), py::arg("b"), py::arg("grid") = kDefaultGridSize);

  m.def("pear_curve", &pear_curve);
  m.def("pear_cases", [] {
    py::list out;
    for (const PearCase& c : pear_cases()) {
      py::dict d;
      d["name"] = c.name;
      d["degree"] = c.degree;
      d["dropped"] = c.dropped;
      d["reference_e2"] = c.reference_e2;
      d["reference_einf"] = c.reference_einf;
      d["target"] = pear_target(c);
      out.append(d);
    }
    return out;
  });
}
