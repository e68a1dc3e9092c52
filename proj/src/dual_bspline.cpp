#include "dualspline/dual_bspline.hpp"

#include <sstream>
#include <string>

#include "dualspline/errors.hpp"

namespace dualspline {

namespace {

constexpr double kConditioningFloor = 1e-13;

}  // namespace

DualBasisMatrix build_dual(const KnotVector& kv) { return build_dual(extend_orthogonal(kv)); }

DualBasisMatrix build_dual(const OrthoSplineBasis& ob) {
  const double largest = ob.norms.maxCoeff();
  const double smallest = ob.norms.minCoeff();
  if (!(smallest >= kConditioningFloor * largest)) {
    std::ostringstream msg;
    msg << "ill-conditioned spline space: smallest orthogonal norm " << smallest
        << " vs largest " << largest << " (knots too close together)";
    throw NumericalError(msg.str());
  }
  // rho(j, i) = psi(j, i) / h_i with psi = A^T.
  Matrix rho = ob.rows.transpose() * ob.norms.cwiseInverse().asDiagonal();
  Matrix coeffs = rho * ob.rows;
  return {ob.kv, std::move(rho), std::move(coeffs)};
}

double dual_eval(const DualBasisMatrix& d, int j, double t) {
  if (j < 0 || j >= d.kv.dimension()) {
    throw ValidationError("dual_eval: index " + std::to_string(j) + " out of range");
  }
  return Spline(d.kv, d.coeffs.row(j).transpose())(t);
}

double duality_residual(const DualBasisMatrix& d, const GramMatrix& g) {
  const Matrix I = Matrix::Identity(d.coeffs.rows(), d.coeffs.cols());
  return (d.coeffs * g.entries - I).cwiseAbs().maxCoeff();
}

LegendreCombination bspline_to_orthogonal(const Spline& s, const OrthoSplineBasis& ob,
                                          const GramMatrix& g) {
  if (!(s.kv == ob.kv) || !(g.kv == ob.kv)) {
    throw ValidationError("bspline_to_orthogonal: knot vectors differ");
  }
  const Vector inner = ob.rows * (g.entries * s.coeffs);
  const Vector sigma = inner.cwiseQuotient(ob.norms);
  return {s.kv.degree(), std::vector<double>(sigma.data(), sigma.data() + sigma.size())};
}

}  // namespace dualspline
