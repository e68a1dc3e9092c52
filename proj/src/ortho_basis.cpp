#include "dualspline/ortho_basis.hpp"

#include <cmath>
#include <string>

#include "dualspline/errors.hpp"
#include "dualspline/legendre.hpp"
#include "dualspline/quadrature.hpp"

namespace dualspline {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int q = 1; q <= k; ++q) r = r * (n - k + q) / q;
  return r;
}

// Unit Euclidean norm; the entry of largest magnitude (first on ties) is
// made positive.
void normalize_row(Eigen::Ref<Vector> v) {
  Eigen::Index largest = 0;
  v.cwiseAbs().maxCoeff(&largest);
  v /= v.norm();
  if (v[largest] < 0.0) v = -v;
}

}  // namespace

GramMatrix gram_bsplines(const KnotVector& kv) {
  const int n = kv.degree();
  const auto full = kv.full();
  const GaussRule& rule = gauss_legendre_unit(n + 1);
  Matrix G = Matrix::Zero(kv.dimension(), kv.dimension());
  for (int span = n; span <= n + kv.interior_count(); ++span) {
    const double a = full[span];
    const double b = full[span + 1];
    if (b <= a) continue;
    const double h = b - a;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const Vector values = nonzero_basis(kv, span, a + h * rule.nodes[q]);
      const double w = h * rule.weights[q];
      // Only the (n+1)x(n+1) block of overlapping supports is touched.
      G.block(span - n, span - n, n + 1, n + 1).noalias() += w * values * values.transpose();
    }
  }
  G.triangularView<Eigen::StrictlyUpper>() = G.transpose();
  return {kv, std::move(G)};
}

Matrix legendre_rows(const KnotVector& kv) {
  const int n = kv.degree();
  const int dim = kv.dimension();
  Matrix rows(n + 1, dim);
  std::vector<std::vector<double>> weights(n + 1);
  for (int i = 0; i <= n; ++i) {
    weights[i] = legendre_monomial_coeffs(i);
    for (int h = 0; h <= i; ++h) weights[i][h] /= binomial(n, h);
  }
  for (int j = 0; j < dim; ++j) {
    const std::vector<double> r = elementary_symmetric(kv, j);
    rows(0, j) = 1.0;
    for (int i = 1; i <= n; ++i) {
      double phi = 0.0;
      for (int h = 0; h <= i; ++h) phi += weights[i][h] * r[h];
      rows(i, j) = phi;
    }
  }
  return rows;
}

Vector orthogonal_increment(const KnotVector& kv_k) {
  const int k = kv_k.interior_count();
  if (k < 1) throw ValidationError("orthogonal_increment needs at least one interior knot");
  const KnotVector coarse = kv_k.prefix(k - 1);
  const Matrix R = refinement_matrix(coarse, kv_k);
  const Matrix constraints = R * gram_bsplines(kv_k).entries;

  // The null vector of the (n+k) x (n+k+1) constraint matrix is the last
  // column of Q in a rank-revealing QR of its transpose.
  Eigen::ColPivHouseholderQR<Matrix> qr(constraints.transpose());
  if (qr.rank() < constraints.rows()) {
    throw NumericalError("orthogonal complement is not one-dimensional (rank " +
                         std::to_string(qr.rank()) + " of " +
                         std::to_string(constraints.rows()) + "); knots nearly coincide");
  }
  const Matrix Q = qr.householderQ();
  Vector v = Q.col(constraints.cols() - 1);
  normalize_row(v);
  return v;
}

OrthoSplineBasis extend_orthogonal(const KnotVector& kv) { return extend_orthogonal(kv, gram_bsplines(kv)); }

OrthoSplineBasis extend_orthogonal(const KnotVector& kv, const GramMatrix& gram) {
  if (!(gram.kv == kv)) throw ValidationError("Gram matrix belongs to a different knot vector");
  const int n = kv.degree();
  const int m = kv.interior_count();
  const int dim = kv.dimension();
  Matrix rows(dim, dim);
  rows.topRows(n + 1) = legendre_rows(kv);
  for (int k = 1; k <= m; ++k) {
    const KnotVector kv_k = kv.prefix(k);
    const Vector coarse = orthogonal_increment(kv_k);
    Vector row = k == m ? coarse : Vector(refinement_matrix(kv_k, kv).transpose() * coarse);
    normalize_row(row);
    rows.row(n + k) = row.transpose();
  }
  Vector norms(dim);
  for (int i = 0; i < dim; ++i) {
    norms[i] = rows.row(i) * gram.entries * rows.row(i).transpose();
  }
  return {kv, std::move(rows), std::move(norms)};
}

double orthogonality_residual(const OrthoSplineBasis& ob, const GramMatrix& g) {
  const Matrix M = ob.rows * g.entries * ob.rows.transpose();
  double off = 0.0;
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      if (i != j) off = std::max(off, std::abs(M(i, j)));
    }
  }
  return off / ob.norms.maxCoeff();
}

}  // namespace dualspline
