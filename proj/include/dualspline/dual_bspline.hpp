#pragma once

#include "dualspline/legendre.hpp"
#include "dualspline/ortho_basis.hpp"

namespace dualspline {

/**
 * Dual basis of the B-spline basis with respect to <f,g> = int_0^1 f g.
 *
 * rho(j, i) is the coefficient of orthogonal function L_i in dual function
 * D_{-n+j}; coeffs(j, :) are the B-spline coefficients of D_{-n+j}
 * (coeffs = rho * A, which equals the inverse of the Gram matrix).
 */
struct DualBasisMatrix {
  KnotVector kv;
  Matrix rho;
  Matrix coeffs;
};

/// Fails with NumericalError when min h_i < 1e-13 max h_i.
DualBasisMatrix build_dual(const KnotVector& kv);
DualBasisMatrix build_dual(const OrthoSplineBasis& ob);

/// D_{-n+j}(t).
double dual_eval(const DualBasisMatrix& d, int j, double t);

/// max |coeffs * G - I|.
double duality_residual(const DualBasisMatrix& d, const GramMatrix& g);

/// Coefficients sigma_i = <s, L_i> / h_i of s in the orthogonal basis.
LegendreCombination bspline_to_orthogonal(const Spline& s, const OrthoSplineBasis& ob,
                                          const GramMatrix& g);

}  // namespace dualspline
