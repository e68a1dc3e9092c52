#pragma once

#include "dualspline/bspline.hpp"

namespace dualspline {

/// G_{ij} = <N_{-n+i,n}, N_{-n+j,n}> on [0,1]. Symmetric, banded with
/// bandwidth n, positive definite.
struct GramMatrix {
  KnotVector kv;
  Matrix entries;
};

/**
 * Legendre-like orthogonal basis of the spline space, in B-spline
 * coordinates.
 *
 * Row i of `rows` holds the B-spline coefficients of L_i. Rows 0..n are the
 * shifted Legendre polynomials; row n+k (k >= 1) spans the part of
 * the space over the first k interior knots that is orthogonal to the space
 * over the first k-1. `norms[i]` is <L_i, L_i>.
 */
struct OrthoSplineBasis {
  KnotVector kv;
  Matrix rows;
  Vector norms;
};

/// Exact (to rounding) Gram matrix: Gauss–Legendre with n+1 nodes per
/// knot interval.
GramMatrix gram_bsplines(const KnotVector& kv);

/// B-spline coefficients of L_0..L_n: (n+1) x (n+m+1).
Matrix legendre_rows(const KnotVector& kv);

/**
 * Element of the space over kv_k orthogonal to the whole space over
 * kv_k.prefix(k-1), with k = kv_k.interior_count() >= 1. Returned in the
 * B-spline coordinates of kv_k, unit Euclidean norm, largest-magnitude
 * entry positive.
 *
 * Throws NumericalError when the constraint matrix loses rank.
 */
Vector orthogonal_increment(const KnotVector& kv_k);

OrthoSplineBasis extend_orthogonal(const KnotVector& kv);
OrthoSplineBasis extend_orthogonal(const KnotVector& kv, const GramMatrix& gram);

/// max_{i != j} |(A G A^T)_{ij}| / max_i h_i.
double orthogonality_residual(const OrthoSplineBasis& ob, const GramMatrix& g);

}  // namespace dualspline
