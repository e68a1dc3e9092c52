#pragma once

#include <chrono>
#include <vector>

#include "dualspline/bspline.hpp"
#include "dualspline/dual_power.hpp"

namespace dualspline {

/// Errors of an approximation C* of C: E2 = ||C - C*||_L2 and
/// Einf = max over t in {0, 1/M, ..., 1} of |C(t) - C*(t)| with M = 500.
struct ApproxReport {
  double e2 = 0.0;
  double einf = 0.0;
  int source_dim = 0;
  int target_dim = 0;
  std::chrono::duration<double> elapsed{};
};

inline constexpr int kDefaultGridSize = 500;

/// Sorted union of the breakpoints of two knot vectors.
std::vector<double> merged_breakpoints(const KnotVector& a, const KnotVector& b);

/// <C_j, N_i> for every target basis function i and component j, by
/// Gauss–Legendre quadrature on the merged breakpoints.
Matrix moments_against_bsplines(const SplineCurve& c, const KnotVector& target);

/// L2-optimal curve over `target`: control points <C_j, D_i>.
SplineCurve project_curve(const SplineCurve& c, const KnotVector& target);

struct ApproxResult {
  SplineCurve curve;
  ApproxReport report;
};

/// Best degree-n_star approximation keeping the interior knots.
ApproxResult degree_reduce(const SplineCurve& c, int n_star);

/// Best approximation of the same degree over `keep`, a sub-knot-vector.
ApproxResult remove_knots(const SplineCurve& c, const KnotVector& keep);

/// Best approximation over `keep`, whose degree is the new degree n_star.
ApproxResult reduce_and_remove(const SplineCurve& c, int n_star, const KnotVector& keep);

double l2_error(const SplineCurve& a, const SplineCurve& b);
double linf_error(const SplineCurve& a, const SplineCurve& b, int grid = kDefaultGridSize);

/// Curve in the truncated power basis {1, ..., t^n, (t-k_h)_+^n}; row i of
/// `coeffs` multiplies basis function i.
struct TruncatedPowerCurve {
  int degree = 0;
  std::vector<double> knots;
  Matrix coeffs;
};

/// Coefficients <C_j, d_i> with d the dual truncated power basis. Simple
/// interior knots only.
TruncatedPowerCurve to_truncated_power(const SplineCurve& c);

Eigen::VectorXd eval_truncated_power(const TruncatedPowerCurve& tp, double t);

}  // namespace dualspline
