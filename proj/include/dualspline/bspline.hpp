#pragma once

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dualspline/knot_vector.hpp"

namespace dualspline {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Scalar spline in B-spline form: coeffs[i] multiplies N_{-n+i,n}.
struct Spline {
  Spline(KnotVector kv, Vector coeffs);

  KnotVector kv;
  Vector coeffs;

  double operator()(double t) const;
};

/// R^d-valued spline curve; row i of `points` is control point c_i.
struct SplineCurve {
  SplineCurve(KnotVector kv, Matrix points);

  KnotVector kv;
  Matrix points;

  int dim() const { return static_cast<int>(points.cols()); }
  Spline component(int j) const;
};

/// Index s of the knot interval [full[s], full[s+1]) holding t, in flat
/// numbering. t = 1 maps to the last non-empty interval (left limit).
int find_span(const KnotVector& kv, double t);

/// Values of the n+1 B-splines that are non-zero on span `span`, i.e.
/// full indices span-n .. span.
Vector nonzero_basis(const KnotVector& kv, int span, double t);

/// All n+m+1 basis values N_{-n+i,n}(t). At t = 1 the left limits are
/// returned, so the last function equals 1 there.
Vector basis_eval_all(const KnotVector& kv, double t);

Eigen::VectorXd curve_eval(const SplineCurve& curve, double t);

/// (x - knot)^p for x > knot, 0 otherwise.
double truncated_power_eval(double x, double knot, int p);

/// Coefficients w_0..w_{n-1} with t^n + sum w_i t^i = prod (t - roots_i).
std::vector<double> monic_from_roots(std::span<const double> roots);

/// r_{j,0..n}: elementary symmetric functions of the n knots
/// t_{-n+j+1}, ..., t_j, computed through the monic polynomial with those
/// roots.
std::vector<double> elementary_symmetric(const KnotVector& kv, int j);

/// Matrix R with one row per coarse basis function, holding its
/// coefficients in the fine basis. Rows are computed by blossoming each
/// fine coefficient on a coarse interval inside the fine support (the
/// Oslo-style discrete B-spline recursion).
Matrix refinement_matrix(const KnotVector& coarse, const KnotVector& fine);

/// Re-expresses `s` over the finer knot vector `target`.
Spline knot_refine(const Spline& s, const KnotVector& target);
SplineCurve knot_refine(const SplineCurve& c, const KnotVector& target);

/// Triangular table lambda[v][q], v = 0..n+1, q = 0..v, giving the
/// (n+1)-th derivative of the degree-(2n+1) B-spline N_{-n+j,2n+1} over the
/// interior knots of kv_k in terms of degree-n B-splines. Zero
/// denominators give zero quotients.
std::vector<std::vector<double>> lambda_table(int j, const KnotVector& kv_k);

/// d^{n+1}/dt^{n+1} N_{-n+j,2n+1} as a degree-n spline over kv_k.
Spline deriv_np1_bspline(int j, const KnotVector& kv_k);

/// Value or derivative of a function at a point: f(order, x) = f^{(order)}(x).
using DerivativeOracle = std::function<double(int order, double x)>;

/// [x_0, ..., x_k] f with repeated nodes handled in confluent form.
/// `nodes` need not be sorted.
double divided_difference(std::vector<double> nodes, const DerivativeOracle& f);

/**
 * Coefficient of fine basis function i in the refinement of `coarse` into
 * `fine`, computed from the divided-difference formula
 *
 *   sum_h beta_h (t_{h+1} - t_{-n+h}) [t_{-n+h}, ..., t_{h+1}] g_i,
 *   g_i(y) = (y - s_i)_+^0 prod_{r=1..n} (y - u_{-n+i+r}),
 *
 * where t are coarse knots, u fine knots and beta the coarse coefficients.
 * s_i must lie in [u_{-n+i}, u_{i+1}) and must not coincide with a coarse
 * knot of multiplicity >= 2. Kept as an independent check of
 * refinement_matrix.
 */
double gamma_cross_check(int i, const Spline& coarse, const KnotVector& fine, double s_i);

/// Same, with s_i at the midpoint of [u_{-n+i}, u_{i+1}) nudged off any
/// multiple knot.
double gamma_cross_check(int i, const Spline& coarse, const KnotVector& fine);

double default_gamma_point(int i, const Spline& coarse, const KnotVector& fine);

}  // namespace dualspline
