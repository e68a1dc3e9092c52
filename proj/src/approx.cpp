#include "dualspline/approx.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dualspline/dual_bspline.hpp"
#include "dualspline/errors.hpp"
#include "dualspline/quadrature.hpp"

namespace dualspline {

namespace {

using Clock = std::chrono::steady_clock;

void require_same_dim(const SplineCurve& a, const SplineCurve& b) {
  if (a.dim() != b.dim()) {
    throw ValidationError("curves have different dimensions (" + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()) + ")");
  }
}

ApproxResult finish(const SplineCurve& source, SplineCurve result, Clock::time_point start) {
  ApproxReport report;
  report.elapsed = Clock::now() - start;
  report.e2 = l2_error(source, result);
  report.einf = linf_error(source, result);
  report.source_dim = source.kv.dimension();
  report.target_dim = result.kv.dimension();
  return {std::move(result), report};
}

}  // namespace

std::vector<double> merged_breakpoints(const KnotVector& a, const KnotVector& b) {
  std::vector<double> out = a.breakpoints();
  const std::vector<double> other = b.breakpoints();
  out.insert(out.end(), other.begin(), other.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Matrix moments_against_bsplines(const SplineCurve& c, const KnotVector& target) {
  const int n = c.kv.degree();
  const int n_star = target.degree();
  const GaussRule& rule = gauss_legendre_unit((n + n_star + 2) / 2);
  const std::vector<double> breaks = merged_breakpoints(c.kv, target);
  Matrix moments = Matrix::Zero(target.dimension(), c.dim());
  for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
    const double a = breaks[s];
    const double h = breaks[s + 1] - a;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double t = a + h * rule.nodes[q];
      const int span = find_span(target, t);
      const Vector basis = nonzero_basis(target, span, t);
      const Eigen::RowVectorXd value = curve_eval(c, t).transpose();
      moments.middleRows(span - n_star, n_star + 1).noalias() +=
          (h * rule.weights[q]) * basis * value;
    }
  }
  return moments;
}

SplineCurve project_curve(const SplineCurve& c, const KnotVector& target) {
  const DualBasisMatrix dual = build_dual(target);
  return SplineCurve(target, dual.coeffs * moments_against_bsplines(c, target));
}

ApproxResult degree_reduce(const SplineCurve& c, int n_star) {
  const auto start = Clock::now();
  if (n_star < 0) throw ValidationError("target degree must be non-negative");
  if (n_star >= c.kv.degree()) {
    throw ValidationError("degree reduction needs a target degree below " +
                          std::to_string(c.kv.degree()));
  }
  const KnotVector target = c.kv.with_degree(n_star);
  return finish(c, project_curve(c, target), start);
}

ApproxResult remove_knots(const SplineCurve& c, const KnotVector& keep) {
  const auto start = Clock::now();
  if (keep.degree() != c.kv.degree()) {
    throw ValidationError("knot removal keeps the degree; got " + std::to_string(keep.degree()));
  }
  if (!c.kv.contains(keep)) throw ValidationError("kept knots are not a subset of the curve knots");
  return finish(c, project_curve(c, keep), start);
}

ApproxResult reduce_and_remove(const SplineCurve& c, int n_star, const KnotVector& keep) {
  const auto start = Clock::now();
  if (n_star < 0 || n_star > c.kv.degree()) {
    throw ValidationError("target degree must lie in [0, " + std::to_string(c.kv.degree()) + "]");
  }
  if (keep.degree() != n_star) {
    throw ValidationError("kept knot vector must have the target degree");
  }
  if (!c.kv.contains(keep)) {
    throw ValidationError("kept knots are not a subset of the curve knots");
  }
  return finish(c, project_curve(c, keep), start);
}

double l2_error(const SplineCurve& a, const SplineCurve& b) {
  require_same_dim(a, b);
  const int n = std::max(a.kv.degree(), b.kv.degree());
  const GaussRule& rule = gauss_legendre_unit(n + 1);
  const std::vector<double> breaks = merged_breakpoints(a.kv, b.kv);
  double sum = 0.0;
  for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
    sum += integrate(rule, breaks[s], breaks[s + 1], [&](double t) {
      return (curve_eval(a, t) - curve_eval(b, t)).squaredNorm();
    });
  }
  return std::sqrt(sum);
}

double linf_error(const SplineCurve& a, const SplineCurve& b, int grid) {
  require_same_dim(a, b);
  if (grid < 1) throw ValidationError("grid size must be positive");
  double worst = 0.0;
  for (int k = 0; k <= grid; ++k) {
    const double t = static_cast<double>(k) / grid;
    worst = std::max(worst, (curve_eval(a, t) - curve_eval(b, t)).norm());
  }
  return worst;
}

TruncatedPowerCurve to_truncated_power(const SplineCurve& c) {
  if (c.kv.has_multiple_interior_knots()) {
    throw ValidationError("truncated power conversion supports simple interior knots only");
  }
  const int n = c.kv.degree();
  const auto flat = c.kv.interior_flat();
  std::vector<double> knots(flat.begin(), flat.end());
  const TruncatedDualState dual = build_dual_truncated(n, knots);

  const GaussRule& rule = gauss_legendre_unit(n + 1);
  const std::vector<double> breaks = c.kv.breakpoints();
  Matrix coeffs = Matrix::Zero(dual.size(), c.dim());
  for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
    const double a = breaks[s];
    const double h = breaks[s + 1] - a;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double t = a + h * rule.nodes[q];
      const Eigen::RowVectorXd value = curve_eval(c, t).transpose();
      for (int i = 0; i < dual.size(); ++i) {
        coeffs.row(i) += (h * rule.weights[q] * dual_truncated_eval(dual, i, t)) * value;
      }
    }
  }
  return {n, std::move(knots), std::move(coeffs)};
}

Eigen::VectorXd eval_truncated_power(const TruncatedPowerCurve& tp, double t) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(tp.coeffs.cols());
  for (int i = 0; i < tp.coeffs.rows(); ++i) {
    out += truncated_basis_eval(tp.degree, tp.knots, i, t) * tp.coeffs.row(i).transpose();
  }
  return out;
}

}  // namespace dualspline
