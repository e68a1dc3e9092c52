#include "dualspline/bspline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dualspline/errors.hpp"

namespace dualspline {

namespace {

void require_unit_interval(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw ValidationError("parameter " + std::to_string(t) + " outside [0,1]");
  }
}

// Multiplicity of x in the clamped knot vector (ends count n+1).
int multiplicity_of(const KnotVector& kv, double x) {
  const auto full = kv.full();
  return static_cast<int>(std::count(full.begin(), full.end(), x));
}

double falling_factorial_ratio(int n) {
  // (2n+1)!/n!
  double r = 1.0;
  for (int k = n + 1; k <= 2 * n + 1; ++k) r *= k;
  return r;
}

}  // namespace

Spline::Spline(KnotVector kv_, Vector coeffs_) : kv(std::move(kv_)), coeffs(std::move(coeffs_)) {
  if (coeffs.size() != kv.dimension()) {
    throw ValidationError("spline needs " + std::to_string(kv.dimension()) + " coefficients, got " +
                          std::to_string(coeffs.size()));
  }
}

double Spline::operator()(double t) const {
  const int span = find_span(kv, t);
  const Vector values = nonzero_basis(kv, span, t);
  const int n = kv.degree();
  return values.dot(coeffs.segment(span - n, n + 1));
}

SplineCurve::SplineCurve(KnotVector kv_, Matrix points_)
    : kv(std::move(kv_)), points(std::move(points_)) {
  if (points.rows() != kv.dimension()) {
    throw ValidationError("curve needs " + std::to_string(kv.dimension()) +
                          " control points, got " + std::to_string(points.rows()));
  }
  if (points.cols() < 1) {
    throw ValidationError("control points must have dimension >= 1");
  }
}

Spline SplineCurve::component(int j) const { return Spline(kv, points.col(j)); }

int find_span(const KnotVector& kv, double t) {
  require_unit_interval(t);
  const auto full = kv.full();
  const int n = kv.degree();
  const int last = n + kv.interior_count();
  if (t >= 1.0) return last;
  // Largest s in [n, last] with full[s] <= t.
  auto first = full.begin() + n;
  auto end = full.begin() + last + 1;
  auto it = std::upper_bound(first, end, t);
  return static_cast<int>(it - full.begin()) - 1;
}

Vector nonzero_basis(const KnotVector& kv, int span, double t) {
  const int n = kv.degree();
  const auto full = kv.full();
  Vector values(n + 1);
  std::vector<double> left(n + 1), right(n + 1);
  values[0] = 1.0;
  for (int j = 1; j <= n; ++j) {
    left[j] = t - full[span + 1 - j];
    right[j] = full[span + j] - t;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      const double temp = values[r] / (right[r + 1] + left[j - r]);
      values[r] = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    values[j] = saved;
  }
  return values;
}

Vector basis_eval_all(const KnotVector& kv, double t) {
  const int span = find_span(kv, t);
  const int n = kv.degree();
  Vector all = Vector::Zero(kv.dimension());
  all.segment(span - n, n + 1) = nonzero_basis(kv, span, t);
  return all;
}

Eigen::VectorXd curve_eval(const SplineCurve& curve, double t) {
  const int span = find_span(curve.kv, t);
  const int n = curve.kv.degree();
  const Vector values = nonzero_basis(curve.kv, span, t);
  return curve.points.middleRows(span - n, n + 1).transpose() * values;
}

double truncated_power_eval(double x, double knot, int p) {
  if (p < 0) throw ValidationError("truncated power exponent must be non-negative");
  if (x <= knot) return 0.0;
  return std::pow(x - knot, p);
}

std::vector<double> monic_from_roots(std::span<const double> roots) {
  // poly[k] is the coefficient of t^k; grows by one factor (t - r) per root.
  std::vector<double> poly{1.0};
  for (double r : roots) {
    poly.push_back(0.0);
    for (std::size_t k = poly.size() - 1; k > 0; --k) {
      poly[k] = poly[k - 1] - r * poly[k];
    }
    poly[0] = -r * poly[0];
  }
  poly.pop_back();
  return poly;
}

std::vector<double> elementary_symmetric(const KnotVector& kv, int j) {
  const int n = kv.degree();
  if (j < 0 || j >= kv.dimension()) {
    throw ValidationError("elementary_symmetric: index " + std::to_string(j) + " out of range");
  }
  std::vector<double> roots(n);
  for (int r = 0; r < n; ++r) roots[r] = kv.knot(-n + j + 1 + r);
  const std::vector<double> w = monic_from_roots(roots);
  std::vector<double> out(n + 1);
  out[0] = 1.0;
  for (int h = 1; h <= n; ++h) {
    out[h] = (h % 2 == 0 ? 1.0 : -1.0) * w[n - h];
  }
  return out;
}

Matrix refinement_matrix(const KnotVector& coarse, const KnotVector& fine) {
  if (coarse.degree() != fine.degree()) {
    throw ValidationError("knot refinement requires equal degrees");
  }
  if (!fine.contains(coarse)) {
    throw ValidationError("target knot vector does not contain the source knots");
  }
  const int n = coarse.degree();
  const auto fc = coarse.full();
  const auto ff = fine.full();
  const int coarse_last = n + coarse.interior_count();
  Matrix R = Matrix::Zero(coarse.dimension(), fine.dimension());

  std::vector<Vector> d(n + 1);
  for (int i = 0; i < fine.dimension(); ++i) {
    // Coarse interval containing the left end of the fine support; its
    // polynomial piece is valid on a non-empty part of that support.
    const double x = ff[i];
    auto it = std::upper_bound(fc.begin() + n, fc.begin() + coarse_last + 1, x);
    const int mu = static_cast<int>(it - fc.begin()) - 1;

    for (int k = 0; k <= n; ++k) d[k] = Vector::Unit(n + 1, k);
    for (int r = 1; r <= n; ++r) {
      const double arg = ff[i + r];
      for (int k = n; k >= r; --k) {
        const int g = mu - n + k;
        const double alpha = (arg - fc[g]) / (fc[g + n + 1 - r] - fc[g]);
        d[k] = (1.0 - alpha) * d[k - 1] + alpha * d[k];
      }
    }
    for (int k = 0; k <= n; ++k) R(mu - n + k, i) = d[n][k];
  }
  return R;
}

Spline knot_refine(const Spline& s, const KnotVector& target) {
  if (s.kv == target) return s;
  const Matrix R = refinement_matrix(s.kv, target);
  return Spline(target, R.transpose() * s.coeffs);
}

SplineCurve knot_refine(const SplineCurve& c, const KnotVector& target) {
  if (c.kv == target) return c;
  const Matrix R = refinement_matrix(c.kv, target);
  return SplineCurve(target, R.transpose() * c.points);
}

std::vector<std::vector<double>> lambda_table(int j, const KnotVector& kv_k) {
  const int n = kv_k.degree();
  const int k = kv_k.interior_count();
  if (j < 0 || j >= k) {
    throw ValidationError("lambda_table: j = " + std::to_string(j) + " outside [0, " +
                          std::to_string(k - 1) + "]");
  }
  std::vector<std::vector<double>> lambda(n + 2);
  lambda[0] = {1.0};
  for (int v = 1; v <= n + 1; ++v) {
    const auto& prev = lambda[v - 1];
    auto& row = lambda[v];
    row.assign(v + 1, 0.0);
    for (int q = 0; q <= v; ++q) {
      const double upper = q < v ? prev[q] : 0.0;
      const double lower = q > 0 ? prev[q - 1] : 0.0;
      const double denom = kv_k.knot(n + j + q - v + 2) - kv_k.knot(-n + j + q);
      row[q] = denom == 0.0 ? 0.0 : (upper - lower) / denom;
    }
  }
  return lambda;
}

Spline deriv_np1_bspline(int j, const KnotVector& kv_k) {
  const auto lambda = lambda_table(j, kv_k);
  const int n = kv_k.degree();
  const double scale = falling_factorial_ratio(n);
  Vector coeffs = Vector::Zero(kv_k.dimension());
  for (int h = 0; h <= n + 1; ++h) coeffs[j + h] = scale * lambda[n + 1][h];
  return Spline(kv_k, std::move(coeffs));
}

double divided_difference(std::vector<double> nodes, const DerivativeOracle& f) {
  std::sort(nodes.begin(), nodes.end());
  const std::size_t count = nodes.size();
  if (count == 0) throw ValidationError("divided difference needs at least one node");
  std::vector<double> table(count);
  for (std::size_t i = 0; i < count; ++i) table[i] = f(0, nodes[i]);
  double factorial = 1.0;
  for (std::size_t level = 1; level < count; ++level) {
    factorial *= static_cast<double>(level);
    for (std::size_t i = 0; i + level < count; ++i) {
      const double lo = nodes[i];
      const double hi = nodes[i + level];
      table[i] = hi == lo ? f(static_cast<int>(level), lo) / factorial
                          : (table[i + 1] - table[i]) / (hi - lo);
    }
  }
  return table[0];
}

double default_gamma_point(int i, const Spline& coarse, const KnotVector& fine) {
  const int n = fine.degree();
  const double a = fine.knot(-n + i);
  const double b = fine.knot(i + 1);
  double s = 0.5 * (a + b);
  if (multiplicity_of(coarse.kv, s) >= 2) s += 1e-6 * (b - a);
  return s;
}

double gamma_cross_check(int i, const Spline& coarse, const KnotVector& fine, double s_i) {
  const KnotVector& kv = coarse.kv;
  const int n = kv.degree();
  if (fine.degree() != n || !fine.contains(kv)) {
    throw ValidationError("gamma_cross_check: fine knot vector must refine the coarse one");
  }
  if (i < 0 || i >= fine.dimension()) {
    throw ValidationError("gamma_cross_check: index " + std::to_string(i) + " out of range");
  }
  if (!(s_i >= fine.knot(-n + i) && s_i < fine.knot(i + 1))) {
    throw ValidationError("gamma_cross_check: s_i outside the support of the fine B-spline");
  }
  if (multiplicity_of(kv, s_i) >= 2) {
    throw ValidationError("gamma_cross_check: s_i coincides with a multiple knot");
  }

  std::vector<double> roots(n);
  for (int r = 1; r <= n; ++r) roots[r - 1] = fine.knot(-n + i + r);
  std::vector<double> poly = monic_from_roots(roots);
  poly.push_back(1.0);

  const DerivativeOracle g = [&](int order, double y) {
    if (y <= s_i) return 0.0;
    // Horner on the order-th derivative of poly.
    double value = 0.0;
    for (int p = static_cast<int>(poly.size()) - 1; p >= order; --p) {
      double c = poly[p];
      for (int q = 0; q < order; ++q) c *= static_cast<double>(p - q);
      value = value * y + c;
    }
    return value;
  };

  double gamma = 0.0;
  for (int h = 0; h < kv.dimension(); ++h) {
    std::vector<double> nodes(n + 2);
    for (int r = 0; r <= n + 1; ++r) nodes[r] = kv.knot(-n + h + r);
    gamma += coarse.coeffs[h] * (kv.knot(h + 1) - kv.knot(-n + h)) * divided_difference(nodes, g);
  }
  return gamma;
}

double gamma_cross_check(int i, const Spline& coarse, const KnotVector& fine) {
  return gamma_cross_check(i, coarse, fine, default_gamma_point(i, coarse, fine));
}

}  // namespace dualspline
