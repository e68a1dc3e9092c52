#pragma once

// Test-only reference computations. Everything here runs in long double and
// avoids the library's evaluation, quadrature and refinement code, so it can
// serve as an independent check.

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "dualspline/bspline.hpp"

namespace oracle {

using ld = long double;
using MatrixL = Eigen::Matrix<ld, Eigen::Dynamic, Eigen::Dynamic>;
using VectorL = Eigen::Matrix<ld, Eigen::Dynamic, 1>;

inline std::vector<ld> flat_knots(const dualspline::KnotVector& kv) {
  return {kv.full().begin(), kv.full().end()};
}

/// Textbook Cox–de Boor recursion for N_{i,p} over `knots` (flat index i).
/// `at_right_end` treats the last non-empty interval as closed, giving left
/// limits at t = 1.
inline ld bspline(const std::vector<ld>& knots, int i, int p, ld t, bool at_right_end = false) {
  if (p == 0) {
    const ld a = knots[i], b = knots[i + 1];
    if (a < b && a <= t && t < b) return 1;
    if (at_right_end && a < b && t == b && b == knots.back()) return 1;
    return 0;
  }
  ld value = 0;
  const ld d1 = knots[i + p] - knots[i];
  const ld d2 = knots[i + p + 1] - knots[i + 1];
  if (d1 > 0) value += (t - knots[i]) / d1 * bspline(knots, i, p - 1, t, at_right_end);
  if (d2 > 0) value += (knots[i + p + 1] - t) / d2 * bspline(knots, i + 1, p - 1, t, at_right_end);
  return value;
}

inline ld bspline(const dualspline::KnotVector& kv, int i, ld t) {
  return bspline(flat_knots(kv), i, kv.degree(), t, t == 1);
}

inline ld spline_value(const dualspline::KnotVector& kv, const Eigen::VectorXd& coeffs, ld t) {
  ld sum = 0;
  for (int i = 0; i < kv.dimension(); ++i) sum += coeffs[i] * bspline(kv, i, t);
  return sum;
}

struct Rule {
  std::vector<ld> nodes, weights;  // on [0,1]
};

/// Gauss–Legendre by the Golub–Welsch eigenvalue method (long double).
inline Rule gauss(int points) {
  MatrixL J = MatrixL::Zero(points, points);
  for (int k = 1; k < points; ++k) {
    const ld b = k / std::sqrt(4.0L * k * k - 1.0L);
    J(k, k - 1) = J(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<MatrixL> es(J);
  Rule r;
  for (int k = 0; k < points; ++k) {
    r.nodes.push_back((es.eigenvalues()[k] + 1) / 2);
    const ld v = es.eigenvectors()(0, k);
    r.weights.push_back(v * v);
  }
  return r;
}

/// Integral of f over [0,1] split at `breaks`, `points` nodes per piece.
inline ld integrate(const std::vector<ld>& breaks, int points, const std::function<ld(ld)>& f) {
  const Rule r = gauss(points);
  ld sum = 0;
  for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
    const ld a = breaks[s], h = breaks[s + 1] - breaks[s];
    if (h <= 0) continue;
    for (int k = 0; k < points; ++k) sum += r.weights[k] * h * f(a + h * r.nodes[k]);
  }
  return sum;
}

inline std::vector<ld> breaks_of(const dualspline::KnotVector& kv) {
  const auto b = kv.breakpoints();
  return {b.begin(), b.end()};
}

/// Gram matrix of the B-spline basis by recursive evaluation and
/// Golub–Welsch quadrature.
inline MatrixL gram(const dualspline::KnotVector& kv) {
  const int dim = kv.dimension();
  const int n = kv.degree();
  const auto knots = flat_knots(kv);
  const auto breaks = breaks_of(kv);
  MatrixL G = MatrixL::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim && j <= i + n; ++j) {
      G(i, j) = G(j, i) = integrate(breaks, n + 2, [&](ld t) {
        return bspline(knots, i, n, t) * bspline(knots, j, n, t);
      });
    }
  }
  return G;
}

inline Eigen::MatrixXd to_double(const MatrixL& m) { return m.cast<double>(); }

/// Sum over h-subsets of the window knots, by enumeration.
inline ld subset_sum(const std::vector<ld>& window, int h) {
  const int size = static_cast<int>(window.size());
  ld total = 0;
  for (unsigned mask = 0; mask < (1u << size); ++mask) {
    if (__builtin_popcount(mask) != h) continue;
    ld prod = 1;
    for (int b = 0; b < size; ++b) {
      if (mask & (1u << b)) prod *= window[b];
    }
    total += prod;
  }
  return total;
}

/// Boehm insertion of a single knot into a flat knot list / control points.
inline void boehm_insert(std::vector<double>& knots, Eigen::MatrixXd& P, int degree, double x) {
  const int p = degree;
  int k = 0;  // knots[k] <= x < knots[k+1]
  while (!(knots[k] <= x && x < knots[k + 1])) ++k;
  Eigen::MatrixXd Q(P.rows() + 1, P.cols());
  for (int i = 0; i < Q.rows(); ++i) {
    if (i <= k - p) {
      Q.row(i) = P.row(i);
    } else if (i > k) {
      Q.row(i) = P.row(i - 1);
    } else {
      const double a = (x - knots[i]) / (knots[i + p] - knots[i]);
      Q.row(i) = a * P.row(i) + (1 - a) * P.row(i - 1);
    }
  }
  knots.insert(knots.begin() + k + 1, x);
  P = Q;
}

/// Degree elevation by full knot insertion (Bézier extraction) followed by
/// per-segment elevation, repeated `times` times.
inline dualspline::SplineCurve elevate(const dualspline::SplineCurve& c, int times) {
  int p = c.kv.degree();
  std::vector<double> knots(c.kv.full().begin(), c.kv.full().end());
  Eigen::MatrixXd P = c.points;
  for (const auto& k : c.kv.interior()) {
    for (int r = k.multiplicity; r < p; ++r) boehm_insert(knots, P, p, k.position);
  }
  std::vector<double> breaks;
  for (const auto& k : c.kv.interior()) breaks.push_back(k.position);
  const int segments = static_cast<int>(breaks.size()) + 1;
  for (int step = 0; step < times; ++step) {
    Eigen::MatrixXd Q(segments * (p + 1) + 1, P.cols());
    for (int s = 0; s < segments; ++s) {
      const Eigen::MatrixXd seg = P.middleRows(s * p, p + 1);
      for (int i = 0; i <= p + 1; ++i) {
        const double a = static_cast<double>(i) / (p + 1);
        Eigen::RowVectorXd q = Eigen::RowVectorXd::Zero(P.cols());
        if (i > 0) q += a * seg.row(i - 1);
        if (i <= p) q += (1 - a) * seg.row(i);
        Q.row(s * (p + 1) + i) = q;
      }
    }
    P = Q;
    ++p;
  }
  std::vector<dualspline::Knot> interior;
  for (double b : breaks) interior.push_back({b, p});
  return dualspline::SplineCurve(dualspline::KnotVector(p, interior), P);
}

/// Solves a small dense system in long double (LU with pivoting).
inline VectorL solve(const MatrixL& A, const VectorL& b) { return A.fullPivLu().solve(b); }

}  // namespace oracle
