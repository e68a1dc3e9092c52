#include "dualspline/dual_power.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dualspline/errors.hpp"
#include "dualspline/legendre.hpp"

namespace dualspline {

namespace {

constexpr double kPivotFloor = 1e-13;
constexpr double kDuplicateTolerance = 1e-14;

void require_open_unit(double t, const char* what) {
  if (!(t > 0.0 && t < 1.0)) {
    throw ValidationError(std::string(what) + ": knot " + std::to_string(t) +
                          " outside the open interval (0,1)");
  }
}

}  // namespace

Matrix dual_power_basis(int n) {
  if (n < 0) throw ValidationError("dual_power_basis: negative degree");
  Matrix phi = Matrix::Zero(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    const std::vector<double> c = legendre_monomial_coeffs(i);
    for (int j = 0; j <= i; ++j) phi(i, j) = (2.0 * i + 1.0) * c[j];
  }
  return phi;
}

std::vector<double> v_moment_vector(int n, double t_i) {
  require_open_unit(t_i, "v_moment_vector");
  std::vector<double> v(n + 1);
  const double s = 1.0 - t_i;
  v[0] = std::pow(s, n + 1) / (n + 1);
  if (n >= 1) v[1] = t_i * v[0] + std::pow(s, n + 2) / (n + 2);
  const double a = s / t_i;
  for (int j = 2; j <= n; ++j) {
    v[j] = ((a + 2.0) * j + n * (a + 1.0)) * t_i / (n + j + 1.0) * v[j - 1] -
           (a + 1.0) * (j - 1.0) * t_i * t_i / (n + j + 1.0) * v[j - 2];
  }
  return v;
}

std::vector<double> v_moment_hypergeometric(int n, double t_i) {
  require_open_unit(t_i, "v_moment_hypergeometric");
  std::vector<double> v(n + 1);
  const double scale = std::pow(1.0 - t_i, n + 1) / (n + 1);
  for (int j = 0; j <= n; ++j) {
    v[j] = scale * std::pow(t_i, j) * hyp2f1_terminating(j, n + 1.0, n + 2.0, (t_i - 1.0) / t_i);
  }
  return v;
}

double v_truncated_pair(int n, double t_j, double t_i) {
  require_open_unit(t_j, "v_truncated_pair");
  require_open_unit(t_i, "v_truncated_pair");
  if (t_j > t_i) throw ValidationError("v_truncated_pair: expected t_j <= t_i");
  const double self = std::pow(1.0 - t_i, 2 * n + 1) / (2 * n + 1);
  if (t_j == t_i) return self;
  return self * hyp2f1_terminating(n, -2.0 * n - 1.0, -2.0 * n, (t_i - t_j) / (t_i - 1.0));
}

TruncatedDualState seed_dual_truncated(int n) {
  TruncatedDualState s;
  s.degree = n;
  s.psi = dual_power_basis(n);
  s.lambda = Matrix::Zero(0, n + 1);
  return s;
}

TruncatedDualState extend_dual_truncated(const TruncatedDualState& state, double t_new) {
  require_open_unit(t_new, "extend_dual_truncated");
  for (double k : state.knots) {
    if (std::abs(k - t_new) <= kDuplicateTolerance) {
      throw ValidationError("extend_dual_truncated: duplicate knot " + std::to_string(t_new));
    }
  }
  const int n = state.degree;
  const int q = state.size();                            // index of the new function
  const int i = static_cast<int>(state.knots.size()) + 1;  // new truncated-power count

  // v_h = <b_h, (t - t_new)_+^n>, h = 0..q.
  std::vector<double> v = v_moment_vector(n, t_new);
  v.resize(q + 1);
  for (int h = 1; h < i; ++h) {
    const double k = state.knots[h - 1];
    v[n + h] = v_truncated_pair(n, std::min(k, t_new), std::max(k, t_new));
  }
  v[q] = v_truncated_pair(n, t_new, t_new);

  // <(t - t_new)_+^n, L_k>.
  Vector legendre_moments(n + 1);
  for (int k = 0; k <= n; ++k) {
    const std::vector<double> c = legendre_monomial_coeffs(k);
    double sum = 0.0;
    for (int r = 0; r <= k; ++r) sum += c[r] * v[r];
    legendre_moments[k] = sum;
  }

  // u_j = <(t - t_new)_+^n, d_j>.
  Vector u = state.psi.transpose() * legendre_moments;
  for (int h = 1; h < i; ++h) u += v[n + h] * state.lambda.row(h - 1).transpose();

  double pivot = v[q];
  for (int h = 0; h < q; ++h) pivot -= v[h] * u[h];
  if (!(std::abs(pivot) >= kPivotFloor * std::abs(v[q]))) {
    throw NumericalError("extend_dual_truncated: degenerate extension at knot " +
                         std::to_string(t_new));
  }
  const double c_new = 1.0 / pivot;
  Vector c(q);
  for (int h = 0; h < q; ++h) c[h] = -v[h] * c_new;

  TruncatedDualState next;
  next.degree = n;
  next.knots = state.knots;
  next.knots.push_back(t_new);
  next.psi.resize(n + 1, q + 1);
  next.lambda = Matrix::Zero(i, q + 1);

  const Vector psi_new = state.psi * c;
  next.psi.col(q) = psi_new;
  if (i > 1) next.lambda.col(q).head(i - 1) = state.lambda * c;
  next.lambda(i - 1, q) = c_new;

  for (int j = 0; j < q; ++j) {
    next.psi.col(j) = state.psi.col(j) - u[j] * psi_new;
    if (i > 1) {
      next.lambda.col(j).head(i - 1) =
          state.lambda.col(j) - u[j] * next.lambda.col(q).head(i - 1);
    }
    next.lambda(i - 1, j) = -u[j] * c_new;
  }
  return next;
}

TruncatedDualState build_dual_truncated(int n, std::vector<double> knots) {
  std::sort(knots.begin(), knots.end());
  for (std::size_t h = 1; h < knots.size(); ++h) {
    if (knots[h] - knots[h - 1] <= kDuplicateTolerance) {
      throw ValidationError("build_dual_truncated: knots must be distinct");
    }
  }
  TruncatedDualState state = seed_dual_truncated(n);
  for (double k : knots) state = extend_dual_truncated(state, k);
  return state;
}

double dual_truncated_eval(const TruncatedDualState& state, int j, double t) {
  if (j < 0 || j >= state.size()) {
    throw ValidationError("dual_truncated_eval: index " + std::to_string(j) + " out of range");
  }
  if (!(t >= 0.0 && t <= 1.0)) {
    throw ValidationError("dual_truncated_eval: parameter outside [0,1]");
  }
  const Vector col = state.psi.col(j);
  double value = clenshaw_eval(std::span<const double>(col.data(), col.size()), t);
  for (std::size_t h = 0; h < state.knots.size(); ++h) {
    value += state.lambda(h, j) * truncated_power_eval(t, state.knots[h], state.degree);
  }
  return value;
}

double truncated_basis_eval(int n, std::span<const double> knots, int j, double t) {
  if (j < 0 || j > n + static_cast<int>(knots.size())) {
    throw ValidationError("truncated_basis_eval: index out of range");
  }
  if (j <= n) return std::pow(t, j);
  return truncated_power_eval(t, knots[j - n - 1], n);
}

}  // namespace dualspline
