#pragma once

#include <span>
#include <vector>

#include "dualspline/bspline.hpp"

namespace dualspline {

/// Phi(i, j) = (2i+1) (-i)_j (i+1)_j / (j!)^2: the dual of t^j is
/// sum_i Phi(i, j) L_i. Stored dense (zero above the diagonal).
Matrix dual_power_basis(int n);

/// v_j = <t^j, (t - t_i)_+^n>, j = 0..n, by the three-term recurrence.
std::vector<double> v_moment_vector(int n, double t_i);

/// Same moments through the closed 2F1 form; O(n^2), used as a cross-check.
std::vector<double> v_moment_hypergeometric(int n, double t_i);

/// <(t - t_j)_+^n, (t - t_i)_+^n> for t_j < t_i (t_j == t_i allowed).
double v_truncated_pair(int n, double t_j, double t_i);

/**
 * Dual basis of {1, t, ..., t^n, (t-k_1)_+^n, ..., (t-k_i)_+^n}.
 *
 * Column j describes dual function d_j as
 *   sum_k psi(k, j) L_k(t) + sum_h lambda(h, j) (t - k_h)_+^n.
 * The basis order follows `knots` (insertion order).
 */
struct TruncatedDualState {
  int degree = 0;
  std::vector<double> knots;
  Matrix psi;
  Matrix lambda;

  int size() const { return degree + 1 + static_cast<int>(knots.size()); }
};

/// State with no knots: psi = Phi, lambda empty.
TruncatedDualState seed_dual_truncated(int n);

/// Adds (t - t_new)_+^n to the basis and returns the updated dual set.
/// t_new must lie in (0,1) and differ from every knot already used.
TruncatedDualState extend_dual_truncated(const TruncatedDualState& state, double t_new);

/// Sorts `knots` ascending and folds extend_dual_truncated over them.
TruncatedDualState build_dual_truncated(int n, std::vector<double> knots);

/// d_j(t).
double dual_truncated_eval(const TruncatedDualState& state, int j, double t);

/// b_j(t) of the truncated power basis {t^0..t^n, (t-k_h)_+^n}.
double truncated_basis_eval(int n, std::span<const double> knots, int j, double t);

}  // namespace dualspline
