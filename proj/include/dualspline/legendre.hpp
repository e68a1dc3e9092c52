#pragma once

#include <span>
#include <vector>

namespace dualspline {

/// Combination sum_i coeffs[i] L_i of shifted Legendre polynomials
/// L_i(t) = (-1)^i P_i(2t-1). Inside dual-basis expansions the list may be
/// longer than degree_cap+1 (the tail then refers to spline members of an
/// orthogonal basis).
struct LegendreCombination {
  int degree_cap = 0;
  std::vector<double> coeffs;
};

/// Rising factorial (h)_k.
double pochhammer(double h, int k);

/// Terminating 2F1(-s, a; b | t), summed through the term ratio. The sum
/// stops once (-s)_k vanishes, so b = -2n style parameters are fine as
/// long as (b)_k stays non-zero for k <= s.
double hyp2f1_terminating(int s, double a, double b, double t);

/// L_i(t) by the three-term recurrence.
double shifted_legendre_eval(int i, double t);

/// Monomial coefficients of L_i: (-i)_h (i+1)_h / (h!)^2, h = 0..i.
std::vector<double> legendre_monomial_coeffs(int i);

/// sum_i c_i L_i(t) with the backward Clenshaw recurrence.
double clenshaw_eval(std::span<const double> coeffs, double t);
inline double clenshaw_eval(const LegendreCombination& c, double t) {
  return clenshaw_eval(c.coeffs, t);
}

/// <L_i, L_i> = 1/(2i+1) on [0,1].
double legendre_norm(int i);

}  // namespace dualspline
