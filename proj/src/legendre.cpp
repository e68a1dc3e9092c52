#include "dualspline/legendre.hpp"

#include <string>

#include "dualspline/errors.hpp"

namespace dualspline {

double pochhammer(double h, int k) {
  if (k < 0) throw ValidationError("pochhammer: negative order " + std::to_string(k));
  double r = 1.0;
  for (int q = 0; q < k; ++q) r *= h + q;
  return r;
}

double hyp2f1_terminating(int s, double a, double b, double t) {
  if (s < 0) throw ValidationError("hyp2f1_terminating: s must be non-negative");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < s; ++k) {
    const double numer = (k - s) * (a + k);
    if (numer == 0.0) break;
    const double denom = (b + k) * (k + 1);
    if (denom == 0.0) {
      throw NumericalError("hyp2f1_terminating: (b)_k vanishes before the series terminates");
    }
    term *= numer / denom * t;
    sum += term;
  }
  return sum;
}

double shifted_legendre_eval(int i, double t) {
  if (i < 0) throw ValidationError("shifted_legendre_eval: negative index");
  if (i == 0) return 1.0;
  const double x = 1.0 - 2.0 * t;
  double prev = 1.0, cur = x;
  for (int k = 1; k < i; ++k) {
    const double next = ((2.0 * k + 1.0) * x * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> legendre_monomial_coeffs(int i) {
  if (i < 0) throw ValidationError("legendre_monomial_coeffs: negative index");
  std::vector<double> c(i + 1);
  c[0] = 1.0;
  // Ratio of consecutive terms: (h - i)(h + i + 1) / (h + 1)^2.
  for (int h = 0; h < i; ++h) {
    c[h + 1] = c[h] * (h - i) * static_cast<double>(h + i + 1) / ((h + 1.0) * (h + 1.0));
  }
  return c;
}

double clenshaw_eval(std::span<const double> coeffs, double t) {
  // L_{k+1} = alpha_k L_k + beta_k L_{k-1}, alpha_k = (2k+1)(1-2t)/(k+1),
  // beta_k = -k/(k+1).
  const double x = 1.0 - 2.0 * t;
  double b1 = 0.0, b2 = 0.0;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const double alpha = (2.0 * k + 1.0) * x / (k + 1.0);
    const double beta_next = -(k + 1.0) / (k + 2.0);
    const double b0 = coeffs[k] + alpha * b1 + beta_next * b2;
    b2 = b1;
    b1 = b0;
  }
  return b1;
}

double legendre_norm(int i) {
  if (i < 0) throw ValidationError("legendre_norm: negative index");
  return 1.0 / static_cast<double>(2 * i + 1);
}

}  // namespace dualspline
