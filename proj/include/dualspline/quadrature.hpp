#pragma once

#include <vector>

namespace dualspline {

/// Gauss–Legendre rule mapped to [0,1]; exact for polynomials of degree
/// up to 2*points-1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_legendre_unit(int points);

/// Integrates f over [a,b] with the given rule.
template <typename F>
auto integrate(const GaussRule& rule, double a, double b, F&& f) {
  const double h = b - a;
  auto sum = rule.weights[0] * f(a + h * rule.nodes[0]);
  for (std::size_t k = 1; k < rule.nodes.size(); ++k) {
    sum += rule.weights[k] * f(a + h * rule.nodes[k]);
  }
  return sum * h;
}

}  // namespace dualspline
