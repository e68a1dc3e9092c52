#include "dualspline/pear.hpp"

#include <algorithm>
#include <cmath>

namespace dualspline {

SplineCurve pear_curve() {
  static const double points[25][2] = {
      {0.385, 0.845}, {0.325, 0.76},  {0.305, 0.635}, {0.275, 0.79},  {0.295, 0.895},
      {0.025, 0.885}, {0.035, 0.79},  {0.11, 0.71},   {0.405, 0.705}, {0.2, 0.675},
      {0.1, 0.59},    {0.185, 0.365}, {0.01, 0.45},   {0.01, 0.045},  {0.13, 0.02},
      {0.4, 0.005},   {0.625, 0.045}, {0.67, 0.185},  {0.655, 0.395}, {0.47, 0.405},
      {0.535, 0.51},  {0.47, 0.645},  {0.39, 0.71},   {0.285, 0.665}, {0.395, 0.835},
  };
  std::vector<Knot> knots;
  for (int k = 1; k <= 19; ++k) knots.push_back({k / 20.0, 1});
  Matrix P(25, 2);
  for (int i = 0; i < 25; ++i) P.row(i) << points[i][0], points[i][1];
  return SplineCurve(KnotVector(5, std::move(knots)), std::move(P));
}

const std::vector<PearCase>& pear_cases() {
  static const std::vector<PearCase> cases = {
      {"remove7", 5, {1, 4, 7, 10, 13, 16, 19}, 1.08e-2, 2.95e-2},
      {"remove4", 5, {4, 7, 13, 16}, 3.58e-3, 7.92e-3},
      {"reduce3", 3, {}, 2.76e-3, 3.41e-2},
      {"reduce4_remove3", 4, {4, 13, 16}, 4.64e-3, 1.55e-2},
  };
  return cases;
}

KnotVector pear_target(const PearCase& c) {
  std::vector<Knot> knots;
  for (int k = 1; k <= 19; ++k) {
    if (std::find(c.dropped.begin(), c.dropped.end(), k) == c.dropped.end()) {
      knots.push_back({k / 20.0, 1});
    }
  }
  return KnotVector(c.degree, std::move(knots));
}

bool agrees_to_three_digits(double value, double reference) {
  if (reference == 0.0) return value == 0.0;
  // One unit in the third significant digit of the reference.
  const double unit = std::pow(10.0, std::floor(std::log10(std::abs(reference))) - 2);
  const double rounded = std::round(value / unit) * unit;
  return std::abs(rounded - reference) <= 1.0 * unit * (1.0 + 1e-9);
}

}  // namespace dualspline
