#pragma once

#include <string>
#include <vector>

#include "dualspline/bspline.hpp"

namespace dualspline {

/// The degree-5 planar "Pear" curve: interior knots k/20, k = 1..19, and
/// 25 control points.
SplineCurve pear_curve();

/// One of the four reference experiments on the Pear curve.
struct PearCase {
  std::string name;
  int degree;                     // target degree
  std::vector<int> dropped;       // removed interior knots, as k in k/20
  double reference_e2;
  double reference_einf;
};

const std::vector<PearCase>& pear_cases();

/// Target knot vector of a case.
KnotVector pear_target(const PearCase& c);

/// True when `value` rounds to `reference` at three significant digits, or
/// differs from it by one unit in the third digit.
bool agrees_to_three_digits(double value, double reference);

}  // namespace dualspline
