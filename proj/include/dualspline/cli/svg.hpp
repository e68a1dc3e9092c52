#pragma once

#include <string>

#include "dualspline/bspline.hpp"

namespace dualspline::cli {

struct SvgOptions {
  int size = 600;
  int samples = 500;
  bool control_polygon = false;
};

/// Planar overlay: `original` as a solid blue polyline, `result` dashed
/// red. Both curves are sampled on {0, 1/M, ..., 1}. Uses the first two
/// coordinates; one-dimensional curves are drawn as graphs over t.
std::string svg_overlay(const SplineCurve& original, const SplineCurve& result,
                        const SvgOptions& options = {});

}  // namespace dualspline::cli
