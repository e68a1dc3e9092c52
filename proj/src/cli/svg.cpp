#include "dualspline/cli/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

namespace dualspline::cli {

namespace {

struct Point {
  double x, y;
};

std::vector<Point> sample(const SplineCurve& c, int samples) {
  std::vector<Point> out;
  out.reserve(samples + 1);
  for (int k = 0; k <= samples; ++k) {
    const double t = static_cast<double>(k) / samples;
    const Eigen::VectorXd p = curve_eval(c, t);
    out.push_back(c.dim() >= 2 ? Point{p[0], p[1]} : Point{t, p[0]});
  }
  return out;
}

std::vector<Point> control_polygon(const SplineCurve& c) {
  std::vector<Point> out;
  const int dim = c.kv.dimension();
  for (int i = 0; i < dim; ++i) {
    // One-dimensional control values sit at the Greville abscissae.
    if (c.dim() >= 2) {
      out.push_back({c.points(i, 0), c.points(i, 1)});
    } else {
      const int n = c.kv.degree();
      double xi = 0.0;
      for (int r = 1; r <= n; ++r) xi += c.kv.knot(-n + i + r);
      out.push_back({n > 0 ? xi / n : (c.kv.knot(i) + c.kv.knot(i + 1)) / 2, c.points(i, 0)});
    }
  }
  return out;
}

}  // namespace

std::string svg_overlay(const SplineCurve& original, const SplineCurve& result,
                        const SvgOptions& options) {
  std::vector<std::vector<Point>> curves = {sample(original, options.samples),
                                            sample(result, options.samples)};
  std::vector<std::vector<Point>> polygons;
  if (options.control_polygon) {
    polygons = {control_polygon(original), control_polygon(result)};
  }

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  auto grow = [&](const std::vector<Point>& pts) {
    for (const Point& p : pts) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  };
  for (const auto& c : curves) grow(c);
  for (const auto& c : polygons) grow(c);

  const double margin = 0.05 * options.size;
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double scale = (options.size - 2 * margin) / span;
  auto polyline = [&](const std::vector<Point>& pts, const char* style) {
    std::ostringstream s;
    s << "  <polyline fill=\"none\" " << style << " points=\"";
    char buf[64];
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const double x = margin + (pts[k].x - xmin) * scale;
      const double y = options.size - margin - (pts[k].y - ymin) * scale;
      std::snprintf(buf, sizeof buf, "%s%.3f,%.3f", k ? " " : "", x, y);
      s << buf;
    }
    s << "\"/>\n";
    return s.str();
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size << "\" height=\""
      << options.size << "\" viewBox=\"0 0 " << options.size << ' ' << options.size << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!polygons.empty()) {
    svg << polyline(polygons[0], "stroke=\"#9db4e8\" stroke-width=\"0.8\"");
    svg << polyline(polygons[1], "stroke=\"#f0a0a0\" stroke-width=\"0.8\"");
  }
  svg << polyline(curves[0], "stroke=\"blue\" stroke-width=\"1.6\"");
  svg << polyline(curves[1], "stroke=\"red\" stroke-width=\"1.6\" stroke-dasharray=\"6 4\"");
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace dualspline::cli
