#include "dualspline/cli/curve_document.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dualspline/errors.hpp"

namespace dualspline::cli {

using nlohmann::json;

namespace {

double parse_knot_position(const json& value) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const std::string s = value.get<std::string>();
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw IoError("knot position '" + s + "' is not a decimal number");
    }
    return out;
  }
  throw IoError("knot position must be a string or a number");
}

}  // namespace

CurveDocument parse_curve_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
  CurveDocument doc;
  try {
    doc.degree = j.at("degree").get<int>();
    for (const json& k : j.at("interior_knots")) {
      doc.interior_knots.push_back({parse_knot_position(k.at("t")), k.value("mult", 1)});
    }
    for (const json& p : j.at("control_points")) {
      doc.control_points.push_back(p.get<std::vector<double>>());
    }
    if (j.contains("name") && !j.at("name").is_null()) doc.name = j.at("name").get<std::string>();
  } catch (const json::exception& e) {
    throw IoError(std::string("invalid curve document: ") + e.what());
  }
  // Validates the curve invariants.
  (void)to_curve(doc);
  return doc;
}

std::string serialize_curve_document(const CurveDocument& doc) {
  json j = json::object();
  if (doc.name) j["name"] = *doc.name;
  j["degree"] = doc.degree;
  j["interior_knots"] = json::array();
  for (const Knot& k : doc.interior_knots) {
    j["interior_knots"].push_back({{"t", format_decimal(k.position)}, {"mult", k.multiplicity}});
  }
  j["control_points"] = doc.control_points;
  return j.dump(2) + "\n";
}

CurveDocument read_curve_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_curve_document(buffer.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

SplineCurve to_curve(const CurveDocument& doc) {
  KnotVector kv(doc.degree, doc.interior_knots);
  if (doc.control_points.empty()) throw ValidationError("curve has no control points");
  const std::size_t dim = doc.control_points.front().size();
  Matrix P(static_cast<Eigen::Index>(doc.control_points.size()), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < doc.control_points.size(); ++i) {
    if (doc.control_points[i].size() != dim) {
      throw ValidationError("control points have inconsistent dimensions");
    }
    for (std::size_t c = 0; c < dim; ++c) P(i, c) = doc.control_points[i][c];
  }
  return SplineCurve(std::move(kv), std::move(P));
}

CurveDocument from_curve(const SplineCurve& curve, std::optional<std::string> name) {
  CurveDocument doc;
  doc.degree = curve.kv.degree();
  doc.interior_knots.assign(curve.kv.interior().begin(), curve.kv.interior().end());
  for (Eigen::Index i = 0; i < curve.points.rows(); ++i) {
    std::vector<double> row(curve.points.cols());
    for (Eigen::Index c = 0; c < curve.points.cols(); ++c) row[c] = curve.points(i, c);
    doc.control_points.push_back(std::move(row));
  }
  doc.name = std::move(name);
  return doc;
}

std::string format_decimal(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string format_sci3(double x) {
  if (x == 0.0) return "0.00e0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  std::string s(buf);
  const auto e = s.find('e');
  const int exponent = std::stoi(s.substr(e + 1));
  return s.substr(0, e) + "e" + std::to_string(exponent);
}

std::string serialize_truncated_power(const TruncatedPowerCurve& tp) {
  json j = json::object();
  j["degree"] = tp.degree;
  j["knots"] = json::array();
  for (double k : tp.knots) j["knots"].push_back(format_decimal(k));
  json basis = json::array();
  for (int r = 0; r <= tp.degree; ++r) basis.push_back(r == 0 ? "1" : r == 1 ? "t" : "t^" + std::to_string(r));
  for (double k : tp.knots) {
    basis.push_back("(t-" + format_decimal(k) + ")_+^" + std::to_string(tp.degree));
  }
  j["basis"] = basis;
  json coeffs = json::array();
  for (Eigen::Index i = 0; i < tp.coeffs.rows(); ++i) {
    std::vector<double> row(tp.coeffs.cols());
    for (Eigen::Index c = 0; c < tp.coeffs.cols(); ++c) row[c] = tp.coeffs(i, c);
    coeffs.push_back(row);
  }
  j["coefficients"] = coeffs;
  return j.dump(2) + "\n";
}

}  // namespace dualspline::cli
