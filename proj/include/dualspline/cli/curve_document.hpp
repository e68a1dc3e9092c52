#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dualspline/approx.hpp"
#include "dualspline/knot_vector.hpp"

namespace dualspline::cli {

/// Malformed JSON, missing fields or unreadable/unwritable files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// On-disk form of a spline curve:
///
///   {"name": "pear", "degree": 5,
///    "interior_knots": [{"t": "0.05", "mult": 1}, ...],
///    "control_points": [[0.385, 0.845], ...]}
///
/// `t` is written as the shortest decimal string that reads back to the
/// same double; numbers are accepted on input as well.
struct CurveDocument {
  int degree = 0;
  std::vector<Knot> interior_knots;
  std::vector<std::vector<double>> control_points;
  std::optional<std::string> name;

  friend bool operator==(const CurveDocument&, const CurveDocument&) = default;
};

/// Throws IoError on malformed JSON / wrong field types, ValidationError
/// when the document does not describe a valid curve.
CurveDocument parse_curve_document(std::string_view text);
std::string serialize_curve_document(const CurveDocument& doc);

CurveDocument read_curve_document(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

SplineCurve to_curve(const CurveDocument& doc);
CurveDocument from_curve(const SplineCurve& curve, std::optional<std::string> name = {});

/// Shortest round-trip decimal form, e.g. 0.05 -> "0.05".
std::string format_decimal(double x);

/// Three significant digits, compact exponent: 0.0027575 -> "2.76e-3",
/// 0 -> "0.00e0".
std::string format_sci3(double x);

/// JSON form of a truncated power representation.
std::string serialize_truncated_power(const TruncatedPowerCurve& tp);

}  // namespace dualspline::cli
