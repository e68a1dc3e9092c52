#include "dualspline/cli/commands.hpp"

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dualspline/approx.hpp"
#include "dualspline/cli/curve_document.hpp"
#include "dualspline/cli/svg.hpp"
#include "dualspline/dual_bspline.hpp"
#include "dualspline/errors.hpp"
#include "dualspline/pear.hpp"

namespace dualspline::cli {

namespace fs = std::filesystem;

namespace {

constexpr double kDualityTolerance = 1e-8;
constexpr double kRoundTripTolerance = 1e-8;

std::vector<double> parse_decimal_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ValidationError("'" + item + "' is not a decimal number");
    out.push_back(value);
  }
  return out;
}

void print_report(std::ostream& out, const ApproxReport& r) {
  out << "E2 = " << format_sci3(r.e2) << "\n";
  out << "Einf = " << format_sci3(r.einf) << "\n";
  out << "dimension " << r.source_dim << " -> " << r.target_dim << "\n";
  out << "elapsed " << std::fixed << std::setprecision(3) << r.elapsed.count() * 1e3 << " ms\n";
  out.unsetf(std::ios::floatfield);
}

void write_outputs(const SplineCurve& source, const ApproxResult& result, const std::string& out_path,
                   const std::string& svg_path, bool control_polygon,
                   std::optional<std::string> name) {
  write_text_file(out_path, serialize_curve_document(from_curve(result.curve, std::move(name))));
  if (!svg_path.empty()) {
    SvgOptions options;
    options.control_polygon = control_polygon;
    write_text_file(svg_path, svg_overlay(source, result.curve, options));
  }
}

// Keep list: each listed position contributes one multiplicity.
KnotVector keep_knots(const KnotVector& kv, int degree, const std::vector<double>& keep) {
  std::vector<double> flat;
  for (double p : keep) {
    bool found = false;
    for (double t : kv.interior_flat()) {
      if (std::abs(t - p) <= 1e-12) {
        flat.push_back(t);
        found = true;
        break;
      }
    }
    if (!found) throw ValidationError("knot " + format_decimal(p) + " is not an interior knot");
  }
  std::sort(flat.begin(), flat.end());
  KnotVector result = knot_vector_from_flat(degree, flat);
  if (!kv.contains(result)) throw ValidationError("kept knots exceed the curve's multiplicities");
  return result;
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
}

struct ReduceArgs {
  std::string input, out, svg, keep, drop;
  int degree = -1;
  bool control_polygon = false;
};

int cmd_reduce(const ReduceArgs& a, bool keep_given, bool drop_given, std::ostream& out) {
  const CurveDocument doc = read_curve_document(a.input);
  const SplineCurve curve = to_curve(doc);
  const int n = curve.kv.degree();
  if (a.degree < 0 || a.degree > n) {
    throw ValidationError("--degree must lie in [0, " + std::to_string(n) + "]");
  }
  KnotVector target = curve.kv;
  if (keep_given) {
    target = keep_knots(curve.kv, a.degree, parse_decimal_list(a.keep));
  } else if (drop_given) {
    target = drop_knots(curve.kv, parse_decimal_list(a.drop)).with_degree(a.degree);
  } else {
    target = curve.kv.with_degree(a.degree);
  }
  const ApproxResult result = reduce_and_remove(curve, a.degree, target);
  print_report(out, result.report);
  write_outputs(curve, result, a.out, a.svg, a.control_polygon, doc.name);
  return kOk;
}

int cmd_remove_knots(const ReduceArgs& a, std::ostream& out) {
  const CurveDocument doc = read_curve_document(a.input);
  const SplineCurve curve = to_curve(doc);
  const KnotVector keep = drop_knots(curve.kv, parse_decimal_list(a.drop));
  const ApproxResult result = remove_knots(curve, keep);
  print_report(out, result.report);
  write_outputs(curve, result, a.out, a.svg, a.control_polygon, doc.name);
  return kOk;
}

int cmd_check(const std::string& input, const std::vector<long long>& random, std::ostream& out) {
  KnotVector kv(0, {});
  if (!random.empty()) {
    if (random[0] < 0 || random[1] < 0) throw ValidationError("--random needs non-negative N and M");
    kv = random_knot_vector(static_cast<int>(random[0]), static_cast<int>(random[1]),
                            static_cast<std::uint64_t>(random[2]));
  } else if (!input.empty()) {
    kv = to_curve(read_curve_document(input)).kv;
  } else {
    throw ValidationError("check needs an input document or --random N M SEED");
  }
  const GramMatrix gram = gram_bsplines(kv);
  const DualBasisMatrix dual = build_dual(extend_orthogonal(kv, gram));
  const double residual = duality_residual(dual, gram);
  out << "degree " << kv.degree() << ", interior knots " << kv.interior_count() << "\n";
  out << "max |D*G - I| = " << format_sci3(residual) << "\n";
  return residual <= kDualityTolerance ? kOk : kNumericalError;
}

int cmd_convert_power(const std::string& input, const std::string& out_path, bool verify,
                      std::ostream& out) {
  const SplineCurve curve = to_curve(read_curve_document(input));
  const TruncatedPowerCurve tp = to_truncated_power(curve);
  write_text_file(out_path, serialize_truncated_power(tp));
  out << "wrote " << tp.coeffs.rows() << " truncated power coefficients per component\n";
  if (verify) {
    double worst = 0.0;
    for (int k = 0; k <= kDefaultGridSize; ++k) {
      const double t = static_cast<double>(k) / kDefaultGridSize;
      worst = std::max(worst, (eval_truncated_power(tp, t) - curve_eval(curve, t)).norm());
    }
    out << "max round-trip error = " << format_sci3(worst) << "\n";
    if (!(worst <= kRoundTripTolerance)) return kNumericalError;
  }
  return kOk;
}

int cmd_pear_demo(const std::string& outdir, std::ostream& out) {
  const fs::path dir(outdir);
  fs::create_directories(dir);
  const SplineCurve pear = pear_curve();
  write_text_file(dir / "pear.json", serialize_curve_document(from_curve(pear, "pear")));

  std::ostringstream table;
  table << std::left << std::setw(18) << "case" << std::setw(10) << "E2" << std::setw(10)
        << "ref" << std::setw(10) << "Einf" << std::setw(10) << "ref"
        << "status\n";
  bool all_match = true;
  for (const PearCase& c : pear_cases()) {
    const ApproxResult r = reduce_and_remove(pear, c.degree, pear_target(c));
    const bool match = agrees_to_three_digits(r.report.e2, c.reference_e2) &&
                       agrees_to_three_digits(r.report.einf, c.reference_einf);
    all_match = all_match && match;
    table << std::setw(18) << c.name << std::setw(10) << format_sci3(r.report.e2) << std::setw(10)
          << format_sci3(c.reference_e2) << std::setw(10) << format_sci3(r.report.einf)
          << std::setw(10) << format_sci3(c.reference_einf) << (match ? "ok" : "MISMATCH")
          << "\n";
    write_text_file(dir / (c.name + ".json"),
                    serialize_curve_document(from_curve(r.curve, "pear-" + c.name)));
    write_text_file(dir / (c.name + ".svg"), svg_overlay(pear, r.curve));
  }
  write_text_file(dir / "summary.txt", table.str());
  out << table.str();
  return all_match ? kOk : kNumericalError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dual B-spline and truncated power bases; least-squares spline approximation"};
  app.require_subcommand(1);

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "L2-optimal degree reduction, optionally with knot removal");
  reduce->add_option("input", reduce_args.input, "Curve document (JSON)")->required();
  reduce->add_option("--degree", reduce_args.degree, "Target degree")->required();
  auto* keep_opt = reduce->add_option("--keep-knots", reduce_args.keep, "Comma-separated interior knots to keep");
  auto* drop_opt = reduce->add_option("--drop-knots", reduce_args.drop, "Comma-separated interior knots to drop");
  keep_opt->excludes(drop_opt);
  reduce->add_option("--out", reduce_args.out, "Output curve document")->required();
  reduce->add_option("--svg", reduce_args.svg, "Optional SVG overlay");
  reduce->add_flag("--control-polygon", reduce_args.control_polygon, "Draw control polygons in the SVG");

  ReduceArgs remove_args;
  auto* remove = app.add_subcommand("remove-knots", "L2-optimal knot removal");
  remove->add_option("input", remove_args.input, "Curve document (JSON)")->required();
  remove->add_option("--drop-knots", remove_args.drop, "Comma-separated interior knots to drop")->required();
  remove->add_option("--out", remove_args.out, "Output curve document")->required();
  remove->add_option("--svg", remove_args.svg, "Optional SVG overlay");
  remove->add_flag("--control-polygon", remove_args.control_polygon, "Draw control polygons in the SVG");

  std::string check_input;
  std::vector<long long> random;
  auto* check = app.add_subcommand("check", "Verify the duality conditions of the dual B-spline basis");
  auto* check_in = check->add_option("input", check_input, "Curve document (JSON)");
  check->add_option("--random", random, "Random knot vector: degree N, M interior knots, SEED")
      ->expected(3)
      ->excludes(check_in);

  std::string convert_input, convert_out;
  bool verify = false;
  auto* convert = app.add_subcommand("convert-power", "Convert a curve to the truncated power basis");
  convert->add_option("input", convert_input, "Curve document (JSON)")->required();
  convert->add_option("--out", convert_out, "Output JSON")->required();
  convert->add_flag("--verify", verify, "Check the round trip on a 501-point grid");

  std::string outdir;
  auto* demo = app.add_subcommand("pear-demo", "Run the four Pear experiments");
  demo->add_option("--outdir", outdir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }

  return guarded(err, [&]() -> int {
    if (*reduce) return cmd_reduce(reduce_args, keep_opt->count() > 0, drop_opt->count() > 0, out);
    if (*remove) return cmd_remove_knots(remove_args, out);
    if (*check) return cmd_check(check_input, random, out);
    if (*convert) return cmd_convert_power(convert_input, convert_out, verify, out);
    return cmd_pear_demo(outdir, out);
  });
}

}  // namespace dualspline::cli
