#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopf/hopf.hpp"
#include "io.hpp"

namespace hopfctl {

namespace {

using hopf::ComplexPair;
using hopf::HopfVariant;
using hopf::Point3;
using hopf::Quaternion;
using io::json;

// Inputs this close to unit norm are renormalized at the tool boundary; the
// library itself only accepts hopf::eps_norm.
constexpr double unit_band = 1e-6;

struct Options {
  std::string in_file;
  std::string convention = "quat";
  std::string variant;
  bool degrees = false;
  std::size_t count = 8;
  std::vector<std::string> checks;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
};

struct Context {
  const Options& opt;
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

json read_input(const Context& ctx) {
  std::string text;
  if (ctx.opt.in_file.empty()) {
    text.assign(std::istreambuf_iterator<char>(ctx.in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(ctx.opt.in_file, std::ios::binary);
    if (!file) throw io::format_error("cannot open input file '" + ctx.opt.in_file + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  return io::parse_document(text);
}

double angle_in(const Context& ctx, double theta) {
  return ctx.opt.degrees ? theta * (std::numbers::pi / 180.0) : theta;
}

double angle_out(const Context& ctx, double theta) {
  return ctx.opt.degrees ? theta * (180.0 / std::numbers::pi) : theta;
}

HopfVariant selected_variant(const Context& ctx) { return *hopf::parse_variant(ctx.opt.variant); }

// Checks |norm - 1| <= unit_band. Returns the factor that makes the value
// acceptable to the library: 1 when it already is, 1/norm otherwise.
double unit_rescale(double n, bool library_ok, const std::string& what, const Context& ctx) {
  if (!std::isfinite(n) || !(n > 0.0)) throw hopf::error(hopf::errc::not_unit, what + " is zero");
  if (std::abs(n - 1.0) > unit_band) {
    throw hopf::error(hopf::errc::not_unit, what + " is not within " + std::to_string(unit_band) +
                                                " of unit length");
  }
  if (library_ok) return 1.0;
  ctx.err << "hopfctl: warning: renormalized " << what << "\n";
  return 1.0 / n;
}

Point3<double> unit_point(const Point3<double>& p, const std::string& what, const Context& ctx) {
  return p * unit_rescale(hopf::norm(p), hopf::is_sphere_point(p), what, ctx);
}

ComplexPair<double> unit_pair(const ComplexPair<double>& v, const std::string& what, const Context& ctx) {
  const double s = unit_rescale(hopf::norm(v), hopf::is_unit(v), what, ctx);
  return {v.z * s, v.w * s};
}

hopf::AxisAngle<double> axis_angle_at_boundary(const io::RawAxisAngle& raw, const Context& ctx) {
  return {angle_in(ctx, raw.theta), hopf::UnitVector3<double>(unit_point(raw.axis, "axis", ctx))};
}

// Quaternion array or {"z", "w"} object, as a point of C^2.
ComplexPair<double> decode_s3_input(const json& j) {
  if (j.is_array()) return hopf::to_complex_pair(io::decode_quaternion(j));
  return io::decode_complex_pair(j);
}

json encode_lift(HopfVariant variant, const ComplexPair<double>& v) {
  if (variant == HopfVariant::Quat) return io::encode(hopf::from_complex_pair(v));
  return io::encode(v);
}

const json& array_field(const json& doc, const char* key) {
  const json& a = doc.at(key);
  if (!a.is_array()) throw io::format_error(std::string("'") + key + "' must be an array");
  return a;
}

int cmd_convert(const Context& ctx) {
  const json doc = read_input(ctx);
  if (!doc.is_object()) throw io::format_error("convert input must be a JSON object");
  const bool bloch_input = ctx.opt.convention == "bloch";

  std::optional<hopf::AxisAngle<double>> aa;
  if (doc.contains("axis_angle")) {
    // A previous convert output; the axis-angle is authoritative.
    io::expect_keys(doc, "convert input", {"axis_angle", "gq", "gq_matrix", "gb_matrix"}, {"axis_angle"});
    aa = axis_angle_at_boundary(io::decode_axis_angle(doc.at("axis_angle")), ctx);
  } else if (doc.contains("quaternion")) {
    io::expect_keys(doc, "convert input", {"quaternion"}, {"quaternion"});
    const ComplexPair<double> v =
        unit_pair(hopf::to_complex_pair(io::decode_quaternion(doc.at("quaternion"))), "quaternion", ctx);
    const Quaternion<double> q = hopf::from_complex_pair(v);
    aa = bloch_input ? hopf::axis_angle_from_gb(hopf::su2_from_quat(q)) : hopf::axis_angle_from_gq(q);
  } else if (doc.contains("su2")) {
    io::expect_keys(doc, "convert input", {"su2"}, {"su2"});
    const ComplexPair<double> v = unit_pair(io::decode_complex_pair(doc.at("su2")), "su2 matrix", ctx);
    const hopf::SU2Matrix<double> m(v.z, v.w);
    aa = bloch_input ? hopf::axis_angle_from_gb(m) : hopf::axis_angle_from_gq(hopf::quat_from_su2(m));
  } else {
    aa = axis_angle_at_boundary(io::decode_axis_angle(doc), ctx);
  }

  const auto forms = hopf::convert_convention(*aa);
  json out = json::object();
  out["axis_angle"] = io::encode_axis_angle(angle_out(ctx, aa->theta), aa->axis.vec());
  out["gq"] = io::encode(forms.quat);
  out["gq_matrix"] = io::encode(hopf::su2_from_quat(forms.quat));
  out["gb_matrix"] = io::encode(forms.bloch);
  ctx.out << io::dump(out);
  return exit_success;
}

int cmd_rotate(const Context& ctx) {
  const json doc = read_input(ctx);
  io::expect_keys(doc, "rotate input", {"theta", "axis", "points"}, {"theta", "axis", "points"});
  json aa_doc = json::object();
  aa_doc["theta"] = doc.at("theta");
  aa_doc["axis"] = doc.at("axis");
  const hopf::AxisAngle<double> aa = axis_angle_at_boundary(io::decode_axis_angle(aa_doc), ctx);
  const bool via_bloch = ctx.opt.convention == "bloch";

  json points = json::array();
  for (const json& item : array_field(doc, "points")) {
    const Point3<double> p = io::decode_point3(item);
    if (!via_bloch) {
      points.push_back(io::encode(hopf::rotate(aa, p)));
      continue;
    }
    // The Bloch route works on S^2; scale through it.
    const double r = hopf::norm(p);
    if (r == 0.0) {
      points.push_back(io::encode(p));
      continue;
    }
    const Point3<double> rotated = hopf::rotate_via_bloch(aa, hopf::lift_bloch(p * (1.0 / r)));
    points.push_back(io::encode(rotated * r));
  }
  json out = json::object();
  out["points"] = std::move(points);
  ctx.out << io::dump(out);
  return exit_success;
}

int cmd_hopf(const Context& ctx) {
  const json doc = read_input(ctx);
  io::expect_keys(doc, "hopf input", {"inputs"}, {"inputs"});
  const HopfVariant variant = selected_variant(ctx);
  json points = json::array();
  std::size_t index = 0;
  for (const json& item : array_field(doc, "inputs")) {
    ComplexPair<double> v = decode_s3_input(item);
    if (variant != HopfVariant::Bloch) v = unit_pair(v, "input " + std::to_string(index), ctx);
    points.push_back(io::encode(hopf::hopf_image(variant, v)));
    ++index;
  }
  json out = json::object();
  out["variant"] = std::string(hopf::to_string(variant));
  out["points"] = std::move(points);
  ctx.out << io::dump(out);
  return exit_success;
}

int cmd_lift(const Context& ctx) {
  const json doc = read_input(ctx);
  io::expect_keys(doc, "lift input", {"points"}, {"points"});
  const HopfVariant variant = selected_variant(ctx);
  json lifts = json::array();
  std::size_t index = 0;
  for (const json& item : array_field(doc, "points")) {
    const Point3<double> p = unit_point(io::decode_point3(item), "point " + std::to_string(index), ctx);
    lifts.push_back(encode_lift(variant, hopf::canonical_lift(variant, p)));
    ++index;
  }
  json out = json::object();
  out["variant"] = std::string(hopf::to_string(variant));
  out["lifts"] = std::move(lifts);
  ctx.out << io::dump(out);
  return exit_success;
}

int cmd_fiber(const Context& ctx) {
  const json doc = read_input(ctx);
  io::expect_keys(doc, "fiber input", {"base"}, {"base"});
  const HopfVariant variant = selected_variant(ctx);
  const Point3<double> base = unit_point(io::decode_point3(doc.at("base")), "base", ctx);
  const auto fiber = hopf::fiber_sample(variant, base, ctx.opt.count);

  json lifts = json::array();
  double roundtrip = 0.0;
  for (const ComplexPair<double>& v : fiber) {
    lifts.push_back(encode_lift(variant, v));
    roundtrip = std::max(roundtrip, hopf::distance(hopf::hopf_image(variant, v), base));
  }
  json out = json::object();
  out["variant"] = std::string(hopf::to_string(variant));
  out["base"] = io::encode(base);
  out["count"] = fiber.size();
  out["lifts"] = std::move(lifts);
  out["roundtrip_max_error"] = roundtrip;
  ctx.out << io::dump(out);
  return exit_success;
}

json encode_report(const hopf::CheckReport& r) {
  json out = json::object();
  out["name"] = r.name;
  out["samples"] = r.samples;
  out["seed"] = r.seed;
  out["tolerance"] = r.tolerance;
  out["max_deviation"] = r.max_deviation;
  out["failures"] = r.failures;
  out["resampled"] = r.resampled;
  out["worst_input"] = json::parse(r.worst_input);
  return out;
}

int cmd_verify(const Context& ctx) {
  const Options& opt = ctx.opt;
  std::vector<hopf::CheckReport> reports;
  if (opt.checks.empty()) {
    reports = hopf::run_all(opt.samples, opt.seed, opt.tolerance);
  } else {
    for (const std::string& name : opt.checks) {
      // Same derived seed as in a full run, so subsets reproduce its reports.
      reports.push_back(hopf::run_check(
          {name, opt.samples, opt.seed + hopf::sampling::stable_hash(name), opt.tolerance}));
    }
  }
  const bool passed =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  json out = json::object();
  out["samples"] = opt.samples;
  out["seed"] = opt.seed;
  out["tolerance"] = opt.tolerance;
  out["passed"] = passed;
  json list = json::array();
  for (const auto& r : reports) list.push_back(encode_report(r));
  out["reports"] = std::move(list);
  ctx.out << io::dump(out);
  return passed ? exit_success : exit_verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Hopf fibrations and the quaternion / Bloch rotation conventions", "hopfctl"};
  app.require_subcommand(1);

  const auto variants = CLI::IsMember({"classic", "quat", "bloch"});
  const auto conventions = CLI::IsMember({"quat", "bloch"});
  auto add_in = [&](CLI::App* sub) {
    sub->add_option("--in", opt.in_file, "Read the input document from FILE instead of stdin");
  };

  auto* convert = app.add_subcommand("convert", "Emit the axis-angle, g_Q and g_B forms of a rotation");
  add_in(convert);
  convert->add_option("--convention", opt.convention, "Convention of a quaternion/su2 input")
      ->check(conventions);
  convert->add_flag("--degrees", opt.degrees, "Angles in degrees");

  auto* rotate = app.add_subcommand("rotate", "Rotate points about an axis");
  add_in(rotate);
  rotate->add_option("--convention", opt.convention, "Route through quat or bloch")->check(conventions);
  rotate->add_flag("--degrees", opt.degrees, "Angles in degrees");

  auto* hopf_cmd = app.add_subcommand("hopf", "Apply a Hopf map S^3 -> S^2");
  add_in(hopf_cmd);
  hopf_cmd->add_option("--variant", opt.variant, "classic, quat or bloch")->required()->check(variants);

  auto* lift = app.add_subcommand("lift", "Canonical S^3 lifts of S^2 points");
  add_in(lift);
  lift->add_option("--variant", opt.variant, "classic, quat or bloch")->required()->check(variants);

  auto* fiber = app.add_subcommand("fiber", "Sample the fiber over a base point");
  add_in(fiber);
  fiber->add_option("--variant", opt.variant, "classic, quat or bloch")->required()->check(variants);
  fiber->add_option("--count", opt.count, "Number of fiber points")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run the diagram verification catalog");
  std::vector<std::string> catalog(hopf::check_catalog.begin(), hopf::check_catalog.end());
  verify->add_option("--check", opt.checks, "Check name (repeatable); default all")
      ->check(CLI::IsMember(catalog));
  verify->add_option("--samples", opt.samples, "Samples per check")->check(CLI::PositiveNumber);
  verify->add_option("--seed", opt.seed, "Base seed");
  verify->add_option("--tolerance", opt.tolerance, "Deviation tolerance")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Prints help to `out` for --help, the error to `err` otherwise.
    return app.exit(e, out, err) == 0 ? exit_success : exit_usage;
  }

  const Context ctx{opt, in, out, err};
  try {
    if (*convert) return cmd_convert(ctx);
    if (*rotate) return cmd_rotate(ctx);
    if (*hopf_cmd) return cmd_hopf(ctx);
    if (*lift) return cmd_lift(ctx);
    if (*fiber) return cmd_fiber(ctx);
    return cmd_verify(ctx);
  } catch (const io::format_error& e) {
    err << "hopfctl: " << e.what() << "\n";
    return exit_usage;
  } catch (const json::exception& e) {
    err << "hopfctl: malformed input document: " << e.what() << "\n";
    return exit_usage;
  } catch (const hopf::error& e) {
    err << "hopfctl: " << e.what() << "\n";
    if (e.code() == hopf::errc::unknown_check) return exit_usage;
    return exit_domain;
  }
}

}  // namespace hopfctl
