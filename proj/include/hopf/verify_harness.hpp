#pragma once

// Seeded randomized verification of the commutative diagrams relating the
// Hopf maps and the two rotation conventions.
//
// Each catalog entry evaluates two (or more) composition paths on a random
// sample and measures their Euclidean distance in the common target space
// (S^2, C^2, or the (z, w) coordinates of SU(2)). Points of P^1 are compared
// through stereo3^{-1} o chart.
//
// A report depends only on (name, samples, seed, tolerance): sample i is drawn
// from its own generator seeded with sample_seed(seed, i), and reduction is
// done in sample order.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/error.hpp"
#include "hopf/fibers.hpp"
#include "hopf/hopf_maps.hpp"
#include "hopf/quat_algebra.hpp"
#include "hopf/riemann_sphere.hpp"
#include "hopf/rotations.hpp"
#include "hopf/sampling.hpp"
#include "hopf/special_unitary.hpp"

namespace hopf {

inline constexpr std::array<std::string_view, 12> check_catalog = {
    "rephrase",           "quat-identification", "template-classic", "template-quat",
    "template-bloch",     "compare-bloch-quat",  "odot-lemma",       "reconcile",
    "derivation-16-18",   "final-diagram",       "iso-su2-quat",     "fiber-invariance",
};

// Samples whose chart input lies this close to [1, 0] are redrawn.
inline constexpr double pole_margin = 1e-6;

struct DiagramCheck {
  std::string name;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
};

struct CheckReport {
  std::string name;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0;
  double max_deviation = 0;
  std::size_t failures = 0;   // samples with deviation above tolerance
  std::size_t resampled = 0;  // near-pole draws that were replaced
  std::string worst_input;    // JSON object of the worst sample's draws

  bool passed() const noexcept { return failures == 0; }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

inline bool is_known_check(std::string_view name) {
  return std::find(check_catalog.begin(), check_catalog.end(), name) != check_catalog.end();
}

namespace detail {

// The draws behind one sample, kept so the worst one can be reported.
class SampleRecord {
 public:
  void clear() { fields_.clear(); }

  void add(std::string_view key, std::initializer_list<double> values) {
    Field f{key, {}, 0};
    for (double v : values) f.values[f.size++] = v;
    fields_.push_back(f);
  }
  void add(std::string_view key, double v) { add(key, {v}); }
  void add(std::string_view key, const Quaternion<double>& q) { add(key, {q.x0, q.x1, q.x2, q.x3}); }
  void add(std::string_view key, const ComplexPair<double>& v) {
    add(key, {v.z.real(), v.z.imag(), v.w.real(), v.w.imag()});
  }
  void add(std::string_view key, std::complex<double> c) { add(key, {c.real(), c.imag()}); }
  void add(std::string_view key, const Point3<double>& p) { add(key, {p.x, p.y, p.z}); }
  void add(std::string_view key, const SU2Matrix<double>& g) {
    add(key, ComplexPair<double>{g.z(), g.w()});
  }
  void add(std::string_view key, const AxisAngle<double>& aa) {
    add(key, {aa.theta, aa.axis.n1(), aa.axis.n2(), aa.axis.n3()});
  }

  std::string to_json(std::uint64_t sample_seed) const {
    std::string out = "{\"sample_seed\":" + std::to_string(sample_seed);
    for (const Field& f : fields_) {
      out += ",\"";
      out += f.key;
      out += "\":";
      if (f.size == 1) {
        append_number(out, f.values[0]);
        continue;
      }
      out += '[';
      for (std::size_t i = 0; i < f.size; ++i) {
        if (i) out += ',';
        append_number(out, f.values[i]);
      }
      out += ']';
    }
    out += '}';
    return out;
  }

 private:
  struct Field {
    std::string_view key;
    std::array<double, 4> values;
    std::size_t size;
  };

  static void append_number(std::string& out, double v) {
    if (!std::isfinite(v)) {
      out += "null";
      return;
    }
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
  }

  std::vector<Field> fields_;
};

inline bool near_chart_pole(const ComplexPair<double>& v) {
  return std::abs(v.w) <= pole_margin * norm(v);
}

inline Point3<double> to_sphere(const ProjectivePoint<double>& p) { return stereo3_inv(chart(p)); }

inline Quaternion<double> circle_element(double t) { return {std::cos(t), std::sin(t), 0.0, 0.0}; }

template <class... Ds>
double worst(Ds... ds) {
  double m = 0;
  for (double d : {ds...}) {
    if (std::isnan(d)) return d;
    m = std::max(m, d);
  }
  return m;
}

using Deviation = std::optional<double>;  // nullopt: near a pole, redraw

// act on [1, 0] == pi o act on (1, 0); more generally act_on_proj o pi == pi o act_on_vector.
template <class S>
Deviation check_rephrase(S& s, SampleRecord& r) {
  const SU2Matrix<double> g = s.su2();
  const ComplexPair<double> v = s.nonzero_pair();
  r.add("g", g);
  r.add("v", v);
  const ComplexPair<double> gv = act_on_vector(g, v);
  const ComplexPair<double> g10 = act_on_sphere_point(g);
  if (near_chart_pole(v) || near_chart_pole(gv) || near_chart_pole(g10)) return std::nullopt;
  const ProjectivePoint<double> base = project(ComplexPair<double>{1.0, 0.0});
  return worst(distance(to_sphere(act_on_proj(g, base)), to_sphere(project(g10))),
               distance(to_sphere(act_on_proj(g, project(v))), to_sphere(project(gv))));
}

// T <-> {e^{i t}} on the top row, g[1, 0] <-> g i g* on the bottom row.
template <class S>
Deviation check_quat_identification(S& s, SampleRecord& r) {
  const Quaternion<double> q = s.unit_quaternion();
  const double t = s.angle();
  r.add("q", q);
  r.add("t", t);
  const SU2Matrix<double> g = su2_from_quat(q);
  if (near_chart_pole(act_on_sphere_point(g))) return std::nullopt;
  const ProjectivePoint<double> g_base = act_on_proj(g, project(ComplexPair<double>{1.0, 0.0}));
  return worst(distance(su2_from_quat(circle_element(t)), torus(t)),
               distance(stereo1_inv(ext_mul_i(chart(g_base))), quat_hopf(q)));
}

template <class S>
Deviation check_template_classic(S& s, SampleRecord& r) {
  const ComplexPair<double> v = s.s3_point();
  r.add("v", v);
  if (near_chart_pole(v)) return std::nullopt;
  return distance(stereo3_inv(chart(project(v))), hopf_classic(v));
}

template <class S>
Deviation check_template_quat(S& s, SampleRecord& r) {
  const Quaternion<double> q = s.unit_quaternion();
  r.add("q", q);
  const ComplexPair<double> tv = transpose_map(to_complex_pair(q));
  if (near_chart_pole(tv)) return std::nullopt;
  return distance(stereo1_inv(ext_mul_i(chart(project(tv)))), quat_hopf(q));
}

template <class S>
Deviation check_template_bloch(S& s, SampleRecord& r) {
  const ComplexPair<double> v = s.nonzero_pair();
  r.add("v", v);
  if (near_chart_pole(v)) return std::nullopt;
  return distance(stereo3_inv(ext_conjugate(chart(project(v)))), bloch(v));
}

// Bloch o T == reverse o QuatHopf on S^3.
template <class S>
Deviation check_compare_bloch_quat(S& s, SampleRecord& r) {
  const ComplexPair<double> v = s.s3_point();
  r.add("s", v);
  return distance(bloch(transpose_map(v)), reverse(quat_hopf(from_complex_pair(v))));
}

// g (.) h == h~ g^T.
template <class S>
Deviation check_odot_lemma(S& s, SampleRecord& r) {
  const SU2Matrix<double> g = s.su2();
  const ComplexPair<double> h = s.nonzero_pair();
  r.add("g", g);
  r.add("h", h);
  return distance(act_on_vector(g, h), matvec_as_quat(g, h));
}

template <class S>
Deviation check_reconcile(S& s, SampleRecord& r) {
  const AxisAngle<double> aa = s.axis_angle();
  const Point3<double> p = s.s2_point();
  const double fiber_q = s.angle();
  const std::complex<double> fiber_b = s.fiber_scalar();
  r.add("axis_angle", aa);
  r.add("p", p);
  r.add("fiber_q", fiber_q);
  r.add("fiber_b", fiber_b);
  const auto [quat_side, bloch_side] = reconcile(aa, p, fiber_q, fiber_b);
  const Point3<double> rotated = rotate(aa, p);
  return worst(distance(quat_side, bloch_side), distance(quat_side, rotated),
               distance(bloch_side, rotated));
}

// Bloch(g_B (.) h_B) = Bloch(h~ g_B^T) = reverse(QuatHopf(g_B h~^T)) = g_Q p g_Q*,
// plus the reading of g_B as the quaternion g_Q(-theta, reverse(n)).
template <class S>
Deviation check_derivation(S& s, SampleRecord& r) {
  const AxisAngle<double> aa = s.axis_angle();
  const ComplexPair<double> hb = s.s3_point();
  r.add("axis_angle", aa);
  r.add("h_b", hb);
  const SU2Matrix<double> g_b = gb(aa);
  const Point3<double> p = bloch(hb);
  const Point3<double> line16_left = bloch(act_on_vector(g_b, hb));
  const Point3<double> line16_right = bloch(matvec_as_quat(g_b, hb));
  const Point3<double> line17 =
      reverse(quat_hopf(quat_from_su2(g_b) * transpose(from_complex_pair(hb))));
  const Point3<double> line18 = conjugate_action(gq(aa), p);
  const AxisAngle<double> reversed{-aa.theta, UnitVector3<double>(reverse(aa.axis.vec()))};
  return worst(distance(line16_left, line16_right), distance(line16_right, line17),
               distance(line17, line18), distance(quat_from_su2(g_b), gq(reversed)));
}

// Top path QuatHopf(g_Q h_Q), bottom path Bloch(g_B (.) h_B), middle R(theta, n, p),
// with h_Q an arbitrary point of S^3 and p its image.
template <class S>
Deviation check_final_diagram(S& s, SampleRecord& r) {
  const AxisAngle<double> aa = s.axis_angle();
  const Quaternion<double> hq = s.unit_quaternion();
  const std::complex<double> fiber_b = s.fiber_scalar();
  r.add("axis_angle", aa);
  r.add("h_q", hq);
  r.add("fiber_b", fiber_b);
  const Point3<double> p = quat_hopf(hq);
  const ComplexPair<double> hb = fiber_b * lift_bloch(p);
  const Point3<double> top = quat_hopf(gq(aa) * hq);
  const Point3<double> bottom = bloch(act_on_vector(gb(aa), hb));
  const Point3<double> middle = rotate(aa, p);
  return worst(distance(top, middle), distance(bottom, middle), distance(top, bottom));
}

template <class S>
Deviation check_iso_su2_quat(S& s, SampleRecord& r) {
  const Quaternion<double> a = s.unit_quaternion();
  const Quaternion<double> b = s.unit_quaternion();
  r.add("a", a);
  r.add("b", b);
  return distance(su2_from_quat(a * b), su2_multiply(su2_from_quat(a), su2_from_quat(b)));
}

template <class S>
Deviation check_fiber_invariance(S& s, SampleRecord& r) {
  const Quaternion<double> q = s.unit_quaternion();
  const double t = s.angle();
  const ComplexPair<double> v = s.nonzero_pair();
  const std::complex<double> lambda = s.fiber_scalar();
  r.add("q", q);
  r.add("t", t);
  r.add("v", v);
  r.add("lambda", lambda);
  const ProjectivePoint<double> base = project(ComplexPair<double>{1.0, 0.0});
  return worst(distance(quat_hopf(q * circle_element(t)), quat_hopf(q)),
               distance(bloch(lambda * v), bloch(v)),
               distance(to_sphere(act_on_proj(torus(t), base)), to_sphere(base)));
}

template <class S>
Deviation dispatch(std::size_t id, S& s, SampleRecord& r) {
  switch (id) {
    case 0: return check_rephrase(s, r);
    case 1: return check_quat_identification(s, r);
    case 2: return check_template_classic(s, r);
    case 3: return check_template_quat(s, r);
    case 4: return check_template_bloch(s, r);
    case 5: return check_compare_bloch_quat(s, r);
    case 6: return check_odot_lemma(s, r);
    case 7: return check_reconcile(s, r);
    case 8: return check_derivation(s, r);
    case 9: return check_final_diagram(s, r);
    case 10: return check_iso_su2_quat(s, r);
    case 11: return check_fiber_invariance(s, r);
  }
  throw error(errc::unknown_check, "check index out of range");
}

}  // namespace detail

/// Runs one catalog check. `Sampler` must be constructible from a 64-bit
/// seed and provide the draws of sampling::StandardSampler.
template <class Sampler = sampling::StandardSampler>
CheckReport run_check(const DiagramCheck& check) {
  const auto it = std::find(check_catalog.begin(), check_catalog.end(), check.name);
  if (it == check_catalog.end()) throw error(errc::unknown_check, "no check named '" + check.name + "'");
  if (check.samples == 0) throw error(errc::invalid_argument, "samples must be at least 1");
  if (!(check.tolerance > 0)) throw error(errc::invalid_argument, "tolerance must be positive");
  const auto id = static_cast<std::size_t>(it - check_catalog.begin());

  CheckReport report{check.name, check.samples, check.seed, check.tolerance, 0.0, 0, 0, "{}"};
  detail::SampleRecord record;
  const std::uint64_t max_draws = 64 * static_cast<std::uint64_t>(check.samples) + 64;
  std::uint64_t draw = 0;
  for (std::size_t done = 0; done < check.samples; ++draw) {
    if (draw == max_draws) {
      throw error(errc::invalid_argument, "check '" + check.name + "' keeps landing on a pole");
    }
    const std::uint64_t seed = sampling::sample_seed(check.seed, draw);
    Sampler sampler(seed);
    record.clear();
    double deviation;
    try {
      const detail::Deviation d = detail::dispatch(id, sampler, record);
      if (!d) {
        ++report.resampled;
        continue;
      }
      deviation = *d;
    } catch (const error&) {
      // A path rejected its own intermediate value; that is a failed sample.
      deviation = std::numeric_limits<double>::infinity();
    }
    ++done;
    if (!(deviation <= check.tolerance)) ++report.failures;
    const bool first_nan = std::isnan(deviation) && !std::isnan(report.max_deviation);
    if (done == 1 || first_nan || deviation > report.max_deviation) {
      report.max_deviation = deviation;
      report.worst_input = record.to_json(seed);
    }
  }
  return report;
}

/// The whole catalog, in catalog order. Check `name` runs with seed
/// seed + stable_hash(name). Checks are evaluated concurrently.
template <class Sampler = sampling::StandardSampler>
std::vector<CheckReport> run_all(std::size_t samples, std::uint64_t seed, double tolerance) {
  std::vector<std::future<CheckReport>> pending;
  pending.reserve(check_catalog.size());
  for (std::string_view name : check_catalog) {
    DiagramCheck check{std::string(name), samples, seed + sampling::stable_hash(name), tolerance};
    pending.push_back(std::async(std::launch::async, [check] { return run_check<Sampler>(check); }));
  }
  std::vector<CheckReport> reports;
  reports.reserve(pending.size());
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

}  // namespace hopf
