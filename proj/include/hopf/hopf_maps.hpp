#pragma once

// Three Hopf maps S^3 -> S^2.
//
//   HopfClassic(v) = stereo3^{-1}(chart(pi(v)))
//   QuatHopf(g)    = g i g*
//   Bloch(a, b)    = stereo3^{-1}(conj(a / b))
//
// Each is evaluated here by its closed form rather than by walking the
// pipeline, so the pipelines in verify_harness.hpp are independent checks.
// For (z, w) with n = |z|^2 + |w|^2:
//
//   HopfClassic(z, w) = (2 Re(z conj w), 2 Im(z conj w), |z|^2 - |w|^2) / n
//   Bloch(a, b)       = (2 Re(conj(a) b), 2 Im(conj(a) b), |a|^2 - |b|^2) / n

#include <cmath>
#include <complex>
#include <concepts>
#include <optional>
#include <string_view>

#include "hopf/error.hpp"
#include "hopf/point3.hpp"
#include "hopf/quat_algebra.hpp"

namespace hopf {

enum class HopfVariant { Classic, Quat, Bloch };

constexpr std::string_view to_string(HopfVariant v) noexcept {
  switch (v) {
    case HopfVariant::Classic: return "classic";
    case HopfVariant::Quat: return "quat";
    case HopfVariant::Bloch: return "bloch";
  }
  return "";
}

constexpr std::optional<HopfVariant> parse_variant(std::string_view name) noexcept {
  if (name == "classic") return HopfVariant::Classic;
  if (name == "quat") return HopfVariant::Quat;
  if (name == "bloch") return HopfVariant::Bloch;
  return std::nullopt;
}

/// (g, p) -> g p g* for unit g; a rotation of R^3.
template <std::floating_point T>
Point3<T> conjugate_action(const Quaternion<T>& g, const Point3<T>& p) {
  require_unit(g);
  return pure_part(g * embed_pure(p) * conjugate(g));
}

template <std::floating_point T>
Point3<T> quat_hopf(const Quaternion<T>& g) {
  return conjugate_action(g, Point3<T>{T(1), T(0), T(0)});
}

template <std::floating_point T>
Point3<T> bloch(const ComplexPair<T>& v) {
  require_nonzero(v);
  const T n = squared_norm(v);
  const std::complex<T> c = std::conj(v.z) * v.w;
  return {T(2) * c.real() / n, T(2) * c.imag() / n, (std::norm(v.z) - std::norm(v.w)) / n};
}

template <std::floating_point T>
Point3<T> hopf_classic(const ComplexPair<T>& v) {
  require_unit(v);
  const T n = squared_norm(v);
  const std::complex<T> c = v.z * std::conj(v.w);
  return {T(2) * c.real() / n, T(2) * c.imag() / n, (std::norm(v.z) - std::norm(v.w)) / n};
}

/// (x, y, z) -> (z, y, x).
template <std::floating_point T>
constexpr Point3<T> reverse(const Point3<T>& p) {
  return {p.z, p.y, p.x};
}

/// Image of a point of S^3 under the chosen map. Quaternion inputs are read
/// through (z, w) <-> z + w j.
template <std::floating_point T>
Point3<T> hopf_image(HopfVariant variant, const ComplexPair<T>& v) {
  switch (variant) {
    case HopfVariant::Classic: return hopf_classic(v);
    case HopfVariant::Quat: return quat_hopf(from_complex_pair(v));
    case HopfVariant::Bloch: return bloch(v);
  }
  throw error(errc::invalid_argument, "unknown Hopf variant");
}

}  // namespace hopf
