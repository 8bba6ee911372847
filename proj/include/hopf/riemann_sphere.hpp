#pragma once

// The complex projective line P^1, the extended plane C+ = C u {inf}, the
// chart [z0, z1] -> z0 / z1 and the two stereographic projections
//
//   stereo1(x, y, z) = (y + i z) / (1 - x)     pole (1, 0, 0), the i-axis
//   stereo3(x, y, z) = (x + i y) / (1 - z)     pole (0, 0, 1), the k-axis
//
// together with their inverses. Both projections share one implementation
// that works in (pole, a, b) coordinates; stereo1 and stereo3 only permute
// axes around it.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <optional>

#include "hopf/error.hpp"
#include "hopf/point3.hpp"
#include "hopf/quat_algebra.hpp"
#include "hopf/tolerance.hpp"

namespace hopf {

/// A point of C+: either a finite complex number or Infinity.
template <std::floating_point T>
class ExtendedComplex {
 public:
  /// Finite value; NaN or infinite parts are rejected.
  ExtendedComplex(std::complex<T> value) : value_(value) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw error(errc::non_finite, "finite extended complex value must have finite parts");
    }
  }
  ExtendedComplex(T re, T im = T(0)) : ExtendedComplex(std::complex<T>(re, im)) {}

  static ExtendedComplex infinity() { return ExtendedComplex(); }

  /// Finite value when representable, Infinity on overflow.
  static ExtendedComplex saturating(std::complex<T> value) {
    if (std::isfinite(value.real()) && std::isfinite(value.imag())) return ExtendedComplex(value);
    return infinity();
  }

  bool is_infinity() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  /// The finite value. Precondition: is_finite().
  std::complex<T> value() const { return *value_; }

  friend bool operator==(const ExtendedComplex&, const ExtendedComplex&) = default;

 private:
  ExtendedComplex() = default;

  std::optional<std::complex<T>> value_;
};

/// Equivalence class [z, w] of a nonzero vector of C^2 under complex scaling.
///
/// Stored as a canonical representative: unit norm, with the last coordinate
/// that exceeds eps_norm (w, else z) real and positive. Two runs that build
/// the same class from the same input therefore serialize identically.
template <std::floating_point T>
class ProjectivePoint {
 public:
  const ComplexPair<T>& rep() const noexcept { return rep_; }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

  template <std::floating_point U>
  friend ProjectivePoint<U> project(const ComplexPair<U>& v);

 private:
  explicit ProjectivePoint(const ComplexPair<T>& rep) : rep_(rep) {}

  ComplexPair<T> rep_;
};

/// The canonical projection C^2 \ {0} -> P^1.
template <std::floating_point U>
ProjectivePoint<U> project(const ComplexPair<U>& v) {
  require_nonzero(v);
  // Scale by the larger magnitude first so |z|^2 + |w|^2 cannot overflow.
  const U big = std::max(std::abs(v.z), std::abs(v.w));
  const std::complex<U> z = v.z / big;
  const std::complex<U> w = v.w / big;
  const U n = std::sqrt(std::norm(z) + std::norm(w));
  ComplexPair<U> unit{z / n, w / n};
  const std::complex<U> anchor = std::abs(unit.w) > eps_norm<U> ? unit.w : unit.z;
  const std::complex<U> phase = std::conj(anchor) / std::abs(anchor);
  unit = phase * unit;
  // Exactly real after the rotation; drop the rounding residue.
  if (std::abs(unit.w) > eps_norm<U>) {
    unit.w = {unit.w.real(), U(0)};
  } else {
    unit.z = {unit.z.real(), U(0)};
  }
  return ProjectivePoint<U>(unit);
}

/// [z, w] == [z', w'] iff the cross term z w' - w z' vanishes.
template <std::floating_point T>
bool proj_eq(const ProjectivePoint<T>& p, const ProjectivePoint<T>& q) {
  const auto& a = p.rep();
  const auto& b = q.rep();
  const T cross_term = std::abs(a.z * b.w - a.w * b.z);
  return cross_term <= eps_proj<T> * std::max(T(1), norm(a) * norm(b));
}

/// [z0, z1] -> z0 / z1, and [z0, 0] -> Infinity.
template <std::floating_point T>
ExtendedComplex<T> chart(const ProjectivePoint<T>& p) {
  const auto& v = p.rep();
  if (v.w == std::complex<T>(0)) return ExtendedComplex<T>::infinity();
  return ExtendedComplex<T>::saturating(v.z / v.w);
}

namespace detail {

// Projection from the pole (1, 0, 0) of a sphere written as (h, a, b).
//
// On the hemisphere facing the pole, (a + i b) / (1 - h) loses every digit to
// cancellation, so the equivalent (1 + h) / (a - i b) is used there instead.
// The two agree on the unit sphere because a^2 + b^2 = (1 - h)(1 + h).
template <std::floating_point T>
ExtendedComplex<T> stereo_from_pole(T h, T a, T b) {
  if (h > T(0)) {
    const std::complex<T> denom(a, -b);
    if (std::abs(denom) < pole_cutoff<T>) return ExtendedComplex<T>::infinity();
    return ExtendedComplex<T>::saturating((T(1) + h) / denom);
  }
  return ExtendedComplex<T>(std::complex<T>(a, b) / (T(1) - h));
}

// Inverse of stereo_from_pole, returned as (h, a, b). For u = a + i b with
// d = |u|^2 + 1 the image is ((|u|^2 - 1) / d, 2a / d, 2b / d).
template <std::floating_point T>
Point3<T> stereo_inverse_to_pole(const ExtendedComplex<T>& u) {
  if (u.is_infinity()) return {T(1), T(0), T(0)};
  const std::complex<T> c = u.value();
  const T r = std::abs(c);
  if (r <= T(1)) {
    const T r2 = std::norm(c);
    const T d = r2 + T(1);
    return {(r2 - T(1)) / d, T(2) * c.real() / d, T(2) * c.imag() / d};
  }
  // |u| > 1: rewrite in terms of 1/|u| and the direction u/|u| so the
  // squares cannot overflow.
  const T s = T(1) / r;
  const T s2 = s * s;
  const T d = T(1) + s2;
  return {(T(1) - s2) / d, T(2) * (c.real() / r) * s / d, T(2) * (c.imag() / r) * s / d};
}

}  // namespace detail

template <std::floating_point T>
ExtendedComplex<T> stereo1(const Point3<T>& p) {
  return detail::stereo_from_pole(p.x, p.y, p.z);
}

template <std::floating_point T>
ExtendedComplex<T> stereo3(const Point3<T>& p) {
  return detail::stereo_from_pole(p.z, p.x, p.y);
}

template <std::floating_point T>
Point3<T> stereo1_inv(const ExtendedComplex<T>& u) {
  return detail::stereo_inverse_to_pole(u);
}

template <std::floating_point T>
Point3<T> stereo3_inv(const ExtendedComplex<T>& u) {
  const Point3<T> q = detail::stereo_inverse_to_pole(u);
  return {q.y, q.z, q.x};
}

template <std::floating_point T>
ExtendedComplex<T> ext_conjugate(const ExtendedComplex<T>& u) {
  if (u.is_infinity()) return u;
  return ExtendedComplex<T>(std::conj(u.value()));
}

template <std::floating_point T>
ExtendedComplex<T> ext_mul_i(const ExtendedComplex<T>& u) {
  if (u.is_infinity()) return u;
  const std::complex<T> c = u.value();
  return ExtendedComplex<T>(std::complex<T>(-c.imag(), c.real()));
}

}  // namespace hopf
