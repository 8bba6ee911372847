#pragma once

// Quaternion arithmetic and the identifications
//
//   x0 + x1 i + x2 j + x3 k  <->  (x0, x1, x2, x3)  <->  (x0 + i x1, x2 + i x3)
//
// among H, R^4 and C^2. Under the last one a quaternion is z + w j with z, w
// complex, which is also how SU(2) matrices are identified with unit
// quaternions (see special_unitary.hpp).

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>

#include "hopf/error.hpp"
#include "hopf/point3.hpp"
#include "hopf/tolerance.hpp"

namespace hopf {

/// Element of H in scalar-first real coordinates.
template <std::floating_point T>
struct Quaternion {
  T x0{};  // scalar part
  T x1{};  // i
  T x2{};  // j
  T x3{};  // k

  static constexpr Quaternion one() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;

  constexpr Quaternion operator+(const Quaternion& o) const {
    return {x0 + o.x0, x1 + o.x1, x2 + o.x2, x3 + o.x3};
  }
  constexpr Quaternion operator-(const Quaternion& o) const {
    return {x0 - o.x0, x1 - o.x1, x2 - o.x2, x3 - o.x3};
  }
  constexpr Quaternion operator-() const { return {-x0, -x1, -x2, -x3}; }
  constexpr Quaternion operator*(T s) const { return {x0 * s, x1 * s, x2 * s, x3 * s}; }
  friend constexpr Quaternion operator*(T s, const Quaternion& q) { return q * s; }

  // Hamilton product: i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
  constexpr Quaternion operator*(const Quaternion& b) const {
    return {x0 * b.x0 - x1 * b.x1 - x2 * b.x2 - x3 * b.x3,
            x0 * b.x1 + x1 * b.x0 + x2 * b.x3 - x3 * b.x2,
            x0 * b.x2 - x1 * b.x3 + x2 * b.x0 + x3 * b.x1,
            x0 * b.x3 + x1 * b.x2 - x2 * b.x1 + x3 * b.x0};
  }
};

template <class T>
Quaternion(T, T, T, T) -> Quaternion<T>;

/// Vector (z, w) of C^2. Unit pairs are points of S^3.
template <std::floating_point T>
struct ComplexPair {
  std::complex<T> z{};
  std::complex<T> w{};

  friend constexpr bool operator==(const ComplexPair&, const ComplexPair&) = default;

  constexpr ComplexPair operator-(const ComplexPair& o) const { return {z - o.z, w - o.w}; }
  friend constexpr ComplexPair operator*(std::complex<T> s, const ComplexPair& v) {
    return {s * v.z, s * v.w};
  }
};

template <class T>
ComplexPair(std::complex<T>, std::complex<T>) -> ComplexPair<T>;

template <std::floating_point T>
constexpr Quaternion<T> multiply(const Quaternion<T>& a, const Quaternion<T>& b) {
  return a * b;
}

template <std::floating_point T>
constexpr Quaternion<T> conjugate(const Quaternion<T>& q) {
  return {q.x0, -q.x1, -q.x2, -q.x3};
}

template <std::floating_point T>
constexpr T squared_norm(const Quaternion<T>& q) {
  return q.x0 * q.x0 + q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3;
}

template <std::floating_point T>
T norm(const Quaternion<T>& q) {
  return std::sqrt(squared_norm(q));
}

template <std::floating_point T>
T squared_norm(const ComplexPair<T>& v) {
  return std::norm(v.z) + std::norm(v.w);
}

template <std::floating_point T>
T norm(const ComplexPair<T>& v) {
  return std::sqrt(squared_norm(v));
}

template <std::floating_point T>
T distance(const ComplexPair<T>& a, const ComplexPair<T>& b) {
  return norm(a - b);
}

template <std::floating_point T>
T distance(const Quaternion<T>& a, const Quaternion<T>& b) {
  return norm(a - b);
}

template <std::floating_point T>
bool is_unit(const Quaternion<T>& q) {
  return std::abs(squared_norm(q) - T(1)) <= eps_norm<T>;
}

template <std::floating_point T>
bool is_pure(const Quaternion<T>& q) {
  return std::abs(q.x0) <= eps_norm<T>;
}

template <std::floating_point T>
bool is_unit(const ComplexPair<T>& v) {
  return std::abs(squared_norm(v) - T(1)) <= eps_norm<T>;
}

// Both coordinates at or below eps_norm count as the zero vector.
template <std::floating_point T>
bool is_nonzero(const ComplexPair<T>& v) {
  return std::abs(v.z) > eps_norm<T> || std::abs(v.w) > eps_norm<T>;
}

template <std::floating_point T>
const Quaternion<T>& require_unit(const Quaternion<T>& q) {
  if (!is_unit(q)) throw error(errc::not_unit, "quaternion is not of unit norm");
  return q;
}

template <std::floating_point T>
const ComplexPair<T>& require_unit(const ComplexPair<T>& v) {
  if (!is_unit(v)) throw error(errc::not_unit, "complex pair is not of unit norm");
  return v;
}

template <std::floating_point T>
const ComplexPair<T>& require_nonzero(const ComplexPair<T>& v) {
  if (!is_nonzero(v)) throw error(errc::zero_vector, "complex pair is zero");
  return v;
}

template <std::floating_point T>
constexpr ComplexPair<T> to_complex_pair(const Quaternion<T>& q) {
  return {{q.x0, q.x1}, {q.x2, q.x3}};
}

/// Reads (z, w) as the quaternion z + w j.
template <std::floating_point T>
constexpr Quaternion<T> from_complex_pair(const ComplexPair<T>& v) {
  return {v.z.real(), v.z.imag(), v.w.real(), v.w.imag()};
}

/// Transpose of the associated SU(2)-form matrix, read back as a quaternion:
/// (a, b, c, d) -> (a, b, -c, d). An involutive antihomomorphism of H.
template <std::floating_point T>
constexpr Quaternion<T> transpose(const Quaternion<T>& q) {
  return {q.x0, q.x1, -q.x2, q.x3};
}

/// The transpose map T on C^2: (z, w) -> (z, -conj(w)).
template <std::floating_point T>
constexpr ComplexPair<T> transpose_map(const ComplexPair<T>& v) {
  return {v.z, -std::conj(v.w)};
}

/// The point (x, y, z) as the pure quaternion x i + y j + z k.
template <std::floating_point T>
constexpr Quaternion<T> embed_pure(const Point3<T>& p) {
  return {T(0), p.x, p.y, p.z};
}

/// Vector part of a pure quaternion. The scalar-part check is relative to
/// the quaternion's magnitude once that exceeds 1.
template <std::floating_point T>
Point3<T> pure_part(const Quaternion<T>& q) {
  const T scale = std::max(T(1), norm(q));
  if (!(std::abs(q.x0) <= eps_norm<T> * scale)) {
    throw error(errc::not_pure, "quaternion has a nonzero scalar part");
  }
  return {q.x1, q.x2, q.x3};
}

}  // namespace hopf
