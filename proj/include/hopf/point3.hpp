#pragma once

#include <cmath>
#include <concepts>

#include "hopf/error.hpp"
#include "hopf/tolerance.hpp"

namespace hopf {

/// A point of R^3. Points of S^2 are Point3 values with unit norm; see
/// `is_sphere_point`.
template <std::floating_point T>
struct Point3 {
  T x{};
  T y{};
  T z{};

  friend constexpr bool operator==(const Point3&, const Point3&) = default;

  constexpr Point3 operator+(const Point3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Point3 operator-(const Point3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Point3 operator-() const { return {-x, -y, -z}; }
  constexpr Point3 operator*(T s) const { return {x * s, y * s, z * s}; }
  friend constexpr Point3 operator*(T s, const Point3& p) { return p * s; }
};

template <class T>
Point3(T, T, T) -> Point3<T>;

template <std::floating_point T>
constexpr T dot(const Point3<T>& a, const Point3<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <std::floating_point T>
constexpr Point3<T> cross(const Point3<T>& a, const Point3<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <std::floating_point T>
T norm(const Point3<T>& p) {
  return std::sqrt(dot(p, p));
}

template <std::floating_point T>
T distance(const Point3<T>& a, const Point3<T>& b) {
  return norm(a - b);
}

template <std::floating_point T>
bool is_sphere_point(const Point3<T>& p) {
  return std::abs(dot(p, p) - T(1)) <= eps_norm<T>;
}

template <std::floating_point T>
const Point3<T>& require_sphere_point(const Point3<T>& p) {
  if (!is_sphere_point(p)) throw error(errc::not_unit, "point is not on the unit sphere");
  return p;
}

/// Unit-norm vector of R^3, checked on construction.
template <std::floating_point T>
class UnitVector3 {
 public:
  explicit UnitVector3(const Point3<T>& v) : v_(require_sphere_point(v)) {}
  UnitVector3(T n1, T n2, T n3) : UnitVector3(Point3<T>{n1, n2, n3}) {}

  /// Scales `v` to unit length; rejects the zero vector and non-finite input.
  static UnitVector3 normalized(const Point3<T>& v) {
    const T n = norm(v);
    if (!std::isfinite(n)) throw error(errc::non_finite, "cannot normalize a non-finite vector");
    if (!(n > T(0))) throw error(errc::zero_vector, "cannot normalize a zero vector");
    return UnitVector3(v * (T(1) / n), unchecked_tag{});
  }

  const Point3<T>& vec() const noexcept { return v_; }
  T n1() const noexcept { return v_.x; }
  T n2() const noexcept { return v_.y; }
  T n3() const noexcept { return v_.z; }

  operator const Point3<T>&() const noexcept { return v_; }

  friend bool operator==(const UnitVector3&, const UnitVector3&) = default;

 private:
  struct unchecked_tag {};
  UnitVector3(const Point3<T>& v, unchecked_tag) : v_(v) {}

  Point3<T> v_;
};

}  // namespace hopf
