#pragma once

// Rotations R(theta, n, p) of R^3 through the two unitary conventions.
//
// Quaternion (mathematics) convention:
//   g_Q(theta, n) = cos(theta/2) + sin(theta/2) (n1 i + n2 j + n3 k)
//   R(theta, n, p) = g_Q p g_Q*  =  QuatHopf(g_Q h_Q)   for any QuatHopf lift h_Q of p
//
// Bloch (physics) convention:
//   g_B(theta, n) = [ cos(theta/2) - i n3 sin(theta/2)   sin(theta/2)(-n2 - i n1) ]
//                   [ sin(theta/2)(n2 - i n1)            cos(theta/2) + i n3 sin(theta/2) ]
//   R(theta, n, p) = Bloch(g_B (.) h_B)                 for any Bloch lift h_B of p
//
// The two are related by g_B(theta, n) = g_Q(-theta, reverse(n)) as unit
// quaternions, which together with g_B (.) h = h~ g_B^T explains why both
// formulas produce the same point.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <utility>

#include "hopf/error.hpp"
#include "hopf/hopf_maps.hpp"
#include "hopf/point3.hpp"
#include "hopf/quat_algebra.hpp"
#include "hopf/special_unitary.hpp"

namespace hopf {

template <std::floating_point T>
struct AxisAngle {
  T theta{};  // radians
  UnitVector3<T> axis;
};

template <std::floating_point T>
Quaternion<T> gq(const AxisAngle<T>& aa) {
  const T c = std::cos(aa.theta / T(2));
  const T s = std::sin(aa.theta / T(2));
  return {c, s * aa.axis.n1(), s * aa.axis.n2(), s * aa.axis.n3()};
}

template <std::floating_point T>
SU2Matrix<T> gb(const AxisAngle<T>& aa) {
  const T c = std::cos(aa.theta / T(2));
  const T s = std::sin(aa.theta / T(2));
  const auto& n = aa.axis;
  return SU2Matrix<T>(std::complex<T>(c, -n.n3() * s), std::complex<T>(-n.n2() * s, -n.n1() * s));
}

/// R(theta, n, p) = g_Q p g_Q*.
template <std::floating_point T>
Point3<T> rotate(const AxisAngle<T>& aa, const Point3<T>& p) {
  return conjugate_action(gq(aa), p);
}

/// QuatHopf(g_Q h_Q); equals rotate(aa, quat_hopf(hq)).
template <std::floating_point T>
Point3<T> rotate_via_quat_hopf(const AxisAngle<T>& aa, const Quaternion<T>& hq) {
  require_unit(hq);
  return quat_hopf(gq(aa) * hq);
}

/// Bloch(g_B (.) h_B); equals rotate(aa, bloch(hb)).
template <std::floating_point T>
Point3<T> rotate_via_bloch(const AxisAngle<T>& aa, const ComplexPair<T>& hb) {
  require_nonzero(hb);
  return bloch(act_on_vector(gb(aa), hb));
}

namespace detail {

// Polar angle from the +z axis and azimuth of a sphere point. The azimuth is
// 0 on the z axis, where it is undetermined.
template <std::floating_point T>
std::pair<T, T> spherical_angles(const Point3<T>& p) {
  const T rho = std::hypot(p.x, p.y);
  const T polar = std::atan2(rho, p.z);
  const T azimuth = rho == T(0) ? T(0) : std::atan2(p.y, p.x);
  return {polar, azimuth};
}

}  // namespace detail

/// (cos(theta/2), e^{i phi} sin(theta/2)) for p at spherical angles
/// (theta, phi). The south pole lifts to (0, 1).
template <std::floating_point T>
ComplexPair<T> lift_bloch(const Point3<T>& p) {
  require_sphere_point(p);
  const auto [polar, azimuth] = detail::spherical_angles(p);
  return {std::complex<T>(std::cos(polar / T(2))), std::polar(std::sin(polar / T(2)), azimuth)};
}

/// A QuatHopf preimage of p: the rotation about i x p carrying i onto p.
/// p = (1, 0, 0) lifts to 1 and p = (-1, 0, 0) lifts to j.
template <std::floating_point T>
Quaternion<T> lift_quat_hopf(const Point3<T>& p) {
  require_sphere_point(p);
  // i x p = (0, -z, y), |i x p| = hypot(y, z).
  const T sine = std::hypot(p.y, p.z);
  if (sine == T(0)) return p.x > T(0) ? Quaternion<T>::one() : Quaternion<T>::j();
  // atan2 keeps full precision near the poles where acos(i . p) does not.
  const T angle = std::atan2(sine, std::clamp(p.x, T(-1), T(1)));
  return gq(AxisAngle<T>{angle, UnitVector3<T>::normalized({T(0), -p.z, p.y})});
}

/// The right-hand side of g (.) h = h~ g^T, computed with quaternion
/// multiplication.
template <std::floating_point T>
ComplexPair<T> matvec_as_quat(const SU2Matrix<T>& g, const ComplexPair<T>& h) {
  return to_complex_pair(from_complex_pair(h) * transpose(quat_from_su2(g)));
}

template <std::floating_point T>
struct ConventionPair {
  Quaternion<T> quat;  // g_Q(theta, n)
  SU2Matrix<T> bloch;  // g_B(theta, n) = g_Q(-theta, reverse(n))
};

template <std::floating_point T>
ConventionPair<T> convert_convention(const AxisAngle<T>& aa) {
  return {gq(aa), gb(aa)};
}

/// Axis-angle of the rotation a unit quaternion performs, with theta in
/// [0, 2 pi]. The identity yields theta = 0 about (0, 0, 1).
template <std::floating_point T>
AxisAngle<T> axis_angle_from_gq(const Quaternion<T>& q) {
  require_unit(q);
  const Point3<T> v{q.x1, q.x2, q.x3};
  const T s = norm(v);
  if (s == T(0)) {
    return {q.x0 > T(0) ? T(0) : T(2) * std::numbers::pi_v<T>, UnitVector3<T>(T(0), T(0), T(1))};
  }
  return {T(2) * std::atan2(s, q.x0), UnitVector3<T>::normalized(v)};
}

/// Axis-angle whose g_B is the given matrix.
template <std::floating_point T>
AxisAngle<T> axis_angle_from_gb(const SU2Matrix<T>& m) {
  // g_B(theta, n) = g_Q(-theta, reverse(n)) = g_Q(theta, -reverse(n)).
  const AxisAngle<T> q = axis_angle_from_gq(quat_from_su2(m));
  return {q.theta, UnitVector3<T>::normalized(-reverse(q.axis.vec()))};
}

/// Both sides of QuatHopf(g_Q h_Q) = Bloch(g_B (.) h_B) for p, with the lifts
/// moved along their fibers by e^{i fiber_q} (right multiplication) and by
/// the complex scalar fiber_b.
template <std::floating_point T>
std::pair<Point3<T>, Point3<T>> reconcile(const AxisAngle<T>& aa, const Point3<T>& p, T fiber_q,
                                          std::complex<T> fiber_b) {
  require_sphere_point(p);
  if (std::abs(fiber_b) <= eps_norm<T>) throw error(errc::zero_vector, "fiber scalar is zero");
  const Quaternion<T> hq =
      lift_quat_hopf(p) * Quaternion<T>{std::cos(fiber_q), std::sin(fiber_q), T(0), T(0)};
  const ComplexPair<T> hb = fiber_b * lift_bloch(p);
  return {rotate_via_quat_hopf(aa, hq), rotate_via_bloch(aa, hb)};
}

}  // namespace hopf
