#pragma once

// SU(2) in the special form
//
//   [  z        w     ]
//   [ -conj(w)  conj(z) ],   |z|^2 + |w|^2 = 1,
//
// identified with the unit quaternion z + w j. SU(2) acts on C^2 by
// matrix-vector multiplication and through it on P^1; the torus of diagonal
// matrices is the isotropy subgroup of [1, 0].

#include <cmath>
#include <complex>
#include <concepts>

#include "hopf/error.hpp"
#include "hopf/quat_algebra.hpp"
#include "hopf/riemann_sphere.hpp"

namespace hopf {

template <std::floating_point T>
class SU2Matrix {
 public:
  /// Checked: |z|^2 + |w|^2 must be 1 within eps_norm.
  SU2Matrix(std::complex<T> z, std::complex<T> w) : z_(z), w_(w) {
    if (!is_unit(ComplexPair<T>{z, w})) throw error(errc::not_unit, "matrix is not in SU(2)");
  }

  static SU2Matrix identity() { return SU2Matrix(T(1), T(0)); }

  // Products of SU(2) elements are not renormalized; drift is left visible.
  static SU2Matrix unchecked(std::complex<T> z, std::complex<T> w) {
    return SU2Matrix(z, w, unchecked_tag{});
  }

  std::complex<T> z() const noexcept { return z_; }
  std::complex<T> w() const noexcept { return w_; }

  // Row-major entries of the full 2x2 matrix.
  std::complex<T> a11() const noexcept { return z_; }
  std::complex<T> a12() const noexcept { return w_; }
  std::complex<T> a21() const noexcept { return -std::conj(w_); }
  std::complex<T> a22() const noexcept { return std::conj(z_); }

  friend bool operator==(const SU2Matrix&, const SU2Matrix&) = default;

 private:
  struct unchecked_tag {};
  SU2Matrix(std::complex<T> z, std::complex<T> w, unchecked_tag) : z_(z), w_(w) {}

  std::complex<T> z_;
  std::complex<T> w_;
};

/// Entrywise distance over the stored (z, w).
template <std::floating_point T>
T distance(const SU2Matrix<T>& a, const SU2Matrix<T>& b) {
  return distance(ComplexPair<T>{a.z(), a.w()}, ComplexPair<T>{b.z(), b.w()});
}

template <std::floating_point T>
SU2Matrix<T> su2_from_quat(const Quaternion<T>& q) {
  require_unit(q);
  const ComplexPair<T> v = to_complex_pair(q);
  return SU2Matrix<T>::unchecked(v.z, v.w);
}

template <std::floating_point T>
Quaternion<T> quat_from_su2(const SU2Matrix<T>& m) {
  return from_complex_pair(ComplexPair<T>{m.z(), m.w()});
}

// [z1 w1; -w1* z1*] [z2 w2; -w2* z2*] keeps the special form with
// z = z1 z2 - w1 conj(w2) and w = z1 w2 + w1 conj(z2).
template <std::floating_point T>
SU2Matrix<T> su2_multiply(const SU2Matrix<T>& a, const SU2Matrix<T>& b) {
  return SU2Matrix<T>::unchecked(a.z() * b.z() - a.w() * std::conj(b.w()),
                                 a.z() * b.w() + a.w() * std::conj(b.z()));
}

/// g (.) v: the matrix g applied to the column vector v.
template <std::floating_point T>
ComplexPair<T> act_on_vector(const SU2Matrix<T>& g, const ComplexPair<T>& v) {
  return {g.a11() * v.z + g.a12() * v.w, g.a21() * v.z + g.a22() * v.w};
}

/// g (1, 0) = (z, -conj(w)): the identification SU(2) -> S^3 by action.
template <std::floating_point T>
ComplexPair<T> act_on_sphere_point(const SU2Matrix<T>& g) {
  return act_on_vector(g, ComplexPair<T>{T(1), T(0)});
}

template <std::floating_point T>
ProjectivePoint<T> act_on_proj(const SU2Matrix<T>& g, const ProjectivePoint<T>& p) {
  return project(act_on_vector(g, p.rep()));
}

/// diag(e^{i theta}, e^{-i theta}).
template <std::floating_point T>
SU2Matrix<T> torus(T theta) {
  return SU2Matrix<T>::unchecked(std::polar(T(1), theta), T(0));
}

}  // namespace hopf
