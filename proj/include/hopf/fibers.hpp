#pragma once

// Canonical lifts and fiber sampling for the three Hopf maps. The fiber over
// a base point is the orbit of one lift under the isotropy circle:
//
//   Quat:          h (cos t + i sin t)     right quaternion multiplication
//   Classic/Bloch: e^{i t} h               complex scalar multiplication

#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <numbers>
#include <vector>

#include "hopf/error.hpp"
#include "hopf/hopf_maps.hpp"
#include "hopf/rotations.hpp"

namespace hopf {

/// (cos(theta/2), e^{-i phi} sin(theta/2)): the Bloch lift without the
/// conjugation, which is what the j = 3 chart expects.
template <std::floating_point T>
ComplexPair<T> lift_classic(const Point3<T>& p) {
  const ComplexPair<T> b = lift_bloch(p);
  return {b.z, std::conj(b.w)};
}

/// The canonical point of S^3 over `base`, as a complex pair.
template <std::floating_point T>
ComplexPair<T> canonical_lift(HopfVariant variant, const Point3<T>& base) {
  switch (variant) {
    case HopfVariant::Classic: return lift_classic(base);
    case HopfVariant::Quat: return to_complex_pair(lift_quat_hopf(base));
    case HopfVariant::Bloch: return lift_bloch(base);
  }
  throw error(errc::invalid_argument, "unknown Hopf variant");
}

/// `count` points of the fiber over `base`, evenly spaced in the fiber
/// parameter t = 2 pi k / count starting at the canonical lift.
template <std::floating_point T>
std::vector<ComplexPair<T>> fiber_sample(HopfVariant variant, const Point3<T>& base,
                                         std::size_t count) {
  if (count == 0) throw error(errc::invalid_argument, "fiber sample count must be positive");
  const ComplexPair<T> lift = canonical_lift(variant, base);
  std::vector<ComplexPair<T>> out;
  out.reserve(count);
  out.push_back(lift);
  for (std::size_t k = 1; k < count; ++k) {
    const T t = T(2) * std::numbers::pi_v<T> * T(k) / T(count);
    if (variant == HopfVariant::Quat) {
      const Quaternion<T> phase{std::cos(t), std::sin(t), T(0), T(0)};
      out.push_back(to_complex_pair(from_complex_pair(lift) * phase));
    } else {
      out.push_back(std::polar(T(1), t) * lift);
    }
  }
  return out;
}

}  // namespace hopf
