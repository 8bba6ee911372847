#pragma once

// Seeded samplers for the verification harness.
//
// Bits come from std::mt19937_64, whose output sequence is fixed by the C++
// standard. The distributions on top of it are written out here rather than
// taken from <random>, whose distribution algorithms are implementation
// defined, so a (seed, index) pair names the same sample on every platform.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

#include "hopf/point3.hpp"
#include "hopf/quat_algebra.hpp"
#include "hopf/rotations.hpp"
#include "hopf/special_unitary.hpp"

namespace hopf::sampling {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// 64-bit FNV-1a.
constexpr std::uint64_t stable_hash(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Seed of the index-th draw of a check seeded with `seed`.
constexpr std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(seed ^ splitmix64(index));
}

/// Documented sample distributions:
///  - unit quaternions / S^3 points: 4 standard normals, normalized
///  - S^2 points and rotation axes: 3 standard normals, normalized
///  - angles: uniform on [0, 2 pi)
///  - fiber scalars: log-magnitude uniform on [-2, 2], uniform phase
///  - nonzero pairs of C^2: 4 standard normals, unnormalized
///
/// Derive from this class and hide a member to force a distribution in tests.
class StandardSampler {
 public:
  explicit StandardSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Box-Muller; one normal per call, the sine branch is discarded.
  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  double angle() { return 2.0 * std::numbers::pi * uniform01(); }

  Quaternion<double> unit_quaternion() {
    for (;;) {
      const Quaternion<double> q{normal(), normal(), normal(), normal()};
      const double n = norm(q);
      if (n > 1e-6) return q * (1.0 / n);
    }
  }

  ComplexPair<double> s3_point() { return to_complex_pair(unit_quaternion()); }

  Point3<double> s2_point() {
    for (;;) {
      const Point3<double> p{normal(), normal(), normal()};
      const double n = norm(p);
      if (n > 1e-6) return p * (1.0 / n);
    }
  }

  UnitVector3<double> axis() { return UnitVector3<double>(s2_point()); }

  AxisAngle<double> axis_angle() {
    const double theta = angle();
    return {theta, axis()};
  }

  std::complex<double> fiber_scalar() {
    const double log_magnitude = uniform(-2.0, 2.0);
    return std::polar(std::exp(log_magnitude), angle());
  }

  ComplexPair<double> nonzero_pair() {
    for (;;) {
      const ComplexPair<double> v{{normal(), normal()}, {normal(), normal()}};
      if (norm(v) > 1e-6) return v;
    }
  }

  SU2Matrix<double> su2() { return su2_from_quat(unit_quaternion()); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hopf::sampling
