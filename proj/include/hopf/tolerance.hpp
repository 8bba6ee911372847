#pragma once

#include <concepts>

namespace hopf {

// Unit/pure/nonzero refinement tolerance. Single precision cannot hold 1e-9,
// so float gets a looser band.
template <std::floating_point T>
inline constexpr T eps_norm = sizeof(T) >= sizeof(double) ? T(1e-9) : T(1e-4);

// Projective equality tolerance, applied to the scaled cross term.
template <std::floating_point T>
inline constexpr T eps_proj = eps_norm<T>;

// Below this distance from a stereographic pole the image is Infinity.
template <std::floating_point T>
inline constexpr T pole_cutoff = sizeof(T) >= sizeof(double) ? T(1e-300) : T(1e-37);

}  // namespace hopf
