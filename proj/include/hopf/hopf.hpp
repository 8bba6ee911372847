#pragma once

#include "hopf/error.hpp"
#include "hopf/fibers.hpp"
#include "hopf/hopf_maps.hpp"
#include "hopf/point3.hpp"
#include "hopf/quat_algebra.hpp"
#include "hopf/riemann_sphere.hpp"
#include "hopf/rotations.hpp"
#include "hopf/sampling.hpp"
#include "hopf/special_unitary.hpp"
#include "hopf/tolerance.hpp"
#include "hopf/verify_harness.hpp"
