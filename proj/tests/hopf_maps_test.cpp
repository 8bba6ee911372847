#include "hopf/hopf_maps.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "hopf/fibers.hpp"
#include "support/test_support.hpp"

namespace {

using C = std::complex<double>;
using P = hopf::ComplexPair<double>;
using Pt = hopf::Point3<double>;
using Q = hopf::Quaternion<double>;
using hopf::HopfVariant;
using testing_support::Gen;
using testing_support::Near;

const double r2 = 1 / std::sqrt(2.0);

TEST(ConjugateAction, Examples) {
  const Pt p{0.3, -2, 5};
  EXPECT_EQ(hopf::conjugate_action(Q::one(), p), p);
  // k i k* = k i (-k) = -i
  EXPECT_TRUE(Near(hopf::conjugate_action(Q::k(), Pt{1, 0, 0}), Pt{-1, 0, 0}, 1e-15));
  // (1 + j) i (1 - j) / 2 = -k
  EXPECT_TRUE(Near(hopf::conjugate_action(Q{r2, 0, r2, 0}, Pt{1, 0, 0}), Pt{0, 0, -1}, 1e-15));
  EXPECT_THROW((void)hopf::conjugate_action(Q{2, 0, 0, 0}, p), hopf::error);
}

TEST(ConjugateAction, PreservesLength) {
  Gen gen(41);
  for (int n = 0; n < 1000; ++n) {
    const Pt p = gen.point();
    const Pt image = hopf::conjugate_action(gen.unit_quaternion(), p);
    EXPECT_NEAR(hopf::norm(image), hopf::norm(p), 1e-12 * std::max(1.0, hopf::norm(p)));
  }
}

TEST(QuatHopf, Examples) {
  EXPECT_EQ(hopf::quat_hopf(Q::one()), (Pt{1, 0, 0}));
  for (double t : {0.1, 1.0, 2.5, -4.0}) {
    EXPECT_TRUE(Near(hopf::quat_hopf(Q{std::cos(t), std::sin(t), 0, 0}), Pt{1, 0, 0}, 1e-15));
  }
  EXPECT_TRUE(Near(hopf::quat_hopf(Q{r2, 0, r2, 0}), Pt{0, 0, -1}, 1e-15));
  EXPECT_THROW((void)hopf::quat_hopf(Q{1, 1, 0, 0}), hopf::error);
}

TEST(Bloch, Examples) {
  EXPECT_EQ(hopf::bloch(P{C(1), C(0)}), (Pt{0, 0, 1}));
  EXPECT_TRUE(Near(hopf::bloch(P{C(r2), C(r2)}), Pt{1, 0, 0}, 1e-15));
  EXPECT_TRUE(Near(hopf::bloch(P{C(r2), C(0, r2)}), Pt{0, 1, 0}, 1e-15));
  try {
    (void)hopf::bloch(P{});
    FAIL() << "expected ZeroVector";
  } catch (const hopf::error& e) {
    EXPECT_EQ(e.code(), hopf::errc::zero_vector);
  }
}

TEST(Bloch, MatchesPhysicsBlochVector) {
  Gen gen(42);
  for (int n = 0; n < 1000; ++n) {
    const P v = gen.pair();
    EXPECT_TRUE(Near(hopf::bloch(v), testing_support::from_array(oracle::bloch_vector(v.z, v.w)), 1e-12));
  }
}

TEST(Bloch, SphericalCoordinates) {
  // a = cos(theta/2), b = e^{i phi} sin(theta/2) lands on
  // (cos phi sin theta, sin phi sin theta, cos theta).
  Gen gen(43);
  for (int n = 0; n < 1000; ++n) {
    const double theta = gen.uniform(0, std::numbers::pi), phi = gen.angle();
    const P v{C(std::cos(theta / 2)), std::polar(std::sin(theta / 2), phi)};
    const Pt expected{std::cos(phi) * std::sin(theta), std::sin(phi) * std::sin(theta), std::cos(theta)};
    EXPECT_TRUE(Near(hopf::bloch(v), expected, 1e-12));
  }
}

TEST(HopfClassic, Examples) {
  EXPECT_EQ(hopf::hopf_classic(P{C(1), C(0)}), (Pt{0, 0, 1}));
  EXPECT_EQ(hopf::hopf_classic(P{C(0), C(1)}), (Pt{0, 0, -1}));
  EXPECT_TRUE(Near(hopf::hopf_classic(P{C(r2), C(r2)}), Pt{1, 0, 0}, 1e-15));
  EXPECT_THROW((void)hopf::hopf_classic(P{C(2), C(0)}), hopf::error);
}

TEST(Reverse, Examples) {
  EXPECT_EQ(hopf::reverse(Pt{1, 0, 0}), (Pt{0, 0, 1}));
  EXPECT_EQ(hopf::reverse(Pt{0, 1, 0}), (Pt{0, 1, 0}));
  const Pt p{0.1, -0.2, 0.3};
  EXPECT_EQ(hopf::reverse(p), (Pt{0.3, -0.2, 0.1}));
  EXPECT_EQ(hopf::reverse(hopf::reverse(p)), p);
  EXPECT_EQ(hopf::norm(hopf::reverse(p)), hopf::norm(p));
}

TEST(HopfMaps, ImagesOnSphereAndFiberConstancy) {
  Gen gen(44);
  for (int n = 0; n < 1000; ++n) {
    const Q g = gen.unit_quaternion();
    const P s = hopf::to_complex_pair(g);
    const P v = gen.pair();
    EXPECT_NEAR(hopf::norm(hopf::quat_hopf(g)), 1.0, 1e-9);
    EXPECT_NEAR(hopf::norm(hopf::bloch(v)), 1.0, 1e-9);
    EXPECT_NEAR(hopf::norm(hopf::hopf_classic(s)), 1.0, 1e-9);
    const double t = gen.angle();
    EXPECT_TRUE(Near(hopf::quat_hopf(g * Q{std::cos(t), std::sin(t), 0, 0}), hopf::quat_hopf(g), 1e-9));
    EXPECT_TRUE(Near(hopf::bloch(gen.nonzero_scalar() * v), hopf::bloch(v), 1e-9));
    EXPECT_TRUE(Near(hopf::hopf_classic(std::polar(1.0, t) * s), hopf::hopf_classic(s), 1e-9));
  }
}

TEST(HopfMaps, CompareBlochQuat) {
  Gen gen(45);
  for (int n = 0; n < 1000; ++n) {
    const P s = gen.unit_pair();
    EXPECT_TRUE(Near(hopf::bloch(hopf::transpose_map(s)),
                     hopf::reverse(hopf::quat_hopf(hopf::from_complex_pair(s))), 1e-9));
  }
}

TEST(HopfMaps, TemplateDecompositions) {
  Gen gen(46);
  for (int n = 0; n < 1000; ++n) {
    const P v = gen.pair();
    EXPECT_TRUE(Near(hopf::stereo3_inv(hopf::ext_conjugate(hopf::chart(hopf::project(v)))), hopf::bloch(v),
                     1e-9));
    const Q q = gen.unit_quaternion();
    const auto tq = hopf::transpose_map(hopf::to_complex_pair(q));
    EXPECT_TRUE(Near(hopf::stereo1_inv(hopf::ext_mul_i(hopf::chart(hopf::project(tq)))), hopf::quat_hopf(q),
                     1e-9));
    const P s = hopf::to_complex_pair(q);
    EXPECT_TRUE(Near(hopf::stereo3_inv(hopf::chart(hopf::project(s))), hopf::hopf_classic(s), 1e-9));
  }
}

TEST(Variant, NamesRoundTrip) {
  for (HopfVariant v : {HopfVariant::Classic, HopfVariant::Quat, HopfVariant::Bloch}) {
    EXPECT_EQ(hopf::parse_variant(hopf::to_string(v)), v);
  }
  EXPECT_FALSE(hopf::parse_variant("hopf").has_value());
}

TEST(FiberSample, Examples) {
  const auto quat = hopf::fiber_sample(HopfVariant::Quat, Pt{1, 0, 0}, 4);
  ASSERT_EQ(quat.size(), 4u);
  for (const P& v : quat) {
    EXPECT_NEAR(hopf::norm(v), 1.0, 1e-15);
    EXPECT_TRUE(Near(hopf::quat_hopf(hopf::from_complex_pair(v)), Pt{1, 0, 0}, 1e-15));
  }
  const auto bl = hopf::fiber_sample(HopfVariant::Bloch, Pt{0, 0, 1}, 2);
  ASSERT_EQ(bl.size(), 2u);
  EXPECT_EQ(bl[0], (P{C(1), C(0)}));
  EXPECT_TRUE(Near(bl[1], P{C(-1), C(0)}, 1e-15));
}

TEST(FiberSample, CountOneIsCanonicalLift) {
  Gen gen(47);
  for (HopfVariant variant : {HopfVariant::Classic, HopfVariant::Quat, HopfVariant::Bloch}) {
    const Pt base = gen.sphere_point();
    const auto one = hopf::fiber_sample(variant, base, 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], hopf::canonical_lift(variant, base));
  }
}

TEST(FiberSample, Errors) {
  EXPECT_THROW((void)hopf::fiber_sample(HopfVariant::Bloch, Pt{0, 0, 1}, 0), hopf::error);
  try {
    (void)hopf::fiber_sample(HopfVariant::Quat, Pt{0, 0, 2}, 3);
    FAIL() << "expected NotUnit";
  } catch (const hopf::error& e) {
    EXPECT_EQ(e.code(), hopf::errc::not_unit);
  }
}

TEST(FiberSample, EveryPointMapsBackToBase) {
  Gen gen(48);
  for (int n = 0; n < 300; ++n) {
    const Pt base = gen.sphere_point();
    for (HopfVariant variant : {HopfVariant::Classic, HopfVariant::Quat, HopfVariant::Bloch}) {
      const auto fiber = hopf::fiber_sample(variant, base, 7);
      for (const P& v : fiber) {
        EXPECT_NEAR(hopf::norm(v), 1.0, 1e-12);
        EXPECT_TRUE(Near(hopf::hopf_image(variant, v), base, 1e-9));
      }
      // distinct points of one circle
      EXPECT_GT(hopf::distance(fiber[0], fiber[1]), 0.5);
    }
  }
}

TEST(FiberSample, PolesAndAxisPoints) {
  for (const Pt& base : {Pt{0, 0, 1}, Pt{0, 0, -1}, Pt{1, 0, 0}, Pt{-1, 0, 0}, Pt{0, 1, 0}, Pt{0, -1, 0}}) {
    for (HopfVariant variant : {HopfVariant::Classic, HopfVariant::Quat, HopfVariant::Bloch}) {
      for (const P& v : hopf::fiber_sample(variant, base, 5)) {
        EXPECT_TRUE(Near(hopf::hopf_image(variant, v), base, 1e-9)) << hopf::to_string(variant);
      }
    }
  }
}

}  // namespace
