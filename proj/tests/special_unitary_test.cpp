#include "hopf/special_unitary.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "support/test_support.hpp"

namespace {

using C = std::complex<double>;
using G = hopf::SU2Matrix<double>;
using P = hopf::ComplexPair<double>;
using Q = hopf::Quaternion<double>;
using testing_support::Gen;
using testing_support::Near;

constexpr double pi = std::numbers::pi;

::testing::AssertionResult MatrixNear(const G& g, const oracle::Mat2& m, double tol) {
  const oracle::Mat2 full = oracle::su2_matrix(g.z(), g.w());
  double worst = 0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) worst = std::max(worst, std::abs(full[r][c] - m[r][c]));
  if (worst <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "entrywise deviation " << worst;
}

TEST(SU2Matrix, CheckedConstruction) {
  EXPECT_NO_THROW(G(C(0.6), C(0, 0.8)));
  try {
    G bad(C(1), C(1));
    FAIL() << "expected NotUnit";
  } catch (const hopf::error& e) {
    EXPECT_EQ(e.code(), hopf::errc::not_unit);
  }
  const G m(C(0.6, 0), C(0, 0.8));
  EXPECT_EQ(m.a21(), -std::conj(C(0, 0.8)));
  EXPECT_EQ(m.a22(), C(0.6));
}

TEST(SU2FromQuat, Examples) {
  EXPECT_EQ(hopf::su2_from_quat(Q::one()), G::identity());
  EXPECT_EQ(hopf::su2_from_quat(Q::j()), G(C(0), C(1)));
  const double r = 1 / std::sqrt(2.0);
  const G m = hopf::su2_from_quat(Q{r, 0, 0, r});
  EXPECT_EQ(m.z(), C(r));
  EXPECT_EQ(m.w(), C(0, r));
  EXPECT_THROW((void)hopf::su2_from_quat(Q{1, 1, 0, 0}), hopf::error);
}

TEST(QuatFromSU2, Examples) {
  EXPECT_EQ(hopf::quat_from_su2(G::identity()), Q::one());
  EXPECT_EQ(hopf::quat_from_su2(G(C(0, 1), C(0))), Q::i());
  Gen gen(31);
  for (int n = 0; n < 100; ++n) {
    const Q q = gen.unit_quaternion();
    EXPECT_EQ(hopf::quat_from_su2(hopf::su2_from_quat(q)), q);
  }
}

TEST(SU2Multiply, Examples) {
  const G a = hopf::su2_from_quat(Q{0.5, 0.5, -0.5, 0.5});
  EXPECT_EQ(hopf::su2_multiply(a, G::identity()), a);
  EXPECT_EQ(hopf::su2_multiply(hopf::su2_from_quat(Q::i()), hopf::su2_from_quat(Q::j())),
            hopf::su2_from_quat(Q::k()));
  EXPECT_LE(hopf::distance(hopf::su2_multiply(hopf::torus(0.4), hopf::torus(1.1)), hopf::torus(1.5)), 1e-15);
}

TEST(SU2Multiply, MatchesFullMatrixProduct) {
  Gen gen(32);
  for (int n = 0; n < 1000; ++n) {
    const G a = hopf::su2_from_quat(gen.unit_quaternion());
    const G b = hopf::su2_from_quat(gen.unit_quaternion());
    const auto expected =
        oracle::mat_mul(oracle::su2_matrix(a.z(), a.w()), oracle::su2_matrix(b.z(), b.w()));
    EXPECT_TRUE(MatrixNear(hopf::su2_multiply(a, b), expected, 1e-12));
  }
}

TEST(SU2Multiply, QuaternionIsomorphism) {
  Gen gen(33);
  for (int n = 0; n < 1000; ++n) {
    const Q a = gen.unit_quaternion(), b = gen.unit_quaternion();
    EXPECT_LE(hopf::distance(hopf::su2_from_quat(a * b),
                             hopf::su2_multiply(hopf::su2_from_quat(a), hopf::su2_from_quat(b))),
              1e-12);
  }
}

TEST(ActOnVector, Examples) {
  const P v{C(0.3, -1), C(2, 0.5)};
  EXPECT_EQ(hopf::act_on_vector(G::identity(), v), v);
  const G g(C(0.6, 0), C(0, 0.8));
  EXPECT_EQ(hopf::act_on_vector(g, P{C(1), C(0)}), (P{g.z(), -std::conj(g.w())}));
  EXPECT_TRUE(Near(hopf::act_on_vector(hopf::torus(0.7), P{C(1), C(0)}), P{std::polar(1.0, 0.7), C(0)}, 1e-15));
}

TEST(ActOnVector, MatchesMatrixVectorAndPreservesNorm) {
  Gen gen(34);
  for (int n = 0; n < 1000; ++n) {
    const G g = hopf::su2_from_quat(gen.unit_quaternion());
    const P v = gen.pair();
    const auto expected = oracle::mat_vec(oracle::su2_matrix(g.z(), g.w()), {v.z, v.w});
    const P got = hopf::act_on_vector(g, v);
    EXPECT_TRUE(Near(got, P{expected[0], expected[1]}, 1e-12));
    EXPECT_NEAR(hopf::norm(got), hopf::norm(v), 1e-12 * hopf::norm(v));
  }
}

TEST(ActOnSpherePoint, Examples) {
  EXPECT_EQ(hopf::act_on_sphere_point(G::identity()), (P{C(1), C(0)}));
  EXPECT_EQ(hopf::act_on_sphere_point(hopf::su2_from_quat(Q::j())), (P{C(0), C(-1)}));
  EXPECT_EQ(hopf::act_on_sphere_point(hopf::su2_from_quat(Q::i())), (P{C(0, 1), C(0)}));
}

TEST(ActOnSpherePoint, DiffersFromQuaternionIdentificationByTranspose) {
  Gen gen(35);
  for (int n = 0; n < 1000; ++n) {
    const Q q = gen.unit_quaternion();
    EXPECT_TRUE(Near(hopf::act_on_sphere_point(hopf::su2_from_quat(q)),
                     hopf::transpose_map(hopf::to_complex_pair(q)), 1e-12));
  }
}

TEST(ActOnProj, Examples) {
  const auto base = hopf::project(P{C(1), C(0)});
  const auto other = hopf::project(P{C(0.5, 0.5), C(2)});
  EXPECT_TRUE(hopf::proj_eq(hopf::act_on_proj(G::identity(), other), other));
  EXPECT_TRUE(hopf::proj_eq(hopf::act_on_proj(hopf::torus(1.3), base), base));
  EXPECT_TRUE(hopf::proj_eq(hopf::act_on_proj(hopf::su2_from_quat(Q::j()), base),
                            hopf::project(P{C(0), C(1)})));
}

TEST(ActOnProj, WellDefinedAndOrbitStabilizer) {
  Gen gen(36);
  const auto base = hopf::project(P{C(1), C(0)});
  for (int n = 0; n < 1000; ++n) {
    const G g = hopf::su2_from_quat(gen.unit_quaternion());
    const P v = gen.pair();
    EXPECT_TRUE(hopf::proj_eq(hopf::act_on_proj(g, hopf::project(v)),
                              hopf::project(hopf::act_on_vector(g, v))));
    const G gt = hopf::su2_multiply(g, hopf::torus(gen.angle()));
    EXPECT_TRUE(hopf::proj_eq(hopf::act_on_proj(gt, base), hopf::act_on_proj(g, base)));
  }
}

TEST(Torus, Examples) {
  EXPECT_EQ(hopf::torus(0.0), G::identity());
  EXPECT_TRUE(Near(hopf::torus(pi).z(), C(-1), 1e-15));
  EXPECT_EQ(hopf::torus(pi).w(), C(0));
  EXPECT_TRUE(Near(hopf::torus(pi / 2).z(), C(0, 1), 1e-15));
}

}  // namespace
