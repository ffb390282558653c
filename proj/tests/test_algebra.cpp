#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "twirlwave/algebra.hpp"

using namespace twirlwave;

namespace {

// Reference matrices typed in entry by entry, independent of block().
Mat4 alpha_x_ref() {
  Mat4 m;
  m(0, 3) = m(1, 2) = m(2, 1) = m(3, 0) = 1.0;
  return m;
}

Mat4 alpha_y_ref() {
  Mat4 m;
  m(0, 3) = -I_unit;
  m(1, 2) = I_unit;
  m(2, 1) = -I_unit;
  m(3, 0) = I_unit;
  return m;
}

Mat4 alpha_z_ref() {
  Mat4 m;
  m(0, 2) = 1.0;
  m(1, 3) = -1.0;
  m(2, 0) = 1.0;
  m(3, 1) = -1.0;
  return m;
}

}  // namespace

TEST(DiracBasis, block_structure_matches_hand_entries) {
  const auto& d = dirac_basis();
  EXPECT_EQ(d.alpha_x, alpha_x_ref());
  EXPECT_EQ(d.alpha_y, alpha_y_ref());
  EXPECT_EQ(d.alpha_z, alpha_z_ref());
  EXPECT_EQ(d.alpha0, Mat4::identity());
  EXPECT_EQ(d.beta, Mat4::diagonal({1.0, 1.0, -1.0, -1.0}));
  EXPECT_EQ(&d.alpha4(), &d.beta);
}

TEST(DiracBasis, alpha_x_rows) {
  const auto& ax = dirac_basis().alpha_x;
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_EQ(ax(0, j), Complex(j == 3 ? 1.0 : 0.0));
    EXPECT_EQ(ax(1, j), Complex(j == 2 ? 1.0 : 0.0));
  }
}

TEST(DiracBasis, generators_are_hermitian_involutions) {
  for (const Mat4* g : dirac_basis().generators()) {
    EXPECT_TRUE(is_hermitian(*g));
    EXPECT_EQ(*g * *g, Mat4::identity());
  }
}

TEST(DiracBasis, distinct_generators_anticommute_exactly) {
  const auto gens = dirac_basis().generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b) {
      const Mat4 ac = anticommutator(*gens[a], *gens[b]);
      if (a == b)
        EXPECT_EQ(ac, 2.0 * Mat4::identity());
      else
        EXPECT_EQ(ac, Mat4{}) << "pair " << a << "," << b;
    }
}

TEST(DiracBasis, anticommutator_examples) {
  const auto& d = dirac_basis();
  EXPECT_EQ(anticommutator(d.alpha_x, d.alpha_y), Mat4{});
  EXPECT_EQ(anticommutator(d.alpha_x, d.alpha_x), 2.0 * Mat4::identity());
  EXPECT_EQ(anticommutator(d.alpha_x, d.beta), Mat4{});
}

TEST(DiracBasis, alpha5_bilinear_is_minus_twice_e_dot_h) {
  // expand psi^+ alpha5 psi term by term for psi = (Ex, Ez, iHx, iHz)
  check::Sampler rng(7);
  for (int n = 0; n < 200; ++n) {
    const double ex = rng.uniform(), ez = rng.uniform(), hx = rng.uniform(), hz = rng.uniform();
    const Bispinor psi{ex, ez, I_unit * hx, I_unit * hz};
    const Complex v = bilinear(psi, dirac_basis().alpha5);
    EXPECT_NEAR(v.real(), -2.0 * (ex * hx + ez * hz), 1e-14);
    EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  }
}

TEST(MatrixAlgebra, adjoint_laws) {
  check::Sampler rng(11);
  auto random_mat = [&] {
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = rng.disk();
    return m;
  };
  for (int n = 0; n < 50; ++n) {
    const Mat4 a = random_mat(), b = random_mat();
    EXPECT_EQ(a.adjoint().adjoint(), a);
    EXPECT_LT(((a * b).adjoint() - b.adjoint() * a.adjoint()).max_abs(), 1e-15);
  }
}

TEST(MatrixAlgebra, alpha_dot_p_squares_to_p_squared) {
  check::Sampler rng(3);
  const auto& d = dirac_basis();
  for (int n = 0; n < 100; ++n) {
    const Vec3 p{rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const Mat4 ap = d.dot(p);
    const double p2 = p.dot(p);
    EXPECT_LE((ap * ap - p2 * Mat4::identity()).max_abs() / p2, 1e-12);
  }
}

TEST(RotationOperator, identity_at_zero_angle) {
  EXPECT_LT((rotation_operator({0, 0, 1}, 0.0) - Mat4::identity()).max_abs(), 1e-15);
}

TEST(RotationOperator, half_turn_about_z) {
  // cos(pi/2) I - i sin(pi/2) Sigma_z = -i Sigma_z
  const Mat4 expected = Mat4::diagonal({-I_unit, I_unit, -I_unit, I_unit});
  EXPECT_LT((rotation_operator({0, 0, 1}, std::numbers::pi) - expected).max_abs(), 1e-15);
}

TEST(RotationOperator, double_cover_property) {
  check::Sampler rng(5);
  for (int n = 0; n < 100; ++n) {
    const Vec3 axis = rng.unit_vector();
    EXPECT_LT((rotation_operator(axis, 2 * std::numbers::pi) + Mat4::identity()).max_abs(), 1e-12);
    EXPECT_LT((rotation_operator(axis, 4 * std::numbers::pi) - Mat4::identity()).max_abs(), 1e-12);
  }
}

TEST(RotationOperator, unitary_for_random_axes_and_angles) {
  check::Sampler rng(9);
  for (int n = 0; n < 200; ++n) {
    const Mat4 u = rotation_operator(rng.unit_vector(), rng.uniform(-20, 20));
    EXPECT_LT((u * u.adjoint() - Mat4::identity()).max_abs(), 1e-12);
  }
}

TEST(RotationOperator, composes_angles_about_a_fixed_axis) {
  const Vec3 axis{0.6, 0.0, 0.8};
  const Mat4 a = rotation_operator(axis, 0.7) * rotation_operator(axis, 1.1);
  EXPECT_LT((a - rotation_operator(axis, 1.8)).max_abs(), 1e-14);
}

TEST(RotationOperator, rejects_non_unit_axis) {
  EXPECT_THROW((void)rotation_operator({0, 0, 2}, 1.0), invalid_input);
  EXPECT_THROW((void)rotation_operator({0, 0, 0}, 1.0), invalid_input);
  EXPECT_NO_THROW((void)rotation_operator({0, 0, 1.0 + 5e-13}, 1.0));
}
