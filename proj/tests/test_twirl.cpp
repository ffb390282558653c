#include <gtest/gtest.h>

#include "test_support.hpp"
#include "twirlwave/twirl.hpp"

using namespace twirlwave;

TEST(TwirlParameters, natural_units_values) {
  const auto t = twirl_parameters(1.0);
  EXPECT_EQ(t.m_p, 2.0);
  EXPECT_EQ(t.p_p, 2.0);
  EXPECT_EQ(t.r_p, 0.5);
  EXPECT_EQ(t.kappa, 2.0);
  EXPECT_EQ(t.omega_p, 2.0);
  EXPECT_EQ(t.sigma_p, 1.0);
  EXPECT_EQ(t.sigma_s, 0.5);
  EXPECT_EQ(t.p_s, 1.0);
  EXPECT_EQ(t.r_C, 1.0);
  EXPECT_EQ(t.eps_rel, 1.0);
}

TEST(TwirlParameters, semi_photon_and_photon_share_radius_and_frequency) {
  check::Sampler rng(51);
  for (const auto& k : {PhysicalConstants::natural(), PhysicalConstants::gaussian()})
    for (int n = 0; n < 1000; ++n) {
      const double m = k.m_e * rng.uniform(0.01, 100.0);
      const auto t = twirl_parameters(m, k);
      ASSERT_EQ(t.r_s, t.r_p);
      ASSERT_EQ(t.omega_s, t.omega_p);
      ASSERT_LE(check::rel_diff(t.omega_p, zitterbewegung_frequency(m, k)), 4.5e-16);
      ASSERT_LE(check::rel_diff(t.r_p, k.hbar / (2 * m * k.c)), 4.5e-16);
      ASSERT_LE(check::rel_diff(2.0 * t.sigma_s, k.hbar), 4e-16);
    }
}

TEST(TwirlParameters, rejects_non_positive_mass) {
  EXPECT_THROW((void)twirl_parameters(0.0), invalid_input);
  EXPECT_THROW((void)twirl_parameters(-1.0), invalid_input);
  EXPECT_THROW((void)twirl_parameters(std::numeric_limits<double>::infinity()), invalid_input);
}

TEST(DisplacementCurrent, normal_and_tangential_parts) {
  const auto d = displacement_current(2.0, 3.0, 0.5, {1, 0, 0}, {0, 1, 0});
  const double f = 1.0 / (4.0 * std::numbers::pi);
  EXPECT_DOUBLE_EQ(d.j_n.x, -3.0 * f);
  EXPECT_DOUBLE_EQ(d.j_tau.y, 2.0 / 0.5 * 2.0 * f / 2.0);
  EXPECT_EQ(d.j_n.y, 0.0);
  EXPECT_EQ(d.j_tau.x, 0.0);
}

TEST(DisplacementCurrent, tangential_part_grows_with_curvature) {
  const auto a = displacement_current(1.0, 0.0, 2.0, {0, 0, 1}, {1, 0, 0});
  const auto b = displacement_current(1.0, 0.0, 1.0, {0, 0, 1}, {1, 0, 0});
  EXPECT_DOUBLE_EQ(b.j_tau.x, 2.0 * a.j_tau.x);
}

TEST(DisplacementCurrent, rejects_bad_frames) {
  EXPECT_THROW((void)displacement_current(1, 0, 0.0, {1, 0, 0}, {0, 1, 0}), invalid_input);
  EXPECT_THROW((void)displacement_current(1, 0, 1.0, {2, 0, 0}, {0, 1, 0}), invalid_input);
  EXPECT_THROW((void)displacement_current(1, 0, 1.0, {1, 0, 0}, {0.6, 0.8, 0}), invalid_input);
}

TEST(GammaIdentification, four_vector_and_matrix) {
  const auto g = gamma_identification(1.5, {0, 0.5, 0});
  EXPECT_EQ(g.gamma.eps_p, 1.5);
  EXPECT_EQ(g.gamma.cp_p.y, 0.5);
  EXPECT_TRUE(is_hermitian(g.matrix));
  EXPECT_EQ(g.matrix(0, 0), Complex(1.5));
  EXPECT_EQ(g.matrix(0, 3), Complex(0, -0.5));
}

TEST(GammaIdentification, is_not_the_mass_matrix) {
  EXPECT_GT(identification_discrepancy(1.0, {}, 1), 1.0);
  EXPECT_GT(identification_discrepancy(1.0, {}, -1), 1.0);
  EXPECT_EQ(identification_discrepancy(0.0, {}, 1), 0.0);
}

TEST(Dipole, potential_value) {
  const DipoleConfig cfg{1.0, 1.0, 0.0, 1.0};
  EXPECT_DOUBLE_EQ(dipole_potential(cfg), 0.5 / (4.0 * std::numbers::pi));
}

TEST(Dipole, broadside_potential_vanishes) {
  EXPECT_NEAR(dipole_potential({1.0, 1.0, std::numbers::pi / 2, 2.0}), 0.0, 1e-17);
}

TEST(Dipole, separated_charges_approach_single_charge) {
  const double r = 3.0;
  const DipoleConfig cfg{2.0, 2e10 * r, 0.0, r};
  EXPECT_LE(check::rel_diff(dipole_potential(cfg), dipole_potential_limit(2.0, r)), 1e-10);
  // at finite separation the deviation is 1/(1 + d/r)
  const DipoleConfig near{2.0, r, 0.0, r};
  EXPECT_NEAR(1.0 - dipole_potential(near) / dipole_potential_limit(2.0, r), 0.5, 1e-15);
}

TEST(Dipole, rejects_degenerate_geometry) {
  EXPECT_THROW((void)dipole_potential({1, 1, 0, 0.0}), invalid_input);
  EXPECT_THROW((void)dipole_potential({1, 2, std::numbers::pi, 1.0}), invalid_input);
  EXPECT_THROW((void)dipole_potential_limit(1, -1), invalid_input);
}

TEST(DisplacementCurrent, worked_values) {
  const double f = 1.0 / (4.0 * std::numbers::pi);
  const auto a = displacement_current(1.0, 0.0, 1.0, {1, 0, 0}, {0, 1, 0});
  EXPECT_EQ(a.j_n.norm(), 0.0);
  EXPECT_DOUBLE_EQ(a.j_tau.norm(), f);
  const auto b = displacement_current(0.0, 1.0, 1.0, {1, 0, 0}, {0, 1, 0});
  EXPECT_DOUBLE_EQ(b.j_n.norm(), f);
  const auto c = displacement_current(1.0, 0.0, 1e300, {1, 0, 0}, {0, 1, 0});
  EXPECT_LT(c.j_tau.norm(), 1e-300);
}

TEST(GammaIdentification, limits) {
  const auto z = gamma_identification(0.0);
  EXPECT_EQ(z.gamma.eps_p, 0.0);
  EXPECT_EQ(z.matrix, Mat4{});
  EXPECT_EQ(gamma_identification(1.0).matrix, Mat4::identity());
}

TEST(Dipole, worked_value) {
  EXPECT_NEAR(dipole_potential({1.0, 1.0, 0.0, 1.0}), 0.03979, 1e-5);
  EXPECT_DOUBLE_EQ(dipole_potential({1.0, 1.0, 0.0, 1.0}), 1.0 / (8.0 * std::numbers::pi));
}
