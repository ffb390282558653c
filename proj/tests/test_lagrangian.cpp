#include <gtest/gtest.h>

#include "test_support.hpp"
#include "twirlwave/lagrangian.hpp"
#include "twirlwave/solutions.hpp"

using namespace twirlwave;

TEST(FieldIdentity, random_real_fields) {
  check::Sampler rng(61);
  for (int n = 0; n < 10000; ++n) {
    const auto c = check_em_identity(rng.vec3(), rng.vec3());
    ASSERT_LE(c.rel_err, 1e-12);
  }
}

TEST(FieldIdentity, null_and_zero_fields) {
  const auto c = check_em_identity({1, 0, 0}, {0, 0, 1});
  EXPECT_EQ(c.lhs, 0.0);
  EXPECT_EQ(c.rhs, 0.0);
  EXPECT_EQ(check_em_identity({}, {}).rel_err, 0.0);
}

TEST(FierzIdentity, random_bispinors) {
  check::Sampler rng(63);
  for (int n = 0; n < 10000; ++n) ASSERT_LE(check_fierz(rng.bispinor()).rel_err, 1e-12);
}

TEST(FierzIdentity, uniform_upper_state) {
  const auto c = check_fierz({2.0, 0.0, 0.0, 0.0});
  EXPECT_EQ(c.lhs, 16.0);
  EXPECT_EQ(c.rhs, 16.0);
}

TEST(FierzIdentity, is_the_field_identity_under_the_mapping) {
  check::Sampler rng(65);
  for (int n = 0; n < 1000; ++n) {
    const FieldState f = rng.real_field();
    const Vec3 E{f.E[0].real(), 0, f.E[2].real()}, H{f.H[0].real(), 0, f.H[2].real()};
    const auto a = check_em_identity(E, H);
    const auto b = check_fierz(to_bispinor(f));
    ASSERT_LE(check::rel_diff(a.rhs, b.rhs), 1e-12);
  }
}

TEST(NonlinearForms, quartic_parts_agree) {
  check::Sampler rng(67);
  const double m = 1.0, dtau = 0.3;
  for (int n = 0; n < 1000; ++n) {
    const Bispinor psi = to_bispinor(rng.real_field());
    const double q = quartic_part(psi, NonlinearForm::quantum_814, m, dtau);
    const double f = quartic_part(psi, NonlinearForm::fierz_820, m, dtau);
    const double e = quartic_part(psi, NonlinearForm::em_817, m, dtau) * em_normalization(m);
    ASSERT_LE(std::abs(q - f), 1e-13 * (1 + std::abs(q)));
    ASSERT_LE(std::abs(q - e), 1e-13 * (1 + std::abs(q)));
  }
}

TEST(NonlinearForms, em_form_needs_mass) {
  EXPECT_THROW((void)quartic_part({1, 0, 0, 0}, NonlinearForm::em_817, 0.0, 1.0), invalid_input);
  EXPECT_EQ(to_string(NonlinearForm::fierz_820), "fierz");
}

TEST(NonlinearForms, linear_limit) {
  LagrangianSample s{{1.0, 0.5, 0.0, 0.0}, {}, {}, 1.0, 0.0};
  for (const auto f : {NonlinearForm::quantum_814, NonlinearForm::em_817, NonlinearForm::fierz_820})
    EXPECT_EQ(quartic_part(s.psi, f, s.mass, 0.0), 0.0);
  // static real field: only (E^2 - H^2)/8 pi remains
  EXPECT_DOUBLE_EQ(lagrangian_nonlinear(s, NonlinearForm::em_817).real(), 1.25 / (8 * std::numbers::pi));
}

TEST(DiracLagrangian, real_part_off_shell) {
  // constant uniform state with zero derivatives: psi+ beta psi m c^2
  LagrangianSample s{{1.0, 0.0, 0.0, 0.0}, {}, {}, 1.0, 0.0};
  EXPECT_EQ(lagrangian_dirac(s), Complex(1.0));
}

TEST(DiracLagrangian, em_form_vanishes_for_a_standing_field) {
  // static field, zero derivatives, E^2 = H^2
  const FieldSample f{FieldState::transverse(1.0, 0.0, 0.0, 1.0), {}, {}};
  EXPECT_EQ(lagrangian_dirac_em(f, 2.0), Complex{});
}

TEST(DiracLagrangian, em_form_energy_balance_for_travelling_wave) {
  // E_x = cos(y - t), H_z = -cos(y - t) satisfies the source-free system
  const double ph = 0.37;
  const FieldSample f{FieldState::transverse(std::cos(ph), 0, 0, -std::cos(ph)),
                      FieldState::transverse(std::sin(ph), 0, 0, -std::sin(ph)),
                      FieldState::transverse(-std::sin(ph), 0, 0, std::sin(ph))};
  EXPECT_LE(std::abs(lagrangian_dirac_em(f, 0.0)), 1e-16);
}

TEST(InnerFieldLagrangian, matches_the_inner_field_residual) {
  check::Sampler rng(69);
  for (int n = 0; n < 100; ++n) {
    LagrangianSample s{rng.bispinor(), rng.bispinor(), rng.bispinor(), 0.0, 0.0};
    const double eps_in = rng.uniform();
    const Vec3 p_in{0, rng.uniform(), 0};
    const Complex a = lagrangian_inner_field(s, eps_in, p_in);
    EXPECT_TRUE(std::isfinite(a.real()) && std::isfinite(a.imag()));
  }
}

TEST(FieldIdentity, hand_evaluated) {
  const auto a = check_em_identity({1, 0, 0}, {0, 1, 0});
  EXPECT_EQ(a.lhs, 0.0);
  EXPECT_EQ(a.rhs, 0.0);
  const auto b = check_em_identity({1, 0, 0}, {2, 0, 0});
  EXPECT_EQ(b.lhs, 25.0);
  EXPECT_EQ(b.rhs, 25.0);
}

TEST(FierzIdentity, hand_evaluated) {
  const auto a = check_fierz({1.0, 0.0, 0.0, 0.0});
  EXPECT_EQ(a.lhs, 1.0);
  EXPECT_EQ(a.rhs, 1.0);
  const auto b = check_fierz({1.0, 0.0, 1.0, 0.0});
  EXPECT_EQ(b.lhs, 0.0);
  EXPECT_EQ(b.rhs, 0.0);
}

TEST(FierzIdentity, left_sides_coincide_for_real_fields) {
  check::Sampler rng(66);
  for (int n = 0; n < 1000; ++n) {
    const FieldState f = rng.real_field();
    const Vec3 E{f.E[0].real(), 0, f.E[2].real()}, H{f.H[0].real(), 0, f.H[2].real()};
    ASSERT_LE(std::abs(check_fierz(to_bispinor(f)).lhs - check_em_identity(E, H).lhs), 1e-13);
  }
}

TEST(DiracLagrangian, zero_field) {
  EXPECT_EQ(lagrangian_dirac({}), Complex{});
  EXPECT_EQ(lagrangian_dirac_em({}, 1.0), Complex{});
}

TEST(DiracLagrangian, detuned_plane_wave) {
  // frequency shifted by delta: the form picks up hbar delta |psi|^2
  const PlaneWaveSpec spec{Branch::positive, 1, {0.0, 0.6, 0.0}, 0.2, 1.0};
  const PointSample pt = plane_wave_sample(spec, 0.3, {0.0, 0.4, 0.0});
  for (const double delta : {1e-3, 0.1, -0.25}) {
    LagrangianSample s{pt.psi, Complex(0.0, -(energy(spec) + delta)) * pt.psi, pt.d_y, spec.m, 0.0};
    const Complex l = lagrangian_dirac(s);
    EXPECT_NEAR(l.real(), delta * pt.psi.norm2(), 1e-14);
    EXPECT_NEAR(l.imag(), 0.0, 1e-14);
  }
}

TEST(DiracLagrangian, static_fields_keep_only_the_invariant) {
  const FieldSample f{FieldState::transverse(2.0, 0.0, 0.0, 1.0), {}, {}};
  const Complex l = lagrangian_dirac_em(f, 3.0);
  EXPECT_EQ(l.real(), 0.0);
  EXPECT_DOUBLE_EQ(l.imag(), -3.0 / (8 * std::numbers::pi) * 3.0);
}

TEST(NonlinearForms, zero_state) {
  const LagrangianSample s{};
  for (const auto f : {NonlinearForm::quantum_814, NonlinearForm::em_817, NonlinearForm::fierz_820})
    EXPECT_EQ(lagrangian_nonlinear(s, f), Complex{});
}

TEST(NonlinearForms, parallel_null_field) {
  // E = H = x: (E^2 - H^2)^2 = 0 and 4 (E.H)^2 = 4 |E|^4
  const Bispinor psi = to_bispinor(FieldState::transverse(1.0, 0.0, 1.0, 0.0));
  const double m = 1.0, dtau = 2.0;
  const double expected = dtau / (64 * std::numbers::pi * std::numbers::pi * m) * 4.0;
  EXPECT_DOUBLE_EQ(quartic_part(psi, NonlinearForm::em_817, m, dtau), expected);
}
