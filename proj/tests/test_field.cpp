#include <gtest/gtest.h>

#include "test_support.hpp"
#include "twirlwave/field.hpp"

using namespace twirlwave;

TEST(FieldMapping, packs_as_ex_ez_ihx_ihz) {
  const auto f = FieldState::transverse(1.0, 2.0, 3.0, 4.0);
  const Bispinor psi = to_bispinor(f);
  EXPECT_EQ(psi[0], Complex(1.0));
  EXPECT_EQ(psi[1], Complex(2.0));
  EXPECT_EQ(psi[2], Complex(0.0, 3.0));
  EXPECT_EQ(psi[3], Complex(0.0, 4.0));
}

TEST(FieldMapping, round_trip_is_exact) {
  check::Sampler rng(21);
  for (int n = 0; n < 1000; ++n) {
    const FieldState f = rng.complex_field();
    EXPECT_EQ(from_bispinor(to_bispinor(f)), f);
  }
}

TEST(FieldMapping, rejects_longitudinal_components) {
  FieldState f = FieldState::transverse(1.0, 0.0, 0.0, 1.0);
  f.E[1] = 0.5;
  EXPECT_THROW((void)to_bispinor(f), invalid_input);
  f.E[1] = 0.0;
  f.H[1] = Complex(0.0, 1e-300);
  EXPECT_THROW((void)to_bispinor(f), invalid_input);
}

TEST(EnergyMomentum, ex_hz_example) {
  const auto f = FieldState::transverse(1.0, 0.0, 0.0, 1.0);
  const auto em = energy_momentum(f);
  EXPECT_DOUBLE_EQ(em.U, 1.0 / (4.0 * std::numbers::pi));
  EXPECT_DOUBLE_EQ(em.S.y, -1.0 / (4.0 * std::numbers::pi));
  EXPECT_EQ(em.S.x, 0.0);
  EXPECT_EQ(em.S.z, 0.0);
  EXPECT_DOUBLE_EQ(em.g.y, em.S.y);
}

TEST(EnergyMomentum, zero_field_has_zero_densities) {
  const auto em = energy_momentum(FieldState{});
  EXPECT_EQ(em.U, 0.0);
  EXPECT_EQ(em.S.norm(), 0.0);
  const auto q = quantum_forms(Bispinor{});
  EXPECT_EQ(q.U, 0.0);
  EXPECT_EQ(q.S.norm(), 0.0);
}

TEST(EnergyMomentum, gaussian_momentum_density_is_flux_over_c_squared) {
  const auto k = PhysicalConstants::gaussian();
  const auto f = FieldState::transverse(2.0, 0.0, 0.0, 3.0);
  const auto em = energy_momentum(f, k);
  EXPECT_LT(check::rel_diff(em.g.y * k.c * k.c, em.S.y), 1e-15);
}

TEST(QuantumForms, equal_classical_forms_for_real_fields) {
  check::Sampler rng(23);
  for (int n = 0; n < 10000; ++n) {
    const FieldState f = rng.real_field();
    const auto cl = energy_momentum(f);
    const auto q = quantum_forms(to_bispinor(f));
    const double scale = cl.U;
    ASSERT_LE(std::abs(q.U - cl.U) / scale, 1e-13);
    ASSERT_LE((q.S - cl.S).norm() / scale, 1e-13);
  }
}

TEST(QuantumForms, energy_matches_for_complex_fields) {
  check::Sampler rng(25);
  for (int n = 0; n < 1000; ++n) {
    const FieldState f = rng.complex_field();
    EXPECT_LE(check::rel_diff(quantum_forms(to_bispinor(f)).U, energy_density(f)), 1e-14);
  }
}

TEST(QuantumForms, flux_differs_for_complex_fields) {
  // E = (1, 0, 0), H = (0, 0, i): Re(E* x H) = 0 but the bilinear does not vanish
  const auto f = FieldState::transverse(1.0, 0.0, 0.0, I_unit);
  EXPECT_EQ(poynting(f).norm(), 0.0);
  EXPECT_GT(quantum_forms(to_bispinor(f)).S.norm(), 0.01);
}

TEST(QuantumForms, beta_and_alpha5_bilinears_match_field_invariants) {
  check::Sampler rng(27);
  const auto& d = dirac_basis();
  for (int n = 0; n < 10000; ++n) {
    const FieldState f = rng.real_field();
    const Bispinor psi = to_bispinor(f);
    const double e2 = norm2(f.E), h2 = norm2(f.H), eh = cdot(f.E, f.H).real();
    ASSERT_LE(std::abs(bilinear(psi, d.beta).real() - (e2 - h2)), 1e-14);
    ASSERT_LE(std::abs(bilinear(psi, d.alpha5).real() + 2.0 * eh), 1e-14);
  }
}

TEST(FieldMapping, component_reading) {
  const auto a = from_bispinor({1.0, 0.0, 0.0, I_unit});
  EXPECT_EQ(a, FieldState::transverse(1.0, 0.0, 0.0, 1.0));
  const auto b = from_bispinor({0.0, 1.0, I_unit, 0.0});
  EXPECT_EQ(b, FieldState::transverse(0.0, 1.0, 1.0, 0.0));
  EXPECT_EQ(from_bispinor({}), FieldState{});
  EXPECT_EQ(to_bispinor(FieldState{}), Bispinor{});
}

TEST(EnergyMomentum, parallel_fields_carry_no_flux) {
  EXPECT_EQ(poynting(FieldState::transverse(1.0, 0.5, 2.0, 1.0)).norm(), 0.0);
}

TEST(QuantumForms, upper_unit_state) {
  const auto q = quantum_forms({1.0, 0.0, 0.0, 0.0});
  EXPECT_DOUBLE_EQ(q.U, 1.0 / (8.0 * std::numbers::pi));
  EXPECT_EQ(q.S.norm(), 0.0);
}
