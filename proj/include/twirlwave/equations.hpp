#pragma once

// Pointwise residuals of the field equations. The caller supplies the
// derivatives (analytic in tests, finite differences on a lattice), so the
// residuals carry no discretization of their own.
//
// Operator conventions: energy e = i hbar d/dt, momentum p = -i hbar grad.
// The first-order family is
//     (s_t e + s_p c alpha.p + s_m beta m c^2) psi = 0,
// and its residual is reported divided by i hbar:
//     r = s_t d_t psi - s_p c alpha.grad psi - i s_m beta (m c^2 / hbar) psi.
// (+,+,+) is the free Dirac-like equation with mass; the plane-wave amplitude
// sets in solutions.hpp are annihilated by it.

#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "twirlwave/algebra.hpp"
#include "twirlwave/constants.hpp"
#include "twirlwave/errors.hpp"
#include "twirlwave/field.hpp"

namespace twirlwave {

/// Bispinor value and derivatives at one spacetime point.
struct PointSample {
  Bispinor psi;
  Bispinor d_t;
  Bispinor d_x;
  Bispinor d_y;
  Bispinor d_z;
  std::optional<Bispinor> d_tt;
  std::optional<Bispinor> d_yy;
};

/// Signs on the energy, momentum and mass terms of a first-order operator.
struct SignVariant {
  int s_t = 1;
  int s_p = 1;
  int s_m = 1;

  [[nodiscard]] constexpr bool valid() const {
    return (s_t == 1 || s_t == -1) && (s_p == 1 || s_p == -1) && (s_m == 1 || s_m == -1);
  }
  [[nodiscard]] constexpr SignVariant negated() const { return {-s_t, -s_p, -s_m}; }

  [[nodiscard]] std::string str() const {
    auto c = [](int s) { return s > 0 ? '+' : '-'; };
    return std::string{'(', c(s_t), ',', c(s_p), ',', c(s_m), ')'};
  }

  friend constexpr bool operator==(const SignVariant&, const SignVariant&) = default;
};

/// e + c alpha.p + beta m c^2: the free ket equation with mass.
inline constexpr SignVariant dirac_variant{1, 1, 1};
/// e - c alpha.p - beta m c^2: the conjugate factor.
inline constexpr SignVariant conjugate_variant{1, -1, -1};

[[nodiscard]] constexpr std::array<SignVariant, 8> all_sign_variants() {
  std::array<SignVariant, 8> out{};
  std::size_t k = 0;
  for (int t : {1, -1})
    for (int p : {1, -1})
      for (int m : {1, -1}) out[k++] = {t, p, m};
  return out;
}

inline void require_valid(const SignVariant& v) {
  if (!v.valid()) throw invalid_input("sign variant entries must be +1 or -1");
}

inline void require_non_negative_mass(double m) {
  if (!(m >= 0.0) || !std::isfinite(m)) throw invalid_input("mass must be finite and non-negative");
}

/// alpha . grad psi
[[nodiscard]] inline Bispinor alpha_gradient(const PointSample& s) {
  const auto& d = dirac_basis();
  return d.alpha_x * s.d_x + d.alpha_y * s.d_y + d.alpha_z * s.d_z;
}

/// (s_t e + s_p c alpha.p + s_m beta m c^2) psi, un-normalized operator form.
[[nodiscard]] inline Bispinor dirac_operator(const PointSample& s, double m, SignVariant v,
                                             const PhysicalConstants& k = {}) {
  require_valid(v);
  require_non_negative_mass(m);
  const Complex ih = I_unit * k.hbar;
  return (double(v.s_t) * ih) * s.d_t + (-v.s_p * k.c * ih) * alpha_gradient(s) +
         (v.s_m * m * k.c * k.c) * (dirac_basis().beta * s.psi);
}

/// First-order residual divided by i hbar. m = 0 is the massless semi-photon equation.
[[nodiscard]] inline Bispinor residual_dirac_like(const PointSample& s, double m, SignVariant v,
                                                  const PhysicalConstants& k = {}) {
  require_valid(v);
  require_non_negative_mass(m);
  const double w = k.mass_frequency(m);
  return double(v.s_t) * s.d_t + (-v.s_p * k.c) * alpha_gradient(s) +
         Complex{0.0, -v.s_m * w} * (dirac_basis().beta * s.psi);
}

/// d^2F/dt^2 - c^2 d^2F/dy^2 for each of the four components.
[[nodiscard]] inline Bispinor residual_wave(const PointSample& s, const PhysicalConstants& k = {}) {
  if (!s.d_tt || !s.d_yy) throw invalid_input("wave residual needs second derivatives");
  return *s.d_tt - (k.c * k.c) * *s.d_yy;
}

/// -hbar^2 psi_tt + hbar^2 c^2 psi_yy - m^2 c^4 psi
[[nodiscard]] inline Bispinor residual_klein_gordon(const PointSample& s, double m, const PhysicalConstants& k = {}) {
  if (!s.d_tt || !s.d_yy) throw invalid_input("Klein-Gordon residual needs second derivatives");
  require_non_negative_mass(m);
  const double h2 = k.hbar * k.hbar;
  const double mc2 = m * k.c * k.c;
  return (-h2) * *s.d_tt + (h2 * k.c * k.c) * *s.d_yy - (mc2 * mc2) * s.psi;
}

/// Transverse field value with first derivatives in t and y.
struct FieldSample {
  FieldState value;
  FieldState d_t;
  FieldState d_y;
};

enum class MaxwellSystem {
  retarded,  // (1/c) dE_x/dt - dH_z/dy = 0 ...: source-free Maxwell
  advanced,  // (1/c) dE_x/dt + dH_z/dy = 0 ...: the time-reversed system
};

/// The four scalar rows in the order
///   [E_x/H_z, H_z/E_x, E_z/H_x, H_x/E_z].
using MaxwellRows = std::array<Complex, 4>;

namespace detail {

inline void require_transverse(const FieldSample& f) {
  if (!f.value.is_transverse() || !f.d_t.is_transverse() || !f.d_y.is_transverse())
    throw invalid_input("Maxwell residuals require transverse fields");
}

// Left-hand sides with sign s_t on the time term and s_p on the space term.
inline MaxwellRows maxwell_lhs(const FieldSample& f, int s_t, int s_p, double c) {
  const double inv_c = s_t / c;
  return {inv_c * f.d_t.E[0] - double(s_p) * f.d_y.H[2], inv_c * f.d_t.H[2] - double(s_p) * f.d_y.E[0],
          inv_c * f.d_t.E[2] + double(s_p) * f.d_y.H[0], inv_c * f.d_t.H[0] + double(s_p) * f.d_y.E[2]};
}

}  // namespace detail

[[nodiscard]] inline MaxwellRows residual_maxwell_dirac(const FieldSample& f, MaxwellSystem system,
                                                        const PhysicalConstants& k = {}) {
  detail::require_transverse(f);
  return detail::maxwell_lhs(f, 1, system == MaxwellSystem::retarded ? 1 : -1, k.c);
}

/// Imaginary electric and magnetic currents j = i (c / 4 pi r_C) F with r_C = hbar / m c.
struct ImaginaryCurrents {
  CVec3 j_e{};
  CVec3 j_m{};
};

[[nodiscard]] inline ImaginaryCurrents imaginary_currents(const FieldState& f, double m,
                                                          const PhysicalConstants& k = {}) {
  if (!(m > 0.0) || !std::isfinite(m)) throw invalid_input("imaginary currents need a positive mass");
  const Complex scale{0.0, k.c / (four_pi * k.compton_wavelength(m))};
  ImaginaryCurrents j;
  for (std::size_t i = 0; i < 3; ++i) {
    j.j_e[i] = scale * f.E[i];
    j.j_m[i] = scale * f.H[i];
  }
  return j;
}

/// Maxwell system with imaginary currents, left side minus the current terms.
/// The current terms enter as +-s_m (4 pi / c) j so that, row for row, this is
/// residual_dirac_like of the mapped bispinor (see to_bispinor_residual).
[[nodiscard]] inline MaxwellRows residual_maxwell_currents(const FieldSample& f, double m, SignVariant v,
                                                           const PhysicalConstants& k = {}) {
  require_valid(v);
  require_non_negative_mass(m);
  detail::require_transverse(f);
  MaxwellRows rows = detail::maxwell_lhs(f, v.s_t, v.s_p, k.c);
  if (m == 0.0) return rows;
  const auto j = imaginary_currents(f.value, m, k);
  const double g = v.s_m * four_pi / k.c;
  rows[0] -= g * j.j_e[0];
  rows[1] += g * j.j_m[2];
  rows[2] -= g * j.j_e[2];
  rows[3] += g * j.j_m[0];
  return rows;
}

/// Map Maxwell rows to the bispinor residual under psi = (E_x, E_z, iH_x, iH_z):
/// r = c (row0, row2, i row3, i row1).
[[nodiscard]] inline Bispinor to_bispinor_residual(const MaxwellRows& rows, const PhysicalConstants& k = {}) {
  return k.c * Bispinor{rows[0], rows[2], I_unit * rows[3], I_unit * rows[1]};
}

/// External field entering as constant energy/momentum shifts.
struct ExternalField {
  double eps_ex = 0.0;
  Vec3 p_ex;
};

/// [alpha0 (e -+ eps_ex) + c alpha.(p -+ p_ex) + beta m c^2] psi / (i hbar).
/// coupling = +1 selects the upper sign (e - eps_ex), -1 the lower one.
[[nodiscard]] inline Bispinor residual_dirac_external(const PointSample& s, double m, const ExternalField& ext,
                                                      int coupling = 1, const PhysicalConstants& k = {}) {
  if (coupling != 1 && coupling != -1) throw invalid_input("coupling sign must be +1 or -1");
  const Bispinor shift = ext.eps_ex * s.psi + k.c * (dirac_basis().dot(ext.p_ex) * s.psi);
  return residual_dirac_like(s, m, dirac_variant, k) + Complex{0.0, coupling / k.hbar} * shift;
}

/// Self-consistent form with the inner field in place of the mass term:
/// [alpha0 (e - eps_in) + c alpha.(p - p_in)] psi / (i hbar). eps_in and p_in are
/// numbers here (lattice sums of the energy and momentum densities).
[[nodiscard]] inline Bispinor residual_inner_field(const PointSample& s, double eps_in, const Vec3& p_in,
                                                  const PhysicalConstants& k = {}) {
  return residual_dirac_external(s, 0.0, {eps_in, p_in}, 1, k);
}

/// Pair form: free residual for m_e plus a second beta m_e c^2 term.
[[nodiscard]] inline Bispinor residual_double_mass(const PointSample& s, double m_e, const PhysicalConstants& k = {}) {
  require_non_negative_mass(m_e);
  const Complex extra{0.0, -k.mass_frequency(m_e)};
  return residual_dirac_like(s, m_e, dirac_variant, k) + extra * (dirac_basis().beta * s.psi);
}

enum class Branch { positive, negative };

[[nodiscard]] inline int sign_of(Branch b) { return b == Branch::positive ? 1 : -1; }

/// eps = +-sqrt(c^2 p^2 + m^2 c^4)
[[nodiscard]] inline double dispersion_energy(const Vec3& p, double m, Branch branch, const PhysicalConstants& k = {}) {
  require_non_negative_mass(m);
  const double cp = k.c * p.norm();
  const double mc2 = m * k.c * k.c;
  return sign_of(branch) * std::hypot(cp, mc2);
}

/// eps = c p for a massless wave.
[[nodiscard]] inline double photon_dispersion(double p, const PhysicalConstants& k = {}) {
  if (!(p >= 0.0)) throw invalid_input("momentum magnitude must be non-negative");
  return k.c * p;
}

}  // namespace twirlwave
