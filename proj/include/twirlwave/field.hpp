#pragma once

// Classical view of the bispinor: transverse field samples, the
// (E_x, E_z, iH_x, iH_z) packaging, and the field energy/momentum densities
// in both their classical and bilinear forms.

#include <cmath>

#include "twirlwave/algebra.hpp"
#include "twirlwave/constants.hpp"
#include "twirlwave/errors.hpp"

namespace twirlwave {

/// Electromagnetic field sample for a wave travelling along y.
struct FieldState {
  CVec3 E{};
  CVec3 H{};

  [[nodiscard]] static FieldState transverse(Complex ex, Complex ez, Complex hx, Complex hz) {
    return {{ex, 0.0, ez}, {hx, 0.0, hz}};
  }

  [[nodiscard]] bool is_transverse() const { return E[1] == Complex{} && H[1] == Complex{}; }

  friend bool operator==(const FieldState&, const FieldState&) = default;
};

struct EnergyMomentum {
  double U = 0.0;  // energy density
  Vec3 S;          // Poynting flux
  Vec3 g;          // momentum density, S / c^2
};

/// psi = (E_x, E_z, iH_x, iH_z). Rejects fields with a longitudinal component.
[[nodiscard]] inline Bispinor to_bispinor(const FieldState& f) {
  if (!f.is_transverse()) throw invalid_input("bispinor mapping requires E_y = H_y = 0");
  return {f.E[0], f.E[2], I_unit * f.H[0], I_unit * f.H[2]};
}

[[nodiscard]] inline FieldState from_bispinor(const Bispinor& psi) {
  return FieldState::transverse(psi[0], psi[1], -I_unit * psi[2], -I_unit * psi[3]);
}

/// U = (E.E* + H.H*) / 8 pi
[[nodiscard]] inline double energy_density(const FieldState& f) { return (norm2(f.E) + norm2(f.H)) / eight_pi; }

/// S = (c / 4 pi) Re(E* x H)
[[nodiscard]] inline Vec3 poynting(const FieldState& f, const PhysicalConstants& k = {}) {
  const CVec3 s = cross(conj(f.E), f.H);
  const double scale = k.c / four_pi;
  return {scale * s[0].real(), scale * s[1].real(), scale * s[2].real()};
}

[[nodiscard]] inline Vec3 momentum_density(const FieldState& f, const PhysicalConstants& k = {}) {
  return (1.0 / (k.c * k.c)) * poynting(f, k);
}

[[nodiscard]] inline EnergyMomentum energy_momentum(const FieldState& f, const PhysicalConstants& k = {}) {
  const Vec3 s = poynting(f, k);
  return {energy_density(f), s, (1.0 / (k.c * k.c)) * s};
}

/// Energy density and Poynting flux written as bispinor bilinears.
struct QuantumForms {
  double U = 0.0;
  Vec3 S;
};

/// U_q = psi^+ alpha0 psi / 8 pi,  S_q = -(c / 8 pi) psi^+ alpha psi.
[[nodiscard]] inline QuantumForms quantum_forms(const Bispinor& psi, const PhysicalConstants& k = {}) {
  const auto& d = dirac_basis();
  const double s = -k.c / eight_pi;
  return {bilinear(psi, d.alpha0).real() / eight_pi,
          {s * bilinear(psi, d.alpha_x).real(), s * bilinear(psi, d.alpha_y).real(),
           s * bilinear(psi, d.alpha_z).real()}};
}

}  // namespace twirlwave
