#pragma once

// Lagrangian densities of the linear and self-interacting equations, and
// numerical checks of the two quartic identities:
//   (E^2 + H^2)^2 - 4 (E x H)^2 = (E^2 - H^2)^2 + 4 (E . H)^2
//   (psi+ a0 psi)^2 - (psi+ a psi)^2 = (psi+ a4 psi)^2 + (psi+ a5 psi)^2
// which are the same statement under psi = (E_x, E_z, iH_x, iH_z).

#include <algorithm>
#include <cmath>
#include <string_view>

#include "twirlwave/algebra.hpp"
#include "twirlwave/constants.hpp"
#include "twirlwave/equations.hpp"
#include "twirlwave/errors.hpp"
#include "twirlwave/field.hpp"

namespace twirlwave {

struct LagrangianSample {
  Bispinor psi;
  Bispinor d_t;
  Bispinor d_y;
  double mass = 1.0;
  double delta_tau = 0.0;
  Bispinor d_x{};  // zero for fields that depend on y only
  Bispinor d_z{};

  [[nodiscard]] PointSample point() const { return {psi, d_t, d_x, d_y, d_z, {}, {}}; }
};

/// psi^+ (e + c alpha.p + beta m c^2) psi
[[nodiscard]] inline Complex lagrangian_dirac(const LagrangianSample& s, const PhysicalConstants& k = {}) {
  return inner(s.psi, dirac_operator(s.point(), s.mass, dirac_variant, k));
}

/// dU/dt + div S - i (omega / 8 pi)(E^2 - H^2), conjugate products throughout.
[[nodiscard]] inline Complex lagrangian_dirac_em(const FieldSample& f, double omega, const PhysicalConstants& k = {}) {
  const FieldState& v = f.value;
  const double dU_dt = (cdot(v.E, f.d_t.E) + cdot(v.H, f.d_t.H)).real() / four_pi;
  // d/dy of (c / 4 pi) Re(E* x H)_y
  const Complex dS = cross(conj(f.d_y.E), v.H)[1] + cross(conj(v.E), f.d_y.H)[1];
  const double div_S = k.c / four_pi * dS.real();
  const double invariant = norm2(v.E) - norm2(v.H);
  return {dU_dt + div_S, -omega / eight_pi * invariant};
}

enum class NonlinearForm { quantum_814, em_817, fierz_820 };

[[nodiscard]] inline std::string_view to_string(NonlinearForm f) {
  switch (f) {
    case NonlinearForm::quantum_814: return "quantum";
    case NonlinearForm::em_817: return "em";
    case NonlinearForm::fierz_820: return "fierz";
  }
  return "?";
}

/// Bilinears psi^+ M psi for the six basis matrices.
struct Bilinears {
  double a0 = 0.0;
  Vec3 a;
  double a4 = 0.0;
  double a5 = 0.0;
};

[[nodiscard]] inline Bilinears bilinears(const Bispinor& psi) {
  const auto& d = dirac_basis();
  return {bilinear(psi, d.alpha0).real(),
          {bilinear(psi, d.alpha_x).real(), bilinear(psi, d.alpha_y).real(), bilinear(psi, d.alpha_z).real()},
          bilinear(psi, d.beta).real(),
          bilinear(psi, d.alpha5).real()};
}

/// Self-interaction part of each form, before any overall normalization:
///   quantum: (dtau/8pi)[(psi+psi)^2 - (psi+ a psi)^2]
///   em:      dtau/((8pi)^2 m c^2) [(E^2 - H^2)^2 + 4 (E.H)^2]   (normalized form, L' = L / (8 pi m c^2))
///   fierz:   (dtau/8pi)[(psi+ a4 psi)^2 + (psi+ a5 psi)^2]
[[nodiscard]] inline double quartic_part(const Bispinor& psi, NonlinearForm form, double mass, double delta_tau,
                                         const PhysicalConstants& k = {}) {
  switch (form) {
    case NonlinearForm::quantum_814: {
      const auto b = bilinears(psi);
      return delta_tau / eight_pi * (b.a0 * b.a0 - b.a.dot(b.a));
    }
    case NonlinearForm::fierz_820: {
      const auto b = bilinears(psi);
      return delta_tau / eight_pi * (b.a4 * b.a4 + b.a5 * b.a5);
    }
    case NonlinearForm::em_817: {
      if (!(mass > 0.0)) throw invalid_input("normalized field form needs a positive mass");
      const FieldState f = from_bispinor(psi);
      const double inv = norm2(f.E) - norm2(f.H);
      const double eh = cdot(f.E, f.H).real();
      return delta_tau / (eight_pi * eight_pi * mass * k.c * k.c) * (inv * inv + 4.0 * eh * eh);
    }
  }
  return 0.0;
}

/// Factor that maps the em form back onto the scale of the other two (8 pi m c^2).
[[nodiscard]] inline double em_normalization(double mass, const PhysicalConstants& k = {}) {
  return eight_pi * mass * k.c * k.c;
}

/// Self-interacting Lagrangian density in the selected form.
///   quantum: i hbar [d_t(psi+psi / 2) - c d_y(psi+ a_y psi)] + quartic
///   em:      (E^2 - H^2)/8pi + quartic, already divided by 8 pi m c^2
///   fierz:   psi+ ((1/c) d_t + a_y d_y) psi + quartic
[[nodiscard]] inline Complex lagrangian_nonlinear(const LagrangianSample& s, NonlinearForm form,
                                                  const PhysicalConstants& k = {}) {
  const auto& d = dirac_basis();
  const double quartic = quartic_part(s.psi, form, s.mass, s.delta_tau, k);
  switch (form) {
    case NonlinearForm::quantum_814: {
      const double dt_half_norm = inner(s.psi, s.d_t).real();
      const double dy_current = 2.0 * inner(s.psi, d.alpha_y * s.d_y).real();
      return Complex{0.0, k.hbar * (dt_half_norm - k.c * dy_current)} + quartic;
    }
    case NonlinearForm::em_817: {
      const FieldState f = from_bispinor(s.psi);
      return (norm2(f.E) - norm2(f.H)) / eight_pi + quartic;
    }
    case NonlinearForm::fierz_820:
      return inner(s.psi, (1.0 / k.c) * s.d_t + d.alpha_y * s.d_y) + quartic;
  }
  return {};
}

/// Split form with inner energy/momentum supplied as numbers:
/// psi+(e - c alpha.p) psi + psi+(eps_in - c alpha.p_in) psi.
[[nodiscard]] inline Complex lagrangian_inner_field(const LagrangianSample& s, double eps_in, const Vec3& p_in,
                                                    const PhysicalConstants& k = {}) {
  const PointSample pt = s.point();
  const Bispinor kinetic = Complex{0.0, k.hbar} * pt.d_t + Complex{0.0, k.hbar * k.c} * alpha_gradient(pt);
  const Bispinor inner_term = eps_in * s.psi - k.c * (dirac_basis().dot(p_in) * s.psi);
  return inner(s.psi, kinetic + inner_term);
}

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_err = 0.0;  // |lhs - rhs| / scale
};

/// Both sides of the field-invariant identity; rel_err is taken against
/// (E^2 + H^2)^2 because both sides vanish on null fields.
[[nodiscard]] inline IdentityCheck check_em_identity(const Vec3& E, const Vec3& H) {
  const double e2 = E.dot(E);
  const double h2 = H.dot(H);
  const Vec3 s = E.cross(H);
  const double eh = E.dot(H);
  const double lhs = (e2 + h2) * (e2 + h2) - 4.0 * s.dot(s);
  const double rhs = (e2 - h2) * (e2 - h2) + 4.0 * eh * eh;
  const double scale = (e2 + h2) * (e2 + h2);
  return {lhs, rhs, scale > 0.0 ? std::abs(lhs - rhs) / scale : std::abs(lhs - rhs)};
}

/// Both sides of the bilinear identity; rel_err is taken against (psi+psi)^2.
[[nodiscard]] inline IdentityCheck check_fierz(const Bispinor& psi) {
  const auto b = bilinears(psi);
  const double lhs = b.a0 * b.a0 - b.a.dot(b.a);
  const double rhs = b.a4 * b.a4 + b.a5 * b.a5;
  const double scale = psi.norm2() * psi.norm2();
  return {lhs, rhs, scale > 0.0 ? std::abs(lhs - rhs) / scale : std::abs(lhs - rhs)};
}

}  // namespace twirlwave
