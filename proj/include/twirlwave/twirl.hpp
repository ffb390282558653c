#pragma once

// Geometry of a wave moving on a circle: the split of the displacement
// current into normal and tangential parts, the connection term written as
// an energy-momentum 4-vector, the radius/spin/frequency bookkeeping of the
// pair picture, and the two-charge dipole potential.

#include <cmath>

#include "twirlwave/algebra.hpp"
#include "twirlwave/constants.hpp"
#include "twirlwave/errors.hpp"

namespace twirlwave {

struct CurrentDecomposition {
  Vec3 j_n;
  Vec3 j_tau;
  Vec3 n_hat;
  Vec3 tau_hat;
};

inline constexpr double frame_tolerance = 1e-12;

/// Displacement current of a field of magnitude E_mag moving on a circle of
/// radius r: j_n = -(1/4 pi) dE/dt n_hat, j_tau = (1/4 pi)(c/r) E_mag tau_hat.
[[nodiscard]] inline CurrentDecomposition displacement_current(double E_mag, double dE_dt, double r,
                                                               const Vec3& n_hat, const Vec3& tau_hat,
                                                               const PhysicalConstants& k = {}) {
  if (!(r > 0.0)) throw invalid_input("curvature radius must be positive");
  if (std::abs(n_hat.norm() - 1.0) > frame_tolerance || std::abs(tau_hat.norm() - 1.0) > frame_tolerance)
    throw invalid_input("frame vectors must be unit length");
  if (std::abs(n_hat.dot(tau_hat)) > frame_tolerance) throw invalid_input("frame vectors must be orthogonal");
  return {(-dE_dt / four_pi) * n_hat, (k.c / r * E_mag / four_pi) * tau_hat, n_hat, tau_hat};
}

/// Connection term identified with the photon energy-momentum {eps_p, c p_p}.
struct GammaVector {
  double eps_p = 0.0;
  Vec3 cp_p;
};

struct GammaIdentification {
  GammaVector gamma;
  Mat4 matrix;  // alpha0 eps_p + alpha . (c p_p)
};

[[nodiscard]] inline GammaIdentification gamma_identification(double m, const Vec3& p_p = {},
                                                              const PhysicalConstants& k = {}) {
  if (!(m >= 0.0)) throw invalid_input("mass must be non-negative");
  const auto& d = dirac_basis();
  GammaVector g{m * k.c * k.c, k.c * p_p};
  return {g, g.eps_p * d.alpha0 + d.dot(g.cp_p)};
}

/// Frobenius norm of (alpha0 eps_p + alpha.c p_p) - sign * beta m c^2. The two
/// sides are not proportional as operators, so this is recorded, not asserted.
[[nodiscard]] inline double identification_discrepancy(double m, const Vec3& p_p, int sign,
                                                       const PhysicalConstants& k = {}) {
  const auto id = gamma_identification(m, p_p, k);
  return (id.matrix - (sign * m * k.c * k.c) * dirac_basis().beta).frobenius_norm();
}

struct TwirlParams {
  double m_p = 0.0;      // twirled-photon mass, 2 m_e
  double p_p = 0.0;      // 2 m_e c
  double r_p = 0.0;      // hbar / (2 m_e c)
  double kappa = 0.0;    // 1 / r_p
  double omega_p = 0.0;  // c kappa
  double sigma_p = 0.0;  // p_p r_p
  double p_s = 0.0;      // m_e c
  double sigma_s = 0.0;  // sigma_p / 2
  double r_s = 0.0;      // sigma_s / p_s
  double omega_s = 0.0;  // c / r_s
  double r_C = 0.0;      // hbar / (m_e c)
  double eps_rel = 0.0;  // m_e c^2 released per particle
};

[[nodiscard]] inline TwirlParams twirl_parameters(double m_e, const PhysicalConstants& k = {}) {
  if (!(m_e > 0.0) || !std::isfinite(m_e)) throw invalid_input("electron mass must be positive");
  TwirlParams t;
  const double m_e_c = m_e * k.c;
  t.m_p = 2.0 * m_e;
  t.p_p = 2.0 * m_e_c;
  t.r_p = k.hbar / (2.0 * m_e_c);
  t.kappa = 1.0 / t.r_p;
  t.omega_p = k.c / t.r_p;
  t.sigma_p = t.p_p * t.r_p;
  t.sigma_s = 0.5 * t.sigma_p;
  t.p_s = m_e_c;
  t.r_s = t.sigma_s / t.p_s;
  t.omega_s = k.c / t.r_s;
  t.r_C = k.hbar / m_e_c;
  t.eps_rel = m_e * k.c * k.c;
  return t;
}

/// Zitterbewegung frequency 2 m_e c^2 / hbar.
[[nodiscard]] inline double zitterbewegung_frequency(double m_e, const PhysicalConstants& k = {}) {
  return 2.0 * m_e * k.c * k.c / k.hbar;
}

struct DipoleConfig {
  double e = 1.0;
  double d = 1.0;
  double theta = 0.0;
  double r = 1.0;
};

/// V = (e / 4 pi)(1/r - 1/(r + d cos theta))
[[nodiscard]] inline double dipole_potential(const DipoleConfig& cfg) {
  if (!(cfg.r > 0.0)) throw invalid_input("observation distance must be positive");
  const double far = cfg.r + cfg.d * std::cos(cfg.theta);
  if (!(far > 0.0)) throw invalid_input("r + d cos(theta) must be positive");
  return cfg.e / four_pi * (1.0 / cfg.r - 1.0 / far);
}

/// Separated-charge limit e / (4 pi r).
[[nodiscard]] inline double dipole_potential_limit(double e, double r) {
  if (!(r > 0.0)) throw invalid_input("observation distance must be positive");
  return e / (four_pi * r);
}

}  // namespace twirlwave
