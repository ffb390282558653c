#pragma once

// Exact plane-wave solutions of the free first-order equation with mass:
// the four amplitude sets, their polarization pattern, and an audit that
// finds which sign variant of the operator annihilates each of them.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "twirlwave/algebra.hpp"
#include "twirlwave/constants.hpp"
#include "twirlwave/equations.hpp"
#include "twirlwave/errors.hpp"

namespace twirlwave {

/// Selects one of the four plane-wave solutions. The energy is never stored;
/// it follows from dispersion_energy(p, m, branch).
struct PlaneWaveSpec {
  Branch branch = Branch::positive;
  int set = 1;  // 1 or 2 within the branch
  Vec3 p;
  double phi = 0.0;
  double m = 1.0;

  void validate() const {
    if (set != 1 && set != 2) throw invalid_input("amplitude set must be 1 or 2");
    require_non_negative_mass(m);
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z) || !std::isfinite(phi))
      throw invalid_input("plane-wave momentum and phase must be finite");
  }

  [[nodiscard]] std::string label() const {
    return std::string(branch == Branch::positive ? "+" : "-") + "/" + std::to_string(set);
  }
};

[[nodiscard]] inline double energy(const PlaneWaveSpec& s, const PhysicalConstants& k = {}) {
  return dispersion_energy(s.p, s.m, s.branch, k);
}

/// Amplitudes B_j = b_j e^{i phi}. Positive branch, set 1 / set 2:
///   (-c p_z, -c(p_x + i p_y), D, 0) / D,   (-c(p_x - i p_y), c p_z, 0, D) / D,   D = eps + m c^2;
/// negative branch, set 1 / set 2:
///   (D, 0, c p_z, c(p_x + i p_y)) / D,     (0, D, c(p_x - i p_y), -c p_z) / D,   D = -eps + m c^2.
/// energy_override replaces the dispersion energy (used to reproduce the
/// tabulated eps = +-m c^2 values at p_y = m c, which are off-shell).
[[nodiscard]] inline Bispinor amplitudes(const PlaneWaveSpec& s, const PhysicalConstants& k = {},
                                         std::optional<double> energy_override = std::nullopt) {
  s.validate();
  const double eps = energy_override.value_or(energy(s, k));
  const double mc2 = s.m * k.c * k.c;
  const double denom = s.branch == Branch::positive ? eps + mc2 : -eps + mc2;
  if (denom == 0.0 || !std::isfinite(denom))
    throw invalid_input("amplitude denominator |eps| + m c^2 vanishes (m = 0, p = 0)");

  const Complex cpz{k.c * s.p.z, 0.0};
  const Complex cp_plus{k.c * s.p.x, k.c * s.p.y};
  const Complex cp_minus{k.c * s.p.x, -k.c * s.p.y};
  Bispinor b;
  if (s.branch == Branch::positive) {
    b = s.set == 1 ? Bispinor{-cpz / denom, -cp_plus / denom, 1.0, 0.0}
                   : Bispinor{-cp_minus / denom, cpz / denom, 0.0, 1.0};
  } else {
    b = s.set == 1 ? Bispinor{1.0, 0.0, cpz / denom, cp_plus / denom}
                   : Bispinor{0.0, 1.0, cp_minus / denom, -cpz / denom};
  }
  return std::polar(1.0, s.phi) * b;
}

/// psi = B exp(-(i/hbar)(eps t - p.r))
[[nodiscard]] inline Bispinor plane_wave(const PlaneWaveSpec& s, double t, const Vec3& r,
                                         const PhysicalConstants& k = {}) {
  const double phase = -(energy(s, k) * t - s.p.dot(r)) / k.hbar;
  return std::polar(1.0, phase) * amplitudes(s, k);
}

/// Plane wave with its analytic first and second derivatives.
[[nodiscard]] inline PointSample plane_wave_sample(const PlaneWaveSpec& s, double t, const Vec3& r,
                                                   const PhysicalConstants& k = {}) {
  const Bispinor psi = plane_wave(s, t, r, k);
  const Complex dt{0.0, -energy(s, k) / k.hbar};
  const Complex dx{0.0, s.p.x / k.hbar};
  const Complex dy{0.0, s.p.y / k.hbar};
  const Complex dz{0.0, s.p.z / k.hbar};
  return {psi, dt * psi, dx * psi, dy * psi, dz * psi, (dt * dt) * psi, (dy * dy) * psi};
}

enum class Polarization { zero, oz, ox, mixed };

[[nodiscard]] inline std::string to_string(Polarization p) {
  switch (p) {
    case Polarization::zero: return "zero";
    case Polarization::oz: return "oz";
    case Polarization::ox: return "ox";
    case Polarization::mixed: return "mixed";
  }
  return "?";
}

inline constexpr double polarization_tolerance = 1e-12;

/// Support pattern only: oz = components {1, 4}, ox = components {2, 3}.
[[nodiscard]] inline Polarization classify_polarization(const Bispinor& psi, double tol = polarization_tolerance) {
  std::array<bool, 4> nz{};
  for (std::size_t i = 0; i < 4; ++i) nz[i] = std::abs(psi[i]) > tol;
  if (!nz[0] && !nz[1] && !nz[2] && !nz[3]) return Polarization::zero;
  if (!nz[1] && !nz[2]) return Polarization::oz;
  if (!nz[0] && !nz[3]) return Polarization::ox;
  return Polarization::mixed;
}

/// Residual of the plane wave under a sign variant, measured against the
/// natural size of the terms: max|r| / ((|eps| + c|p| + m c^2) / hbar * max|psi|).
[[nodiscard]] inline double relative_plane_wave_residual(const PlaneWaveSpec& s, SignVariant v, double t,
                                                         const Vec3& r, const PhysicalConstants& k = {}) {
  const PointSample sample = plane_wave_sample(s, t, r, k);
  const Bispinor res = residual_dirac_like(sample, s.m, v, k);
  const double scale = (std::abs(energy(s, k)) + k.c * s.p.norm() + s.m * k.c * k.c) / k.hbar;
  const double size = sample.psi.max_abs();
  if (size == 0.0) return res.max_abs();
  return res.max_abs() / (scale * size);
}

inline constexpr double audit_tolerance = 1e-12;

struct SolutionRecord {
  PlaneWaveSpec spec;
  Bispinor amplitudes;
  double energy = 0.0;
  std::vector<SignVariant> annihilating;  // every variant below tolerance
  SignVariant annihilating_variant;       // first of them with s_t = +1
  double max_residual = 0.0;              // of annihilating_variant over the sample
  bool verified = false;
};

/// Residual of each of the eight variants on a fixed five-point sample.
/// Throws audit_failure when none annihilates the wave.
[[nodiscard]] inline SolutionRecord audit_solution(const PlaneWaveSpec& s, const PhysicalConstants& k = {}) {
  SolutionRecord rec;
  rec.spec = s;
  rec.amplitudes = amplitudes(s, k);
  rec.energy = energy(s, k);

  const double time_unit = k.hbar / std::abs(rec.energy);
  const double length_unit = k.c * time_unit;
  constexpr std::array<std::array<double, 4>, 5> points{{
      {0.0, 0.0, 0.0, 0.0},
      {0.37, 0.11, -0.52, 0.23},
      {-1.9, 0.8, 1.3, -0.4},
      {5.25, -2.2, 0.05, 1.7},
      {12.0, 3.1, -7.4, 0.9},
  }};

  std::vector<std::pair<SignVariant, double>> found;
  for (const SignVariant& v : all_sign_variants()) {
    double worst = 0.0;
    for (const auto& pt : points) {
      const Vec3 r{pt[1] * length_unit, pt[2] * length_unit, pt[3] * length_unit};
      worst = std::max(worst, relative_plane_wave_residual(s, v, pt[0] * time_unit, r, k));
    }
    if (worst < audit_tolerance) found.emplace_back(v, worst);
  }
  if (found.empty()) throw audit_failure("no sign variant annihilates plane wave " + s.label());

  for (const auto& [v, res] : found) rec.annihilating.push_back(v);
  const auto primary = std::find_if(found.begin(), found.end(), [](const auto& e) { return e.first.s_t == 1; });
  const auto& chosen = primary != found.end() ? *primary : found.front();
  rec.annihilating_variant = chosen.first;
  rec.max_residual = chosen.second;
  rec.verified = true;
  return rec;
}

/// The four solutions (+/1, +/2, -/1, -/2) at momentum p.
[[nodiscard]] inline std::array<PlaneWaveSpec, 4> solution_family(const Vec3& p, double m, double phi = 0.0) {
  return {{{Branch::positive, 1, p, phi, m},
           {Branch::positive, 2, p, phi, m},
           {Branch::negative, 1, p, phi, m},
           {Branch::negative, 2, p, phi, m}}};
}

}  // namespace twirlwave
