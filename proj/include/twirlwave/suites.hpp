#pragma once

// Named verification suites. Each returns a list of checks with the largest
// relative error seen and the tolerance it was held to. Draw counts and the
// seed come from SuiteOptions; every random quantity is scaled to the unit
// system (momenta in m_e c, lengths in r_C, times in hbar / m_e c^2).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "twirlwave/algebra.hpp"
#include "twirlwave/constants.hpp"
#include "twirlwave/equations.hpp"
#include "twirlwave/field.hpp"
#include "twirlwave/lagrangian.hpp"
#include "twirlwave/lattice.hpp"
#include "twirlwave/report.hpp"
#include "twirlwave/solutions.hpp"
#include "twirlwave/twirl.hpp"

namespace twirlwave {

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::size_t draws = 10000;
  PhysicalConstants constants;
  std::map<std::string, double> tolerances;  // overrides by check name
};

/// Default tolerance of every named check.
[[nodiscard]] inline const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> t{
      {"anticommutation", 1e-15},
      {"double_cover", 1e-12},
      {"maxwell_retarded", 1e-13},
      {"maxwell_advanced", 1e-13},
      {"imaginary_currents", 1e-13},
      {"amplitude_table", 1e-15},
      {"sign_audit", 1e-12},
      {"on_shell_lagrangian", 1e-12},
      {"em_identity", 1e-12},
      {"fierz_identity", 1e-12},
      {"bilinear_correspondence", 1e-14},
      {"quantum_energy", 1e-13},
      {"quantum_flux", 1e-13},
      {"twirl_radius", 1e-15},
      {"twirl_frequency", 1e-15},
      {"dispersion", 1e-3},
      {"zitterbewegung", 1e-6},
      {"representation_crosscheck", 1e-10},
      {"norm_linear", 1e-10},
      {"norm_nonlinear", 1e-10},
      {"nonlinear_frequency", 1e-4},
  };
  return t;
}

[[nodiscard]] inline double tolerance_for(const SuiteOptions& o, const std::string& name) {
  if (auto it = o.tolerances.find(name); it != o.tolerances.end()) return it->second;
  return default_tolerances().at(name);
}

namespace detail {

class SuiteRng {
 public:
  explicit SuiteRng(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Complex disk() {
    for (;;) {
      const double a = uniform(-1, 1), b = uniform(-1, 1);
      if (a * a + b * b <= 1.0) return {a, b};
    }
  }
  Bispinor bispinor() { return {disk(), disk(), disk(), disk()}; }
  Vec3 cube() { return {uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)}; }
  Vec3 unit_vector() {
    for (;;) {
      const Vec3 v = cube();
      const double n = v.norm();
      if (n > 0.1 && n <= 1.0) return (1.0 / n) * v;
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline double rel_max(const Bispinor& a, const Bispinor& b) {
  const double scale = std::max(a.max_abs(), b.max_abs());
  return scale == 0.0 ? 0.0 : (a - b).max_abs() / scale;
}

inline std::uint64_t sub_seed(std::uint64_t seed, std::uint32_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), salt};
  std::array<std::uint32_t, 2> w{};
  seq.generate(w.begin(), w.end());
  return (static_cast<std::uint64_t>(w[0]) << 32) | w[1];
}

}  // namespace detail

[[nodiscard]] inline std::vector<Check> suite_algebra(const SuiteOptions& o) {
  const auto gens = dirac_basis().generators();
  double anti = 0.0;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b) {
      const Mat4 expected = a == b ? 2.0 * Mat4::identity() : Mat4{};
      anti = std::max(anti, (anticommutator(*gens[a], *gens[b]) - expected).max_abs());
    }
  detail::SuiteRng rng(detail::sub_seed(o.seed, 1));
  double cover = 0.0;
  const std::size_t axes = std::min<std::size_t>(o.draws, 100);
  for (std::size_t n = 0; n < axes; ++n) {
    const Vec3 axis = rng.unit_vector();
    cover = std::max(cover, (rotation_operator(axis, 2 * pi) + Mat4::identity()).max_abs());
    cover = std::max(cover, (rotation_operator(axis, 4 * pi) - Mat4::identity()).max_abs());
  }
  return {{"anticommutation", anti, tolerance_for(o, "anticommutation")},
          {"double_cover", cover, tolerance_for(o, "double_cover")}};
}

[[nodiscard]] inline std::vector<Check> suite_maxwell(const SuiteOptions& o) {
  const auto& k = o.constants;
  detail::SuiteRng rng(detail::sub_seed(o.seed, 2));
  const double rate = k.mass_frequency(k.m_e);  // derivative scale
  auto field = [&] { return FieldState::transverse(rng.disk(), rng.disk(), rng.disk(), rng.disk()); };
  auto scaled = [](double s, const FieldState& f) {
    return FieldState::transverse(s * f.E[0], s * f.E[2], s * f.H[0], s * f.H[2]);
  };
  double ret = 0.0, adv = 0.0, cur = 0.0;
  for (std::size_t n = 0; n < o.draws; ++n) {
    const FieldSample f{field(), scaled(rate, field()), scaled(rate / k.c, field())};
    const PointSample p{to_bispinor(f.value), to_bispinor(f.d_t), {}, to_bispinor(f.d_y), {}, {}, {}};
    ret = std::max(ret, detail::rel_max(residual_dirac_like(p, 0.0, {1, 1, 1}, k),
                                        to_bispinor_residual(residual_maxwell_dirac(f, MaxwellSystem::retarded, k), k)));
    adv = std::max(adv, detail::rel_max(residual_dirac_like(p, 0.0, {1, -1, 1}, k),
                                        to_bispinor_residual(residual_maxwell_dirac(f, MaxwellSystem::advanced, k), k)));
    const auto v = all_sign_variants()[n % 8];
    cur = std::max(cur, detail::rel_max(residual_dirac_like(p, k.m_e, v, k),
                                        to_bispinor_residual(residual_maxwell_currents(f, k.m_e, v, k), k)));
  }
  return {{"maxwell_retarded", ret, tolerance_for(o, "maxwell_retarded")},
          {"maxwell_advanced", adv, tolerance_for(o, "maxwell_advanced")},
          {"imaginary_currents", cur, tolerance_for(o, "imaginary_currents")}};
}

[[nodiscard]] inline std::vector<Check> suite_solutions(const SuiteOptions& o) {
  const auto& k = o.constants;
  const double m = k.m_e, mc = m * k.c, mc2 = mc * k.c;

  // tabulated amplitudes at p = (0, m c, 0), eps = +-m c^2, phi = pi/2
  const Complex i = I_unit;
  const std::array<Bispinor, 4> expected{{{0.0, 0.5, i, 0.0}, {-0.5, 0.0, 0.0, i}, {i, 0.0, 0.0, -0.5}, {0.0, i, 0.5, 0.0}}};
  const auto fam = solution_family({0.0, mc, 0.0}, m, pi / 2);
  double table = 0.0;
  for (std::size_t s = 0; s < 4; ++s) {
    const double eps = s < 2 ? mc2 : -mc2;
    table = std::max(table, max_abs_diff(amplitudes(fam[s], k, eps), expected[s]));
  }

  detail::SuiteRng rng(detail::sub_seed(o.seed, 3));
  const double t_unit = k.hbar / mc2, l_unit = k.compton_wavelength(m);
  const std::size_t specs = std::max<std::size_t>(1, o.draws / 250);
  double audit = 0.0, lag = 0.0;
  for (std::size_t n = 0; n < specs; ++n) {
    const Vec3 p = (3.0 * mc) * rng.cube();
    const double mass = m * rng.uniform(0.05, 3.0);
    for (const auto& spec : solution_family(p, mass, rng.uniform(0, 2 * pi))) {
      double worst = 0.0;
      SignVariant v = dirac_variant;
      try {
        const auto rec = audit_solution(spec, k);
        v = rec.annihilating_variant;
      } catch (const audit_failure&) {
        worst = 1.0;
      }
      for (std::size_t j = 0; j < 250 / 4; ++j) {
        const Vec3 r = (50.0 * l_unit) * rng.cube();
        const double t = 50.0 * t_unit * rng.uniform(-1, 1);
        worst = std::max(worst, relative_plane_wave_residual(spec, v, t, r, k));
        const PointSample pt = plane_wave_sample(spec, t, r, k);
        const LagrangianSample ls{pt.psi, pt.d_t, pt.d_y, mass, 0.0, pt.d_x, pt.d_z};
        const double scale = (std::abs(energy(spec, k)) + k.c * p.norm() + mass * k.c * k.c) * pt.psi.norm2();
        lag = std::max(lag, std::abs(lagrangian_dirac(ls, k)) / scale);
      }
      audit = std::max(audit, worst);
    }
  }
  return {{"amplitude_table", table, tolerance_for(o, "amplitude_table")},
          {"sign_audit", audit, tolerance_for(o, "sign_audit")},
          {"on_shell_lagrangian", lag, tolerance_for(o, "on_shell_lagrangian")}};
}

[[nodiscard]] inline std::vector<Check> suite_identities(const SuiteOptions& o) {
  detail::SuiteRng rng(detail::sub_seed(o.seed, 4));
  double em = 0.0, fierz = 0.0, corr = 0.0;
  const auto& d = dirac_basis();
  for (std::size_t n = 0; n < o.draws; ++n) {
    em = std::max(em, check_em_identity(rng.cube(), rng.cube()).rel_err);
    fierz = std::max(fierz, check_fierz(rng.bispinor()).rel_err);
    const auto f = FieldState::transverse(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Bispinor psi = to_bispinor(f);
    const double e2 = norm2(f.E), h2 = norm2(f.H), eh = cdot(f.E, f.H).real();
    corr = std::max({corr, std::abs(bilinear(psi, d.beta).real() - (e2 - h2)),
                     std::abs(bilinear(psi, d.alpha5).real() + 2.0 * eh)});
  }
  return {{"em_identity", em, tolerance_for(o, "em_identity")},
          {"fierz_identity", fierz, tolerance_for(o, "fierz_identity")},
          {"bilinear_correspondence", corr, tolerance_for(o, "bilinear_correspondence")}};
}

[[nodiscard]] inline std::vector<Check> suite_quantum_forms(const SuiteOptions& o) {
  const auto& k = o.constants;
  detail::SuiteRng rng(detail::sub_seed(o.seed, 5));
  double u = 0.0, s = 0.0;
  for (std::size_t n = 0; n < o.draws; ++n) {
    const auto f = FieldState::transverse(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    const auto cl = energy_momentum(f, k);
    const auto q = quantum_forms(to_bispinor(f), k);
    if (cl.U == 0.0) continue;
    u = std::max(u, std::abs(q.U - cl.U) / cl.U);
    s = std::max(s, (q.S - cl.S).norm() / (k.c * cl.U));
  }
  return {{"quantum_energy", u, tolerance_for(o, "quantum_energy")},
          {"quantum_flux", s, tolerance_for(o, "quantum_flux")}};
}

[[nodiscard]] inline std::vector<Check> suite_twirl(const SuiteOptions& o) {
  const auto& k = o.constants;
  const auto t = twirl_parameters(k.m_e, k);
  const double r = std::max(std::abs(t.r_s - t.r_p), std::abs(t.r_p - k.hbar / (2 * k.m_e * k.c))) / t.r_p;
  const double w = std::max(std::abs(t.omega_s - t.omega_p), std::abs(t.omega_p - zitterbewegung_frequency(k.m_e, k))) /
                   t.omega_p;
  return {{"twirl_radius", r, tolerance_for(o, "twirl_radius")},
          {"twirl_frequency", w, tolerance_for(o, "twirl_frequency")}};
}

/// Lattice runs with lengths in units of r_C; no random draws.
[[nodiscard]] inline std::vector<Check> suite_dynamics(const SuiteOptions& o) {
  const auto& k = o.constants;
  const double m = k.m_e;
  const double rc = k.compton_wavelength(m);
  std::vector<Check> out;

  {
    const Grid1D g{20.0 * rc, 64};
    double worst = 0.0;
    for (const long n : {1L, 2L, 4L}) {
      EvolutionConfig cfg;
      cfg.dt = 0.25 * g.dy() / k.c;
      cfg.steps = 1000;
      cfg.mass = m;
      const double kn = g.wavenumber(n);
      const auto fm = measure_frequency(Grid1DState::mode(g, n, mode_polarization(kn, m, k)), cfg, k);
      const double w = predicted_frequency(kn, m, k);
      worst = std::max(worst, std::abs(fm.frequency() - w) / w);
    }
    out.emplace_back("dispersion", worst, tolerance_for(o, "dispersion"));
  }
  {
    const Grid1D g{8.0 * rc, 16};
    EvolutionConfig cfg;
    cfg.dt = 1e-2 * k.hbar / (m * k.c * k.c);
    cfg.steps = 1000;
    cfg.mass = 2.0 * m;
    const auto fm = measure_frequency(Grid1DState::uniform(g, {1, 0, 0, 0}), cfg, k);
    const double wz = zitterbewegung_frequency(m, k);
    out.emplace_back("zitterbewegung", std::abs(fm.frequency() - wz) / wz, tolerance_for(o, "zitterbewegung"));
  }

  // smooth low-mode state on a well-resolved grid
  auto smooth = [&](const Grid1D& g) {
    Grid1DState s = Grid1DState::zero(g);
    const double kk = g.wavenumber(1);
    for (std::size_t i = 0; i < g.points; ++i) {
      const double y = g.y(i);
      s.psi[i] = Bispinor{0.6 + 0.3 * std::cos(kk * y), Complex(0.2, 0.1) * std::sin(kk * y),
                          Complex(0.0, 0.25) * std::cos(kk * y), 0.1};
    }
    return s;
  };
  {
    const Grid1D g{6.0 * rc, 64};
    EvolutionConfig cfg;
    cfg.dt = 0.25 * g.dy() / k.c;
    cfg.steps = 1000;
    cfg.mass = m;
    std::vector<FieldState> init;
    for (const auto& p : smooth(g).psi) init.push_back(from_bispinor(p));
    out.emplace_back("representation_crosscheck", representation_crosscheck(g, init, cfg, k),
                     tolerance_for(o, "representation_crosscheck"));
  }
  for (const bool nonlinear : {false, true}) {
    const Grid1D g{rc, 256};
    EvolutionConfig cfg;
    cfg.dt = 0.25 * g.dy() / k.c;
    cfg.steps = 1000;
    cfg.mass = m;
    cfg.nonlinear = nonlinear;
    cfg.delta_tau = default_delta_tau(m, k);
    cfg.diagnostics_stride = 1;
    const auto r = evolve(smooth(g), cfg, k);
    const double n0 = r.diagnostics.front().norm;
    double drift = 0.0;
    for (const auto& d : r.diagnostics) drift = std::max(drift, std::abs(d.norm - n0) / n0);
    const std::string name = nonlinear ? "norm_nonlinear" : "norm_linear";
    out.emplace_back(name, drift, tolerance_for(o, name));
  }
  {
    const Grid1D g{8.0 * rc, 16};
    EvolutionConfig cfg;
    cfg.dt = 1e-3 * k.hbar / (m * k.c * k.c);
    cfg.steps = 2000;
    // omega_NL = dtau a^2 / (8 pi c) = m c^2 / hbar at a = 1
    const double dtau = eight_pi * k.c * k.mass_frequency(m);
    const auto r = nonlinear_frequency_check(1.0, dtau, g, cfg, k);
    out.emplace_back("nonlinear_frequency", std::abs(r.measured - r.predicted) / r.predicted,
                     tolerance_for(o, "nonlinear_frequency"));
  }
  return out;
}

struct SuiteEntry {
  std::string name;
  std::function<std::vector<Check>(const SuiteOptions&)> run;
};

[[nodiscard]] inline const std::vector<SuiteEntry>& all_suites() {
  static const std::vector<SuiteEntry> s{
      {"algebra", suite_algebra},       {"maxwell", suite_maxwell},   {"solutions", suite_solutions},
      {"identities", suite_identities}, {"quantum-forms", suite_quantum_forms}, {"twirl", suite_twirl},
      {"dynamics", suite_dynamics},
  };
  return s;
}

/// Runs the named suites in declaration order and merges their checks.
[[nodiscard]] inline Report run_suites(const std::vector<std::string>& names, const SuiteOptions& o,
                                       const std::string& label) {
  for (const auto& [name, tol] : o.tolerances)
    if (!default_tolerances().contains(name)) throw invalid_input("unknown check '" + name + "' in tolerance override");
  for (const auto& n : names)
    if (std::none_of(all_suites().begin(), all_suites().end(), [&](const SuiteEntry& e) { return e.name == n; }))
      throw invalid_input("unknown suite '" + n + "'");
  Report r;
  r.suite = label;
  r.seed = o.seed;
  r.unit_system = o.constants.unit_system;
  for (const auto& entry : all_suites()) {
    if (!names.empty() && std::find(names.begin(), names.end(), entry.name) == names.end()) continue;
    for (auto& c : entry.run(o)) r.checks.push_back(std::move(c));
  }
  return r;
}

}  // namespace twirlwave
