#pragma once

// Periodic 1-D lattice evolution of
//   d_t psi = c alpha_y d_y psi + i beta (c / r_C) psi - i (dtau / 8 pi c) M(psi) psi,
//   M(psi) = (psi+ psi) I - sum_k alpha_k (psi+ alpha_k psi),
// with classic RK4 in time and 2nd/4th-order or spectral derivatives in
// space. The self-action matrix M is Hermitian, so the exact flow preserves
// sum psi+ psi. The same linear equation can also be stepped in field
// variables (E_x, E_z, H_x, H_z) with imaginary currents as sources.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "twirlwave/algebra.hpp"
#include "twirlwave/constants.hpp"
#include "twirlwave/equations.hpp"
#include "twirlwave/errors.hpp"
#include "twirlwave/field.hpp"

namespace twirlwave {

struct Grid1D {
  double length = 1.0;
  std::size_t points = 64;

  [[nodiscard]] double dy() const { return length / static_cast<double>(points); }
  [[nodiscard]] double y(std::size_t i) const { return dy() * static_cast<double>(i); }

  /// Wavenumber of lattice mode n: 2 pi n / L.
  [[nodiscard]] double wavenumber(long n) const { return 2.0 * pi * static_cast<double>(n) / length; }

  void validate() const {
    if (points < 8 || points % 2 != 0) throw invalid_input("grid needs an even number of points >= 8");
    if (!(length > 0.0) || !std::isfinite(length)) throw invalid_input("grid length must be positive");
  }
};

struct Grid1DState {
  Grid1D grid;
  std::vector<Bispinor> psi;
  double time = 0.0;

  [[nodiscard]] static Grid1DState zero(const Grid1D& g) { return {g, std::vector<Bispinor>(g.points), 0.0}; }

  [[nodiscard]] static Grid1DState uniform(const Grid1D& g, const Bispinor& b) {
    return {g, std::vector<Bispinor>(g.points, b), 0.0};
  }

  /// b exp(i k y) with k = 2 pi n / L.
  [[nodiscard]] static Grid1DState mode(const Grid1D& g, long n, const Bispinor& b) {
    Grid1DState s = zero(g);
    const double k = g.wavenumber(n);
    for (std::size_t i = 0; i < g.points; ++i) s.psi[i] = std::polar(1.0, k * g.y(i)) * b;
    return s;
  }

  void validate() const {
    grid.validate();
    if (psi.size() != grid.points) throw invalid_input("state size does not match grid");
    for (const auto& p : psi)
      if (!p.is_finite()) throw invalid_input("state contains non-finite entries");
  }
};

enum class DerivativeOrder { second, fourth, spectral };
enum class Representation { bispinor, em };

[[nodiscard]] inline std::string to_string(DerivativeOrder d) {
  switch (d) {
    case DerivativeOrder::second: return "2";
    case DerivativeOrder::fourth: return "4";
    case DerivativeOrder::spectral: return "spectral";
  }
  return "?";
}

[[nodiscard]] inline DerivativeOrder parse_derivative_order(const std::string& s) {
  if (s == "2") return DerivativeOrder::second;
  if (s == "4") return DerivativeOrder::fourth;
  if (s == "spectral") return DerivativeOrder::spectral;
  throw invalid_input("derivative order must be 2, 4 or spectral, got '" + s + "'");
}

[[nodiscard]] inline Representation parse_representation(const std::string& s) {
  if (s == "bispinor") return Representation::bispinor;
  if (s == "em") return Representation::em;
  throw invalid_input("representation must be bispinor or em, got '" + s + "'");
}

/// Default self-action volume 8 pi r_C^3.
[[nodiscard]] inline double default_delta_tau(double m, const PhysicalConstants& k = {}) {
  const double rc = k.compton_wavelength(m);
  return eight_pi * rc * rc * rc;
}

struct EvolutionConfig {
  double dt = 1e-3;
  std::size_t steps = 1000;
  double mass = 1.0;
  double delta_tau = 0.0;
  bool nonlinear = false;
  DerivativeOrder derivative = DerivativeOrder::spectral;
  Representation representation = Representation::bispinor;
  std::size_t diagnostics_stride = 1;

  /// Largest admissible step for a grid: 0.5 dy / c.
  [[nodiscard]] static double max_dt(const Grid1D& g, const PhysicalConstants& k = {}) { return 0.5 * g.dy() / k.c; }

  void validate(const Grid1D& g, const PhysicalConstants& k = {}) const {
    g.validate();
    if (!(dt > 0.0) || !std::isfinite(dt)) throw invalid_input("time step must be positive");
    if (dt > max_dt(g, k)) throw invalid_input("time step violates dt <= 0.5 dy / c");
    require_non_negative_mass(mass);
    if (!(delta_tau >= 0.0) || !std::isfinite(delta_tau)) throw invalid_input("delta_tau must be non-negative");
    if (diagnostics_stride == 0) throw invalid_input("diagnostics stride must be at least 1");
    if (representation == Representation::em && nonlinear)
      throw invalid_input("field representation supports the linear equation only");
  }
};

/// Periodic first-derivative stencil: (D f)_j = sum_m w_m f_{(j + m) mod N}.
/// Offsets are visited in a fixed order, so D commutes exactly with lattice shifts.
class DerivativeStencil {
 public:
  DerivativeStencil(const Grid1D& g, DerivativeOrder order) : n_(g.points) {
    const double h = g.dy();
    switch (order) {
      case DerivativeOrder::second:
        add(-1, -0.5 / h);
        add(1, 0.5 / h);
        break;
      case DerivativeOrder::fourth:
        add(-2, 1.0 / (12.0 * h));
        add(-1, -8.0 / (12.0 * h));
        add(1, 8.0 / (12.0 * h));
        add(2, -1.0 / (12.0 * h));
        break;
      case DerivativeOrder::spectral: {
        // Derivative of the periodic trigonometric interpolant (even N);
        // the Nyquist mode is mapped to zero.
        const double scale = pi / g.length;
        for (std::size_t m = 1; m < n_; ++m) {
          const double sign = (m % 2 == 0) ? 1.0 : -1.0;
          add(static_cast<long>(m), -scale * sign / std::tan(pi * static_cast<double>(m) / static_cast<double>(n_)));
        }
        break;
      }
    }
  }

  template <class T>
  void apply(std::span<const T> in, std::span<T> out) const {
    for (std::size_t j = 0; j < n_; ++j) {
      T acc{};
      for (std::size_t t = 0; t < offsets_.size(); ++t) acc += weights_[t] * in[(j + offsets_[t]) % n_];
      out[j] = acc;
    }
  }

  [[nodiscard]] std::size_t size() const { return offsets_.size(); }

 private:
  void add(long offset, double w) {
    const long n = static_cast<long>(n_);
    offsets_.push_back(static_cast<std::size_t>(((offset % n) + n) % n));
    weights_.push_back(w);
  }

  std::size_t n_;
  std::vector<std::size_t> offsets_;
  std::vector<double> weights_;
};

/// M(psi) psi with M = (psi+ psi) I - sum_k alpha_k (psi+ alpha_k psi).
[[nodiscard]] inline Bispinor self_action(const Bispinor& psi) {
  const auto& d = dirac_basis();
  const double n = psi.norm2();
  Bispinor out = n * psi;
  for (std::size_t axis = 0; axis < 3; ++axis) {
    const Mat4& a = d.alpha(axis);
    const Bispinor ap = a * psi;
    out -= inner(psi, ap).real() * ap;
  }
  return out;
}

/// Transverse field components stepped directly in the field representation.
struct TransverseField {
  Complex ex, ez, hx, hz;

  TransverseField& operator+=(const TransverseField& o) {
    ex += o.ex;
    ez += o.ez;
    hx += o.hx;
    hz += o.hz;
    return *this;
  }
  friend TransverseField operator+(TransverseField a, const TransverseField& b) { return a += b; }
  friend TransverseField operator*(double s, const TransverseField& a) {
    return {s * a.ex, s * a.ez, s * a.hx, s * a.hz};
  }

  [[nodiscard]] FieldState state() const { return FieldState::transverse(ex, ez, hx, hz); }
  [[nodiscard]] static TransverseField of(const FieldState& f) { return {f.E[0], f.E[2], f.H[0], f.H[2]}; }
  [[nodiscard]] bool is_finite() const {
    for (const Complex& v : {ex, ez, hx, hz})
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }
};

namespace detail {

template <class T>
void axpy_into(std::vector<T>& out, const std::vector<T>& x, double a, const std::vector<T>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + a * y[i];
}

// One classic RK4 step; rhs(in, out) evaluates the time derivative.
template <class T, class Rhs>
void rk4_step(std::vector<T>& u, double dt, const Rhs& rhs, std::vector<std::vector<T>>& work) {
  auto& k1 = work[0];
  auto& k2 = work[1];
  auto& k3 = work[2];
  auto& k4 = work[3];
  auto& tmp = work[4];
  rhs(u, k1);
  axpy_into(tmp, u, 0.5 * dt, k1);
  rhs(tmp, k2);
  axpy_into(tmp, u, 0.5 * dt, k2);
  rhs(tmp, k3);
  axpy_into(tmp, u, dt, k3);
  rhs(tmp, k4);
  const double w = dt / 6.0;
  for (std::size_t i = 0; i < u.size(); ++i) u[i] += w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

}  // namespace detail

/// Time stepper for one configuration on one grid.
class Evolver {
 public:
  Evolver(const Grid1D& grid, const EvolutionConfig& cfg, const PhysicalConstants& k = {})
      : grid_(grid), cfg_(cfg), k_(k), stencil_((cfg.validate(grid, k), grid), cfg.derivative) {
    mass_rate_ = k_.mass_frequency(cfg_.mass);
    self_coupling_ = cfg_.nonlinear ? cfg_.delta_tau / (eight_pi * k_.c) : 0.0;
    work_.assign(5, std::vector<Bispinor>(grid_.points));
    field_work_.assign(5, std::vector<TransverseField>(grid_.points));
    deriv_.resize(grid_.points);
    field_deriv_.resize(grid_.points);
  }

  [[nodiscard]] const Grid1D& grid() const { return grid_; }
  [[nodiscard]] const EvolutionConfig& config() const { return cfg_; }

  /// d_t psi for the bispinor representation.
  void rhs(const std::vector<Bispinor>& psi, std::vector<Bispinor>& out) const {
    const auto& d = dirac_basis();
    stencil_.apply(std::span<const Bispinor>(psi), std::span<Bispinor>(deriv_));
    const Complex mass_term{0.0, mass_rate_};
    const Complex self_term{0.0, -self_coupling_};
    for (std::size_t j = 0; j < psi.size(); ++j) {
      Bispinor r = k_.c * (d.alpha_y * deriv_[j]);
      if (mass_rate_ != 0.0) r += mass_term * (d.beta * psi[j]);
      if (self_coupling_ != 0.0) r += self_term * self_action(psi[j]);
      out[j] = r;
    }
  }

  /// d_t of (E_x, E_z, H_x, H_z) from the Maxwell rows with imaginary currents:
  ///   d_t E_x = c d_y H_z + 4 pi j^e_x,   d_t H_z = c d_y E_x - 4 pi j^m_z,
  ///   d_t E_z = -c d_y H_x + 4 pi j^e_z,  d_t H_x = -c d_y E_z - 4 pi j^m_x.
  void field_rhs(const std::vector<TransverseField>& f, std::vector<TransverseField>& out) const {
    stencil_.apply(std::span<const TransverseField>(f), std::span<TransverseField>(field_deriv_));
    const double c = k_.c;
    for (std::size_t j = 0; j < f.size(); ++j) {
      const TransverseField& dy = field_deriv_[j];
      TransverseField r{c * dy.hz, -c * dy.hx, -c * dy.ez, c * dy.ex};
      if (cfg_.mass > 0.0) {
        const auto cur = imaginary_currents(f[j].state(), cfg_.mass, k_);
        r.ex += four_pi * cur.j_e[0];
        r.ez += four_pi * cur.j_e[2];
        r.hx -= four_pi * cur.j_m[0];
        r.hz -= four_pi * cur.j_m[2];
      }
      out[j] = r;
    }
  }

  void step(std::vector<Bispinor>& psi) {
    detail::rk4_step(psi, cfg_.dt, [this](const auto& in, auto& out) { rhs(in, out); }, work_);
  }

  void step(std::vector<TransverseField>& f) {
    detail::rk4_step(f, cfg_.dt, [this](const auto& in, auto& out) { field_rhs(in, out); }, field_work_);
  }

 private:
  Grid1D grid_;
  EvolutionConfig cfg_;
  PhysicalConstants k_;
  DerivativeStencil stencil_;
  double mass_rate_ = 0.0;
  double self_coupling_ = 0.0;
  std::vector<std::vector<Bispinor>> work_;
  std::vector<std::vector<TransverseField>> field_work_;
  mutable std::vector<Bispinor> deriv_;
  mutable std::vector<TransverseField> field_deriv_;
};

struct DiagnosticsRow {
  std::size_t step = 0;
  double t = 0.0;
  double norm = 0.0;
  double energy = 0.0;
  double p_y = 0.0;
};

/// sum psi+ psi dy
[[nodiscard]] inline double total_norm(const Grid1DState& s) {
  double acc = 0.0;
  for (const auto& p : s.psi) acc += p.norm2();
  return acc * s.grid.dy();
}

/// Lattice sum of the energy density, sum U(y_i) dy.
[[nodiscard]] inline double inner_energy(const Grid1DState& s, const PhysicalConstants& k = {}) {
  double acc = 0.0;
  for (const auto& p : s.psi) acc += quantum_forms(p, k).U;
  return acc * s.grid.dy();
}

/// Lattice sum of the momentum density, sum g(y_i) dy with g = S / c^2.
[[nodiscard]] inline Vec3 inner_momentum(const Grid1DState& s, const PhysicalConstants& k = {}) {
  Vec3 acc;
  for (const auto& p : s.psi) acc += quantum_forms(p, k).S;
  return (s.grid.dy() / (k.c * k.c)) * acc;
}

[[nodiscard]] inline DiagnosticsRow diagnose(const Grid1DState& s, std::size_t step, const PhysicalConstants& k = {}) {
  return {step, s.time, total_norm(s), inner_energy(s, k), inner_momentum(s, k).y};
}

namespace detail {

inline DiagnosticsRow diagnose_fields(const std::vector<TransverseField>& f, const Grid1D& g, double t,
                                      std::size_t step, const PhysicalConstants& k) {
  double norm = 0.0, energy = 0.0, p_y = 0.0;
  for (const auto& v : f) {
    const FieldState fs = v.state();
    norm += norm2(fs.E) + norm2(fs.H);
    energy += energy_density(fs);
    p_y += momentum_density(fs, k).y;
  }
  const double dy = g.dy();
  return {step, t, norm * dy, energy * dy, p_y * dy};
}

}  // namespace detail

/// Cyclic shift by `sites` lattice points: out[j] = in[j - sites].
[[nodiscard]] inline Grid1DState shifted(const Grid1DState& s, std::size_t sites) {
  Grid1DState out = s;
  const std::size_t n = s.psi.size();
  for (std::size_t j = 0; j < n; ++j) out.psi[(j + sites) % n] = s.psi[j];
  return out;
}

struct EvolutionResult {
  Grid1DState final_state;
  std::vector<DiagnosticsRow> diagnostics;
};

/// Per-step observer, called after every completed step (and once for step 0).
using StepObserver = std::function<void(std::size_t step, const Grid1DState&)>;

/// Steps the state cfg.steps times. Diagnostics are recorded at step 0 and
/// every diagnostics_stride steps, plus the final step.
[[nodiscard]] inline EvolutionResult evolve(const Grid1DState& initial, const EvolutionConfig& cfg,
                                            const PhysicalConstants& k = {}, const StepObserver& observer = {}) {
  initial.validate();
  cfg.validate(initial.grid, k);
  Evolver ev(initial.grid, cfg, k);
  EvolutionResult res{initial, {}};
  Grid1DState& s = res.final_state;

  auto record = [&](std::size_t step) {
    return step % cfg.diagnostics_stride == 0 || step == cfg.steps;
  };

  if (cfg.representation == Representation::bispinor) {
    res.diagnostics.push_back(diagnose(s, 0, k));
    if (observer) observer(0, s);
    for (std::size_t n = 1; n <= cfg.steps; ++n) {
      ev.step(s.psi);
      s.time = initial.time + static_cast<double>(n) * cfg.dt;
      for (const auto& p : s.psi)
        if (!p.is_finite()) throw evolution_aborted(n, "non-finite state");
      if (record(n)) res.diagnostics.push_back(diagnose(s, n, k));
      if (observer) observer(n, s);
    }
    return res;
  }

  std::vector<TransverseField> f(s.psi.size());
  for (std::size_t j = 0; j < f.size(); ++j) f[j] = TransverseField::of(from_bispinor(s.psi[j]));
  auto sync = [&] {
    for (std::size_t j = 0; j < f.size(); ++j) s.psi[j] = to_bispinor(f[j].state());
  };
  res.diagnostics.push_back(detail::diagnose_fields(f, s.grid, s.time, 0, k));
  if (observer) observer(0, s);
  for (std::size_t n = 1; n <= cfg.steps; ++n) {
    ev.step(f);
    s.time = initial.time + static_cast<double>(n) * cfg.dt;
    for (const auto& v : f)
      if (!v.is_finite()) throw evolution_aborted(n, "non-finite state");
    if (record(n)) res.diagnostics.push_back(detail::diagnose_fields(f, s.grid, s.time, n, k));
    if (observer) {
      sync();
      observer(n, s);
    }
  }
  sync();
  return res;
}

/// Evolves the same initial fields in both representations with the same
/// scheme and returns the largest pointwise deviation |psi - to_bispinor(F)|
/// over the run.
[[nodiscard]] inline double representation_crosscheck(const Grid1D& grid, const std::vector<FieldState>& initial,
                                                      EvolutionConfig cfg, const PhysicalConstants& k = {}) {
  cfg.nonlinear = false;
  cfg.validate(grid, k);
  if (initial.size() != grid.points) throw invalid_input("initial field lattice does not match grid");
  Evolver ev(grid, cfg, k);
  std::vector<Bispinor> psi(grid.points);
  std::vector<TransverseField> f(grid.points);
  for (std::size_t j = 0; j < grid.points; ++j) {
    psi[j] = to_bispinor(initial[j]);
    f[j] = TransverseField::of(initial[j]);
  }
  double worst = 0.0;
  for (std::size_t n = 1; n <= cfg.steps; ++n) {
    ev.step(psi);
    ev.step(f);
    for (std::size_t j = 0; j < grid.points; ++j) worst = std::max(worst, max_abs_diff(psi[j], to_bispinor(f[j].state())));
    if (!std::isfinite(worst)) throw evolution_aborted(n, "non-finite state");
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Frequency measurement

/// Least-squares slope of the unwrapped phase of a complex time series.
[[nodiscard]] inline double fit_phase_rate(std::span<const double> t, std::span<const Complex> z) {
  if (t.size() != z.size() || t.size() < 2) throw invalid_input("phase fit needs at least two samples");
  std::vector<double> phase(z.size());
  phase[0] = std::arg(z[0]);
  for (std::size_t i = 1; i < z.size(); ++i) {
    // increment taken from the ratio, so no explicit 2 pi bookkeeping
    phase[i] = phase[i - 1] + std::arg(z[i] * std::conj(z[i - 1]));
  }
  const double n = static_cast<double>(t.size());
  double st = 0.0, sp = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    st += t[i];
    sp += phase[i];
  }
  const double tm = st / n, pm = sp / n;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    num += (t[i] - tm) * (phase[i] - pm);
    den += (t[i] - tm) * (t[i] - tm);
  }
  return num / den;
}

/// Spatial Fourier coefficient (1/N) sum_j psi_j exp(-i k_n y_j).
[[nodiscard]] inline Bispinor mode_coefficient(const Grid1DState& s, long n) {
  Bispinor acc;
  const double k = s.grid.wavenumber(n);
  for (std::size_t j = 0; j < s.psi.size(); ++j) acc += std::polar(1.0, -k * s.grid.y(j)) * s.psi[j];
  return (1.0 / static_cast<double>(s.psi.size())) * acc;
}

/// Lattice mode index (in [-N/2, N/2)) carrying the largest share of the state.
[[nodiscard]] inline long dominant_mode(const Grid1DState& s) {
  const long half = static_cast<long>(s.grid.points / 2);
  long best = 0;
  double best_w = -1.0;
  for (long n = -half; n < half; ++n) {
    const double w = mode_coefficient(s, n).norm2();
    if (w > best_w) {
      best_w = w;
      best = n;
    }
  }
  return best;
}

struct FrequencyMeasurement {
  long mode = 0;
  double wavenumber = 0.0;
  double phase_rate = 0.0;  // d(arg)/dt of the projected amplitude

  [[nodiscard]] double frequency() const { return std::abs(phase_rate); }
};

/// Evolves `initial` and fits the phase of its dominant mode, projected on
/// that mode's initial 4-component direction.
[[nodiscard]] inline FrequencyMeasurement measure_frequency(const Grid1DState& initial, const EvolutionConfig& cfg,
                                                            const PhysicalConstants& k = {}) {
  const long n = dominant_mode(initial);
  const Bispinor ref = mode_coefficient(initial, n);
  if (ref.norm2() == 0.0) throw invalid_input("cannot measure the frequency of a zero state");
  std::vector<double> times;
  std::vector<Complex> amp;
  times.reserve(cfg.steps + 1);
  amp.reserve(cfg.steps + 1);
  EvolutionConfig run = cfg;
  run.diagnostics_stride = cfg.steps == 0 ? 1 : cfg.steps;
  (void)evolve(initial, run, k, [&](std::size_t, const Grid1DState& s) {
    times.push_back(s.time);
    amp.push_back(inner(ref, mode_coefficient(s, n)));
  });
  return {n, initial.grid.wavenumber(n), fit_phase_rate(times, amp)};
}

/// Positive-frequency eigenvector of c k alpha_y + (m c^2/hbar) beta, i.e.
/// the polarization of a single lattice mode oscillating as exp(+i Omega t).
[[nodiscard]] inline Bispinor mode_polarization(double wavenumber, double m, const PhysicalConstants& k = {}) {
  const double w = k.mass_frequency(m);
  const double omega = std::hypot(k.c * wavenumber, w);
  if (omega == 0.0) return {1.0, 0.0, 0.0, 0.0};
  // (I + H/Omega) e_1 / 2 with H e_1 = (w, 0, 0, i c k)
  const Bispinor v{0.5 * (1.0 + w / omega), 0.0, 0.0, Complex{0.0, 0.5 * k.c * wavenumber / omega}};
  return (1.0 / v.norm()) * v;
}

/// sqrt(c^2 k^2 + (m c^2 / hbar)^2)
[[nodiscard]] inline double predicted_frequency(double wavenumber, double m, const PhysicalConstants& k = {}) {
  return std::hypot(k.c * wavenumber, k.mass_frequency(m));
}

struct NonlinearFrequency {
  double measured = 0.0;
  double predicted = 0.0;
  double phase_rate = 0.0;
};

/// Uniform (a, 0, 0, 0) under the self-action term alone (m = 0). The alpha
/// bilinears of this state vanish, so psi(t) = psi0 exp(-i omega t) with
/// omega = (dtau / 8 pi c) a^2.
[[nodiscard]] inline NonlinearFrequency nonlinear_frequency_check(double amplitude, double delta_tau,
                                                                  const Grid1D& grid, EvolutionConfig cfg,
                                                                  const PhysicalConstants& k = {}) {
  cfg.nonlinear = true;
  cfg.mass = 0.0;
  cfg.delta_tau = delta_tau;
  cfg.representation = Representation::bispinor;
  const auto initial = Grid1DState::uniform(grid, {amplitude, 0.0, 0.0, 0.0});
  std::vector<double> times;
  std::vector<Complex> amp;
  EvolutionConfig run = cfg;
  run.diagnostics_stride = cfg.steps == 0 ? 1 : cfg.steps;
  (void)evolve(initial, run, k, [&](std::size_t, const Grid1DState& s) {
    times.push_back(s.time);
    amp.push_back(s.psi[0][0]);
  });
  const double rate = fit_phase_rate(times, amp);
  return {std::abs(rate), delta_tau / (eight_pi * k.c) * amplitude * amplitude, rate};
}

}  // namespace twirlwave
