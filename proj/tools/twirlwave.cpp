// twirlwave: verification suites, plane-wave audits, lattice runs and the
// twirl parameter table from the command line.
//
// Exit codes: 0 all checks pass, 1 usage or configuration error,
// 2 a check failed, 3 the run aborted (blow-up, unwritable output).

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twirlwave/constants.hpp"
#include "twirlwave/errors.hpp"
#include "twirlwave/lattice.hpp"
#include "twirlwave/report.hpp"
#include "twirlwave/solutions.hpp"
#include "twirlwave/suites.hpp"
#include "twirlwave/twirl.hpp"

namespace tw = twirlwave;

namespace {

enum Exit { ok = 0, usage = 1, check_failed = 2, aborted = 3 };

struct io_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string units = "natural";
  std::optional<std::uint64_t> seed;
  std::size_t draws = 10000;
  std::vector<std::string> suites;
  std::vector<std::string> tolerances;  // name=value

  std::optional<double> mass;
  std::optional<double> length;
  std::size_t points = 64;
  std::optional<double> dt;
  std::optional<double> cfl;
  std::size_t steps = 1000;
  std::optional<double> delta_tau;
  bool nonlinear = false;
  std::string derivative = "spectral";
  std::string representation = "bispinor";
  std::size_t stride = 1;
  std::string initial = "mode";
  long mode = 1;
  double amplitude = 1.0;
  bool inner_residual = false;
  std::vector<long> modes{1, 2, 4};

  std::vector<double> momentum{0.0, 1.0, 0.0};
  double phi = 0.0;
  bool rest_energy = false;

  std::string output;
  std::string format = "csv";
};

tw::PhysicalConstants constants_of(const RunConfig& c) { return tw::PhysicalConstants::of(tw::parse_unit_system(c.units)); }

std::uint64_t resolve_seed(const RunConfig& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("TWIRLWAVE_SEED")) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || env[used] != '\0' || v > static_cast<std::uint64_t>(INT64_MAX))
      throw tw::invalid_input(std::string("TWIRLWAVE_SEED is not a valid seed: '") + env + "'");
    return v;
  }
  return 42;
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw tw::invalid_input("tolerance override must be name=value, got '" + item + "'");
    std::size_t used = 0;
    double v = 0.0;
    const std::string num = item.substr(eq + 1);
    try {
      v = std::stod(num, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != num.size() || !(v >= 0.0)) throw tw::invalid_input("bad tolerance value in '" + item + "'");
    out[item.substr(0, eq)] = v;
  }
  return out;
}

void write_output(const RunConfig& c, const tw::Table& t) {
  const auto fmt = tw::parse_output_format(c.format);
  if (c.output.empty() || c.output == "-") {
    tw::emit(std::cout, t, fmt);
    std::cout.flush();
    return;
  }
  std::ofstream f(c.output, std::ios::binary | std::ios::trunc);
  if (!f) throw io_failure("cannot open '" + c.output + "' for writing");
  tw::emit(f, t, fmt);
  f.close();
  if (!f) throw io_failure("failed writing '" + c.output + "'");
}

int finish_report(const RunConfig& c, const tw::Report& r) {
  for (const auto& ch : r.checks)
    std::cerr << (ch.pass ? "PASS " : "FAIL ") << ch.name << "  max_rel_err=" << tw::format_number(ch.max_rel_err)
              << "  tol=" << tw::format_number(ch.tolerance) << '\n';
  write_output(c, r.table());
  return r.overall() ? ok : check_failed;
}

tw::SuiteOptions suite_options(const RunConfig& c) {
  tw::SuiteOptions o;
  o.seed = resolve_seed(c);
  o.draws = c.draws;
  o.constants = constants_of(c);
  o.tolerances = parse_tolerances(c.tolerances);
  if (o.draws == 0) throw tw::invalid_input("draws must be at least 1");
  return o;
}

int cmd_verify(const RunConfig& c) {
  const auto o = suite_options(c);
  return finish_report(c, tw::run_suites(c.suites, o, "verify"));
}

int cmd_identities(const RunConfig& c) {
  const auto o = suite_options(c);
  return finish_report(c, tw::run_suites({"identities"}, o, "identities"));
}

int cmd_twirl(const RunConfig& c) {
  const auto k = constants_of(c);
  const double m = c.mass.value_or(k.m_e);
  const auto t = tw::twirl_parameters(m, k);
  tw::Table table;
  table.columns = {"quantity", "value"};
  for (const auto& [name, v] : std::vector<std::pair<std::string, double>>{
           {"m_p", t.m_p}, {"p_p", t.p_p}, {"r_p", t.r_p}, {"kappa", t.kappa}, {"omega_p", t.omega_p},
           {"sigma_p", t.sigma_p}, {"p_s", t.p_s}, {"sigma_s", t.sigma_s}, {"r_s", t.r_s}, {"omega_s", t.omega_s},
           {"r_C", t.r_C}, {"eps_rel", t.eps_rel}, {"omega_z", tw::zitterbewegung_frequency(m, k)}})
    table.add_row({name, v});
  table.metadata = {{"command", std::string("twirl")},
                    {"mass", m},
                    {"unit_system", std::string(tw::to_string(k.unit_system))},
                    {"version", std::string(tw::version)}};
  write_output(c, table);
  return ok;
}

int cmd_solve(const RunConfig& c) {
  const auto k = constants_of(c);
  const double m = c.mass.value_or(k.m_e);
  if (c.momentum.size() != 3) throw tw::invalid_input("momentum needs three components");
  const tw::Vec3 p{c.momentum[0], c.momentum[1], c.momentum[2]};
  tw::Table table;
  table.columns = {"set", "energy", "b1_re", "b1_im", "b2_re", "b2_im", "b3_re", "b3_im", "b4_re", "b4_im",
                   "polarization", "variant", "annihilating", "max_residual", "verified"};
  bool all = true;
  for (const auto& spec : tw::solution_family(p, m, c.phi)) {
    const auto rec = tw::audit_solution(spec, k);
    const double mc2 = m * k.c * k.c;
    const double eps = c.rest_energy ? (spec.branch == tw::Branch::positive ? mc2 : -mc2) : rec.energy;
    const tw::Bispinor b = tw::amplitudes(spec, k, eps);
    std::string variants;
    for (const auto& v : rec.annihilating) variants += (variants.empty() ? "" : " ") + v.str();
    all = all && rec.verified;
    table.add_row({spec.label(), eps, b[0].real(), b[0].imag(), b[1].real(), b[1].imag(), b[2].real(), b[2].imag(),
                   b[3].real(), b[3].imag(), tw::to_string(tw::classify_polarization(b)), rec.annihilating_variant.str(),
                   variants, rec.max_residual, rec.verified});
  }
  table.metadata = {{"command", std::string("solve")},
                    {"mass", m},
                    {"p_x", p.x},
                    {"p_y", p.y},
                    {"p_z", p.z},
                    {"phi", c.phi},
                    {"energy", std::string(c.rest_energy ? "rest" : "dispersion")},
                    {"unit_system", std::string(tw::to_string(k.unit_system))},
                    {"version", std::string(tw::version)}};
  write_output(c, table);
  return all ? ok : check_failed;
}

tw::Grid1D grid_of(const RunConfig& c, const tw::PhysicalConstants& k, double m) {
  const double rc = m > 0.0 ? k.compton_wavelength(m) : k.compton_wavelength(k.m_e);
  tw::Grid1D g{c.length.value_or(20.0 * rc), c.points};
  g.validate();
  return g;
}

tw::EvolutionConfig evolution_config(const RunConfig& c, const tw::Grid1D& g, const tw::PhysicalConstants& k, double m) {
  if (c.dt && c.cfl) throw tw::invalid_input("give either dt or cfl, not both");
  tw::EvolutionConfig cfg;
  cfg.dt = c.dt.value_or(c.cfl.value_or(0.25) * g.dy() / k.c);
  cfg.steps = c.steps;
  cfg.mass = m;
  cfg.nonlinear = c.nonlinear;
  cfg.delta_tau = c.delta_tau.value_or(m > 0.0 ? tw::default_delta_tau(m, k) : 0.0);
  cfg.derivative = tw::parse_derivative_order(c.derivative);
  cfg.representation = tw::parse_representation(c.representation);
  cfg.diagnostics_stride = c.stride;
  cfg.validate(g, k);
  return cfg;
}

tw::Grid1DState initial_state(const RunConfig& c, const tw::Grid1D& g, double m, const tw::PhysicalConstants& k) {
  if (c.initial == "zero") return tw::Grid1DState::zero(g);
  if (c.initial == "uniform") return tw::Grid1DState::uniform(g, {c.amplitude, 0.0, 0.0, 0.0});
  if (c.initial == "mode") {
    if (c.mode <= -static_cast<long>(g.points / 2) || c.mode >= static_cast<long>(g.points / 2))
      throw tw::invalid_input("mode index must lie strictly inside (-N/2, N/2)");
    const double kn = g.wavenumber(c.mode);
    return tw::Grid1DState::mode(g, c.mode, c.amplitude * tw::mode_polarization(kn, m, k));
  }
  if (c.initial == "gaussian") {
    auto s = tw::Grid1DState::zero(g);
    const double w = g.length / 10.0;
    for (std::size_t i = 0; i < g.points; ++i) {
      const double x = (g.y(i) - 0.5 * g.length) / w;
      s.psi[i] = tw::Bispinor{c.amplitude * std::exp(-0.5 * x * x), 0.0, 0.0, 0.0};
    }
    return s;
  }
  throw tw::invalid_input("initial state must be zero, uniform, mode or gaussian, got '" + c.initial + "'");
}

int cmd_evolve(const RunConfig& c) {
  const auto k = constants_of(c);
  const double m = c.mass.value_or(k.m_e);
  const auto g = grid_of(c, k, m);
  const auto cfg = evolution_config(c, g, k, m);
  const auto init = initial_state(c, g, m, k);

  std::map<std::size_t, double> inner_res;
  tw::StepObserver observer;
  std::optional<tw::Evolver> ev;
  std::optional<tw::DerivativeStencil> stencil;
  if (c.inner_residual) {
    // First-order equation with the lattice sums of energy and momentum in
    // place of the mass term; reported as max |r| over the lattice.
    ev.emplace(g, cfg, k);
    stencil.emplace(g, cfg.derivative);
    observer = [&](std::size_t step, const tw::Grid1DState& s) {
      if (step % cfg.diagnostics_stride != 0 && step != cfg.steps) return;
      std::vector<tw::Bispinor> d_t(g.points), d_y(g.points);
      ev->rhs(s.psi, d_t);
      stencil->apply(std::span<const tw::Bispinor>(s.psi), std::span<tw::Bispinor>(d_y));
      const double eps_in = tw::inner_energy(s, k);
      const tw::Vec3 p_in = tw::inner_momentum(s, k);
      double worst = 0.0;
      for (std::size_t j = 0; j < g.points; ++j) {
        const tw::PointSample pt{s.psi[j], d_t[j], {}, d_y[j], {}, {}, {}};
        worst = std::max(worst, tw::residual_inner_field(pt, eps_in, p_in, k).max_abs());
      }
      inner_res[step] = worst;
    };
  }
  const auto result = tw::evolve(init, cfg, k, observer);

  tw::Table t;
  t.columns = {"step", "t", "norm", "energy", "p_y"};
  if (c.inner_residual) t.columns.emplace_back("inner_residual");
  for (const auto& d : result.diagnostics) {
    std::vector<tw::Cell> row{static_cast<std::int64_t>(d.step), d.t, d.norm, d.energy, d.p_y};
    if (c.inner_residual) row.emplace_back(inner_res.at(d.step));
    t.add_row(std::move(row));
  }
  t.metadata = {{"command", std::string("evolve")},
                {"initial", c.initial},
                {"mass", m},
                {"length", g.length},
                {"points", static_cast<std::int64_t>(g.points)},
                {"dt", cfg.dt},
                {"steps", static_cast<std::int64_t>(cfg.steps)},
                {"delta_tau", cfg.delta_tau},
                {"nonlinear", cfg.nonlinear},
                {"derivative", tw::to_string(cfg.derivative)},
                {"representation", c.representation},
                {"unit_system", std::string(tw::to_string(k.unit_system))},
                {"version", std::string(tw::version)}};
  write_output(c, t);
  return ok;
}

int cmd_dispersion(const RunConfig& c) {
  const auto k = constants_of(c);
  const double m = c.mass.value_or(k.m_e);
  const auto g = grid_of(c, k, m);
  auto cfg = evolution_config(c, g, k, m);
  if (cfg.nonlinear) throw tw::invalid_input("the dispersion experiment is linear");
  const auto tol = parse_tolerances(c.tolerances);
  const double tolerance = tol.contains("dispersion") ? tol.at("dispersion") : tw::default_tolerances().at("dispersion");

  tw::Table t;
  t.columns = {"mode", "wavenumber", "measured", "predicted", "rel_err", "tolerance", "pass"};
  bool all = true;
  for (const long n : c.modes) {
    if (n == 0 || n <= -static_cast<long>(g.points / 2) || n >= static_cast<long>(g.points / 2))
      throw tw::invalid_input("dispersion modes must be nonzero and inside (-N/2, N/2)");
    const double kn = g.wavenumber(n);
    const auto fm = tw::measure_frequency(tw::Grid1DState::mode(g, n, tw::mode_polarization(kn, m, k)), cfg, k);
    const double w = tw::predicted_frequency(kn, m, k);
    const tw::Check ch("dispersion", std::abs(fm.frequency() - w) / w, tolerance);
    all = all && ch.pass;
    t.add_row({static_cast<std::int64_t>(n), kn, fm.frequency(), w, ch.max_rel_err, tolerance, ch.pass});
  }
  t.metadata = {{"command", std::string("dispersion")},
                {"mass", m},
                {"length", g.length},
                {"points", static_cast<std::int64_t>(g.points)},
                {"dt", cfg.dt},
                {"steps", static_cast<std::int64_t>(cfg.steps)},
                {"derivative", tw::to_string(cfg.derivative)},
                {"overall", all},
                {"unit_system", std::string(tw::to_string(k.unit_system))},
                {"version", std::string(tw::version)}};
  write_output(c, t);
  return all ? ok : check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bispinor Maxwell fields, massive plane waves and lattice evolution"};
  app.set_version_flag("--version", std::string(tw::version));
  app.set_config("--config", "", "flat key=value file; command-line flags take precedence");
  app.require_subcommand(1, 1);

  RunConfig c;
  app.add_option("--units", c.units, "natural or gaussian")->check(CLI::IsMember({"natural", "gaussian"}));
  app.add_option("--seed", c.seed, "random seed (falls back to TWIRLWAVE_SEED)")
      ->check(CLI::Range(std::uint64_t{0}, static_cast<std::uint64_t>(INT64_MAX)));
  app.add_option("--draws", c.draws, "random draws per property sweep");
  app.add_option("--suite", c.suites, "suite to run (repeatable); default all")->delimiter(',');
  app.add_option("--tol", c.tolerances, "tolerance override name=value (repeatable)");
  app.add_option("--mass", c.mass, "particle mass (default m_e)");
  app.add_option("--length", c.length, "periodic box length (default 20 r_C)");
  app.add_option("--points", c.points, "lattice points (even, >= 8)");
  app.add_option("--dt", c.dt, "time step");
  app.add_option("--cfl", c.cfl, "time step as a fraction of dy / c (default 0.25)");
  app.add_option("--steps", c.steps, "number of time steps");
  app.add_option("--delta-tau", c.delta_tau, "self-action volume (default 8 pi r_C^3)");
  app.add_flag("--nonlinear", c.nonlinear, "include the self-action term");
  app.add_option("--derivative", c.derivative, "2, 4 or spectral");
  app.add_option("--representation", c.representation, "bispinor or em");
  app.add_option("--stride", c.stride, "diagnostics every n steps");
  app.add_option("--initial", c.initial, "zero, uniform, mode or gaussian");
  app.add_option("--mode", c.mode, "lattice mode index of the initial state");
  app.add_option("--amplitude", c.amplitude, "initial amplitude");
  app.add_flag("--inner-residual", c.inner_residual, "add the inner-field residual column");
  app.add_option("--modes", c.modes, "dispersion modes")->delimiter(',');
  app.add_option("--p", c.momentum, "momentum px,py,pz")->delimiter(',')->expected(3);
  app.add_option("--phi", c.phi, "global amplitude phase");
  app.add_flag("--rest-energy", c.rest_energy, "tabulate amplitudes at eps = +-m c^2");
  app.add_option("--output,-o", c.output, "output file (default stdout)");
  app.add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
  };
  const std::vector<Sub> subs{
      {"verify", "run the named invariant suites and write a report", cmd_verify},
      {"solve", "amplitude table and sign audit of the four plane-wave sets", cmd_solve},
      {"evolve", "lattice evolution, writes the diagnostics series", cmd_evolve},
      {"twirl", "twirl parameter table", cmd_twirl},
      {"identities", "field-invariant and Fierz identity sweeps", cmd_identities},
      {"dispersion", "measured single-mode dispersion", cmd_dispersion},
  };
  std::vector<CLI::App*> handles;
  for (const auto& s : subs) handles.push_back(app.add_subcommand(s.name, s.help)->fallthrough());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : usage;
  }

  try {
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (handles[i]->parsed()) return subs[i].run(c);
  } catch (const tw::invalid_input& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const tw::audit_failure& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return check_failed;
  } catch (const tw::evolution_aborted& e) {
    std::cerr << "aborted: " << e.what() << '\n';
    return aborted;
  } catch (const io_failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return aborted;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return aborted;
  }
  return usage;
}
