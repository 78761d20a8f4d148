#include "qmlab/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qmlab/decay.hpp"
#include "qmlab/fieldstates.hpp"
#include "qmlab/fockspace.hpp"
#include "qmlab/gaugefields.hpp"
#include "qmlab/radiation.hpp"
#include "qmlab/specfun.hpp"
#include "qmlab/stringmodes.hpp"

namespace qmlab::cli {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double num(const ParamMap& p, const std::string& key) {
  const auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument("missing parameter: " + key);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(it->second, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("parameter " + key + " is not a number: " + it->second);
  }
  if (used != it->second.size())
    throw std::invalid_argument("parameter " + key + " is not a number: " + it->second);
  return v;
}

int integer(const ParamMap& p, const std::string& key) {
  const double v = num(p, key);
  const int i = (int)std::llround(v);
  if (std::abs(v - i) > 1e-9)
    throw std::invalid_argument("parameter " + key + " must be an integer");
  return i;
}

std::string word(const ParamMap& p, const std::string& key) {
  const auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument("missing parameter: " + key);
  return it->second;
}

// ---------------------------------------------------------------------------
// scenario implementations

Table run_ab_ring(const ParamMap& p) {
  gaugefields::RingConfig cfg{num(p, "radius"), num(p, "flux"), integer(p, "mmax")};
  Table t;
  t.columns = {"M", "E_M"};
  for (const auto& [m, e] : gaugefields::ab_ring_spectrum(cfg))
    t.rows.push_back({(double)m, e});
  return t;
}

Table run_ab_sector(const ParamMap& p) {
  gaugefields::RingConfig cfg{num(p, "radius"), num(p, "flux"), integer(p, "nmax")};
  Table t;
  t.columns = {"n", "E_n"};
  const auto energies = gaugefields::ab_sector_spectrum(cfg, num(p, "opening"));
  for (std::size_t i = 0; i < energies.size(); ++i)
    t.rows.push_back({(double)(i + 1), energies[i]});
  return t;
}

Table run_two_slit(const ParamMap& p) {
  const double b = num(p, "b"), k = num(p, "k"), d = num(p, "d"), flux = num(p, "flux");
  Table t;
  t.columns = {"flux", "shift", "fringe_spacing"};
  t.rows.push_back({flux, gaugefields::two_slit_shift(b, k, d, flux),
                    2.0 * M_PI * b / (k * d)});
  return t;
}

Table run_landau_levels(const ParamMap& p) {
  gaugefields::LandauConfig cfg;
  cfg.b_field = num(p, "b");
  const double kz = num(p, "kz");
  Table t;
  t.columns = {"n", "E"};
  for (int n = 0; n <= integer(p, "nmax"); ++n)
    t.rows.push_back({(double)n, gaugefields::landau_energy(cfg, n, kz)});
  return t;
}

Table run_landau_current(const ParamMap& p) {
  gaugefields::LandauConfig cfg;
  cfg.b_field = num(p, "b");
  const double x0 = num(p, "x0"), half = num(p, "halfwidth");
  const auto prof = gaugefields::landau_current_profile(
      cfg, integer(p, "n"), x0, num(p, "kz"), x0 - half, x0 + half, integer(p, "points"));
  Table t;
  t.columns = {"x", "rho", "j_y", "j_z"};
  for (std::size_t i = 0; i < prof.x.size(); ++i)
    t.rows.push_back({prof.x[i], prof.density[i], prof.j_y[i], prof.j_z[i]});
  return t;
}

Table run_landau_edge(const ParamMap& p) {
  gaugefields::LandauConfig cfg;
  cfg.b_field = num(p, "b");
  const double wall = num(p, "wall");
  const int levels = integer(p, "levels");
  const int steps = integer(p, "steps");
  const double x0min = num(p, "x0min"), x0max = num(p, "x0max");
  Table t;
  t.columns = {"x0"};
  for (int n = 0; n < levels; ++n) t.columns.push_back("eps_" + std::to_string(n));
  t.columns.push_back("I_y0");
  for (int s = 0; s < steps; ++s) {
    const double x0 = steps == 1 ? x0min : x0min + (x0max - x0min) * s / (steps - 1);
    auto prob = gaugefields::make_soft_wall_problem(cfg, -wall, wall, num(p, "height"),
                                                    num(p, "width"), x0, levels,
                                                    integer(p, "grid"));
    std::vector<double> row{x0};
    for (const double e : gaugefields::edge_energies(cfg, prob)) row.push_back(e);
    row.push_back(gaugefields::edge_current(cfg, prob, 0));
    t.rows.push_back(row);
  }
  return t;
}

Table run_gauge_check(const ParamMap& p) {
  const auto g =
      gaugefields::gauge_current_check(num(p, "efield"), num(p, "k"), num(p, "t"));
  Table t;
  t.columns = {"static_convective", "static_diamagnetic", "static_total",
               "tdep_convective",   "tdep_diamagnetic",   "tdep_total"};
  t.rows.push_back({g.static_gauge.convective, g.static_gauge.diamagnetic,
                    g.static_gauge.total(), g.time_dependent_gauge.convective,
                    g.time_dependent_gauge.diamagnetic, g.time_dependent_gauge.total()});
  const double dev = std::abs(g.static_gauge.total() - g.time_dependent_gauge.total());
  t.metadata.emplace_back("gauge_deviation", dev);
  t.self_check_failed = dev > 1e-14 * (1.0 + std::abs(g.static_gauge.total()));
  return t;
}

Table run_linear_well(const ParamMap& p) {
  const double eps = num(p, "energy"), slope = num(p, "slope");
  const double xmin = num(p, "xmin"), xmax = num(p, "xmax");
  const int points = integer(p, "points");
  Table t;
  t.columns = {"x", "phi"};
  for (int i = 0; i < points; ++i) {
    const double x = xmin + (xmax - xmin) * i / (points - 1);
    t.rows.push_back({x, gaugefields::linear_potential_wf(eps, slope, x)});
  }
  return t;
}

stringmodes::StringConfig string_config(const ParamMap& p) {
  const std::string b = word(p, "boundary");
  if (b != "fixed" && b != "periodic")
    throw std::invalid_argument("boundary must be 'fixed' or 'periodic'");
  return {num(p, "length"), num(p, "speed"), integer(p, "cutoff"),
          b == "fixed" ? stringmodes::Boundary::fixed : stringmodes::Boundary::periodic};
}

Table run_string_modes(const ParamMap& p) {
  Table t;
  t.columns = {"nu", "k", "omega"};
  for (const auto& m : stringmodes::mode_table(string_config(p)))
    t.rows.push_back({(double)m.index, m.k, m.omega});
  return t;
}

Table run_casimir_1d(const ParamMap& p) {
  stringmodes::StringConfig cfg{num(p, "length"), num(p, "speed"), integer(p, "cutoff"),
                                stringmodes::Boundary::fixed};
  const int steps = integer(p, "steps");
  Table t;
  t.columns = {"d", "delta_e0", "delta_e0_closed", "force"};
  for (int i = 1; i <= steps; ++i) {
    const double d = cfg.length * i / (steps + 1.0);
    const auto r = stringmodes::casimir_energy(cfg, d);
    t.rows.push_back({d, r.delta_e0, stringmodes::casimir_closed_form(cfg, d), r.force});
  }
  return t;
}

Table run_casimir_sum(const ParamMap& p) {
  const int nuc = integer(p, "nuc");
  const double value = stringmodes::casimir_regularized_sum(nuc);
  const double err = std::abs(value + 1.0 / 12.0);
  Table t;
  t.columns = {"nu_c", "value", "error"};
  t.rows.push_back({(double)nuc, value, err});
  t.metadata.emplace_back("target", -1.0 / 12.0);
  t.self_check_failed = err > num(p, "tolerance");
  return t;
}

Table run_coherent_evolve(const ParamMap& p) {
  fieldstates::CoherentState st{{num(p, "alpha_re"), num(p, "alpha_im")},
                                num(p, "omega")};
  const int steps = integer(p, "steps");
  const double t_max = num(p, "periods") * 2.0 * M_PI / st.omega;
  Table t;
  t.columns = {"t", "q0", "p0", "dq", "dp", "product"};
  for (int i = 0; i <= steps; ++i) {
    const double time = t_max * i / steps;
    const auto ev = fieldstates::coherent_evolve(st, time);
    const auto c = fieldstates::coherent_centroid(ev);
    const auto u = fieldstates::coherent_uncertainties(ev);
    t.rows.push_back({time, c.q0, c.p0, u.dq, u.dp, u.product});
  }
  return t;
}

Table run_coherent_weights(const ParamMap& p) {
  fieldstates::CoherentState st{{num(p, "alpha_re"), num(p, "alpha_im")}, 1.0};
  const auto c = fieldstates::coherent_amplitudes(st);
  Table t;
  t.columns = {"n", "weight"};
  for (std::size_t n = 0; n < c.size(); ++n)
    t.rows.push_back({(double)n, std::norm(c[n])});
  return t;
}

Table run_planck(const ParamMap& p) {
  const double temp = num(p, "temperature");
  const double lo = num(p, "numin"), hi = num(p, "numax");
  const int steps = integer(p, "steps");
  Table t;
  t.columns = {"nu", "dn"};
  for (int i = 0; i <= steps; ++i) {
    const double nu = lo + (hi - lo) * i / steps;
    t.rows.push_back({nu, fieldstates::planck_density(nu, temp)});
  }
  return t;
}

Table run_thermal(const ParamMap& p) {
  const double omega = num(p, "omega");
  const double lo = num(p, "tmin"), hi = num(p, "tmax");
  const int steps = integer(p, "steps");
  Table t;
  t.columns = {"T", "mean_n"};
  for (int i = 0; i <= steps; ++i) {
    const double temp = lo + (hi - lo) * i / steps;
    t.rows.push_back({temp, fieldstates::thermal_occupation({omega, temp})});
  }
  return t;
}

Table run_ww_decay(const ParamMap& p) {
  const auto problem = decay::flat_band(num(p, "e0"), integer(p, "levels"),
                                        num(p, "bandwidth"), num(p, "coupling"));
  const auto res = decay::analyze(problem, integer(p, "samples"));
  Table t;
  t.columns = {"t", "re_c0", "im_c0", "survival", "exponential_model"};
  for (std::size_t i = 0; i < res.times.size(); ++i)
    t.rows.push_back({res.times[i], res.survival[i].real(), res.survival[i].imag(),
                      std::norm(res.survival[i]),
                      std::exp(-res.gamma_fit * res.times[i])});
  t.metadata.emplace_back("gamma_fit", res.gamma_fit);
  t.metadata.emplace_back("gamma_golden", res.gamma_golden);
  t.metadata.emplace_back("delta_e", res.delta_e);
  t.metadata.emplace_back("revival_time", decay::revival_time(problem));
  return t;
}

Table run_ww_lineshape(const ParamMap& p) {
  const auto problem = decay::flat_band(num(p, "e0"), integer(p, "levels"),
                                        num(p, "bandwidth"), num(p, "coupling"));
  const auto ls = decay::line_shape(problem);
  Table t;
  t.columns = {"E", "strength", "lorentzian_model"};
  for (std::size_t i = 0; i < ls.energy.size(); ++i)
    t.rows.push_back({ls.energy[i], ls.strength[i], ls.lorentzian[i]});
  t.metadata.emplace_back("center", ls.center);
  t.metadata.emplace_back("fwhm", ls.fwhm);
  t.metadata.emplace_back("total_strength", ls.total_strength);
  return t;
}

fockspace::Statistics stats_of(const ParamMap& p) {
  const std::string s = word(p, "statistics");
  if (s == "boson") return fockspace::Statistics::boson;
  if (s == "fermion") return fockspace::Statistics::fermion;
  throw std::invalid_argument("statistics must be 'boson' or 'fermion'");
}

Table run_fock_spectrum(const ParamMap& p) {
  const int modes = integer(p, "modes");
  const int n = integer(p, "n");
  fockspace::OccupationBasis basis(stats_of(p), modes, fockspace::Sector::fixed_n(n), n);
  std::mt19937 rng((unsigned)integer(p, "seed"));
  std::normal_distribution<double> g;
  fockspace::ModeMatrix h(modes, std::vector<std::complex<double>>(modes, 0.0));
  for (int i = 0; i < modes; ++i)
    for (int j = i; j < modes; ++j) {
      const std::complex<double> v(g(rng), i == j ? 0.0 : g(rng));
      h[i][j] = v;
      h[j][i] = std::conj(v);
    }
  auto f = fockspace::one_body_operator(basis, h);
  Table t;
  t.columns = {"row", "col", "re", "im"};
  f.for_each([&](std::size_t r, std::size_t c, std::complex<double> v) {
    t.rows.push_back({(double)r, (double)c, v.real(), v.imag()});
  });
  t.metadata.emplace_back("dimension", (double)basis.size());
  t.metadata.emplace_back("hermiticity_deviation", f.verify_hermitian());
  return t;
}

Table run_fock_ladder(const ParamMap& p) {
  const int modes = integer(p, "modes");
  fockspace::OccupationBasis basis(stats_of(p), modes,
                                   fockspace::Sector::up_to(integer(p, "nmax")),
                                   integer(p, "cap"));
  const std::string kind = word(p, "kind");
  if (kind != "create" && kind != "annihilate")
    throw std::invalid_argument("kind must be 'create' or 'annihilate'");
  const auto op = fockspace::ladder_matrix(
      basis, integer(p, "mode"),
      kind == "create" ? fockspace::Ladder::create : fockspace::Ladder::annihilate);
  Table t;
  t.columns = {"row", "col", "re", "im"};
  op.for_each([&](std::size_t r, std::size_t c, std::complex<double> v) {
    t.rows.push_back({(double)r, (double)c, v.real(), v.imag()});
  });
  t.metadata.emplace_back("dimension", (double)basis.size());
  return t;
}

Table angular_map(const ParamMap& p, radiation::Multipole kind) {
  radiation::EmissionSpec spec;
  spec.omega = num(p, "omega");
  spec.multipole = kind;
  if (kind == radiation::Multipole::E2) {
    spec.me_tensor = {{{std::complex<double>(-1, 0), 0, 0},
                       {0, std::complex<double>(-1, 0), 0},
                       {0, 0, std::complex<double>(2, 0)}}};
  } else {
    spec.me_vector = {num(p, "dx"), num(p, "dy"), num(p, "dz")};
  }
  const int nth = integer(p, "theta_steps"), nph = integer(p, "phi_steps");
  Table t;
  t.columns = {"theta", "phi", "rate_lambda1", "rate_lambda2"};
  for (int i = 0; i <= nth; ++i)
    for (int j = 0; j < nph; ++j) {
      const double th = M_PI * i / nth, ph = 2.0 * M_PI * j / nph;
      double r1 = 0.0, r2 = 0.0;
      switch (kind) {
        case radiation::Multipole::E1:
          r1 = radiation::dipole_rate(spec, th, ph, 1);
          r2 = radiation::dipole_rate(spec, th, ph, 2);
          break;
        case radiation::Multipole::E2:
          r1 = radiation::quadrupole_rate(spec, th, ph, 1);
          r2 = radiation::quadrupole_rate(spec, th, ph, 2);
          break;
        case radiation::Multipole::M1:
          r1 = radiation::magnetic_dipole_rate(spec, th, ph, 1);
          r2 = radiation::magnetic_dipole_rate(spec, th, ph, 2);
          break;
      }
      t.rows.push_back({th, ph, r1, r2});
    }
  return t;
}

Table run_dipole_map(const ParamMap& p) { return angular_map(p, radiation::Multipole::E1); }
Table run_quadrupole_map(const ParamMap& p) {
  return angular_map(p, radiation::Multipole::E2);
}
Table run_m1_map(const ParamMap& p) { return angular_map(p, radiation::Multipole::M1); }

radiation::Multipole multipole_of(const std::string& s) {
  if (s == "e1") return radiation::Multipole::E1;
  if (s == "e2") return radiation::Multipole::E2;
  if (s == "m1") return radiation::Multipole::M1;
  throw std::invalid_argument("multipole must be e1, e2 or m1");
}

Table run_selection_rules(const ParamMap& p) {
  const auto res = radiation::selection_rules(
      multipole_of(word(p, "multipole")), integer(p, "l"), integer(p, "m"),
      integer(p, "parity_i"), integer(p, "lp"), integer(p, "mp"), integer(p, "parity_f"));
  Table t;
  t.columns = {"allowed"};
  t.rows.push_back({res.allowed ? 1.0 : 0.0});
  t.metadata.emplace_back("angular_factor_magnitude",
                          std::abs(radiation::angular_matrix_element(
                              multipole_of(word(p, "multipole")), integer(p, "l"),
                              integer(p, "m"), integer(p, "lp"), integer(p, "mp"))));
  return t;
}

Table run_hydrogen_dipole(const ParamMap& p) {
  const auto me = radiation::hydrogen_dipole_me(integer(p, "n"), integer(p, "l"),
                                                integer(p, "m"), integer(p, "np"),
                                                integer(p, "lp"), integer(p, "mp"));
  Table t;
  t.columns = {"re", "im", "magnitude"};
  t.rows.push_back({me.real(), me.imag(), std::abs(me)});
  return t;
}

Table run_recoil(const ParamMap& p) {
  const auto r = radiation::recoil_ratio(num(p, "photon_energy"), num(p, "rest_energy"));
  Table t;
  t.columns = {"energy_ratio", "velocity_ratio"};
  t.rows.push_back({r.energy_ratio, r.velocity_ratio});
  return t;
}

Table run_induced(const ParamMap& p) {
  const auto r = radiation::induced_and_absorption(num(p, "rate"), num(p, "n"));
  Table t;
  t.columns = {"induced", "total", "absorption"};
  t.rows.push_back({r.induced, r.total, r.absorption});
  return t;
}

Table run_airy(const ParamMap& p) {
  const double lo = num(p, "xmin"), hi = num(p, "xmax");
  const int steps = integer(p, "steps");
  Table t;
  t.columns = {"x", "ai"};
  for (int i = 0; i <= steps; ++i) {
    const double x = lo + (hi - lo) * i / steps;
    t.rows.push_back({x, specfun::airy_ai(x)});
  }
  return t;
}

const std::vector<Scenario>& all_scenarios() {
  static const std::vector<Scenario> scenarios = {
      {"ab-ring",
       "energy levels of a charged particle on a ring threaded by a flux",
       "E_M = (M + Phi/Phi0)^2 / (2 a^2)",
       {{"radius", "1", "ring radius a"},
        {"flux", "0.3", "flux ratio Phi/Phi0"},
        {"mmax", "5", "levels M = -mmax..mmax"}},
       run_ab_ring},
      {"ab-sector",
       "flux-independent levels of a particle confined to a ring sector",
       "E_n = pi^2 n^2 / (2 a^2 phi0^2)",
       {{"radius", "1", "ring radius a"},
        {"flux", "0.3", "flux ratio (does not enter the energies)"},
        {"opening", "3.141592653589793", "sector opening angle phi0"},
        {"nmax", "5", "number of levels"}},
       run_ab_sector},
      {"two-slit",
       "interference-pattern shift caused by an enclosed flux",
       "dy = (2 pi b / k d) Phi/Phi0",
       {{"b", "10", "slit-screen distance"},
        {"k", "50", "wave number"},
        {"d", "1", "slit separation"},
        {"flux", "0.25", "flux ratio"}},
       run_two_slit},
      {"landau-levels",
       "uniform-field single-particle spectrum",
       "E = omega_c (n + 1/2) + k_z^2/2",
       {{"b", "1", "magnetic field"},
        {"nmax", "6", "highest level"},
        {"kz", "0", "momentum along the field"}},
       run_landau_levels},
      {"landau-current",
       "current-density profile of one guiding-center state",
       "j_y = omega_c (x0 - x) rho(x), j_z = k_z rho(x)",
       {{"b", "1", "magnetic field"},
        {"n", "1", "level index"},
        {"x0", "0", "guiding center"},
        {"kz", "0.5", "momentum along the field"},
        {"halfwidth", "12", "window half-width around x0"},
        {"points", "481", "grid points"}},
       run_landau_current},
      {"landau-edge",
       "level dispersion and edge current near a soft wall",
       "deps_n/dx0 = omega_c^2 integral (x-x0) phi^2 dx",
       {{"b", "1", "magnetic field"},
        {"wall", "5", "walls at +-wall"},
        {"height", "8", "wall height"},
        {"width", "0.5", "wall softness"},
        {"x0min", "-4.5", "first guiding center"},
        {"x0max", "4.5", "last guiding center"},
        {"steps", "9", "guiding-center sweep points"},
        {"levels", "2", "levels per x0"},
        {"grid", "501", "solver grid points"}},
       run_landau_edge},
      {"gauge-check",
       "convective and diamagnetic currents in two gauges (self-check)",
       "q(hk+qEt)/m + 0 = qhk/m + q^2 E t/m",
       {{"efield", "2", "electric field"},
        {"k", "1.5", "wave number"},
        {"t", "0.7", "time"}},
       run_gauge_check},
      {"linear-well",
       "stationary state in a linear potential",
       "phi(x) ~ Ai(-(2F)^(1/3) (x + eps/F))",
       {{"slope", "1", "force F"},
        {"energy", "0", "energy eps"},
        {"xmin", "-8", "window start"},
        {"xmax", "4", "window end"},
        {"points", "241", "grid points"}},
       run_linear_well},
      {"string-modes",
       "normal-mode table of the 1D string",
       "fixed: k = pi nu/L; periodic: k = 2 pi nu/L; omega = v|k|",
       {{"length", "3.141592653589793", "string length"},
        {"speed", "1", "wave speed"},
        {"cutoff", "10", "mode cutoff nu_c"},
        {"boundary", "fixed", "fixed | periodic"}},
       run_string_modes},
      {"casimir-1d",
       "zero-point energy shift and force of a fretted string",
       "dE0 = -(pi v/24)(1/d + 1/(L-d) - 4/L)",
       {{"length", "1", "string length"},
        {"speed", "1", "wave speed"},
        {"cutoff", "10000", "soft cutoff index"},
        {"steps", "19", "d sweep points"}},
       run_casimir_1d},
      {"casimir-sum",
       "soft-cutoff regularized sum against -1/12 (self-check)",
       "sum nu exp(-nu/nu_c) - nu_c^2 -> -1/12",
       {{"nuc", "1000", "soft cutoff"},
        {"tolerance", "1e-06", "self-check tolerance"}},
       run_casimir_sum},
      {"coherent-evolve",
       "phase-space trajectory of a coherent state",
       "alpha(t) = alpha exp(-i omega t); dq dp = 1/2",
       {{"alpha_re", "1.2", "Re alpha"},
        {"alpha_im", "-0.4", "Im alpha"},
        {"omega", "1", "mode frequency"},
        {"periods", "2", "trajectory length in periods"},
        {"steps", "64", "samples"}},
       run_coherent_evolve},
      {"coherent-weights",
       "Poisson number distribution of a coherent state",
       "|c_n|^2 = exp(-|a|^2) |a|^(2n)/n!",
       {{"alpha_re", "1.3", "Re alpha"}, {"alpha_im", "0.4", "Im alpha"}},
       run_coherent_weights},
      {"planck",
       "thermal spectral density",
       "dn ~ nu^3 / (exp(nu/T) - 1)",
       {{"temperature", "1", "temperature (k_B = 1)"},
        {"numin", "0.05", "lowest frequency"},
        {"numax", "12", "highest frequency"},
        {"steps", "120", "samples"}},
       run_planck},
      {"thermal-occupation",
       "Bose-Einstein mean occupation of one mode",
       "<N> = 1/(exp(omega/T) - 1)",
       {{"omega", "1", "mode frequency"},
        {"tmin", "0.1", "lowest temperature"},
        {"tmax", "5", "highest temperature"},
        {"steps", "50", "samples"}},
       run_thermal},
      {"ww-decay",
       "discrete level decaying into a flat discretized continuum",
       "|c0(t)|^2 ~ exp(-Gamma t), Gamma = 2 pi V^2 rho",
       {{"e0", "0", "discrete level energy"},
        {"levels", "400", "continuum levels"},
        {"bandwidth", "20", "continuum bandwidth"},
        {"coupling", "0.05", "coupling V"},
        {"samples", "400", "time samples"}},
       run_ww_decay},
      {"ww-lineshape",
       "strength function of the decayed level",
       "lorentzian of width Gamma centered at E0 + dE",
       {{"e0", "0", "discrete level energy"},
        {"levels", "900", "continuum levels"},
        {"bandwidth", "24", "continuum bandwidth"},
        {"coupling", "0.05", "coupling V"}},
       run_ww_lineshape},
      {"fock-operator",
       "random hermitian one-body operator in an occupation basis",
       "F = sum h_ij adag_i a_j",
       {{"statistics", "boson", "boson | fermion"},
        {"modes", "3", "single-particle modes"},
        {"n", "2", "particle number"},
        {"seed", "1", "rng seed"}},
       run_fock_spectrum},
      {"fock-ladder",
       "coordinate-list export of a ladder operator",
       "adag|n> = sqrt(n+1)|n+1>, fermion sign (-1)^(occupied below)",
       {{"statistics", "fermion", "boson | fermion"},
        {"modes", "4", "single-particle modes"},
        {"nmax", "4", "container N_max"},
        {"cap", "1", "per-mode cap (bosons)"},
        {"mode", "1", "mode index"},
        {"kind", "create", "create | annihilate"}},
       run_fock_ladder},
      {"dipole-map",
       "electric dipole angular emission map",
       "rate ~ omega^3 |d . lambda|^2",
       {{"omega", "1", "transition frequency"},
        {"dx", "0", "Re d_x"},
        {"dy", "0", "Re d_y"},
        {"dz", "1", "Re d_z"},
        {"theta_steps", "18", "polar grid"},
        {"phi_steps", "24", "azimuthal grid"}},
       run_dipole_map},
      {"quadrupole-map",
       "electric quadrupole angular emission map (mu = 0 channel)",
       "rate_l1 ~ sin^2 theta cos^2 theta, rate_l2 = 0",
       {{"omega", "1", "transition frequency"},
        {"theta_steps", "18", "polar grid"},
        {"phi_steps", "24", "azimuthal grid"}},
       run_quadrupole_map},
      {"magnetic-dipole-map",
       "magnetic dipole angular emission map",
       "rate ~ omega^3 |M . (k x lambda)|^2",
       {{"omega", "1", "transition frequency"},
        {"dx", "0", "Re M_x"},
        {"dy", "0", "Re M_y"},
        {"dz", "1", "Re M_z"},
        {"theta_steps", "18", "polar grid"},
        {"phi_steps", "24", "azimuthal grid"}},
       run_m1_map},
      {"selection-rules",
       "multipole selection-rule query",
       "triangle with the rank, projection, parity flip (E1) / conservation (E2, M1)",
       {{"multipole", "e1", "e1 | e2 | m1"},
        {"l", "0", "initial orbital momentum"},
        {"m", "0", "initial projection"},
        {"parity_i", "1", "initial parity +-1"},
        {"lp", "1", "final orbital momentum"},
        {"mp", "0", "final projection"},
        {"parity_f", "-1", "final parity +-1"}},
       run_selection_rules},
      {"hydrogen-dipole",
       "hydrogenic dipole matrix element (n <= 4)",
       "<n'l'm'|d_mu|nlm> = radial integral x gaunt coefficient",
       {{"n", "2", "initial n"},
        {"l", "1", "initial l"},
        {"m", "0", "initial m"},
        {"np", "1", "final n"},
        {"lp", "0", "final l"},
        {"mp", "0", "final m"}},
       run_hydrogen_dipole},
      {"recoil",
       "photon-emission recoil estimates",
       "v/c = E_photon / M c^2; E_recoil/E_photon = E_photon / (2 M c^2)",
       {{"photon_energy", "10", "photon energy"},
        {"rest_energy", "1e9", "emitter rest energy"}},
       run_recoil},
      {"induced-emission",
       "induced emission and absorption bookkeeping",
       "total = (N+1) x spontaneous; absorption = induced",
       {{"rate", "1", "spontaneous rate"}, {"n", "9", "photon number"}},
       run_induced},
      {"airy",
       "Airy function table",
       "Ai''(x) = x Ai(x)",
       {{"xmin", "-10", "window start"},
        {"xmax", "5", "window end"},
        {"steps", "150", "samples"}},
       run_airy},
  };
  return scenarios;
}

}  // namespace

const std::vector<Scenario>& registry() { return all_scenarios(); }

const Scenario* find_scenario(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return &s;
  return nullptr;
}

ParamMap resolve_params(const Scenario& scenario, const ParamMap& overrides) {
  ParamMap out;
  for (const auto& p : scenario.params) out[p.name] = p.default_value;
  for (const auto& [key, value] : overrides) {
    if (out.find(key) == out.end())
      throw std::invalid_argument("unknown parameter '" + key + "' for scenario '" +
                                  scenario.name + "'");
    out[key] = value;
  }
  return out;
}

namespace {

// canonical parameter echo: numbers at 17 significant digits, words verbatim
std::string canonical(const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used == value.size()) return fmt(v);
  } catch (const std::exception&) {
  }
  return value;
}

}  // namespace

std::string render_csv(const Scenario& scenario, const ParamMap& params, const Table& table) {
  std::ostringstream os;
  os << "# scenario=" << scenario.name << " version=" << kVersion << "\n";
  os << "# formula: " << scenario.formula << "\n";
  os << "# params:";
  for (const auto& [k, v] : params) os << " " << k << "=" << canonical(v);
  os << "\n";
  for (const auto& [k, v] : table.metadata) os << "# " << k << "=" << fmt(v) << "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    os << table.columns[c] << (c + 1 < table.columns.size() ? "," : "\n");
  for (const auto& row : table.rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      os << fmt(row[c]) << (c + 1 < row.size() ? "," : "\n");
  return os.str();
}

std::string render_json(const Scenario& scenario, const ParamMap& params, const Table& table) {
  nlohmann::ordered_json j;
  j["scenario"] = scenario.name;
  j["version"] = kVersion;
  j["formula"] = scenario.formula;
  nlohmann::ordered_json jp;
  for (const auto& [k, v] : params) jp[k] = canonical(v);
  j["params"] = jp;
  nlohmann::ordered_json jm;
  for (const auto& [k, v] : table.metadata) jm[k] = v;
  j["metadata"] = jm;
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  return j.dump(2) + "\n";
}

ParamMap parse_config(const std::string& text, const std::string& scenario_name) {
  ParamMap out;
  std::istringstream is(text);
  std::string line, section;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected 'key = value', got: " + line);
    if (section == scenario_name)
      out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

int run_scenario(const std::string& name, const ParamMap& overrides,
                 const std::string& output_path, const std::string& format,
                 std::string* rendered) {
  const Scenario* scenario = find_scenario(name);
  if (!scenario) {
    std::cerr << "unknown scenario: " << name << "\n" << usage_text();
    return 2;
  }
  if (format != "csv" && format != "json") {
    std::cerr << "unknown format: " << format << "\n";
    return 2;
  }
  ParamMap params;
  Table table;
  try {
    params = resolve_params(*scenario, overrides);
    table = scenario->run(params);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  const std::string text = format == "csv" ? render_csv(*scenario, params, table)
                                           : render_json(*scenario, params, table);
  if (rendered) *rendered = text;
  if (output_path.empty()) {
    if (!rendered) std::cout << text;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write to " << output_path << "\n";
      return 4;
    }
    out << text;
    if (!out.good()) {
      std::cerr << "write failed for " << output_path << "\n";
      return 4;
    }
  }
  return table.self_check_failed ? 3 : 0;
}

std::string usage_text() {
  std::ostringstream os;
  os << "usage: qmlab <scenario> [--key value]... [--config path] [--output path]\n"
        "             [--format csv|json]\n"
        "       qmlab --list\n"
        "exit codes: 0 ok, 2 usage, 3 self-check tolerance failure, 4 unwritable output\n";
  return os.str();
}

std::string list_text() {
  std::ostringstream os;
  for (const auto& s : registry()) {
    os << s.name << " - " << s.description << "\n";
    os << "    " << s.formula << "\n";
    for (const auto& p : s.params)
      os << "    --" << p.name << " (default " << p.default_value << "): " << p.description
         << "\n";
  }
  os << registry().size() << " scenarios\n";
  return os.str();
}

}  // namespace qmlab::cli
