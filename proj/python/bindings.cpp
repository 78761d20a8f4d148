#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmlab/decay.hpp"
#include "qmlab/fieldstates.hpp"
#include "qmlab/fockspace.hpp"
#include "qmlab/gaugefields.hpp"
#include "qmlab/radiation.hpp"
#include "qmlab/scenarios.hpp"
#include "qmlab/specfun.hpp"
#include "qmlab/stringmodes.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

using cplx = std::complex<double>;

namespace {

qmlab::fockspace::Statistics stats_of(const std::string& s) {
  if (s == "boson") return qmlab::fockspace::Statistics::boson;
  if (s == "fermion") return qmlab::fockspace::Statistics::fermion;
  throw std::invalid_argument("statistics must be 'boson' or 'fermion'");
}

qmlab::radiation::Multipole multipole_of(const std::string& s) {
  if (s == "e1" || s == "E1") return qmlab::radiation::Multipole::E1;
  if (s == "e2" || s == "E2") return qmlab::radiation::Multipole::E2;
  if (s == "m1" || s == "M1") return qmlab::radiation::Multipole::M1;
  throw std::invalid_argument("multipole must be E1, E2 or M1");
}

std::vector<std::tuple<std::size_t, std::size_t, cplx>> entries_of(
    const qmlab::fockspace::SparseOperator& op) {
  std::vector<std::tuple<std::size_t, std::size_t, cplx>> out;
  op.for_each([&](std::size_t r, std::size_t c, cplx v) { out.emplace_back(r, c, v); });
  return out;
}

}  // namespace

PYBIND11_MODULE(_qmlab, m) {
  m.doc() =
      "Numerical workbench for gauge-field quantum mechanics, string quanta, "
      "Fock-space operator algebra, field states, spontaneous decay and "
      "multipole radiation";

  // ---- special functions ----
  m.def("airy_ai", &qmlab::specfun::airy_ai, "x"_a);
  m.def(
      "oscillator_wf",
      [](int n, double length_scale, double x) {
        return qmlab::specfun::oscillator_wf({n, length_scale}, x);
      },
      "n"_a, "length_scale"_a, "x"_a);
  m.def(
      "clebsch_gordan",
      [](int tj1, int tm1, int tj2, int tm2, int tj, int tm) {
        return qmlab::specfun::clebsch_gordan({tj1, tm1}, {tj2, tm2}, {tj, tm});
      },
      "twice_j1"_a, "twice_m1"_a, "twice_j2"_a, "twice_m2"_a, "twice_j"_a, "twice_m"_a,
      "Clebsch-Gordan coefficient <J M|j1 m1, j2 m2> with doubled arguments");
  m.def("gaunt", &qmlab::specfun::gaunt, "L"_a, "M"_a, "l1"_a, "m1"_a, "l2"_a, "m2"_a);
  m.def("lande_g", &qmlab::specfun::lande_g, "twice_j"_a, "twice_l"_a, "twice_s"_a);
  m.def("ylm", &qmlab::specfun::ylm, "l"_a, "m"_a, "theta"_a, "phi"_a);

  // ---- gauge fields ----
  py::class_<qmlab::gaugefields::LandauConfig>(m, "LandauConfig")
      .def(py::init([](double b, double ly, double lz, int sign) {
             return qmlab::gaugefields::LandauConfig{b, ly, lz, sign};
           }),
           "b_field"_a = 1.0, "l_y"_a = 1.0, "l_z"_a = 1.0, "charge_sign"_a = 1)
      .def_readwrite("b_field", &qmlab::gaugefields::LandauConfig::b_field)
      .def_readwrite("l_y", &qmlab::gaugefields::LandauConfig::l_y)
      .def("magnetic_length", &qmlab::gaugefields::LandauConfig::magnetic_length)
      .def("guiding_center_spacing",
           &qmlab::gaugefields::LandauConfig::guiding_center_spacing);
  m.def("landau_energy", &qmlab::gaugefields::landau_energy, "cfg"_a, "n"_a, "k_z"_a);
  m.def("landau_wf", &qmlab::gaugefields::landau_wf, "cfg"_a, "n"_a, "x0"_a, "x"_a);
  m.def(
      "ab_ring_spectrum",
      [](double radius, double flux_ratio, int m_range) {
        return qmlab::gaugefields::ab_ring_spectrum({radius, flux_ratio, m_range});
      },
      "radius"_a, "flux_ratio"_a, "m_range"_a);
  m.def(
      "ab_sector_spectrum",
      [](double radius, double flux_ratio, int n_levels, double opening) {
        return qmlab::gaugefields::ab_sector_spectrum({radius, flux_ratio, n_levels},
                                                      opening);
      },
      "radius"_a, "flux_ratio"_a, "n_levels"_a, "opening"_a);
  m.def("two_slit_shift", &qmlab::gaugefields::two_slit_shift, "b"_a, "k"_a, "d"_a,
        "flux_ratio"_a);
  m.def(
      "gauge_current_check",
      [](double e, double k, double t) {
        const auto g = qmlab::gaugefields::gauge_current_check(e, k, t);
        return py::dict("static_convective"_a = g.static_gauge.convective,
                        "static_diamagnetic"_a = g.static_gauge.diamagnetic,
                        "tdep_convective"_a = g.time_dependent_gauge.convective,
                        "tdep_diamagnetic"_a = g.time_dependent_gauge.diamagnetic,
                        "static_total"_a = g.static_gauge.total(),
                        "tdep_total"_a = g.time_dependent_gauge.total());
      },
      "e_field"_a, "k"_a, "t"_a);
  m.def("linear_potential_wf", &qmlab::gaugefields::linear_potential_wf, "eps"_a,
        "f_slope"_a, "x"_a);

  // ---- string modes ----
  m.def(
      "string_mode_table",
      [](double length, double speed, int cutoff, const std::string& boundary) {
        const auto b = boundary == "periodic" ? qmlab::stringmodes::Boundary::periodic
                                              : qmlab::stringmodes::Boundary::fixed;
        std::vector<std::tuple<int, double, double>> out;
        for (const auto& mode :
             qmlab::stringmodes::mode_table({length, speed, cutoff, b}))
          out.emplace_back(mode.index, mode.k, mode.omega);
        return out;
      },
      "length"_a, "speed"_a, "cutoff"_a, "boundary"_a = "fixed");
  m.def("casimir_regularized_sum", &qmlab::stringmodes::casimir_regularized_sum, "nu_c"_a);
  m.def(
      "casimir_energy",
      [](double length, double speed, int cutoff, double d) {
        const auto r = qmlab::stringmodes::casimir_energy(
            {length, speed, cutoff, qmlab::stringmodes::Boundary::fixed}, d);
        return std::make_pair(r.delta_e0, r.force);
      },
      "length"_a, "speed"_a, "cutoff"_a, "d"_a,
      "returns (delta_E0, force) of the fretted string");
  m.def(
      "action_angle",
      [](double q, double p, double omega) {
        const auto aa = qmlab::stringmodes::action_angle(q, p, omega);
        return std::make_pair(aa.action, aa.angle);
      },
      "q"_a, "p"_a, "omega"_a);

  // ---- fock space ----
  py::class_<qmlab::fockspace::OccupationBasis>(m, "OccupationBasis")
      .def(py::init([](const std::string& statistics, int n_modes, int fixed_n, int cap) {
             return qmlab::fockspace::OccupationBasis(
                 stats_of(statistics), n_modes, qmlab::fockspace::Sector::fixed_n(fixed_n),
                 cap);
           }),
           "statistics"_a, "n_modes"_a, "fixed_n"_a, "cap"_a = -1)
      .def_static(
          "up_to",
          [](const std::string& statistics, int n_modes, int n_max, int cap) {
            return qmlab::fockspace::OccupationBasis(
                stats_of(statistics), n_modes, qmlab::fockspace::Sector::up_to(n_max), cap);
          },
          "statistics"_a, "n_modes"_a, "n_max"_a, "cap"_a = -1)
      .def("__len__", &qmlab::fockspace::OccupationBasis::size)
      .def("state", &qmlab::fockspace::OccupationBasis::state, "index"_a)
      .def(
          "index_of",
          [](const qmlab::fockspace::OccupationBasis& b, const std::vector<int>& occ)
              -> py::object {
            const auto idx = b.index_of(occ);
            if (!idx) return py::none();
            return py::int_(*idx);
          },
          "occupation"_a);

  py::class_<qmlab::fockspace::SparseOperator>(m, "SparseOperator")
      .def_property_readonly("shape",
                             [](const qmlab::fockspace::SparseOperator& op) {
                               return std::make_pair(op.rows(), op.cols());
                             })
      .def("nnz", &qmlab::fockspace::SparseOperator::nnz)
      .def("coeff", &qmlab::fockspace::SparseOperator::coeff, "row"_a, "col"_a)
      .def("entries", &entries_of, "coordinate list of (row, col, value)")
      .def("max_abs", &qmlab::fockspace::SparseOperator::max_abs)
      .def("__matmul__",
           [](const qmlab::fockspace::SparseOperator& a,
              const qmlab::fockspace::SparseOperator& b) { return a * b; })
      .def("__add__",
           [](const qmlab::fockspace::SparseOperator& a,
              const qmlab::fockspace::SparseOperator& b) { return a + b; })
      .def("__sub__",
           [](const qmlab::fockspace::SparseOperator& a,
              const qmlab::fockspace::SparseOperator& b) { return a - b; })
      .def("adjoint", &qmlab::fockspace::SparseOperator::adjoint);

  m.def(
      "ladder_matrix",
      [](const qmlab::fockspace::OccupationBasis& basis, int mode, const std::string& kind) {
        return qmlab::fockspace::ladder_matrix(basis, mode,
                                               kind == "create"
                                                   ? qmlab::fockspace::Ladder::create
                                                   : qmlab::fockspace::Ladder::annihilate);
      },
      "basis"_a, "mode"_a, "kind"_a);
  m.def("commutator_check", &qmlab::fockspace::commutator_check, "basis"_a, "i"_a, "j"_a);
  m.def("one_body_operator", &qmlab::fockspace::one_body_operator, "basis"_a, "h"_a);
  m.def(
      "two_body_operator",
      [](const qmlab::fockspace::OccupationBasis& basis,
         const std::vector<std::vector<std::vector<std::vector<cplx>>>>& v) {
        const int modes = basis.n_modes();
        qmlab::fockspace::TwoBodyTensor tensor(modes);
        if ((int)v.size() != modes)
          throw std::invalid_argument("tensor must be modes^4");
        for (int i = 0; i < modes; ++i)
          for (int j = 0; j < modes; ++j)
            for (int k = 0; k < modes; ++k)
              for (int l = 0; l < modes; ++l) tensor.at(i, j, k, l) = v[i][j][k][l];
        return qmlab::fockspace::two_body_operator(basis, tensor);
      },
      "basis"_a, "tensor"_a);
  m.def("number_operator", &qmlab::fockspace::number_operator, "basis"_a);
  m.def("u1_phase_check", &qmlab::fockspace::u1_phase_check, "basis"_a, "mode"_a,
        "alpha"_a);

  // ---- field states ----
  m.def(
      "coherent_amplitudes",
      [](cplx alpha, double omega) {
        return qmlab::fieldstates::coherent_amplitudes({alpha, omega});
      },
      "alpha"_a, "omega"_a = 1.0);
  m.def(
      "coherent_evolve",
      [](cplx alpha, double omega, double t) {
        return qmlab::fieldstates::coherent_evolve({alpha, omega}, t).alpha;
      },
      "alpha"_a, "omega"_a, "t"_a);
  m.def(
      "coherent_centroid",
      [](cplx alpha, double omega) {
        const auto c = qmlab::fieldstates::coherent_centroid({alpha, omega});
        return std::make_pair(c.q0, c.p0);
      },
      "alpha"_a, "omega"_a = 1.0);
  m.def(
      "coherent_uncertainties",
      [](cplx alpha, double omega) {
        const auto u = qmlab::fieldstates::coherent_uncertainties({alpha, omega});
        return std::make_tuple(u.dq, u.dp, u.product);
      },
      "alpha"_a, "omega"_a = 1.0);
  m.def(
      "number_state_uncertainties",
      [](int n, double omega) {
        const auto u = qmlab::fieldstates::number_state_uncertainties(n, omega);
        return std::make_tuple(u.dq, u.dp, u.product);
      },
      "n"_a, "omega"_a = 1.0);
  m.def("coherent_overlap", &qmlab::fieldstates::overlap, "alpha"_a, "beta"_a);
  m.def(
      "thermal_occupation",
      [](double omega, double temperature) {
        return qmlab::fieldstates::thermal_occupation({omega, temperature});
      },
      "omega"_a, "temperature"_a);
  m.def("planck_density", &qmlab::fieldstates::planck_density, "nu"_a, "temperature"_a);

  // ---- decay ----
  py::class_<qmlab::decay::DecayProblem>(m, "DecayProblem")
      .def_static("flat_band", &qmlab::decay::flat_band, "e0"_a, "levels"_a, "bandwidth"_a,
                  "coupling"_a)
      .def_static("gaussian_band", &qmlab::decay::gaussian_band, "e0"_a, "levels"_a,
                  "bandwidth"_a, "peak_coupling"_a, "profile_width"_a)
      .def_readwrite("e0", &qmlab::decay::DecayProblem::e0)
      .def("bandwidth", &qmlab::decay::DecayProblem::bandwidth)
      .def("spacing", &qmlab::decay::DecayProblem::spacing);
  m.def(
      "golden_rule",
      [](const qmlab::decay::DecayProblem& p) {
        const auto r = qmlab::decay::golden_rule(p);
        return std::make_pair(r.gamma, r.delta_e);
      },
      "problem"_a, "returns (gamma, delta_e)");
  m.def("survival_amplitude",
        py::overload_cast<const qmlab::decay::DecayProblem&, const std::vector<double>&>(
            &qmlab::decay::survival_amplitude),
        "problem"_a, "times"_a);
  m.def("revival_time", &qmlab::decay::revival_time, "problem"_a);
  m.def(
      "analyze_decay",
      [](const qmlab::decay::DecayProblem& p, int samples) {
        const auto r = qmlab::decay::analyze(p, samples);
        return py::dict("gamma_fit"_a = r.gamma_fit, "gamma_golden"_a = r.gamma_golden,
                        "delta_e"_a = r.delta_e, "times"_a = r.times,
                        "survival"_a = r.survival);
      },
      "problem"_a, "samples"_a = 400);
  m.def(
      "line_shape",
      [](const qmlab::decay::DecayProblem& p) {
        const auto r = qmlab::decay::line_shape(p);
        return py::dict("energy"_a = r.energy, "strength"_a = r.strength,
                        "lorentzian"_a = r.lorentzian, "center"_a = r.center,
                        "fwhm"_a = r.fwhm, "total_strength"_a = r.total_strength);
      },
      "problem"_a);

  // ---- radiation ----
  m.def(
      "polarization_basis",
      [](double theta, double phi) {
        const auto b = qmlab::radiation::polarization_basis(theta, phi);
        return py::dict("k"_a = b.k_hat, "lambda1"_a = b.lambda1, "lambda2"_a = b.lambda2);
      },
      "theta"_a, "phi"_a);
  m.def(
      "dipole_rate",
      [](double omega, const qmlab::radiation::Vec3c& d, double theta, double phi,
         int alpha) {
        qmlab::radiation::EmissionSpec spec;
        spec.omega = omega;
        spec.multipole = qmlab::radiation::Multipole::E1;
        spec.me_vector = d;
        return qmlab::radiation::dipole_rate(spec, theta, phi, alpha);
      },
      "omega"_a, "d"_a, "theta"_a, "phi"_a, "alpha"_a);
  m.def(
      "magnetic_dipole_rate",
      [](double omega, const qmlab::radiation::Vec3c& mvec, double theta, double phi,
         int alpha) {
        qmlab::radiation::EmissionSpec spec;
        spec.omega = omega;
        spec.multipole = qmlab::radiation::Multipole::M1;
        spec.me_vector = mvec;
        return qmlab::radiation::magnetic_dipole_rate(spec, theta, phi, alpha);
      },
      "omega"_a, "m"_a, "theta"_a, "phi"_a, "alpha"_a);
  m.def(
      "quadrupole_rate",
      [](double omega, const std::vector<std::vector<cplx>>& q, double theta, double phi,
         int alpha) {
        qmlab::radiation::EmissionSpec spec;
        spec.omega = omega;
        spec.multipole = qmlab::radiation::Multipole::E2;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) spec.me_tensor[i][j] = q.at(i).at(j);
        return qmlab::radiation::quadrupole_rate(spec, theta, phi, alpha);
      },
      "omega"_a, "q"_a, "theta"_a, "phi"_a, "alpha"_a);
  m.def(
      "selection_rules",
      [](const std::string& multipole, int l, int m, int parity_i, int lp, int mp,
         int parity_f) {
        const auto r = qmlab::radiation::selection_rules(multipole_of(multipole), l, m,
                                                         parity_i, lp, mp, parity_f);
        return std::make_pair(r.allowed, r.reason);
      },
      "multipole"_a, "l"_a, "m"_a, "parity_i"_a, "lp"_a, "mp"_a, "parity_f"_a);
  m.def(
      "angular_matrix_element",
      [](const std::string& multipole, int l, int m, int lp, int mp) {
        return qmlab::radiation::angular_matrix_element(multipole_of(multipole), l, m, lp,
                                                        mp);
      },
      "multipole"_a, "l"_a, "m"_a, "lp"_a, "mp"_a);
  m.def("hydrogen_dipole_me", &qmlab::radiation::hydrogen_dipole_me, "n"_a, "l"_a, "m"_a,
        "np"_a, "lp"_a, "mp"_a);
  m.def("hydrogen_radial_integral", &qmlab::radiation::hydrogen_radial_integral, "n"_a,
        "l"_a, "np"_a, "lp"_a);
  m.def(
      "induced_and_absorption",
      [](double spontaneous, double n) {
        const auto r = qmlab::radiation::induced_and_absorption(spontaneous, n);
        return std::make_tuple(r.induced, r.total, r.absorption);
      },
      "spontaneous_rate"_a, "n_photons"_a);
  m.def(
      "recoil_ratio",
      [](double photon_energy, double rest_energy) {
        const auto r = qmlab::radiation::recoil_ratio(photon_energy, rest_energy);
        return std::make_pair(r.energy_ratio, r.velocity_ratio);
      },
      "photon_energy"_a, "rest_energy"_a);
  m.def("multipole_amplitude", &qmlab::radiation::multipole_amplitude, "L"_a, "M"_a, "l"_a,
        "theta"_a, "phi"_a, "alpha"_a);

  // ---- scenario runner ----
  m.def(
      "run_scenario",
      [](const std::string& name, const std::map<std::string, std::string>& params,
         const std::string& format) {
        std::string rendered;
        const int rc = qmlab::cli::run_scenario(name, params, "", format, &rendered);
        return std::make_pair(rc, rendered);
      },
      "name"_a, "params"_a = std::map<std::string, std::string>{}, "format"_a = "csv",
      "run a registered scenario; returns (exit_code, rendered_output)");
  m.def("list_scenarios", [] {
    std::vector<std::string> names;
    for (const auto& s : qmlab::cli::registry()) names.push_back(s.name);
    return names;
  });
}
