#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace qmlab::stringmodes {

enum class Boundary { fixed, periodic };

struct StringConfig {
  double length = 1.0;
  double speed = 1.0;
  int cutoff_index = 1;  // nu_c
  Boundary boundary = Boundary::fixed;
};

struct Mode {
  int index;  // nu; signed for periodic strings
  double k;
  double omega;
};

// fixed: nu = 1..nu_c with k = pi nu / L; periodic: nu = +-1..+-nu_c with
// k = 2 pi nu / L; omega = v |k|.
std::vector<Mode> mode_table(const StringConfig& cfg);

// One standing-wave pair (q1,p1,q2,p2) <-> the traveling pair
// (Q_k, P_k, Q_-k, P_-k) at frequency omega.  Linear and canonical.
struct TravelingVars {
  double q_plus, p_plus, q_minus, p_minus;
};
struct StandingVars {
  double q1, p1, q2, p2;
};
TravelingVars traveling_transform(const StandingVars& s, double omega);
StandingVars traveling_transform_inverse(const TravelingVars& t, double omega);
// Jacobian of the standing -> traveling map in (q1,p1,q2,p2) ordering.
std::array<std::array<double, 4>, 4> traveling_jacobian(double omega);

struct ModeOccupation {
  std::map<int, int> occupations;  // mode index -> N
};

struct QuantaSpectrum {
  double energy = 0.0;
  std::optional<double> momentum;  // absent for fixed ends
};
QuantaSpectrum quanta_spectrum(const StringConfig& cfg, const ModeOccupation& occ);
double quanta_momentum(const StringConfig& cfg, const ModeOccupation& occ);

// Soft-cutoff regularized sum: sum_nu nu exp(-nu/nu_c) minus the nu_c^2
// leading term; converges to -1/12.
double casimir_regularized_sum(int nu_c);
// Closed form of the same sum, exp(-a)/(1-exp(-a))^2 at a = 1/nu_c.
double casimir_sum_closed_form(int nu_c);

struct CasimirResult {
  double delta_e0;  // E0(d) - E0(L/2)
  double force;     // -d(deltaE0)/dd by central difference
};
CasimirResult casimir_energy(const StringConfig& cfg, double d);
// Closed form -(pi v / 24)(1/d + 1/(L-d) - 4/L).
double casimir_closed_form(const StringConfig& cfg, double d);
// Hard-cutoff variant kept for contrast with the soft regulator.
double casimir_energy_hard_cutoff(const StringConfig& cfg, double d);

struct ActionAngle {
  double action;
  double angle;
};
ActionAngle action_angle(double q, double p, double omega);

// Mode-nu ground-state variance <Q_nu^2> = hbar / 2 omega_nu (hbar = 1).
double ground_state_mode_variance(const StringConfig& cfg, int nu);

}  // namespace qmlab::stringmodes
