#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "qmlab/sparse_operator.hpp"

namespace qmlab::fockspace {

enum class Statistics { boson, fermion };

// Particle-number sector: a single fixed N or all N <= N_max.
struct Sector {
  bool fixed = true;
  int value = 0;
  static Sector fixed_n(int n) { return {true, n}; }
  static Sector up_to(int n_max) { return {false, n_max}; }
};

// Enumerated many-body basis with deterministic lexicographic ordering.
class OccupationBasis {
 public:
  OccupationBasis(Statistics statistics, int n_modes, Sector sector,
                  int per_mode_cap = -1);

  Statistics statistics() const { return statistics_; }
  int n_modes() const { return n_modes_; }
  Sector sector() const { return sector_; }
  int per_mode_cap() const { return cap_; }

  std::size_t size() const { return states_.size(); }
  const std::vector<int>& state(std::size_t index) const { return states_.at(index); }
  std::optional<std::size_t> index_of(const std::vector<int>& occupation) const;
  int total_number(std::size_t index) const;

 private:
  Statistics statistics_;
  int n_modes_;
  Sector sector_;
  int cap_;
  std::vector<std::vector<int>> states_;
  std::map<std::vector<int>, std::size_t> index_;
};

enum class Ladder { create, annihilate };

// Square ladder operator on a multi-sector basis; throws if the target
// sector is absent (fixed-N container).
SparseOperator ladder_matrix(const OccupationBasis& basis, int mode, Ladder kind);
// Rectangular block mapping src -> dst between two fixed-N sectors.
SparseOperator ladder_matrix(const OccupationBasis& dst, const OccupationBasis& src,
                             int mode, Ladder kind);

// Max deviation of [a_i, a_j^dag] - delta_ij (bosons, on the cap-safe
// subspace) or {a_i, a_j^dag} - delta_ij (fermions, everywhere).
double commutator_check(const OccupationBasis& basis, int i, int j);

using ModeMatrix = std::vector<std::vector<std::complex<double>>>;

// F = sum_ij h_ij adag_i a_j.
SparseOperator one_body_operator(const OccupationBasis& basis, const ModeMatrix& h);

// Two-body mode tensor <ij|V|kl>, flat index ((i*M + j)*M + k)*M + l.
class TwoBodyTensor {
 public:
  explicit TwoBodyTensor(int n_modes);
  std::complex<double>& at(int i, int j, int k, int l);
  std::complex<double> at(int i, int j, int k, int l) const;
  int n_modes() const { return n_modes_; }

 private:
  int n_modes_;
  std::vector<std::complex<double>> data_;
};

// F = 1/2 sum <ij|V|kl> adag_i adag_j a_l a_k  (note the a_l a_k order).
SparseOperator two_body_operator(const OccupationBasis& basis, const TwoBodyTensor& v);

SparseOperator number_operator(const OccupationBasis& basis);

// Max deviation of exp(-i alpha N) a_mode exp(i alpha N) - exp(i alpha) a_mode.
double u1_phase_check(const OccupationBasis& basis, int mode, double alpha);

// Dense (anti)symmetrized amplitude tensor over (mode)^N; the brute-force
// first-quantized partner of a Fock state.  Size-guarded to N <= 4, modes <= 6.
class FirstQuantizedState {
 public:
  static FirstQuantizedState from_occupation(Statistics statistics, int n_modes,
                                             const std::vector<int>& occupation);

  int n_particles() const { return n_particles_; }
  int n_modes() const { return n_modes_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amp_; }

  // <this| sum_a h^(a) |ket>
  std::complex<double> one_body_matrix_element(const FirstQuantizedState& ket,
                                               const ModeMatrix& h) const;
  // <this| 1/2 sum_{a != b} f^(ab) |ket>
  std::complex<double> two_body_matrix_element(const FirstQuantizedState& ket,
                                               const TwoBodyTensor& v) const;

 private:
  FirstQuantizedState(Statistics s, int n_modes, int n_particles);
  Statistics statistics_;
  int n_modes_;
  int n_particles_;
  std::vector<std::complex<double>> amp_;
};

}  // namespace qmlab::fockspace
