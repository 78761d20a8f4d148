#include "qmlab/fockspace.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace qmlab::fockspace {

// ---------------------------------------------------------------------------
// SparseOperator

SparseOperator::SparseOperator(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

SparseOperator SparseOperator::identity(std::size_t n) {
  std::vector<Triplet> t;
  t.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t.emplace_back(i, i, 1.0);
  return from_triplets(n, n, std::move(t));
}

SparseOperator SparseOperator::from_triplets(std::size_t rows, std::size_t cols,
                                             std::vector<Triplet> triplets) {
  SparseOperator m(rows, cols);
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return std::get<1>(a) < std::get<1>(b);
  });
  for (std::size_t i = 0; i < triplets.size();) {
    const auto row = std::get<0>(triplets[i]);
    const auto col = std::get<1>(triplets[i]);
    if (row >= rows || col >= cols)
      throw std::invalid_argument("SparseOperator: triplet out of range");
    value_type v = 0.0;
    while (i < triplets.size() && std::get<0>(triplets[i]) == row &&
           std::get<1>(triplets[i]) == col)
      v += std::get<2>(triplets[i++]);
    if (v != value_type(0.0)) {
      m.col_idx_.push_back(col);
      m.vals_.push_back(v);
      ++m.row_ptr_[row + 1];
    }
  }
  for (std::size_t r = 0; r < rows; ++r) m.row_ptr_[r + 1] += m.row_ptr_[r];
  return m;
}

SparseOperator::value_type SparseOperator::coeff(std::size_t row, std::size_t col) const {
  for (std::size_t k = row_ptr_[row]; k < row_ptr_[row + 1]; ++k)
    if (col_idx_[k] == col) return vals_[k];
  return 0.0;
}

SparseOperator SparseOperator::operator+(const SparseOperator& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("SparseOperator: shape mismatch in +");
  std::vector<Triplet> t;
  t.reserve(nnz() + other.nnz());
  for_each([&](std::size_t r, std::size_t c, value_type v) { t.emplace_back(r, c, v); });
  other.for_each([&](std::size_t r, std::size_t c, value_type v) { t.emplace_back(r, c, v); });
  return from_triplets(rows_, cols_, std::move(t));
}

SparseOperator SparseOperator::operator-(const SparseOperator& other) const {
  return *this + other.scaled(-1.0);
}

SparseOperator SparseOperator::operator*(const SparseOperator& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("SparseOperator: shape mismatch in *");
  std::vector<Triplet> t;
  std::vector<value_type> acc(other.cols_, 0.0);
  std::vector<std::size_t> touched;
  for (std::size_t r = 0; r < rows_; ++r) {
    touched.clear();
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      const std::size_t mid = col_idx_[k];
      const value_type v = vals_[k];
      for (std::size_t k2 = other.row_ptr_[mid]; k2 < other.row_ptr_[mid + 1]; ++k2) {
        if (acc[other.col_idx_[k2]] == value_type(0.0)) touched.push_back(other.col_idx_[k2]);
        acc[other.col_idx_[k2]] += v * other.vals_[k2];
      }
    }
    for (const std::size_t c : touched) {
      if (acc[c] != value_type(0.0)) t.emplace_back(r, c, acc[c]);
      acc[c] = 0.0;
    }
  }
  return from_triplets(rows_, other.cols_, std::move(t));
}

SparseOperator SparseOperator::scaled(value_type factor) const {
  SparseOperator m = *this;
  m.hermitian_verified_ = false;
  for (auto& v : m.vals_) v *= factor;
  return m;
}

SparseOperator SparseOperator::adjoint() const {
  std::vector<Triplet> t;
  t.reserve(nnz());
  for_each([&](std::size_t r, std::size_t c, value_type v) {
    t.emplace_back(c, r, std::conj(v));
  });
  return from_triplets(cols_, rows_, std::move(t));
}

void SparseOperator::apply(const std::vector<value_type>& in,
                           std::vector<value_type>& out) const {
  if (in.size() != cols_) throw std::invalid_argument("SparseOperator: vector size mismatch");
  out.assign(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      out[r] += vals_[k] * in[col_idx_[k]];
}

double SparseOperator::max_abs() const {
  double m = 0.0;
  for (const auto& v : vals_) m = std::max(m, std::abs(v));
  return m;
}

double SparseOperator::verify_hermitian(double tol) {
  const double dev = (*this - adjoint()).max_abs();
  hermitian_verified_ = rows_ == cols_ && dev <= tol;
  return dev;
}

void SparseOperator::for_each(
    const std::function<void(std::size_t, std::size_t, value_type)>& f) const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) f(r, col_idx_[k], vals_[k]);
}

void SparseOperator::write_coordinate_list(std::ostream& os) const {
  for_each([&](std::size_t r, std::size_t c, value_type v) {
    char line[80];
    std::snprintf(line, sizeof(line), "%zu %zu %.17g %.17g\n", r, c, v.real(), v.imag());
    os << line;
  });
}

// ---------------------------------------------------------------------------
// OccupationBasis

OccupationBasis::OccupationBasis(Statistics statistics, int n_modes, Sector sector,
                                 int per_mode_cap)
    : statistics_(statistics), n_modes_(n_modes), sector_(sector), cap_(per_mode_cap) {
  if (n_modes < 1) throw std::invalid_argument("OccupationBasis: need n_modes >= 1");
  if (sector.value < 0) throw std::invalid_argument("OccupationBasis: negative sector");
  if (statistics == Statistics::fermion) {
    cap_ = 1;
    if (sector.fixed && sector.value > n_modes)
      throw std::invalid_argument("OccupationBasis: fermion N exceeds mode count");
  } else {
    if (cap_ < 0) cap_ = sector.value;  // default: no truncation below the sector bound
    if (sector.fixed && sector.value > cap_ * n_modes)
      throw std::invalid_argument("OccupationBasis: boson sector infeasible under the cap");
  }

  // lexicographic odometer enumeration
  std::vector<int> occ(n_modes, 0);
  auto total = [&] {
    int t = 0;
    for (int v : occ) t += v;
    return t;
  };
  while (true) {
    const int t = total();
    const bool keep = sector_.fixed ? (t == sector_.value) : (t <= sector_.value);
    if (keep) {
      index_[occ] = states_.size();
      states_.push_back(occ);
    }
    int pos = n_modes - 1;
    while (pos >= 0 && occ[pos] == cap_) occ[pos--] = 0;
    if (pos < 0) break;
    ++occ[pos];
    if (states_.size() > 5'000'000)
      throw std::invalid_argument("OccupationBasis: basis too large");
  }
}

std::optional<std::size_t> OccupationBasis::index_of(const std::vector<int>& occupation) const {
  const auto it = index_.find(occupation);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int OccupationBasis::total_number(std::size_t index) const {
  int t = 0;
  for (int v : states_.at(index)) t += v;
  return t;
}

// ---------------------------------------------------------------------------
// ladder operators

namespace {

// Amplitude and target occupation for a single ladder application; returns
// false when the result vanishes (Pauli, empty mode) or exceeds the cap.
bool apply_ladder(Statistics stat, int cap, std::vector<int>& occ, int mode, Ladder kind,
                  double& amp) {
  const int n = occ[mode];
  if (stat == Statistics::fermion) {
    int swaps = 0;
    for (int j = 0; j < mode; ++j) swaps += occ[j];
    const double sign = (swaps % 2 ? -1.0 : 1.0);
    if (kind == Ladder::annihilate) {
      if (n == 0) return false;
      occ[mode] = 0;
      amp *= sign;
    } else {
      if (n == 1) return false;  // Pauli exclusion
      occ[mode] = 1;
      amp *= sign;
    }
  } else {
    if (kind == Ladder::annihilate) {
      if (n == 0) return false;
      occ[mode] = n - 1;
      amp *= std::sqrt((double)n);
    } else {
      if (n + 1 > cap) return false;  // truncation
      occ[mode] = n + 1;
      amp *= std::sqrt(n + 1.0);
    }
  }
  return true;
}

}  // namespace

SparseOperator ladder_matrix(const OccupationBasis& basis, int mode, Ladder kind) {
  if (mode < 0 || mode >= basis.n_modes())
    throw std::invalid_argument("ladder_matrix: mode out of range");
  if (basis.sector().fixed)
    throw std::invalid_argument(
        "ladder_matrix: target sector absent from a fixed-N basis; use the two-basis overload");
  std::vector<SparseOperator::Triplet> t;
  for (std::size_t s = 0; s < basis.size(); ++s) {
    std::vector<int> occ = basis.state(s);
    double amp = 1.0;
    if (!apply_ladder(basis.statistics(), basis.per_mode_cap(), occ, mode, kind, amp))
      continue;
    const auto dst = basis.index_of(occ);
    if (!dst) continue;  // N_max boundary of the container
    t.emplace_back(*dst, s, amp);
  }
  return SparseOperator::from_triplets(basis.size(), basis.size(), std::move(t));
}

SparseOperator ladder_matrix(const OccupationBasis& dst, const OccupationBasis& src,
                             int mode, Ladder kind) {
  if (mode < 0 || mode >= src.n_modes())
    throw std::invalid_argument("ladder_matrix: mode out of range");
  if (dst.n_modes() != src.n_modes() || dst.statistics() != src.statistics())
    throw std::invalid_argument("ladder_matrix: incompatible bases");
  if (!dst.sector().fixed || !src.sector().fixed)
    throw std::invalid_argument("ladder_matrix: two-basis overload expects fixed-N sectors");
  const int expected = src.sector().value + (kind == Ladder::create ? 1 : -1);
  if (dst.sector().value != expected)
    throw std::invalid_argument("ladder_matrix: destination sector mismatch");
  std::vector<SparseOperator::Triplet> t;
  for (std::size_t s = 0; s < src.size(); ++s) {
    std::vector<int> occ = src.state(s);
    double amp = 1.0;
    if (!apply_ladder(src.statistics(), src.per_mode_cap(), occ, mode, kind, amp)) continue;
    const auto d = dst.index_of(occ);
    if (!d) continue;
    t.emplace_back(*d, s, amp);
  }
  return SparseOperator::from_triplets(dst.size(), src.size(), std::move(t));
}

namespace {

// One two-operator string applied to an occupation vector, with the boson
// amplitude tracked as an integer radicand so that perfect squares stay
// exact.  Returns false when the string annihilates the state or leaves the
// container.
bool apply_pair(Statistics stat, int cap, std::vector<int> occ, int first_mode,
                Ladder first, int second_mode, Ladder second, std::vector<int>& target,
                double& amp) {
  long radicand = 1;
  int sign = 1;
  auto step = [&](int mode, Ladder kind) {
    const int n = occ[mode];
    if (stat == Statistics::fermion) {
      int swaps = 0;
      for (int m = 0; m < mode; ++m) swaps += occ[m];
      if (swaps % 2) sign = -sign;
      if (kind == Ladder::annihilate) {
        if (n == 0) return false;
        occ[mode] = 0;
      } else {
        if (n == 1) return false;
        occ[mode] = 1;
      }
    } else {
      if (kind == Ladder::annihilate) {
        if (n == 0) return false;
        occ[mode] = n - 1;
        radicand *= n;
      } else {
        if (n + 1 > cap) return false;
        occ[mode] = n + 1;
        radicand *= n + 1;
      }
    }
    return true;
  };
  if (!step(first_mode, first)) return false;
  if (!step(second_mode, second)) return false;
  double a = std::sqrt((double)radicand);
  const long root = std::lround(a);
  if (root * root == radicand) a = (double)root;  // exact perfect squares
  amp = sign * a;
  target = std::move(occ);
  return true;
}

}  // namespace

double commutator_check(const OccupationBasis& basis, int i, int j) {
  const bool fermi = basis.statistics() == Statistics::fermion;
  const int capacity = basis.per_mode_cap() * basis.n_modes();
  double worst = 0.0;
  for (std::size_t s = 0; s < basis.size(); ++s) {
    const auto& st = basis.state(s);
    // exclude columns where adag_j leaves the container: per-mode cap edge
    // (bosons, i = j) or the N_max boundary of an incomplete container
    if (!fermi && i == j && st[i] >= basis.per_mode_cap()) continue;
    if (st[j] < basis.per_mode_cap() && basis.sector().value < capacity &&
        basis.total_number(s) >= basis.sector().value)
      continue;

    std::map<std::vector<int>, double> column;
    std::vector<int> target;
    double amp = 0.0;
    if (apply_pair(basis.statistics(), basis.per_mode_cap(), st, j, Ladder::create, i,
                   Ladder::annihilate, target, amp))
      column[target] += amp;  // a_i adag_j
    if (apply_pair(basis.statistics(), basis.per_mode_cap(), st, i, Ladder::annihilate, j,
                   Ladder::create, target, amp))
      column[target] += fermi ? amp : -amp;  // {,} vs [,]
    if (i == j) column[st] -= 1.0;
    for (const auto& [occ, v] : column) worst = std::max(worst, std::abs(v));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// second-quantized operators

SparseOperator one_body_operator(const OccupationBasis& basis, const ModeMatrix& h) {
  const int m = basis.n_modes();
  if ((int)h.size() != m)
    throw std::invalid_argument("one_body_operator: matrix must be n_modes x n_modes");
  for (const auto& row : h)
    if ((int)row.size() != m)
      throw std::invalid_argument("one_body_operator: matrix must be n_modes x n_modes");

  std::vector<SparseOperator::Triplet> t;
  for (std::size_t s = 0; s < basis.size(); ++s) {
    const auto& occ = basis.state(s);
    for (int j = 0; j < m; ++j) {
      if (occ[j] == 0) continue;
      for (int i = 0; i < m; ++i) {
        if (h[i][j] == std::complex<double>(0.0)) continue;
        std::vector<int> work = occ;
        double amp = 1.0;
        if (!apply_ladder(basis.statistics(), basis.per_mode_cap(), work, j,
                          Ladder::annihilate, amp))
          continue;
        if (!apply_ladder(basis.statistics(), basis.per_mode_cap(), work, i, Ladder::create,
                          amp))
          continue;
        const auto dst = basis.index_of(work);
        if (!dst) continue;
        t.emplace_back(*dst, s, amp * h[i][j]);
      }
    }
  }
  return SparseOperator::from_triplets(basis.size(), basis.size(), std::move(t));
}

TwoBodyTensor::TwoBodyTensor(int n_modes) : n_modes_(n_modes) {
  if (n_modes < 1) throw std::invalid_argument("TwoBodyTensor: need n_modes >= 1");
  data_.assign((std::size_t)n_modes * n_modes * n_modes * n_modes, 0.0);
}

std::complex<double>& TwoBodyTensor::at(int i, int j, int k, int l) {
  const int m = n_modes_;
  if (i < 0 || j < 0 || k < 0 || l < 0 || i >= m || j >= m || k >= m || l >= m)
    throw std::invalid_argument("TwoBodyTensor: index out of range");
  return data_[(((std::size_t)i * m + j) * m + k) * m + l];
}

std::complex<double> TwoBodyTensor::at(int i, int j, int k, int l) const {
  return const_cast<TwoBodyTensor*>(this)->at(i, j, k, l);
}

SparseOperator two_body_operator(const OccupationBasis& basis, const TwoBodyTensor& v) {
  const int m = basis.n_modes();
  if (v.n_modes() != m)
    throw std::invalid_argument("two_body_operator: tensor/basis mode count mismatch");

  std::vector<SparseOperator::Triplet> t;
  for (std::size_t s = 0; s < basis.size(); ++s) {
    const auto& occ = basis.state(s);
    for (int k = 0; k < m; ++k) {
      if (occ[k] == 0) continue;
      for (int l = 0; l < m; ++l) {
        std::vector<int> after_kl = occ;
        double amp_kl = 1.0;
        // operator string adag_i adag_j a_l a_k acts right to left
        if (!apply_ladder(basis.statistics(), basis.per_mode_cap(), after_kl, k,
                          Ladder::annihilate, amp_kl))
          continue;
        if (!apply_ladder(basis.statistics(), basis.per_mode_cap(), after_kl, l,
                          Ladder::annihilate, amp_kl))
          continue;
        for (int j = 0; j < m; ++j) {
          std::vector<int> after_j = after_kl;
          double amp_j = amp_kl;
          if (!apply_ladder(basis.statistics(), basis.per_mode_cap(), after_j, j,
                            Ladder::create, amp_j))
            continue;
          for (int i = 0; i < m; ++i) {
            const auto coeff = v.at(i, j, k, l);
            if (coeff == std::complex<double>(0.0)) continue;
            std::vector<int> target = after_j;
            double amp = amp_j;
            if (!apply_ladder(basis.statistics(), basis.per_mode_cap(), target, i,
                              Ladder::create, amp))
              continue;
            const auto dst = basis.index_of(target);
            if (!dst) continue;
            t.emplace_back(*dst, s, 0.5 * coeff * amp);
          }
        }
      }
    }
  }
  return SparseOperator::from_triplets(basis.size(), basis.size(), std::move(t));
}

SparseOperator number_operator(const OccupationBasis& basis) {
  std::vector<SparseOperator::Triplet> t;
  for (std::size_t s = 0; s < basis.size(); ++s) {
    const int n = basis.total_number(s);
    if (n != 0) t.emplace_back(s, s, (double)n);
  }
  return SparseOperator::from_triplets(basis.size(), basis.size(), std::move(t));
}

double u1_phase_check(const OccupationBasis& basis, int mode, double alpha) {
  const auto a = ladder_matrix(basis, mode, Ladder::annihilate);
  const std::complex<double> i_unit(0.0, 1.0);
  double worst = 0.0;
  a.for_each([&](std::size_t r, std::size_t c, std::complex<double> v) {
    const double nr = basis.total_number(r), nc = basis.total_number(c);
    const auto rotated = std::exp(-i_unit * alpha * nr) * v * std::exp(i_unit * alpha * nc);
    worst = std::max(worst, std::abs(rotated - std::exp(i_unit * alpha) * v));
  });
  return worst;
}

// ---------------------------------------------------------------------------
// first-quantized brute force

FirstQuantizedState::FirstQuantizedState(Statistics s, int n_modes, int n_particles)
    : statistics_(s), n_modes_(n_modes), n_particles_(n_particles) {
  if (n_particles < 1 || n_particles > 4 || n_modes < 1 || n_modes > 6)
    throw std::invalid_argument("FirstQuantizedState: size guard N <= 4, modes <= 6");
  std::size_t size = 1;
  for (int a = 0; a < n_particles; ++a) size *= n_modes;
  amp_.assign(size, 0.0);
}

FirstQuantizedState FirstQuantizedState::from_occupation(Statistics statistics, int n_modes,
                                                         const std::vector<int>& occupation) {
  if ((int)occupation.size() != n_modes)
    throw std::invalid_argument("FirstQuantizedState: occupation length mismatch");
  int n = 0;
  for (int v : occupation) {
    if (v < 0) throw std::invalid_argument("FirstQuantizedState: negative occupation");
    if (statistics == Statistics::fermion && v > 1)
      throw std::invalid_argument(
          "FirstQuantizedState: double fermion occupation is annihilated by antisymmetrization");
    n += v;
  }
  FirstQuantizedState st(statistics, n_modes, n);

  // occupied mode list in ascending order, with multiplicity for bosons
  std::vector<int> modes;
  for (int m = 0; m < n_modes; ++m)
    for (int r = 0; r < occupation[m]; ++r) modes.push_back(m);

  double log_nfact = 0.0;
  for (int a = 2; a <= n; ++a) log_nfact += std::log((double)a);
  double log_occfact = 0.0;
  for (int v : occupation)
    for (int a = 2; a <= v; ++a) log_occfact += std::log((double)a);
  const double boson_amp = std::exp(0.5 * (log_occfact - log_nfact));
  const double fermi_amp = std::exp(-0.5 * log_nfact);

  std::vector<int> tuple(n, 0);
  const std::size_t total = st.amp_.size();
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (int a = n - 1; a >= 0; --a) {
      tuple[a] = (int)(rest % n_modes);
      rest /= n_modes;
    }
    // does the tuple realize the occupation?
    std::vector<int> counts(n_modes, 0);
    for (int a = 0; a < n; ++a) ++counts[tuple[a]];
    if (counts != occupation) continue;
    if (statistics == Statistics::boson) {
      st.amp_[flat] = boson_amp;
    } else {
      // parity of the permutation sorting the tuple to ascending order
      std::vector<int> work = tuple;
      int swaps = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (work[a] > work[b]) {
            std::swap(work[a], work[b]);
            ++swaps;
          }
      st.amp_[flat] = (swaps % 2 ? -fermi_amp : fermi_amp);
    }
  }
  return st;
}

std::complex<double> FirstQuantizedState::one_body_matrix_element(
    const FirstQuantizedState& ket, const ModeMatrix& h) const {
  if (ket.n_particles_ != n_particles_ || ket.n_modes_ != n_modes_ ||
      ket.statistics_ != statistics_)
    throw std::invalid_argument("one_body_matrix_element: incompatible states");
  const int n = n_particles_, m = n_modes_;
  std::vector<std::complex<double>> result(amp_.size(), 0.0);
  std::vector<int> tuple(n);
  std::size_t stride[8];
  stride[n - 1] = 1;
  for (int a = n - 2; a >= 0; --a) stride[a] = stride[a + 1] * m;
  for (std::size_t flat = 0; flat < ket.amp_.size(); ++flat) {
    std::size_t rest = flat;
    for (int a = n - 1; a >= 0; --a) {
      tuple[a] = (int)(rest % m);
      rest /= m;
    }
    // act with h on each particle slot
    for (int a = 0; a < n; ++a) {
      const int orig = tuple[a];
      for (int i = 0; i < m; ++i) {
        const auto hij = h[i][orig];
        if (hij == std::complex<double>(0.0)) continue;
        const std::size_t dst =
            (std::size_t)((std::ptrdiff_t)flat + (std::ptrdiff_t)(i - orig) *
                                                     (std::ptrdiff_t)stride[a]);
        result[dst] += hij * ket.amp_[flat];
      }
    }
  }
  std::complex<double> me = 0.0;
  for (std::size_t f = 0; f < amp_.size(); ++f) me += std::conj(amp_[f]) * result[f];
  return me;
}

std::complex<double> FirstQuantizedState::two_body_matrix_element(
    const FirstQuantizedState& ket, const TwoBodyTensor& v) const {
  if (ket.n_particles_ != n_particles_ || ket.n_modes_ != n_modes_ ||
      ket.statistics_ != statistics_)
    throw std::invalid_argument("two_body_matrix_element: incompatible states");
  const int n = n_particles_, m = n_modes_;
  std::vector<std::complex<double>> result(amp_.size(), 0.0);
  std::vector<int> tuple(n);
  std::size_t stride[8];
  stride[n - 1] = 1;
  for (int a = n - 2; a >= 0; --a) stride[a] = stride[a + 1] * m;
  for (std::size_t flat = 0; flat < ket.amp_.size(); ++flat) {
    if (ket.amp_[flat] == std::complex<double>(0.0)) continue;
    std::size_t rest = flat;
    for (int a = n - 1; a >= 0; --a) {
      tuple[a] = (int)(rest % m);
      rest /= m;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        const int ka = tuple[a], lb = tuple[b];
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            const auto vij = v.at(i, j, ka, lb);
            if (vij == std::complex<double>(0.0)) continue;
            const std::size_t dst = (std::size_t)((std::ptrdiff_t)flat +
                                                  (std::ptrdiff_t)(i - ka) *
                                                      (std::ptrdiff_t)stride[a] +
                                                  (std::ptrdiff_t)(j - lb) *
                                                      (std::ptrdiff_t)stride[b]);
            result[dst] += 0.5 * vij * ket.amp_[flat];
          }
      }
  }
  std::complex<double> me = 0.0;
  for (std::size_t f = 0; f < amp_.size(); ++f) me += std::conj(amp_[f]) * result[f];
  return me;
}

}  // namespace qmlab::fockspace
