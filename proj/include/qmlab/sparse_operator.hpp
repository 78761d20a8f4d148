#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <tuple>
#include <vector>

namespace qmlab::fockspace {

// Row-compressed complex matrix; the carrier for ladder operators and
// second-quantized observables.  Explicit zeros are dropped on construction.
class SparseOperator {
 public:
  using value_type = std::complex<double>;
  using Triplet = std::tuple<std::size_t, std::size_t, value_type>;

  SparseOperator() = default;
  SparseOperator(std::size_t rows, std::size_t cols);
  static SparseOperator identity(std::size_t n);
  static SparseOperator from_triplets(std::size_t rows, std::size_t cols,
                                      std::vector<Triplet> triplets);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return vals_.size(); }

  value_type coeff(std::size_t row, std::size_t col) const;

  SparseOperator operator+(const SparseOperator& other) const;
  SparseOperator operator-(const SparseOperator& other) const;
  SparseOperator operator*(const SparseOperator& other) const;
  SparseOperator scaled(value_type factor) const;
  SparseOperator adjoint() const;

  void apply(const std::vector<value_type>& in, std::vector<value_type>& out) const;

  double max_abs() const;

  // Largest deviation from hermiticity; marks the flag when within tol.
  double verify_hermitian(double tol = 1e-12);
  bool hermitian_verified() const { return hermitian_verified_; }

  void for_each(const std::function<void(std::size_t, std::size_t, value_type)>& f) const;

  // Coordinate-list text: one "row col re im" line per entry.
  void write_coordinate_list(std::ostream& os) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::size_t> row_ptr_ = {0};
  std::vector<std::size_t> col_idx_;
  std::vector<value_type> vals_;
  bool hermitian_verified_ = false;
};

}  // namespace qmlab::fockspace
