#include "qmlab/fockspace.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include <stdexcept>

#include "doctest.h"

using namespace qmlab::fockspace;
using cplx = std::complex<double>;

namespace {

ModeMatrix random_hermitian(int m, std::mt19937& rng) {
  std::normal_distribution<double> g;
  ModeMatrix h(m, std::vector<cplx>(m, 0.0));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const cplx v(g(rng), i == j ? 0.0 : g(rng));
      h[i][j] = v;
      h[j][i] = std::conj(v);
    }
  return h;
}

TwoBodyTensor random_symmetric_tensor(int m, std::mt19937& rng) {
  std::normal_distribution<double> g;
  TwoBodyTensor a(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) a.at(i, j, k, l) = cplx(g(rng), g(rng));
  TwoBodyTensor v(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          // particle-exchange symmetry plus hermiticity
          const cplx sym = a.at(i, j, k, l) + a.at(j, i, l, k);
          const cplx her = std::conj(a.at(k, l, i, j)) + std::conj(a.at(l, k, j, i));
          v.at(i, j, k, l) = 0.5 * (sym + her);
        }
  return v;
}

}  // namespace

TEST_CASE("basis enumeration counts and ordering") {
  OccupationBasis f(Statistics::fermion, 4, Sector::fixed_n(2));
  CHECK(f.size() == 6);  // C(4,2)

  OccupationBasis b(Statistics::boson, 2, Sector::fixed_n(3), 3);
  CHECK(b.size() == 4);  // stars and bars

  OccupationBasis one_mode(Statistics::boson, 1, Sector::up_to(5), 5);
  CHECK(one_mode.size() == 6);

  // lexicographic, deterministic, index_of inverts state()
  for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f.state(i) < f.state(i + 1));
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(*b.index_of(b.state(i)) == i);

  CHECK_THROWS_AS(OccupationBasis(Statistics::fermion, 3, Sector::fixed_n(4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(OccupationBasis(Statistics::boson, 2, Sector::fixed_n(5), 2),
                  std::invalid_argument);
}

TEST_CASE("ladder matrices") {
  OccupationBasis b(Statistics::boson, 2, Sector::up_to(4), 4);
  const auto adag0 = ladder_matrix(b, 0, Ladder::create);
  const auto idx1 = *b.index_of({1, 0});
  const auto idx2 = *b.index_of({2, 0});
  CHECK(adag0.coeff(idx2, idx1) == cplx(std::sqrt(2.0), 0.0));  // <2|adag|1> = sqrt(2)

  // fermion signs: adag_1 on |1,0,0> gives -|1,1,0>
  OccupationBasis f(Statistics::fermion, 3, Sector::up_to(3));
  const auto adag1 = ladder_matrix(f, 1, Ladder::create);
  CHECK(adag1.coeff(*f.index_of({1, 1, 0}), *f.index_of({1, 0, 0})) == cplx(-1.0, 0.0));
  // but +|0,1,0> from the vacuum side of mode 0
  CHECK(adag1.coeff(*f.index_of({0, 1, 0}), *f.index_of({0, 0, 0})) == cplx(1.0, 0.0));

  // (adag_i)^2 = 0 for fermions
  CHECK((adag1 * adag1).nnz() == 0);

  // fixed-N container rejects the square form but the two-basis overload works
  OccupationBasis f2(Statistics::fermion, 3, Sector::fixed_n(2));
  CHECK_THROWS_AS(ladder_matrix(f2, 0, Ladder::create), std::invalid_argument);
  OccupationBasis f3(Statistics::fermion, 3, Sector::fixed_n(3));
  const auto block = ladder_matrix(f3, f2, 0, Ladder::create);
  CHECK(block.rows() == f3.size());
  CHECK(block.cols() == f2.size());
  CHECK(std::abs(block.coeff(*f3.index_of({1, 1, 1}), *f2.index_of({0, 1, 1}))) == 1.0);
}

TEST_CASE("commutation relations") {
  OccupationBasis b(Statistics::boson, 3, Sector::up_to(9), 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(commutator_check(b, i, j) == 0.0);

  OccupationBasis f(Statistics::fermion, 5, Sector::up_to(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(commutator_check(f, i, j) == 0.0);
}

TEST_CASE("one-body operators") {
  OccupationBasis b(Statistics::boson, 3, Sector::fixed_n(3), 3);
  const int m = 3;

  // diagonal h: eigenvalues sum eps_i n_i on basis states
  ModeMatrix diag(m, std::vector<cplx>(m, 0.0));
  const double eps[3] = {0.3, 1.1, 2.7};
  for (int i = 0; i < m; ++i) diag[i][i] = eps[i];
  const auto hdiag = one_body_operator(b, diag);
  for (std::size_t s = 0; s < b.size(); ++s) {
    double expect = 0.0;
    for (int i = 0; i < m; ++i) expect += eps[i] * b.state(s)[i];
    CHECK(std::abs(hdiag.coeff(s, s) - cplx(expect, 0.0)) < 1e-12);
  }
  CHECK(hdiag.nnz() == b.size());  // purely diagonal

  // identity h is the number operator
  ModeMatrix id(m, std::vector<cplx>(m, 0.0));
  for (int i = 0; i < m; ++i) id[i][i] = 1.0;
  const auto n_from_h = one_body_operator(b, id);
  const auto n_op = number_operator(b);
  CHECK((n_from_h - n_op).max_abs() < 1e-14);

  // single off-diagonal hop on a 2-mode case: sqrt(n_j (n_i + 1))
  OccupationBasis b2(Statistics::boson, 2, Sector::fixed_n(3), 3);
  ModeMatrix hop(2, std::vector<cplx>(2, 0.0));
  hop[0][1] = 1.0;  // adag_0 a_1
  const auto fh = one_body_operator(b2, hop);
  const auto src = *b2.index_of({1, 2});
  const auto dst = *b2.index_of({2, 1});
  CHECK(std::abs(fh.coeff(dst, src) - std::sqrt(2.0 * 2.0)) < 1e-14);

  ModeMatrix bad(2, std::vector<cplx>(2, 0.0));
  CHECK_THROWS_AS(one_body_operator(b, bad), std::invalid_argument);
}

TEST_CASE("hermiticity carries over from the mode matrix") {
  std::mt19937 rng(5);
  OccupationBasis b(Statistics::boson, 3, Sector::fixed_n(2), 2);
  auto h = random_hermitian(3, rng);
  auto f = one_body_operator(b, h);
  CHECK(f.verify_hermitian() < 1e-13);
  CHECK(f.hermitian_verified());

  // F(h)^dag = F(h^dag) even for non-hermitian h
  ModeMatrix g(3, std::vector<cplx>(3, 0.0));
  std::normal_distribution<double> gauss;
  for (auto& row : g)
    for (auto& v : row) v = cplx(gauss(rng), gauss(rng));
  ModeMatrix gdag(3, std::vector<cplx>(3, 0.0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) gdag[i][j] = std::conj(g[j][i]);
  CHECK((one_body_operator(b, g).adjoint() - one_body_operator(b, gdag)).max_abs() < 1e-13);
}

TEST_CASE("two-body operators") {
  // contact interaction on one mode: eigenvalue V n (n - 1) / 2
  OccupationBasis b1(Statistics::boson, 1, Sector::up_to(5), 5);
  TwoBodyTensor contact(1);
  contact.at(0, 0, 0, 0) = 0.8;
  const auto fc = two_body_operator(b1, contact);
  for (std::size_t s = 0; s < b1.size(); ++s) {
    const double n = b1.state(s)[0];
    CHECK(std::abs(fc.coeff(s, s) - cplx(0.5 * 0.8 * n * (n - 1.0), 0.0)) < 1e-12);
  }

  // fermions with N = 1 see no two-body interaction
  OccupationBasis f1(Statistics::fermion, 3, Sector::fixed_n(1));
  std::mt19937 rng(17);
  CHECK(two_body_operator(f1, random_symmetric_tensor(3, rng)).nnz() == 0);

  // density-density coupling between modes 0 and 1: eigenvalue V n_0 n_1
  OccupationBasis b2(Statistics::boson, 2, Sector::fixed_n(4), 4);
  TwoBodyTensor dd(2);
  dd.at(0, 1, 0, 1) = 1.3;
  dd.at(1, 0, 1, 0) = 1.3;
  const auto fdd = two_body_operator(b2, dd);
  for (std::size_t s = 0; s < b2.size(); ++s) {
    const auto& occ = b2.state(s);
    CHECK(std::abs(fdd.coeff(s, s) - cplx(1.3 * occ[0] * occ[1], 0.0)) < 1e-12);
  }
}

TEST_CASE("number operator, sector blocks and U(1) phases") {
  OccupationBasis b(Statistics::boson, 3, Sector::up_to(3), 3);
  const auto n_op = number_operator(b);
  CHECK(n_op.coeff(*b.index_of({0, 0, 0}), *b.index_of({0, 0, 0})) == cplx(0.0));

  std::mt19937 rng(23);
  const auto h = random_hermitian(3, rng);
  const auto v = random_symmetric_tensor(3, rng);
  const auto f1 = one_body_operator(b, h);
  const auto f2 = two_body_operator(b, v);
  CHECK((f1 * n_op - n_op * f1).max_abs() < 1e-12);
  CHECK((f2 * n_op - n_op * f2).max_abs() < 1e-12);

  // operators never connect different N sectors
  f1.for_each([&](std::size_t r, std::size_t c, cplx) {
    CHECK(b.total_number(r) == b.total_number(c));
  });
  f2.for_each([&](std::size_t r, std::size_t c, cplx) {
    CHECK(b.total_number(r) == b.total_number(c));
  });

  for (int mode = 0; mode < 3; ++mode) CHECK(u1_phase_check(b, mode, 0.7) < 1e-14);
}

TEST_CASE("first-quantized brute force agrees with the fock route") {
  std::mt19937 rng(41);
  for (const auto stat : {Statistics::boson, Statistics::fermion}) {
    for (int modes = 2; modes <= 4; ++modes)
      for (int n = 1; n <= 3; ++n) {
        if (stat == Statistics::fermion && n > modes) continue;
        OccupationBasis basis(stat, modes, Sector::fixed_n(n), n);
        std::vector<FirstQuantizedState> fq;
        for (std::size_t s = 0; s < basis.size(); ++s)
          fq.push_back(FirstQuantizedState::from_occupation(stat, modes, basis.state(s)));

        const auto h = random_hermitian(modes, rng);
        const auto f1 = one_body_operator(basis, h);
        const auto v = random_symmetric_tensor(modes, rng);
        const auto f2 = two_body_operator(basis, v);
        for (std::size_t r = 0; r < basis.size(); ++r)
          for (std::size_t c = 0; c < basis.size(); ++c) {
            CHECK(std::abs(f1.coeff(r, c) - fq[r].one_body_matrix_element(fq[c], h)) < 1e-12);
            CHECK(std::abs(f2.coeff(r, c) - fq[r].two_body_matrix_element(fq[c], v)) < 1e-12);
          }
      }
  }
}

TEST_CASE("first-quantized state construction") {
  // N = 1: one-body expectation is <u|h|u>
  auto one = FirstQuantizedState::from_occupation(Statistics::boson, 3, {0, 1, 0});
  ModeMatrix h(3, std::vector<cplx>(3, 0.0));
  h[1][1] = 2.5;
  CHECK(std::abs(one.one_body_matrix_element(one, h) - cplx(2.5, 0.0)) < 1e-14);

  // double fermion occupation is rejected
  CHECK_THROWS_AS(FirstQuantizedState::from_occupation(Statistics::fermion, 3, {2, 0, 0}),
                  std::invalid_argument);

  // normalization of the amplitude tensor
  auto two = FirstQuantizedState::from_occupation(Statistics::boson, 3, {1, 0, 1});
  double norm = 0.0;
  for (const auto& a : two.amplitudes()) norm += std::norm(a);
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-13));

  auto anti = FirstQuantizedState::from_occupation(Statistics::fermion, 3, {1, 1, 0});
  norm = 0.0;
  for (const auto& a : anti.amplitudes()) norm += std::norm(a);
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("coordinate-list export") {
  OccupationBasis b(Statistics::boson, 2, Sector::fixed_n(1), 1);
  ModeMatrix h(2, std::vector<cplx>(2, 0.0));
  h[0][1] = cplx(0.5, -0.25);
  h[1][0] = cplx(0.5, 0.25);
  // basis order: |0,1> then |1,0>; the hop adag_0 a_1 carries h[0][1] and
  // lands in entry (row=|1,0>, col=|0,1>)
  std::ostringstream os;
  one_body_operator(b, h).write_coordinate_list(os);
  CHECK(os.str() == "0 1 0.5 0.25\n1 0 0.5 -0.25\n");
}

TEST_CASE("spectrum of a diagonal one-body hamiltonian") {
  OccupationBasis b(Statistics::fermion, 4, Sector::up_to(4));
  ModeMatrix h(4, std::vector<cplx>(4, 0.0));
  const double eps[4] = {0.1, 0.4, 0.9, 1.6};
  for (int i = 0; i < 4; ++i) h[i][i] = eps[i];
  const auto f = one_body_operator(b, h);
  // diagonal in the occupation basis; spectrum is the multiset of sums
  for (std::size_t s = 0; s < b.size(); ++s) {
    double expect = 0.0;
    for (int i = 0; i < 4; ++i) expect += eps[i] * b.state(s)[i];
    CHECK(std::abs(f.coeff(s, s) - cplx(expect, 0.0)) < 1e-12);
  }
}
