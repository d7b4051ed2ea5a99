#include <doctest.h>

#include <cmath>
#include <limits>

#include "skewgroup/error.hpp"
#include "skewgroup/numeric.hpp"
#include "support.hpp"

using namespace skewgroup;
namespace nm = skewgroup::numeric;

namespace {

constexpr double tol = kDefaultTol;

Matrix low_rank(nm::Rng& rng, Eigen::Index rows, Eigen::Index cols, Eigen::Index r) {
  return rng.complex_gaussian(rows, r) * rng.complex_gaussian(r, cols);
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(nm::rank(Matrix::Zero(3, 3), tol) == 0);
  CHECK(nm::rank(Matrix::Identity(3, 3), tol) == 3);
  CHECK(nm::rank(Matrix::Ones(2, 2), tol) == 1);
}

TEST_CASE("rank rejects non-finite entries") {
  Matrix m = Matrix::Identity(2, 2);
  m(1, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(nm::rank(m, tol), Error);
  try {
    nm::rank(m, tol);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
  m(1, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(nm::nullspace(m, tol), Error);
}

TEST_CASE("nullspace examples") {
  CHECK(nm::nullspace(Matrix::Identity(2, 2), tol).cols() == 0);

  Matrix row(1, 2);
  row << 1.0, -1.0;
  const Matrix k = nm::nullspace(row, tol);
  REQUIRE(k.cols() == 1);
  // unit vector along (1,1)/sqrt 2 up to phase
  CHECK(std::abs(std::abs(k(0, 0)) - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(k(0, 0) - k(1, 0)) < 1e-12);

  const Matrix z = nm::nullspace(Matrix::Zero(2, 2), tol);
  CHECK(z.cols() == 2);
  CHECK((z.adjoint() * z - Matrix::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("rank plus nullity equals column count") {
  nm::Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    const auto rows = static_cast<Eigen::Index>(1 + rng.index(7));
    const auto cols = static_cast<Eigen::Index>(1 + rng.index(7));
    const auto r = static_cast<Eigen::Index>(rng.index(static_cast<std::size_t>(std::min(rows, cols)) + 1));
    const Matrix m = r == 0 ? Matrix::Zero(rows, cols) : low_rank(rng, rows, cols, r);
    const std::size_t rk = nm::rank(m, tol);
    CHECK(rk == static_cast<std::size_t>(r));
    CHECK(rk == oracle::lu_rank(m));
    const Matrix k = nm::nullspace(m, tol);
    CHECK(rk + static_cast<std::size_t>(k.cols()) == static_cast<std::size_t>(cols));
    if (k.cols() > 0) {
      CHECK((k.adjoint() * k - Matrix::Identity(k.cols(), k.cols())).norm() < 1e-10);
      CHECK((m * k).norm() <= tol * std::max(1.0, m.norm()) * k.norm());
    }
  }
}

TEST_CASE("range spans the column space") {
  nm::Rng rng(5);
  const Matrix m = low_rank(rng, 6, 5, 3);
  const Matrix r = nm::range(m, tol);
  CHECK(r.cols() == 3);
  // every column of m lies in span(r)
  CHECK((m - r * (r.adjoint() * m)).norm() < 1e-10 * m.norm());
}

TEST_CASE("eig_hermitian examples") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 1.0;
  auto e = nm::eig_hermitian(d);
  CHECK(e.values(0) == doctest::Approx(1.0));
  CHECK(e.values(1) == doctest::Approx(2.0));

  e = nm::eig_hermitian(oracle::pauli_x());
  CHECK(e.values(0) == doctest::Approx(-1.0));
  CHECK(e.values(1) == doctest::Approx(1.0));

  e = nm::eig_hermitian(Matrix::Identity(2, 2));
  CHECK(e.values(0) == doctest::Approx(1.0));
  CHECK(e.values(1) == doctest::Approx(1.0));
  CHECK((e.vectors.adjoint() * e.vectors - Matrix::Identity(2, 2)).norm() < 1e-12);

  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(nm::eig_hermitian(bad), Error);
}

TEST_CASE("eig_hermitian reconstruction") {
  nm::Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto n = static_cast<Eigen::Index>(1 + rng.index(8));
    const Matrix g = rng.complex_gaussian(n, n);
    const Matrix h = g + g.adjoint();
    const auto e = nm::eig_hermitian(h);
    const Matrix back = e.vectors * e.values.cast<Scalar>().asDiagonal() * e.vectors.adjoint();
    CHECK((back - h).norm() <= 10 * tol * h.norm());
    CHECK((e.vectors.adjoint() * e.vectors - Matrix::Identity(n, n)).norm() <= 10 * tol * n);
    for (Eigen::Index i = 1; i < n; ++i) CHECK(e.values(i - 1) <= e.values(i));
  }
}

TEST_CASE("solve_sandwich examples") {
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK(nm::solve_sandwich({{i2, i2}}, tol).size() == 4);

  // natural module of M_2: the matrix units; Schur leaves the scalars
  std::vector<std::pair<Matrix, Matrix>> pairs;
  std::vector<Matrix> units;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      units.push_back(oracle::unit_matrix(2, i, j));
      pairs.emplace_back(units.back(), units.back());
    }
  const auto schur = nm::solve_sandwich(pairs, tol);
  REQUIRE(schur.size() == oracle::intertwiner_dim(units, units));
  REQUIRE(schur.size() == 1);
  const Matrix x = schur[0] / schur[0](0, 0);
  CHECK((x - i2).norm() < 1e-12);

  // trivial and sign characters of Z/2 (elements 1, g)
  const Matrix one = Matrix::Ones(1, 1);
  CHECK(nm::solve_sandwich({{one, one}, {one, -one}}, tol).empty());

  CHECK_THROWS_AS(nm::solve_sandwich({{i2, one}, {one, one}}, tol), Error);
}

TEST_CASE("solve_sandwich solutions satisfy the residual bound") {
  nm::Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    // P_i = S D_i S^{-1}, Q_i = T D_i T^{-1} with shared diagonal D_i: known solution space
    const Eigen::Index d = 3;
    const Matrix s = rng.complex_gaussian(d, d);
    const Matrix u = rng.complex_gaussian(d, d);
    std::vector<std::pair<Matrix, Matrix>> pairs;
    std::vector<Matrix> ps;
    std::vector<Matrix> qs;
    for (int i = 0; i < 2; ++i) {
      Matrix dg = Matrix::Zero(d, d);
      for (Eigen::Index k = 0; k < d; ++k) dg(k, k) = static_cast<double>(rng.index(2));
      ps.push_back(s * dg * s.inverse());
      qs.push_back(u * dg * u.inverse());
      pairs.emplace_back(ps.back(), qs.back());
    }
    const auto sol = nm::solve_sandwich(pairs, tol);
    CHECK(sol.size() == oracle::intertwiner_dim(ps, qs));
    for (const auto& x : sol) {
      for (const auto& [p, q] : pairs) {
        const double bound = tol * (x.norm() * p.norm() + q.norm() * x.norm());
        CHECK((x * p - q * x).norm() <= std::max(bound, 1e-12));
      }
    }
    for (std::size_t a = 0; a < sol.size(); ++a)
      for (std::size_t b = 0; b < sol.size(); ++b) {
        const Scalar ip = (sol[a].adjoint() * sol[b]).trace();
        CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) < 1e-9);
      }
  }
}

TEST_CASE("canonical basis depends only on the span") {
  nm::Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    const Matrix b = rng.complex_gaussian(6, 3);
    const Matrix mix = rng.complex_gaussian(3, 3);
    const Matrix c1 = nm::canonical_basis(b);
    const Matrix c2 = nm::canonical_basis(b * mix);
    CHECK(c1.cols() == 3);
    CHECK((c1 - c2).norm() < 1e-9);
    CHECK((c1.adjoint() * c1 - Matrix::Identity(3, 3)).norm() < 1e-10);
    CHECK((b - c1 * (c1.adjoint() * b)).norm() < 1e-10 * b.norm());
  }
}

TEST_CASE("kron and vec agree with explicit formulas") {
  nm::Rng rng(2);
  const Matrix a = rng.complex_gaussian(2, 3);
  const Matrix b = rng.complex_gaussian(3, 2);
  CHECK((nm::kron(a, b) - oracle::kron(a, b)).norm() == doctest::Approx(0.0));
  const Matrix x = rng.complex_gaussian(3, 4);
  CHECK(nm::unvec(nm::vec(x), 3, 4) == x);
  // vec(A X B) = (B^T (x) A) vec X
  const Matrix l = rng.complex_gaussian(2, 3);
  const Matrix r = rng.complex_gaussian(4, 2);
  CHECK((nm::vec(l * x * r) - oracle::kron(r.transpose(), l) * nm::vec(x)).norm() < 1e-12);
}

TEST_CASE("rng is reproducible") {
  nm::Rng a(42);
  nm::Rng b(42);
  CHECK(a.complex_gaussian(3, 3) == b.complex_gaussian(3, 3));
  const Matrix u = a.random_unitary(4);
  CHECK((u.adjoint() * u - Matrix::Identity(4, 4)).norm() < 1e-12);
}
