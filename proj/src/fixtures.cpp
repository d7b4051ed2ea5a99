#include "skewgroup/fixtures.hpp"

#include <cmath>
#include <numbers>

#include "skewgroup/error.hpp"

namespace skewgroup {

namespace {

using namespace std::complex_literals;

Algebra scalars() { return Algebra::make(1, {{0, 0, 0, 1.0}}, Vector::Ones(1), kDefaultTol, {"1"}); }

Algebra diagonal_algebra(std::size_t n) {
  std::vector<StructureConstant> mult;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    mult.push_back({i, i, i, 1.0});
    labels.push_back("e" + std::to_string(i + 1));
  }
  return Algebra::make(n, mult, Vector::Ones(static_cast<Eigen::Index>(n)), kDefaultTol, std::move(labels));
}

// r copies of M_n: block k, unit E_ij at k n^2 + i n + j.
Algebra blocks(std::size_t n, std::size_t r) {
  Algebra a = matrix_algebra(n);
  Algebra out = a;
  for (std::size_t k = 1; k < r; ++k) out = direct_sum(out, a);
  return out;
}

// a -> (U_k a_k U_k^{-1}) placed in block perm[k].
Matrix block_automorphism(std::size_t n, const std::vector<std::size_t>& perm, const std::vector<Matrix>& u) {
  const std::size_t r = perm.size();
  const auto nn = static_cast<Eigen::Index>(n * n);
  Matrix out = Matrix::Zero(nn * static_cast<Eigen::Index>(r), nn * static_cast<Eigen::Index>(r));
  for (std::size_t k = 0; k < r; ++k) {
    const Matrix inv = u[k].inverse();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Matrix img = u[k].col(static_cast<Eigen::Index>(i)) * inv.row(static_cast<Eigen::Index>(j));
        const auto col = static_cast<Eigen::Index>(k) * nn + static_cast<Eigen::Index>(i * n + j);
        for (Eigen::Index p = 0; p < static_cast<Eigen::Index>(n); ++p)
          for (Eigen::Index q = 0; q < static_cast<Eigen::Index>(n); ++q)
            out(static_cast<Eigen::Index>(perm[k]) * nn + p * static_cast<Eigen::Index>(n) + q, col) = img(p, q);
      }
  }
  return out;
}

std::vector<Matrix> same(std::size_t r, const Matrix& u) { return std::vector<Matrix>(r, u); }

// Natural module of block k of r copies of M_n.
Module natural_block_module(const AlgebraPtr& a, std::size_t n, std::size_t r, std::size_t k) {
  const auto d = static_cast<Eigen::Index>(n);
  std::vector<Matrix> rho;
  for (std::size_t b = 0; b < r; ++b)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Matrix m = Matrix::Zero(d, d);
        if (b == k) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
        rho.push_back(std::move(m));
      }
  return Module::make(a, std::move(rho));
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Matrix diag(std::initializer_list<Scalar> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (auto x : values) v(i++) = x;
  return v.asDiagonal();
}

}  // namespace

GeneratedGroup generate_group(const std::vector<Matrix>& generators, double tol) {
  if (generators.empty()) throw Error(ErrorKind::InvalidInput, "need at least one generator");
  const auto n = generators.front().rows();
  GeneratedGroup out;
  out.mats.push_back(Matrix::Identity(n, n));
  auto find = [&](const Matrix& m) -> std::size_t {
    for (std::size_t i = 0; i < out.mats.size(); ++i)
      if ((out.mats[i] - m).norm() <= tol * numeric::scale_of(m)) return i;
    return out.mats.size();
  };
  for (std::size_t i = 0; i < out.mats.size(); ++i) {
    for (const auto& g : generators) {
      const Matrix m = out.mats[i] * g;
      if (find(m) == out.mats.size()) {
        if (out.mats.size() >= 512) throw Error(ErrorKind::InvalidInput, "generated group is too large");
        out.mats.push_back(m);
      }
    }
  }
  const std::size_t order = out.mats.size();
  out.table.assign(order, std::vector<std::size_t>(order));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) out.table[i][j] = find(out.mats[i] * out.mats[j]);
  return out;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"trivial", "swap", "pauli", "perm", "cyclic"};
  return names;
}

Instance make_fixture(const std::string& name) {
  if (name == "trivial") {
    AlgebraPtr a = share(scalars());
    AlgebraAction action = AlgebraAction::make(groups::trivial(), a, {Matrix::Identity(1, 1)});
    return {name, std::move(action), Module::make(a, {Matrix::Identity(1, 1)})};
  }
  if (name == "swap") {
    AlgebraPtr a = share(blocks(2, 2));
    const Matrix swap = block_automorphism(2, {1, 0}, same(2, Matrix::Identity(2, 2)));
    AlgebraAction action = AlgebraAction::make(groups::cyclic(2), a, {Matrix::Identity(8, 8), swap});
    return {name, std::move(action), natural_block_module(a, 2, 2, 0)};
  }
  if (name == "pauli") {
    AlgebraPtr a = share(matrix_algebra(2));
    const Matrix x = pauli_x();
    const Matrix z = pauli_z();
    std::vector<Matrix> mats{Matrix::Identity(4, 4), block_automorphism(2, {0}, {x}), block_automorphism(2, {0}, {z}),
                             block_automorphism(2, {0}, {Matrix(x * z)})};
    Table table(4, std::vector<std::size_t>(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) table[i][j] = i ^ j;
    FiniteGroup g = FiniteGroup::make(table, {"1", "x", "z", "xz"});
    AlgebraAction action = AlgebraAction::make(std::move(g), a, std::move(mats));
    return {name, std::move(action), natural_block_module(a, 2, 1, 0)};
  }
  if (name == "perm") {
    AlgebraPtr a = share(diagonal_algebra(3));
    const auto perms = groups::symmetric_permutations(3);
    std::vector<Matrix> mats;
    for (const auto& p : perms) {
      Matrix m = Matrix::Zero(3, 3);
      for (std::size_t i = 0; i < 3; ++i) m(static_cast<Eigen::Index>(p[i]), static_cast<Eigen::Index>(i)) = 1.0;
      mats.push_back(std::move(m));
    }
    AlgebraAction action = AlgebraAction::make(groups::from_permutations(perms), a, std::move(mats));
    Matrix one = Matrix::Identity(1, 1);
    Matrix zero = Matrix::Zero(1, 1);
    return {name, std::move(action), Module::make(a, {one, zero, zero})};
  }
  if (name == "cyclic") {
    const FiniteGroup z3 = groups::cyclic(3);
    Algebra base = group_algebra(z3.table(), z3.identity());
    AlgebraPtr a = share(std::move(base));
    Matrix inversion = Matrix::Zero(3, 3);
    for (std::size_t k = 0; k < 3; ++k) inversion(static_cast<Eigen::Index>(z3.inverse(k)), static_cast<Eigen::Index>(k)) = 1.0;
    AlgebraAction action = AlgebraAction::make(groups::cyclic(2), a, {Matrix::Identity(3, 3), inversion});
    const Scalar omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    std::vector<Matrix> rho;
    Scalar power = 1.0;
    for (std::size_t k = 0; k < 3; ++k) {
      rho.push_back(Matrix::Constant(1, 1, power));
      power *= omega;
    }
    return {name, std::move(action), Module::make(a, std::move(rho))};
  }
  throw Error(ErrorKind::UnknownFixture, "no fixture named '" + name + "'");
}

Instance random_instance(std::uint64_t seed) {
  numeric::Rng rng(seed);
  const std::size_t family = static_cast<std::size_t>((seed + 7) % 8);
  const Scalar w3 = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const Matrix i2 = Matrix::Identity(2, 2);

  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<Matrix> gens;
  switch (family) {
    case 0:  // S3 permuting three M_2 blocks
      n = 2, r = 3;
      gens = {block_automorphism(2, {1, 2, 0}, same(3, i2)), block_automorphism(2, {1, 0, 2}, same(3, i2))};
      break;
    case 1:  // block swap and Ad(Z) on both blocks
      n = 2, r = 2;
      gens = {block_automorphism(2, {1, 0}, same(2, i2)), block_automorphism(2, {0, 1}, same(2, pauli_z()))};
      break;
    case 2:  // D4 on the vertices of a square
      n = 1, r = 4;
      gens = {block_automorphism(1, {1, 2, 3, 0}, same(4, Matrix::Identity(1, 1))),
              block_automorphism(1, {0, 3, 2, 1}, same(4, Matrix::Identity(1, 1)))};
      break;
    case 3:  // Z3 by the clock matrix on M_3
      n = 3, r = 1;
      gens = {block_automorphism(3, {0}, {diag({1.0, w3, w3 * w3})})};
      break;
    case 4:  // Z3 shifting M_2 blocks with compensating diagonal twists
      n = 2, r = 3;
      gens = {block_automorphism(2, {1, 2, 0}, {diag({1.0, w3}), diag({1.0, std::conj(w3)}), i2})};
      break;
    case 5:  // Z8: (a, b) -> (b, U a U^{-1}), U = diag(1, i)
      n = 2, r = 2;
      gens = {block_automorphism(2, {1, 0}, {diag({1.0, 1.0i}), i2})};
      break;
    case 6:  // S3 acting diagonally on two triples of points
      n = 1, r = 6;
      gens = {block_automorphism(1, {1, 2, 0, 4, 5, 3}, same(6, Matrix::Identity(1, 1))),
              block_automorphism(1, {1, 0, 2, 4, 3, 5}, same(6, Matrix::Identity(1, 1)))};
      break;
    default:  // Pauli conjugation on two M_2 blocks
      n = 2, r = 2;
      gens = {block_automorphism(2, {0, 1}, same(2, pauli_x())), block_automorphism(2, {0, 1}, same(2, pauli_z()))};
      break;
  }

  const Algebra plain = blocks(n, r);
  const auto dim = static_cast<Eigen::Index>(plain.dim());
  const std::size_t block = rng.index(r);

  // New algebra basis b'_i = sum_j T_ji b_j with T unitary.
  const Matrix t = rng.random_unitary(dim);
  const Matrix ti = t.adjoint();
  std::vector<StructureConstant> mult;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Matrix li = ti * plain.left_mult(Vector(t.col(i))) * t;
    for (Eigen::Index j = 0; j < dim; ++j)
      for (Eigen::Index k = 0; k < dim; ++k)
        if (li(k, j) != Scalar(0.0))
          mult.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<std::size_t>(k), li(k, j)});
  }
  AlgebraPtr a = share(Algebra::make(plain.dim(), mult, ti * plain.unit()));

  std::vector<Matrix> conj;
  for (const auto& g : gens) conj.push_back(ti * g * t);
  GeneratedGroup gg = generate_group(conj);
  AlgebraAction action = AlgebraAction::make(FiniteGroup::make(gg.table), a, std::move(gg.mats));

  const Module natural = natural_block_module(share(blocks(n, r)), n, r, block);
  const Matrix s = rng.random_unitary(static_cast<Eigen::Index>(n));
  std::vector<Matrix> rho;
  for (Eigen::Index i = 0; i < dim; ++i) rho.push_back(s.adjoint() * natural.act(t.col(i)) * s);
  Module m = Module::make(a, std::move(rho));
  return {"random-" + std::to_string(seed), std::move(action), std::move(m)};
}

}  // namespace skewgroup
