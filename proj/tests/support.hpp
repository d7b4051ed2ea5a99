#pragma once

// Oracles for the unit tests. They avoid the library's SVD-based kernels and
// work from explicit formulas or Eigen's full-pivot LU instead.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "skewgroup/fixtures.hpp"
#include "skewgroup/job.hpp"
#include "skewgroup/theorems.hpp"

namespace oracle {

using skewgroup::Matrix;
using skewgroup::Scalar;
using skewgroup::Vector;

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Pivots count relative to the largest one, and the whole matrix counts as zero
// below threshold * reference.
inline std::size_t lu_rank(const Matrix& m, double threshold = 1e-8, double reference = 1.0) {
  if (m.size() == 0 || m.cwiseAbs().maxCoeff() <= threshold * reference) return 0;
  Eigen::FullPivLU<Matrix> lu(m);
  lu.setThreshold(threshold);
  return static_cast<std::size_t>(lu.rank());
}

inline std::size_t lu_kernel_dim(const Matrix& m, double threshold = 1e-8, double reference = 1.0) {
  return static_cast<std::size_t>(m.cols()) - lu_rank(m, threshold, reference);
}

// dim { X : X P_i = Q_i X } through the column-major identity vec(X P) = (P^T (x) I) vec X.
inline std::size_t intertwiner_dim(const std::vector<Matrix>& p, const std::vector<Matrix>& q) {
  if (p.empty()) return 0;
  const Eigen::Index d = p[0].rows();
  const Eigen::Index e = q[0].rows();
  Matrix stacked(static_cast<Eigen::Index>(p.size()) * d * e, d * e);
  for (std::size_t i = 0; i < p.size(); ++i) {
    stacked.middleRows(static_cast<Eigen::Index>(i) * d * e, d * e) =
        kron(p[i].transpose(), Matrix::Identity(e, e)) - kron(Matrix::Identity(d, d), q[i]);
  }
  return lu_kernel_dim(stacked);
}

inline std::size_t hom_dim(const skewgroup::Module& m, const skewgroup::Module& n) {
  return intertwiner_dim(m.rho(), n.rho());
}

inline Matrix unit_matrix(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  Matrix m = Matrix::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

inline Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

// Natural module of M_n in the row-major matrix-unit basis.
inline skewgroup::Module natural(const skewgroup::AlgebraPtr& mn, std::size_t n) {
  std::vector<Matrix> rho;
  const auto d = static_cast<Eigen::Index>(n);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) rho.push_back(unit_matrix(d, i, j));
  return skewgroup::Module::make(mn, rho);
}

// Conjugation a -> U a U^{-1} on row-major matrix-unit coordinates of M_n.
inline Matrix conjugation(const Matrix& u) {
  const Eigen::Index n = u.rows();
  const Matrix inv = u.inverse();
  Matrix out(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Matrix img = u * unit_matrix(n, i, j) * inv;
      for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index q = 0; q < n; ++q) out(p * n + q, i * n + j) = img(p, q);
    }
  return out;
}

// One-dimensional representation of C[G] in the group basis.
inline skewgroup::Module character(const skewgroup::AlgebraPtr& cg, const std::vector<Scalar>& values) {
  std::vector<Matrix> rho;
  for (Scalar v : values) rho.push_back(Matrix::Constant(1, 1, v));
  return skewgroup::Module::make(cg, rho);
}

inline skewgroup::AlgebraPtr group_algebra_of(const skewgroup::FiniteGroup& g) {
  return skewgroup::share(skewgroup::group_algebra(g.table(), g.identity()));
}

// Block-diagonal sum of modules over one algebra, conjugated by a random basis change.
inline skewgroup::Module direct_sum_module(const std::vector<skewgroup::Module>& parts, skewgroup::numeric::Rng& rng) {
  Eigen::Index d = 0;
  for (const auto& p : parts) d += static_cast<Eigen::Index>(p.dim());
  const Matrix s = rng.complex_gaussian(d, d);
  const Matrix inv = s.inverse();
  const auto& alg = parts.front().algebra();
  std::vector<Matrix> rho;
  for (std::size_t b = 0; b < alg->dim(); ++b) {
    Matrix blockdiag = Matrix::Zero(d, d);
    Eigen::Index at = 0;
    for (const auto& p : parts) {
      const auto n = static_cast<Eigen::Index>(p.dim());
      blockdiag.block(at, at, n, n) = p.rho(b);
      at += n;
    }
    rho.push_back(s * blockdiag * inv);
  }
  return skewgroup::Module::make(alg, rho);
}

// Simple modules of C[G], one per class, from the regular module.
inline std::vector<skewgroup::Module> irreps(const skewgroup::AlgebraPtr& cg) {
  const auto reg = skewgroup::Module::regular(cg);
  const auto d = skewgroup::decompose(reg);
  std::vector<skewgroup::Module> out;
  for (const auto& c : d.classes) out.push_back(skewgroup::piece_module(reg, d, c.representative));
  return out;
}

inline bool all_pass(const skewgroup::VerificationReport& r) { return r.passed(); }

inline std::string failures(const skewgroup::VerificationReport& r) {
  std::string out = r.error;
  for (const auto& c : r.checks)
    if (!c.pass) out += " " + c.name;
  return out;
}

inline long long dim_of(const skewgroup::VerificationReport& r, const std::string& check, const std::string& key) {
  for (const auto& c : r.checks)
    if (c.name == check)
      for (const auto& [k, v] : c.dims)
        if (k == key) return v;
  return -1;
}

}  // namespace oracle
