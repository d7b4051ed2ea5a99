#include "skewgroup/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "skewgroup/error.hpp"

namespace skewgroup::numeric {

namespace {

Eigen::VectorXd singular_values(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues();
}

std::size_t rank_from(const Eigen::VectorXd& s, double tol) {
  if (s.size() == 0) return 0;
  const double top = s.maxCoeff();
  const double threshold = tol * (top > 0.0 ? top : 1.0);
  return static_cast<std::size_t>((s.array() > threshold).count());
}

void require_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw Error(ErrorKind::InvalidInput, "tolerance must be positive, got " + std::to_string(tol));
  }
}

}  // namespace

void require_finite(const Matrix& m, const char* what) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Scalar z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorKind::InvalidInput, std::string(what) + " has a non-finite entry at (" +
                                                 std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

std::size_t rank(const Matrix& m, double tol) {
  require_tol(tol);
  require_finite(m, "rank input");
  return rank_from(singular_values(m), tol);
}

Matrix nullspace(const Matrix& m, double tol) {
  require_tol(tol);
  require_finite(m, "nullspace input");
  const Eigen::Index n = m.cols();
  if (n == 0) return Matrix(0, 0);
  if (m.rows() == 0) return Matrix::Identity(n, n);
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto r = static_cast<Eigen::Index>(rank_from(svd.singularValues(), tol));
  return svd.matrixV().rightCols(n - r);
}

Matrix nullspace_scaled(const Matrix& m, double tol, double reference) {
  require_tol(tol);
  require_finite(m, "nullspace input");
  const Eigen::Index n = m.cols();
  if (n == 0) return Matrix(0, 0);
  if (m.rows() == 0) return Matrix::Identity(n, n);
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double threshold = tol * std::max(reference, s.size() > 0 ? s.maxCoeff() : 0.0);
  const auto r = static_cast<Eigen::Index>((s.array() > threshold).count());
  return svd.matrixV().rightCols(n - r);
}

Matrix range(const Matrix& m, double tol) {
  require_tol(tol);
  require_finite(m, "range input");
  if (m.rows() == 0 || m.cols() == 0) return Matrix(m.rows(), 0);
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto r = static_cast<Eigen::Index>(rank_from(svd.singularValues(), tol));
  return svd.matrixU().leftCols(r);
}

Matrix range_scaled(const Matrix& m, double tol, double reference) {
  require_tol(tol);
  require_finite(m, "range input");
  if (m.rows() == 0 || m.cols() == 0) return Matrix(m.rows(), 0);
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const auto r = static_cast<Eigen::Index>((s.array() > tol * reference).count());
  return svd.matrixU().leftCols(r);
}

HermitianEigen eig_hermitian(const Matrix& m, double tol) {
  require_tol(tol);
  require_finite(m, "eig_hermitian input");
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidInput, "eig_hermitian needs a square matrix");
  const double asym = (m - m.adjoint()).norm();
  if (asym > tol * std::max(1.0, m.norm())) {
    throw Error(ErrorKind::InvalidInput, "matrix is not Hermitian, |m - m*| = " + std::to_string(asym));
  }
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Vector vec(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

std::vector<Matrix> solve_sandwich(const std::vector<std::pair<Matrix, Matrix>>& pairs, double tol) {
  require_tol(tol);
  if (pairs.empty()) throw Error(ErrorKind::InvalidInput, "solve_sandwich needs at least one pair");
  const Eigen::Index d = pairs.front().first.rows();
  const Eigen::Index dd = pairs.front().second.rows();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [p, q] = pairs[i];
    if (p.rows() != d || p.cols() != d || q.rows() != dd || q.cols() != dd) {
      throw Error(ErrorKind::InvalidInput, "solve_sandwich pair " + std::to_string(i) + " has mismatched dimensions");
    }
  }
  const Eigen::Index unknowns = d * dd;
  if (unknowns == 0) return {};

  // vec(X P) = (P^T (x) I) vec X and vec(Q X) = (I (x) Q) vec X.
  const Matrix eye_d = Matrix::Identity(d, d);
  const Matrix eye_dd = Matrix::Identity(dd, dd);
  Matrix stacked(unknowns * static_cast<Eigen::Index>(pairs.size()), unknowns);
  double reference = 1.0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [p, q] = pairs[i];
    stacked.middleRows(static_cast<Eigen::Index>(i) * unknowns, unknowns) =
        kron(p.transpose(), eye_dd) - kron(eye_d, q);
    reference = std::max(reference, p.norm() + q.norm());
  }
  const Matrix basis = nullspace_scaled(stacked, tol, reference);
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(basis.cols()));
  for (Eigen::Index c = 0; c < basis.cols(); ++c) out.push_back(unvec(basis.col(c), dd, d));
  return out;
}

Matrix canonical_basis(const Matrix& basis) {
  const Eigen::Index n = basis.rows();
  if (basis.cols() == 0) return Matrix(n, 0);
  const Matrix q = range(basis, 1e-12);
  const Eigen::Index k = q.cols();
  // Residual projector P - sum v v^*, kept implicitly through its diagonal.
  Matrix projector = q * q.adjoint();
  Matrix out(n, k);
  for (Eigen::Index step = 0; step < k; ++step) {
    const Eigen::VectorXd diag = projector.diagonal().real();
    const double top = diag.maxCoeff();
    Eigen::Index pivot = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (diag(i) >= top * (1.0 - 1e-8)) {
        pivot = i;
        break;
      }
    }
    Vector v = projector.col(pivot) / std::sqrt(diag(pivot));
    out.col(step) = v;
    projector -= v * v.adjoint();
  }
  // One Gram-Schmidt pass to clean accumulated rounding.
  for (Eigen::Index c = 0; c < k; ++c) {
    for (Eigen::Index p = 0; p < c; ++p) out.col(c) -= out.col(p).dot(out.col(c)) * out.col(p);
    out.col(c).normalize();
  }
  return out;
}

double scale_of(const Matrix& m) { return std::max(1.0, m.norm()); }

double Rng::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

double Rng::gaussian() {
  // Box-Muller on the raw engine keeps streams identical across standard libraries.
  double u1 = uniform(0.0, 1.0);
  while (u1 <= 0.0) u1 = uniform(0.0, 1.0);
  const double u2 = uniform(0.0, 1.0);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Scalar Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

Matrix Rng::complex_gaussian(Eigen::Index rows, Eigen::Index cols) {
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = complex_gaussian();
  return m;
}

Matrix Rng::random_unitary(Eigen::Index n) {
  const Matrix z = complex_gaussian(n, n);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0.0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

std::size_t Rng::index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

}  // namespace skewgroup::numeric
