#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace skewgroup {

using Scalar = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr std::uint64_t kDefaultSeed = 1;

namespace numeric {

/// Throws InvalidInput if any entry is NaN or infinite.
void require_finite(const Matrix& m, const char* what);

/// Number of singular values strictly above tol * sigma_max (tol alone when m is zero).
std::size_t rank(const Matrix& m, double tol);

/// Orthonormal basis of the right null space, one basis vector per column.
Matrix nullspace(const Matrix& m, double tol);

/// Null space keeping singular values above tol * max(reference, sigma_max) as rank,
/// for systems that may vanish up to rounding.
Matrix nullspace_scaled(const Matrix& m, double tol, double reference);

/// Orthonormal basis of the column space.
Matrix range(const Matrix& m, double tol);

/// Column space keeping singular values above tol * reference, for matrices
/// (such as sums with cancellation) whose own largest singular value may be noise.
Matrix range_scaled(const Matrix& m, double tol, double reference);

struct HermitianEigen {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // unitary, columns match values
};

HermitianEigen eig_hermitian(const Matrix& m, double tol = kDefaultTol);

/// Basis of { X : X * P_i == Q_i * X for every pair }, orthonormal in the
/// Frobenius inner product. Each X has rows(Q) rows and rows(P) columns.
std::vector<Matrix> solve_sandwich(const std::vector<std::pair<Matrix, Matrix>>& pairs, double tol);

/// Deterministic orthonormal basis of span(basis): Gram-Schmidt on the
/// projected unit vectors, pivoting on the largest remaining diagonal of the
/// projector (lowest coordinate index wins near-ties). The pivot coordinate of
/// every returned vector is real and positive.
Matrix canonical_basis(const Matrix& basis);

/// Rows-stacked column vector of a matrix (column-major vec).
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols);

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Operator 2-norm bound used for residual scaling (Frobenius norm, at least 1).
double scale_of(const Matrix& m);

/// Seeded generator shared by all randomized routines.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  double gaussian();
  Scalar complex_gaussian();
  Matrix complex_gaussian(Eigen::Index rows, Eigen::Index cols);
  Matrix random_unitary(Eigen::Index n);
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace numeric
}  // namespace skewgroup
