#include "skewgroup/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "skewgroup/error.hpp"
#include "skewgroup/group_action.hpp"

namespace skewgroup {

namespace {

constexpr std::size_t kExhaustiveAssociativityDim = 32;
constexpr int kSampledAssociativityTriples = 64;

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

Algebra Algebra::make(std::size_t dim, const std::vector<StructureConstant>& mult, const Vector& unit, double tol,
                      std::vector<std::string> labels) {
  if (dim == 0) throw Error(ErrorKind::InvalidInput, "algebra dimension must be positive");
  if (static_cast<std::size_t>(unit.size()) != dim) {
    throw Error(ErrorKind::InvalidInput, "unit has " + std::to_string(unit.size()) + " coordinates, expected " +
                                             std::to_string(dim));
  }
  if (!labels.empty() && labels.size() != dim) {
    throw Error(ErrorKind::InvalidInput, "label count does not match dimension");
  }
  numeric::require_finite(unit, "unit");

  Algebra a;
  a.dim_ = dim;
  a.unit_ = unit;
  a.labels_ = std::move(labels);

  // Accumulate duplicates, keep terms sorted by k.
  std::vector<std::map<std::size_t, Scalar>> acc(dim * dim);
  for (const auto& c : mult) {
    if (c.i >= dim || c.j >= dim || c.k >= dim) {
      throw Error(ErrorKind::InvalidInput, "structure constant index out of range at " + triple(c.i, c.j, c.k));
    }
    if (!std::isfinite(c.coeff.real()) || !std::isfinite(c.coeff.imag())) {
      throw Error(ErrorKind::InvalidInput, "non-finite structure constant at " + triple(c.i, c.j, c.k));
    }
    acc[c.i * dim + c.j][c.k] += c.coeff;
  }
  a.table_.resize(dim * dim);
  for (std::size_t p = 0; p < dim * dim; ++p) {
    for (const auto& [k, coeff] : acc[p]) {
      if (coeff != Scalar(0.0)) {
        a.table_[p].push_back({k, coeff});
        a.scale_ = std::max(a.scale_, std::abs(coeff));
      }
    }
  }

  // Unit laws.
  const double unit_tol = tol * a.scale_ * std::max(1.0, unit.norm());
  for (std::size_t i = 0; i < dim; ++i) {
    const Vector bi = a.basis_vector(i);
    const double left = (a.multiply(unit, bi) - bi).norm();
    const double right = (a.multiply(bi, unit) - bi).norm();
    if (left > unit_tol || right > unit_tol) {
      throw Error(ErrorKind::UnitViolation, "unit law fails at basis index " + std::to_string(i) +
                                                " (residual " + std::to_string(std::max(left, right)) + ")");
    }
  }

  // Associativity.
  const double assoc_tol = tol * a.scale_ * a.scale_;
  if (dim <= kExhaustiveAssociativityDim) {
    Vector lhs(dim), rhs(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) {
          lhs.setZero();
          rhs.setZero();
          for (const auto& t : a.product(i, j))
            for (const auto& u : a.product(t.k, k)) lhs(u.k) += t.coeff * u.coeff;
          for (const auto& t : a.product(j, k))
            for (const auto& u : a.product(i, t.k)) rhs(u.k) += t.coeff * u.coeff;
          const double r = (lhs - rhs).norm();
          if (r > assoc_tol) {
            throw Error(ErrorKind::AssociativityViolation,
                        "basis triple " + triple(i, j, k) + " has residual " + std::to_string(r));
          }
        }
      }
    }
  } else {
    numeric::Rng rng(kDefaultSeed);
    for (int s = 0; s < kSampledAssociativityTriples; ++s) {
      const Vector x = rng.complex_gaussian(static_cast<Eigen::Index>(dim), 1);
      const Vector y = rng.complex_gaussian(static_cast<Eigen::Index>(dim), 1);
      const Vector z = rng.complex_gaussian(static_cast<Eigen::Index>(dim), 1);
      const double r = associativity_residual(a, x, y, z);
      const double size = x.norm() * y.norm() * z.norm();
      if (r > assoc_tol * size) {
        throw Error(ErrorKind::AssociativityViolation,
                    "random triple " + std::to_string(s) + " has residual " + std::to_string(r));
      }
    }
  }

  // Trace form T(b_i, b_j) = sum_{k,l} (L_i)_{kl} (L_j)_{lk}.
  std::vector<Matrix> left(dim);
  for (std::size_t i = 0; i < dim; ++i) left[i] = a.left_mult(i);
  a.trace_form_.resize(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const Scalar t = left[i].cwiseProduct(left[j].transpose()).sum();
      a.trace_form_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = t;
      a.trace_form_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = t;
    }
  }
  return a;
}

std::vector<StructureConstant> Algebra::structure_constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& t : product(i, j)) out.push_back({i, j, t.k, t.coeff});
  return out;
}

Vector Algebra::basis_vector(std::size_t i) const {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim_));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return v;
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  Vector out = Vector::Zero(static_cast<Eigen::Index>(dim_));
  for (std::size_t i = 0; i < dim_; ++i) {
    const Scalar xi = x(static_cast<Eigen::Index>(i));
    if (xi == Scalar(0.0)) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      const Scalar xy = xi * y(static_cast<Eigen::Index>(j));
      if (xy == Scalar(0.0)) continue;
      for (const auto& t : product(i, j)) out(static_cast<Eigen::Index>(t.k)) += xy * t.coeff;
    }
  }
  return out;
}

Matrix Algebra::left_mult(std::size_t i) const {
  const auto n = static_cast<Eigen::Index>(dim_);
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t j = 0; j < dim_; ++j)
    for (const auto& t : product(i, j)) m(static_cast<Eigen::Index>(t.k), static_cast<Eigen::Index>(j)) += t.coeff;
  return m;
}

Matrix Algebra::left_mult(const Vector& x) const {
  const auto n = static_cast<Eigen::Index>(dim_);
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < dim_; ++i) {
    const Scalar xi = x(static_cast<Eigen::Index>(i));
    if (xi == Scalar(0.0)) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& t : product(i, j))
        m(static_cast<Eigen::Index>(t.k), static_cast<Eigen::Index>(j)) += xi * t.coeff;
  }
  return m;
}

Matrix Algebra::right_mult(const Vector& x) const {
  const auto n = static_cast<Eigen::Index>(dim_);
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t j = 0; j < dim_; ++j) {
    const Scalar xj = x(static_cast<Eigen::Index>(j));
    if (xj == Scalar(0.0)) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      for (const auto& t : product(i, j))
        m(static_cast<Eigen::Index>(t.k), static_cast<Eigen::Index>(i)) += xj * t.coeff;
  }
  return m;
}

bool Algebra::same_structure(const Algebra& other, double tol) const {
  if (dim_ != other.dim_) return false;
  if ((unit_ - other.unit_).norm() > tol) return false;
  for (std::size_t p = 0; p < dim_ * dim_; ++p) {
    Vector mine = Vector::Zero(static_cast<Eigen::Index>(dim_));
    Vector theirs = Vector::Zero(static_cast<Eigen::Index>(dim_));
    for (const auto& t : table_[p]) mine(static_cast<Eigen::Index>(t.k)) += t.coeff;
    for (const auto& t : other.table_[p]) theirs(static_cast<Eigen::Index>(t.k)) += t.coeff;
    if ((mine - theirs).norm() > tol) return false;
  }
  return true;
}

AlgebraPtr share(Algebra algebra) { return std::make_shared<const Algebra>(std::move(algebra)); }

Algebra matrix_algebra(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "matrix algebra size must be at least 1");
  const std::size_t dim = n * n;
  std::vector<StructureConstant> mult;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      // E_ij E_jl = E_il
      for (std::size_t l = 0; l < n; ++l) mult.push_back({i * n + j, j * n + l, i * n + l, 1.0});
    }
  }
  Vector unit = Vector::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < n; ++i) unit(static_cast<Eigen::Index>(i * n + i)) = 1.0;
  return Algebra::make(dim, mult, unit, kDefaultTol, std::move(labels));
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  const std::size_t dim = a.dim() + b.dim();
  std::vector<StructureConstant> mult = a.structure_constants();
  for (const auto& c : b.structure_constants()) mult.push_back({c.i + a.dim(), c.j + a.dim(), c.k + a.dim(), c.coeff});
  Vector unit(static_cast<Eigen::Index>(dim));
  unit << a.unit(), b.unit();
  std::vector<std::string> labels;
  if (!a.labels().empty() && !b.labels().empty()) {
    for (const auto& l : a.labels()) labels.push_back(l + "'");
    for (const auto& l : b.labels()) labels.push_back(l + "''");
  }
  return Algebra::make(dim, mult, unit, kDefaultTol, std::move(labels));
}

Algebra group_algebra(const std::vector<std::vector<std::size_t>>& table, std::size_t identity) {
  const std::size_t n = table.size();
  std::vector<StructureConstant> mult;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) mult.push_back({g, h, table[g][h], 1.0});
  Vector unit = Vector::Zero(static_cast<Eigen::Index>(n));
  unit(static_cast<Eigen::Index>(identity)) = 1.0;
  return Algebra::make(n, mult, unit);
}

bool is_semisimple(const Algebra& a, double tol) {
  return numeric::rank(a.trace_form(), tol) == a.dim();
}

double associativity_residual(const Algebra& a, const Vector& x, const Vector& y, const Vector& z) {
  return (a.multiply(a.multiply(x, y), z) - a.multiply(x, a.multiply(y, z))).norm();
}

SubalgebraEmbedding subalgebra_from_span(const AlgebraPtr& a, const Matrix& basis, const Vector& unit_in_parent,
                                         double tol) {
  const Matrix q = numeric::canonical_basis(basis);
  const auto k = static_cast<std::size_t>(q.cols());
  if (k == 0) throw Error(ErrorKind::InvalidInput, "subalgebra span is zero");
  const double closure_tol = tol * a->scale() * std::max(1.0, unit_in_parent.norm());

  const Vector unit_coords = q.adjoint() * unit_in_parent;
  if ((q * unit_coords - unit_in_parent).norm() > closure_tol) {
    throw Error(ErrorKind::ClosureViolation, "span does not contain the requested unit");
  }

  std::vector<StructureConstant> mult;
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t t = 0; t < k; ++t) {
      const Vector p = a->multiply(q.col(static_cast<Eigen::Index>(s)), q.col(static_cast<Eigen::Index>(t)));
      const Vector coords = q.adjoint() * p;
      const double r = (p - q * coords).norm();
      if (r > closure_tol) {
        throw Error(ErrorKind::ClosureViolation, "product of sub basis pair (" + std::to_string(s) + "," +
                                                     std::to_string(t) + ") leaves the span by " +
                                                     std::to_string(r));
      }
      for (std::size_t u = 0; u < k; ++u) {
        const Scalar c = coords(static_cast<Eigen::Index>(u));
        if (c != Scalar(0.0)) mult.push_back({s, t, u, c});
      }
    }
  }
  return {share(Algebra::make(k, mult, unit_coords, tol)), a, q};
}

SubalgebraEmbedding corner_algebra(const AlgebraPtr& a, const Vector& e, double tol) {
  if (static_cast<std::size_t>(e.size()) != a->dim()) {
    throw Error(ErrorKind::InvalidInput, "idempotent has the wrong number of coordinates");
  }
  const double r = (a->multiply(e, e) - e).norm();
  if (r > tol * a->scale() * std::max(1.0, e.norm())) {
    throw Error(ErrorKind::NotIdempotent, "e*e - e has norm " + std::to_string(r));
  }
  // e b_i e for every basis element.
  const Matrix le = a->left_mult(e);
  const Matrix re = a->right_mult(e);
  const Matrix span = le * re;
  return subalgebra_from_span(a, numeric::range(span, tol), e, tol);
}

SubalgebraEmbedding fixed_subalgebra(const AlgebraAction& action, double tol) {
  const auto& a = action.target();
  const auto n = static_cast<Eigen::Index>(a->dim());
  const auto& mats = action.mats();
  Matrix stacked(n * static_cast<Eigen::Index>(mats.size()), n);
  double reference = 1.0;
  for (std::size_t g = 0; g < mats.size(); ++g) {
    stacked.middleRows(static_cast<Eigen::Index>(g) * n, n) = mats[g] - Matrix::Identity(n, n);
    reference = std::max(reference, numeric::scale_of(mats[g]));
  }
  return subalgebra_from_span(a, numeric::nullspace_scaled(stacked, tol, reference), a->unit(), tol);
}

Matrix trace_dual_basis(const Algebra& a, double tol) {
  if (!is_semisimple(a, tol)) throw Error(ErrorKind::NotSemisimple, "trace form is degenerate");
  // T symmetric, so T D^T = I gives D = T^{-1}.
  return a.trace_form().fullPivLu().inverse();
}

}  // namespace skewgroup
