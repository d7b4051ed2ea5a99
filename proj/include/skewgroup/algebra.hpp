#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "skewgroup/numeric.hpp"

namespace skewgroup {

class AlgebraAction;

/// One nonzero structure constant: b_i * b_j contributes coeff * b_k.
struct StructureConstant {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Scalar coeff;
};

/// Finite-dimensional unital associative algebra over C given by structure
/// constants in a fixed basis b_0..b_{n-1}. Instances are immutable and are
/// shared between modules, actions and subalgebras through AlgebraPtr.
class Algebra {
 public:
  struct Term {
    std::size_t k;
    Scalar coeff;
  };

  /// Validates the unit laws and associativity (exhaustive over basis triples
  /// up to dimension 32, seeded random dense triples above).
  static Algebra make(std::size_t dim, const std::vector<StructureConstant>& mult, const Vector& unit,
                      double tol = kDefaultTol, std::vector<std::string> labels = {});

  std::size_t dim() const noexcept { return dim_; }
  const Vector& unit() const noexcept { return unit_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Sparse expansion of b_i * b_j.
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  std::vector<StructureConstant> structure_constants() const;

  Vector multiply(const Vector& x, const Vector& y) const;
  Vector basis_vector(std::size_t i) const;

  /// Matrix of y -> b_i * y.
  Matrix left_mult(std::size_t i) const;
  Matrix left_mult(const Vector& x) const;
  Matrix right_mult(const Vector& x) const;

  /// T(b_i, b_j) = trace(L_i L_j).
  const Matrix& trace_form() const noexcept { return trace_form_; }

  /// Largest structure-constant magnitude (at least 1); scales residual checks.
  double scale() const noexcept { return scale_; }

  /// Exact structural equality (same dimension, unit and constants).
  bool same_structure(const Algebra& other, double tol = 0.0) const;

 private:
  Algebra() = default;

  std::size_t dim_ = 0;
  std::vector<std::vector<Term>> table_;
  Vector unit_;
  std::vector<std::string> labels_;
  Matrix trace_form_;
  double scale_ = 1.0;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Image of a subalgebra inside a parent: columns of `inclusion` are the parent
/// coordinates of the sub basis. Sub bases are orthonormal in parent coordinates.
struct SubalgebraEmbedding {
  AlgebraPtr sub;
  AlgebraPtr parent;
  Matrix inclusion;
};

AlgebraPtr share(Algebra algebra);

/// M_n(C) with matrix units E_ij ordered row-major.
Algebra matrix_algebra(std::size_t n);

/// A (+) B with zero cross products.
Algebra direct_sum(const Algebra& a, const Algebra& b);

/// Group algebra C[G] of a multiplication table (basis = group elements).
Algebra group_algebra(const std::vector<std::vector<std::size_t>>& table, std::size_t identity);

/// Trace form of left multiplication has full rank.
bool is_semisimple(const Algebra& a, double tol = kDefaultTol);

/// Largest associativity residual over the given elements.
double associativity_residual(const Algebra& a, const Vector& x, const Vector& y, const Vector& z);

/// Span of { e x e } with e as unit. Throws NotIdempotent if e*e != e.
SubalgebraEmbedding corner_algebra(const AlgebraPtr& a, const Vector& e, double tol = kDefaultTol);

/// Subalgebra spanned by the columns of `basis` (must contain `unit_in_parent`).
/// Structure constants come from projecting products back onto the span;
/// a product leaving the span raises ClosureViolation.
SubalgebraEmbedding subalgebra_from_span(const AlgebraPtr& a, const Matrix& basis, const Vector& unit_in_parent,
                                         double tol = kDefaultTol);

/// A^G: joint fixed space of every action matrix, as a subalgebra containing the unit.
SubalgebraEmbedding fixed_subalgebra(const AlgebraAction& action, double tol = kDefaultTol);

/// Dual basis of the trace form: row i holds the coordinates of b^i with T(b_i, b^j) = delta_ij.
Matrix trace_dual_basis(const Algebra& a, double tol = kDefaultTol);

}  // namespace skewgroup
