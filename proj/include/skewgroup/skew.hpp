#pragma once

#include <cstddef>
#include <vector>

#include "skewgroup/projective.hpp"
#include "skewgroup/report.hpp"

namespace skewgroup {

/// A # G with basis (b_i, g) at index i * |G| + g and product
/// (b_i g)(b_j h) = (b_i g(b_j)) (gh).
struct SkewAlgebra {
  AlgebraAction action;
  AlgebraPtr alg;
  Matrix embed_A;  // dim(A # G) x dim A, b_i -> (b_i, 1)
  Matrix embed_G;  // dim(A # G) x |G|, g -> (1, g)
  /// Index in the ambient group of each local group element (identity map for a whole skew algebra).
  std::vector<std::size_t> elements;

  const Algebra& base() const { return *action.target(); }
  const FiniteGroup& group() const { return action.group(); }
  SubalgebraEmbedding base_embedding() const { return {action.target(), alg, embed_A}; }
};

SkewAlgebra skew_group_algebra(const AlgebraAction& action, double tol = kDefaultTol);

/// A # H for the subgroup H of whole.group() on `elements`.
SkewAlgebra sub_skew_algebra(const SkewAlgebra& whole, const std::vector<std::size_t>& elements,
                             double tol = kDefaultTol);

/// e = |G|^{-1} sum_g (1, g).
Vector symmetrizer(const SkewAlgebra& s);

/// Phi: A^G -> e(A # G)e, a -> ae as an A^G-coordinate to corner-coordinate matrix.
Matrix phi_matrix(const SkewAlgebra& s, const SubalgebraEmbedding& fixed, const SubalgebraEmbedding& corner);

/// Bijectivity and multiplicativity of Phi, bimodule property of Psi: A -> (A # G)e.
VerificationReport check_phi_psi(const SkewAlgebra& s, double tol = kDefaultTol);

/// eN as a module over the corner algebra (zero-dimensional when eN = 0).
Module corner_module(const Module& n, const Vector& e, const SubalgebraEmbedding& corner, double tol = kDefaultTol);

/// Ind from A # H to A # G. Basis: coset representative major, M basis minor.
Module induce(const Module& m, const SkewAlgebra& sub, const SkewAlgebra& whole, double tol = kDefaultTol);

/// M (x) V over A # G_M with (a h)(m (x) v) = a phi(h) m (x) c_h v. V must live over
/// the twisted algebra of the inverse cocycle; otherwise CocycleMismatch.
Module extend_to_skew(const ProjectiveSystem& system, const TwistedModule& v, const SkewAlgebra& sub,
                      double tol = kDefaultTol);

}  // namespace skewgroup
