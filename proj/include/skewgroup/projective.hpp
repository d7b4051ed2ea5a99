#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "skewgroup/repmod.hpp"

namespace skewgroup {

/// Normalized 2-cocycle alpha on a finite group:
/// alpha(1,h) = alpha(h,1) = 1 and alpha(h,k) alpha(hk,l) = alpha(h,kl) alpha(k,l).
class Cocycle {
 public:
  static Cocycle make(FiniteGroup group, Matrix table, double tol = kDefaultTol);
  static Cocycle trivial(FiniteGroup group);

  const FiniteGroup& group() const noexcept { return group_; }
  const Matrix& table() const noexcept { return table_; }
  Scalar operator()(std::size_t h, std::size_t k) const {
    return table_(static_cast<Eigen::Index>(h), static_cast<Eigen::Index>(k));
  }

  /// Entry-wise reciprocal.
  Cocycle inverse() const;

  /// Largest |alpha(h,k) alpha(hk,l) - alpha(h,kl) alpha(k,l)| over all triples.
  double identity_residual() const;
  /// Largest | |alpha(h,k)| - 1 |.
  double unimodularity_deviation() const;

 private:
  Cocycle() = default;

  FiniteGroup group_;
  Matrix table_;
};

/// C^{alpha^exponent}[H]: basis c_h, c_h c_k = alpha(h,k)^exponent c_{hk}.
struct TwistedGroupAlgebra {
  Cocycle cocycle;
  int exponent = 1;
  AlgebraPtr algebra;
};

TwistedGroupAlgebra twisted_group_algebra(const Cocycle& alpha, int exponent, double tol = kDefaultTol);

/// A module together with the twisted group algebra it lives over.
struct TwistedModule {
  TwistedGroupAlgebra algebra;
  Module module;
};

/// Inertia data of a simple A-module M under a group action.
struct ProjectiveSystem {
  Module module;
  AlgebraAction action;
  std::vector<std::size_t> inertia;  // ascending indices into action.group()
  FiniteGroup inertia_group;         // re-indexed in the order of `inertia`
  std::vector<Matrix> phi;           // phi[local h] : ^hM -> M
  Cocycle cocycle;
};

/// Rescales an intertwiner: largest-magnitude entry (first in row-major order
/// among near-ties) made real positive, Frobenius norm sqrt(dim).
Matrix normalize_intertwiner(const Matrix& phi);

/// G_M = { h : Hom_A(^hM, M) != 0 } with normalized phi(h) and its cocycle.
/// Throws NotSimple if M is not simple.
ProjectiveSystem inertia(const Module& m, const AlgebraAction& action, std::uint64_t seed = kDefaultSeed,
                         double tol = kDefaultTol);

/// alpha(h,k) from phi(h) phi(k) = alpha(h,k) phi(hk), read at the largest entry of phi(hk).
/// Throws NotProjective if the residual exceeds tol * |phi(hk)|.
Cocycle extract_cocycle(const std::vector<Matrix>& phi, const FiniteGroup& group, double tol = kDefaultTol);

/// M as a module over C^alpha[G_M] with c_h acting as phi(h).
TwistedModule module_over_twisted(const ProjectiveSystem& system, double tol = kDefaultTol);

/// W* with c_g acting as the transpose of the inverse of W's c_g; lives over the
/// twisted algebra with the opposite exponent.
TwistedModule contragredient(const TwistedModule& w, double tol = kDefaultTol);

/// A (x) B for modules whose cocycle powers cancel; the result is a module over
/// the plain group algebra of the common group.
TwistedModule tensor_cancelling(const TwistedModule& a, const TwistedModule& b, double tol = kDefaultTol);

struct ProjectiveClass {
  TwistedModule simple;       // W_lambda (representative piece)
  Matrix isotypic;            // M^lambda
  Matrix multiplicity_space;  // M_lambda = { f(w) }
  std::size_t multiplicity = 0;
  /// rank of { f_j(u_l) } for a Hom basis f_j and W basis u_l; equals dim M^lambda
  /// when M^lambda = M_lambda (x) W_lambda.
  std::size_t bijection_rank = 0;
  /// Distance of the bijection image from M^lambda.
  double bijection_residual = 0.0;
};

struct ProjectiveIsotypics {
  TwistedModule module;  // M over C^alpha[G_M]
  Decomposition decomposition;
  std::vector<ProjectiveClass> classes;
};

ProjectiveIsotypics projective_isotypics(const ProjectiveSystem& system, std::uint64_t seed = kDefaultSeed,
                                         double tol = kDefaultTol);

}  // namespace skewgroup
