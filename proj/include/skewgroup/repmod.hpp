#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "skewgroup/algebra.hpp"
#include "skewgroup/group_action.hpp"

namespace skewgroup {

/// Finite-dimensional representation: one action matrix per algebra basis element.
class Module {
 public:
  /// Throws NotARepresentation with the offending pair.
  static Module make(AlgebraPtr algebra, std::vector<Matrix> rho, double tol = kDefaultTol);

  /// Left regular module (rho(b_i) = L_i); valid for any associative algebra.
  static Module regular(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Matrix>& rho() const noexcept { return rho_; }
  const Matrix& rho(std::size_t i) const { return rho_[i]; }

  /// rho(a) for a coordinate vector a.
  Matrix act(const Vector& a) const;

 private:
  Module() = default;

  AlgebraPtr algebra_;
  std::size_t dim_ = 0;
  std::vector<Matrix> rho_;
};

/// Same shared instance or identical structure constants.
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Basis of Hom_A(M, N): matrices f (dim N x dim M) with f rho_M(a) = rho_N(a) f.
std::vector<Matrix> hom_space(const Module& m, const Module& n, double tol = kDefaultTol);

/// Projection X -> sum_i rho_N(b_i) X rho_M(b^i) onto Hom_A(M, N), b^i the
/// trace-form dual basis. Requires a semisimple algebra.
Matrix intertwiner_projection(const Module& m, const Module& n, const Matrix& x, double tol = kDefaultTol);

/// trace(rho(b_i)) for every basis element.
Vector character(const Module& m);

/// dim Hom_A(M, N) from characters paired through the trace-form dual basis.
double character_pairing(const Module& m, const Module& n, double tol = kDefaultTol);

struct SimplicityCriteria {
  std::size_t commutant_dim = 0;
  /// Every sampled kernel vector generated the whole module.
  bool cyclic = false;
};

/// Both simplicity criteria without reconciling them. The cyclic test draws
/// vectors from ker(rho(a) - lambda) for seeded random algebra elements a and
/// eigenvalues lambda, then closes span{v} under the action.
SimplicityCriteria simplicity_criteria(const Module& m, std::uint64_t seed = kDefaultSeed, double tol = kDefaultTol);

/// Commutant is one-dimensional and sampled kernel vectors are cyclic.
/// Throws NumericalInconsistency if the two criteria disagree.
bool is_simple(const Module& m, std::uint64_t seed = kDefaultSeed, double tol = kDefaultTol);

/// ^gM: same carrier, a acts as g^{-1}(a).
Module twist(const Module& m, std::size_t g, const AlgebraAction& action);

/// Module over the sub algebra with rho'(x) = rho(inclusion x).
Module restrict(const Module& m, const SubalgebraEmbedding& embedding);

/// Action on the invariant subspace spanned by the orthonormal columns of `basis`.
/// Throws NotARepresentation if the subspace is not invariant.
Module submodule(const Module& m, const Matrix& basis, double tol = kDefaultTol);

/// Largest ||(I - QQ*) rho(b_i) Q|| over the basis, Q orthonormal.
double invariance_residual(const Module& m, const Matrix& basis);

struct Piece {
  Matrix basis;  // orthonormal columns in M coordinates
  std::size_t iso_class = 0;
};

struct IsoClass {
  std::size_t simple_dim = 0;
  std::size_t multiplicity = 0;
  std::size_t representative = 0;  // index into pieces
  Matrix isotypic;                 // orthonormal basis of M^lambda
  Matrix multiplicity_space;       // orthonormal basis of {f(w)}, w the first basis vector of the representative
};

struct Decomposition {
  std::vector<Piece> pieces;
  std::vector<IsoClass> classes;  // ascending simple dimension, then first appearance
  std::uint64_t seed_used = 0;
};

/// Splits a module over a semisimple algebra into simple pieces using the
/// eigenspaces of a random commutant element. Retries up to 8 further seeds on
/// degenerate samples, then throws DegenerateSample.
Decomposition decompose(const Module& m, std::uint64_t seed = kDefaultSeed, double tol = kDefaultTol);

/// Module on the span of a single piece.
Module piece_module(const Module& m, const Decomposition& d, std::size_t piece, double tol = kDefaultTol);

/// For a module over a group algebra (basis = group elements): image of
/// sum_g rho(g), cross-checked against the joint fixed space of all rho(g).
/// Throws NumericalInconsistency if the two dimensions differ.
Matrix invariant_subspace(const Module& m, double tol = kDefaultTol);

}  // namespace skewgroup
