#pragma once

#include <cstdint>

#include "skewgroup/skew.hpp"

namespace skewgroup {

/// Every simple N of A # G with eN != 0 gives a simple eN over e(A # G)e, and
/// every simple corner class arises this way.
VerificationReport check_invariant_theory(const SkewAlgebra& s, std::uint64_t seed = kDefaultSeed,
                                          double tol = kDefaultTol);

/// N ~ Ind(A^lambda (x) H^nu) for a simple A # G-module N, with H the inertia
/// group of A^lambda and H^nu = Hom_A(A^lambda, sum_h h A^lambda).
VerificationReport clifford_correspondence(const Module& n, const SkewAlgebra& s, std::uint64_t seed = kDefaultSeed,
                                           double tol = kDefaultTol);

/// Ind(M (x) W_gamma*) from A # G_M to A # G is simple; also checks the dimension law.
VerificationReport induced_simplicity(const ProjectiveSystem& system, const ProjectiveIsotypics& iso,
                                      std::size_t gamma, const SkewAlgebra& s, std::uint64_t seed = kDefaultSeed,
                                      double tol = kDefaultTol);

/// dim Hom(M, N) = dim of the symmetrizer image on M* (x) N = dim of its fixed space,
/// for modules over the same twisted group algebra.
VerificationReport hom_inv_check(const TwistedModule& m, const TwistedModule& n, double tol = kDefaultTol);

/// Each occurring multiplicity space M_gamma is a simple A^G-module, checked
/// directly and through the corner e(A # G)e acting on e(Ind(M (x) W_gamma*)).
VerificationReport main_theorem(const AlgebraAction& action, const Module& m, std::uint64_t seed = kDefaultSeed,
                                double tol = kDefaultTol);

/// M restricted to A^G splits into simples matching the M_gamma with multiplicities dim W_gamma.
VerificationReport complete_reducibility(const AlgebraAction& action, const Module& m,
                                         std::uint64_t seed = kDefaultSeed, double tol = kDefaultTol);

/// Certified isomorphism: equal dimension, nonzero Hom, and a full-rank Hom element.
bool isomorphic(const Module& a, const Module& b, std::uint64_t seed = kDefaultSeed, double tol = kDefaultTol);

}  // namespace skewgroup
