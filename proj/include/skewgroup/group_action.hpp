#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "skewgroup/algebra.hpp"

namespace skewgroup {

using Table = std::vector<std::vector<std::size_t>>;

/// Finite group given by its multiplication table: table[i][j] = g_i g_j.
/// Elements are referred to by index only.
class FiniteGroup {
 public:
  /// Throws NotAssociative, NoIdentity or NoInverse with a witness.
  static FiniteGroup make(Table table, std::vector<std::string> names = {});

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t mul(std::size_t g, std::size_t h) const { return table_[g][h]; }
  std::size_t inverse(std::size_t g) const { return inverses_[g]; }
  const Table& table() const noexcept { return table_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Throws NotASubgroup unless `elements` is closed under products and inverses.
  void require_subgroup(const std::vector<std::size_t>& elements) const;

  /// The subgroup on `elements` (sorted ascending), re-indexed 0..|H|-1 in that order.
  FiniteGroup subgroup(const std::vector<std::size_t>& elements) const;

 private:
  friend class AlgebraAction;
  friend class Cocycle;
  FiniteGroup() = default;

  Table table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverses_;
  std::vector<std::string> names_;
};

/// Left coset representatives of H in G: the identity first, then the
/// minimal-index element of every other coset, ascending.
std::vector<std::size_t> left_cosets(const FiniteGroup& g, const std::vector<std::size_t>& h);

/// Group acting on an algebra by automorphisms; mats[g] maps coordinates of a
/// to coordinates of g(a).
class AlgebraAction {
 public:
  /// Throws NotHomomorphism or NotAutomorphism with the offending pair.
  static AlgebraAction make(FiniteGroup group, AlgebraPtr target, std::vector<Matrix> mats,
                            double tol = kDefaultTol);

  const FiniteGroup& group() const noexcept { return group_; }
  const AlgebraPtr& target() const noexcept { return target_; }
  const std::vector<Matrix>& mats() const noexcept { return mats_; }
  const Matrix& mat(std::size_t g) const { return mats_[g]; }

  Vector apply(std::size_t g, const Vector& a) const { return mats_[g] * a; }

  /// The action of the subgroup on `elements`, indexed as FiniteGroup::subgroup.
  AlgebraAction restrict_to(const std::vector<std::size_t>& elements) const;

 private:
  AlgebraAction() = default;

  FiniteGroup group_;
  AlgebraPtr target_;
  std::vector<Matrix> mats_;
};

namespace groups {

FiniteGroup trivial();
FiniteGroup cyclic(std::size_t n);
/// Elements (a, b) indexed a * |B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Permutation group from an element list of permutations (closed under composition);
/// (p q)(x) = p(q(x)).
FiniteGroup from_permutations(const std::vector<std::vector<std::size_t>>& perms);
/// All permutations of n points in lexicographic order (identity first).
std::vector<std::vector<std::size_t>> symmetric_permutations(std::size_t n);
FiniteGroup symmetric(std::size_t n);
/// Symmetries of the regular n-gon acting on its vertices.
std::vector<std::vector<std::size_t>> dihedral_permutations(std::size_t n);
FiniteGroup dihedral(std::size_t n);
/// Quaternion group {1, -1, i, -i, j, -j, k, -k}.
FiniteGroup quaternion();

}  // namespace groups

}  // namespace skewgroup
