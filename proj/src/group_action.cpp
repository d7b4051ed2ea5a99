#include "skewgroup/group_action.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "skewgroup/error.hpp"

namespace skewgroup {

namespace {

std::string pair_str(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

FiniteGroup FiniteGroup::make(Table table, std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "group table is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error(ErrorKind::InvalidInput, "group table row " + std::to_string(i) + " is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) throw Error(ErrorKind::InvalidInput, "group table entry out of range at " + pair_str(i, j));
    }
  }
  if (!names.empty() && names.size() != n) throw Error(ErrorKind::InvalidInput, "name count does not match order");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(ErrorKind::NotAssociative,
                      "triple (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }

  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = table[e][j] == j && table[j][e] == j;
    if (ok) identity = e;
  }
  if (identity == n) throw Error(ErrorKind::NoIdentity, "no element fixes every row and column");

  std::vector<std::size_t> inverses(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] == identity && table[j][i] == identity) {
        inverses[i] = j;
        break;
      }
    }
    if (inverses[i] == n) throw Error(ErrorKind::NoInverse, "element " + std::to_string(i) + " has no inverse");
  }

  FiniteGroup g;
  g.table_ = std::move(table);
  g.identity_ = identity;
  g.inverses_ = std::move(inverses);
  g.names_ = std::move(names);
  return g;
}

void FiniteGroup::require_subgroup(const std::vector<std::size_t>& elements) const {
  std::vector<bool> in(order(), false);
  for (auto e : elements) {
    if (e >= order()) throw Error(ErrorKind::NotASubgroup, "element " + std::to_string(e) + " out of range");
    in[e] = true;
  }
  if (!in[identity_]) throw Error(ErrorKind::NotASubgroup, "identity missing");
  for (auto a : elements) {
    if (!in[inverse(a)]) throw Error(ErrorKind::NotASubgroup, "inverse of " + std::to_string(a) + " missing");
    for (auto b : elements) {
      if (!in[mul(a, b)]) throw Error(ErrorKind::NotASubgroup, "product " + pair_str(a, b) + " leaves the set");
    }
  }
}

FiniteGroup FiniteGroup::subgroup(const std::vector<std::size_t>& elements) const {
  require_subgroup(elements);
  std::vector<std::size_t> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = i;
  Table t(sorted.size(), std::vector<std::size_t>(sorted.size()));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = 0; j < sorted.size(); ++j) t[i][j] = local.at(mul(sorted[i], sorted[j]));
    if (!names_.empty()) names.push_back(names_[sorted[i]]);
  }
  return make(std::move(t), std::move(names));
}

std::vector<std::size_t> left_cosets(const FiniteGroup& g, const std::vector<std::size_t>& h) {
  g.require_subgroup(h);
  std::vector<bool> covered(g.order(), false);
  std::vector<std::size_t> reps;
  auto cover = [&](std::size_t rep) {
    reps.push_back(rep);
    for (auto x : h) covered[g.mul(rep, x)] = true;
  };
  cover(g.identity());
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!covered[x]) cover(x);
  std::sort(reps.begin() + 1, reps.end());
  return reps;
}

AlgebraAction AlgebraAction::make(FiniteGroup group, AlgebraPtr target, std::vector<Matrix> mats, double tol) {
  const auto n = static_cast<Eigen::Index>(target->dim());
  if (mats.size() != group.order()) {
    throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(group.order()) + " action matrices, got " +
                                             std::to_string(mats.size()));
  }
  for (std::size_t g = 0; g < mats.size(); ++g) {
    if (mats[g].rows() != n || mats[g].cols() != n) {
      throw Error(ErrorKind::InvalidInput, "action matrix " + std::to_string(g) + " has the wrong shape");
    }
    numeric::require_finite(mats[g], "action matrix");
  }
  const double scale = target->scale();
  if ((mats[group.identity()] - Matrix::Identity(n, n)).norm() > tol * static_cast<double>(n)) {
    throw Error(ErrorKind::NotHomomorphism, "identity element does not act as the identity");
  }
  for (std::size_t g = 0; g < mats.size(); ++g) {
    for (std::size_t h = 0; h < mats.size(); ++h) {
      const double r = (mats[group.mul(g, h)] - mats[g] * mats[h]).norm();
      if (r > tol * numeric::scale_of(mats[g]) * numeric::scale_of(mats[h])) {
        throw Error(ErrorKind::NotHomomorphism, "pair " + pair_str(g, h) + " residual " + std::to_string(r));
      }
    }
  }
  for (std::size_t g = 0; g < mats.size(); ++g) {
    const Matrix& m = mats[g];
    const double ms = numeric::scale_of(m);
    if ((m * target->unit() - target->unit()).norm() > tol * ms * std::max(1.0, target->unit().norm())) {
      throw Error(ErrorKind::NotAutomorphism, "element " + std::to_string(g) + " does not fix the unit");
    }
    for (std::size_t i = 0; i < target->dim(); ++i) {
      for (std::size_t j = 0; j < target->dim(); ++j) {
        Vector prod = Vector::Zero(n);
        for (const auto& t : target->product(i, j)) prod(static_cast<Eigen::Index>(t.k)) += t.coeff;
        const Vector lhs = m * prod;
        const Vector rhs = target->multiply(m.col(static_cast<Eigen::Index>(i)), m.col(static_cast<Eigen::Index>(j)));
        const double r = (lhs - rhs).norm();
        if (r > tol * scale * ms * ms) {
          throw Error(ErrorKind::NotAutomorphism, "element " + std::to_string(g) + " on basis pair " + pair_str(i, j) +
                                                      " residual " + std::to_string(r));
        }
      }
    }
  }
  AlgebraAction action;
  action.group_ = std::move(group);
  action.target_ = std::move(target);
  action.mats_ = std::move(mats);
  return action;
}

AlgebraAction AlgebraAction::restrict_to(const std::vector<std::size_t>& elements) const {
  FiniteGroup sub = group_.subgroup(elements);
  std::vector<std::size_t> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Matrix> mats;
  mats.reserve(sorted.size());
  for (auto g : sorted) mats.push_back(mats_[g]);
  AlgebraAction action;
  action.group_ = std::move(sub);
  action.target_ = target_;
  action.mats_ = std::move(mats);
  return action;
}

namespace groups {

FiniteGroup trivial() { return FiniteGroup::make({{0}}); }

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "cyclic group order must be positive");
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::make(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.order() * b.order();
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x][y] = a.mul(x / b.order(), y / b.order()) * b.order() + b.mul(x % b.order(), y % b.order());
  return FiniteGroup::make(std::move(t));
}

FiniteGroup from_permutations(const std::vector<std::vector<std::size_t>>& perms) {
  const std::size_t n = perms.size();
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[perms[i]] = i;
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> c(perms[i].size());
      for (std::size_t x = 0; x < c.size(); ++x) c[x] = perms[i][perms[j][x]];
      auto it = index.find(c);
      if (it == index.end()) throw Error(ErrorKind::NotASubgroup, "permutation list is not closed");
      t[i][j] = it->second;
    }
  }
  return FiniteGroup::make(std::move(t));
}

std::vector<std::vector<std::size_t>> symmetric_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

FiniteGroup symmetric(std::size_t n) { return from_permutations(symmetric_permutations(n)); }

std::vector<std::vector<std::size_t>> dihedral_permutations(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::size_t> rot(n);
    for (std::size_t x = 0; x < n; ++x) rot[x] = (x + r) % n;
    out.push_back(rot);
  }
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::size_t> refl(n);
    for (std::size_t x = 0; x < n; ++x) refl[x] = (r + n - x) % n;
    out.push_back(refl);
  }
  return out;
}

FiniteGroup dihedral(std::size_t n) { return from_permutations(dihedral_permutations(n)); }

FiniteGroup quaternion() {
  // Unit (sign, axis) with axis 0=1, 1=i, 2=j, 3=k; index = 2*axis + (sign<0).
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  Table t(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x) {
    for (std::size_t y = 0; y < 8; ++y) {
      const std::size_t ax = x / 2, ay = y / 2;
      int s = sign[ax][ay] * ((x % 2) ? -1 : 1) * ((y % 2) ? -1 : 1);
      t[x][y] = 2 * static_cast<std::size_t>(axis[ax][ay]) + (s < 0 ? 1 : 0);
    }
  }
  return FiniteGroup::make(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

}  // namespace groups

}  // namespace skewgroup
