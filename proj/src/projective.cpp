#include "skewgroup/projective.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skewgroup/error.hpp"

namespace skewgroup {

namespace {

std::string pair_str(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Index of the largest-magnitude entry, first in row-major order among near-ties.
std::pair<Eigen::Index, Eigen::Index> dominant_entry(const Matrix& m) {
  const double top = m.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (std::abs(m(i, j)) >= top * (1.0 - 1e-8)) return {i, j};
  return {0, 0};
}

}  // namespace

Cocycle Cocycle::make(FiniteGroup group, Matrix table, double tol) {
  const auto n = static_cast<Eigen::Index>(group.order());
  if (table.rows() != n || table.cols() != n) throw Error(ErrorKind::InvalidInput, "cocycle table has the wrong shape");
  numeric::require_finite(table, "cocycle table");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (std::abs(table(i, j)) == 0.0) {
        throw Error(ErrorKind::NotProjective, "cocycle vanishes at " + pair_str(static_cast<std::size_t>(i),
                                                                                 static_cast<std::size_t>(j)));
      }
  const auto e = static_cast<Eigen::Index>(group.identity());
  for (Eigen::Index h = 0; h < n; ++h) {
    if (std::abs(table(e, h) - 1.0) > tol || std::abs(table(h, e) - 1.0) > tol) {
      throw Error(ErrorKind::NotProjective, "cocycle is not normalized at element " + std::to_string(h));
    }
  }
  Cocycle c;
  c.group_ = std::move(group);
  c.table_ = std::move(table);
  double scale = 1.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) scale = std::max(scale, std::abs(c.table_(i, j)));
  const double r = c.identity_residual();
  if (r > tol * scale * scale) {
    throw Error(ErrorKind::NotProjective, "cocycle identity residual " + std::to_string(r));
  }
  return c;
}

Cocycle Cocycle::trivial(FiniteGroup group) {
  const auto n = static_cast<Eigen::Index>(group.order());
  return make(std::move(group), Matrix::Ones(n, n));
}

Cocycle Cocycle::inverse() const {
  Cocycle c;
  c.group_ = group_;
  c.table_ = table_.cwiseInverse();
  return c;
}

double Cocycle::identity_residual() const {
  const std::size_t n = group_.order();
  double worst = 0.0;
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        const Scalar lhs = (*this)(h, k) * (*this)(group_.mul(h, k), l);
        const Scalar rhs = (*this)(h, group_.mul(k, l)) * (*this)(k, l);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
  return worst;
}

double Cocycle::unimodularity_deviation() const {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < table_.rows(); ++i)
    for (Eigen::Index j = 0; j < table_.cols(); ++j) worst = std::max(worst, std::abs(std::abs(table_(i, j)) - 1.0));
  return worst;
}

TwistedGroupAlgebra twisted_group_algebra(const Cocycle& alpha, int exponent, double tol) {
  if (exponent != 1 && exponent != -1) throw Error(ErrorKind::InvalidInput, "exponent must be +1 or -1");
  const auto& g = alpha.group();
  const std::size_t n = g.order();
  std::vector<StructureConstant> mult;
  std::vector<std::string> labels;
  for (std::size_t h = 0; h < n; ++h) {
    labels.push_back("c" + std::to_string(h));
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar a = alpha(h, k);
      mult.push_back({h, k, g.mul(h, k), exponent == 1 ? a : 1.0 / a});
    }
  }
  Vector unit = Vector::Zero(static_cast<Eigen::Index>(n));
  unit(static_cast<Eigen::Index>(g.identity())) = 1.0;
  return {alpha, exponent, share(Algebra::make(n, mult, unit, tol, std::move(labels)))};
}

Matrix normalize_intertwiner(const Matrix& phi) {
  const auto [i, j] = dominant_entry(phi);
  const Scalar z = phi(i, j);
  Matrix out = phi * (std::abs(z) / z);
  out *= std::sqrt(static_cast<double>(phi.rows())) / out.norm();
  return out;
}

Cocycle extract_cocycle(const std::vector<Matrix>& phi, const FiniteGroup& group, double tol) {
  const std::size_t n = group.order();
  if (phi.size() != n) throw Error(ErrorKind::InvalidInput, "need one intertwiner per group element");
  const Matrix& one = phi[group.identity()];
  if ((one - Matrix::Identity(one.rows(), one.cols())).norm() > tol) {
    throw Error(ErrorKind::InvalidInput, "phi(identity) must be the identity");
  }
  Matrix table(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t k = 0; k < n; ++k) {
      const Matrix lhs = phi[h] * phi[k];
      const Matrix& target = phi[group.mul(h, k)];
      const auto [i, j] = dominant_entry(target);
      const Scalar a = lhs(i, j) / target(i, j);
      const double r = (lhs - a * target).norm();
      if (r > tol * numeric::scale_of(target) * numeric::scale_of(phi[h]) * numeric::scale_of(phi[k])) {
        throw Error(ErrorKind::NotProjective, "phi(h)phi(k) is not a multiple of phi(hk) at " + pair_str(h, k) +
                                                  " (residual " + std::to_string(r) + ")");
      }
      table(static_cast<Eigen::Index>(h), static_cast<Eigen::Index>(k)) = a;
    }
  }
  return Cocycle::make(group, std::move(table), tol);
}

ProjectiveSystem inertia(const Module& m, const AlgebraAction& action, std::uint64_t seed, double tol) {
  if (!is_simple(m, seed, tol)) throw Error(ErrorKind::NotSimple, "inertia needs a simple module");
  const auto& g = action.group();
  std::vector<std::size_t> members;
  std::vector<Matrix> phis;
  for (std::size_t h = 0; h < g.order(); ++h) {
    if (h == g.identity()) {
      members.push_back(h);
      phis.push_back(Matrix::Identity(static_cast<Eigen::Index>(m.dim()), static_cast<Eigen::Index>(m.dim())));
      continue;
    }
    const auto basis = hom_space(twist(m, h, action), m, tol);
    if (basis.size() > 1) {
      throw Error(ErrorKind::NumericalInconsistency,
                  "Hom(^hM, M) has dimension " + std::to_string(basis.size()) + " for a simple M");
    }
    if (basis.size() == 1) {
      members.push_back(h);
      phis.push_back(normalize_intertwiner(basis.front()));
    }
  }
  // members is ascending, so it matches FiniteGroup::subgroup's local order.
  FiniteGroup local = g.subgroup(members);
  Cocycle alpha = extract_cocycle(phis, local, tol);
  return {m, action, std::move(members), std::move(local), std::move(phis), std::move(alpha)};
}

TwistedModule module_over_twisted(const ProjectiveSystem& system, double tol) {
  auto algebra = twisted_group_algebra(system.cocycle, 1, tol);
  try {
    Module w = Module::make(algebra.algebra, system.phi, tol);
    return {std::move(algebra), std::move(w)};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotARepresentation) throw Error(ErrorKind::NotProjective, e.what());
    throw;
  }
}

TwistedModule contragredient(const TwistedModule& w, double tol) {
  auto algebra = twisted_group_algebra(w.algebra.cocycle, -w.algebra.exponent, tol);
  std::vector<Matrix> rho;
  rho.reserve(w.module.rho().size());
  for (const auto& r : w.module.rho()) rho.push_back(r.inverse().transpose());
  Module dual = Module::make(algebra.algebra, std::move(rho), tol);
  return {std::move(algebra), std::move(dual)};
}

TwistedModule tensor_cancelling(const TwistedModule& a, const TwistedModule& b, double tol) {
  const auto& ga = a.algebra.cocycle.group();
  const auto& gb = b.algebra.cocycle.group();
  if (ga.table() != gb.table()) throw Error(ErrorKind::AlgebraMismatch, "tensor factors use different groups");
  if (a.algebra.exponent + b.algebra.exponent != 0 ||
      (a.algebra.cocycle.table() - b.algebra.cocycle.table()).norm() > tol * static_cast<double>(ga.order())) {
    throw Error(ErrorKind::CocycleMismatch, "cocycle powers of the tensor factors do not cancel");
  }
  auto plain = twisted_group_algebra(Cocycle::trivial(ga), 1, tol);
  std::vector<Matrix> rho;
  for (std::size_t g = 0; g < ga.order(); ++g) rho.push_back(numeric::kron(a.module.rho(g), b.module.rho(g)));
  Module t = Module::make(plain.algebra, std::move(rho), tol);
  return {std::move(plain), std::move(t)};
}

ProjectiveIsotypics projective_isotypics(const ProjectiveSystem& system, std::uint64_t seed, double tol) {
  TwistedModule w = module_over_twisted(system, tol);
  Decomposition d = decompose(w.module, seed, tol);
  std::vector<ProjectiveClass> classes;
  for (const auto& cls : d.classes) {
    const Matrix& rep = d.pieces[cls.representative].basis;
    Module simple = submodule(w.module, rep, tol);
    ProjectiveClass pc{{w.algebra, simple}, cls.isotypic, cls.multiplicity_space, cls.multiplicity, 0, 0.0};

    // Independent route: all of Hom(W_lambda, M), evaluated at w and on the whole of W.
    const auto homs = hom_space(simple, w.module, tol);
    const auto wd = static_cast<Eigen::Index>(simple.dim());
    Matrix at_w(static_cast<Eigen::Index>(w.module.dim()), static_cast<Eigen::Index>(homs.size()));
    Matrix images(static_cast<Eigen::Index>(w.module.dim()), static_cast<Eigen::Index>(homs.size()) * wd);
    for (std::size_t j = 0; j < homs.size(); ++j) {
      at_w.col(static_cast<Eigen::Index>(j)) = homs[j].col(0);
      images.middleCols(static_cast<Eigen::Index>(j) * wd, wd) = homs[j];
    }
    if (homs.size() != cls.multiplicity ||
        numeric::rank(at_w, tol) != cls.multiplicity ||
        numeric::rank((Matrix(at_w.rows(), at_w.cols() + cls.multiplicity_space.cols()) << at_w, cls.multiplicity_space)
                          .finished(),
                      tol) != cls.multiplicity) {
      throw Error(ErrorKind::NumericalInconsistency,
                  "multiplicity space realizations disagree for class of dimension " + std::to_string(cls.simple_dim));
    }
    pc.bijection_rank = numeric::rank(images, tol);
    pc.bijection_residual = (images - cls.isotypic * (cls.isotypic.adjoint() * images)).norm();
    classes.push_back(std::move(pc));
  }
  return {std::move(w), std::move(d), std::move(classes)};
}

}  // namespace skewgroup
