#include "skewgroup/skew.hpp"

#include <algorithm>
#include <string>

#include "skewgroup/error.hpp"

namespace skewgroup {

SkewAlgebra skew_group_algebra(const AlgebraAction& action, double tol) {
  const Algebra& a = *action.target();
  const auto& g = action.group();
  const std::size_t na = a.dim();
  const std::size_t ng = g.order();
  const std::size_t n = na * ng;

  std::vector<StructureConstant> mult;
  for (std::size_t i = 0; i < na; ++i) {
    const Matrix li = a.left_mult(i);
    for (std::size_t x = 0; x < ng; ++x) {
      // column j holds b_i x(b_j)
      const Matrix coeff = li * action.mat(x);
      for (std::size_t j = 0; j < na; ++j) {
        for (std::size_t y = 0; y < ng; ++y) {
          const std::size_t xy = g.mul(x, y);
          for (std::size_t l = 0; l < na; ++l) {
            const Scalar c = coeff(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(j));
            if (c != Scalar(0.0)) mult.push_back({i * ng + x, j * ng + y, l * ng + xy, c});
          }
        }
      }
    }
  }

  Vector unit = Vector::Zero(static_cast<Eigen::Index>(n));
  Matrix embed_a = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(na));
  Matrix embed_g = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(ng));
  for (std::size_t i = 0; i < na; ++i) {
    const auto row = static_cast<Eigen::Index>(i * ng + g.identity());
    unit(row) = a.unit()(static_cast<Eigen::Index>(i));
    embed_a(row, static_cast<Eigen::Index>(i)) = 1.0;
    for (std::size_t x = 0; x < ng; ++x) {
      embed_g(static_cast<Eigen::Index>(i * ng + x), static_cast<Eigen::Index>(x)) = a.unit()(static_cast<Eigen::Index>(i));
    }
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < na; ++i) {
    const std::string bi = a.labels().empty() ? "b" + std::to_string(i) : a.labels()[i];
    for (std::size_t x = 0; x < ng; ++x) {
      const std::string gx = g.names().empty() ? "g" + std::to_string(x) : g.names()[x];
      labels.push_back(bi + "#" + gx);
    }
  }

  std::vector<std::size_t> elements(ng);
  for (std::size_t x = 0; x < ng; ++x) elements[x] = x;
  return {action, share(Algebra::make(n, mult, unit, tol, std::move(labels))), std::move(embed_a),
          std::move(embed_g), std::move(elements)};
}

SkewAlgebra sub_skew_algebra(const SkewAlgebra& whole, const std::vector<std::size_t>& elements, double tol) {
  std::vector<std::size_t> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  whole.group().require_subgroup(sorted);
  std::vector<std::size_t> global(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) global[i] = whole.elements[sorted[i]];
  SkewAlgebra sub = skew_group_algebra(whole.action.restrict_to(sorted), tol);
  sub.elements = std::move(global);
  return sub;
}

Vector symmetrizer(const SkewAlgebra& s) {
  return s.embed_G.rowwise().sum() / static_cast<double>(s.group().order());
}

Matrix phi_matrix(const SkewAlgebra& s, const SubalgebraEmbedding& fixed, const SubalgebraEmbedding& corner) {
  const Matrix image = s.alg->right_mult(symmetrizer(s)) * s.embed_A * fixed.inclusion;
  return corner.inclusion.adjoint() * image;
}

VerificationReport check_phi_psi(const SkewAlgebra& s, double tol) {
  VerificationReport report;
  report.task = "phi_psi";
  report.tol = tol;
  const Algebra& a = s.base();
  const Algebra& sk = *s.alg;
  const double scale = std::max(a.scale(), sk.scale());
  const double rtol = tol * 1e3 * scale;

  const Vector e = symmetrizer(s);
  const double idem = (sk.multiply(e, e) - e).norm();
  report.add("e_idempotent", idem <= rtol).residual("|ee-e|", idem);

  const SubalgebraEmbedding fixed = fixed_subalgebra(s.action, tol);
  const SubalgebraEmbedding corner = corner_algebra(s.alg, e, tol);
  const auto fdim = static_cast<long long>(fixed.sub->dim());
  const auto cdim = static_cast<long long>(corner.sub->dim());

  double commute = 0.0;
  for (Eigen::Index j = 0; j < fixed.inclusion.cols(); ++j) {
    const Vector x = s.embed_A * fixed.inclusion.col(j);
    commute = std::max(commute, (sk.multiply(e, x) - sk.multiply(x, e)).norm());
  }
  for (Eigen::Index g = 0; g < s.embed_G.cols(); ++g) {
    const Vector x = s.embed_G.col(g);
    commute = std::max(commute, (sk.multiply(e, x) - sk.multiply(x, e)).norm());
  }
  report.add("e_central_for_invariants_and_group", commute <= rtol).residual("max|ex-xe|", commute);

  // Phi in parent coordinates, then in corner coordinates.
  const Matrix phi_parent = sk.right_mult(e) * s.embed_A * fixed.inclusion;
  const Matrix phi = corner.inclusion.adjoint() * phi_parent;
  const double outside = (phi_parent - corner.inclusion * phi).norm();
  const auto phi_rank = static_cast<long long>(numeric::rank(phi, tol));
  report.add("phi_bijective", fdim == cdim && phi_rank == fdim && outside <= rtol)
      .dim("dim_AG", fdim)
      .dim("dim_corner", cdim)
      .dim("rank_phi", phi_rank)
      .residual("image_outside_corner", outside);

  double mult = 0.0;
  for (Eigen::Index i = 0; i < fixed.inclusion.cols(); ++i) {
    for (Eigen::Index j = 0; j < fixed.inclusion.cols(); ++j) {
      const Vector xy = a.multiply(fixed.inclusion.col(i), fixed.inclusion.col(j));
      const Vector lhs = sk.right_mult(e) * (s.embed_A * xy);
      const Vector rhs = sk.multiply(phi_parent.col(i), phi_parent.col(j));
      mult = std::max(mult, (lhs - rhs).norm());
    }
  }
  const double unit_r = (phi_parent * fixed.sub->unit() - e).norm();
  report.add("phi_multiplicative", mult <= rtol && unit_r <= rtol)
      .residual("max|phi(xy)-phi(x)phi(y)|", mult)
      .residual("|phi(1)-e|", unit_r);

  // Psi: A -> (A # G)e.
  const Matrix psi = sk.right_mult(e) * s.embed_A;
  const Matrix target = numeric::range(sk.right_mult(e), tol);
  const double psi_out = (psi - target * (target.adjoint() * psi)).norm();
  const auto psi_rank = static_cast<long long>(numeric::rank(psi, tol));
  report.add("psi_bijective", psi_rank == static_cast<long long>(a.dim()) && target.cols() == psi_rank &&
                                  psi_out <= rtol)
      .dim("dim_A", static_cast<long long>(a.dim()))
      .dim("dim_skew_e", static_cast<long long>(target.cols()))
      .dim("rank_psi", psi_rank)
      .residual("image_outside_target", psi_out);

  // Left A # G: Psi((b_i g) . a) = (b_i g) Psi(a), where (b g) . a = b g(a).
  const std::size_t ng = s.group().order();
  double left = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Matrix li = a.left_mult(i);
    for (std::size_t g = 0; g < ng; ++g) {
      const Matrix lhs = psi * (li * s.action.mat(g));
      const Matrix rhs = sk.left_mult(i * ng + g) * psi;
      left = std::max(left, (lhs - rhs).norm());
    }
  }
  double right = 0.0;
  for (Eigen::Index j = 0; j < fixed.inclusion.cols(); ++j) {
    const Vector x = fixed.inclusion.col(j);
    const Matrix lhs = psi * a.right_mult(x);
    const Matrix rhs = sk.right_mult(s.embed_A * x) * psi;
    right = std::max(right, (lhs - rhs).norm());
  }
  report.add("psi_bimodule", left <= rtol && right <= rtol)
      .residual("left_skew_action", left)
      .residual("right_invariant_action", right);
  return report;
}

Module corner_module(const Module& n, const Vector& e, const SubalgebraEmbedding& corner, double tol) {
  if (!same_algebra(n.algebra(), corner.parent)) {
    throw Error(ErrorKind::ModuleAlgebraMismatch, "module is not over the corner's parent algebra");
  }
  const Matrix q = numeric::range_scaled(n.act(e), tol, numeric::scale_of(n.act(e)));
  std::vector<Matrix> rho;
  rho.reserve(static_cast<std::size_t>(corner.inclusion.cols()));
  for (Eigen::Index j = 0; j < corner.inclusion.cols(); ++j) {
    rho.push_back(q.adjoint() * n.act(corner.inclusion.col(j)) * q);
  }
  return Module::make(corner.sub, std::move(rho), tol);
}

Module induce(const Module& m, const SkewAlgebra& sub, const SkewAlgebra& whole, double tol) {
  if (!same_algebra(m.algebra(), sub.alg)) {
    throw Error(ErrorKind::ModuleAlgebraMismatch, "module is not over the sub skew algebra");
  }
  if (!same_algebra(sub.action.target(), whole.action.target())) {
    throw Error(ErrorKind::ModuleAlgebraMismatch, "sub and whole skew algebras have different bases");
  }
  const auto& g = whole.group();
  const std::vector<std::size_t>& h = sub.elements;
  g.require_subgroup(h);
  std::vector<std::size_t> local(g.order(), g.order());
  for (std::size_t i = 0; i < h.size(); ++i) local[h[i]] = i;

  const auto reps = left_cosets(g, h);
  const std::size_t k = reps.size();
  const std::size_t na = whole.base().dim();
  const std::size_t nh = h.size();
  const auto dm = static_cast<Eigen::Index>(m.dim());
  const auto dim = static_cast<Eigen::Index>(k) * dm;

  std::vector<std::size_t> coset_of(g.order());
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t x : h) coset_of[g.mul(reps[j], x)] = j;

  std::vector<Matrix> rho;
  rho.reserve(na * g.order());
  for (std::size_t b = 0; b < na; ++b) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      Matrix act = Matrix::Zero(dim, dim);
      for (std::size_t i = 0; i < k; ++i) {
        // x g_i = g_j h with h in H
        const std::size_t xi = g.mul(x, reps[i]);
        const std::size_t j = coset_of[xi];
        const std::size_t hh = g.mul(g.inverse(reps[j]), xi);
        const Vector coeff = whole.action.mat(g.inverse(reps[j])).col(static_cast<Eigen::Index>(b));
        Vector elem = Vector::Zero(static_cast<Eigen::Index>(na * nh));
        for (std::size_t c = 0; c < na; ++c) elem(static_cast<Eigen::Index>(c * nh + local[hh])) = coeff(static_cast<Eigen::Index>(c));
        act.block(static_cast<Eigen::Index>(j) * dm, static_cast<Eigen::Index>(i) * dm, dm, dm) = m.act(elem);
      }
      rho.push_back(std::move(act));
    }
  }
  return Module::make(whole.alg, std::move(rho), tol);
}

Module extend_to_skew(const ProjectiveSystem& system, const TwistedModule& v, const SkewAlgebra& sub, double tol) {
  if (sub.elements != system.inertia) {
    throw Error(ErrorKind::InvalidInput, "sub skew algebra is not built on the inertia group");
  }
  if (!same_algebra(system.module.algebra(), sub.action.target())) {
    throw Error(ErrorKind::ModuleAlgebraMismatch, "module and skew algebra have different bases");
  }
  const Cocycle& alpha = system.cocycle;
  const Cocycle& beta = v.algebra.cocycle;
  if (beta.group().order() != alpha.group().order() || beta.group().table() != alpha.group().table()) {
    throw Error(ErrorKind::CocycleMismatch, "tensor factor lives over a different group");
  }
  // Required: beta^exponent == alpha^{-1}.
  const Matrix want = alpha.table().cwiseInverse();
  const Matrix have = v.algebra.exponent == 1 ? Matrix(beta.table()) : Matrix(beta.table().cwiseInverse());
  const double r = (want - have).cwiseAbs().maxCoeff();
  if (r > tol * 1e3) {
    throw Error(ErrorKind::CocycleMismatch, "tensor factor cocycle differs from the inverse cocycle by " +
                                                std::to_string(r));
  }

  const std::size_t na = system.module.algebra()->dim();
  const std::size_t nh = system.inertia.size();
  std::vector<Matrix> rho;
  rho.reserve(na * nh);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t h = 0; h < nh; ++h) {
      rho.push_back(numeric::kron(system.module.rho(i) * system.phi[h], v.module.rho(h)));
    }
  }
  return Module::make(sub.alg, std::move(rho), tol);
}

}  // namespace skewgroup
