#include "skewgroup/theorems.hpp"

#include <algorithm>
#include <string>

#include "skewgroup/error.hpp"

namespace skewgroup {

namespace {

long long ll(std::size_t v) { return static_cast<long long>(v); }

// Adds a check carrying both simplicity criteria; returns the verdict.
bool simplicity_check(VerificationReport& report, const std::string& name, const Module& m, std::uint64_t seed,
                      double tol) {
  if (m.dim() == 0) {
    report.add(name, false).dim("dim", 0).with_note("zero module");
    return false;
  }
  const auto c = simplicity_criteria(m, seed, tol);
  const bool simple = c.commutant_dim == 1 && c.cyclic;
  report.add(name, simple)
      .dim("dim", ll(m.dim()))
      .dim("commutant_dim", ll(c.commutant_dim))
      .dim("cyclic", c.cyclic ? 1 : 0);
  return simple;
}

struct InvariantSpaces {
  Matrix image;
  Matrix fixed;
};

// Symmetrizer image and joint fixed space, computed independently.
InvariantSpaces invariant_spaces(const Module& m, double tol) {
  const auto d = static_cast<Eigen::Index>(m.dim());
  if (d == 0) return {Matrix(0, 0), Matrix(0, 0)};
  Matrix sym = Matrix::Zero(d, d);
  double reference = 0.0;
  Matrix stacked(d * static_cast<Eigen::Index>(m.rho().size()), d);
  for (std::size_t g = 0; g < m.rho().size(); ++g) {
    sym += m.rho(g);
    reference += numeric::scale_of(m.rho(g));
    stacked.middleRows(static_cast<Eigen::Index>(g) * d, d) = m.rho(g) - Matrix::Identity(d, d);
  }
  return {numeric::range_scaled(sym, tol, reference), numeric::nullspace_scaled(stacked, tol, reference)};
}

double subspace_distance(const Matrix& inner, const Matrix& outer) {
  if (inner.cols() == 0) return 0.0;
  if (outer.cols() == 0) return inner.norm();
  return (inner - outer * (outer.adjoint() * inner)).norm();
}

}  // namespace

bool isomorphic(const Module& a, const Module& b, std::uint64_t seed, double tol) {
  if (a.dim() != b.dim()) return false;
  if (a.dim() == 0) return true;
  const auto homs = hom_space(a, b, tol);
  if (homs.empty()) return false;
  numeric::Rng rng(seed);
  Matrix f = Matrix::Zero(homs.front().rows(), homs.front().cols());
  for (const auto& h : homs) f += rng.complex_gaussian() * h;
  return numeric::rank(f, tol) == a.dim();
}

VerificationReport check_invariant_theory(const SkewAlgebra& s, std::uint64_t seed, double tol) {
  VerificationReport report;
  report.task = "invariant_theory";
  report.seed = seed;
  report.tol = tol;
  if (!is_semisimple(s.base(), tol)) throw Error(ErrorKind::NotSemisimple, "base algebra is not semisimple");

  const Vector e = symmetrizer(s);
  const SubalgebraEmbedding corner = corner_algebra(s.alg, e, tol);
  const Module regular = Module::regular(s.alg);
  const Decomposition d = decompose(regular, seed, tol);

  const Module corner_regular = Module::regular(corner.sub);
  const Decomposition dc = decompose(corner_regular, seed, tol);
  std::vector<Module> corner_simples;
  for (const auto& cls : dc.classes) corner_simples.push_back(piece_module(corner_regular, dc, cls.representative, tol));

  report.add("dimensions", true)
      .dim("dim_skew", ll(s.alg->dim()))
      .dim("dim_corner", ll(corner.sub->dim()))
      .dim("skew_classes", ll(d.classes.size()))
      .dim("corner_classes", ll(corner_simples.size()));

  std::vector<std::size_t> hits(corner_simples.size(), 0);
  std::size_t nonzero = 0;
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    const Module n = piece_module(regular, d, d.classes[c].representative, tol);
    const Module en = corner_module(n, e, corner, tol);
    const std::string tag = "class" + std::to_string(c);
    if (en.dim() == 0) {
      report.add(tag + "/eN_zero", true).dim("dim_N", ll(n.dim())).dim("dim_eN", 0);
      continue;
    }
    ++nonzero;
    simplicity_check(report, tag + "/eN_simple", en, seed, tol);
    std::size_t matched = 0;
    for (std::size_t k = 0; k < corner_simples.size(); ++k) {
      if (!hom_space(en, corner_simples[k], tol).empty()) {
        ++hits[k];
        ++matched;
      }
    }
    report.add(tag + "/eN_class_found", matched == 1).dim("dim_N", ll(n.dim())).dim("dim_eN", ll(en.dim()))
        .dim("matching_corner_classes", ll(matched));
  }
  std::size_t hit = 0;
  bool injective = true;
  for (auto h : hits) {
    if (h > 0) ++hit;
    if (h > 1) injective = false;
  }
  report.add("every_corner_class_hit", hit == corner_simples.size())
      .dim("hit", ll(hit))
      .dim("corner_classes", ll(corner_simples.size()));
  report.add("class_counts_agree", injective && nonzero == corner_simples.size())
      .dim("skew_classes_with_eN", ll(nonzero))
      .dim("corner_classes", ll(corner_simples.size()));
  return report;
}

VerificationReport clifford_correspondence(const Module& n, const SkewAlgebra& s, std::uint64_t seed, double tol) {
  VerificationReport report;
  report.task = "clifford";
  report.seed = seed;
  report.tol = tol;
  if (!is_simple(n, seed, tol)) throw Error(ErrorKind::NotSimple, "Clifford correspondence needs a simple module");

  const Module na = restrict(n, s.base_embedding());
  const Decomposition d = decompose(na, seed, tol);
  const Matrix q = d.pieces.front().basis;
  const Module lambda = submodule(na, q, tol);
  const ProjectiveSystem system = inertia(lambda, s.action, seed, tol);

  // P = sum_{h in H} h A^lambda inside N.
  Matrix spans(static_cast<Eigen::Index>(n.dim()), q.cols() * static_cast<Eigen::Index>(system.inertia.size()));
  for (std::size_t i = 0; i < system.inertia.size(); ++i) {
    spans.middleCols(static_cast<Eigen::Index>(i) * q.cols(), q.cols()) =
        n.act(s.embed_G.col(static_cast<Eigen::Index>(system.inertia[i]))) * q;
  }
  const Matrix r = numeric::range(spans, tol);
  const Module p = submodule(na, r, tol);
  const auto homs = hom_space(lambda, p, tol);
  const auto k = static_cast<Eigen::Index>(homs.size());
  report.add("H_nu_nonzero", k > 0).dim("dim_H_nu", k).dim("dim_P", r.cols()).dim("dim_A_lambda", q.cols());
  if (k == 0) return report;

  // c_h f = rho_N(h) f phi(h)^{-1}, in the orthonormal Hom basis.
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < system.inertia.size(); ++i) {
    const Matrix nh = r.adjoint() * n.act(s.embed_G.col(static_cast<Eigen::Index>(system.inertia[i]))) * r;
    const Matrix phi_inv = system.phi[i].inverse();
    Matrix c(k, k);
    for (Eigen::Index b = 0; b < k; ++b) {
      const Matrix image = nh * homs[static_cast<std::size_t>(b)] * phi_inv;
      for (Eigen::Index a = 0; a < k; ++a) c(a, b) = (homs[static_cast<std::size_t>(a)].adjoint() * image).trace();
    }
    act.push_back(std::move(c));
  }
  auto twisted = twisted_group_algebra(system.cocycle, -1, tol);
  const Module hnu = Module::make(twisted.algebra, std::move(act), tol);
  simplicity_check(report, "H_nu_simple", hnu, seed, tol);

  const SkewAlgebra sub = sub_skew_algebra(s, system.inertia, tol);
  const Module tensor = extend_to_skew(system, {twisted, hnu}, sub, tol);
  const Module induced = induce(tensor, sub, s, tol);
  const std::size_t index = s.group().order() / system.inertia.size();
  report.add("dimension_accounting", n.dim() == lambda.dim() * hnu.dim() * index)
      .dim("dim_N", ll(n.dim()))
      .dim("dim_A_lambda", ll(lambda.dim()))
      .dim("dim_H_nu", ll(hnu.dim()))
      .dim("index", ll(index));
  const auto to_n = hom_space(induced, n, tol);
  report.add("induced_isomorphic_to_N", isomorphic(induced, n, seed, tol))
      .dim("dim_induced", ll(induced.dim()))
      .dim("dim_N", ll(n.dim()))
      .dim("dim_hom", ll(to_n.size()));
  return report;
}

VerificationReport induced_simplicity(const ProjectiveSystem& system, const ProjectiveIsotypics& iso,
                                      std::size_t gamma, const SkewAlgebra& s, std::uint64_t seed, double tol) {
  VerificationReport report;
  report.task = "induced_simplicity";
  report.seed = seed;
  report.tol = tol;
  if (gamma >= iso.classes.size()) throw Error(ErrorKind::InvalidInput, "class index out of range");
  const TwistedModule& w = iso.classes[gamma].simple;
  const TwistedModule wd = contragredient(w, tol);
  const SkewAlgebra sub = sub_skew_algebra(s, system.inertia, tol);
  const Module tensor = extend_to_skew(system, wd, sub, tol);
  const Module induced = induce(tensor, sub, s, tol);
  const std::string tag = "gamma" + std::to_string(gamma);
  const std::size_t index = s.group().order() / system.inertia.size();
  const std::size_t expected = index * system.module.dim() * w.module.dim();
  report.add(tag + "/dimension_law", induced.dim() == expected)
      .dim("dim_induced", ll(induced.dim()))
      .dim("index", ll(index))
      .dim("dim_M", ll(system.module.dim()))
      .dim("dim_W", ll(w.module.dim()));
  simplicity_check(report, tag + "/induced_simple", induced, seed, tol);
  return report;
}

VerificationReport hom_inv_check(const TwistedModule& m, const TwistedModule& n, double tol) {
  VerificationReport report;
  report.task = "hom_inv";
  report.tol = tol;
  if (m.algebra.exponent != n.algebra.exponent ||
      (m.algebra.cocycle.table() - n.algebra.cocycle.table()).cwiseAbs().maxCoeff() > tol * 1e3) {
    throw Error(ErrorKind::CocycleMismatch, "modules live over different twisted group algebras");
  }
  const std::size_t hom = hom_space(m.module, n.module, tol).size();
  const TwistedModule t = tensor_cancelling(contragredient(m, tol), n, tol);
  const InvariantSpaces inv = invariant_spaces(t.module, tol);
  const double contained = subspace_distance(inv.image, inv.fixed);
  report.add("hom_equals_invariants",
             hom == static_cast<std::size_t>(inv.image.cols()) && inv.image.cols() == inv.fixed.cols())
      .dim("dim_hom", ll(hom))
      .dim("dim_symmetrizer_image", inv.image.cols())
      .dim("dim_fixed_space", inv.fixed.cols());
  report.add("image_inside_fixed_space", contained <= tol * 1e3).residual("distance", contained);
  return report;
}

VerificationReport main_theorem(const AlgebraAction& action, const Module& m, std::uint64_t seed, double tol) {
  VerificationReport report;
  report.task = "main_theorem";
  report.seed = seed;
  report.tol = tol;
  if (!is_semisimple(*action.target(), tol)) throw Error(ErrorKind::NotSemisimple, "algebra is not semisimple");

  const ProjectiveSystem system = inertia(m, action, seed, tol);
  const ProjectiveIsotypics iso = projective_isotypics(system, seed, tol);
  const SubalgebraEmbedding fixed = fixed_subalgebra(action, tol);
  const Module restricted = restrict(m, fixed);

  const SkewAlgebra s = skew_group_algebra(action, tol);
  const SkewAlgebra sub = sub_skew_algebra(s, system.inertia, tol);
  const Vector e = symmetrizer(s);
  const SubalgebraEmbedding corner = corner_algebra(s.alg, e, tol);
  const Matrix phi = phi_matrix(s, fixed, corner);
  const std::size_t index = action.group().order() / system.inertia.size();

  report.add("setup", phi.rows() == phi.cols() && numeric::rank(phi, tol) == fixed.sub->dim())
      .dim("dim_M", ll(m.dim()))
      .dim("order_G_M", ll(system.inertia.size()))
      .dim("dim_AG", ll(fixed.sub->dim()))
      .dim("dim_corner", ll(corner.sub->dim()))
      .dim("classes", ll(iso.classes.size()));

  std::size_t total = 0;
  for (std::size_t gamma = 0; gamma < iso.classes.size(); ++gamma) {
    const ProjectiveClass& cls = iso.classes[gamma];
    const std::string tag = "gamma" + std::to_string(gamma);
    total += cls.multiplicity * cls.simple.module.dim();
    report.add(tag + "/isotypic_bijection",
               cls.bijection_rank == static_cast<std::size_t>(cls.isotypic.cols()) && cls.bijection_residual <= tol * 1e3)
        .dim("dim_isotypic", cls.isotypic.cols())
        .dim("bijection_rank", ll(cls.bijection_rank))
        .residual("outside_isotypic", cls.bijection_residual);

    // Direct route: M_gamma as a submodule of Res_{A^G} M.
    const double lemma = invariance_residual(restricted, cls.multiplicity_space);
    report.add(tag + "/M_gamma_invariant", lemma <= tol * 1e3).residual("invariance", lemma);
    const Module m_gamma = submodule(restricted, cls.multiplicity_space, tol);
    const bool direct = simplicity_check(report, tag + "/direct_M_gamma_simple", m_gamma, seed, tol);

    // Corner route: e applied to Ind(M (x) W_gamma*).
    const TwistedModule& w = cls.simple;
    const TwistedModule wd = contragredient(w, tol);
    const Module big = induce(extend_to_skew(system, wd, sub, tol), sub, s, tol);
    report.add(tag + "/induced_dimension_law", big.dim() == index * m.dim() * w.module.dim())
        .dim("dim_induced", ll(big.dim()))
        .dim("index", ll(index))
        .dim("dim_W", ll(w.module.dim()));
    const Module em = corner_module(big, e, corner, tol);
    const bool via_corner = simplicity_check(report, tag + "/corner_eM_simple", em, seed, tol);

    const TwistedModule ww = tensor_cancelling(w, wd, tol);
    const Matrix inv = invariant_subspace(ww.module, tol);
    const auto inv_dim = static_cast<std::size_t>(inv.cols());
    report.add(tag + "/eM_dimension_identity", em.dim() == m_gamma.dim() * inv_dim)
        .dim("dim_eM", ll(em.dim()))
        .dim("dim_M_gamma", ll(m_gamma.dim()))
        .dim("dim_Inv", ll(inv_dim));
    report.add(tag + "/Inv_one_dimensional", inv_dim == 1).dim("dim_Inv", ll(inv_dim));

    // e (x) M_gamma (x) Inv(W (x) W*) inside the identity-coset block of Ind.
    const auto homs = hom_space(w.module, iso.module.module, tol);
    const auto dw = static_cast<Eigen::Index>(w.module.dim());
    const auto dm = static_cast<Eigen::Index>(m.dim());
    Matrix spanned = Matrix::Zero(static_cast<Eigen::Index>(big.dim()),
                                  static_cast<Eigen::Index>(homs.size()) * inv.cols());
    const Matrix act_e = big.act(e);
    for (std::size_t j = 0; j < homs.size(); ++j) {
      for (Eigen::Index t = 0; t < inv.cols(); ++t) {
        Vector v = Vector::Zero(static_cast<Eigen::Index>(big.dim()));
        for (Eigen::Index l = 0; l < dw; ++l)
          for (Eigen::Index c = 0; c < dw; ++c) {
            const Scalar coeff = inv(l * dw + c, t);
            if (coeff == Scalar(0.0)) continue;
            for (Eigen::Index row = 0; row < dm; ++row) v(row * dw + c) += coeff * homs[j](row, l);
          }
        spanned.col(static_cast<Eigen::Index>(j) * inv.cols() + t) = act_e * v;
      }
    }
    const Matrix x = numeric::range(spanned, tol);
    const Matrix y = numeric::range_scaled(act_e, tol, numeric::scale_of(act_e));
    const double x_in_y = subspace_distance(x, y);
    const double y_in_x = subspace_distance(y, x);
    report.add(tag + "/eM_equals_e_M_gamma_Inv",
               x.cols() == y.cols() && x_in_y <= tol * 1e3 && y_in_x <= tol * 1e3)
        .dim("dim_span", x.cols())
        .dim("dim_eM", y.cols())
        .residual("span_outside_eM", x_in_y)
        .residual("eM_outside_span", y_in_x);

    // Transport eM to A^G along Phi and compare with M_gamma.
    bool agree = false;
    if (em.dim() > 0) {
      std::vector<Matrix> rho;
      for (Eigen::Index j = 0; j < phi.cols(); ++j) rho.push_back(em.act(phi.col(j)));
      const Module transported = Module::make(fixed.sub, std::move(rho), tol);
      const bool iso_ok = isomorphic(transported, m_gamma, seed, tol);
      report.add(tag + "/routes_isomorphic", iso_ok)
          .dim("dim_transported", ll(transported.dim()))
          .dim("dim_M_gamma", ll(m_gamma.dim()));
      agree = iso_ok;
    } else {
      report.add(tag + "/routes_isomorphic", false).dim("dim_eM", 0);
    }
    report.add(tag + "/verdicts_agree", direct == via_corner && agree)
        .dim("direct", direct ? 1 : 0)
        .dim("corner", via_corner ? 1 : 0);
  }
  report.add("isotypic_dimension_sum", total == m.dim()).dim("sum", ll(total)).dim("dim_M", ll(m.dim()));
  return report;
}

VerificationReport complete_reducibility(const AlgebraAction& action, const Module& m, std::uint64_t seed,
                                         double tol) {
  VerificationReport report;
  report.task = "complete_reducibility";
  report.seed = seed;
  report.tol = tol;
  const ProjectiveSystem system = inertia(m, action, seed, tol);
  const ProjectiveIsotypics iso = projective_isotypics(system, seed, tol);
  const SubalgebraEmbedding fixed = fixed_subalgebra(action, tol);
  const Module restricted = restrict(m, fixed);
  const Decomposition d = decompose(restricted, seed, tol);

  std::size_t total = 0;
  Matrix all(static_cast<Eigen::Index>(m.dim()), 0);
  for (const auto& piece : d.pieces) {
    total += static_cast<std::size_t>(piece.basis.cols());
    Matrix next(all.rows(), all.cols() + piece.basis.cols());
    next << all, piece.basis;
    all = std::move(next);
  }
  const auto span = numeric::rank(all, tol);
  report.add("pieces_exhaust_M", total == m.dim() && span == m.dim())
      .dim("sum_piece_dims", ll(total))
      .dim("span", ll(span))
      .dim("dim_M", ll(m.dim()))
      .dim("pieces", ll(d.pieces.size()));

  std::vector<Module> gammas;
  for (const auto& cls : iso.classes) gammas.push_back(submodule(restricted, cls.multiplicity_space, tol));
  std::vector<std::size_t> used(gammas.size(), 0);
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    const Module rep = piece_module(restricted, d, d.classes[c].representative, tol);
    std::size_t match = gammas.size();
    std::size_t matches = 0;
    for (std::size_t g = 0; g < gammas.size(); ++g) {
      if (isomorphic(rep, gammas[g], seed, tol)) {
        match = g;
        ++matches;
      }
    }
    const std::string tag = "class" + std::to_string(c);
    if (matches != 1) {
      report.add(tag + "/matches_one_M_gamma", false).dim("matches", ll(matches)).dim("dim", ll(rep.dim()));
      continue;
    }
    ++used[match];
    const std::size_t want = iso.classes[match].simple.module.dim();
    report.add(tag + "/multiplicity_is_dim_W", d.classes[c].multiplicity == want)
        .dim("gamma", ll(match))
        .dim("multiplicity", ll(d.classes[c].multiplicity))
        .dim("dim_W_gamma", ll(want))
        .dim("dim_piece", ll(rep.dim()));
  }
  bool bijective = d.classes.size() == gammas.size();
  for (auto u : used) bijective = bijective && u == 1;
  report.add("classes_match_M_gamma", bijective)
      .dim("restricted_classes", ll(d.classes.size()))
      .dim("gamma_classes", ll(gammas.size()));
  return report;
}

}  // namespace skewgroup
