#include <doctest.h>

#include "skewgroup/error.hpp"
#include "support.hpp"

using namespace skewgroup;

namespace {

std::vector<Module> skew_simples(const SkewAlgebra& s) {
  const Module reg = Module::regular(s.alg);
  const auto d = decompose(reg);
  std::vector<Module> out;
  for (const auto& c : d.classes) out.push_back(piece_module(reg, d, c.representative));
  return out;
}

TwistedModule plain_character(const FiniteGroup& g, const std::vector<Scalar>& values) {
  const auto tga = twisted_group_algebra(Cocycle::trivial(g), 1);
  std::vector<Matrix> rho;
  for (Scalar v : values) rho.push_back(Matrix::Constant(1, 1, v));
  return {tga, Module::make(tga.algebra, rho)};
}

}  // namespace

TEST_CASE("invariant theory on fixtures") {
  for (const auto& name : fixture_names()) {
    const auto s = skew_group_algebra(make_fixture(name).action);
    const auto r = check_invariant_theory(s);
    CHECK_MESSAGE(r.passed(), name, oracle::failures(r));
  }
  const auto swap = check_invariant_theory(skew_group_algebra(make_fixture("swap").action));
  CHECK(oracle::dim_of(swap, "dimensions", "dim_corner") == 4);
  CHECK(oracle::dim_of(swap, "dimensions", "skew_classes") == 1);
  CHECK(oracle::dim_of(swap, "class0/eN_class_found", "dim_eN") == 2);
  const auto pauli = check_invariant_theory(skew_group_algebra(make_fixture("pauli").action));
  CHECK(oracle::dim_of(pauli, "dimensions", "dim_corner") == 1);
  CHECK(oracle::dim_of(pauli, "dimensions", "corner_classes") == 1);
}

TEST_CASE("invariant theory class count matches an independent corner decomposition") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto s = skew_group_algebra(random_instance(seed).action);
    const auto r = check_invariant_theory(s, seed);
    CHECK_MESSAGE(r.passed(), seed, oracle::failures(r));
    // simples N with eN != 0, counted by rank of rho_N(e)
    const Vector e = symmetrizer(s);
    long long nonzero = 0;
    for (const auto& n : skew_simples(s)) nonzero += oracle::lu_rank(n.act(e)) > 0 ? 1 : 0;
    // the corner is isomorphic to A^G: count its simple classes there
    const auto fs = fixed_subalgebra(s.action);
    const auto classes = static_cast<long long>(decompose(Module::regular(fs.sub)).classes.size());
    CHECK(nonzero == classes);
    CHECK(oracle::dim_of(r, "class_counts_agree", "corner_classes") == classes);
  }
}

TEST_CASE("Clifford correspondence") {
  for (const auto& name : fixture_names()) {
    const auto s = skew_group_algebra(make_fixture(name).action);
    for (const auto& n : skew_simples(s)) {
      const auto r = clifford_correspondence(n, s);
      CHECK_MESSAGE(r.passed(), name, oracle::failures(r));
      const auto dn = oracle::dim_of(r, "dimension_accounting", "dim_N");
      CHECK(dn == static_cast<long long>(n.dim()));
      CHECK(dn == oracle::dim_of(r, "dimension_accounting", "dim_A_lambda") *
                      oracle::dim_of(r, "dimension_accounting", "dim_H_nu") *
                      oracle::dim_of(r, "dimension_accounting", "index"));
    }
  }
  const auto s = skew_group_algebra(make_fixture("swap").action);
  const auto r = clifford_correspondence(skew_simples(s).front(), s);
  CHECK(oracle::dim_of(r, "dimension_accounting", "dim_H_nu") == 1);
  CHECK(oracle::dim_of(r, "dimension_accounting", "index") == 2);
  CHECK(oracle::dim_of(r, "induced_isomorphic_to_N", "dim_hom") == 1);

  const auto reg = Module::regular(s.alg);
  CHECK_THROWS_AS(clifford_correspondence(reg, s), Error);
}

TEST_CASE("induced modules are simple") {
  for (const auto& name : fixture_names()) {
    const auto inst = make_fixture(name);
    const auto s = skew_group_algebra(inst.action);
    const auto sys = inertia(inst.module, inst.action);
    const auto iso = projective_isotypics(sys);
    for (std::size_t g = 0; g < iso.classes.size(); ++g) {
      const auto r = induced_simplicity(sys, iso, g, s);
      CHECK_MESSAGE(r.passed(), name, oracle::failures(r));
      const std::string tag = "gamma" + std::to_string(g);
      const long long dim = oracle::dim_of(r, tag + "/dimension_law", "dim_induced");
      CHECK(dim == static_cast<long long>(s.group().order() / sys.inertia.size() * inst.module.dim() *
                                          iso.classes[g].simple.module.dim()));
      CHECK(oracle::dim_of(r, tag + "/induced_simple", "commutant_dim") == 1);
      CHECK(oracle::dim_of(r, tag + "/induced_simple", "cyclic") == 1);
    }
  }
  const auto pauli = make_fixture("pauli");
  const auto sys = inertia(pauli.module, pauli.action);
  const auto r = induced_simplicity(sys, projective_isotypics(sys), 0, skew_group_algebra(pauli.action));
  CHECK(oracle::dim_of(r, "gamma0/dimension_law", "dim_induced") == 4);
}

TEST_CASE("hom versus invariants") {
  const auto z2 = groups::cyclic(2);
  const auto triv = plain_character(z2, {1.0, 1.0});
  const auto sign = plain_character(z2, {1.0, -1.0});
  auto r = hom_inv_check(triv, triv);
  CHECK(r.passed());
  CHECK(oracle::dim_of(r, "hom_equals_invariants", "dim_hom") == 1);
  r = hom_inv_check(triv, sign);
  CHECK(r.passed());
  CHECK(oracle::dim_of(r, "hom_equals_invariants", "dim_hom") == 0);
  CHECK(oracle::dim_of(r, "hom_equals_invariants", "dim_fixed_space") == 0);

  const auto pauli = make_fixture("pauli");
  const auto w = module_over_twisted(inertia(pauli.module, pauli.action));
  r = hom_inv_check(w, w);
  CHECK(r.passed());
  CHECK(oracle::dim_of(r, "hom_equals_invariants", "dim_symmetrizer_image") == 1);
  CHECK_THROWS_AS(hom_inv_check(w, contragredient(w)), Error);
}

TEST_CASE("main theorem on fixtures") {
  for (const auto& name : fixture_names()) {
    const auto inst = make_fixture(name);
    const auto r = main_theorem(inst.action, inst.module);
    CHECK_MESSAGE(r.passed(), name, oracle::failures(r));
  }
  const auto pauli = make_fixture("pauli");
  const auto rp = main_theorem(pauli.action, pauli.module);
  CHECK(oracle::dim_of(rp, "setup", "dim_AG") == 1);
  CHECK(oracle::dim_of(rp, "gamma0/direct_M_gamma_simple", "dim") == 1);
  CHECK(oracle::dim_of(rp, "gamma0/eM_dimension_identity", "dim_eM") == 1);

  const auto swap = make_fixture("swap");
  const auto rs = main_theorem(swap.action, swap.module);
  CHECK(oracle::dim_of(rs, "setup", "order_G_M") == 1);
  CHECK(oracle::dim_of(rs, "setup", "dim_AG") == 4);
  CHECK(oracle::dim_of(rs, "gamma0/direct_M_gamma_simple", "dim") == 2);

  const auto triv = make_fixture("trivial");
  const auto rt = main_theorem(triv.action, triv.module);
  CHECK(oracle::dim_of(rt, "setup", "classes") == 1);
}

TEST_CASE("complete reducibility on fixtures") {
  for (const auto& name : fixture_names()) {
    const auto inst = make_fixture(name);
    const auto r = complete_reducibility(inst.action, inst.module);
    CHECK_MESSAGE(r.passed(), name, oracle::failures(r));
  }
  const auto pauli = make_fixture("pauli");
  const auto rp = complete_reducibility(pauli.action, pauli.module);
  CHECK(oracle::dim_of(rp, "pieces_exhaust_M", "pieces") == 2);
  CHECK(oracle::dim_of(rp, "class0/multiplicity_is_dim_W", "multiplicity") == 2);
  const auto swap = make_fixture("swap");
  CHECK(oracle::dim_of(complete_reducibility(swap.action, swap.module), "pieces_exhaust_M", "pieces") == 1);
}

TEST_CASE("theorems on random instances") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto inst = random_instance(seed);
    const auto m = main_theorem(inst.action, inst.module, seed);
    CHECK_MESSAGE(m.passed(), seed, oracle::failures(m));
    const auto c = complete_reducibility(inst.action, inst.module, seed);
    CHECK_MESSAGE(c.passed(), seed, oracle::failures(c));
  }
}

TEST_CASE("isomorphic") {
  numeric::Rng rng(8);
  const auto m2 = share(matrix_algebra(2));
  const auto nat = oracle::natural(m2, 2);
  const auto conj = oracle::direct_sum_module({nat}, rng);
  CHECK(isomorphic(nat, conj));
  const auto two = oracle::direct_sum_module({nat, nat}, rng);
  CHECK_FALSE(isomorphic(nat, two));
  const auto c2 = oracle::group_algebra_of(groups::cyclic(2));
  CHECK_FALSE(isomorphic(oracle::character(c2, {1.0, 1.0}), oracle::character(c2, {1.0, -1.0})));
}

TEST_CASE("verdicts are stable across tolerances") {
  for (const auto& name : fixture_names()) {
    const auto inst = make_fixture(name);
    for (double tol : {1e-10, 1e-9, 1e-8, 1e-7, 1e-6}) {
      CHECK_MESSAGE(main_theorem(inst.action, inst.module, 1, tol).passed(), name, " tol ", tol);
      CHECK_MESSAGE(complete_reducibility(inst.action, inst.module, 1, tol).passed(), name, " tol ", tol);
    }
  }
}
