#include <doctest.h>

#include "skewgroup/error.hpp"
#include "support.hpp"

using namespace skewgroup;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidInput;
}

std::vector<Instance> instances(std::size_t randoms) {
  std::vector<Instance> out;
  for (const auto& name : fixture_names()) out.push_back(make_fixture(name));
  for (std::uint64_t s = 1; s <= randoms; ++s) out.push_back(random_instance(s));
  return out;
}

// Pauli group elements 1, x, z, xz with their defining matrices.
std::vector<Matrix> pauli_phi() {
  const Matrix x = oracle::pauli_x();
  const Matrix z = oracle::pauli_z();
  return {Matrix::Identity(2, 2), x, z, x * z};
}

}  // namespace

TEST_CASE("inertia examples") {
  const auto triv = make_fixture("trivial");
  const auto st = inertia(triv.module, triv.action);
  CHECK(st.inertia == std::vector<std::size_t>{0});
  CHECK(st.cocycle(0, 0) == Scalar(1.0));

  const auto pauli = make_fixture("pauli");
  const auto sp = inertia(pauli.module, pauli.action);
  CHECK(sp.inertia.size() == 4);
  for (std::size_t h = 0; h < 4; ++h) CHECK(oracle::hom_dim(twist(pauli.module, h, pauli.action), pauli.module) == 1);

  const auto swap = make_fixture("swap");
  const auto ss = inertia(swap.module, swap.action);
  CHECK(ss.inertia == std::vector<std::size_t>{swap.action.group().identity()});
  CHECK(oracle::hom_dim(twist(swap.module, 1, swap.action), swap.module) == 0);

  const auto perm = make_fixture("perm");
  CHECK(inertia(perm.module, perm.action).inertia.size() == 2);
  const auto cyc = make_fixture("cyclic");
  CHECK(inertia(cyc.module, cyc.action).inertia.size() == 1);

  CHECK(kind_of([&] { inertia(Module::regular(pauli.action.target()), pauli.action); }) == ErrorKind::NotSimple);
}

TEST_CASE("inertia matches the hom oracle and the intertwiner relation") {
  for (const auto& inst : instances(12)) {
    const auto sys = inertia(inst.module, inst.action);
    std::vector<std::size_t> expect;
    for (std::size_t h = 0; h < inst.action.group().order(); ++h)
      if (oracle::hom_dim(twist(inst.module, h, inst.action), inst.module) > 0) expect.push_back(h);
    CHECK(sys.inertia == expect);
    const std::size_t one = sys.inertia_group.identity();
    CHECK(sys.phi[one] == Matrix::Identity(sys.phi[one].rows(), sys.phi[one].cols()));
    for (std::size_t i = 0; i < sys.inertia.size(); ++i) {
      const Matrix& mat = inst.action.mat(sys.inertia[i]);
      for (std::size_t b = 0; b < inst.action.target()->dim(); ++b) {
        const Matrix lhs = sys.phi[i] * inst.module.rho(b);
        const Matrix rhs = inst.module.act(mat.col(static_cast<Eigen::Index>(b))) * sys.phi[i];
        CHECK((lhs - rhs).norm() <= 1e-8 * numeric::scale_of(inst.module.rho(b)));
      }
      CHECK(sys.phi[i].norm() == doctest::Approx(std::sqrt(static_cast<double>(inst.module.dim()))));
    }
    const auto& alpha = sys.cocycle;
    const std::size_t n = sys.inertia.size();
    for (std::size_t h = 0; h < n; ++h) {
      CHECK(alpha(one, h) == Scalar(1.0));
      CHECK(alpha(h, one) == Scalar(1.0));
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t hk = sys.inertia_group.mul(h, k);
        CHECK((sys.phi[h] * sys.phi[k] - alpha(h, k) * sys.phi[hk]).norm() <= 1e-8 * sys.phi[hk].norm());
        for (std::size_t l = 0; l < n; ++l) {
          const Scalar lhs = alpha(h, k) * alpha(hk, l);
          const Scalar rhs = alpha(h, sys.inertia_group.mul(k, l)) * alpha(k, l);
          CHECK(std::abs(lhs - rhs) <= 1e-8);
        }
      }
    }
  }
}

TEST_CASE("extract_cocycle examples") {
  const auto pauli = make_fixture("pauli");
  const auto& g = pauli.action.group();
  const Cocycle alpha = extract_cocycle(pauli_phi(), g);
  for (std::size_t h = 0; h < 4; ++h) CHECK(alpha(0, h) == Scalar(1.0));
  // X Z = 1 * (XZ), Z X = -1 * (XZ)
  CHECK(std::abs(alpha(1, 2) - 1.0) < 1e-14);
  CHECK(std::abs(alpha(2, 1) + 1.0) < 1e-14);
  CHECK(alpha.identity_residual() < 1e-14);

  const Cocycle t = extract_cocycle({Matrix::Identity(1, 1)}, groups::trivial());
  CHECK(t.table() == Matrix::Ones(1, 1));

  Matrix d = Matrix::Identity(2, 2);
  d(1, 1) = 2.0;
  CHECK(kind_of([&] { extract_cocycle({Matrix::Identity(2, 2), d}, groups::cyclic(2)); }) == ErrorKind::NotProjective);
}

TEST_CASE("Cocycle::make validation") {
  const auto z2 = groups::cyclic(2);
  CHECK_NOTHROW(Cocycle::make(z2, Matrix::Ones(2, 2)));
  Matrix bad = Matrix::Ones(2, 2);
  bad(0, 1) = 2.0;
  CHECK(kind_of([&] { Cocycle::make(z2, bad); }) == ErrorKind::NotProjective);
  Matrix zero = Matrix::Ones(2, 2);
  zero(1, 1) = 0.0;
  CHECK(kind_of([&] { Cocycle::make(z2, zero); }) == ErrorKind::NotProjective);
  // normalized but not a cocycle on Z/3: alpha(1,1) = 2, others 1
  Matrix z3 = Matrix::Ones(3, 3);
  z3(1, 1) = 2.0;
  CHECK(kind_of([&] { Cocycle::make(groups::cyclic(3), z3); }) == ErrorKind::NotProjective);
}

TEST_CASE("twisted_group_algebra examples") {
  const auto s3 = groups::symmetric(3);
  const auto plain = twisted_group_algebra(Cocycle::trivial(s3), 1);
  CHECK(plain.algebra->same_structure(group_algebra(s3.table(), s3.identity())));
  CHECK(plain.algebra->dim() == 6);

  const auto pauli = make_fixture("pauli");
  const auto sys = inertia(pauli.module, pauli.action);
  for (int exponent : {1, -1}) {
    const auto tw = twisted_group_algebra(sys.cocycle, exponent);
    CHECK(tw.algebra->dim() == 4);
    const auto d = decompose(Module::regular(tw.algebra));
    REQUIRE(d.classes.size() == 1);
    CHECK(d.classes[0].simple_dim == 2);
    CHECK(d.classes[0].multiplicity == 2);
  }
}

TEST_CASE("module_over_twisted") {
  const auto triv = make_fixture("trivial");
  const auto wt = module_over_twisted(inertia(triv.module, triv.action));
  CHECK(wt.module.dim() == 1);
  CHECK(wt.module.rho(0) == Matrix::Identity(1, 1));

  const auto pauli = make_fixture("pauli");
  const auto sys = inertia(pauli.module, pauli.action);
  const auto w = module_over_twisted(sys);
  CHECK(is_simple(w.module));
  const Module reg = Module::regular(w.algebra.algebra);
  const auto d = decompose(reg);
  CHECK(oracle::hom_dim(w.module, piece_module(reg, d, d.pieces.size() - 1)) == 1);

  // rescale phi by beta(h): the cocycle changes by a coboundary and the
  // renormalized action is the same module
  const std::vector<Scalar> beta{1.0, Scalar(0.0, 2.0), Scalar(-0.5, 0.5), 3.0};
  std::vector<Matrix> phi2;
  for (std::size_t h = 0; h < 4; ++h) phi2.push_back(beta[h] * sys.phi[h]);
  const Cocycle a2 = extract_cocycle(phi2, sys.inertia_group);
  for (std::size_t h = 0; h < 4; ++h)
    for (std::size_t k = 0; k < 4; ++k) {
      const Scalar cob = beta[h] * beta[k] / beta[sys.inertia_group.mul(h, k)];
      CHECK(std::abs(a2(h, k) - sys.cocycle(h, k) * cob) < 1e-12);
    }
  std::vector<Matrix> back;
  for (std::size_t h = 0; h < 4; ++h) back.push_back(phi2[h] / beta[h]);
  const Module renorm = Module::make(w.algebra.algebra, back);
  CHECK(hom_space(renorm, w.module).size() == 1);
}

TEST_CASE("contragredient") {
  const auto triv = make_fixture("trivial");
  const auto wt = module_over_twisted(inertia(triv.module, triv.action));
  const auto dual = contragredient(wt);
  CHECK(dual.module.dim() == 1);
  CHECK(dual.algebra.exponent == -1);

  for (const auto& inst : instances(8)) {
    const auto sys = inertia(inst.module, inst.action);
    const auto iso = projective_isotypics(sys);
    for (const auto& cls : iso.classes) {
      const auto wd = contragredient(cls.simple);
      CHECK(wd.module.dim() == cls.simple.module.dim());
      CHECK(wd.algebra.exponent == -cls.simple.algebra.exponent);
      // matrices: inverse transpose
      for (std::size_t g = 0; g < wd.module.rho().size(); ++g)
        CHECK((wd.module.rho(g).transpose() * cls.simple.module.rho(g) -
               Matrix::Identity(static_cast<Eigen::Index>(wd.module.dim()), static_cast<Eigen::Index>(wd.module.dim())))
                  .norm() < 1e-9);
      const auto ddual = contragredient(wd);
      CHECK(hom_space(ddual.module, cls.simple.module).size() >= 1);
    }
  }
}

TEST_CASE("tensor_cancelling") {
  const auto pauli = make_fixture("pauli");
  const auto sys = inertia(pauli.module, pauli.action);
  const auto w = module_over_twisted(sys);
  const auto t = tensor_cancelling(w, contragredient(w));
  CHECK(t.module.dim() == 4);
  CHECK(t.algebra.exponent == 1);
  CHECK(kind_of([&] { tensor_cancelling(w, w); }) == ErrorKind::CocycleMismatch);
}

TEST_CASE("projective_isotypics examples") {
  const auto triv = make_fixture("trivial");
  const auto it = projective_isotypics(inertia(triv.module, triv.action));
  REQUIRE(it.classes.size() == 1);
  CHECK(it.classes[0].multiplicity_space.cols() == 1);

  const auto pauli = make_fixture("pauli");
  const auto ip = projective_isotypics(inertia(pauli.module, pauli.action));
  REQUIRE(ip.classes.size() == 1);
  CHECK(ip.classes[0].simple.module.dim() == 2);
  CHECK(ip.classes[0].multiplicity == 1);
  CHECK(ip.classes[0].multiplicity_space.cols() == 1);

  // C^2 over A = C with Z/2 acting trivially on A and phi(g) = X: the regular module of C[Z/2]
  const auto g = groups::cyclic(2);
  const auto c = share(matrix_algebra(1));
  const auto act = AlgebraAction::make(g, c, {Matrix::Identity(1, 1), Matrix::Identity(1, 1)});
  const Module m = Module::make(c, {Matrix::Identity(2, 2)});
  const ProjectiveSystem sys{m, act, {0, 1}, g, {Matrix::Identity(2, 2), oracle::pauli_x()}, Cocycle::trivial(g)};
  const auto ir = projective_isotypics(sys);
  REQUIRE(ir.classes.size() == 2);
  for (const auto& cls : ir.classes) {
    CHECK(cls.multiplicity == 1);
    CHECK(cls.simple.module.dim() == 1);
  }
}

TEST_CASE("projective isotypics account for M") {
  for (const auto& inst : instances(12)) {
    const auto sys = inertia(inst.module, inst.action);
    const auto iso = projective_isotypics(sys);
    std::size_t total = 0;
    for (const auto& cls : iso.classes) {
      total += cls.simple.module.dim() * cls.multiplicity;
      CHECK(cls.bijection_rank == static_cast<std::size_t>(cls.isotypic.cols()));
      CHECK(cls.bijection_residual <= 1e-8);
      CHECK(static_cast<std::size_t>(cls.multiplicity_space.cols()) == cls.multiplicity);
    }
    CHECK(total == inst.module.dim());
    // M_lambda is stable under A^G
    const auto fs = fixed_subalgebra(inst.action);
    const Module res = restrict(inst.module, fs);
    for (const auto& cls : iso.classes) CHECK(invariance_residual(res, cls.multiplicity_space) <= 1e-8);
  }
}
