#include <doctest.h>

#include <set>

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

}  // namespace

TEST_CASE("make_group examples") {
  const auto t = FiniteGroup::make({{0}});
  CHECK(t.order() == 1);
  const auto z2 = FiniteGroup::make({{0, 1}, {1, 0}});
  CHECK(z2.order() == 2);
  CHECK(z2.inverse(1) == 1);
  CHECK(kind_of([] { FiniteGroup::make({{0, 0}, {1, 1}}); }) == ErrorKind::NoIdentity);
  // Latin square with identity 0 that is not associative (order 5 loop)
  const Table loop{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(kind_of([&] { FiniteGroup::make(loop); }) == ErrorKind::NotAssociative);
}

TEST_CASE("group inverses and identity") {
  for (const auto& g : {groups::cyclic(5), groups::symmetric(3), groups::dihedral(4), groups::quaternion()}) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      CHECK(g.mul(x, g.inverse(x)) == g.identity());
      CHECK(g.mul(g.identity(), x) == x);
      CHECK(g.mul(x, g.identity()) == x);
    }
  }
}

TEST_CASE("make_action examples") {
  const auto c = share(matrix_algebra(1));
  CHECK_NOTHROW(AlgebraAction::make(groups::trivial(), c, {Matrix::Identity(1, 1)}));

  const auto pauli = make_fixture("pauli");
  CHECK(pauli.action.group().order() == 4);
  // conjugation matrices computed directly on matrix units
  const Matrix x = oracle::conjugation(oracle::pauli_x());
  const Matrix z = oracle::conjugation(oracle::pauli_z());
  CHECK((x * z - z * x).norm() < 1e-12);  // signs cancel
  bool found_x = false;
  for (const auto& m : pauli.action.mats()) found_x = found_x || (m - x).norm() < 1e-12;
  CHECK(found_x);

  const auto swap = make_fixture("swap");
  for (const auto& m : swap.action.mats()) CHECK((m * m - Matrix::Identity(8, 8)).norm() < 1e-12);

  const auto m2 = share(matrix_algebra(2));
  const auto z2 = groups::cyclic(2);
  // transpose is an anti-automorphism
  Matrix transpose = Matrix::Zero(4, 4);
  transpose(0, 0) = transpose(3, 3) = transpose(1, 2) = transpose(2, 1) = 1.0;
  CHECK(kind_of([&] { AlgebraAction::make(z2, m2, {Matrix::Identity(4, 4), transpose}); }) == ErrorKind::NotAutomorphism);
  // conjugation by diag(1, i) squares to conjugation by Z, not the identity
  Matrix s = Matrix::Identity(2, 2);
  s(1, 1) = Scalar(0.0, 1.0);
  const Matrix half_z = oracle::conjugation(s);
  CHECK(kind_of([&] { AlgebraAction::make(z2, m2, {Matrix::Identity(4, 4), half_z}); }) == ErrorKind::NotHomomorphism);
  CHECK(kind_of([&] { AlgebraAction::make(z2, m2, {x, x}); }) == ErrorKind::NotHomomorphism);
}

TEST_CASE("left_cosets examples") {
  const auto s3 = groups::symmetric(3);
  std::vector<std::size_t> all(s3.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  CHECK(left_cosets(s3, all) == std::vector<std::size_t>{s3.identity()});
  const auto reps = left_cosets(s3, {s3.identity()});
  CHECK(reps.size() == 6);
  CHECK(reps.front() == s3.identity());

  // an order-2 subgroup by brute search
  std::size_t t = 0;
  for (std::size_t x = 0; x < s3.order(); ++x)
    if (x != s3.identity() && s3.mul(x, x) == s3.identity()) t = x;
  const std::vector<std::size_t> h{std::min(t, s3.identity()), std::max(t, s3.identity())};
  const auto r = left_cosets(s3, h);
  CHECK(r.size() == 3);
  CHECK(r.front() == s3.identity());

  CHECK(kind_of([&] { left_cosets(s3, {s3.identity(), t == 1 ? 2u : 1u, t}); }) == ErrorKind::NotASubgroup);
}

TEST_CASE("cosets partition the group") {
  for (const auto& g : {groups::symmetric(3), groups::dihedral(4), groups::cyclic(6), groups::quaternion()}) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::set<std::size_t> hs{g.identity()};
      for (std::size_t y = x; y != g.identity(); y = g.mul(y, x)) hs.insert(y);
      const std::vector<std::size_t> h(hs.begin(), hs.end());
      std::set<std::size_t> seen;
      const auto reps = left_cosets(g, h);
      for (std::size_t rep : reps) {
        std::set<std::size_t> coset;
        for (std::size_t k : h) coset.insert(g.mul(rep, k));
        CHECK(coset.size() == h.size());
        for (std::size_t c : coset) CHECK(seen.insert(c).second);
        CHECK(rep == *coset.begin());  // minimal index representative
      }
      CHECK(seen.size() == g.order());
    }
  }
}

TEST_CASE("action matrices are invertible") {
  std::vector<AlgebraAction> actions;
  for (const auto& name : fixture_names()) actions.push_back(make_fixture(name).action);
  for (std::uint64_t s = 1; s <= 8; ++s) actions.push_back(random_instance(s).action);
  for (const auto& act : actions) {
    const auto& g = act.group();
    for (std::size_t x = 0; x < g.order(); ++x) {
      const auto n = act.mat(x).rows();
      CHECK((act.mat(x) * act.mat(g.inverse(x)) - Matrix::Identity(n, n)).norm() <= 1e-9 * n);
    }
  }
}
