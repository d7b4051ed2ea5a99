#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewgroup/repmod.hpp"

namespace skewgroup {

/// A group acting on an algebra together with one module over the algebra.
struct Instance {
  std::string name;
  AlgebraAction action;
  Module module;
};

/// Names accepted by make_fixture, in a stable order.
const std::vector<std::string>& fixture_names();

/// trivial | swap | pauli | perm | cyclic. Throws UnknownFixture otherwise.
Instance make_fixture(const std::string& name);

/// Sum of equal matrix blocks (dim A <= 12) with a group of order <= 8 that
/// permutes blocks and twists them by inner automorphisms, in a random
/// orthonormal algebra basis; M is the natural module of a random block in a
/// random module basis. The family cycles with the seed.
Instance random_instance(std::uint64_t seed);

/// Group and matrices generated by invertible matrices under products (identity first).
struct GeneratedGroup {
  std::vector<std::vector<std::size_t>> table;
  std::vector<Matrix> mats;
};
GeneratedGroup generate_group(const std::vector<Matrix>& generators, double tol = 1e-8);

}  // namespace skewgroup
