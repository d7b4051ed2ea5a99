#include "skewgroup/repmod.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "skewgroup/error.hpp"

namespace skewgroup {

namespace {

constexpr int kDecomposeRetries = 8;
constexpr double kClusterGap = 1e-6;
constexpr int kCyclicSamples = 3;
// Beyond this many scalar multiply-adds the representation check samples
// random element pairs instead of every basis pair.
constexpr double kExhaustiveRepCost = 5e7;
constexpr int kSampledRepPairs = 16;

std::string pair_str(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void require_same_algebra(const Module& m, const Module& n) {
  if (!same_algebra(m.algebra(), n.algebra())) {
    throw Error(ErrorKind::AlgebraMismatch, "modules are over different algebras");
  }
}

// rho(b^i) for the trace-form dual basis.
std::vector<Matrix> dual_action(const Module& m, const Matrix& dual) {
  const std::size_t n = m.algebra()->dim();
  const auto d = static_cast<Eigen::Index>(m.dim());
  std::vector<Matrix> out(n, Matrix::Zero(d, d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar c = dual(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (c != Scalar(0.0)) out[i] += c * m.rho(j);
    }
  return out;
}

// Closure of span(v) under every rho(b_i).
std::size_t cyclic_span_dim(const Module& m, const Vector& v, double tol) {
  Matrix span = numeric::range(v, tol);
  while (true) {
    Matrix grown(span.rows(), span.cols() * static_cast<Eigen::Index>(m.rho().size() + 1));
    grown.leftCols(span.cols()) = span;
    for (std::size_t i = 0; i < m.rho().size(); ++i) {
      grown.middleCols(span.cols() * static_cast<Eigen::Index>(i + 1), span.cols()) = m.rho(i) * span;
    }
    Matrix next = numeric::range(grown, tol);
    if (next.cols() == span.cols()) return static_cast<std::size_t>(span.cols());
    span = std::move(next);
  }
}

struct Cluster {
  Scalar center;
  std::size_t size;
};

std::vector<Cluster> cluster_eigenvalues(const Eigen::VectorXcd& values) {
  const auto n = static_cast<std::size_t>(values.size());
  double radius = 0.0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(values(static_cast<Eigen::Index>(i))));
  const double gap = kClusterGap * std::max(radius, 1e-300);

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(values(static_cast<Eigen::Index>(i)) - values(static_cast<Eigen::Index>(j))) <= gap)
        parent[find(i)] = find(j);

  std::vector<Cluster> clusters;
  std::vector<std::size_t> root_of_cluster;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    auto it = std::find(root_of_cluster.begin(), root_of_cluster.end(), r);
    if (it == root_of_cluster.end()) {
      root_of_cluster.push_back(r);
      clusters.push_back({values(static_cast<Eigen::Index>(i)), 1});
    } else {
      auto& c = clusters[static_cast<std::size_t>(it - root_of_cluster.begin())];
      c.center += values(static_cast<Eigen::Index>(i));
      ++c.size;
    }
  }
  for (auto& c : clusters) c.center /= static_cast<double>(c.size);
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
    if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
    return a.center.imag() < b.center.imag();
  });
  return clusters;
}

// Restriction of rho(b_i) to an orthonormal basis, without invariance checks.
std::vector<Matrix> compress(const Module& m, const Matrix& q) {
  std::vector<Matrix> out;
  out.reserve(m.rho().size());
  for (const auto& r : m.rho()) out.push_back(q.adjoint() * r * q);
  return out;
}

Scalar pairing(const Vector& chi_n, const Vector& chi_m, const Matrix& dual) {
  // sum_i chi_N(b_i) chi_M(b^i)
  return chi_n.transpose() * (dual * chi_m);
}

struct Attempt {
  bool ok = false;
  std::string why;
  Decomposition result;
};

Attempt try_decompose(const Module& m, const Matrix& dual, const std::vector<Matrix>& dual_rho, std::uint64_t seed,
                      double tol) {
  Attempt attempt;
  const auto d = static_cast<Eigen::Index>(m.dim());
  numeric::Rng rng(seed);
  const Matrix x = rng.complex_gaussian(d, d);
  Matrix y = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < m.rho().size(); ++i) y += m.rho(i) * x * dual_rho[i];

  Eigen::ComplexEigenSolver<Matrix> eig(y, false);
  if (eig.info() != Eigen::Success) {
    attempt.why = "eigenvalue iteration did not converge";
    return attempt;
  }
  const auto clusters = cluster_eigenvalues(eig.eigenvalues());

  // Eigenspaces: the `size` smallest right singular vectors of (Y - mu I).
  std::vector<Matrix> bases;
  for (const auto& c : clusters) {
    const Matrix shifted = y - c.center * Matrix::Identity(d, d);
    Eigen::BDCSVD<Matrix> svd(shifted, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const auto k = static_cast<Eigen::Index>(c.size);
    const double inside = s(d - k);
    const double outside = (d - k - 1 >= 0) ? s(d - k - 1) : std::numeric_limits<double>::infinity();
    if (!(outside > 1e3 * inside)) {
      attempt.why = "eigenspace of a cluster is not separated";
      return attempt;
    }
    bases.push_back(svd.matrixV().rightCols(k));
  }

  // Invariance, independence and simplicity of every eigenspace.
  Matrix all(d, d);
  Eigen::Index col = 0;
  std::vector<Vector> chars;
  for (const auto& q : bases) {
    const double r = invariance_residual(m, q);
    if (r > tol * 1e3) {
      attempt.why = "eigenspace not invariant (residual " + std::to_string(r) + ")";
      return attempt;
    }
    all.middleCols(col, q.cols()) = q;
    col += q.cols();
    Vector chi(static_cast<Eigen::Index>(m.rho().size()));
    for (std::size_t i = 0; i < m.rho().size(); ++i) chi(static_cast<Eigen::Index>(i)) = (q.adjoint() * m.rho(i) * q).trace();
    const Scalar end_dim = pairing(chi, chi, dual);
    if (std::abs(end_dim - 1.0) > 1e-6) {
      attempt.why = "eigenspace is not simple (commutant dimension " + std::to_string(end_dim.real()) + ")";
      return attempt;
    }
    chars.push_back(std::move(chi));
  }
  if (numeric::rank(all, tol) != m.dim()) {
    attempt.why = "eigenspaces do not span the module";
    return attempt;
  }

  // Group pieces into classes by the character pairing.
  Decomposition out;
  out.seed_used = seed;
  std::vector<std::size_t> class_of(bases.size());
  std::vector<std::size_t> reps;  // piece index of each provisional class
  for (std::size_t p = 0; p < bases.size(); ++p) {
    std::size_t found = reps.size();
    for (std::size_t r = 0; r < reps.size(); ++r) {
      if (bases[reps[r]].cols() != bases[p].cols()) continue;
      const Scalar h = pairing(chars[p], chars[reps[r]], dual);
      if (std::abs(h - 1.0) <= 1e-6) {
        found = r;
        break;
      }
      if (std::abs(h) > 1e-6) {
        attempt.why = "ambiguous character pairing " + std::to_string(std::abs(h));
        return attempt;
      }
    }
    if (found == reps.size()) reps.push_back(p);
    class_of[p] = found;
  }

  // Final class ids: ascending simple dimension, then first appearance.
  std::vector<std::size_t> order(reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return bases[reps[a]].cols() < bases[reps[b]].cols(); });
  std::vector<std::size_t> final_id(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) final_id[order[i]] = i;

  for (std::size_t p = 0; p < bases.size(); ++p) out.pieces.push_back({bases[p], final_id[class_of[p]]});

  out.classes.resize(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    auto& cls = out.classes[final_id[c]];
    cls.representative = reps[c];
    cls.simple_dim = static_cast<std::size_t>(bases[reps[c]].cols());
  }

  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    auto& cls = out.classes[c];
    const Matrix& rep = out.pieces[cls.representative].basis;
    const std::vector<Matrix> rep_rho = compress(m, rep);
    std::vector<Matrix> rep_dual(rep_rho.size(), Matrix::Zero(rep.cols(), rep.cols()));
    for (std::size_t i = 0; i < rep_rho.size(); ++i)
      for (std::size_t j = 0; j < rep_rho.size(); ++j) {
        const Scalar dij = dual(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        if (dij != Scalar(0.0)) rep_dual[i] += dij * rep_rho[j];
      }

    std::vector<Matrix> members;
    std::vector<Vector> images;  // f_j(w) in M coordinates
    for (std::size_t p = 0; p < out.pieces.size(); ++p) {
      if (out.pieces[p].iso_class != c) continue;
      const Matrix& q = out.pieces[p].basis;
      members.push_back(q);
      Matrix psi;
      if (p == cls.representative) {
        psi = Matrix::Identity(rep.cols(), rep.cols());
      } else {
        const std::vector<Matrix> target = compress(m, q);
        const Matrix seed_map = rng.complex_gaussian(q.cols(), rep.cols());
        psi = Matrix::Zero(q.cols(), rep.cols());
        for (std::size_t i = 0; i < target.size(); ++i) psi += target[i] * seed_map * rep_dual[i];
      }
      images.push_back(q * psi.col(0));
    }
    cls.multiplicity = members.size();
    Matrix iso(d, static_cast<Eigen::Index>(members.size()) * rep.cols());
    Matrix mult(d, static_cast<Eigen::Index>(images.size()));
    for (std::size_t i = 0; i < members.size(); ++i) {
      iso.middleCols(static_cast<Eigen::Index>(i) * rep.cols(), rep.cols()) = members[i];
      mult.col(static_cast<Eigen::Index>(i)) = images[i];
    }
    cls.isotypic = numeric::range(iso, tol);
    cls.multiplicity_space = numeric::range(mult, tol);
    if (static_cast<std::size_t>(cls.multiplicity_space.cols()) != cls.multiplicity) {
      attempt.why = "multiplicity space has the wrong dimension";
      return attempt;
    }
  }

  attempt.ok = true;
  attempt.result = std::move(out);
  return attempt;
}

}  // namespace

Module Module::make(AlgebraPtr algebra, std::vector<Matrix> rho, double tol) {
  if (!algebra) throw Error(ErrorKind::InvalidInput, "module needs an algebra");
  const std::size_t n = algebra->dim();
  if (rho.size() != n) {
    throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(n) + " action matrices, got " +
                                             std::to_string(rho.size()));
  }
  const Eigen::Index d = rho.front().rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (rho[i].rows() != d || rho[i].cols() != d) {
      throw Error(ErrorKind::InvalidInput, "action matrix " + std::to_string(i) + " has the wrong shape");
    }
    numeric::require_finite(rho[i], "action matrix");
  }

  Module m;
  m.algebra_ = std::move(algebra);
  m.dim_ = static_cast<std::size_t>(d);
  m.rho_ = std::move(rho);
  if (d == 0) return m;

  double scale = 1.0;
  for (const auto& r : m.rho_) scale = std::max(scale, r.norm());

  const Matrix unit_action = m.act(m.algebra_->unit());
  const double unit_r = (unit_action - Matrix::Identity(d, d)).norm();
  if (unit_r > tol * scale * static_cast<double>(d)) {
    throw Error(ErrorKind::NotARepresentation, "unit does not act as the identity (residual " +
                                                   std::to_string(unit_r) + ")");
  }

  const double cost = static_cast<double>(n) * static_cast<double>(n) * std::pow(static_cast<double>(d), 3);
  const double pair_tol = tol * scale * scale * m.algebra_->scale();
  if (cost <= kExhaustiveRepCost) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Matrix rhs = Matrix::Zero(d, d);
        for (const auto& t : m.algebra_->product(i, j)) rhs += t.coeff * m.rho_[t.k];
        const double r = (m.rho_[i] * m.rho_[j] - rhs).norm();
        if (r > pair_tol) {
          throw Error(ErrorKind::NotARepresentation, "basis pair " + pair_str(i, j) + " residual " + std::to_string(r));
        }
      }
    }
  } else {
    numeric::Rng rng(kDefaultSeed);
    for (int s = 0; s < kSampledRepPairs; ++s) {
      const Vector a = rng.complex_gaussian(static_cast<Eigen::Index>(n), 1);
      const Vector b = rng.complex_gaussian(static_cast<Eigen::Index>(n), 1);
      const double r = (m.act(a) * m.act(b) - m.act(m.algebra_->multiply(a, b))).norm();
      if (r > pair_tol * a.norm() * b.norm()) {
        throw Error(ErrorKind::NotARepresentation, "random pair " + std::to_string(s) + " residual " + std::to_string(r));
      }
    }
  }
  return m;
}

Module Module::regular(AlgebraPtr algebra) {
  Module m;
  m.dim_ = algebra->dim();
  for (std::size_t i = 0; i < algebra->dim(); ++i) m.rho_.push_back(algebra->left_mult(i));
  m.algebra_ = std::move(algebra);
  return m;
}

Matrix Module::act(const Vector& a) const {
  const auto d = static_cast<Eigen::Index>(dim_);
  Matrix out = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < rho_.size(); ++i) {
    const Scalar c = a(static_cast<Eigen::Index>(i));
    if (c != Scalar(0.0)) out += c * rho_[i];
  }
  return out;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_structure(*b, 1e-12);
}

std::vector<Matrix> hom_space(const Module& m, const Module& n, double tol) {
  require_same_algebra(m, n);
  if (m.dim() == 0 || n.dim() == 0) return {};
  std::vector<std::pair<Matrix, Matrix>> pairs;
  pairs.reserve(m.rho().size());
  for (std::size_t i = 0; i < m.rho().size(); ++i) pairs.emplace_back(m.rho(i), n.rho(i));
  return numeric::solve_sandwich(pairs, tol);
}

Matrix intertwiner_projection(const Module& m, const Module& n, const Matrix& x, double tol) {
  require_same_algebra(m, n);
  const Matrix dual = trace_dual_basis(*m.algebra(), tol);
  const auto dual_rho = dual_action(m, dual);
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(n.dim()), static_cast<Eigen::Index>(m.dim()));
  for (std::size_t i = 0; i < m.rho().size(); ++i) out += n.rho(i) * x * dual_rho[i];
  return out;
}

Vector character(const Module& m) {
  Vector chi(static_cast<Eigen::Index>(m.rho().size()));
  for (std::size_t i = 0; i < m.rho().size(); ++i) chi(static_cast<Eigen::Index>(i)) = m.rho(i).trace();
  return chi;
}

double character_pairing(const Module& m, const Module& n, double tol) {
  require_same_algebra(m, n);
  const Matrix dual = trace_dual_basis(*m.algebra(), tol);
  return pairing(character(n), character(m), dual).real();
}

SimplicityCriteria simplicity_criteria(const Module& m, std::uint64_t seed, double tol) {
  if (m.dim() == 0) throw Error(ErrorKind::InvalidInput, "zero-dimensional module");
  if (!is_semisimple(*m.algebra(), tol)) throw Error(ErrorKind::NotSemisimple, "module algebra is not semisimple");
  SimplicityCriteria out;
  out.commutant_dim = hom_space(m, m, tol).size();

  const auto d = static_cast<Eigen::Index>(m.dim());
  const auto n = static_cast<Eigen::Index>(m.algebra()->dim());
  numeric::Rng rng(seed);
  out.cyclic = true;
  for (int s = 0; s < kCyclicSamples && out.cyclic; ++s) {
    const Matrix a = m.act(rng.complex_gaussian(n, 1));
    Eigen::ComplexEigenSolver<Matrix> eig(a, false);
    const auto& values = eig.eigenvalues();
    Eigen::Index pick = 0;
    for (Eigen::Index i = 1; i < values.size(); ++i) {
      if (values(i).real() < values(pick).real() ||
          (values(i).real() == values(pick).real() && values(i).imag() < values(pick).imag()))
        pick = i;
    }
    const Matrix shifted = a - values(pick) * Matrix::Identity(d, d);
    Eigen::BDCSVD<Matrix> svd(shifted, Eigen::ComputeFullV);
    const Vector v = svd.matrixV().col(d - 1);
    out.cyclic = cyclic_span_dim(m, v, tol) == m.dim();
  }
  return out;
}

bool is_simple(const Module& m, std::uint64_t seed, double tol) {
  const auto c = simplicity_criteria(m, seed, tol);
  const bool by_commutant = c.commutant_dim == 1;
  if (by_commutant != c.cyclic) {
    throw Error(ErrorKind::NumericalInconsistency,
                "commutant dimension " + std::to_string(c.commutant_dim) + " disagrees with the cyclic test");
  }
  return by_commutant;
}

Module twist(const Module& m, std::size_t g, const AlgebraAction& action) {
  if (!same_algebra(m.algebra(), action.target())) {
    throw Error(ErrorKind::AlgebraMismatch, "action targets a different algebra");
  }
  if (g >= action.group().order()) throw Error(ErrorKind::InvalidInput, "group element out of range");
  const Matrix& inv = action.mat(action.group().inverse(g));
  std::vector<Matrix> rho;
  rho.reserve(m.rho().size());
  for (std::size_t i = 0; i < m.rho().size(); ++i) rho.push_back(m.act(inv.col(static_cast<Eigen::Index>(i))));
  return Module::make(m.algebra(), std::move(rho));
}

Module restrict(const Module& m, const SubalgebraEmbedding& embedding) {
  if (!same_algebra(m.algebra(), embedding.parent)) {
    throw Error(ErrorKind::AlgebraMismatch, "embedding targets a different algebra");
  }
  std::vector<Matrix> rho;
  for (Eigen::Index j = 0; j < embedding.inclusion.cols(); ++j) rho.push_back(m.act(embedding.inclusion.col(j)));
  return Module::make(embedding.sub, std::move(rho));
}

double invariance_residual(const Module& m, const Matrix& basis) {
  double worst = 0.0;
  for (const auto& r : m.rho()) {
    const Matrix image = r * basis;
    worst = std::max(worst, (image - basis * (basis.adjoint() * image)).norm() / numeric::scale_of(r));
  }
  return worst;
}

Module submodule(const Module& m, const Matrix& basis, double tol) {
  const double r = invariance_residual(m, basis);
  if (r > tol * 1e3) {
    throw Error(ErrorKind::NotARepresentation, "subspace is not invariant (residual " + std::to_string(r) + ")");
  }
  if (basis.cols() == 0) {
    std::vector<Matrix> rho(m.rho().size(), Matrix(0, 0));
    return Module::make(m.algebra(), std::move(rho), tol);
  }
  return Module::make(m.algebra(), compress(m, basis), tol);
}

Decomposition decompose(const Module& m, std::uint64_t seed, double tol) {
  if (m.dim() == 0) throw Error(ErrorKind::InvalidInput, "zero-dimensional module");
  if (!is_semisimple(*m.algebra(), tol)) throw Error(ErrorKind::NotSemisimple, "module algebra is not semisimple");
  const Matrix dual = trace_dual_basis(*m.algebra(), tol);
  const auto dual_rho = dual_action(m, dual);
  std::string last;
  for (int retry = 0; retry <= kDecomposeRetries; ++retry) {
    auto attempt = try_decompose(m, dual, dual_rho, seed + static_cast<std::uint64_t>(retry), tol);
    if (attempt.ok) return std::move(attempt.result);
    last = attempt.why;
  }
  throw Error(ErrorKind::DegenerateSample, "no usable commutant sample after retries: " + last);
}

Module piece_module(const Module& m, const Decomposition& d, std::size_t piece, double tol) {
  return submodule(m, d.pieces.at(piece).basis, tol);
}

Matrix invariant_subspace(const Module& m, double tol) {
  const auto d = static_cast<Eigen::Index>(m.dim());
  if (d == 0) return Matrix(0, 0);
  Matrix sym = Matrix::Zero(d, d);
  double reference = 0.0;
  Matrix stacked(d * static_cast<Eigen::Index>(m.rho().size()), d);
  for (std::size_t g = 0; g < m.rho().size(); ++g) {
    sym += m.rho(g);
    reference += numeric::scale_of(m.rho(g));
    stacked.middleRows(static_cast<Eigen::Index>(g) * d, d) = m.rho(g) - Matrix::Identity(d, d);
  }
  const Matrix image = numeric::range_scaled(sym, tol, reference);
  const Matrix fixed = numeric::nullspace_scaled(stacked, tol, reference);
  if (image.cols() != fixed.cols()) {
    throw Error(ErrorKind::NumericalInconsistency, "symmetrizer image has dimension " + std::to_string(image.cols()) +
                                                       " but the fixed space has " + std::to_string(fixed.cols()));
  }
  return image;
}

}  // namespace skewgroup
