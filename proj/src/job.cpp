#include "skewgroup/job.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "skewgroup/error.hpp"
#include "skewgroup/theorems.hpp"

namespace skewgroup {

namespace {

using ojson = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, "at " + where + ": " + what);
}

const ojson& field(const ojson& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, "missing field '" + key + "'");
  return *it;
}

std::size_t read_count(const ojson& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) parse_fail(where, "expected a non-negative integer");
  return v.get<std::size_t>();
}

double read_real(const ojson& v, const std::string& where) {
  if (!v.is_number()) parse_fail(where, "expected a number");
  return v.get<double>();
}

Scalar read_scalar(const ojson& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) parse_fail(where, "scalars are written as [re, im]");
  return {read_real(v[0], where + "/0"), read_real(v[1], where + "/1")};
}

bool looks_like_scalar(const ojson& v) { return v.is_array() && v.size() == 2 && v[0].is_number(); }

// Nested rows or a flat row-major list of scalars.
Matrix read_matrix(const ojson& v, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!v.is_array()) parse_fail(where, "expected a matrix");
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  const bool flat = v.empty() ? rows * cols == 0 : looks_like_scalar(v[0]);
  if (flat) {
    if (v.size() != rows * cols) {
      parse_fail(where, "flat matrix needs " + std::to_string(rows * cols) + " scalars, got " + std::to_string(v.size()));
    }
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            read_scalar(v[i * cols + j], where + "/" + std::to_string(i * cols + j));
    return m;
  }
  if (v.size() != rows) parse_fail(where, "expected " + std::to_string(rows) + " rows");
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row = where + "/" + std::to_string(i);
    if (!v[i].is_array() || v[i].size() != cols) parse_fail(row, "expected " + std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = read_scalar(v[i][j], row + "/" + std::to_string(j));
  }
  return m;
}

std::vector<std::string> read_names(const ojson& obj, const std::string& key, std::size_t n, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return {};
  if (!it->is_array() || it->size() != n) parse_fail(where + "/" + key, "expected " + std::to_string(n) + " names");
  std::vector<std::string> out;
  for (const auto& s : *it) {
    if (!s.is_string()) parse_fail(where + "/" + key, "names must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

// Construction failures keep their kind and gain a location.
template <typename F>
auto at(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), "at " + where + ": " + e.detail());
  }
}

ojson scalar_json(Scalar z) { return ojson::array({z.real(), z.imag()}); }

ojson matrix_json(const Matrix& m) {
  ojson rows = ojson::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

long long ll(std::size_t v) { return static_cast<long long>(v); }

const Module& find_module(const JobSpec& job, const TaskSpec& task) {
  if (job.modules.empty()) throw Error(ErrorKind::ValidationError, "task '" + task.task + "' needs a module");
  if (task.module.empty()) return job.modules.front().second;
  for (const auto& [name, m] : job.modules)
    if (name == task.module) return m;
  throw Error(ErrorKind::ValidationError, "unknown module '" + task.module + "'");
}

std::vector<std::size_t> gammas(const TaskSpec& task, std::size_t count) {
  if (task.gamma) {
    if (*task.gamma >= count) throw Error(ErrorKind::InvalidInput, "gamma " + std::to_string(*task.gamma) + " out of range");
    return {*task.gamma};
  }
  std::vector<std::size_t> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = i;
  return out;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string format_scalar(Scalar z) {
  auto clean = [](double x) { return std::abs(x) < 5e-13 ? 0.0 : x; };
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", clean(z.real()), clean(z.imag()));
  return buf;
}

VerificationReport task_semisimple(const JobSpec& job) {
  VerificationReport r;
  const double tol = job.tol;
  const Algebra& a = *job.algebra;
  r.add("A_semisimple", is_semisimple(a, tol))
      .dim("dim_A", ll(a.dim()))
      .dim("rank_trace_form", ll(numeric::rank(a.trace_form(), tol)));
  const auto fixed = fixed_subalgebra(*job.action, tol);
  r.add("AG_semisimple", is_semisimple(*fixed.sub, tol))
      .dim("dim_AG", ll(fixed.sub->dim()))
      .dim("rank_trace_form", ll(numeric::rank(fixed.sub->trace_form(), tol)));
  const auto s = skew_group_algebra(*job.action, tol);
  r.add("skew_semisimple", is_semisimple(*s.alg, tol))
      .dim("dim_skew", ll(s.alg->dim()))
      .dim("rank_trace_form", ll(numeric::rank(s.alg->trace_form(), tol)));
  return r;
}

VerificationReport task_inertia(const JobSpec& job, const Module& m) {
  VerificationReport r;
  const double tol = job.tol;
  const auto system = inertia(m, *job.action, job.seed, tol);
  std::string members;
  for (std::size_t h : system.inertia) members += (members.empty() ? "" : ",") + std::to_string(h);
  r.add("inertia_group", true)
      .dim("order_G", ll(job.action->group().order()))
      .dim("order_G_M", ll(system.inertia.size()))
      .with_note("G_M = {" + members + "}");
  const std::size_t one = system.inertia_group.identity();
  const Matrix& phi1 = system.phi[one];
  r.add("phi_identity_exact", phi1 == Matrix::Identity(phi1.rows(), phi1.cols()));
  double worst = 0.0;
  for (std::size_t i = 0; i < system.inertia.size(); ++i) {
    const Matrix& mat = job.action->mat(system.inertia[i]);
    for (std::size_t b = 0; b < m.algebra()->dim(); ++b) {
      const Matrix lhs = system.phi[i] * m.rho(b);
      const Matrix rhs = m.act(mat.col(static_cast<Eigen::Index>(b))) * system.phi[i];
      worst = std::max(worst, (lhs - rhs).norm() / numeric::scale_of(m.rho(b)));
    }
  }
  r.add("intertwiner_relation", worst <= tol * 1e3).residual("max|phi(h)a-h(a)phi(h)|", worst);
  return r;
}

VerificationReport task_cocycle(const JobSpec& job, const Module& m) {
  VerificationReport r;
  const double tol = job.tol;
  const auto system = inertia(m, *job.action, job.seed, tol);
  const Cocycle& alpha = system.cocycle;
  const std::size_t one = system.inertia_group.identity();
  const std::size_t n = system.inertia.size();
  bool normalized = true;
  for (std::size_t h = 0; h < n; ++h) normalized = normalized && alpha(one, h) == Scalar(1.0) && alpha(h, one) == Scalar(1.0);
  r.add("normalized_exact", normalized).dim("order_G_M", ll(n));
  const double ident = alpha.identity_residual();
  r.add("cocycle_identity", ident <= tol * 10).residual("max_triple_residual", ident);
  r.add("unimodularity", true)
      .residual("max||alpha|-1|", alpha.unimodularity_deviation())
      .with_note("reported only");
  std::string table;
  std::string ratios;
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t k = 0; k < n; ++k) {
      table += (k == 0 ? (h == 0 ? "" : "; ") : " ") + format_scalar(alpha(h, k));
      if (h < k) {
        ratios += (ratios.empty() ? "" : " ") + std::string("(") + std::to_string(system.inertia[h]) + "," +
                  std::to_string(system.inertia[k]) + ")=" + format_scalar(alpha(h, k) / alpha(k, h));
      }
    }
  }
  r.add("table", true).with_note(table);
  r.add("commutator_ratios", true).with_note(ratios.empty() ? "none" : ratios);
  return r;
}

VerificationReport task_skew(const JobSpec& job) {
  VerificationReport r;
  const double tol = job.tol;
  const auto s = skew_group_algebra(*job.action, tol);
  const Algebra& sk = *s.alg;
  const Algebra& a = *job.algebra;
  const std::size_t ng = job.action->group().order();
  r.add("dimension", sk.dim() == a.dim() * ng)
      .dim("dim_skew", ll(sk.dim()))
      .dim("dim_A", ll(a.dim()))
      .dim("order_G", ll(ng));

  numeric::Rng rng(job.seed);
  double assoc = 0.0;
  const auto n = static_cast<Eigen::Index>(sk.dim());
  for (int t = 0; t < 100; ++t) {
    Vector x = rng.complex_gaussian(n, 1);
    Vector y = rng.complex_gaussian(n, 1);
    Vector z = rng.complex_gaussian(n, 1);
    x.normalize();
    y.normalize();
    z.normalize();
    assoc = std::max(assoc, associativity_residual(sk, x, y, z));
  }
  r.add("associativity_random_triples", assoc <= tol * 10 * sk.scale()).residual("max_residual", assoc).dim("triples", 100);

  if (ng == 1) {
    bool equal = true;
    for (std::size_t i = 0; i < a.dim(); ++i) equal = equal && sk.left_mult(i) == a.left_mult(i);
    r.add("trivial_group_constants_equal", equal && sk.unit() == a.unit());
  }

  double emb = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vector lhs = s.embed_A * a.multiply(a.basis_vector(i), a.basis_vector(j));
      const Vector rhs = sk.multiply(s.embed_A.col(static_cast<Eigen::Index>(i)), s.embed_A.col(static_cast<Eigen::Index>(j)));
      emb = std::max(emb, (lhs - rhs).norm());
    }
  const auto& g = job.action->group();
  double gemb = 0.0;
  for (std::size_t x = 0; x < ng; ++x)
    for (std::size_t y = 0; y < ng; ++y) {
      const Vector lhs = s.embed_G.col(static_cast<Eigen::Index>(g.mul(x, y)));
      const Vector rhs = sk.multiply(s.embed_G.col(static_cast<Eigen::Index>(x)), s.embed_G.col(static_cast<Eigen::Index>(y)));
      gemb = std::max(gemb, (lhs - rhs).norm());
    }
  const double unit_a = (s.embed_A * a.unit() - sk.unit()).norm();
  const double unit_g = (s.embed_G.col(static_cast<Eigen::Index>(g.identity())) - sk.unit()).norm();
  const double rtol = tol * 1e3 * sk.scale();
  r.add("embeddings_unital_multiplicative", emb <= rtol && gemb <= rtol && unit_a <= rtol && unit_g <= rtol)
      .residual("embed_A", emb)
      .residual("embed_G", gemb)
      .residual("unit_A", unit_a)
      .residual("unit_G", unit_g);

  const Vector e = symmetrizer(s);
  const double idem = (sk.multiply(e, e) - e).norm();
  r.add("symmetrizer_idempotent", idem <= rtol).residual("|ee-e|", idem);
  return r;
}

VerificationReport task_clifford(const JobSpec& job, const TaskSpec& task) {
  VerificationReport r;
  const double tol = job.tol;
  const auto s = skew_group_algebra(*job.action, tol);
  const Module regular = Module::regular(s.alg);
  const Decomposition d = decompose(regular, job.seed, tol);
  r.add("skew_simple_classes", !d.classes.empty()).dim("classes", ll(d.classes.size()));
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    const Module n = piece_module(regular, d, d.classes[c].representative, tol);
    r.absorb(clifford_correspondence(n, s, job.seed, tol), "N" + std::to_string(c));
  }
  if (!job.modules.empty()) {
    const Module& m = find_module(job, task);
    const auto system = inertia(m, *job.action, job.seed, tol);
    const auto iso = projective_isotypics(system, job.seed, tol);
    const auto sub = sub_skew_algebra(s, system.inertia, tol);
    for (std::size_t g : gammas(task, iso.classes.size())) {
      const auto wd = contragredient(iso.classes[g].simple, tol);
      const Module big = induce(extend_to_skew(system, wd, sub, tol), sub, s, tol);
      r.absorb(clifford_correspondence(big, s, job.seed, tol), "induced_gamma" + std::to_string(g));
    }
  }
  return r;
}

VerificationReport task_induced(const JobSpec& job, const TaskSpec& task, const Module& m) {
  VerificationReport r;
  const double tol = job.tol;
  const auto s = skew_group_algebra(*job.action, tol);
  const auto system = inertia(m, *job.action, job.seed, tol);
  const auto iso = projective_isotypics(system, job.seed, tol);
  for (std::size_t g : gammas(task, iso.classes.size())) {
    const auto one = induced_simplicity(system, iso, g, s, job.seed, tol);
    for (const auto& c : one.checks) r.checks.push_back(c);
  }
  return r;
}

VerificationReport task_hom_inv(const JobSpec& job, const TaskSpec& task, const Module& m) {
  VerificationReport r;
  const double tol = job.tol;
  const auto system = inertia(m, *job.action, job.seed, tol);
  const auto iso = projective_isotypics(system, job.seed, tol);
  const auto picked = gammas(task, iso.classes.size());
  for (std::size_t a : picked) {
    for (std::size_t b : picked) {
      const auto one = hom_inv_check(iso.classes[a].simple, iso.classes[b].simple, tol);
      const std::string tag = "W" + std::to_string(a) + "_W" + std::to_string(b);
      r.absorb(one, tag);
      const long long hom = one.checks.front().dims.front().second;
      r.add(tag + "/schur", hom == (a == b ? 1 : 0)).dim("dim_hom", hom);
    }
  }
  r.absorb(hom_inv_check(iso.module, iso.module, tol), "M_M");
  return r;
}

TaskSpec read_task(const ojson& t, const std::string& where) {
  TaskSpec spec;
  if (t.is_string()) {
    spec.task = t.get<std::string>();
  } else {
    const auto& name = field(t, "task", where);
    if (!name.is_string()) parse_fail(where + "/task", "expected a string");
    spec.task = name.get<std::string>();
    if (auto it = t.find("module"); it != t.end()) {
      if (!it->is_string()) parse_fail(where + "/module", "expected a string");
      spec.module = it->get<std::string>();
    }
    if (auto it = t.find("gamma"); it != t.end()) spec.gamma = read_count(*it, where + "/gamma");
  }
  const auto& names = task_names();
  if (std::find(names.begin(), names.end(), spec.task) == names.end()) {
    parse_fail(where + "/task", "unknown task '" + spec.task + "'");
  }
  return spec;
}

}  // namespace

const std::vector<std::string>& task_names() {
  static const std::vector<std::string> names{"semisimple", "inertia", "cocycle", "skew",
                                              "phi_psi", "invariant_theory", "clifford", "induced_simplicity",
                                              "hom_inv", "main_theorem", "complete_reducibility"};
  return names;
}

JobSpec parse_job(const nlohmann::json& doc) { return parse_job_text(doc.dump()); }

JobSpec parse_job_text(const std::string& text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("/", "job must be an object");

  JobSpec job;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) parse_fail("/name", "expected a string");
    job.name = it->get<std::string>();
  }
  if (auto it = doc.find("tol"); it != doc.end()) {
    job.tol = read_real(*it, "/tol");
    if (!(job.tol > 0.0)) parse_fail("/tol", "tolerance must be positive");
  }
  if (auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_unsigned()) parse_fail("/seed", "expected an unsigned integer");
    job.seed = it->get<std::uint64_t>();
  }

  const auto& alg = field(doc, "algebra", "/");
  const std::size_t dim = read_count(field(alg, "dim", "/algebra"), "/algebra/dim");
  if (dim == 0) parse_fail("/algebra/dim", "dimension must be positive");
  const auto& unit_json = field(alg, "unit", "/algebra");
  if (!unit_json.is_array() || unit_json.size() != dim) {
    parse_fail("/algebra/unit", "expected " + std::to_string(dim) + " scalars");
  }
  Vector unit(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) unit(static_cast<Eigen::Index>(i)) = read_scalar(unit_json[i], "/algebra/unit/" + std::to_string(i));
  const auto& mult_json = field(alg, "mult", "/algebra");
  if (!mult_json.is_array()) parse_fail("/algebra/mult", "expected a list of [i, j, k, scalar]");
  std::vector<StructureConstant> mult;
  for (std::size_t t = 0; t < mult_json.size(); ++t) {
    const std::string where = "/algebra/mult/" + std::to_string(t);
    const auto& e = mult_json[t];
    if (!e.is_array() || e.size() != 4) parse_fail(where, "expected [i, j, k, scalar]");
    StructureConstant c{read_count(e[0], where + "/0"), read_count(e[1], where + "/1"), read_count(e[2], where + "/2"),
                        read_scalar(e[3], where + "/3")};
    if (c.i >= dim || c.j >= dim || c.k >= dim) parse_fail(where, "index out of range");
    mult.push_back(c);
  }
  auto labels = read_names(alg, "labels", dim, "/algebra");
  job.algebra = at("/algebra", [&] { return share(Algebra::make(dim, mult, unit, job.tol, std::move(labels))); });

  const bool has_group = doc.contains("group");
  const bool has_action = doc.contains("action");
  if (has_group != has_action) parse_fail("/", "group and action must be given together");
  if (has_group) {
    const auto& grp = doc["group"];
    const std::size_t order = read_count(field(grp, "order", "/group"), "/group/order");
    if (order == 0) parse_fail("/group/order", "order must be positive");
    const auto& table_json = field(grp, "table", "/group");
    if (!table_json.is_array() || table_json.size() != order) parse_fail("/group/table", "expected " + std::to_string(order) + " rows");
    Table table(order, std::vector<std::size_t>(order));
    for (std::size_t i = 0; i < order; ++i) {
      const std::string row = "/group/table/" + std::to_string(i);
      if (!table_json[i].is_array() || table_json[i].size() != order) parse_fail(row, "expected " + std::to_string(order) + " entries");
      for (std::size_t j = 0; j < order; ++j) {
        table[i][j] = read_count(table_json[i][j], row + "/" + std::to_string(j));
        if (table[i][j] >= order) parse_fail(row + "/" + std::to_string(j), "element index out of range");
      }
    }
    auto names = read_names(grp, "names", order, "/group");
    FiniteGroup group = at("/group", [&] { return FiniteGroup::make(std::move(table), std::move(names)); });

    const auto& mats_json = field(doc["action"], "mats", "/action");
    if (!mats_json.is_array() || mats_json.size() != order) parse_fail("/action/mats", "expected one matrix per group element");
    std::vector<Matrix> mats;
    for (std::size_t g = 0; g < order; ++g) mats.push_back(read_matrix(mats_json[g], dim, dim, "/action/mats/" + std::to_string(g)));
    job.action = at("/action", [&] { return AlgebraAction::make(std::move(group), job.algebra, std::move(mats), job.tol); });
  } else {
    job.action = AlgebraAction::make(groups::trivial(), job.algebra,
                                     {Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim))},
                                     job.tol);
  }

  if (auto it = doc.find("modules"); it != doc.end()) {
    if (!it->is_object()) parse_fail("/modules", "expected an object of named modules");
    for (const auto& [name, mod] : it->items()) {
      const std::string where = "/modules/" + name;
      const std::size_t d = read_count(field(mod, "dim", where), where + "/dim");
      const auto& rho_json = field(mod, "rho", where);
      if (!rho_json.is_array() || rho_json.size() != dim) parse_fail(where + "/rho", "expected one matrix per algebra basis element");
      std::vector<Matrix> rho;
      for (std::size_t i = 0; i < dim; ++i) rho.push_back(read_matrix(rho_json[i], d, d, where + "/rho/" + std::to_string(i)));
      job.modules.emplace_back(name, at(where, [&] { return Module::make(job.algebra, std::move(rho), job.tol); }));
    }
  }

  if (auto it = doc.find("tasks"); it != doc.end()) {
    if (!it->is_array()) parse_fail("/tasks", "expected a list");
    for (std::size_t t = 0; t < it->size(); ++t) job.tasks.push_back(read_task((*it)[t], "/tasks/" + std::to_string(t)));
  } else {
    for (const auto& n : task_names()) job.tasks.push_back({n, "", std::nullopt});
  }
  for (std::size_t t = 0; t < job.tasks.size(); ++t) {
    const auto& spec = job.tasks[t];
    if (spec.module.empty()) continue;
    const bool found = std::any_of(job.modules.begin(), job.modules.end(), [&](const auto& p) { return p.first == spec.module; });
    if (!found) throw Error(ErrorKind::ValidationError, "at /tasks/" + std::to_string(t) + ": unknown module '" + spec.module + "'");
  }
  return job;
}

nlohmann::ordered_json instance_to_json(const Instance& instance, double tol, std::uint64_t seed) {
  const Algebra& a = *instance.action.target();
  const FiniteGroup& g = instance.action.group();
  ojson doc;
  doc["name"] = instance.name;
  ojson alg;
  alg["dim"] = a.dim();
  ojson unit = ojson::array();
  for (Eigen::Index i = 0; i < a.unit().size(); ++i) unit.push_back(scalar_json(a.unit()(i)));
  alg["unit"] = std::move(unit);
  ojson mult = ojson::array();
  for (const auto& c : a.structure_constants()) mult.push_back(ojson::array({c.i, c.j, c.k, scalar_json(c.coeff)}));
  alg["mult"] = std::move(mult);
  if (!a.labels().empty()) alg["labels"] = a.labels();
  doc["algebra"] = std::move(alg);

  ojson grp;
  grp["order"] = g.order();
  grp["table"] = g.table();
  if (!g.names().empty()) grp["names"] = g.names();
  doc["group"] = std::move(grp);
  ojson mats = ojson::array();
  for (const auto& m : instance.action.mats()) mats.push_back(matrix_json(m));
  doc["action"] = {{"mats", std::move(mats)}};

  ojson rho = ojson::array();
  for (const auto& m : instance.module.rho()) rho.push_back(matrix_json(m));
  ojson mod;
  mod["dim"] = instance.module.dim();
  mod["rho"] = std::move(rho);
  doc["modules"] = {{"M", std::move(mod)}};

  ojson tasks = ojson::array();
  for (const auto& n : task_names()) tasks.push_back({{"task", n}, {"module", "M"}});
  doc["tasks"] = std::move(tasks);
  doc["tol"] = tol;
  doc["seed"] = seed;
  return doc;
}

VerificationReport run_task(const JobSpec& job, const TaskSpec& task) {
  VerificationReport r;
  const auto& t = task.task;
  if (t == "semisimple") r = task_semisimple(job);
  else if (t == "skew") r = task_skew(job);
  else if (t == "phi_psi") r = check_phi_psi(skew_group_algebra(*job.action, job.tol), job.tol);
  else if (t == "invariant_theory") r = check_invariant_theory(skew_group_algebra(*job.action, job.tol), job.seed, job.tol);
  else if (t == "clifford") r = task_clifford(job, task);
  else {
    const Module& m = find_module(job, task);
    if (t == "inertia") r = task_inertia(job, m);
    else if (t == "cocycle") r = task_cocycle(job, m);
    else if (t == "induced_simplicity") r = task_induced(job, task, m);
    else if (t == "hom_inv") r = task_hom_inv(job, task, m);
    else if (t == "main_theorem") r = main_theorem(*job.action, m, job.seed, job.tol);
    else if (t == "complete_reducibility") r = complete_reducibility(*job.action, m, job.seed, job.tol);
    else throw Error(ErrorKind::ValidationError, "unknown task '" + t + "'");
  }
  r.instance = job.name;
  r.task = t;
  r.seed = job.seed;
  r.tol = job.tol;
  return r;
}

RunResult run_job(JobSpec job, const RunOptions& options) {
  if (options.tol) job.tol = *options.tol;
  if (options.seed) job.seed = *options.seed;
  RunResult result;
  for (const auto& task : job.tasks) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), task.task) == options.only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    try {
      r = run_task(job, task);
    } catch (const Error& e) {
      r = VerificationReport{};
      r.error = e.what();
      if (e.kind() == ErrorKind::NumericalInconsistency) result.inconsistent = true;
    } catch (const std::exception& e) {
      r = VerificationReport{};
      r.error = e.what();
    }
    r.instance = job.name;
    r.task = task.task;
    r.seed = job.seed;
    r.tol = job.tol;
    result.wall_ms.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    result.passed = result.passed && r.passed();
    result.reports.push_back(std::move(r));
  }
  return result;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  ojson out;
  out["instance"] = report.instance;
  out["task"] = report.task;
  out["pass"] = report.passed();
  out["seed"] = report.seed;
  out["tol"] = report.tol;
  if (!report.error.empty()) out["error"] = report.error;
  ojson checks = ojson::array();
  for (const auto& c : report.checks) {
    ojson j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    ojson dims = ojson::object();
    for (const auto& [k, v] : c.dims) dims[k] = v;
    j["dims"] = std::move(dims);
    ojson res = ojson::object();
    for (const auto& [k, v] : c.residuals) res[k] = v;
    j["residuals"] = std::move(res);
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  return out;
}

nlohmann::ordered_json result_to_json(const JobSpec& job, const RunResult& result, const RunOptions& options) {
  ojson out;
  ojson echo;
  echo["name"] = job.name;
  echo["tol"] = options.tol.value_or(job.tol);
  echo["seed"] = options.seed.value_or(job.seed);
  echo["dim_A"] = job.algebra->dim();
  echo["order_G"] = job.action->group().order();
  ojson mods = ojson::array();
  for (const auto& [name, m] : job.modules) mods.push_back({{"name", name}, {"dim", m.dim()}});
  echo["modules"] = std::move(mods);
  out["job"] = std::move(echo);
  ojson reports = ojson::array();
  for (std::size_t i = 0; i < result.reports.size(); ++i) {
    ojson r = report_to_json(result.reports[i]);
    if (options.timing) r["wall_ms"] = result.wall_ms[i];
    reports.push_back(std::move(r));
  }
  out["reports"] = std::move(reports);
  out["pass"] = result.passed;
  return out;
}

void write_text(std::ostream& out, const RunResult& result, bool quiet, bool timing) {
  for (std::size_t i = 0; i < result.reports.size(); ++i) {
    const auto& r = result.reports[i];
    if (quiet && r.passed()) continue;
    out << (r.passed() ? "[PASS] " : "[FAIL] ") << r.task;
    if (!r.instance.empty()) out << " on " << r.instance;
    if (timing) out << " (" << format_real(result.wall_ms[i]) << " ms)";
    out << "\n";
    if (!r.error.empty()) out << "  error: " << r.error << "\n";
    for (const auto& c : r.checks) {
      if (quiet && c.pass) continue;
      out << "  " << (c.pass ? "ok   " : "FAIL ") << c.name;
      for (const auto& [k, v] : c.dims) out << " " << k << "=" << v;
      for (const auto& [k, v] : c.residuals) out << " " << k << "=" << format_real(v);
      if (!c.note.empty()) out << "  [" << c.note << "]";
      out << "\n";
    }
  }
  out << "overall: " << (result.passed ? "PASS" : "FAIL") << "\n";
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    const JobSpec job = parse_job_text(read_file(path));
    out << "valid: " << (job.name.empty() ? path : job.name) << " (dim A " << job.algebra->dim() << ", |G| "
        << job.action->group().order() << ", " << job.modules.size() << " module(s), " << job.tasks.size()
        << " task(s))\n";
    return kExitPass;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

int cmd_run(const std::string& path, const RunOptions& options, bool json, bool quiet, std::ostream& out,
            std::ostream& err) {
  std::optional<JobSpec> job;
  try {
    job = parse_job_text(read_file(path));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  const RunResult result = run_job(*job, options);
  if (json) {
    out << result_to_json(*job, result, options).dump(2) << "\n";
  } else {
    write_text(out, result, quiet, options.timing);
  }
  if (result.inconsistent) return kExitInconsistent;
  return result.passed ? kExitPass : kExitFail;
}

int cmd_fixture(const std::string& name, std::ostream& out, std::ostream& err) {
  try {
    out << instance_to_json(make_fixture(name)).dump(2) << "\n";
    return kExitPass;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace skewgroup
