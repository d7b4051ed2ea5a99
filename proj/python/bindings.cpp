#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "skewgroup/error.hpp"
#include "skewgroup/job.hpp"

namespace py = pybind11;
using namespace skewgroup;

namespace {

std::string run(const std::string& text, std::optional<double> tol, std::optional<std::uint64_t> seed,
                const std::vector<std::string>& tasks, bool timing) {
  const JobSpec job = parse_job_text(text);
  RunOptions options;
  options.tol = tol;
  options.seed = seed;
  options.only = tasks;
  options.timing = timing;
  RunResult result;
  {
    py::gil_scoped_release release;
    result = run_job(job, options);
  }
  return result_to_json(job, result, options).dump();
}

std::string validate(const std::string& text) {
  const JobSpec job = parse_job_text(text);
  nlohmann::ordered_json out;
  out["name"] = job.name;
  out["dim_A"] = job.algebra->dim();
  out["order_G"] = job.action->group().order();
  out["modules"] = nlohmann::ordered_json::array();
  for (const auto& [name, m] : job.modules) out["modules"].push_back({{"name", name}, {"dim", m.dim()}});
  out["tasks"] = nlohmann::ordered_json::array();
  for (const auto& t : job.tasks) out["tasks"].push_back(t.task);
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "skew group algebras, invariants and Clifford theory checks";

  static py::exception<Error> error(m, "SkewgroupError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(error.ptr(), py::make_tuple(e.what(), std::string(to_string(e.kind()))).ptr());
    }
  });

  m.def("fixture_names", &fixture_names);
  m.def("task_names", &task_names);
  m.def(
      "fixture_json",
      [](const std::string& name, double tol, std::uint64_t seed) { return instance_to_json(make_fixture(name), tol, seed).dump(); },
      py::arg("name"), py::arg("tol") = kDefaultTol, py::arg("seed") = kDefaultSeed);
  m.def(
      "random_instance_json",
      [](std::uint64_t seed) { return instance_to_json(random_instance(seed), kDefaultTol, seed).dump(); },
      py::arg("seed"));
  m.def("validate_json", &validate, py::arg("text"));
  m.def("run_json", &run, py::arg("text"), py::arg("tol") = std::nullopt, py::arg("seed") = std::nullopt,
        py::arg("tasks") = std::vector<std::string>{}, py::arg("timing") = false);

  m.def("rank", &numeric::rank, py::arg("m"), py::arg("tol") = kDefaultTol);
  m.def("nullspace", &numeric::nullspace, py::arg("m"), py::arg("tol") = kDefaultTol);
  m.def(
      "eig_hermitian",
      [](const Matrix& h, double tol) {
        auto e = numeric::eig_hermitian(h, tol);
        return py::make_tuple(Eigen::VectorXd(e.values), Matrix(e.vectors));
      },
      py::arg("m"), py::arg("tol") = kDefaultTol);
  m.attr("DEFAULT_TOL") = kDefaultTol;
  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
