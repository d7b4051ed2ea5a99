#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewgroup/job.hpp"

int main(int argc, char** argv) {
  CLI::App app{"skewgroup: skew group algebras, invariants and Clifford theory checks"};
  app.require_subcommand(1);

  std::string path;
  auto* validate = app.add_subcommand("validate", "parse a job file and construct every object");
  validate->add_option("job", path, "job file (JSON)")->required();

  skewgroup::RunOptions options;
  bool json = false;
  bool quiet = false;
  double tol = 0.0;
  std::uint64_t seed = 0;
  auto* run = app.add_subcommand("run", "run the tasks of a job file");
  run->add_option("job", path, "job file (JSON)")->required();
  run->add_flag("--json", json, "machine-readable report");
  auto* tol_opt = run->add_option("--tol", tol, "override the job tolerance")->check(CLI::PositiveNumber);
  auto* seed_opt = run->add_option("--seed", seed, "override the job seed");
  run->add_option("--task", options.only, "only run these tasks")
      ->check(CLI::IsMember(skewgroup::task_names()));
  run->add_flag("--quiet", quiet, "print failures and the verdict only");
  run->add_flag("--timing", options.timing, "include wall time per task");

  std::string name;
  auto* fixture = app.add_subcommand("fixture", "write a built-in instance as a job file");
  fixture->add_option("name", name, "trivial | swap | pauli | perm | cyclic")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : skewgroup::kExitInvalid;
  }

  if (*validate) return skewgroup::cmd_validate(path, std::cout, std::cerr);
  if (*fixture) return skewgroup::cmd_fixture(name, std::cout, std::cerr);
  if (*tol_opt) options.tol = tol;
  if (*seed_opt) options.seed = seed;
  return skewgroup::cmd_run(path, options, json, quiet, std::cout, std::cerr);
}
