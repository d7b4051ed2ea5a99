#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "skewgroup/fixtures.hpp"
#include "skewgroup/report.hpp"

namespace skewgroup {

struct TaskSpec {
  std::string task;
  std::string module;                // empty: the first module of the job
  std::optional<std::size_t> gamma;  // restricts per-class tasks to one class
};

struct JobSpec {
  std::string name;
  AlgebraPtr algebra;
  std::optional<AlgebraAction> action;
  std::vector<std::pair<std::string, Module>> modules;
  std::vector<TaskSpec> tasks;
  double tol = kDefaultTol;
  std::uint64_t seed = kDefaultSeed;
};

/// Task names in canonical order.
const std::vector<std::string>& task_names();

/// Builds and validates every object of a job. Malformed JSON or fields raise
/// ParseError with a location; failed construction keeps the domain error kind.
JobSpec parse_job(const nlohmann::json& doc);
JobSpec parse_job_text(const std::string& text);

/// A job running every task on the instance's module.
nlohmann::ordered_json instance_to_json(const Instance& instance, double tol = kDefaultTol,
                                        std::uint64_t seed = kDefaultSeed);

VerificationReport run_task(const JobSpec& job, const TaskSpec& task);

struct RunOptions {
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> only;  // task filter
  bool timing = false;
};

struct RunResult {
  std::vector<VerificationReport> reports;
  std::vector<double> wall_ms;
  bool passed = true;
  bool inconsistent = false;
};

RunResult run_job(JobSpec job, const RunOptions& options);

nlohmann::ordered_json report_to_json(const VerificationReport& report);
nlohmann::ordered_json result_to_json(const JobSpec& job, const RunResult& result, const RunOptions& options);
void write_text(std::ostream& out, const RunResult& result, bool quiet, bool timing);

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitInvalid = 2, kExitInconsistent = 3 };

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_run(const std::string& path, const RunOptions& options, bool json, bool quiet, std::ostream& out,
            std::ostream& err);
int cmd_fixture(const std::string& name, std::ostream& out, std::ostream& err);

}  // namespace skewgroup
