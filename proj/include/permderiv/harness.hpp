#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "permderiv/common.hpp"
#include "permderiv/norms.hpp"

namespace permderiv {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitGuard = 3,
};

struct RunConfig {
  std::string command;  // compute | verify | bench
  std::string target;   // what to compute, which suite to verify, what to time
  std::vector<std::string> inputs;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> m;
  std::optional<double> x;
  std::string formula = "columns";
  std::string method = "ryser";
  int trials = 100;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::size_t guard_dim = Guards::defaults().sym_dim;
  bool deterministic = false;
  unsigned threads = 1;
  int reps = 3;
  std::string output;

  Guards guards() const;
  nlohmann::json to_json() const;
};

struct Report {
  nlohmann::json command;
  nlohmann::json values = nlohmann::json::object();
  std::vector<NormReport> checks;
  std::vector<std::string> notes;
  double timing_ms = 0.0;
  nlohmann::json timings = nlohmann::json::array();
  bool pass = true;
  std::uint64_t seed = 0;
  std::string version = PERMDERIV_VERSION;

  void add(NormReport check);
};

/// Structured report; timing fields are dropped when `with_timing` is false.
nlohmann::json report_to_json(const Report& r, bool with_timing = true);
std::string render_report(const Report& r, bool with_timing = true);

/// Targets: per, padj, mixed-per, laplace, sympow, mixed-sympow, tilde, dper, dsympow.
Report cmd_compute(const RunConfig& config);

/// Suites: formula-agreement, dsym-oracle, norm-identity, perturbation,
/// tightness, trace-norm, all.
Report cmd_verify(const RunConfig& config);

/// Targets: ryser, dper, sympow.
Report cmd_bench(const RunConfig& config);

/// Dispatch on config.command.
Report run(const RunConfig& config);

/// |a - b| / max(rel * max(|a|, |b|), abs_floor). A value <= 1 means agreement
/// at relative tolerance rel with absolute floor abs_floor. Exact equality gives 0.
double mixed_error(Complex a, Complex b, double rel, double abs_floor);

}  // namespace permderiv
