// permderiv: compute permanents, symmetric powers and their derivatives, run
// verification suites and benchmarks. See README.md for usage.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "permderiv/harness.hpp"
#include "permderiv/matrix_io.hpp"

namespace {

void add_common_options(CLI::App* sub, permderiv::RunConfig& cfg) {
  sub->add_option("--input", cfg.inputs, "Matrix file (repeatable; A first, then X^1..X^m)");
  sub->add_option("--n", cfg.n, "Dimension");
  sub->add_option("--k", cfg.k, "Symmetric/tensor power order");
  sub->add_option("--m", cfg.m, "Derivative order");
  sub->add_option("--x", cfg.x, "Scalar for the commutative tightness check");
  sub->add_option("--formula", cfg.formula, "jacobi|columns|laplace|mixed|trace|oracle")
      ->check(CLI::IsMember({"jacobi", "columns", "laplace", "mixed", "trace", "oracle"}));
  sub->add_option("--method", cfg.method, "Permanent kernel: naive|ryser");
  sub->add_option("--trials", cfg.trials, "Random trials per configuration");
  sub->add_option("--seed", cfg.seed, "Random seed");
  sub->add_option("--tol", cfg.tol, "Override the suite tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--guard-dim", cfg.guard_dim, "Cap on symmetric-power dimension")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--deterministic", cfg.deterministic, "Single reduction order for parallel kernels");
  sub->add_option("--threads", cfg.threads, "Worker threads for the Ryser kernel");
  sub->add_option("--reps", cfg.reps, "Repetitions per benchmark");
  sub->add_option("--output", cfg.output, "Write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    permderiv::Guards::defaults();
  } catch (const permderiv::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return permderiv::kExitUsage;
  }
  CLI::App app{"Permanents, symmetric tensor powers and their derivatives"};
  app.require_subcommand(1);
  permderiv::RunConfig cfg;

  auto* compute = app.add_subcommand("compute", "Compute a single object");
  compute->add_option("target", cfg.target,
                      "per|padj|mixed-per|sympow|mixed-sympow|tilde|dper|dsympow")->required();
  add_common_options(compute, cfg);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cfg.target,
                     "formula-agreement|dsym-oracle|norm-identity|perturbation|tightness|trace-norm|all")
      ->required();
  add_common_options(verify, cfg);

  auto* bench = app.add_subcommand("bench", "Time the kernels");
  bench->add_option("target", cfg.target, "ryser|dper|sympow")->required();
  add_common_options(bench, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? permderiv::kExitPass : permderiv::kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    const auto report = permderiv::run(cfg);
    const std::string text = permderiv::render_report(report);
    if (cfg.output.empty()) {
      std::cout << text << '\n';
    } else {
      std::ofstream out(cfg.output);
      if (!out) {
        std::cerr << "error: cannot write " << cfg.output << '\n';
        return permderiv::kExitUsage;
      }
      out << text << '\n';
    }
    return report.pass ? permderiv::kExitPass : permderiv::kExitCheckFailed;
  } catch (const permderiv::GuardError& e) {
    std::cerr << "guard violation: " << e.what() << '\n';
    return permderiv::kExitGuard;
  } catch (const permderiv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return permderiv::kExitUsage;
  } catch (const permderiv::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return permderiv::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return permderiv::kExitCheckFailed;
  }
}
