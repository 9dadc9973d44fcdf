#include "permderiv/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "permderiv/derivatives.hpp"
#include "permderiv/indexsets.hpp"
#include "permderiv/matrix_io.hpp"
#include "permderiv/permanent.hpp"
#include "permderiv/random.hpp"
#include "permderiv/sym_tensor.hpp"

namespace permderiv {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Independent stream per (seed, tag...) so suites do not share draws.
Rng derive_rng(std::uint64_t seed, std::initializer_list<std::uint32_t> tags) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed),
                                   static_cast<std::uint32_t>(seed >> 32)};
  words.insert(words.end(), tags.begin(), tags.end());
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

int require_param(const std::optional<int>& v, const char* flag) {
  if (!v) throw DomainError(std::string("missing required option ") + flag);
  return *v;
}

std::vector<Matrix> load_inputs(const RunConfig& config, std::size_t at_least) {
  if (config.inputs.size() < at_least)
    throw DomainError("expected at least " + std::to_string(at_least) + " --input file(s), got " +
                      std::to_string(config.inputs.size()));
  std::vector<Matrix> out;
  out.reserve(config.inputs.size());
  for (const auto& path : config.inputs) out.push_back(read_matrix_file(path));
  return out;
}

json multiindex_to_json(const MultiIndex& a) {
  return json(std::vector<int>(a.entries().begin(), a.entries().end()));
}

json sym_to_json(const SymMatrix& s) {
  json basis = json::array();
  for (const auto& a : s.basis().elements()) basis.push_back(multiindex_to_json(a));
  return {{"order", s.order()}, {"dimension", s.dimension()}, {"basis", basis},
          {"data", matrix_to_json(s.data())}};
}

json compressed_to_json(const CompressedMatrix& c) {
  json index = json::array();
  for (const auto& a : c.index) index.push_back(multiindex_to_json(a));
  return {{"order", c.order}, {"dimension", c.dimension}, {"index", index},
          {"data", matrix_to_json(c.data)}};
}

double matrix_mixed_error(const Matrix& a, const Matrix& b, double rel, double abs_floor) {
  const double diff = (a - b).cwiseAbs().maxCoeff();
  if (diff == 0.0) return 0.0;
  return diff / std::max(rel * std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()), abs_floor);
}

/// Agreement check on a worst normalized error: passes iff it is <= 1.
NormReport agreement(std::string quantity, double worst, double rel, double abs_floor) {
  NormReport r;
  r.quantity = std::move(quantity);
  r.computed = worst;
  r.reference = 0.0;
  r.slack = 1.0 - worst;
  r.tolerance = 0.0;
  r.pass = worst <= 1.0;
  std::ostringstream os;
  os.precision(17);
  os << "normalized error, rel=" << rel << " abs=" << abs_floor;
  r.detail = os.str();
  return r;
}

std::string config_tag(std::initializer_list<std::pair<const char*, int>> items) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : items) {
    os << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- compute

void compute_dper(const RunConfig& config, const Guards& guards, Report& report) {
  auto mats = load_inputs(config, 2);
  const Matrix a = mats[0];
  std::vector<Matrix> xs(mats.begin() + 1, mats.end());
  if (config.m) {
    if (xs.size() == 1)
      xs.assign(static_cast<std::size_t>(*config.m), xs[0]);
    else if (static_cast<int>(xs.size()) != *config.m)
      throw DomainError("--m " + std::to_string(*config.m) + " does not match " +
                        std::to_string(xs.size()) + " direction inputs");
  }
  const Formula formula = formula_from_string(config.formula);
  const int n = static_cast<int>(a.rows());
  const auto result = dper(formula, a, xs, guards);
  report.values["order"] = result.order;
  report.values["formula"] = result.formula;
  report.values["value"] = complex_to_json(std::get<Complex>(result.value));
  if (result.order > n)
    report.notes.push_back("derivative order m=" + std::to_string(result.order) +
                           " exceeds n=" + std::to_string(n) +
                           "; per is a degree-n polynomial so every such derivative is 0");
}

}  // namespace

Guards RunConfig::guards() const {
  Guards g = Guards::defaults();
  g.sym_dim = guard_dim;
  return g;
}

json RunConfig::to_json() const {
  json j{{"command", command}, {"target", target}, {"inputs", inputs},
         {"formula", formula}, {"method", method},  {"trials", trials},
         {"seed", seed},       {"guard_dim", guard_dim}, {"deterministic", deterministic},
         {"threads", threads}};
  if (n) j["n"] = *n;
  if (k) j["k"] = *k;
  if (m) j["m"] = *m;
  if (x) j["x"] = *x;
  if (tol) j["tol"] = *tol;
  if (command == "bench") j["reps"] = reps;
  return j;
}

void Report::add(NormReport check) {
  pass = pass && check.pass;
  checks.push_back(std::move(check));
}

json report_to_json(const Report& r, bool with_timing) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj{{"quantity", c.quantity}, {"computed", c.computed}, {"reference", c.reference},
            {"slack", c.slack},       {"tolerance", c.tolerance}, {"pass", c.pass}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  json j{{"command", r.command}, {"values", r.values}, {"checks", checks},
         {"notes", r.notes},     {"pass", r.pass},     {"seed", r.seed},
         {"version", r.version}};
  if (with_timing) {
    j["timing_ms"] = r.timing_ms;
    j["timings"] = r.timings;
  }
  return j;
}

std::string render_report(const Report& r, bool with_timing) {
  return report_to_json(r, with_timing).dump(2);
}

double mixed_error(Complex a, Complex b, double rel, double abs_floor) {
  const double diff = std::abs(a - b);
  if (diff == 0.0) return 0.0;
  return diff / std::max(rel * std::max(std::abs(a), std::abs(b)), abs_floor);
}

Report cmd_compute(const RunConfig& config) {
  const auto start = Clock::now();
  const Guards guards = config.guards();
  Report report;
  report.command = config.to_json();
  report.seed = config.seed;
  const std::string& t = config.target;

  if (t == "per") {
    const Matrix a = load_inputs(config, 1)[0];
    Complex v;
    if (config.method == "naive")
      v = per_naive(a, guards);
    else if (config.method == "ryser")
      v = per_ryser(a, config.deterministic ? 1u : std::max(1u, config.threads), guards);
    else
      throw DomainError("unknown --method '" + config.method + "' (naive|ryser)");
    report.values["method"] = config.method;
    report.values["value"] = complex_to_json(v);
  } else if (t == "padj") {
    report.values["value"] = matrix_to_json(padj(load_inputs(config, 1)[0]));
  } else if (t == "mixed-per") {
    report.values["value"] = complex_to_json(mixed_permanent(load_inputs(config, 1), guards));
  } else if (t == "sympow") {
    const int k = require_param(config.k, "--k");
    report.values["value"] = sym_to_json(sym_power(load_inputs(config, 1)[0], k, guards));
  } else if (t == "mixed-sympow") {
    report.values["value"] = sym_to_json(mixed_sym_product(load_inputs(config, 1), guards));
  } else if (t == "tilde") {
    const int m = require_param(config.m, "--m");
    report.values["value"] = compressed_to_json(tilde_compound(load_inputs(config, 1)[0], m));
  } else if (t == "dper") {
    compute_dper(config, guards, report);
  } else if (t == "dsympow") {
    const int k = require_param(config.k, "--k");
    auto mats = load_inputs(config, 2);
    std::vector<Matrix> xs(mats.begin() + 1, mats.end());
    if (config.m && xs.size() == 1) xs.assign(static_cast<std::size_t>(*config.m), xs[0]);
    if (static_cast<int>(xs.size()) > k)
      report.notes.push_back("derivative order exceeds k; the derivative is the zero operator");
    report.values["order"] = static_cast<int>(xs.size());
    report.values["value"] = sym_to_json(dsym_power(mats[0], k, xs, guards));
  } else {
    throw DomainError("unknown compute target '" + t +
                      "' (per|padj|mixed-per|sympow|mixed-sympow|tilde|dper|dsympow)");
  }
  report.timing_ms = elapsed_ms(start);
  return report;
}

namespace {

// ---------------------------------------------------------------- verify suites

struct SuiteContext {
  const RunConfig& config;
  const Guards& guards;
  Report& report;
  double tol(double fallback) const { return config.tol.value_or(fallback); }
};

std::vector<int> range_or(const std::optional<int>& v, int lo, int hi) {
  if (v) return {*v};
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

void suite_formula_agreement(SuiteContext& ctx) {
  const double rel = ctx.tol(1e-9);
  const double abs_floor = std::min(1e-12, rel);
  for (int n : range_or(ctx.config.n, 2, 6))
    for (int m : range_or(ctx.config.m, 1, 3)) {
      const std::vector<std::string> names{"columns", "laplace", "mixed", "trace", "oracle"};
      std::vector<std::vector<double>> worst(names.size(), std::vector<double>(names.size(), 0.0));
      double jacobi_worst = 0.0;
      for (int t = 0; t < ctx.config.trials; ++t) {
        Rng rng = derive_rng(ctx.config.seed, {1u, static_cast<std::uint32_t>(n),
                                               static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(t)});
        const Matrix a = random_disc_matrix(n, rng);
        std::vector<Matrix> xs;
        for (int p = 0; p < m; ++p) xs.push_back(random_disc_matrix(n, rng));
        const DeletionPermanents cache(a);
        const std::vector<Complex> v{dper_columns(a, xs, ctx.guards),
                                     dper_laplace(a, xs, &cache, ctx.guards),
                                     dper_mixed(a, xs, &cache, ctx.guards),
                                     dper_trace(a, xs, &cache, ctx.guards),
                                     oracle_dper(a, xs, ctx.guards)};
        for (std::size_t i = 0; i < v.size(); ++i)
          for (std::size_t j = i + 1; j < v.size(); ++j)
            worst[i][j] = std::max(worst[i][j], mixed_error(v[i], v[j], rel, abs_floor));
        if (m == 1)
          jacobi_worst = std::max(jacobi_worst, mixed_error(dper_jacobi(a, xs[0]), v[4], rel, abs_floor));
      }
      const std::string tag = config_tag({{"n", n}, {"m", m}});
      for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
          ctx.report.add(agreement(names[i] + " vs " + names[j] + " " + tag, worst[i][j], rel, abs_floor));
      if (m == 1) ctx.report.add(agreement("jacobi vs oracle " + tag, jacobi_worst, rel, abs_floor));
    }
}

void suite_dsym_oracle(SuiteContext& ctx) {
  const double rel = ctx.tol(1e-9);
  const double abs_floor = std::min(1e-12, rel);
  const int trials = std::min(ctx.config.trials, 20);
  for (int n : range_or(ctx.config.n, 1, 3))
    for (int k : range_or(ctx.config.k, 1, 3))
      for (int m : range_or(ctx.config.m, 1, k)) {
        if (m > k) continue;
        double vs_oracle = 0.0, vs_entrywise = 0.0, remark = 0.0, strict_uncounted = 0.0;
        double uncounted_dev = 0.0;
        for (int t = 0; t < trials; ++t) {
          Rng rng = derive_rng(ctx.config.seed, {2u, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k),
                                                 static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(t)});
          const Matrix a = random_disc_matrix(n, rng);
          std::vector<Matrix> xs;
          for (int p = 0; p < m; ++p) xs.push_back(random_disc_matrix(n, rng));
          const SymMatrix d = dsym_power(a, k, xs, ctx.guards);
          vs_oracle = std::max(vs_oracle, matrix_mixed_error(d.data(), oracle_dsym_power(a, k, xs, ctx.guards).data(),
                                                             rel, abs_floor));
          vs_entrywise = std::max(vs_entrywise, matrix_mixed_error(d.data(), dsym_power_entrywise(a, k, xs, ctx.guards).data(),
                                                                   rel, abs_floor));
          const SymMatrix u = dsym_power_uncounted(a, k, xs, ctx.guards);
          uncounted_dev = std::max(uncounted_dev, (u.data() - d.data()).cwiseAbs().maxCoeff());
          if (k <= n) {
            const auto du = q_compress(u).data;
            const auto dd = q_compress(d).data;
            strict_uncounted = std::max(strict_uncounted, matrix_mixed_error(du, dd, rel, abs_floor));
          }
          if (k == n) {
            std::vector<int> all(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
            const MultiIndex top(all, n);
            remark = std::max(remark, mixed_error(d.entry(top, top), dper_mixed(a, xs, nullptr, ctx.guards),
                                                  1e-10, abs_floor));
          }
        }
        const std::string tag = config_tag({{"n", n}, {"k", k}, {"m", m}});
        ctx.report.add(agreement("dsym_power vs roots-of-unity oracle " + tag, vs_oracle, rel, abs_floor));
        ctx.report.add(agreement("dsym_power vs composition route " + tag, vs_entrywise, rel, abs_floor));
        if (k <= n)
          ctx.report.add(agreement("dsym_power vs uncounted form on strict entries " + tag, strict_uncounted, rel, abs_floor));
        if (k == n) ctx.report.add(agreement("top entry of dsym_power vs dper_mixed " + tag, remark, 1e-10, abs_floor));
        ctx.report.values["uncounted_form_max_deviation"][tag] = uncounted_dev;
      }
}

void suite_norm_identity(SuiteContext& ctx) {
  const double rel = ctx.tol(1e-9);
  for (int n : range_or(ctx.config.n, 1, 4))
    for (int k : range_or(ctx.config.k, 1, 4))
      for (int m : range_or(ctx.config.m, 1, k)) {
        if (m > k) continue;
        Rng rng = derive_rng(ctx.config.seed, {3u, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k),
                                               static_cast<std::uint32_t>(m)});
        const Matrix a = random_disc_matrix(n, rng);
        auto r = verify_norm_identity(a, k, m, ctx.config.trials, ctx.config.seed, rel);
        r.quantity += " " + config_tag({{"n", n}, {"k", k}, {"m", m}});
        ctx.report.add(std::move(r));
      }
}

void suite_perturbation(SuiteContext& ctx) {
  const double tol = ctx.tol(1e-10);
  for (int n : range_or(ctx.config.n, 1, 4)) {
    const auto ks = range_or(ctx.config.k, 1, 4);
    NormReport worst_per;
    std::vector<NormReport> worst_sym(ks.size());
    for (int t = 0; t < ctx.config.trials; ++t) {
      Rng rng = derive_rng(ctx.config.seed, {4u, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(t)});
      const Matrix a = random_disc_matrix(n, rng);
      // Alternate large and small perturbations.
      const double scale = (t % 2 == 0) ? 1.0 : 1e-3;
      const Matrix x = scale * random_disc_matrix(n, rng);
      auto p = perturb_bound_per(a, x, tol);
      if (t == 0 || p.slack < worst_per.slack) worst_per = p;
      for (std::size_t i = 0; i < ks.size(); ++i) {
        auto s = perturb_bound_sym(a, x, ks[i], tol);
        if (t == 0 || s.slack < worst_sym[i].slack) worst_sym[i] = s;
      }
    }
    if (ctx.config.trials == 0) continue;
    worst_per.quantity += " worst of " + std::to_string(ctx.config.trials) + " " + config_tag({{"n", n}});
    ctx.report.add(worst_per);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      worst_sym[i].quantity += " worst of " + std::to_string(ctx.config.trials) + " " +
                               config_tag({{"n", n}, {"k", ks[i]}});
      ctx.report.add(worst_sym[i]);
    }
  }
}

void suite_tightness(SuiteContext& ctx) {
  const double rel = ctx.tol(1e-12);
  const std::vector<double> xs = ctx.config.x ? std::vector<double>{*ctx.config.x}
                                              : std::vector<double>{0.25, 0.5, 1.0, 2.0};
  for (int n : range_or(ctx.config.n, 1, 10))
    for (double x : xs) ctx.report.add(tightness_commutative(n, x, rel));
}

void suite_trace_norm(SuiteContext& ctx) {
  const double tol = ctx.tol(1e-10);
  for (int n : range_or(ctx.config.n, 1, 5))
    for (int m : range_or(ctx.config.m, 1, std::min(3, n))) {
      if (m > n) continue;
      Rng rng = derive_rng(ctx.config.seed, {5u, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m)});
      const Matrix a = random_disc_matrix(n, rng);
      const auto r = dper_norm_bound(a, m, ctx.config.trials, ctx.config.seed, tol);
      const std::string tag = config_tag({{"n", n}, {"m", m}});
      for (auto c : r.checks) {
        c.quantity += " " + tag;
        ctx.report.add(std::move(c));
      }
      ctx.report.values["sampled_dper_max"][tag] = r.sampled_max;
    }
}

}  // namespace

Report cmd_verify(const RunConfig& config) {
  const auto start = Clock::now();
  const Guards guards = config.guards();
  Report report;
  report.command = config.to_json();
  report.seed = config.seed;
  if (config.trials < 0) throw DomainError("--trials must be nonnegative");
  SuiteContext ctx{config, guards, report};

  const std::vector<std::pair<std::string, std::function<void(SuiteContext&)>>> suites{
      {"formula-agreement", suite_formula_agreement},
      {"dsym-oracle", suite_dsym_oracle},
      {"norm-identity", suite_norm_identity},
      {"perturbation", suite_perturbation},
      {"tightness", suite_tightness},
      {"trace-norm", suite_trace_norm},
  };
  bool found = false;
  for (const auto& [name, fn] : suites)
    if (config.target == name || config.target == "all") {
      fn(ctx);
      found = true;
    }
  if (!found) {
    std::string known;
    for (const auto& s : suites) known += s.first + "|";
    throw DomainError("unknown verify suite '" + config.target + "' (" + known + "all)");
  }
  report.values["checks_run"] = report.checks.size();
  report.timing_ms = elapsed_ms(start);
  return report;
}

Report cmd_bench(const RunConfig& config) {
  const auto start = Clock::now();
  const Guards guards = config.guards();
  Report report;
  report.command = config.to_json();
  report.seed = config.seed;
  const int reps = std::max(1, config.reps);

  auto time_it = [&](const std::string& name, const std::function<void()>& fn) {
    double best = 0.0;
    for (int r = 0; r < reps; ++r) {
      const auto t0 = Clock::now();
      fn();
      const double ms = elapsed_ms(t0);
      best = (r == 0) ? ms : std::min(best, ms);
    }
    report.timings.push_back({{"name", name}, {"best_ms", best}, {"reps", reps}});
  };

  if (config.target == "ryser") {
    const auto sizes = config.n ? std::vector<int>{*config.n} : std::vector<int>{8, 12, 16, 20};
    for (int n : sizes) {
      if (n > guards.ryser_permanent) throw GuardError("ryser_permanent", n, guards.ryser_permanent);
      Rng rng = derive_rng(config.seed, {6u, static_cast<std::uint32_t>(n)});
      const Matrix a = random_disc_matrix(n, rng);
      Complex v;
      const unsigned chunks = config.deterministic ? 1u : std::max(1u, config.threads);
      time_it("per_ryser n=" + std::to_string(n), [&] { v = per_ryser(a, chunks, guards); });
      report.values["per"][std::to_string(n)] = complex_to_json(v);
    }
  } else if (config.target == "dper") {
    const int n = config.n.value_or(5);
    const int m = config.m.value_or(2);
    Rng rng = derive_rng(config.seed, {7u, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m)});
    const Matrix a = random_disc_matrix(n, rng);
    std::vector<Matrix> xs;
    for (int p = 0; p < m; ++p) xs.push_back(random_disc_matrix(n, rng));
    for (Formula f : {Formula::columns, Formula::laplace, Formula::mixed, Formula::trace, Formula::oracle}) {
      Complex v;
      time_it("dper_" + std::string(to_string(f)) + " n=" + std::to_string(n) + " m=" + std::to_string(m),
              [&] { v = std::get<Complex>(dper(f, a, xs, guards).value); });
      report.values["dper"][std::string(to_string(f))] = complex_to_json(v);
    }
  } else if (config.target == "sympow") {
    const int n = config.n.value_or(4);
    const int k = config.k.value_or(4);
    Rng rng = derive_rng(config.seed, {8u, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k)});
    const Matrix a = random_disc_matrix(n, rng);
    std::size_t side = 0;
    time_it("sym_power n=" + std::to_string(n) + " k=" + std::to_string(k),
            [&] { side = sym_power(a, k, guards).basis().size(); });
    report.values["side"] = side;
  } else {
    throw DomainError("unknown bench target '" + config.target + "' (ryser|dper|sympow)");
  }
  report.timing_ms = elapsed_ms(start);
  return report;
}

Report run(const RunConfig& config) {
  if (config.command == "compute") return cmd_compute(config);
  if (config.command == "verify") return cmd_verify(config);
  if (config.command == "bench") return cmd_bench(config);
  throw DomainError("unknown command '" + config.command + "' (compute|verify|bench)");
}

}  // namespace permderiv
