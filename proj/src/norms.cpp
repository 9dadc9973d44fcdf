#include "permderiv/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "permderiv/derivatives.hpp"
#include "permderiv/random.hpp"
#include "permderiv/sym_tensor.hpp"

namespace permderiv {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

NormReport bound_report(std::string quantity, double observed, double bound, double tolerance) {
  NormReport r;
  r.quantity = std::move(quantity);
  r.computed = observed;
  r.reference = bound;
  r.slack = bound - observed;
  r.tolerance = tolerance;
  r.pass = r.slack >= -tolerance;
  return r;
}

NormReport equality_report(std::string quantity, double computed, double reference, double rel_tol) {
  NormReport r;
  r.quantity = std::move(quantity);
  r.computed = computed;
  r.reference = reference;
  r.slack = -std::abs(computed - reference);
  r.tolerance = rel_tol * std::max(1.0, std::abs(reference));
  r.pass = r.slack >= -r.tolerance;
  return r;
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double trace_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

SvdReduction svd_reduce(const Matrix& a) {
  require_square(a, "svd_reduce");
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  // a = P S Q^*, so P^* a Q = S.
  return SvdReduction{svd.matrixU().adjoint(), svd.matrixV(), svd.singularValues()};
}

double dsym_norm_exact(const Matrix& a, int k, int m) {
  if (m < 1 || m > k) throw DomainError("dsym_norm_exact: need 1 <= m <= k");
  return falling_factorial(k, m) * std::pow(spectral_norm(a), k - m);
}

double sample_multilinear_norm(const Matrix& a, int k, int m, int trials, std::uint64_t seed) {
  require_square(a, "sample_multilinear_norm");
  if (m < 1 || m > k) throw DomainError("sample_multilinear_norm: need 1 <= m <= k");
  double best = 0.0;
  std::vector<Matrix> xs(static_cast<std::size_t>(m));
  for (int t = 0; t < trials; ++t) {
    Rng rng(seed + static_cast<std::uint64_t>(t));
    for (auto& x : xs) x = random_unit_norm_matrix(a.rows(), rng);
    best = std::max(best, spectral_norm(dsym_power(a, k, xs).data()));
  }
  return best;
}

NormReport verify_norm_identity(const Matrix& a, int k, int m, int trials, std::uint64_t seed,
                                double rel_tol) {
  require_square(a, "verify_norm_identity");
  const auto reduced = svd_reduce(a);
  const std::vector<Matrix> ids(static_cast<std::size_t>(m), Matrix::Identity(a.rows(), a.cols()));
  const double computed = spectral_norm(dsym_power(reduced.diagonal(), k, ids).data());
  const double reference = dsym_norm_exact(a, k, m);

  std::ostringstream name;
  name << "norm D^" << m << " sym^" << k;
  NormReport r = equality_report(name.str(), computed, reference, rel_tol);
  const double sampled = sample_multilinear_norm(a, k, m, trials, seed);
  const bool dominated = sampled <= computed + 1e-9;
  r.pass = r.pass && dominated;
  r.detail = "sampled_max=" + fmt(sampled) + (dominated ? "" : " exceeds computed norm");
  return r;
}

bool DperBoundReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const NormReport& c) { return c.pass; });
}

DperBoundReport dper_norm_bound(const Matrix& a, int m, int trials, std::uint64_t seed, double tol) {
  require_square(a, "dper_norm_bound");
  const int n = static_cast<int>(a.rows());
  if (m < 1 || m > n) throw DomainError("dper_norm_bound: need 1 <= m <= n");

  DperBoundReport r;
  const double s = spectral_norm(a);
  const double mf = factorial(m);
  const double choose = binomial(n, m);
  r.closed_form = falling_factorial(n, m) * std::pow(s, n - m);

  const DeletionPermanents cache(a);
  const auto tilde = tilde_compound(a, m, &cache);
  r.trace_route = mf * trace_norm(tilde.data);
  r.compression_route = mf * choose * spectral_norm(tilde.data);
  r.sym_power_route = mf * choose * spectral_norm(sym_power(a, n - m).data());

  std::vector<Matrix> xs(static_cast<std::size_t>(m));
  for (int t = 0; t < trials; ++t) {
    Rng rng(seed + static_cast<std::uint64_t>(t));
    for (auto& x : xs) x = random_unit_norm_matrix(n, rng);
    r.sampled_max = std::max(r.sampled_max, std::abs(dper_trace(a, xs, &cache)));
  }

  r.checks.push_back(bound_report("sampled |D^m per| <= m! ||tilde||_1", r.sampled_max, r.trace_route, tol));
  r.checks.push_back(bound_report("m! ||tilde||_1 <= m! C(n,m) ||tilde||", r.trace_route, r.compression_route, tol));
  r.checks.push_back(bound_report("m! C(n,m) ||tilde|| <= m! C(n,m) ||sym^(n-m) A||", r.compression_route,
                                  r.sym_power_route, tol));
  r.checks.push_back(equality_report("m! C(n,m) ||sym^(n-m) A|| = n!/(n-m)! ||A||^(n-m)", r.sym_power_route,
                                     r.closed_form, 1e-9));
  r.checks.push_back(bound_report("sampled |D^m per| <= n!/(n-m)! ||A||^(n-m)", r.sampled_max, r.closed_form, tol));
  return r;
}

NormReport perturb_bound_sym(const Matrix& a, const Matrix& x, int k, double tol) {
  require_same_shape(a, x, "perturb_bound_sym");
  const double observed =
      spectral_norm(sym_power(a + x, k).data() - sym_power(a, k).data());
  const double na = spectral_norm(a);
  const double bound = std::pow(na + spectral_norm(x), k) - std::pow(na, k);
  return bound_report("||sym^" + std::to_string(k) + "(A+X) - sym^" + std::to_string(k) + " A||",
                      observed, bound, tol);
}

NormReport perturb_bound_per(const Matrix& a, const Matrix& x, double tol) {
  require_square(a, "perturb_bound_per");
  require_same_shape(a, x, "perturb_bound_per");
  const int n = static_cast<int>(a.rows());
  const double observed = std::abs(permanent(a + x) - permanent(a));
  const double na = spectral_norm(a);
  const double bound = std::pow(na + spectral_norm(x), n) - std::pow(na, n);
  return bound_report("|per(A+X) - per A|", observed, bound, tol);
}

NormReport tightness_commutative(int n, double x, double rel_tol) {
  if (n < 1) throw DomainError("tightness_commutative: need n >= 1");
  if (!(x > 0.0)) throw DomainError("tightness_commutative: need x > 0");
  const Matrix id = Matrix::Identity(n, n);
  const Matrix xi = x * id;
  const double lhs = std::abs(permanent(id + xi) - permanent(id));
  const double rhs = std::pow(spectral_norm(id) + spectral_norm(xi), n) - std::pow(spectral_norm(id), n);
  double reference = 0.0;
  for (int j = 1; j <= n; ++j) reference += binomial(n, j) * std::pow(x, j);

  NormReport r;
  r.quantity = "tightness n=" + std::to_string(n) + " x=" + fmt(x);
  r.computed = lhs;
  r.reference = reference;
  r.slack = -std::max(std::abs(lhs - reference), std::abs(rhs - reference));
  r.tolerance = rel_tol * reference;
  r.pass = r.slack >= -r.tolerance;
  r.detail = "lhs=" + fmt(lhs) + " rhs=" + fmt(rhs);
  return r;
}

}  // namespace permderiv
