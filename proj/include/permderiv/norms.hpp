#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permderiv/common.hpp"

namespace permderiv {

/// Outcome of one numerical check.
///
/// For a bound, `reference` is the bound and slack = bound - observed. For an
/// equality, slack = -|computed - reference|. Either way the check passes iff
/// slack >= -tolerance.
struct NormReport {
  std::string quantity;
  double computed = 0.0;
  double reference = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

NormReport bound_report(std::string quantity, double observed, double bound, double tolerance);
/// Equality at relative tolerance `rel_tol`, absolute below |reference| = 1.
NormReport equality_report(std::string quantity, double computed, double reference, double rel_tol);

/// Largest singular value. 0 for an empty matrix.
double spectral_norm(const Matrix& m);
/// Sum of singular values.
double trace_norm(const Matrix& m);

/// Unitaries U, W with U A W = diag(s), s nonnegative and nonincreasing.
struct SvdReduction {
  Matrix u;
  Matrix w;
  Eigen::VectorXd singular_values;
  Matrix diagonal() const { return singular_values.cast<Complex>().asDiagonal(); }
};
SvdReduction svd_reduce(const Matrix& a);

/// k!/(k-m)! ||A||^{k-m}, the operator norm of the m-th derivative of the k-th
/// symmetric power at A. Requires 1 <= m <= k.
double dsym_norm_exact(const Matrix& a, int k, int m);

/// Evaluates ||D^m v^k(A_diag)(I, ..., I)|| for the singular-value diagonal of A
/// and compares with dsym_norm_exact. Also draws `trials` random unit tuples and
/// requires none to exceed the computed value.
NormReport verify_norm_identity(const Matrix& a, int k, int m, int trials = 20,
                                std::uint64_t seed = 0, double rel_tol = 1e-9);

/// max over trials of ||D^m v^k(A)(X^1..X^m)|| with each X^i drawn from the disc
/// ensemble and scaled to unit spectral norm; trial t uses seed + t.
double sample_multilinear_norm(const Matrix& a, int k, int m, int trials, std::uint64_t seed);

/// Bounds on the operator norm of D^m per(A), and the sampled evidence.
struct DperBoundReport {
  double closed_form = 0.0;        // n!/(n-m)! ||A||^{n-m}
  double trace_route = 0.0;        // m! ||tilde compound||_1
  double compression_route = 0.0;  // m! C(n,m) ||tilde compound||
  double sym_power_route = 0.0;    // m! C(n,m) ||v^{n-m} A||
  double sampled_max = 0.0;        // max |D^m per(A)(X^1..X^m)| over unit tuples
  std::vector<NormReport> checks;
  bool pass() const;
};
DperBoundReport dper_norm_bound(const Matrix& a, int m, int trials = 100, std::uint64_t seed = 0,
                                double tol = 1e-10);

/// ||v^k(A+X) - v^k A|| <= (||A|| + ||X||)^k - ||A||^k
NormReport perturb_bound_sym(const Matrix& a, const Matrix& x, int k, double tol = 1e-10);

/// |per(A+X) - per A| <= (||A|| + ||X||)^n - ||A||^n
NormReport perturb_bound_per(const Matrix& a, const Matrix& x, double tol = 1e-10);

/// At A = I_n, X = x I_n both sides of the permanent perturbation bound equal
/// sum_{j=1..n} C(n,j) x^j. Checks both against that sum.
NormReport tightness_commutative(int n, double x, double rel_tol = 1e-12);

}  // namespace permderiv
