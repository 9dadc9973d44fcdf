#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace permderiv {

using Complex = std::complex<double>;

/// Dense complex matrix, column-major storage, row/column semantics as usual.
using Matrix = Eigen::MatrixXcd;

/// Raised when an argument violates a documented precondition
/// (shape mismatch, index out of range, order mismatch).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exponential-size computation would exceed a configured cap.
/// The message names the exceeded limit.
class GuardError : public std::runtime_error {
 public:
  GuardError(const std::string& limit, double requested, double cap);

  const std::string& limit() const noexcept { return limit_; }

 private:
  std::string limit_;
};

/// Size caps for every exponential enumeration in the library.
struct Guards {
  int permutation_order = 8;          // m! enumeration, m <= this
  std::size_t sym_dim = 20000;        // C(n+k-1, k) <= this
  std::size_t tensor_dim = 4096;      // n^k <= this
  std::size_t oracle_evaluations = 100000;  // L^m <= this
  int naive_permanent = 9;            // n! expansion, n <= this
  int ryser_permanent = 30;           // 2^n expansion, n <= this

  /// Library defaults, with `sym_dim` overridden by PERMDERIV_GUARD_DIM when
  /// that variable is set. Throws DomainError unless it holds a positive
  /// integer. Read once per process.
  static const Guards& defaults();
};

void require_square(const Matrix& a, const char* what);
void require_same_shape(const Matrix& a, const Matrix& b, const char* what);
/// Throws DomainError when any entry is NaN or infinite.
void require_finite(const Matrix& a, const char* what);

/// Exact binomial coefficient in double precision; 0 when k < 0 or k > n.
double binomial(long n, long k);
double factorial(int n);
/// n! / (n-m)!
double falling_factorial(int n, int m);

}  // namespace permderiv
