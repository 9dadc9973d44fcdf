#include "permderiv/common.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace permderiv {

namespace {

std::string guard_message(const std::string& limit, double requested, double cap) {
  std::ostringstream os;
  os << "size guard '" << limit << "' exceeded: requested " << requested << ", cap " << cap;
  return os.str();
}

Guards make_defaults() {
  Guards g;
  if (const char* env = std::getenv("PERMDERIV_GUARD_DIM")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0)
      throw DomainError(std::string("PERMDERIV_GUARD_DIM must be a positive integer, got '") + env + "'");
    g.sym_dim = static_cast<std::size_t>(v);
  }
  return g;
}

}  // namespace

GuardError::GuardError(const std::string& limit, double requested, double cap)
    : std::runtime_error(guard_message(limit, requested, cap)), limit_(limit) {}

const Guards& Guards::defaults() {
  static const Guards g = make_defaults();
  return g;
}

void require_square(const Matrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    std::ostringstream os;
    os << what << ": expected a square matrix, got " << a.rows() << "x" << a.cols();
    throw DomainError(os.str());
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << what << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows()
       << "x" << b.cols();
    throw DomainError(os.str());
  }
}

void require_finite(const Matrix& a, const char* what) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag()))
        throw DomainError(std::string(what) + ": non-finite entry");
}

double binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (long i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(r);
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

double falling_factorial(int n, int m) {
  double r = 1.0;
  for (int i = 0; i < m; ++i) r *= static_cast<double>(n - i);
  return r;
}

}  // namespace permderiv
