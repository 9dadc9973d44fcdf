#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <vector>

#include "permderiv/common.hpp"
#include "permderiv/random.hpp"

namespace permderiv::testing {

inline bool close(Complex a, Complex b, double rel = 1e-12, double abs_floor = 1e-12) {
  return std::abs(a - b) <= std::max(rel * std::max(std::abs(a), std::abs(b)), abs_floor);
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

inline Matrix real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

inline Matrix ones(Eigen::Index n) { return Matrix::Constant(n, n, Complex(1.0, 0.0)); }

inline std::vector<Matrix> random_list(int count, Eigen::Index n, Rng& rng) {
  std::vector<Matrix> out;
  for (int i = 0; i < count; ++i) out.push_back(random_disc_matrix(n, rng));
  return out;
}

/// Coefficient of t_1...t_m in per(A + sum t_p X^p) by direct expansion:
/// sum over permutations pi of [n] and injective row assignments f of the
/// directions, prod_p x^p_{f(p),pi(f(p))} * prod_{i not in f} a_{i,pi(i)}.
/// Independent of every formula in the library; n <= 6.
inline Complex brute_dper(const Matrix& a, std::span<const Matrix> xs) {
  const int n = static_cast<int>(a.rows());
  const int m = static_cast<int>(xs.size());
  if (m > n) return {0.0, 0.0};
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 0);
  Complex total{0.0, 0.0};
  std::vector<int> rows(static_cast<std::size_t>(m));
  do {
    // enumerate injective maps [m] -> [n] via odometer with distinctness filter
    std::vector<int> f(static_cast<std::size_t>(m), 0);
    while (true) {
      bool distinct = true;
      for (int p = 0; p < m && distinct; ++p)
        for (int q = p + 1; q < m; ++q)
          if (f[static_cast<std::size_t>(p)] == f[static_cast<std::size_t>(q)]) distinct = false;
      if (distinct) {
        Complex prod{1.0, 0.0};
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        for (int p = 0; p < m; ++p) {
          const int i = f[static_cast<std::size_t>(p)];
          used[static_cast<std::size_t>(i)] = true;
          prod *= xs[static_cast<std::size_t>(p)](i, pi[static_cast<std::size_t>(i)]);
        }
        for (int i = 0; i < n; ++i)
          if (!used[static_cast<std::size_t>(i)]) prod *= a(i, pi[static_cast<std::size_t>(i)]);
        total += prod;
      }
      int p = 0;
      while (p < m && ++f[static_cast<std::size_t>(p)] == n) f[static_cast<std::size_t>(p++)] = 0;
      if (p == m) break;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return total;
}

}  // namespace permderiv::testing
