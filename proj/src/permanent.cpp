#include "permderiv/permanent.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <numeric>
#include <sstream>
#include <vector>

namespace permderiv {

namespace {

void check_bounds(const MultiIndex& idx, Eigen::Index limit, const char* what) {
  for (int e : idx.entries())
    if (e > limit) {
      std::ostringstream os;
      os << what << ": index " << e << " exceeds dimension " << limit;
      throw DomainError(os.str());
    }
}

void check_strict(const MultiIndex& idx, const char* what) {
  if (!idx.strict())
    throw DomainError(std::string(what) + ": " + idx.to_string() + " must be strictly increasing");
}

// Signed Ryser partial sum over Gray-code positions [begin, end).
Complex ryser_range(const Matrix& a, std::uint64_t begin, std::uint64_t end) {
  const Eigen::Index n = a.rows();
  Eigen::VectorXcd rows = Eigen::VectorXcd::Zero(n);
  std::uint64_t subset = begin ^ (begin >> 1);
  for (Eigen::Index j = 0; j < n; ++j)
    if ((subset >> j) & 1u) rows += a.col(j);

  Complex total{0.0, 0.0};
  auto accumulate = [&](std::uint64_t s) {
    Complex prod = rows(0);
    for (Eigen::Index i = 1; i < n; ++i) prod *= rows(i);
    total += (std::popcount(s) & 1) ? -prod : prod;
  };
  accumulate(subset);
  for (std::uint64_t g = begin + 1; g < end; ++g) {
    const int j = std::countr_zero(g);
    subset ^= std::uint64_t{1} << j;
    if ((subset >> j) & 1u)
      rows += a.col(j);
    else
      rows -= a.col(j);
    accumulate(subset);
  }
  return total;
}

}  // namespace

Complex per_naive(const Matrix& a, const Guards& guards) {
  require_square(a, "per_naive");
  const int n = static_cast<int>(a.rows());
  if (n > guards.naive_permanent) throw GuardError("naive_permanent", n, guards.naive_permanent);
  if (n == 0) return {1.0, 0.0};
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  Complex total{0.0, 0.0};
  do {
    Complex prod{1.0, 0.0};
    for (int i = 0; i < n; ++i) prod *= a(i, sigma[static_cast<std::size_t>(i)]);
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

Complex per_ryser(const Matrix& a, unsigned chunks, const Guards& guards) {
  require_square(a, "per_ryser");
  const int n = static_cast<int>(a.rows());
  if (n > guards.ryser_permanent) throw GuardError("ryser_permanent", n, guards.ryser_permanent);
  if (n == 0) return {1.0, 0.0};

  const std::uint64_t total_count = std::uint64_t{1} << n;
  chunks = std::clamp<unsigned>(chunks, 1u, static_cast<unsigned>(std::min<std::uint64_t>(total_count, 256)));
  Complex sum{0.0, 0.0};
  if (chunks == 1) {
    sum = ryser_range(a, 0, total_count);
  } else {
    std::vector<std::future<Complex>> parts;
    parts.reserve(chunks);
    for (unsigned c = 0; c < chunks; ++c) {
      const std::uint64_t lo = total_count * c / chunks;
      const std::uint64_t hi = total_count * (c + 1) / chunks;
      parts.push_back(std::async(std::launch::async, ryser_range, std::cref(a), lo, hi));
    }
    for (auto& p : parts) sum += p.get();
  }
  return (n & 1) ? -sum : sum;
}

Complex permanent(const Matrix& a, const Guards& guards) {
  require_square(a, "permanent");
  switch (a.rows()) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return a(0, 0);
    case 2:
      return a(0, 0) * a(1, 1) + a(0, 1) * a(1, 0);
    case 3:
      return a(0, 0) * (a(1, 1) * a(2, 2) + a(1, 2) * a(2, 1)) +
             a(0, 1) * (a(1, 0) * a(2, 2) + a(1, 2) * a(2, 0)) +
             a(0, 2) * (a(1, 0) * a(2, 1) + a(1, 1) * a(2, 0));
    default:
      return per_ryser(a, 1, guards);
  }
}

Matrix submatrix_select(const Matrix& a, const MultiIndex& rows, const MultiIndex& cols) {
  if (rows.size() != cols.size()) throw DomainError("submatrix_select: |I| != |J|");
  check_bounds(rows, a.rows(), "submatrix_select");
  check_bounds(cols, a.cols(), "submatrix_select");
  const int m = rows.size();
  Matrix out(m, m);
  for (int s = 0; s < m; ++s)
    for (int r = 0; r < m; ++r) out(r, s) = a(rows[r] - 1, cols[s] - 1);
  return out;
}

Matrix submatrix_delete(const Matrix& a, const MultiIndex& rows, const MultiIndex& cols) {
  require_square(a, "submatrix_delete");
  if (rows.size() != cols.size()) throw DomainError("submatrix_delete: |I| != |J|");
  check_strict(rows, "submatrix_delete");
  check_strict(cols, "submatrix_delete");
  check_bounds(rows, a.rows(), "submatrix_delete");
  check_bounds(cols, a.cols(), "submatrix_delete");

  auto keep = [](const MultiIndex& drop, Eigen::Index n) {
    std::vector<Eigen::Index> out;
    std::size_t p = 0;
    const auto d = drop.entries();
    for (Eigen::Index i = 1; i <= n; ++i) {
      if (p < d.size() && d[p] == i)
        ++p;
      else
        out.push_back(i - 1);
    }
    return out;
  };
  const auto kr = keep(rows, a.rows());
  const auto kc = keep(cols, a.cols());
  return a(kr, kc);
}

Matrix columns_replace(const Matrix& a, const MultiIndex& cols, std::span<const Matrix> xs) {
  if (static_cast<int>(xs.size()) != cols.size())
    throw DomainError("columns_replace: number of replacement matrices must equal |J|");
  check_strict(cols, "columns_replace");
  check_bounds(cols, a.cols(), "columns_replace");
  Matrix z = a;
  for (int p = 0; p < cols.size(); ++p) {
    const auto& x = xs[static_cast<std::size_t>(p)];
    require_same_shape(a, x, "columns_replace");
    z.col(cols[p] - 1) = x.col(cols[p] - 1);
  }
  return z;
}

Matrix sigma_columns(const MultiIndex& cols, const Permutation& sigma, std::span<const Matrix> xs,
                     int n) {
  if (static_cast<int>(xs.size()) != cols.size() || static_cast<int>(sigma.size()) != cols.size())
    throw DomainError("sigma_columns: |J|, |sigma| and number of matrices must agree");
  check_strict(cols, "sigma_columns");
  check_bounds(cols, n, "sigma_columns");
  Matrix y = Matrix::Zero(n, n);
  for (int p = 0; p < cols.size(); ++p) {
    const auto& x = xs[static_cast<std::size_t>(sigma[static_cast<std::size_t>(p)])];
    if (x.rows() != n || x.cols() != n) throw DomainError("sigma_columns: matrices must be n x n");
    y.col(cols[p] - 1) = x.col(cols[p] - 1);
  }
  return y;
}

Complex laplace_per(const Matrix& a, const MultiIndex& rows) {
  require_square(a, "laplace_per");
  const int n = static_cast<int>(a.rows());
  if (rows.size() < 1 || rows.size() > n) throw DomainError("laplace_per: need 1 <= |I| <= n");
  check_strict(rows, "laplace_per");
  check_bounds(rows, n, "laplace_per");
  Complex total{0.0, 0.0};
  for (const auto& cols : enumerate_Q(rows.size(), n))
    total += permanent(submatrix_select(a, rows, cols)) *
             permanent(submatrix_delete(a, rows, cols));
  return total;
}

Matrix padj(const Matrix& a) {
  require_square(a, "padj");
  const int n = static_cast<int>(a.rows());
  if (n < 1) throw DomainError("padj: empty matrix");
  Matrix out(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      out(i - 1, j - 1) = permanent(submatrix_delete(a, MultiIndex({i}, n), MultiIndex({j}, n)));
  return out;
}

Complex mixed_permanent(std::span<const Matrix> ts, const Guards& guards) {
  const int m = static_cast<int>(ts.size());
  if (m < 1) throw DomainError("mixed_permanent: need at least one matrix");
  for (const auto& t : ts)
    if (t.rows() != m || t.cols() != m)
      throw DomainError("mixed_permanent: each argument must be " + std::to_string(m) + "x" +
                        std::to_string(m));
  if (m > guards.permutation_order) throw GuardError("permutation_order", m, guards.permutation_order);
  // dp[rows][args]: column j = popcount(rows) is next; sum over partial assignments.
  const std::size_t full = (std::size_t{1} << m) - 1;
  std::vector<Complex> dp((full + 1) * (full + 1), Complex{0.0, 0.0});
  dp[0] = 1.0;
  for (std::size_t rows = 0; rows < full; ++rows) {
    const int j = std::popcount(rows);
    for (std::size_t args = 0; args <= full; ++args) {
      if (std::popcount(args) != j) continue;
      const Complex v = dp[rows * (full + 1) + args];
      if (v == Complex{0.0, 0.0}) continue;
      for (int i = 0; i < m; ++i) {
        if (rows & (std::size_t{1} << i)) continue;
        for (int p = 0; p < m; ++p) {
          if (args & (std::size_t{1} << p)) continue;
          dp[(rows | (std::size_t{1} << i)) * (full + 1) + (args | (std::size_t{1} << p))] +=
              v * ts[static_cast<std::size_t>(p)](i, j);
        }
      }
    }
  }
  const Complex total = dp[full * (full + 1) + full];
  return total / factorial(m);
}

DeletionPermanents::DeletionPermanents(Matrix a) : a_(std::move(a)) {
  require_square(a_, "DeletionPermanents");
}

Complex DeletionPermanents::get(const MultiIndex& rows, const MultiIndex& cols) const {
  const Key key{rows.size(), rank_Q(rows), rank_Q(cols)};
  {
    std::lock_guard lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) {
      ++hits_;
      return it->second;
    }
  }
  const Complex v = permanent(submatrix_delete(a_, rows, cols));
  std::lock_guard lock(mutex_);
  ++misses_;
  table_.emplace(key, v);
  return v;
}

std::size_t DeletionPermanents::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

std::size_t DeletionPermanents::misses() const {
  std::lock_guard lock(mutex_);
  return misses_;
}

}  // namespace permderiv
