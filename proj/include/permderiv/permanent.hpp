#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <tuple>

#include "permderiv/common.hpp"
#include "permderiv/indexsets.hpp"

namespace permderiv {

/// Sum over all permutations of the diagonal products. Reference oracle, n <= guards.naive_permanent.
Complex per_naive(const Matrix& a, const Guards& guards = Guards::defaults());

/// Ryser's inclusion-exclusion formula over subsets visited in Gray-code order.
///
/// O(2^n n). `chunks` splits the Gray sequence into that many contiguous ranges
/// evaluated on separate threads; the partial sums are always combined in range
/// order, so for a fixed `chunks` value the result is bit-reproducible. Different
/// chunk counts agree only to rounding.
Complex per_ryser(const Matrix& a, unsigned chunks = 1, const Guards& guards = Guards::defaults());

/// Permanent with the empty-matrix convention per([]) = 1; picks the cheapest kernel.
Complex permanent(const Matrix& a, const Guards& guards = Guards::defaults());

/// A[I|J]: rows I, columns J, repeats allowed.
Matrix submatrix_select(const Matrix& a, const MultiIndex& rows, const MultiIndex& cols);

/// A(I|J): delete rows I and columns J. I and J must be strict and of equal length.
Matrix submatrix_delete(const Matrix& a, const MultiIndex& rows, const MultiIndex& cols);

/// A(J; X^1..X^m): column j_p taken from X^p, remaining columns from A.
Matrix columns_replace(const Matrix& a, const MultiIndex& cols, std::span<const Matrix> xs);

/// Y^sigma_[J]: column j_p taken from X^{sigma(p)}, all other columns zero.
Matrix sigma_columns(const MultiIndex& cols, const Permutation& sigma, std::span<const Matrix> xs,
                     int n);

/// Laplace expansion of per A along the row set I: sum_J per A[I|J] per A(I|J).
Complex laplace_per(const Matrix& a, const MultiIndex& rows);

/// Permanental adjoint, (i,j)-entry per A(i|j). Not transposed.
Matrix padj(const Matrix& a);

/// Delta_p(T^1..T^m) = (1/m!) sum_sigma per[T^{sigma(1)}_[1], ..., T^{sigma(m)}_[m]],
/// evaluated column by column over (used rows, used arguments) subsets.
Complex mixed_permanent(std::span<const Matrix> ts, const Guards& guards = Guards::defaults());

/// Memo table of per A(I|J) for strict I, J of any common length.
///
/// Safe for concurrent use: entries are deterministic, so a racing fill of the
/// same key stores the same value.
class DeletionPermanents {
 public:
  explicit DeletionPermanents(Matrix a);

  const Matrix& matrix() const noexcept { return a_; }
  Complex get(const MultiIndex& rows, const MultiIndex& cols) const;

  std::size_t hits() const;
  std::size_t misses() const;

 private:
  using Key = std::tuple<int, std::size_t, std::size_t>;
  Matrix a_;
  mutable std::mutex mutex_;
  mutable std::map<Key, Complex> table_;
  mutable std::size_t hits_ = 0;
  mutable std::size_t misses_ = 0;
};

}  // namespace permderiv
