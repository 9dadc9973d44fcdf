#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "permderiv/common.hpp"

namespace permderiv {

/// Nondecreasing tuple of 1-based indices drawn from {1..n}.
///
/// Elements of G_{k,n} (repeats allowed) and, when strictly increasing, of
/// Q_{m,n}. The empty tuple is a valid value of every dimension.
class MultiIndex {
 public:
  MultiIndex() = default;
  /// Throws DomainError unless `entries` is nondecreasing and within [1, n].
  MultiIndex(std::vector<int> entries, int n);
  MultiIndex(std::initializer_list<int> entries, int n)
      : MultiIndex(std::vector<int>(entries), n) {}

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  bool empty() const noexcept { return entries_.empty(); }
  int dimension() const noexcept { return n_; }
  std::span<const int> entries() const noexcept { return entries_; }
  int operator[](int p) const { return entries_[static_cast<std::size_t>(p)]; }
  bool strict() const noexcept;

  /// Occurrence count of each value 1..n (index 0 unused).
  std::vector<int> counts() const;

  std::string to_string() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  /// Lexicographic on entries.
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
  int n_ = 0;
};

/// Strictly increasing m-tuples from {1..n}, lexicographic. Empty when m > n.
std::vector<MultiIndex> enumerate_Q(int m, int n, const Guards& guards = Guards::defaults());

/// Nondecreasing k-tuples from {1..n}, lexicographic. k = 0 yields {()}.
std::vector<MultiIndex> enumerate_G(int k, int n, const Guards& guards = Guards::defaults());

/// Product of factorials of the repetition counts.
std::int64_t multiplicity(const MultiIndex& alpha);

/// True iff `sub` is a sub-multiset of `alpha`.
bool msub_contains(const MultiIndex& alpha, const MultiIndex& sub);

/// Multiset difference alpha - sub. Throws DomainError when `sub` is not contained.
MultiIndex msub_difference(const MultiIndex& alpha, const MultiIndex& sub);

/// Sorted concatenation of two multisets over the same n.
MultiIndex msub_union(const MultiIndex& a, const MultiIndex& b);

/// Number of position subsets of `alpha` whose entries form the multiset `sub`:
/// prod over values v of C(count_alpha(v), count_sub(v)). Zero when not contained.
std::int64_t embedding_count(const MultiIndex& alpha, const MultiIndex& sub);

/// Permutation of {0..m-1} stored as its image list.
using Permutation = std::vector<int>;

/// All m! permutations in lexicographic order, identity first.
/// Throws GuardError when m exceeds `guards.permutation_order`.
std::vector<Permutation> enumerate_permutations(int m, const Guards& guards = Guards::defaults());

/// Position of `alpha` in the lexicographic enumeration of G_{k,n}.
std::size_t rank_G(const MultiIndex& alpha);
/// Position of a strict `alpha` in the lexicographic enumeration of Q_{m,n}.
std::size_t rank_Q(const MultiIndex& alpha);

/// Ordered orthonormal basis {m(alpha)^{-1/2} e_alpha : alpha in G_{k,n}} of the
/// k-th symmetric power of C^n.
class SymBasis {
 public:
  SymBasis(int k, int n, const Guards& guards = Guards::defaults());

  int order() const noexcept { return k_; }
  int dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<MultiIndex>& elements() const noexcept { return elements_; }
  const MultiIndex& element(std::size_t i) const { return elements_[i]; }
  /// 1 / sqrt(m(alpha))
  double weight(std::size_t i) const { return weights_[i]; }
  std::size_t index_of(const MultiIndex& alpha) const;

  friend bool operator==(const SymBasis& a, const SymBasis& b) {
    return a.k_ == b.k_ && a.n_ == b.n_;
  }

 private:
  int k_;
  int n_;
  std::vector<MultiIndex> elements_;
  std::vector<double> weights_;
};

}  // namespace permderiv
