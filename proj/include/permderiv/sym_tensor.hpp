#pragma once

#include <span>
#include <vector>

#include "permderiv/common.hpp"
#include "permderiv/indexsets.hpp"
#include "permderiv/permanent.hpp"

namespace permderiv {

/// Operator on the k-th symmetric power of C^n, written in the orthonormal basis
/// {m(alpha)^{-1/2} e_alpha}, rows and columns ordered as `basis().elements()`.
class SymMatrix {
 public:
  /// Throws DomainError unless `data` is square with side `basis.size()`.
  SymMatrix(SymBasis basis, Matrix data);

  int order() const noexcept { return basis_.order(); }
  int dimension() const noexcept { return basis_.dimension(); }
  const SymBasis& basis() const noexcept { return basis_; }
  const Matrix& data() const noexcept { return data_; }
  Matrix& data() noexcept { return data_; }

  Complex entry(const MultiIndex& alpha, const MultiIndex& beta) const {
    return data_(static_cast<Eigen::Index>(basis_.index_of(alpha)),
                 static_cast<Eigen::Index>(basis_.index_of(beta)));
  }

 private:
  SymBasis basis_;
  Matrix data_;
};

/// Square matrix indexed on both sides by Q_{m,n} in lexicographic order.
struct CompressedMatrix {
  int order = 0;
  int dimension = 0;
  std::vector<MultiIndex> index;
  Matrix data;
};

/// k-th symmetric tensor power; (alpha,beta)-entry (m(alpha)m(beta))^{-1/2} per A[alpha|beta].
/// k = 0 gives the 1x1 identity.
SymMatrix sym_power(const Matrix& a, int k, const Guards& guards = Guards::defaults());

/// X^1 v ... v X^m: the symmetrized tensor product restricted to the symmetric
/// subspace. (I,J)-entry (m(I)m(J))^{-1/2} Delta_p(X^1[I|J], ..., X^m[I|J]).
SymMatrix mixed_sym_product(std::span<const Matrix> xs, const Guards& guards = Guards::defaults());

/// Lift of an order-m operator to order k along the fixed multisets gamma, delta
/// (|gamma| = |delta| = k - m). The (alpha,beta)-entry is
///   sqrt(m(alpha-gamma) m(beta-delta) / (m(alpha) m(beta))) * Y(alpha-gamma, beta-delta)
/// when gamma is contained in alpha and delta in beta, and zero otherwise.
SymMatrix lift_embed(const SymMatrix& y, const MultiIndex& gamma, const MultiIndex& delta, int k,
                     const Guards& guards = Guards::defaults());

/// Restriction of `m` to the rows and columns indexed by strict multiindices.
CompressedMatrix q_compress(const SymMatrix& m);

/// q_compress(mixed_sym_product(xs)) without forming the repeated-index entries.
CompressedMatrix mixed_sym_product_q(std::span<const Matrix> xs, const Guards& guards = Guards::defaults());

/// Q_{m,n}-indexed matrix whose (J,I)-entry is per A(I|J). When `cache` is
/// given the deletion permanents are read through it.
CompressedMatrix tilde_compound(const Matrix& a, int m, const DeletionPermanents* cache = nullptr);

/// Kronecker product of a list of matrices, first factor most significant.
Matrix kron_all(std::span<const Matrix> factors);

/// k-fold Kronecker power, n^k x n^k. k = 0 gives [1].
Matrix tensor_power(const Matrix& a, int k, const Guards& guards = Guards::defaults());

/// Matrix of the symmetrizing projection from the product basis of the k-fold
/// tensor power (lexicographic words) onto the orthonormal symmetric basis.
/// Entry (alpha, w) is sqrt(m(alpha)/k!) when the word w sorts to alpha.
/// Its adjoint is the inclusion of the symmetric subspace.
Matrix symmetrizer(int k, int n, const Guards& guards = Guards::defaults());

}  // namespace permderiv
