#include "permderiv/sym_tensor.hpp"

#include <algorithm>
#include <cmath>

namespace permderiv {

namespace {

void check_tensor_guard(int n, int k, const Guards& guards) {
  const double side = std::pow(static_cast<double>(n), k);
  if (side > static_cast<double>(guards.tensor_dim))
    throw GuardError("tensor_dim", side, static_cast<double>(guards.tensor_dim));
}

}  // namespace

SymMatrix::SymMatrix(SymBasis basis, Matrix data) : basis_(std::move(basis)), data_(std::move(data)) {
  const auto side = static_cast<Eigen::Index>(basis_.size());
  if (data_.rows() != side || data_.cols() != side)
    throw DomainError("SymMatrix: data side does not match basis size " + std::to_string(side));
}

SymMatrix sym_power(const Matrix& a, int k, const Guards& guards) {
  require_square(a, "sym_power");
  if (k < 0) throw DomainError("sym_power: negative order");
  const int n = static_cast<int>(a.rows());
  SymBasis basis(k, n, guards);
  const auto side = static_cast<Eigen::Index>(basis.size());
  Matrix data(side, side);
  for (Eigen::Index c = 0; c < side; ++c)
    for (Eigen::Index r = 0; r < side; ++r)
      data(r, c) = basis.weight(static_cast<std::size_t>(r)) *
                   basis.weight(static_cast<std::size_t>(c)) *
                   permanent(submatrix_select(a, basis.element(static_cast<std::size_t>(r)),
                                              basis.element(static_cast<std::size_t>(c))),
                             guards);
  return SymMatrix(std::move(basis), std::move(data));
}

SymMatrix mixed_sym_product(std::span<const Matrix> xs, const Guards& guards) {
  const int m = static_cast<int>(xs.size());
  if (m < 1) throw DomainError("mixed_sym_product: need at least one matrix");
  require_square(xs[0], "mixed_sym_product");
  for (const auto& x : xs) require_same_shape(xs[0], x, "mixed_sym_product");
  if (m > guards.permutation_order) throw GuardError("permutation_order", m, guards.permutation_order);
  const int n = static_cast<int>(xs[0].rows());

  SymBasis basis(m, n, guards);
  const auto side = static_cast<Eigen::Index>(basis.size());
  Matrix data(side, side);
  std::vector<Matrix> blocks(static_cast<std::size_t>(m));
  for (Eigen::Index c = 0; c < side; ++c)
    for (Eigen::Index r = 0; r < side; ++r) {
      const auto& rows = basis.element(static_cast<std::size_t>(r));
      const auto& cols = basis.element(static_cast<std::size_t>(c));
      for (int p = 0; p < m; ++p)
        blocks[static_cast<std::size_t>(p)] = submatrix_select(xs[static_cast<std::size_t>(p)], rows, cols);
      data(r, c) = basis.weight(static_cast<std::size_t>(r)) *
                   basis.weight(static_cast<std::size_t>(c)) * mixed_permanent(blocks, guards);
    }
  return SymMatrix(std::move(basis), std::move(data));
}

SymMatrix lift_embed(const SymMatrix& y, const MultiIndex& gamma, const MultiIndex& delta, int k,
                     const Guards& guards) {
  const int n = y.dimension();
  if (gamma.size() != delta.size()) throw DomainError("lift_embed: |gamma| != |delta|");
  if (y.order() + gamma.size() != k)
    throw DomainError("lift_embed: order of Y plus |gamma| must equal k");
  if (gamma.dimension() != n || delta.dimension() != n)
    throw DomainError("lift_embed: gamma/delta dimension differs from Y");

  SymBasis basis(k, n, guards);
  const auto side = static_cast<Eigen::Index>(basis.size());
  Matrix data = Matrix::Zero(side, side);
  // alpha ranges over {alpha' + gamma : alpha' in G_{m,n}}, exactly the alpha containing gamma.
  const auto& small = y.basis().elements();
  std::vector<std::size_t> row_pos(small.size()), col_pos(small.size());
  std::vector<double> row_scale(small.size()), col_scale(small.size());
  for (std::size_t i = 0; i < small.size(); ++i) {
    const auto alpha = msub_union(small[i], gamma);
    const auto beta = msub_union(small[i], delta);
    row_pos[i] = basis.index_of(alpha);
    col_pos[i] = basis.index_of(beta);
    row_scale[i] = std::sqrt(static_cast<double>(multiplicity(small[i])) /
                             static_cast<double>(multiplicity(alpha)));
    col_scale[i] = std::sqrt(static_cast<double>(multiplicity(small[i])) /
                             static_cast<double>(multiplicity(beta)));
  }
  for (std::size_t c = 0; c < small.size(); ++c)
    for (std::size_t r = 0; r < small.size(); ++r)
      data(static_cast<Eigen::Index>(row_pos[r]), static_cast<Eigen::Index>(col_pos[c])) =
          row_scale[r] * col_scale[c] *
          y.data()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  return SymMatrix(std::move(basis), std::move(data));
}

CompressedMatrix q_compress(const SymMatrix& m) {
  if (m.order() > m.dimension())
    throw DomainError("q_compress: order " + std::to_string(m.order()) + " exceeds dimension " +
                      std::to_string(m.dimension()));
  CompressedMatrix out;
  out.order = m.order();
  out.dimension = m.dimension();
  out.index = enumerate_Q(m.order(), m.dimension());
  std::vector<Eigen::Index> pos;
  pos.reserve(out.index.size());
  for (const auto& q : out.index) pos.push_back(static_cast<Eigen::Index>(m.basis().index_of(q)));
  out.data = m.data()(pos, pos);
  return out;
}

CompressedMatrix mixed_sym_product_q(std::span<const Matrix> xs, const Guards& guards) {
  const int m = static_cast<int>(xs.size());
  if (m < 1) throw DomainError("mixed_sym_product_q: need at least one matrix");
  require_square(xs[0], "mixed_sym_product_q");
  for (const auto& x : xs) require_same_shape(xs[0], x, "mixed_sym_product_q");
  const int n = static_cast<int>(xs[0].rows());
  if (m > n)
    throw DomainError("mixed_sym_product_q: order " + std::to_string(m) + " exceeds dimension " +
                      std::to_string(n));
  CompressedMatrix out;
  out.order = m;
  out.dimension = n;
  out.index = enumerate_Q(m, n, guards);
  const auto side = static_cast<Eigen::Index>(out.index.size());
  out.data.resize(side, side);
  std::vector<Matrix> blocks(static_cast<std::size_t>(m));
  for (Eigen::Index c = 0; c < side; ++c)
    for (Eigen::Index r = 0; r < side; ++r) {
      for (int p = 0; p < m; ++p)
        blocks[static_cast<std::size_t>(p)] = submatrix_select(
            xs[static_cast<std::size_t>(p)], out.index[static_cast<std::size_t>(r)], out.index[static_cast<std::size_t>(c)]);
      out.data(r, c) = mixed_permanent(blocks, guards);
    }
  return out;
}

CompressedMatrix tilde_compound(const Matrix& a, int m, const DeletionPermanents* cache) {
  require_square(a, "tilde_compound");
  const int n = static_cast<int>(a.rows());
  if (m < 1 || m > n) throw DomainError("tilde_compound: need 1 <= m <= n");
  CompressedMatrix out;
  out.order = m;
  out.dimension = n;
  out.index = enumerate_Q(m, n);
  const auto side = static_cast<Eigen::Index>(out.index.size());
  out.data.resize(side, side);
  for (Eigen::Index i = 0; i < side; ++i)
    for (Eigen::Index j = 0; j < side; ++j) {
      const auto& rows = out.index[static_cast<std::size_t>(i)];
      const auto& cols = out.index[static_cast<std::size_t>(j)];
      out.data(j, i) = cache ? cache->get(rows, cols) : permanent(submatrix_delete(a, rows, cols));
    }
  return out;
}

Matrix kron_all(std::span<const Matrix> factors) {
  Matrix out = Matrix::Ones(1, 1);
  for (const auto& f : factors) {
    Matrix next(out.rows() * f.rows(), out.cols() * f.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j)
        next.block(i * f.rows(), j * f.cols(), f.rows(), f.cols()) = out(i, j) * f;
    out = std::move(next);
  }
  return out;
}

Matrix tensor_power(const Matrix& a, int k, const Guards& guards) {
  require_square(a, "tensor_power");
  if (k < 0) throw DomainError("tensor_power: negative order");
  check_tensor_guard(static_cast<int>(a.rows()), k, guards);
  std::vector<Matrix> factors(static_cast<std::size_t>(k), a);
  return kron_all(factors);
}

Matrix symmetrizer(int k, int n, const Guards& guards) {
  if (k < 0 || n < 1) throw DomainError("symmetrizer: need k >= 0 and n >= 1");
  check_tensor_guard(n, k, guards);
  SymBasis basis(k, n, guards);
  const auto words = static_cast<Eigen::Index>(std::llround(std::pow(static_cast<double>(n), k)));
  Matrix s = Matrix::Zero(static_cast<Eigen::Index>(basis.size()), words);
  const double kf = factorial(k);
  std::vector<int> word(static_cast<std::size_t>(k));
  for (Eigen::Index w = 0; w < words; ++w) {
    Eigen::Index rest = w;
    for (int p = k - 1; p >= 0; --p) {
      word[static_cast<std::size_t>(p)] = static_cast<int>(rest % n) + 1;
      rest /= n;
    }
    auto sorted = word;
    std::sort(sorted.begin(), sorted.end());
    const MultiIndex alpha(std::move(sorted), n);
    s(static_cast<Eigen::Index>(basis.index_of(alpha)), w) =
        std::sqrt(static_cast<double>(multiplicity(alpha)) / kf);
  }
  return s;
}

}  // namespace permderiv
