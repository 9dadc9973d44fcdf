#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "permderiv/common.hpp"
#include "permderiv/permanent.hpp"
#include "permderiv/sym_tensor.hpp"

namespace permderiv {

/// Which closed form produced a derivative value.
enum class Formula {
  jacobi,    // tr(padj(A)^T X), first order only
  columns,   // column replacement sum over sigma and J
  laplace,   // Laplace pairs per A(I|J) per Y^sigma_[J][I|J]
  mixed,     // per A(I|J) times mixed permanents of X^p[I|J]
  trace,     // trace of tilde compound against the compressed mixed symmetric product
  oracle,    // roots-of-unity coefficient extraction
};

std::string_view to_string(Formula f);
/// Throws DomainError for unknown names.
Formula formula_from_string(std::string_view name);

struct DerivativeResult {
  int order = 0;
  std::variant<Complex, SymMatrix> value;
  std::string formula;

  bool is_scalar() const noexcept { return std::holds_alternative<Complex>(value); }
};

// First derivative of per, three equivalent forms.
Complex dper_jacobi(const Matrix& a, const Matrix& x);
/// sum_j per A(j; X)
Complex dper_jacobi_columns(const Matrix& a, const Matrix& x);
/// sum_{i,j} x_ij per A(i|j)
Complex dper_jacobi_entries(const Matrix& a, const Matrix& x);

// m-th derivative of per at A in directions X^1..X^m. Every variant returns an
// exact zero when m > n. A null `cache` means a private memo table is used.
Complex dper_columns(const Matrix& a, std::span<const Matrix> xs,
                     const Guards& guards = Guards::defaults());
Complex dper_laplace(const Matrix& a, std::span<const Matrix> xs,
                     const DeletionPermanents* cache = nullptr,
                     const Guards& guards = Guards::defaults());
Complex dper_mixed(const Matrix& a, std::span<const Matrix> xs,
                   const DeletionPermanents* cache = nullptr,
                   const Guards& guards = Guards::defaults());
Complex dper_trace(const Matrix& a, std::span<const Matrix> xs,
                   const DeletionPermanents* cache = nullptr,
                   const Guards& guards = Guards::defaults());

/// Dispatch on `formula`. Jacobi requires exactly one direction.
DerivativeResult dper(Formula formula, const Matrix& a, std::span<const Matrix> xs,
                      const Guards& guards = Guards::defaults());

/// m-th derivative of the k-th symmetric power:
///
///   m! sum_{gamma,delta in G_{k-m,n}} per A[gamma|delta] c_alpha(gamma) c_beta(delta)
///        (X^1 v ... v X^m)^{(k)}(gamma,delta)
///
/// where c_alpha(gamma) counts the position subsets of alpha whose entries form
/// alpha - gamma (see embedding_count). The count is 1 whenever alpha is strict.
/// Returns the zero operator when m > k.
SymMatrix dsym_power(const Matrix& a, int k, std::span<const Matrix> xs,
                     const Guards& guards = Guards::defaults());

/// The same sum without the c_alpha c_beta counts. Agrees with dsym_power on
/// entries whose row and column multiindices are both strict; differs elsewhere.
/// Kept for comparison only.
SymMatrix dsym_power_uncounted(const Matrix& a, int k, std::span<const Matrix> xs,
                               const Guards& guards = Guards::defaults());

/// Entrywise route through the composition rule: the (alpha,beta)-entry is
/// (m(alpha)m(beta))^{-1/2} D^m per(A[alpha|beta])(X^1[alpha|beta], ...).
SymMatrix dsym_power_entrywise(const Matrix& a, int k, std::span<const Matrix> xs,
                               const Guards& guards = Guards::defaults());

/// m-th derivative of the k-fold Kronecker power: every placement of the m
/// directions (in every order) among the k factors, A in the remaining slots.
Matrix dtensor_power(const Matrix& a, int k, std::span<const Matrix> xs,
                     const Guards& guards = Guards::defaults());

/// Mixed coefficient of t_1...t_m in f(A + sum_p t_p X^p), extracted exactly
/// (up to rounding) by averaging over the L-th roots of unity in every t_p with
/// L = degree_bound + 1. `f` must be polynomial of degree <= degree_bound in
/// each t_p and may return a Complex or a Matrix.
template <class F>
auto oracle_derivative(F&& f, const Matrix& a, std::span<const Matrix> xs, int degree_bound,
                       const Guards& guards = Guards::defaults())
    -> std::decay_t<std::invoke_result_t<F&, const Matrix&>> {
  using Result = std::decay_t<std::invoke_result_t<F&, const Matrix&>>;
  const int m = static_cast<int>(xs.size());
  if (m < 1) throw DomainError("oracle_derivative: need at least one direction");
  if (degree_bound < 0) throw DomainError("oracle_derivative: negative degree bound");
  for (const auto& x : xs) require_same_shape(a, x, "oracle_derivative");
  const int L = degree_bound + 1;
  const double evaluations = std::pow(static_cast<double>(L), m);
  if (evaluations > static_cast<double>(guards.oracle_evaluations))
    throw GuardError("oracle_evaluations", evaluations,
                     static_cast<double>(guards.oracle_evaluations));

  std::vector<Complex> roots(static_cast<std::size_t>(L));
  for (int j = 0; j < L; ++j) roots[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * std::numbers::pi * j / L);

  std::vector<int> digit(static_cast<std::size_t>(m), 0);
  std::optional<Result> acc;
  Matrix point(a.rows(), a.cols());
  while (true) {
    point = a;
    int phase = 0;
    for (int p = 0; p < m; ++p) {
      const int d = digit[static_cast<std::size_t>(p)];
      point += roots[static_cast<std::size_t>(d)] * xs[static_cast<std::size_t>(p)];
      phase += d;
    }
    // weight = prod_p conj(root_{d_p}) = root_{-sum d_p mod L}
    const Complex weight = roots[static_cast<std::size_t>((L - phase % L) % L)];
    Result term = f(static_cast<const Matrix&>(point));
    if (acc)
      *acc += weight * term;
    else
      acc = Result(weight * term);

    int p = 0;
    while (p < m && ++digit[static_cast<std::size_t>(p)] == L) digit[static_cast<std::size_t>(p++)] = 0;
    if (p == m) break;
  }
  *acc /= evaluations;
  return *acc;
}

/// oracle_derivative applied to per with degree bound n.
Complex oracle_dper(const Matrix& a, std::span<const Matrix> xs,
                    const Guards& guards = Guards::defaults());

/// oracle_derivative applied to the k-th symmetric power with degree bound k.
SymMatrix oracle_dsym_power(const Matrix& a, int k, std::span<const Matrix> xs,
                            const Guards& guards = Guards::defaults());

}  // namespace permderiv
