#include "permderiv/derivatives.hpp"

#include <array>
#include <sstream>

namespace permderiv {

namespace {

// Validates A and the directions; returns m.
int check_directions(const Matrix& a, std::span<const Matrix> xs, const char* what) {
  require_square(a, what);
  if (xs.empty()) throw DomainError(std::string(what) + ": need at least one direction");
  for (const auto& x : xs) require_same_shape(a, x, what);
  return static_cast<int>(xs.size());
}

void check_permutation_guard(int m, const Guards& guards) {
  if (m > guards.permutation_order) throw GuardError("permutation_order", m, guards.permutation_order);
}

std::vector<Matrix> select_all(std::span<const Matrix> xs, const MultiIndex& rows,
                               const MultiIndex& cols) {
  std::vector<Matrix> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(submatrix_select(x, rows, cols));
  return out;
}

SymMatrix zero_sym(int k, int n, const Guards& guards) {
  SymBasis basis(k, n, guards);
  const auto side = static_cast<Eigen::Index>(basis.size());
  return SymMatrix(std::move(basis), Matrix::Zero(side, side));
}

constexpr std::array<std::pair<Formula, std::string_view>, 6> kFormulaNames{{
    {Formula::jacobi, "jacobi"},
    {Formula::columns, "columns"},
    {Formula::laplace, "laplace"},
    {Formula::mixed, "mixed"},
    {Formula::trace, "trace"},
    {Formula::oracle, "oracle"},
}};

}  // namespace

std::string_view to_string(Formula f) {
  for (const auto& [v, name] : kFormulaNames)
    if (v == f) return name;
  return "unknown";
}

Formula formula_from_string(std::string_view name) {
  for (const auto& [v, n] : kFormulaNames)
    if (n == name) return v;
  throw DomainError("unknown formula '" + std::string(name) + "'");
}

Complex dper_jacobi(const Matrix& a, const Matrix& x) {
  require_square(a, "dper_jacobi");
  require_same_shape(a, x, "dper_jacobi");
  return (padj(a).transpose() * x).trace();
}

Complex dper_jacobi_columns(const Matrix& a, const Matrix& x) {
  require_square(a, "dper_jacobi_columns");
  require_same_shape(a, x, "dper_jacobi_columns");
  const int n = static_cast<int>(a.rows());
  Complex total{0.0, 0.0};
  for (int j = 1; j <= n; ++j) {
    const Matrix xs[] = {x};
    total += permanent(columns_replace(a, MultiIndex({j}, n), xs));
  }
  return total;
}

Complex dper_jacobi_entries(const Matrix& a, const Matrix& x) {
  require_square(a, "dper_jacobi_entries");
  require_same_shape(a, x, "dper_jacobi_entries");
  const int n = static_cast<int>(a.rows());
  Complex total{0.0, 0.0};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      total += x(i - 1, j - 1) *
               permanent(submatrix_delete(a, MultiIndex({i}, n), MultiIndex({j}, n)));
  return total;
}

Complex dper_columns(const Matrix& a, std::span<const Matrix> xs, const Guards& guards) {
  const int m = check_directions(a, xs, "dper_columns");
  const int n = static_cast<int>(a.rows());
  if (m > n) return {0.0, 0.0};
  check_permutation_guard(m, guards);
  const auto perms = enumerate_permutations(m, guards);
  const auto qs = enumerate_Q(m, n, guards);
  std::vector<Matrix> ordered(static_cast<std::size_t>(m));
  Complex total{0.0, 0.0};
  for (const auto& sigma : perms) {
    for (int p = 0; p < m; ++p)
      ordered[static_cast<std::size_t>(p)] = xs[static_cast<std::size_t>(sigma[static_cast<std::size_t>(p)])];
    for (const auto& cols : qs) total += permanent(columns_replace(a, cols, ordered), guards);
  }
  return total;
}

Complex dper_laplace(const Matrix& a, std::span<const Matrix> xs, const DeletionPermanents* cache,
                     const Guards& guards) {
  const int m = check_directions(a, xs, "dper_laplace");
  const int n = static_cast<int>(a.rows());
  if (m > n) return {0.0, 0.0};
  check_permutation_guard(m, guards);
  std::optional<DeletionPermanents> own;
  if (!cache) cache = &own.emplace(a);

  const auto perms = enumerate_permutations(m, guards);
  const auto qs = enumerate_Q(m, n, guards);
  Complex total{0.0, 0.0};
  for (const auto& sigma : perms)
    for (const auto& cols : qs) {
      const Matrix y = sigma_columns(cols, sigma, xs, n);
      for (const auto& rows : qs)
        total += cache->get(rows, cols) * permanent(submatrix_select(y, rows, cols), guards);
    }
  return total;
}

Complex dper_mixed(const Matrix& a, std::span<const Matrix> xs, const DeletionPermanents* cache,
                   const Guards& guards) {
  const int m = check_directions(a, xs, "dper_mixed");
  const int n = static_cast<int>(a.rows());
  if (m > n) return {0.0, 0.0};
  check_permutation_guard(m, guards);
  std::optional<DeletionPermanents> own;
  if (!cache) cache = &own.emplace(a);

  const auto qs = enumerate_Q(m, n, guards);
  Complex total{0.0, 0.0};
  for (const auto& rows : qs)
    for (const auto& cols : qs)
      total += cache->get(rows, cols) * mixed_permanent(select_all(xs, rows, cols), guards);
  return factorial(m) * total;
}

Complex dper_trace(const Matrix& a, std::span<const Matrix> xs, const DeletionPermanents* cache,
                   const Guards& guards) {
  const int m = check_directions(a, xs, "dper_trace");
  const int n = static_cast<int>(a.rows());
  if (m > n) return {0.0, 0.0};
  check_permutation_guard(m, guards);
  std::optional<DeletionPermanents> own;
  if (!cache) cache = &own.emplace(a);

  const auto tilde = tilde_compound(a, m, cache);
  const auto compressed = mixed_sym_product_q(xs, guards);
  return factorial(m) * (tilde.data * compressed.data).trace();
}

DerivativeResult dper(Formula formula, const Matrix& a, std::span<const Matrix> xs,
                      const Guards& guards) {
  DerivativeResult r;
  r.order = static_cast<int>(xs.size());
  r.formula = std::string(to_string(formula));
  switch (formula) {
    case Formula::jacobi:
      if (xs.size() != 1) throw DomainError("dper: the jacobi formula takes exactly one direction");
      r.value = dper_jacobi(a, xs[0]);
      break;
    case Formula::columns:
      r.value = dper_columns(a, xs, guards);
      break;
    case Formula::laplace:
      r.value = dper_laplace(a, xs, nullptr, guards);
      break;
    case Formula::mixed:
      r.value = dper_mixed(a, xs, nullptr, guards);
      break;
    case Formula::trace:
      r.value = dper_trace(a, xs, nullptr, guards);
      break;
    case Formula::oracle:
      r.value = oracle_dper(a, xs, guards);
      break;
  }
  return r;
}

SymMatrix dsym_power(const Matrix& a, int k, std::span<const Matrix> xs, const Guards& guards) {
  const int m = check_directions(a, xs, "dsym_power");
  const int n = static_cast<int>(a.rows());
  if (k < 1) throw DomainError("dsym_power: need k >= 1");
  if (m > k) return zero_sym(k, n, guards);

  const SymMatrix y = mixed_sym_product(xs, guards);
  const auto& small = y.basis().elements();
  const auto rest = enumerate_G(k - m, n, guards);
  SymBasis basis(k, n, guards);

  // For each gamma: target row of alpha' + gamma and the factor
  // embedding_count(alpha, gamma) * sqrt(m(alpha') / m(alpha)).
  struct Placement {
    std::vector<Eigen::Index> pos;
    std::vector<double> scale;
  };
  std::vector<Placement> place(rest.size());
  for (std::size_t g = 0; g < rest.size(); ++g) {
    place[g].pos.reserve(small.size());
    place[g].scale.reserve(small.size());
    for (const auto& inner : small) {
      const auto alpha = msub_union(inner, rest[g]);
      place[g].pos.push_back(static_cast<Eigen::Index>(basis.index_of(alpha)));
      place[g].scale.push_back(static_cast<double>(embedding_count(alpha, rest[g])) *
                               std::sqrt(static_cast<double>(multiplicity(inner)) /
                                         static_cast<double>(multiplicity(alpha))));
    }
  }

  const auto side = static_cast<Eigen::Index>(basis.size());
  Matrix out = Matrix::Zero(side, side);
  const double mf = factorial(m);
  const auto inner_side = static_cast<std::size_t>(small.size());
  for (std::size_t g = 0; g < rest.size(); ++g)
    for (std::size_t d = 0; d < rest.size(); ++d) {
      const Complex coeff = mf * permanent(submatrix_select(a, rest[g], rest[d]), guards);
      for (std::size_t c = 0; c < inner_side; ++c)
        for (std::size_t r = 0; r < inner_side; ++r)
          out(place[g].pos[r], place[d].pos[c]) +=
              coeff * place[g].scale[r] * place[d].scale[c] *
              y.data()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  return SymMatrix(std::move(basis), std::move(out));
}

SymMatrix dsym_power_uncounted(const Matrix& a, int k, std::span<const Matrix> xs,
                               const Guards& guards) {
  const int m = check_directions(a, xs, "dsym_power_uncounted");
  const int n = static_cast<int>(a.rows());
  if (k < 1) throw DomainError("dsym_power_uncounted: need k >= 1");
  SymMatrix out = zero_sym(k, n, guards);
  if (m > k) return out;

  const SymMatrix y = mixed_sym_product(xs, guards);
  const auto rest = enumerate_G(k - m, n, guards);
  const double mf = factorial(m);
  for (const auto& gamma : rest)
    for (const auto& delta : rest)
      out.data() += mf * permanent(submatrix_select(a, gamma, delta), guards) *
                    lift_embed(y, gamma, delta, k, guards).data();
  return out;
}

SymMatrix dsym_power_entrywise(const Matrix& a, int k, std::span<const Matrix> xs,
                               const Guards& guards) {
  const int m = check_directions(a, xs, "dsym_power_entrywise");
  const int n = static_cast<int>(a.rows());
  if (k < 1) throw DomainError("dsym_power_entrywise: need k >= 1");
  SymMatrix out = zero_sym(k, n, guards);
  if (m > k) return out;
  const auto& basis = out.basis();
  const auto side = static_cast<Eigen::Index>(basis.size());
  for (Eigen::Index c = 0; c < side; ++c)
    for (Eigen::Index r = 0; r < side; ++r) {
      const auto& alpha = basis.element(static_cast<std::size_t>(r));
      const auto& beta = basis.element(static_cast<std::size_t>(c));
      const auto blocks = select_all(xs, alpha, beta);
      out.data()(r, c) = basis.weight(static_cast<std::size_t>(r)) *
                         basis.weight(static_cast<std::size_t>(c)) *
                         dper_mixed(submatrix_select(a, alpha, beta), blocks, nullptr, guards);
    }
  return out;
}

Matrix dtensor_power(const Matrix& a, int k, std::span<const Matrix> xs, const Guards& guards) {
  const int m = check_directions(a, xs, "dtensor_power");
  if (k < 1) throw DomainError("dtensor_power: need k >= 1");
  const Matrix shape = tensor_power(Matrix::Identity(a.rows(), a.cols()), k, guards);
  if (m > k) return Matrix::Zero(shape.rows(), shape.cols());
  check_permutation_guard(m, guards);

  Matrix out = Matrix::Zero(shape.rows(), shape.cols());
  std::vector<Matrix> factors(static_cast<std::size_t>(k));
  for (const auto& slots : enumerate_Q(m, k, guards))
    for (const auto& sigma : enumerate_permutations(m, guards)) {
      std::fill(factors.begin(), factors.end(), a);
      for (int p = 0; p < m; ++p)
        factors[static_cast<std::size_t>(slots[p] - 1)] =
            xs[static_cast<std::size_t>(sigma[static_cast<std::size_t>(p)])];
      out += kron_all(factors);
    }
  return out;
}

Complex oracle_dper(const Matrix& a, std::span<const Matrix> xs, const Guards& guards) {
  require_square(a, "oracle_dper");
  const int n = static_cast<int>(a.rows());
  return oracle_derivative([&](const Matrix& z) { return permanent(z, guards); }, a, xs, n, guards);
}

SymMatrix oracle_dsym_power(const Matrix& a, int k, std::span<const Matrix> xs,
                            const Guards& guards) {
  require_square(a, "oracle_dsym_power");
  if (k < 1) throw DomainError("oracle_dsym_power: need k >= 1");
  Matrix data = oracle_derivative(
      [&](const Matrix& z) -> Matrix { return sym_power(z, k, guards).data(); }, a, xs, k, guards);
  return SymMatrix(SymBasis(k, static_cast<int>(a.rows()), guards), std::move(data));
}

}  // namespace permderiv
