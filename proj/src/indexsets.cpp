#include "permderiv/indexsets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace permderiv {

namespace {

void require_order_and_dimension(int order, int n, const char* what) {
  if (order < 0 || n < 1) {
    std::ostringstream os;
    os << what << ": need order >= 0 and n >= 1, got order=" << order << " n=" << n;
    throw DomainError(os.str());
  }
}

void check_same_dimension(const MultiIndex& a, const MultiIndex& b, const char* what) {
  if (a.dimension() != b.dimension())
    throw DomainError(std::string(what) + ": multiindices over different dimensions");
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries, int n) : entries_(std::move(entries)), n_(n) {
  if (n < 0) throw DomainError("MultiIndex: negative dimension");
  for (std::size_t p = 0; p < entries_.size(); ++p) {
    if (entries_[p] < 1 || entries_[p] > n)
      throw DomainError("MultiIndex: entry " + std::to_string(entries_[p]) + " outside [1, " +
                        std::to_string(n) + "]");
    if (p > 0 && entries_[p] < entries_[p - 1])
      throw DomainError("MultiIndex: entries must be nondecreasing");
  }
}

bool MultiIndex::strict() const noexcept {
  return std::adjacent_find(entries_.begin(), entries_.end()) == entries_.end();
}

std::vector<int> MultiIndex::counts() const {
  std::vector<int> c(static_cast<std::size_t>(n_) + 1, 0);
  for (int e : entries_) ++c[static_cast<std::size_t>(e)];
  return c;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t p = 0; p < entries_.size(); ++p) os << (p ? "," : "") << entries_[p];
  os << ')';
  return os.str();
}

std::vector<MultiIndex> enumerate_Q(int m, int n, const Guards& guards) {
  require_order_and_dimension(m, n, "enumerate_Q");
  std::vector<MultiIndex> out;
  if (m > n) return out;
  const double count = binomial(n, m);
  if (count > static_cast<double>(guards.sym_dim)) throw GuardError("sym_dim", count, guards.sym_dim);
  out.reserve(static_cast<std::size_t>(count));

  std::vector<int> cur(static_cast<std::size_t>(m));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(cur, n);
    int p = m - 1;
    while (p >= 0 && cur[static_cast<std::size_t>(p)] == n - (m - 1 - p)) --p;
    if (p < 0) break;
    ++cur[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < m; ++q)
      cur[static_cast<std::size_t>(q)] = cur[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

std::vector<MultiIndex> enumerate_G(int k, int n, const Guards& guards) {
  require_order_and_dimension(k, n, "enumerate_G");
  const double count = binomial(n + k - 1, k);
  if (count > static_cast<double>(guards.sym_dim)) throw GuardError("sym_dim", count, guards.sym_dim);
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(count));

  std::vector<int> cur(static_cast<std::size_t>(k), 1);
  while (true) {
    out.emplace_back(cur, n);
    int p = k - 1;
    while (p >= 0 && cur[static_cast<std::size_t>(p)] == n) --p;
    if (p < 0) break;
    const int v = cur[static_cast<std::size_t>(p)] + 1;
    for (int q = p; q < k; ++q) cur[static_cast<std::size_t>(q)] = v;
  }
  return out;
}

std::int64_t multiplicity(const MultiIndex& alpha) {
  std::int64_t m = 1;
  const auto e = alpha.entries();
  std::int64_t run = 0;
  for (std::size_t p = 0; p < e.size(); ++p) {
    run = (p > 0 && e[p] == e[p - 1]) ? run + 1 : 1;
    m *= run;
  }
  return m;
}

bool msub_contains(const MultiIndex& alpha, const MultiIndex& sub) {
  check_same_dimension(alpha, sub, "msub_contains");
  return std::includes(alpha.entries().begin(), alpha.entries().end(), sub.entries().begin(),
                       sub.entries().end());
}

MultiIndex msub_difference(const MultiIndex& alpha, const MultiIndex& sub) {
  if (!msub_contains(alpha, sub))
    throw DomainError("msub_difference: " + sub.to_string() + " is not a sub-multiset of " +
                      alpha.to_string());
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(alpha.size() - sub.size()));
  std::set_difference(alpha.entries().begin(), alpha.entries().end(), sub.entries().begin(),
                      sub.entries().end(), std::back_inserter(out));
  return MultiIndex(std::move(out), alpha.dimension());
}

MultiIndex msub_union(const MultiIndex& a, const MultiIndex& b) {
  check_same_dimension(a, b, "msub_union");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(a.size() + b.size()));
  std::merge(a.entries().begin(), a.entries().end(), b.entries().begin(), b.entries().end(),
             std::back_inserter(out));
  return MultiIndex(std::move(out), a.dimension());
}

std::int64_t embedding_count(const MultiIndex& alpha, const MultiIndex& sub) {
  check_same_dimension(alpha, sub, "embedding_count");
  const auto ca = alpha.counts();
  const auto cs = sub.counts();
  std::int64_t r = 1;
  for (std::size_t v = 1; v < ca.size(); ++v) {
    if (cs[v] > ca[v]) return 0;
    r *= static_cast<std::int64_t>(binomial(ca[v], cs[v]));
  }
  return r;
}

std::vector<Permutation> enumerate_permutations(int m, const Guards& guards) {
  if (m < 0) throw DomainError("enumerate_permutations: negative order");
  if (m > guards.permutation_order)
    throw GuardError("permutation_order", m, guards.permutation_order);
  Permutation p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial(m)));
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::size_t rank_G(const MultiIndex& alpha) {
  const int n = alpha.dimension();
  const int k = alpha.size();
  double rank = 0.0;
  int prev = 1;
  for (int p = 0; p < k; ++p) {
    const int rest = k - p - 1;
    for (int v = prev; v < alpha[p]; ++v) rank += binomial(n - v + rest, rest);
    prev = alpha[p];
  }
  return static_cast<std::size_t>(rank);
}

std::size_t rank_Q(const MultiIndex& alpha) {
  if (!alpha.strict()) throw DomainError("rank_Q: " + alpha.to_string() + " is not strict");
  const int n = alpha.dimension();
  const int m = alpha.size();
  double rank = 0.0;
  int prev = 1;
  for (int p = 0; p < m; ++p) {
    const int rest = m - p - 1;
    for (int v = prev; v < alpha[p]; ++v) rank += binomial(n - v, rest);
    prev = alpha[p] + 1;
  }
  return static_cast<std::size_t>(rank);
}

SymBasis::SymBasis(int k, int n, const Guards& guards)
    : k_(k), n_(n), elements_(enumerate_G(k, n, guards)) {
  weights_.reserve(elements_.size());
  for (const auto& a : elements_)
    weights_.push_back(1.0 / std::sqrt(static_cast<double>(multiplicity(a))));
}

std::size_t SymBasis::index_of(const MultiIndex& alpha) const {
  if (alpha.size() != k_ || alpha.dimension() != n_)
    throw DomainError("SymBasis::index_of: " + alpha.to_string() + " is not in G_{" +
                      std::to_string(k_) + "," + std::to_string(n_) + "}");
  return rank_G(alpha);
}

}  // namespace permderiv
