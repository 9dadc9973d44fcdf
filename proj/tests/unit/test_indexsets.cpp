#include <doctest.h>

#include <algorithm>
#include <set>

#include "permderiv/indexsets.hpp"

using namespace permderiv;

namespace {

std::vector<std::vector<int>> as_lists(const std::vector<MultiIndex>& v) {
  std::vector<std::vector<int>> out;
  for (const auto& a : v) out.emplace_back(a.entries().begin(), a.entries().end());
  return out;
}

}  // namespace

TEST_CASE("MultiIndex validates its entries") {
  CHECK_NOTHROW(MultiIndex({1, 1, 2}, 2));
  CHECK_THROWS_AS(MultiIndex({2, 1}, 2), DomainError);
  CHECK_THROWS_AS(MultiIndex({0, 1}, 2), DomainError);
  CHECK_THROWS_AS(MultiIndex({1, 3}, 2), DomainError);
  CHECK(MultiIndex({1, 2, 3}, 3).strict());
  CHECK_FALSE(MultiIndex({1, 2, 2}, 3).strict());
  CHECK(MultiIndex({}, 3).strict());
}

TEST_CASE("enumerate_Q") {
  CHECK(as_lists(enumerate_Q(2, 3)) == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(enumerate_Q(3, 2).empty());
  CHECK(as_lists(enumerate_Q(1, 4)) == std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});
  CHECK(enumerate_Q(0, 3).size() == 1);
}

TEST_CASE("enumerate_G") {
  CHECK(as_lists(enumerate_G(2, 2)) == std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 2}});
  const auto g = enumerate_G(2, 3);
  REQUIRE(g.size() == 6);
  CHECK(g.front() == MultiIndex({1, 1}, 3));
  CHECK(g.back() == MultiIndex({3, 3}, 3));
  const auto e = enumerate_G(0, 5);
  REQUIRE(e.size() == 1);
  CHECK(e[0].empty());
}

TEST_CASE("enumeration sizes, ordering and Q inside G") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= 6; ++k) {
      const auto g = enumerate_G(k, n);
      const auto q = enumerate_Q(k, n);
      CHECK(g.size() == static_cast<std::size_t>(binomial(n + k - 1, k)));
      CHECK(q.size() == static_cast<std::size_t>(binomial(n, k)));
      CHECK(std::is_sorted(g.begin(), g.end()));
      CHECK(std::adjacent_find(g.begin(), g.end()) == g.end());
      CHECK(std::includes(g.begin(), g.end(), q.begin(), q.end()));
      for (std::size_t i = 0; i < g.size(); ++i) CHECK(rank_G(g[i]) == i);
      for (std::size_t i = 0; i < q.size(); ++i) CHECK(rank_Q(q[i]) == i);
    }
}

TEST_CASE("multiplicity") {
  CHECK(multiplicity(MultiIndex({1, 1, 2}, 2)) == 2);
  CHECK(multiplicity(MultiIndex({1, 2, 3}, 3)) == 1);
  CHECK(multiplicity(MultiIndex({2, 2, 2}, 2)) == 6);
  CHECK(multiplicity(MultiIndex({1, 1, 2, 2, 2}, 2)) == 12);
  CHECK(multiplicity(MultiIndex({}, 2)) == 1);
  for (const auto& a : enumerate_G(4, 4)) CHECK((multiplicity(a) == 1) == a.strict());
}

TEST_CASE("multiset containment and difference") {
  const MultiIndex a({1, 1, 2}, 3);
  CHECK(msub_contains(a, MultiIndex({1, 2}, 3)));
  CHECK_FALSE(msub_contains(a, MultiIndex({2, 2}, 3)));
  CHECK(msub_contains(MultiIndex({1, 2, 3}, 3), MultiIndex({}, 3)));

  CHECK(msub_difference(a, MultiIndex({1, 2}, 3)) == MultiIndex({1}, 3));
  CHECK(msub_difference(MultiIndex({1, 2, 2, 3}, 3), MultiIndex({2}, 3)) == MultiIndex({1, 2, 3}, 3));
  CHECK(msub_difference(MultiIndex({1, 2}, 3), MultiIndex({1, 2}, 3)).empty());
  CHECK_THROWS_AS(msub_difference(a, MultiIndex({2, 2}, 3)), DomainError);
}

TEST_CASE("difference then union reproduces alpha for every sub-multiset") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k)
      for (const auto& alpha : enumerate_G(k, n))
        for (int r = 0; r <= k; ++r)
          for (const auto& sub : enumerate_G(r, n)) {
            if (!msub_contains(alpha, sub)) {
              CHECK(embedding_count(alpha, sub) == 0);
              continue;
            }
            CHECK(msub_union(msub_difference(alpha, sub), sub) == alpha);
            // number of position subsets = m(alpha) / (m(sub) m(alpha - sub))
            CHECK(embedding_count(alpha, sub) * multiplicity(sub) *
                      multiplicity(msub_difference(alpha, sub)) ==
                  multiplicity(alpha));
          }
}

TEST_CASE("enumerate_permutations") {
  CHECK(enumerate_permutations(1) == std::vector<Permutation>{{0}});
  CHECK(enumerate_permutations(2) == std::vector<Permutation>{{0, 1}, {1, 0}});
  const auto p3 = enumerate_permutations(3);
  CHECK(p3.size() == 6);
  CHECK(std::set<Permutation>(p3.begin(), p3.end()).size() == 6);
  CHECK(enumerate_permutations(8).size() == 40320);
  CHECK_THROWS_AS(enumerate_permutations(9), GuardError);
}

TEST_CASE("guards on G enumeration") {
  Guards g;
  g.sym_dim = 10;
  CHECK_NOTHROW(enumerate_G(2, 4, g));
  CHECK_THROWS_AS(enumerate_G(3, 4, g), GuardError);
  try {
    enumerate_G(3, 4, g);
  } catch (const GuardError& e) {
    CHECK(e.limit() == "sym_dim");
  }
}

TEST_CASE("SymBasis") {
  const SymBasis b(3, 3);
  CHECK(b.size() == 10);
  const SymBasis b2(3, 3);
  CHECK(b.elements() == b2.elements());
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(b.index_of(b.element(i)) == i);
    CHECK(b.weight(i) == doctest::Approx(1.0 / std::sqrt(double(multiplicity(b.element(i))))));
    CHECK((b.weight(i) == 1.0) == b.element(i).strict());
  }
  CHECK_THROWS_AS(b.index_of(MultiIndex({1, 2}, 3)), DomainError);
}
