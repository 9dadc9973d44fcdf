#include <doctest.h>

#include "permderiv/derivatives.hpp"
#include "permderiv/norms.hpp"
#include "test_util.hpp"

using namespace permderiv;
using permderiv::testing::max_abs_diff;
using permderiv::testing::random_list;
using permderiv::testing::real_matrix;

TEST_CASE("spectral and trace norm") {
  CHECK(spectral_norm(real_matrix({{3, 0}, {0, 4}})) == doctest::Approx(4.0));
  CHECK(trace_norm(real_matrix({{3, 0}, {0, -4}})) == doctest::Approx(7.0));
  CHECK(spectral_norm(Matrix(0, 0)) == 0.0);
  CHECK(spectral_norm(permderiv::testing::ones(3)) == doctest::Approx(3.0));
  Rng rng(1);
  for (int n = 1; n <= 6; ++n) {
    const Matrix a = random_disc_matrix(n, rng);
    const double s = spectral_norm(a), t = trace_norm(a);
    CHECK(s <= t + 1e-12);
    CHECK(t <= n * s + 1e-12);
    CHECK(spectral_norm(random_unit_norm_matrix(n, rng)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("svd_reduce diagonalizes") {
  Rng rng(2);
  for (int n = 1; n <= 5; ++n) {
    const Matrix a = random_disc_matrix(n, rng);
    const auto r = svd_reduce(a);
    CHECK(max_abs_diff(r.u * a * r.w, r.diagonal()) < 1e-12);
    CHECK(max_abs_diff(r.u * r.u.adjoint(), Matrix::Identity(n, n)) < 1e-12);
    CHECK(max_abs_diff(r.w * r.w.adjoint(), Matrix::Identity(n, n)) < 1e-12);
    for (int i = 1; i < n; ++i) CHECK(r.singular_values(i - 1) >= r.singular_values(i));
  }
}

TEST_CASE("dsym_norm_exact") {
  const Matrix d = real_matrix({{2, 0}, {0, 1}});
  CHECK(dsym_norm_exact(d, 2, 1) == doctest::Approx(4.0));
  CHECK(dsym_norm_exact(d, 3, 3) == doctest::Approx(6.0));
  CHECK(dsym_norm_exact(Matrix::Zero(3, 3), 3, 2) == 0.0);
  CHECK(dsym_norm_exact(Matrix::Zero(3, 3), 3, 3) == doctest::Approx(6.0));
  CHECK_THROWS_AS(dsym_norm_exact(d, 2, 3), DomainError);
  CHECK_THROWS_AS(dsym_norm_exact(d, 2, 0), DomainError);
  // direct: D v^2(diag(2,1))(I) has norm 4
  const std::vector<Matrix> one_id{Matrix::Identity(2, 2)};
  CHECK(spectral_norm(dsym_power(d, 2, one_id).data()) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("norm identity over small sizes") {
  Rng rng(3);
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int m = 1; m <= k; ++m) {
        const Matrix a = random_disc_matrix(n, rng);
        const auto r = verify_norm_identity(a, k, m, 5, 100);
        INFO(r.quantity, " ", r.detail);
        CHECK(r.pass);
        CHECK(r.computed == doctest::Approx(r.reference).epsilon(1e-9));
      }
}

TEST_CASE("sample_multilinear_norm") {
  Rng rng(4);
  const Matrix a = random_disc_matrix(3, rng);
  CHECK(sample_multilinear_norm(a, 2, 1, 0, 0) == 0.0);
  CHECK(sample_multilinear_norm(a, 3, 2, 4, 7) == sample_multilinear_norm(a, 3, 2, 4, 7));
  CHECK(sample_multilinear_norm(a, 3, 2, 10, 7) <= dsym_norm_exact(a, 3, 2) + 1e-9);
  // equality is attained at A = I with all directions I
  const std::vector<Matrix> ids(2, Matrix::Identity(3, 3));
  CHECK(spectral_norm(dsym_power(Matrix::Identity(3, 3), 3, ids).data()) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("derivative of the tensor power obeys the same bound") {
  Rng rng(5);
  for (int k = 1; k <= 3; ++k)
    for (int m = 1; m <= k; ++m) {
      const Matrix a = random_disc_matrix(2, rng);
      std::vector<Matrix> xs;
      for (int p = 0; p < m; ++p) xs.push_back(random_unit_norm_matrix(2, rng));
      CHECK(spectral_norm(dtensor_power(a, k, xs)) <= dsym_norm_exact(a, k, m) + 1e-10);
      const Matrix unit = a / spectral_norm(a);
      const std::vector<Matrix> aligned(static_cast<std::size_t>(m), unit);
      CHECK(spectral_norm(dtensor_power(unit, k, aligned)) == doctest::Approx(falling_factorial(k, m)).epsilon(1e-10));
    }
}

TEST_CASE("dper_norm_bound chain") {
  Rng rng(6);
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= n; ++m) {
      const auto r = dper_norm_bound(random_disc_matrix(n, rng), m, 20, 11);
      CHECK(r.checks.size() == 5);
      for (const auto& c : r.checks) {
        INFO(c.quantity, " computed=", c.computed, " reference=", c.reference);
        CHECK(c.pass);
      }
      CHECK(r.pass());
    }
  const auto id = dper_norm_bound(Matrix::Identity(3, 3), 3, 0);
  CHECK(id.closed_form == doctest::Approx(6.0));
  CHECK(id.sym_power_route == doctest::Approx(6.0));
  CHECK_THROWS_AS(dper_norm_bound(Matrix::Identity(3, 3), 4), DomainError);
}

TEST_CASE("unitary invariance through the SVD factors") {
  Rng rng(7);
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int m = 1; m <= k; ++m) {
        const Matrix a = random_disc_matrix(n, rng);
        const auto xs = random_list(m, n, rng);
        const auto r = svd_reduce(a);
        std::vector<Matrix> rotated;
        for (const auto& x : xs) rotated.push_back(r.u * x * r.w);
        const double lhs = spectral_norm(dsym_power(a, k, xs).data());
        const double rhs = spectral_norm(dsym_power(r.diagonal(), k, rotated).data());
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
      }
  const Matrix a = random_disc_matrix(3, rng);
  const Matrix u = random_unitary(3, rng), w = random_unitary(3, rng);
  CHECK(dsym_norm_exact(u * a * w, 3, 1) == doctest::Approx(dsym_norm_exact(a, 3, 1)).epsilon(1e-12));
}

TEST_CASE("norm sandwich on produced matrices") {
  Rng rng(9);
  const Matrix a = random_disc_matrix(4, rng);
  const auto xs = random_list(2, 4, rng);
  const std::vector<Matrix> produced{sym_power(a, 3).data(),
                                     mixed_sym_product(xs).data(),
                                     tilde_compound(a, 2).data,
                                     dsym_power(a, 3, xs).data(),
                                     dtensor_power(a, 2, xs),
                                     padj(a),
                                     symmetrizer(2, 4)};
  for (const auto& p : produced) {
    const double s = spectral_norm(p), t = trace_norm(p);
    const double side = static_cast<double>(std::min(p.rows(), p.cols()));
    CHECK(s <= t * (1 + 1e-12));
    CHECK(t <= side * s * (1 + 1e-12));
  }
}

TEST_CASE("perturbation bounds") {
  const Matrix id = Matrix::Identity(2, 2);
  const auto r = perturb_bound_sym(id, id, 2);
  CHECK(r.pass);
  CHECK(r.computed == doctest::Approx(3.0));
  CHECK(r.slack == doctest::Approx(0.0).epsilon(1e-12));
  const auto p = perturb_bound_per(id, id);
  CHECK(p.pass);
  CHECK(p.computed == doctest::Approx(3.0));

  Rng rng(8);
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= 3; ++k) {
      const Matrix a = random_disc_matrix(n, rng), x = random_disc_matrix(n, rng);
      CHECK(perturb_bound_sym(a, x, k).pass);
      CHECK(perturb_bound_per(a, x).pass);
    }
}

TEST_CASE("tightness in the commutative case") {
  const auto t21 = tightness_commutative(2, 1.0);
  CHECK(t21.pass);
  CHECK(t21.reference == doctest::Approx(3.0));
  const auto t31 = tightness_commutative(3, 1.0);
  CHECK(t31.pass);
  CHECK(t31.reference == doctest::Approx(7.0));
  const auto t4 = tightness_commutative(4, 0.5);
  CHECK(t4.pass);
  CHECK(t4.computed == doctest::Approx(4.0625));
  CHECK_THROWS_AS(tightness_commutative(0, 1.0), DomainError);
  CHECK_THROWS_AS(tightness_commutative(2, 0.0), DomainError);
}

TEST_CASE("report helpers") {
  const auto b = bound_report("b", 1.0, 2.0, 0.0);
  CHECK(b.slack == 1.0);
  CHECK(b.pass);
  CHECK_FALSE(bound_report("b", 2.0, 1.0, 0.5).pass);
  const auto e = equality_report("e", 100.0 + 1e-8, 100.0, 1e-9);
  CHECK(e.tolerance == doctest::Approx(1e-7));
  CHECK(e.pass);
  CHECK_FALSE(equality_report("e", 1e-8, 0.0, 1e-9).pass);
}
