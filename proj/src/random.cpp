#include "permderiv/random.hpp"

#include <cmath>
#include <numbers>

#include "permderiv/norms.hpp"

namespace permderiv {

Matrix random_disc_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Matrix out(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double r = std::sqrt(unit(rng));
      const double theta = 2.0 * std::numbers::pi * unit(rng);
      out(i, j) = std::polar(r, theta);
    }
  return out;
}

Matrix random_unit_norm_matrix(Eigen::Index n, Rng& rng) {
  Matrix x = random_disc_matrix(n, rng);
  double s = spectral_norm(x);
  while (s == 0.0) {
    x = random_disc_matrix(n, rng);
    s = spectral_norm(x);
  }
  return x / s;
}

Matrix random_unitary(Eigen::Index n, Rng& rng) {
  const Matrix z = random_disc_matrix(n, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  return qr.householderQ() * Matrix::Identity(n, n);
}

}  // namespace permderiv
