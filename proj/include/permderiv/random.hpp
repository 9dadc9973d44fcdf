#pragma once

#include <cstdint>
#include <random>

#include "permderiv/common.hpp"

namespace permderiv {

using Rng = std::mt19937_64;

/// Entries independent and uniform in the closed complex unit disc.
Matrix random_disc_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);
inline Matrix random_disc_matrix(Eigen::Index n, Rng& rng) { return random_disc_matrix(n, n, rng); }

/// Disc-ensemble draw rescaled to spectral norm 1.
Matrix random_unit_norm_matrix(Eigen::Index n, Rng& rng);

/// Unitary factor of the QR decomposition of a disc-ensemble draw.
Matrix random_unitary(Eigen::Index n, Rng& rng);

}  // namespace permderiv
