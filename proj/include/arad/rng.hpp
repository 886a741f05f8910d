#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "arad/matrix.hpp"

namespace arad {

using Rng = std::mt19937_64;

/// Counter-based stream splitting: a child seed is a splitmix64 hash of the
/// parent seed and a path of indices, so trial streams are independent of the
/// order in which trials run.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

/// Entries with independent standard normal real and imaginary parts.
ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng);
CVector gaussian_vector(std::size_t n, Rng& rng);

/// Haar-distributed unitary (Gram-Schmidt of a complex Gaussian matrix).
ComplexMatrix haar_unitary(std::size_t n, Rng& rng);

double uniform(Rng& rng, double lo, double hi);

}  // namespace arad
