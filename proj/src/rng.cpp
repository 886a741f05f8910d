#include "arad/rng.hpp"

#include "arad/linalg.hpp"

namespace arad {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = splitmix64(master);
  for (std::uint64_t p : path) s = splitmix64(s ^ splitmix64(p + 0x632be59bd9b4e019ULL));
  return s;
}

ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (auto& x : m.data()) {
    const double re = n01(rng);
    const double im = n01(rng);
    x = cplx(re, im);
  }
  return m;
}

CVector gaussian_vector(std::size_t n, Rng& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  CVector v(n);
  for (auto& x : v) {
    const double re = n01(rng);
    const double im = n01(rng);
    x = cplx(re, im);
  }
  return v;
}

ComplexMatrix haar_unitary(std::size_t n, Rng& rng) {
  return orthonormalize_columns(gaussian_matrix(n, n, rng));
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace arad
