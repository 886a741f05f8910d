#include <doctest.h>

#include <cmath>
#include <random>

#include "arad/error.hpp"
#include "arad/linalg.hpp"
#include "oracle.hpp"

using namespace arad;

namespace {

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  const oracle::Mat g = oracle::random_matrix(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n), rng);
  return oracle::from_eigen(0.5 * (g + g.adjoint()));
}

ComplexMatrix random_low_rank(std::size_t rows, std::size_t cols, std::size_t rank,
                              std::mt19937_64& rng) {
  const auto r = static_cast<Eigen::Index>(rank);
  return oracle::from_eigen(oracle::random_matrix(static_cast<Eigen::Index>(rows), r, rng) *
                            oracle::random_matrix(r, static_cast<Eigen::Index>(cols), rng));
}

}  // namespace

TEST_CASE("hermitian_eig: fixed spectra") {
  const HermitianEigen e = hermitian_eig(ComplexMatrix{{2, 1}, {1, 2}});
  REQUIRE(e.values.size() == 2);
  CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-14));

  const HermitianEigen id = hermitian_eig(ComplexMatrix::identity(3));
  for (double v : id.values) CHECK(v == doctest::Approx(1.0));
  CHECK(oracle::distance(id.vectors.adjoint() * id.vectors, oracle::Mat::Identity(3, 3)) < 1e-14);

  const HermitianEigen d = hermitian_eig(ComplexMatrix::diagonal({0.0, 5.0}));
  CHECK(d.values[0] == 0.0);
  CHECK(d.values[1] == 5.0);
}

TEST_CASE("hermitian_eig: errors") {
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix(2, 3)), Error);
  try {
    hermitian_eig(ComplexMatrix{{1, 2}, {0, 1}});
    FAIL("expected NotHermitian");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }
}

TEST_CASE("hermitian_eig: random reconstruction and ordering") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 8; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix m = random_hermitian(n, rng);
      const HermitianEigen e = hermitian_eig(m);
      const ComplexMatrix lv = e.vectors * ComplexMatrix::diagonal(e.values) * e.vectors.adjoint();
      CHECK((lv - m).frobenius_norm() <= 1e-10 * m.frobenius_norm());
      CHECK(oracle::distance(e.vectors.adjoint() * e.vectors,
                             oracle::Mat::Identity(static_cast<Eigen::Index>(n),
                                                   static_cast<Eigen::Index>(n))) < 1e-12);
      CHECK(std::is_sorted(e.values.begin(), e.values.end()));
      const Eigen::VectorXd ref =
          Eigen::SelfAdjointEigenSolver<oracle::Mat>(oracle::to_eigen(m)).eigenvalues();
      for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(e.values[i] - ref(static_cast<Eigen::Index>(i))) <
              1e-12 * (1.0 + std::abs(ref(static_cast<Eigen::Index>(i)))));
    }
}

TEST_CASE("svd: fixed cases") {
  const Svd s = svd(ComplexMatrix{{0, std::sqrt(2.0)}, {0, 0}});
  CHECK(s.singular_values[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(s.singular_values[1] == doctest::Approx(0.0));

  for (double v : svd(ComplexMatrix(3, 2)).singular_values) CHECK(v == 0.0);

  const Svd d = svd(ComplexMatrix::diagonal({3.0, 4.0}));
  CHECK(d.singular_values[0] == doctest::Approx(4.0));
  CHECK(d.singular_values[1] == doctest::Approx(3.0));
}

TEST_CASE("svd: random reconstruction against Eigen") {
  std::mt19937_64 rng(12);
  for (std::size_t rows : {1u, 2u, 3u, 5u})
    for (std::size_t cols : {1u, 2u, 4u, 6u}) {
      const ComplexMatrix m = oracle::from_eigen(oracle::random_matrix(
          static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols), rng));
      const Svd s = svd(m);
      ComplexMatrix sigma(rows, cols);
      for (std::size_t i = 0; i < s.singular_values.size(); ++i)
        sigma(i, i) = s.singular_values[i];
      CHECK((s.u * sigma * s.v.adjoint() - m).frobenius_norm() <= 1e-12 * m.frobenius_norm());
      const Eigen::VectorXd ref = Eigen::JacobiSVD<oracle::Mat>(oracle::to_eigen(m)).singularValues();
      for (std::size_t i = 0; i < s.singular_values.size(); ++i)
        CHECK(std::abs(s.singular_values[i] - ref(static_cast<Eigen::Index>(i))) < 1e-12 * ref(0));
    }
}

TEST_CASE("pinv: fixed cases") {
  const ComplexMatrix d = pinv(ComplexMatrix::diagonal({2.0, 0.0}));
  CHECK(oracle::distance(d, oracle::to_eigen(ComplexMatrix::diagonal({0.5, 0.0}))) < 1e-15);

  const ComplexMatrix ones{{1, 1}, {1, 1}};
  CHECK(oracle::distance(pinv(ones), 0.25 * oracle::to_eigen(ones)) < 1e-15);

  const ComplexMatrix inv{{2, 1}, {1, 3}};
  CHECK(oracle::distance(pinv(inv), oracle::to_eigen(inv).inverse()) < 1e-14);

  CHECK(pinv(ComplexMatrix(2, 3)).frobenius_norm() == 0.0);
}

TEST_CASE("pinv: Moore-Penrose axioms on rank-deficient matrices") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 2 + static_cast<std::size_t>(trial % 5);
    const std::size_t cols = 2 + static_cast<std::size_t>((trial / 5) % 4);
    const std::size_t rank = 1 + static_cast<std::size_t>(trial) % std::min(rows, cols);
    const ComplexMatrix m = random_low_rank(rows, cols, rank, rng);
    const ComplexMatrix x = pinv(m);
    const double s = m.frobenius_norm() * x.frobenius_norm();
    CHECK((m * x * m - m).frobenius_norm() <= 1e-10 * m.frobenius_norm() * s);
    CHECK((x * m * x - x).frobenius_norm() <= 1e-10 * x.frobenius_norm() * s);
    const ComplexMatrix mx = m * x, xm = x * m;
    CHECK(hermitian_defect(mx) <= 1e-10 * s);
    CHECK(hermitian_defect(xm) <= 1e-10 * s);
    CHECK(numerical_rank(m, default_tolerance(m)) == rank);
  }
}

TEST_CASE("psd_sqrt and range_projector") {
  CHECK(oracle::distance(psd_sqrt(ComplexMatrix::diagonal({4.0, 9.0})),
                         oracle::to_eigen(ComplexMatrix::diagonal({2.0, 3.0}))) < 1e-15);
  CHECK(oracle::distance(psd_sqrt(ComplexMatrix::identity(3)), oracle::Mat::Identity(3, 3)) <
        1e-15);
  const ComplexMatrix m{{2, 1}, {1, 2}};
  const ComplexMatrix r = psd_sqrt(m);
  CHECK((r * r - m).frobenius_norm() < 1e-12);
  CHECK(hermitian_defect(r) < 1e-15);

  CHECK(oracle::distance(range_projector(ComplexMatrix::diagonal({1.0, 0.0})),
                         oracle::to_eigen(ComplexMatrix::diagonal({1.0, 0.0}))) < 1e-15);
  CHECK(oracle::distance(range_projector(m), oracle::Mat::Identity(2, 2)) < 1e-14);
  const ComplexMatrix ones{{1, 1}, {1, 1}};
  CHECK(oracle::distance(range_projector(ones), 0.5 * oracle::to_eigen(ones)) < 1e-15);

  try {
    psd_sqrt(ComplexMatrix::diagonal({1.0, -1.0}));
    FAIL("expected NotPsd");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPsd);
  }
}

TEST_CASE("psd_sqrt, projector and spectral_norm: random properties") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 6);
    const std::size_t rank = 1 + static_cast<std::size_t>(trial) % n;
    const ComplexMatrix b = random_low_rank(rank, n, rank, rng);
    const ComplexMatrix m = b.adjoint() * b;
    const ComplexMatrix r = psd_sqrt(m);
    CHECK((r * r - m).frobenius_norm() <= 1e-10 * spectral_norm(m) * std::sqrt(double(n)));

    const ComplexMatrix p = range_projector(m);
    CHECK((p * p - p).frobenius_norm() < 1e-12);
    CHECK(hermitian_defect(p) < 1e-12);
    CHECK((p * m - m).frobenius_norm() <= 1e-10 * m.frobenius_norm());
    CHECK(numerical_rank(p, default_tolerance(p)) == rank);

    const ComplexMatrix h = random_hermitian(n, rng);
    const Eigen::VectorXd ev =
        Eigen::SelfAdjointEigenSolver<oracle::Mat>(oracle::to_eigen(h)).eigenvalues();
    const double ref = std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
    CHECK(spectral_norm(h) == doctest::Approx(ref).epsilon(1e-12));
    CHECK(spectral_norm(h) == doctest::Approx(oracle::norm(oracle::to_eigen(h))).epsilon(1e-12));
  }
}

TEST_CASE("nonneg2x2_spectral_radius") {
  CHECK(nonneg2x2_spectral_radius(1, 0, 0, 2) == 2.0);
  CHECK(nonneg2x2_spectral_radius(0, 1, 1, 0) == 1.0);
  CHECK(nonneg2x2_spectral_radius(1, 2, 3, 4) ==
        doctest::Approx(0.5 * (5.0 + std::sqrt(33.0))).epsilon(1e-15));
  CHECK_THROWS_AS(nonneg2x2_spectral_radius(1, -1, 0, 0), Error);

  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    oracle::Mat m(2, 2);
    m << a, b, c, d;
    CHECK(nonneg2x2_spectral_radius(a, b, c, d) ==
          doctest::Approx(oracle::spectral_radius(m)).epsilon(1e-6));
  }
}

TEST_CASE("hermitian_extremes agrees with Eigen") {
  std::mt19937_64 rng(16);
  for (std::size_t n = 1; n <= 12; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix h = random_hermitian(n, rng);
      const Eigen::VectorXd ev =
          Eigen::SelfAdjointEigenSolver<oracle::Mat>(oracle::to_eigen(h)).eigenvalues();
      const double scale = std::max(1.0, h.frobenius_norm());
      const ExtremePairs ex = hermitian_extremes(h);
      CHECK(std::abs(ex.min_value - ev.minCoeff()) < 1e-13 * scale);
      CHECK(std::abs(ex.max_value - ev.maxCoeff()) < 1e-13 * scale);
      const auto [lo, hi] = hermitian_extreme_values(h);
      CHECK(lo == ex.min_value);
      CHECK(hi == ex.max_value);
      for (const auto* v : {&ex.min_vector, &ex.max_vector}) {
        const double lambda = v == &ex.min_vector ? ex.min_value : ex.max_value;
        CVector r = h * *v;
        for (std::size_t i = 0; i < n; ++i) r[i] -= lambda * (*v)[i];
        CHECK(norm2(*v) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(norm2(r) < 1e-10 * scale);
      }
    }
}

TEST_CASE("hermitian_extremes: repeated eigenvalues") {
  const ExtremePairs ex = hermitian_extremes(ComplexMatrix::identity(4));
  CHECK(ex.min_value == doctest::Approx(1.0));
  CHECK(ex.max_value == doctest::Approx(1.0));
  const auto [lo, hi] = hermitian_extreme_values(ComplexMatrix(3, 3));
  CHECK(lo == doctest::Approx(0.0));
  CHECK(hi == doctest::Approx(0.0));
}
