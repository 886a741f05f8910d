#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "arad/matrix.hpp"

namespace arad {

/// Relative asymmetry ‖M − M*‖_F / ‖M‖_F tolerated by the Hermitian kernels.
inline constexpr double kSymmetryTolerance = 1e-10;
/// Cyclic Jacobi stops once the off-diagonal Frobenius mass drops below
/// this fraction of ‖M‖_F.
inline constexpr double kJacobiOffDiagonal = 1e-14;
inline constexpr int kJacobiSweepCap = 30;

struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  ComplexMatrix vectors;       ///< unitary, eigenvectors as columns
};

struct Svd {
  std::vector<double> singular_values;  ///< nonincreasing, length min(rows, cols)
  ComplexMatrix u;                      ///< rows x rows unitary
  ComplexMatrix v;                      ///< cols x cols unitary
};

/// Absolute threshold below which a singular value / eigenvalue counts as zero.
struct RankTolerance {
  double threshold = 0.0;

  /// max(rows, cols) · ε · largest
  static RankTolerance from_scale(std::size_t rows, std::size_t cols, double largest);
};

HermitianEigen hermitian_eig(const ComplexMatrix& m);

/// One-sided (Hestenes) Jacobi SVD.
Svd svd(const ComplexMatrix& m);

RankTolerance default_tolerance(const ComplexMatrix& m);

ComplexMatrix pinv(const ComplexMatrix& m, RankTolerance tol);
ComplexMatrix pinv(const ComplexMatrix& m);

ComplexMatrix psd_sqrt(const ComplexMatrix& m);

ComplexMatrix range_projector(const ComplexMatrix& m, RankTolerance tol);
ComplexMatrix range_projector(const ComplexMatrix& m);

std::size_t numerical_rank(const ComplexMatrix& m, RankTolerance tol);

double spectral_norm(const ComplexMatrix& m);

/// Perron root of the entrywise-nonnegative matrix [[a, b], [c, d]].
double nonneg2x2_spectral_radius(double a, double b, double c, double d);

/// Smallest and largest eigenpairs of a Hermitian matrix.
///
/// Householder tridiagonalization followed by Sturm bisection; the vectors
/// come from inverse iteration on the dense matrix. This is the hot path of the
/// numerical-radius sweep, where only the extremes are needed.
struct ExtremePairs {
  double min_value = 0.0;
  double max_value = 0.0;
  CVector min_vector;
  CVector max_vector;
};

ExtremePairs hermitian_extremes(const ComplexMatrix& h);

/// (λmin, λmax) without the vectors.
std::pair<double, double> hermitian_extreme_values(const ComplexMatrix& h);

/// ‖M − M*‖_F
double hermitian_defect(const ComplexMatrix& m);

/// (M + M*) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// Columns of `basis` orthonormalized in order by modified Gram-Schmidt
/// (two passes). Columns that collapse are replaced with unit vectors
/// orthogonal to everything before them.
ComplexMatrix orthonormalize_columns(ComplexMatrix basis);

}  // namespace arad
