#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "arad/linalg.hpp"
#include "arad/matrix.hpp"

namespace arad {

class PsdFrame;
using FrameRef = std::shared_ptr<const PsdFrame>;

/// A positive semidefinite metric A together with everything derived from its
/// spectral decomposition. Immutable once built; share it through FrameRef.
///
/// Range coordinates: with Q the orthonormal eigenbasis of R(A) and Λ the
/// matching positive eigenvalues, an operator T is represented by
/// C = Λ^{1/2} Q* T Q Λ^{-1/2}. Seminorms, numerical radii and spectral radii
/// of T under A are the classical quantities of C.
class PsdFrame {
 public:
  std::size_t dim() const noexcept { return a_.rows(); }
  std::size_t rank() const noexcept { return lambda_.size(); }

  const ComplexMatrix& metric() const noexcept { return a_; }
  const ComplexMatrix& sqrt_metric() const noexcept { return sqrt_a_; }
  const ComplexMatrix& pinv_sqrt_metric() const noexcept { return pinv_sqrt_a_; }
  const ComplexMatrix& pinv_metric() const noexcept { return pinv_a_; }
  const ComplexMatrix& projector() const noexcept { return projector_; }
  /// dim x rank, orthonormal columns spanning R(A)
  const ComplexMatrix& range_basis() const noexcept { return q_; }
  /// dim x (dim - rank), orthonormal columns spanning N(A)
  const ComplexMatrix& null_basis() const noexcept { return n_; }
  /// Positive eigenvalues matching the columns of range_basis().
  std::span<const double> range_eigenvalues() const noexcept { return lambda_; }
  RankTolerance tolerance() const noexcept { return tol_; }
  /// ‖A‖ (largest eigenvalue; 0 for the zero metric)
  double metric_norm() const noexcept;
  /// ‖A‖ ‖A†‖ (1 for the zero metric)
  double range_condition() const noexcept;

  /// Range coordinates of T (rank x rank).
  ComplexMatrix compress(const ComplexMatrix& t) const;
  /// Inverse of compress on operators acting inside R(A): Q Λ^{-1/2} C Λ^{1/2} Q*.
  ComplexMatrix expand(const ComplexMatrix& c) const;

  /// diag(A, A), assembled from this frame's decomposition without
  /// re-factoring.
  FrameRef doubled() const;

  friend FrameRef make_frame(const ComplexMatrix& a);

 private:
  PsdFrame() = default;
  void finish();

  ComplexMatrix a_;
  ComplexMatrix q_;
  ComplexMatrix n_;
  std::vector<double> lambda_;
  RankTolerance tol_;
  ComplexMatrix sqrt_a_;
  ComplexMatrix pinv_sqrt_a_;
  ComplexMatrix pinv_a_;
  ComplexMatrix projector_;
};

/// Throws NotSquare, NotHermitian or NotPsd. Eigenvalues in the window
/// [-τ_rank, τ_rank] are treated as zero.
FrameRef make_frame(const ComplexMatrix& a);

/// A = B*B with B of the given rank. Range eigenvalues lie in [0.01, 9].
FrameRef random_psd(std::size_t dim, std::size_t rank, std::uint64_t seed);

/// <x, y>_A = <Ax, y>
cplx semi_inner(const PsdFrame& frame, std::span<const cplx> x, std::span<const cplx> y);
double semi_norm(const PsdFrame& frame, std::span<const cplx> x);

/// An operator bound to a frame, with its range coordinates and the two
/// membership tests computed up front.
class FramedOperator {
 public:
  FramedOperator(FrameRef frame, ComplexMatrix t);

  const PsdFrame& frame() const noexcept { return *frame_; }
  const FrameRef& frame_ref() const noexcept { return frame_; }
  const ComplexMatrix& matrix() const noexcept { return t_; }
  std::size_t dim() const noexcept { return t_.rows(); }

  /// A^{1/2} T (A^{1/2})†
  const ComplexMatrix& reduced() const noexcept { return reduced_; }
  /// Range coordinates (see PsdFrame).
  const ComplexMatrix& compressed() const noexcept { return compressed_; }

  /// T maps N(A) into N(A), i.e. ‖T‖_A is finite.
  bool in_LA_half() const noexcept { return bounded_defect_ <= tau_member_; }
  /// R(T*A) ⊆ R(A), i.e. T has an A-adjoint. In finite dimensions this is
  /// the same subspace as in_LA_half(); both defects must be small so the
  /// inclusion survives roundoff when A is badly scaled.
  bool in_LA() const noexcept {
    return adjoint_defect_ <= tau_member_ && bounded_defect_ <= tau_member_;
  }

  /// ‖A^{1/2} T (I − P)‖_F
  double bounded_defect() const noexcept { return bounded_defect_; }
  /// ‖(I − P) T* A‖_F
  double adjoint_defect() const noexcept { return adjoint_defect_; }
  /// 1e-8 · (1 + ‖T‖_F ‖A‖)
  double member_tolerance() const noexcept { return tau_member_; }

  /// Throws NotABounded unless in_LA_half().
  void require_bounded() const;
  /// Throws NotInLA unless in_LA().
  void require_in_LA() const;

 private:
  FrameRef frame_;
  ComplexMatrix t_;
  ComplexMatrix compressed_;
  ComplexMatrix reduced_;
  double bounded_defect_ = 0.0;
  double adjoint_defect_ = 0.0;
  double tau_member_ = 0.0;
};

/// ‖T‖_A. Throws NotABounded.
double op_seminorm(const FramedOperator& op);

/// T^{#A} = A† T* A. Throws NotInLA.
ComplexMatrix sharp_adjoint(const FramedOperator& op);
FramedOperator sharp(const FramedOperator& op);

struct Classification {
  bool A_selfadjoint = false;
  bool A_positive = false;
  bool A_unitary = false;
};

Classification classify(const FramedOperator& op);

enum class OperatorKind { arbitrary, in_LA, A_selfadjoint, A_positive, nilpotent_AT2zero };

std::string_view to_string(OperatorKind kind);
/// Throws ConfigInvalid on an unknown name.
OperatorKind parse_operator_kind(std::string_view name);

/// Deterministic for (kind, frame, seed). Throws UnsatisfiableKind for
/// nilpotent_AT2zero on frames of rank < 2.
FramedOperator generate(OperatorKind kind, const FrameRef& frame, std::uint64_t seed);

/// Q Λ^{-1/2} W Λ^{1/2} Q* + (I − P) with W Haar unitary on the range.
FramedOperator generate_A_unitary(const FrameRef& frame, std::uint64_t seed);

}  // namespace arad
