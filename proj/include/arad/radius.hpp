#pragma once

#include <cstddef>
#include <cstdint>

#include "arad/frame.hpp"
#include "arad/matrix.hpp"

namespace arad {

struct RadiusConfig {
  /// Stop once upper − lower ≤ rel_width · max(1, upper).
  double rel_width = 1e-9;
  /// Uniform starting angles on [0, 2π); half of them are evaluated thanks to
  /// H(θ + π) = −H(θ).
  std::size_t initial_grid = 128;
  std::size_t refinement_rounds = 48;
  /// Cap on eigenproblems solved by one enclosure.
  std::size_t max_evaluations = std::size_t{1} << 17;
  std::size_t samples = 20000;
  std::uint64_t sample_seed = 0x5eed;
  unsigned gelfand_depth = 40;

  /// Throws ConfigInvalid unless every field is positive.
  void validate() const;
};

/// Certified interval for a numerical radius.
struct Enclosure {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t evaluations = 0;
  /// Number of supporting directions on the full circle.
  std::size_t grid_size = 0;
  /// False when the width target was not reached within the caps; the
  /// interval is still valid.
  bool converged = true;

  double width() const noexcept { return upper - lower; }
  double mid() const noexcept { return 0.5 * (lower + upper); }
  bool contains(double x, double slack = 0.0) const noexcept {
    return lower - slack <= x && x <= upper + slack;
  }
};

/// Classical numerical radius of a square matrix.
///
/// Each angle θ contributes the supporting line of W(C) in direction e^{−iθ}
/// (from λmax of cosθ·Re C − sinθ·Im C). The polygon cut out by the lines
/// contains W(C), so its farthest vertex gives the upper bound; the best
/// support value and the Rayleigh quotients of its eigenvectors give the
/// lower bound. Gaps whose vertex still sticks out are subdivided, into more
/// pieces the further out it sticks, since the overshoot shrinks like the
/// square of the gap.
Enclosure numerical_radius(const ComplexMatrix& c, const RadiusConfig& cfg = {});

/// Spectral radius by normalized repeated squaring: ‖C^{2^j}‖^{1/2^j}.
double gelfand_spectral_radius(const ComplexMatrix& c, unsigned depth = 40);

/// Re_A(e^{iθ}T) in reduced coordinates: (e^{iθ}Ã + e^{−iθ}Ã*)/2.
/// Throws NotABounded.
ComplexMatrix herm_part_at(const FramedOperator& op, double theta);

/// w_A(T). Throws NotABounded.
Enclosure a_numerical_radius(const FramedOperator& op, const RadiusConfig& cfg = {});

/// Best |<Tx, x>_A| / ‖x‖_A² over random x = Qy + Nz with Q, N bases of
/// R(A), N(A) and a small null part z (global Gaussian draws followed by a
/// local search from the best one). Defined for every T; always a lower
/// bound for w_A(T). Throws DegenerateFrame when A = 0.
double a_numerical_radius_sampled(const FramedOperator& op, const RadiusConfig& cfg = {});

/// r_A(T). Throws NotABounded.
double a_spectral_radius(const FramedOperator& op, const RadiusConfig& cfg = {});

/// (T + T^{#A})/2 and (T − T^{#A})/(2i). Throw NotInLA.
FramedOperator re_A(const FramedOperator& op);
FramedOperator im_A(const FramedOperator& op);

}  // namespace arad
