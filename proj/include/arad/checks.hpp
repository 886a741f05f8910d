#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arad/block.hpp"
#include "arad/frame.hpp"
#include "arad/radius.hpp"

namespace arad {

/// Where an instance came from; enough to regenerate it.
struct Instance {
  std::uint64_t seed = 0;
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::size_t trial = 0;
};

/// One inequality instance in the normalized form lhs ≤ rhs.
/// Equalities are encoded as lhs = distance between the two sides (after
/// enclosure intersection), rhs = 0.
struct CheckResult {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  ///< rhs − lhs
  double tol_used = 0.0;
  bool pass = false;  ///< slack ≥ −tol_used
  /// A lower-bound check whose bound is ≤ 0 holds trivially.
  bool vacuous = false;
  /// Set when evaluating the check raised an error; such results never pass.
  std::string error;
  Instance inputs;
};

struct CheckTolerances {
  /// Relative tolerance of the catalog inequalities.
  double inequality = 1e-7;
  /// Relative tolerance of radius and norm identities.
  double identity = 1e-8;
  /// Relative tolerance of exact algebraic identities (adjoints, reductions).
  double algebra = 1e-10;
  /// Relative tolerance of anything that goes through the Gelfand iteration.
  double spectral = 1e-5;
};

/// Certified value [lo, hi]; plain floating-point values have lo == hi.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval point(double v) { return {v, v}; }
  double at(bool upper) const { return upper ? hi : lo; }
  double width() const { return hi - lo; }
};

/// Memoized w_A, ‖·‖_A and r_A of operators evaluated within one trial.
/// Not thread-safe; each worker owns its own.
class Quantities {
 public:
  explicit Quantities(RadiusConfig cfg = {}) : cfg_(cfg) {}

  Interval w(const FramedOperator& op);
  double norm(const FramedOperator& op);
  double r(const FramedOperator& op);

  const RadiusConfig& radius_config() const { return cfg_; }
  /// Widest relative enclosure width seen, and how many enclosures stopped
  /// at an evaluation cap before reaching the width target.
  double worst_width() const { return worst_width_; }
  std::size_t unconverged() const { return unconverged_; }

  using Key = std::pair<const PsdFrame*, std::vector<double>>;

 private:
  RadiusConfig cfg_;
  std::map<Key, Interval> w_;
  std::map<Key, double> norm_;
  std::map<Key, double> r_;
  double worst_width_ = 0.0;
  std::size_t unconverged_ = 0;
};

struct CheckContext {
  Quantities q;
  CheckTolerances tol;
};

/// ----- Catalog: 2x2 block inequalities over 𝔸 = diag(A, A) -----
/// All operator arguments are n x n over the base frame and must be in 𝓛_A
/// (NotInLA otherwise).

/// w([[0,T2],[T3,0]]) ≤ min(w(T2), w(T3)) + min(‖T2+T3‖, ‖T2−T3‖)/2
CheckResult check_offdiag_upper(const BlockFrame& bf, const ComplexMatrix& t2,
                                const ComplexMatrix& t3, CheckContext& ctx);
/// max(w(T2), w(T3)) − min(‖T2+T3‖, ‖T2−T3‖)/2 ≤ w([[0,T2],[T3,0]])
CheckResult check_offdiag_lower_a(const BlockFrame& bf, const ComplexMatrix& t2,
                                  const ComplexMatrix& t3, CheckContext& ctx);
/// max(‖T2+T3‖, ‖T2−T3‖)/2 − min(w(T2), w(T3)) ≤ w([[0,T2],[T3,0]])
CheckResult check_offdiag_lower_b(const BlockFrame& bf, const ComplexMatrix& t2,
                                  const ComplexMatrix& t3, CheckContext& ctx);
/// max(w(T2T3 + T3T2), w(T2T3 − T3T2))/2 ≤ w([[0,T2],[T3,0]])²
CheckResult check_offdiag_product_lower(const BlockFrame& bf, const ComplexMatrix& t2,
                                        const ComplexMatrix& t3, CheckContext& ctx);
/// max(w(T1), w(T4), √(w(T2T3 + T3T2)/2), √(w(T2T3 − T3T2)/2)) ≤ w([[T1,T2],[T3,T4]])
CheckResult check_fullblock_lower(const BlockFrame& bf, const ComplexMatrix& t1,
                                  const ComplexMatrix& t2, const ComplexMatrix& t3,
                                  const ComplexMatrix& t4, CheckContext& ctx);
/// max(w((T2T3)^n), w((T3T2)^n))^{1/(2n)} ≤ w([[0,T2],[T3,0]])
CheckResult check_offdiag_power_lower(const BlockFrame& bf, const ComplexMatrix& t2,
                                      const ComplexMatrix& t3, unsigned n, CheckContext& ctx);
/// With B = [[T1,T2],[−T2,−T1]]:
/// max(w(((T1−T2)(T1+T2))^n), w(((T1+T2)(T1−T2))^n))^{1/(2n)} ≤ w(B)
CheckResult check_pm_lower(const BlockFrame& bf, const ComplexMatrix& t1, const ComplexMatrix& t2,
                           unsigned n, CheckContext& ctx);
/// w(B) ≤ max(‖T1+T2‖, ‖T1−T2‖)/2 + √max(‖(T1+T2)(T1−T2)‖, ‖(T1−T2)(T1+T2)‖)/2
CheckResult check_pm_upper(const BlockFrame& bf, const ComplexMatrix& t1, const ComplexMatrix& t2,
                           CheckContext& ctx);
/// ‖B‖ = max(‖T1+T2‖, ‖T1−T2‖)
CheckResult check_pm_norm(const BlockFrame& bf, const ComplexMatrix& t1, const ComplexMatrix& t2,
                          CheckContext& ctx);
/// ‖B²‖ = max(‖(T1−T2)(T1+T2)‖, ‖(T1+T2)(T1−T2)‖)
CheckResult check_pm_square_norm(const BlockFrame& bf, const ComplexMatrix& t1,
                                 const ComplexMatrix& t2, CheckContext& ctx);
/// w(T1T2) ≤ (‖T2T1‖ + ‖T1‖‖T2‖)/2 over the base frame.
CheckResult check_product_upper(const FrameRef& frame, const ComplexMatrix& t1,
                                const ComplexMatrix& t2, CheckContext& ctx);

/// ----- Frame and adjoint properties -----

/// reduced(TS) = reduced(T) reduced(S)
CheckResult prop_reduction_homomorphism(const FramedOperator& t, const FramedOperator& s,
                                        CheckContext& ctx);
/// (T#)# = P T P
CheckResult prop_double_sharp(const FramedOperator& t, CheckContext& ctx);
/// ‖T#T‖ = ‖TT#‖ = ‖T‖² = ‖T#‖² (lhs is the spread of the four values)
CheckResult prop_sharp_norm_chain(const FramedOperator& t, CheckContext& ctx);
/// (TS)# = S#T# and (T+S)# = T# + S# (lhs is the larger defect)
CheckResult prop_sharp_algebra(const FramedOperator& t, const FramedOperator& s,
                               CheckContext& ctx);
/// ‖TS‖ ≤ ‖T‖‖S‖
CheckResult prop_submultiplicative(const FramedOperator& t, const FramedOperator& s,
                                   CheckContext& ctx);
/// ‖Tx‖_A ≤ ‖T‖_A ‖x‖_A
CheckResult prop_vector_bound(const FramedOperator& t, std::span<const cplx> x,
                              CheckContext& ctx);
/// |<x, y>_A| ≤ ‖x‖_A ‖y‖_A
CheckResult prop_cauchy_schwarz(const PsdFrame& frame, std::span<const cplx> x,
                                std::span<const cplx> y, CheckContext& ctx);
/// <x, y>_A = conj(<y, x>_A)
CheckResult prop_conjugate_symmetry(const PsdFrame& frame, std::span<const cplx> x,
                                    std::span<const cplx> y, CheckContext& ctx);
/// reduced(T#) = reduced(T)*
CheckResult prop_reduced_sharp(const FramedOperator& t, CheckContext& ctx);

/// ----- Radius properties -----

/// ‖T‖/2 ≤ w(T)
CheckResult prop_sandwich_lower(const FramedOperator& t, CheckContext& ctx);
/// w(T) ≤ ‖T‖
CheckResult prop_sandwich_upper(const FramedOperator& t, CheckContext& ctx);
/// w(T) = ‖T‖ for A-selfadjoint T
CheckResult prop_selfadjoint_norm(const FramedOperator& t, CheckContext& ctx);
/// w(T) = r(T) for A-selfadjoint T
CheckResult prop_selfadjoint_spectral(const FramedOperator& t, CheckContext& ctx);
/// w(T^n) ≤ w(T)^n
CheckResult prop_power_inequality(const FramedOperator& t, unsigned n, CheckContext& ctx);
/// w(T#) = w(T)
CheckResult prop_adjoint_invariance(const FramedOperator& t, CheckContext& ctx);
/// w(U#TU) = w(T) for A-unitary U
CheckResult prop_weak_unitary_invariance(const FramedOperator& t, const FramedOperator& u,
                                         CheckContext& ctx);
/// r(TS) = r(ST)
CheckResult prop_spectral_commutativity(const FramedOperator& t, const FramedOperator& s,
                                        CheckContext& ctx);
/// w(T) = ‖T‖/2 when AT² = 0
CheckResult prop_square_zero_radius(const FramedOperator& t, CheckContext& ctx);
/// w(T) ≤ (‖T‖ + ‖T²‖^{1/2})/2
CheckResult prop_square_root_bound(const FramedOperator& t, CheckContext& ctx);
/// r(T) ≤ w(T)
CheckResult prop_spectral_below_numerical(const FramedOperator& t, CheckContext& ctx);
/// Sampled supremum ≤ certified upper end.
CheckResult prop_sampled_below_enclosure(const FramedOperator& t, CheckContext& ctx);
/// Re_A(T) + i Im_A(T) = T, and both parts are A-selfadjoint (lhs counts
/// violations plus the reconstruction defect).
CheckResult prop_cartesian_parts(const FramedOperator& t, CheckContext& ctx);

/// ----- Block properties -----

/// w(diag(T1, T2)) = max(w(T1), w(T2))
CheckResult prop_diag_block_radius(const BlockFrame& bf, const ComplexMatrix& t1,
                                   const ComplexMatrix& t2, CheckContext& ctx);
/// w([[0,T1],[T2,0]]) = w([[0,T2],[T1,0]])
CheckResult prop_offdiag_swap(const BlockFrame& bf, const ComplexMatrix& t1,
                              const ComplexMatrix& t2, CheckContext& ctx);
/// w([[0,T1],[e^{iθ}T2,0]]) = w([[0,T1],[T2,0]])
CheckResult prop_offdiag_phase(const BlockFrame& bf, const ComplexMatrix& t1,
                               const ComplexMatrix& t2, double theta, CheckContext& ctx);
/// w([[T1,T2],[T2,T1]]) = max(w(T1+T2), w(T1−T2))
CheckResult prop_circulant_radius(const BlockFrame& bf, const ComplexMatrix& t1,
                                  const ComplexMatrix& t2, CheckContext& ctx);
/// w([[0,T],[T,0]]) = w(T)
CheckResult prop_offdiag_equal_radius(const BlockFrame& bf, const ComplexMatrix& t,
                                      CheckContext& ctx);
/// w(diag(T1, T4)) ≤ w([[T1,T2],[T3,T4]])
CheckResult prop_pinching_diag(const BlockFrame& bf, const ComplexMatrix& t1,
                               const ComplexMatrix& t2, const ComplexMatrix& t3,
                               const ComplexMatrix& t4, CheckContext& ctx);
/// w([[0,T2],[T3,0]]) ≤ w([[T1,T2],[T3,T4]])
CheckResult prop_pinching_offdiag(const BlockFrame& bf, const ComplexMatrix& t1,
                                  const ComplexMatrix& t2, const ComplexMatrix& t3,
                                  const ComplexMatrix& t4, CheckContext& ctx);
/// w([[T,T],[−T,−T]]) = ‖T‖
CheckResult prop_square_zero_block_radius(const BlockFrame& bf, const ComplexMatrix& t,
                                          CheckContext& ctx);
/// 𝔸 [[T,T],[−T,−T]]² = 0
CheckResult prop_square_zero_block_square(const BlockFrame& bf, const ComplexMatrix& t,
                                          CheckContext& ctx);
/// r(block) ≤ Perron root of [‖Tij‖]
CheckResult prop_block_spectral_domination(const BlockFrame& bf, const ComplexMatrix& t1,
                                           const ComplexMatrix& t2, const ComplexMatrix& t3,
                                           const ComplexMatrix& t4, CheckContext& ctx);
/// ‖diag(T1, T4)‖ = max(‖T1‖, ‖T4‖)
CheckResult prop_block_norm_diag(const BlockFrame& bf, const ComplexMatrix& t1,
                                 const ComplexMatrix& t4, CheckContext& ctx);
/// ‖[[0,T2],[T3,0]]‖ = max(‖T2‖, ‖T3‖)
CheckResult prop_block_norm_offdiag(const BlockFrame& bf, const ComplexMatrix& t2,
                                    const ComplexMatrix& t3, CheckContext& ctx);
/// Block adjoint formula agrees with the adjoint of the assembled operator.
CheckResult prop_block_sharp(const BlockFrame& bf, const ComplexMatrix& t1,
                             const ComplexMatrix& t2, const ComplexMatrix& t3,
                             const ComplexMatrix& t4, CheckContext& ctx);
/// Hadamard and swap unitaries satisfy U#U = UU# = diag(P, P) (lhs is the
/// larger defect).
CheckResult prop_special_unitaries(const BlockFrame& bf, CheckContext& ctx);
/// P ± Q = (T1 ± T2)^n for the blocks of [[T1,T2],[T2,T1]]^n.
CheckResult prop_circulant_power(const ComplexMatrix& t1, const ComplexMatrix& t2, unsigned n,
                                 CheckContext& ctx);

}  // namespace arad
