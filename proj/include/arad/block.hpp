#pragma once

#include <string_view>

#include "arad/frame.hpp"

namespace arad {

/// A base frame A and the lifted frame 𝔸 = diag(A, A).
struct BlockFrame {
  FrameRef base;
  FrameRef lifted;

  std::size_t n() const noexcept { return base->dim(); }
};

BlockFrame lift(const FrameRef& base);

/// [[t11, t12], [t21, t22]] over 𝔸.
struct Block2 {
  ComplexMatrix t11, t12, t21, t22;
  FramedOperator assembled;
  /// Every block is in 𝓛_A over the base frame.
  bool blocks_in_LA = false;
};

/// Throws DimensionMismatch unless all blocks are n x n.
Block2 block2(const BlockFrame& bf, const ComplexMatrix& t11, const ComplexMatrix& t12,
              const ComplexMatrix& t21, const ComplexMatrix& t22);

/// [[T11#, T21#], [T12#, T22#]]. Throws NotInLA if a block has no A-adjoint.
Block2 block_sharp(const BlockFrame& bf, const Block2& b);

enum class SpecialUnitary { hadamard, swap };

std::string_view to_string(SpecialUnitary kind);

/// hadamard: (1/√2)[[I, −I], [I, I]]; swap: [[0, I], [I, 0]].
FramedOperator special_unitary(const BlockFrame& bf, SpecialUnitary kind);

struct CirculantPower {
  ComplexMatrix p;  ///< diagonal block of [[T1, T2], [T2, T1]]^n
  ComplexMatrix q;  ///< off-diagonal block
};

/// Blocks of [[T1, T2], [T2, T1]]^n. Verifies P + Q = (T1 + T2)^n and
/// P − Q = (T1 − T2)^n to 1e-9 relative (PostconditionFailed otherwise).
/// Throws DimensionMismatch for unequal or non-square inputs, ConfigInvalid
/// for n = 0.
CirculantPower circulant_power(const ComplexMatrix& t1, const ComplexMatrix& t2, unsigned n);

}  // namespace arad
