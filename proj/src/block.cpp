#include "arad/block.hpp"

#include <algorithm>
#include <cmath>

#include "arad/error.hpp"

namespace arad {

namespace {

void require_block(const ComplexMatrix& m, std::size_t n) {
  if (m.rows() != n || m.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "block does not match base dimension");
}

}  // namespace

BlockFrame lift(const FrameRef& base) { return {base, base->doubled()}; }

Block2 block2(const BlockFrame& bf, const ComplexMatrix& t11, const ComplexMatrix& t12,
              const ComplexMatrix& t21, const ComplexMatrix& t22) {
  const std::size_t n = bf.n();
  for (const ComplexMatrix* m : {&t11, &t12, &t21, &t22}) require_block(*m, n);
  bool all = true;
  for (const ComplexMatrix* m : {&t11, &t12, &t21, &t22})
    all = all && FramedOperator(bf.base, *m).in_LA();
  return Block2{t11, t12, t21, t22, FramedOperator(bf.lifted, assemble2x2(t11, t12, t21, t22)),
                all};
}

Block2 block_sharp(const BlockFrame& bf, const Block2& b) {
  auto s = [&](const ComplexMatrix& m) { return sharp_adjoint(FramedOperator(bf.base, m)); };
  return block2(bf, s(b.t11), s(b.t21), s(b.t12), s(b.t22));
}

std::string_view to_string(SpecialUnitary kind) {
  return kind == SpecialUnitary::hadamard ? "hadamard" : "swap";
}

FramedOperator special_unitary(const BlockFrame& bf, SpecialUnitary kind) {
  const std::size_t n = bf.n();
  const ComplexMatrix i = ComplexMatrix::identity(n);
  const ComplexMatrix z(n, n);
  if (kind == SpecialUnitary::swap) return FramedOperator(bf.lifted, assemble2x2(z, i, i, z));
  return FramedOperator(bf.lifted, cplx(1.0 / std::sqrt(2.0)) * assemble2x2(i, -i, i, i));
}

CirculantPower circulant_power(const ComplexMatrix& t1, const ComplexMatrix& t2, unsigned n) {
  if (!t1.square() || t1.rows() != t2.rows() || t1.cols() != t2.cols())
    throw Error(ErrorCode::DimensionMismatch, "circulant blocks must be square and equal in size");
  if (n == 0) throw Error(ErrorCode::ConfigInvalid, "power must be at least 1");
  const std::size_t m = t1.rows();
  const ComplexMatrix big = power(assemble2x2(t1, t2, t2, t1), n);
  CirculantPower out{big.block(0, 0, m, m), big.block(0, m, m, m)};

  const ComplexMatrix sum = power(t1 + t2, n);
  const ComplexMatrix diff = power(t1 - t2, n);
  const double scale = std::max({1.0, sum.frobenius_norm(), diff.frobenius_norm()});
  const double e1 = (out.p + out.q - sum).frobenius_norm();
  const double e2 = (out.p - out.q - diff).frobenius_norm();
  if (e1 > 1e-9 * scale || e2 > 1e-9 * scale)
    throw Error(ErrorCode::PostconditionFailed, "circulant power identities violated");
  return out;
}

}  // namespace arad
