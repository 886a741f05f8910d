#include <doctest.h>

#include <cmath>
#include <random>

#include "arad/block.hpp"
#include "arad/error.hpp"
#include "arad/radius.hpp"
#include "oracle.hpp"

using namespace arad;

namespace {

oracle::Mat blocks(const oracle::Mat& a, const oracle::Mat& b, const oracle::Mat& c,
                   const oracle::Mat& d) {
  const Eigen::Index n = a.rows();
  oracle::Mat m(2 * n, 2 * n);
  m << a, b, c, d;
  return m;
}

ComplexMatrix in_LA(const FrameRef& f, std::uint64_t seed) {
  return generate(OperatorKind::in_LA, f, seed).matrix();
}

}  // namespace

TEST_CASE("lift builds diag(A, A)") {
  const FrameRef f = random_psd(3, 2, 4);
  const BlockFrame bf = lift(f);
  const ComplexMatrix z(3, 3);
  CHECK(bf.n() == 3);
  CHECK(bf.lifted->metric() == assemble2x2(f->metric(), z, z, f->metric()));
  CHECK((bf.lifted->projector() - assemble2x2(f->projector(), z, z, f->projector()))
            .frobenius_norm() < 1e-14);
}

TEST_CASE("block2: norms of diagonal and antidiagonal blocks") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const FrameRef f = random_psd(3, 1 + seed % 3, seed);
    const BlockFrame bf = lift(f);
    const ComplexMatrix t1 = in_LA(f, seed + 1), t2 = in_LA(f, seed + 2), z(3, 3);
    const oracle::Mat a = oracle::to_eigen(f->metric());
    const double m = std::max(oracle::a_norm(a, oracle::to_eigen(t1)),
                              oracle::a_norm(a, oracle::to_eigen(t2)));
    const Block2 d = block2(bf, t1, z, z, t2);
    const Block2 o = block2(bf, z, t1, t2, z);
    CHECK(d.blocks_in_LA);
    CHECK(op_seminorm(d.assembled) == doctest::Approx(m).epsilon(1e-9));
    CHECK(op_seminorm(o.assembled) == doctest::Approx(m).epsilon(1e-9));
  }

  const BlockFrame bf = lift(random_psd(2, 1, 3));
  const ComplexMatrix z(2, 2);
  const Block2 zero = block2(bf, z, z, z, z);
  CHECK(op_seminorm(zero.assembled) == 0.0);
  CHECK(a_numerical_radius(zero.assembled).upper < 1e-300);
  CHECK(a_spectral_radius(zero.assembled) == 0.0);
}

TEST_CASE("block2: dimension checks and membership flag") {
  const BlockFrame bf = lift(random_psd(2, 2, 1));
  const ComplexMatrix z(2, 2);
  try {
    block2(bf, z, z, z, ComplexMatrix(3, 3));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }

  const BlockFrame singular = lift(make_frame(ComplexMatrix::diagonal({1.0, 0.0})));
  const ComplexMatrix swap{{0, 1}, {1, 0}};
  const Block2 b = block2(singular, z, swap, z, z);
  CHECK_FALSE(b.blocks_in_LA);
  CHECK_FALSE(b.assembled.in_LA());
  CHECK_THROWS_AS(block_sharp(singular, b), Error);
}

TEST_CASE("block_sharp") {
  std::mt19937_64 rng(41);
  const BlockFrame id = lift(make_frame(ComplexMatrix::identity(2)));
  oracle::Mat g[4];
  for (auto& m : g) m = oracle::random_matrix(2, 2, rng);
  const Block2 b = block2(id, oracle::from_eigen(g[0]), oracle::from_eigen(g[1]),
                          oracle::from_eigen(g[2]), oracle::from_eigen(g[3]));
  CHECK(oracle::distance(block_sharp(id, b).assembled.matrix(),
                         blocks(g[0], g[1], g[2], g[3]).adjoint()) < 1e-14);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const FrameRef f = random_psd(3, 1 + seed % 3, seed);
    const BlockFrame bf = lift(f);
    const ComplexMatrix t1 = in_LA(f, 4 * seed), t2 = in_LA(f, 4 * seed + 1),
                        t3 = in_LA(f, 4 * seed + 2), t4 = in_LA(f, 4 * seed + 3), z(3, 3);
    const Block2 full = block2(bf, t1, t2, t3, t4);
    const ComplexMatrix direct = sharp_adjoint(full.assembled);
    const double scale = direct.frobenius_norm() * f->range_condition();
    CHECK((block_sharp(bf, full).assembled.matrix() - direct).frobenius_norm() <= 1e-10 * scale);
    const oracle::Mat ref = oracle::a_sharp(oracle::to_eigen(bf.lifted->metric()),
                                            oracle::to_eigen(full.assembled.matrix()));
    CHECK(oracle::distance(direct, ref) <= 1e-9 * scale);

    const Block2 diag = block_sharp(bf, block2(bf, t1, z, z, t4));
    CHECK((diag.t11 - sharp_adjoint(FramedOperator(f, t1))).frobenius_norm() == 0.0);
    CHECK(diag.t12.frobenius_norm() == 0.0);
    CHECK(diag.t21.frobenius_norm() == 0.0);
  }
}

TEST_CASE("special unitaries") {
  const FrameRef half = make_frame(ComplexMatrix::diagonal({1.0, 0.0}));
  const BlockFrame bf = lift(half);
  const FramedOperator h = special_unitary(bf, SpecialUnitary::hadamard);
  CHECK(classify(h).A_unitary);
  const ComplexMatrix p = ComplexMatrix::diagonal({1.0, 0.0}), z(2, 2);
  CHECK((sharp_adjoint(h) * h.matrix() - assemble2x2(p, z, z, p)).frobenius_norm() < 1e-12);
  CHECK((h.matrix() * sharp_adjoint(h) - assemble2x2(p, z, z, p)).frobenius_norm() < 1e-12);

  const FramedOperator s = special_unitary(lift(make_frame(ComplexMatrix::identity(2))),
                                           SpecialUnitary::swap);
  const ComplexMatrix i = ComplexMatrix::identity(2);
  CHECK(s.matrix() == assemble2x2(z, i, i, z));
  CHECK(classify(s).A_unitary);
  CHECK(to_string(SpecialUnitary::hadamard) == "hadamard");

  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const BlockFrame r = lift(random_psd(3, 1 + seed % 3, seed));
    CHECK(classify(special_unitary(r, SpecialUnitary::hadamard)).A_unitary);
    CHECK(classify(special_unitary(r, SpecialUnitary::swap)).A_unitary);
  }
}

TEST_CASE("hadamard conjugation of an antidiagonal block") {
  // U# [[0,T2],[T3,0]] U = [[X, Y], [−Y, −X]] with X = P(T2+T3)/2 and
  // Y = P(T2−T3)/2.
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const FrameRef f = random_psd(3, 1 + seed % 3, seed);
    const BlockFrame bf = lift(f);
    const ComplexMatrix t2 = in_LA(f, seed + 10), t3 = in_LA(f, seed + 20), z(3, 3);
    const FramedOperator u = special_unitary(bf, SpecialUnitary::hadamard);
    const ComplexMatrix conj = sharp_adjoint(u) * assemble2x2(z, t2, t3, z) * u.matrix();

    const oracle::Metric m = oracle::metric(oracle::to_eigen(f->metric()));
    const oracle::Mat x = 0.5 * m.projector * oracle::to_eigen(t2 + t3);
    const oracle::Mat y = 0.5 * m.projector * oracle::to_eigen(t2 - t3);
    CHECK(oracle::distance(conj, blocks(x, y, -y, -x)) <= 1e-10 * (x.norm() + y.norm()));
  }
}

TEST_CASE("circulant_power") {
  std::mt19937_64 rng(42);
  const ComplexMatrix t1 = oracle::from_eigen(oracle::random_matrix(3, 3, rng));
  const ComplexMatrix t2 = oracle::from_eigen(oracle::random_matrix(3, 3, rng));

  const CirculantPower one = circulant_power(t1, t2, 1);
  CHECK(one.p == t1);
  CHECK(one.q == t2);

  const CirculantPower cube = circulant_power(t1, ComplexMatrix(3, 3), 3);
  const oracle::Mat e1 = oracle::to_eigen(t1);
  CHECK(oracle::distance(cube.p, e1 * e1 * e1) <= 1e-12 * e1.norm() * e1.norm() * e1.norm());
  CHECK(cube.q.frobenius_norm() == 0.0);

  const CirculantPower four = circulant_power(t1, t2, 4);
  const oracle::Mat s = oracle::to_eigen(t1 + t2), d = oracle::to_eigen(t1 - t2);
  const oracle::Mat s4 = s * s * s * s, d4 = d * d * d * d;
  CHECK(oracle::distance(four.p + four.q, s4) <= 1e-9 * s4.norm());
  CHECK(oracle::distance(four.p - four.q, d4) <= 1e-9 * std::max(1.0, d4.norm()));

  CHECK_THROWS_AS(circulant_power(t1, ComplexMatrix(2, 2), 2), Error);
  CHECK_THROWS_AS(circulant_power(t1, t2, 0), Error);
}
