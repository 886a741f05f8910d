#include <doctest.h>

#include <cmath>
#include <random>

#include "arad/checks.hpp"
#include "arad/error.hpp"
#include "arad/suite.hpp"
#include "oracle.hpp"

using namespace arad;

namespace {

CheckContext context() { return CheckContext{Quantities(SuiteConfig::default_radius()), {}}; }

// Equality fixtures sit on the boundary: |slack| within twice the tolerance.
void check_tight(const CheckResult& r) {
  INFO(r.name << " lhs=" << r.lhs << " rhs=" << r.rhs << " tol=" << r.tol_used);
  CHECK(r.pass);
  CHECK(r.error.empty());
  CHECK(std::abs(r.slack) <= 2.0 * r.tol_used);
}

ComplexMatrix in_LA(const FrameRef& f, std::uint64_t seed) {
  return generate(OperatorKind::in_LA, f, seed).matrix();
}

const ComplexMatrix kShift{{0, 1}, {0, 0}};

}  // namespace

TEST_CASE("catalog equality fixtures") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const FrameRef f = random_psd(3, 1 + seed % 3, seed);
    const BlockFrame bf = lift(f);
    const ComplexMatrix t = in_LA(f, seed + 100), z(3, 3), i = ComplexMatrix::identity(3);
    CheckContext ctx = context();
    check_tight(check_offdiag_upper(bf, t, t, ctx));
    check_tight(check_offdiag_upper(bf, t, z, ctx));
    check_tight(check_offdiag_lower_a(bf, t, t, ctx));
    check_tight(check_offdiag_lower_a(bf, t, -t, ctx));
    check_tight(check_offdiag_lower_b(bf, t, z, ctx));
    check_tight(check_offdiag_product_lower(bf, i, i, ctx));
    check_tight(check_offdiag_power_lower(bf, i, i, 1, ctx));
    check_tight(check_fullblock_lower(bf, t, z, z, in_LA(f, seed + 200), ctx));
    check_tight(check_pm_upper(bf, t, t, ctx));
    check_tight(check_pm_norm(bf, t, in_LA(f, seed + 300), ctx));
    check_tight(check_pm_square_norm(bf, t, in_LA(f, seed + 300), ctx));
    check_tight(check_product_upper(f, i, i, ctx));
  }
}

TEST_CASE("offdiag_product_lower against a small hand instance") {
  // A = I, T2 = shift, T3 = T2*: the block is a weighted shift on C⁴ and
  // T2T3 ± T3T2 are diag(1, ±1) and diag(1, −1).
  const FrameRef f = make_frame(ComplexMatrix::identity(2));
  CheckContext ctx = context();
  const CheckResult r = check_offdiag_product_lower(lift(f), kShift, kShift.adjoint(), ctx);
  CHECK(r.pass);
  CHECK(r.lhs == doctest::Approx(0.5).epsilon(1e-9));
  oracle::Mat b = oracle::Mat::Zero(4, 4);
  b.topRightCorner(2, 2) = oracle::to_eigen(kShift);
  b.bottomLeftCorner(2, 2) = oracle::to_eigen(kShift.adjoint());
  const double w = oracle::numerical_radius(b);
  CHECK(r.rhs == doctest::Approx(w * w).epsilon(1e-9));
}

TEST_CASE("vacuous lower bounds are tagged") {
  // T2 = shift, T3 = i·shift: max w = 1/2 while min ‖T2 ± T3‖/2 = 1/√2.
  const BlockFrame bf = lift(make_frame(ComplexMatrix::identity(2)));
  const ComplexMatrix t3 = cplx(0, 1) * kShift;
  CheckContext ctx = context();
  const CheckResult a = check_offdiag_lower_a(bf, kShift, t3, ctx);
  CHECK(a.vacuous);
  CHECK(a.pass);
  CHECK(a.lhs < 0.0);
  const CheckResult b = check_offdiag_lower_b(bf, kShift, t3, ctx);
  CHECK_FALSE(b.vacuous);
  CHECK(b.pass);
  CHECK(std::abs(b.lhs - (std::sqrt(0.5) - 0.5)) <= b.tol_used);
}

TEST_CASE("catalog errors") {
  const BlockFrame bf = lift(make_frame(ComplexMatrix::diagonal({1.0, 0.0})));
  const ComplexMatrix swap{{0, 1}, {1, 0}}, i = ComplexMatrix::identity(2);
  CheckContext ctx = context();
  try {
    check_offdiag_upper(bf, swap, i, ctx);
    FAIL("expected NotInLA");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInLA);
  }
  CHECK_THROWS_AS(check_product_upper(bf.base, i, swap, ctx), Error);
  CHECK_THROWS_AS(check_offdiag_power_lower(bf, i, i, 0, ctx), Error);
  CHECK_THROWS_AS(check_pm_lower(bf, i, i, 0, ctx), Error);
}

TEST_CASE("checks are monotone in tolerance") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const FrameRef f = random_psd(3, 1 + seed % 3, seed);
    const BlockFrame bf = lift(f);
    const ComplexMatrix t2 = in_LA(f, seed + 1), t3 = in_LA(f, seed + 2);
    double prev_tol = -1.0;
    bool passed = false;
    for (double rel : {0.0, 1e-12, 1e-9, 1e-7, 1e-3}) {
      CheckContext ctx = context();
      ctx.tol.inequality = rel;
      const CheckResult r = check_offdiag_upper(bf, t2, t3, ctx);
      CHECK(r.tol_used >= prev_tol);
      if (passed) CHECK(r.pass);
      passed = r.pass;
      prev_tol = r.tol_used;
    }
    CHECK(passed);
  }
}

TEST_CASE("A = I agrees with classical computations") {
  std::mt19937_64 rng(51);
  const FrameRef f = make_frame(ComplexMatrix::identity(3));
  const BlockFrame bf = lift(f);
  for (int trial = 0; trial < 8; ++trial) {
    const oracle::Mat e2 = oracle::random_matrix(3, 3, rng), e3 = oracle::random_matrix(3, 3, rng);
    const ComplexMatrix t2 = oracle::from_eigen(e2), t3 = oracle::from_eigen(e3);
    const oracle::Mat z = oracle::Mat::Zero(3, 3);
    oracle::Mat b(6, 6);
    b << z, e2, e3, z;
    const double wb = oracle::numerical_radius(b);
    const double w2 = oracle::numerical_radius(e2), w3 = oracle::numerical_radius(e3);
    const double ns = oracle::norm(e2 + e3), nd = oracle::norm(e2 - e3);
    CheckContext ctx = context();

    const CheckResult up = check_offdiag_upper(bf, t2, t3, ctx);
    CHECK(std::abs(up.lhs - wb) <= up.tol_used);
    CHECK(std::abs(up.rhs - (std::min(w2, w3) + 0.5 * std::min(ns, nd))) <= up.tol_used);

    const CheckResult lb = check_offdiag_lower_b(bf, t2, t3, ctx);
    CHECK(std::abs(lb.lhs - (0.5 * std::max(ns, nd) - std::min(w2, w3))) <= lb.tol_used);

    const CheckResult pu = check_product_upper(f, t2, t3, ctx);
    CHECK(std::abs(pu.lhs - oracle::numerical_radius(e2 * e3)) <= pu.tol_used);
    CHECK(std::abs(pu.rhs - 0.5 * (oracle::norm(e3 * e2) + oracle::norm(e2) * oracle::norm(e3))) <=
          pu.tol_used);

    oracle::Mat pm(6, 6);
    pm << e2, e3, -e3, -e2;
    const CheckResult pn = check_pm_norm(bf, t2, t3, ctx);
    CHECK(pn.pass);
    CHECK(std::abs(oracle::norm(pm) - std::max(ns, nd)) <= 1e-9 * std::max(ns, nd));
    const CheckResult pupper = check_pm_upper(bf, t2, t3, ctx);
    CHECK(std::abs(pupper.lhs - oracle::numerical_radius(pm)) <= pupper.tol_used);
  }
}

TEST_CASE("every check and property holds on generated instances") {
  SuiteConfig cfg;
  for (std::size_t dim : {1u, 2u, 3u})
    for (std::size_t trial = 0; trial < 4; ++trial) {
      const UnitOutcome u = run_unit(cfg, dim, trial);
      CHECK_FALSE(u.results.empty());
      for (const CheckResult& r : u.results) {
        INFO(r.name << " dim=" << dim << " trial=" << trial << " slack=" << r.slack
                    << " tol=" << r.tol_used << " " << r.error);
        CHECK(r.pass);
        CHECK(std::isfinite(r.lhs));
        CHECK(std::isfinite(r.rhs));
        CHECK(r.pass == (r.slack >= -r.tol_used));
      }
    }
}

TEST_CASE("run_unit is deterministic") {
  SuiteConfig cfg;
  const UnitOutcome a = run_unit(cfg, 3, 7), b = run_unit(cfg, 3, 7);
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t k = 0; k < a.results.size(); ++k) {
    CHECK(a.results[k].name == b.results[k].name);
    CHECK(a.results[k].lhs == b.results[k].lhs);
    CHECK(a.results[k].rhs == b.results[k].rhs);
  }
}
