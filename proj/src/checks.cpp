#include "arad/checks.hpp"

#include <algorithm>
#include <cmath>

#include "arad/error.hpp"
#include "arad/linalg.hpp"

namespace arad {

namespace {

CheckResult make_result(std::string name, double lhs, double rhs, double tol) {
  CheckResult r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tol_used = tol;
  r.pass = r.slack >= -tol;
  return r;
}

double scale_of(std::initializer_list<double> values) {
  double s = 1.0;
  for (double v : values) s = std::max(s, std::abs(v));
  return s;
}

// lhs ≤ rhs where f(upper) evaluates both sides with every certified term at
// its upper (or lower) end. The reported sides use upper ends; the spread
// between the two evaluations is added to the tolerance.
template <class F>
CheckResult inequality(std::string name, F f, double rel) {
  const auto [lu, ru] = f(true);
  const auto [ll, rl] = f(false);
  const double tol = rel * scale_of({lu, ru}) + std::abs(lu - ll) + std::abs(ru - rl);
  return make_result(std::move(name), lu, ru, tol);
}

// a = b as intersecting intervals.
CheckResult identity(std::string name, Interval a, Interval b, double rel) {
  const double gap = std::max({0.0, a.lo - b.hi, b.lo - a.hi});
  return make_result(std::move(name), gap, 0.0, rel * scale_of({a.hi, b.hi}));
}

CheckResult defect(std::string name, double d, double scale, double rel) {
  return make_result(std::move(name), d, 0.0, rel * std::max(1.0, scale));
}

Interval imax(Interval a, Interval b) { return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)}; }

FramedOperator in_la(const FrameRef& frame, const ComplexMatrix& m) {
  FramedOperator op(frame, m);
  op.require_in_LA();
  return op;
}

FramedOperator offdiag(const BlockFrame& bf, const ComplexMatrix& t2, const ComplexMatrix& t3) {
  const ComplexMatrix z(bf.n(), bf.n());
  return FramedOperator(bf.lifted, assemble2x2(z, t2, t3, z));
}

FramedOperator pm_block(const BlockFrame& bf, const ComplexMatrix& t1, const ComplexMatrix& t2) {
  return FramedOperator(bf.lifted, assemble2x2(t1, t2, -t2, -t1));
}

Quantities::Key key_of(const FramedOperator& op) {
  std::vector<double> flat;
  flat.reserve(2 * op.matrix().data().size());
  for (const cplx& v : op.matrix().data()) {
    flat.push_back(v.real());
    flat.push_back(v.imag());
  }
  return {&op.frame(), std::move(flat)};
}

}  // namespace

Interval Quantities::w(const FramedOperator& op) {
  Key k = key_of(op);
  if (auto it = w_.find(k); it != w_.end()) return it->second;
  const Enclosure e = a_numerical_radius(op, cfg_);
  worst_width_ = std::max(worst_width_, e.width() / std::max(1.0, e.upper));
  if (!e.converged) ++unconverged_;
  return w_.emplace(std::move(k), Interval{e.lower, e.upper}).first->second;
}

double Quantities::norm(const FramedOperator& op) {
  Key k = key_of(op);
  if (auto it = norm_.find(k); it != norm_.end()) return it->second;
  return norm_.emplace(std::move(k), op_seminorm(op)).first->second;
}

double Quantities::r(const FramedOperator& op) {
  Key k = key_of(op);
  if (auto it = r_.find(k); it != r_.end()) return it->second;
  return r_.emplace(std::move(k), a_spectral_radius(op, cfg_)).first->second;
}

// ----- catalog -----

CheckResult check_offdiag_upper(const BlockFrame& bf, const ComplexMatrix& t2,
                                const ComplexMatrix& t3, CheckContext& ctx) {
  auto& q = ctx.q;
  const Interval w2 = q.w(in_la(bf.base, t2));
  const Interval w3 = q.w(in_la(bf.base, t3));
  const double m = std::min(q.norm(FramedOperator(bf.base, t2 + t3)),
                            q.norm(FramedOperator(bf.base, t2 - t3)));
  const Interval wb = q.w(offdiag(bf, t2, t3));
  return inequality(
      "offdiag_upper",
      [&](bool up) {
        return std::pair{wb.at(up), std::min(w2.at(up), w3.at(up)) + 0.5 * m};
      },
      ctx.tol.inequality);
}

CheckResult check_offdiag_lower_a(const BlockFrame& bf, const ComplexMatrix& t2,
                                  const ComplexMatrix& t3, CheckContext& ctx) {
  auto& q = ctx.q;
  const Interval w2 = q.w(in_la(bf.base, t2));
  const Interval w3 = q.w(in_la(bf.base, t3));
  const double m = std::min(q.norm(FramedOperator(bf.base, t2 + t3)),
                            q.norm(FramedOperator(bf.base, t2 - t3)));
  const Interval wb = q.w(offdiag(bf, t2, t3));
  CheckResult r = inequality(
      "offdiag_lower_a",
      [&](bool up) {
        return std::pair{std::max(w2.at(up), w3.at(up)) - 0.5 * m, wb.at(up)};
      },
      ctx.tol.inequality);
  r.vacuous = r.lhs <= 0.0;
  return r;
}

CheckResult check_offdiag_lower_b(const BlockFrame& bf, const ComplexMatrix& t2,
                                  const ComplexMatrix& t3, CheckContext& ctx) {
  auto& q = ctx.q;
  const Interval w2 = q.w(in_la(bf.base, t2));
  const Interval w3 = q.w(in_la(bf.base, t3));
  const double m = std::max(q.norm(FramedOperator(bf.base, t2 + t3)),
                            q.norm(FramedOperator(bf.base, t2 - t3)));
  const Interval wb = q.w(offdiag(bf, t2, t3));
  CheckResult r = inequality(
      "offdiag_lower_b",
      [&](bool up) {
        return std::pair{0.5 * m - std::min(w2.at(up), w3.at(up)), wb.at(up)};
      },
      ctx.tol.inequality);
  r.vacuous = r.lhs <= 0.0;
  return r;
}

CheckResult check_offdiag_product_lower(const BlockFrame& bf, const ComplexMatrix& t2,
                                        const ComplexMatrix& t3, CheckContext& ctx) {
  auto& q = ctx.q;
  in_la(bf.base, t2);
  in_la(bf.base, t3);
  const ComplexMatrix p23 = t2 * t3;
  const ComplexMatrix p32 = t3 * t2;
  const Interval anti = q.w(FramedOperator(bf.base, p23 + p32));
  const Interval comm = q.w(FramedOperator(bf.base, p23 - p32));
  const Interval wb = q.w(offdiag(bf, t2, t3));
  return inequality(
      "offdiag_product_lower",
      [&](bool up) {
        return std::pair{0.5 * std::max(anti.at(up), comm.at(up)), wb.at(up) * wb.at(up)};
      },
      ctx.tol.inequality);
}

CheckResult check_fullblock_lower(const BlockFrame& bf, const ComplexMatrix& t1,
                                  const ComplexMatrix& t2, const ComplexMatrix& t3,
                                  const ComplexMatrix& t4, CheckContext& ctx) {
  auto& q = ctx.q;
  const Interval w1 = q.w(in_la(bf.base, t1));
  in_la(bf.base, t2);
  in_la(bf.base, t3);
  const Interval w4 = q.w(in_la(bf.base, t4));
  const ComplexMatrix p23 = t2 * t3;
  const ComplexMatrix p32 = t3 * t2;
  const Interval anti = q.w(FramedOperator(bf.base, p23 + p32));
  const Interval comm = q.w(FramedOperator(bf.base, p23 - p32));
  const Interval wb = q.w(FramedOperator(bf.lifted, assemble2x2(t1, t2, t3, t4)));
  return inequality(
      "fullblock_lower",
      [&](bool up) {
        const double lhs = std::max({w1.at(up), w4.at(up), std::sqrt(0.5 * anti.at(up)),
                                     std::sqrt(0.5 * comm.at(up))});
        return std::pair{lhs, wb.at(up)};
      },
      ctx.tol.inequality);
}

CheckResult check_offdiag_power_lower(const BlockFrame& bf, const ComplexMatrix& t2,
                                      const ComplexMatrix& t3, unsigned n, CheckContext& ctx) {
  if (n == 0) throw Error(ErrorCode::ConfigInvalid, "power must be at least 1");
  auto& q = ctx.q;
  in_la(bf.base, t2);
  in_la(bf.base, t3);
  const Interval a = q.w(FramedOperator(bf.base, power(t2 * t3, n)));
  const Interval b = q.w(FramedOperator(bf.base, power(t3 * t2, n)));
  const Interval wb = q.w(offdiag(bf, t2, t3));
  const double e = 1.0 / (2.0 * n);
  return inequality(
      "offdiag_power_lower_n" + std::to_string(n),
      [&](bool up) { return std::pair{std::pow(std::max(a.at(up), b.at(up)), e), wb.at(up)}; },
      ctx.tol.inequality);
}

CheckResult check_pm_lower(const BlockFrame& bf, const ComplexMatrix& t1, const ComplexMatrix& t2,
                           unsigned n, CheckContext& ctx) {
  if (n == 0) throw Error(ErrorCode::ConfigInvalid, "power must be at least 1");
  auto& q = ctx.q;
  in_la(bf.base, t1);
  in_la(bf.base, t2);
  const ComplexMatrix s = t1 + t2;
  const ComplexMatrix d = t1 - t2;
  const Interval a = q.w(FramedOperator(bf.base, power(d * s, n)));
  const Interval b = q.w(FramedOperator(bf.base, power(s * d, n)));
  const Interval wb = q.w(pm_block(bf, t1, t2));
  const double e = 1.0 / (2.0 * n);
  return inequality(
      "pm_lower_n" + std::to_string(n),
      [&](bool up) { return std::pair{std::pow(std::max(a.at(up), b.at(up)), e), wb.at(up)}; },
      ctx.tol.inequality);
}

CheckResult check_pm_upper(const BlockFrame& bf, const ComplexMatrix& t1, const ComplexMatrix& t2,
                           CheckContext& ctx) {
  auto& q = ctx.q;
  in_la(bf.base, t1);
  in_la(bf.base, t2);
  const ComplexMatrix s = t1 + t2;
  const ComplexMatrix d = t1 - t2;
  const double ns = q.norm(FramedOperator(bf.base, s));
  const double nd = q.norm(FramedOperator(bf.base, d));
  const double nsd = q.norm(FramedOperator(bf.base, s * d));
  const double nds = q.norm(FramedOperator(bf.base, d * s));
  const Interval wb = q.w(pm_block(bf, t1, t2));
  return inequality(
      "pm_upper",
      [&](bool up) {
        return std::pair{wb.at(up), 0.5 * std::max(ns, nd) + 0.5 * std::sqrt(std::max(nsd, nds))};
      },
      ctx.tol.inequality);
}

CheckResult check_pm_norm(const BlockFrame& bf, const ComplexMatrix& t1, const ComplexMatrix& t2,
                          CheckContext& ctx) {
  auto& q = ctx.q;
  in_la(bf.base, t1);
  in_la(bf.base, t2);
  const double ns = q.norm(FramedOperator(bf.base, t1 + t2));
  const double nd = q.norm(FramedOperator(bf.base, t1 - t2));
  const double nb = q.norm(pm_block(bf, t1, t2));
  return identity("pm_norm", Interval::point(nb), Interval::point(std::max(ns, nd)),
                  ctx.tol.identity);
}

CheckResult check_pm_square_norm(const BlockFrame& bf, const ComplexMatrix& t1,
                                 const ComplexMatrix& t2, CheckContext& ctx) {
  auto& q = ctx.q;
  in_la(bf.base, t1);
  in_la(bf.base, t2);
  const ComplexMatrix s = t1 + t2;
  const ComplexMatrix d = t1 - t2;
  const double nsd = q.norm(FramedOperator(bf.base, s * d));
  const double nds = q.norm(FramedOperator(bf.base, d * s));
  const ComplexMatrix b = assemble2x2(t1, t2, -t2, -t1);
  const double nb2 = q.norm(FramedOperator(bf.lifted, b * b));
  return identity("pm_square_norm", Interval::point(nb2), Interval::point(std::max(nsd, nds)),
                  ctx.tol.identity);
}

CheckResult check_product_upper(const FrameRef& frame, const ComplexMatrix& t1,
                                const ComplexMatrix& t2, CheckContext& ctx) {
  auto& q = ctx.q;
  const double n1 = q.norm(in_la(frame, t1));
  const double n2 = q.norm(in_la(frame, t2));
  const double n21 = q.norm(FramedOperator(frame, t2 * t1));
  const Interval w12 = q.w(FramedOperator(frame, t1 * t2));
  return inequality(
      "product_upper",
      [&](bool up) { return std::pair{w12.at(up), 0.5 * (n21 + n1 * n2)}; },
      ctx.tol.inequality);
}

// ----- frame and adjoint properties -----

// Anything routed through A† carries roundoff of order ε‖A‖‖A†‖, so the
// algebraic defects below are measured against that condition number.

CheckResult prop_reduction_homomorphism(const FramedOperator& t, const FramedOperator& s,
                                        CheckContext& ctx) {
  t.require_bounded();
  s.require_bounded();
  const FramedOperator ts(t.frame_ref(), t.matrix() * s.matrix());
  const double d = (ts.reduced() - t.reduced() * s.reduced()).frobenius_norm();
  return defect("reduction_homomorphism", d,
                t.reduced().frobenius_norm() * s.reduced().frobenius_norm() *
                    t.frame().range_condition(),
                ctx.tol.algebra);
}

CheckResult prop_double_sharp(const FramedOperator& t, CheckContext& ctx) {
  const FramedOperator ts = sharp(t);
  const ComplexMatrix& p = t.frame().projector();
  const double d = (sharp_adjoint(ts) - p * t.matrix() * p).frobenius_norm();
  return defect("double_sharp", d, t.matrix().frobenius_norm() * t.frame().range_condition(),
                ctx.tol.algebra);
}

CheckResult prop_sharp_norm_chain(const FramedOperator& t, CheckContext& ctx) {
  auto& q = ctx.q;
  const FramedOperator ts = sharp(t);
  const double n = q.norm(t);
  const double a = q.norm(FramedOperator(t.frame_ref(), ts.matrix() * t.matrix()));
  const double b = q.norm(FramedOperator(t.frame_ref(), t.matrix() * ts.matrix()));
  const double c = n * n;
  const double e = q.norm(ts);
  const double f = e * e;
  const double spread = std::max({a, b, c, f}) - std::min({a, b, c, f});
  return defect("sharp_norm_chain", spread, c, ctx.tol.identity);
}

CheckResult prop_sharp_algebra(const FramedOperator& t, const FramedOperator& s,
                               CheckContext& ctx) {
  const ComplexMatrix ts = sharp_adjoint(t);
  const ComplexMatrix ss = sharp_adjoint(s);
  const FrameRef& f = t.frame_ref();
  const double prod =
      (sharp_adjoint(FramedOperator(f, t.matrix() * s.matrix())) - ss * ts).frobenius_norm();
  const double sum =
      (sharp_adjoint(FramedOperator(f, t.matrix() + s.matrix())) - ts - ss).frobenius_norm();
  const double scale = std::max(ts.frobenius_norm() * ss.frobenius_norm(),
                                ts.frobenius_norm() + ss.frobenius_norm());
  return defect("sharp_algebra", std::max(prod, sum), scale * f->range_condition(),
                ctx.tol.algebra);
}

CheckResult prop_submultiplicative(const FramedOperator& t, const FramedOperator& s,
                                   CheckContext& ctx) {
  auto& q = ctx.q;
  const double nts = q.norm(FramedOperator(t.frame_ref(), t.matrix() * s.matrix()));
  const double rhs = q.norm(t) * q.norm(s);
  return inequality(
      "submultiplicative", [&](bool) { return std::pair{nts, rhs}; }, ctx.tol.identity);
}

CheckResult prop_vector_bound(const FramedOperator& t, std::span<const cplx> x,
                              CheckContext& ctx) {
  const double lhs = semi_norm(t.frame(), t.matrix() * x);
  const double rhs = ctx.q.norm(t) * semi_norm(t.frame(), x);
  return inequality(
      "vector_bound", [&](bool) { return std::pair{lhs, rhs}; }, ctx.tol.identity);
}

CheckResult prop_cauchy_schwarz(const PsdFrame& frame, std::span<const cplx> x,
                                std::span<const cplx> y, CheckContext& ctx) {
  const double lhs = std::abs(semi_inner(frame, x, y));
  const double rhs = semi_norm(frame, x) * semi_norm(frame, y);
  return inequality(
      "cauchy_schwarz", [&](bool) { return std::pair{lhs, rhs}; }, ctx.tol.algebra);
}

CheckResult prop_conjugate_symmetry(const PsdFrame& frame, std::span<const cplx> x,
                                    std::span<const cplx> y, CheckContext& ctx) {
  const cplx a = semi_inner(frame, x, y);
  const cplx b = semi_inner(frame, y, x);
  return defect("conjugate_symmetry", std::abs(a - std::conj(b)), std::abs(a), ctx.tol.algebra);
}

CheckResult prop_reduced_sharp(const FramedOperator& t, CheckContext& ctx) {
  const FramedOperator ts = sharp(t);
  const double d = (ts.reduced() - t.reduced().adjoint()).frobenius_norm();
  return defect("reduced_sharp", d, t.reduced().frobenius_norm() * t.frame().range_condition(),
                ctx.tol.algebra);
}

// ----- radius properties -----

CheckResult prop_sandwich_lower(const FramedOperator& t, CheckContext& ctx) {
  const double n = ctx.q.norm(t);
  const Interval w = ctx.q.w(t);
  return inequality(
      "sandwich_lower", [&](bool up) { return std::pair{0.5 * n, w.at(up)}; },
      ctx.tol.identity);
}

CheckResult prop_sandwich_upper(const FramedOperator& t, CheckContext& ctx) {
  const double n = ctx.q.norm(t);
  const Interval w = ctx.q.w(t);
  return inequality(
      "sandwich_upper", [&](bool up) { return std::pair{w.at(up), n}; }, ctx.tol.identity);
}

CheckResult prop_selfadjoint_norm(const FramedOperator& t, CheckContext& ctx) {
  return identity("selfadjoint_norm", ctx.q.w(t), Interval::point(ctx.q.norm(t)),
                  ctx.tol.identity);
}

CheckResult prop_selfadjoint_spectral(const FramedOperator& t, CheckContext& ctx) {
  return identity("selfadjoint_spectral", ctx.q.w(t), Interval::point(ctx.q.r(t)),
                  ctx.tol.spectral);
}

CheckResult prop_power_inequality(const FramedOperator& t, unsigned n, CheckContext& ctx) {
  const Interval wn = ctx.q.w(FramedOperator(t.frame_ref(), power(t.matrix(), n)));
  const Interval w = ctx.q.w(t);
  return inequality(
      "power_inequality_n" + std::to_string(n),
      [&](bool up) { return std::pair{wn.at(up), std::pow(w.at(up), static_cast<double>(n))}; },
      ctx.tol.identity);
}

CheckResult prop_adjoint_invariance(const FramedOperator& t, CheckContext& ctx) {
  return identity("adjoint_invariance", ctx.q.w(t), ctx.q.w(sharp(t)), ctx.tol.identity);
}

CheckResult prop_weak_unitary_invariance(const FramedOperator& t, const FramedOperator& u,
                                         CheckContext& ctx) {
  const FramedOperator conj(t.frame_ref(), sharp_adjoint(u) * t.matrix() * u.matrix());
  return identity("weak_unitary_invariance", ctx.q.w(conj), ctx.q.w(t), ctx.tol.identity);
}

CheckResult prop_spectral_commutativity(const FramedOperator& t, const FramedOperator& s,
                                        CheckContext& ctx) {
  const FrameRef& f = t.frame_ref();
  const double a = ctx.q.r(FramedOperator(f, t.matrix() * s.matrix()));
  const double b = ctx.q.r(FramedOperator(f, s.matrix() * t.matrix()));
  return identity("spectral_commutativity", Interval::point(a), Interval::point(b),
                  ctx.tol.spectral);
}

CheckResult prop_square_zero_radius(const FramedOperator& t, CheckContext& ctx) {
  return identity("square_zero_radius", ctx.q.w(t), Interval::point(0.5 * ctx.q.norm(t)),
                  ctx.tol.identity);
}

CheckResult prop_square_root_bound(const FramedOperator& t, CheckContext& ctx) {
  const double n = ctx.q.norm(t);
  const double n2 = ctx.q.norm(FramedOperator(t.frame_ref(), t.matrix() * t.matrix()));
  const Interval w = ctx.q.w(t);
  return inequality(
      "square_root_bound",
      [&](bool up) { return std::pair{w.at(up), 0.5 * (n + std::sqrt(n2))}; },
      ctx.tol.identity);
}

CheckResult prop_spectral_below_numerical(const FramedOperator& t, CheckContext& ctx) {
  const double r = ctx.q.r(t);
  const Interval w = ctx.q.w(t);
  return inequality(
      "spectral_below_numerical", [&](bool up) { return std::pair{r, w.at(up)}; },
      ctx.tol.spectral);
}

CheckResult prop_sampled_below_enclosure(const FramedOperator& t, CheckContext& ctx) {
  const double s = a_numerical_radius_sampled(t, ctx.q.radius_config());
  const Interval w = ctx.q.w(t);
  return inequality(
      "sampled_below_enclosure", [&](bool) { return std::pair{s, w.hi}; }, ctx.tol.algebra);
}

CheckResult prop_cartesian_parts(const FramedOperator& t, CheckContext& ctx) {
  const FramedOperator re = re_A(t);
  const FramedOperator im = im_A(t);
  const double d = (re.matrix() + cplx(0.0, 1.0) * im.matrix() - t.matrix()).frobenius_norm();
  const double bad = (classify(re).A_selfadjoint ? 0.0 : 1.0) +
                     (classify(im).A_selfadjoint ? 0.0 : 1.0);
  return defect("cartesian_parts", d + bad, t.matrix().frobenius_norm(), ctx.tol.algebra);
}

// ----- block properties -----

CheckResult prop_diag_block_radius(const BlockFrame& bf, const ComplexMatrix& t1,
                                   const ComplexMatrix& t2, CheckContext& ctx) {
  const ComplexMatrix z(bf.n(), bf.n());
  const Interval wb = ctx.q.w(FramedOperator(bf.lifted, assemble2x2(t1, z, z, t2)));
  const Interval m = imax(ctx.q.w(in_la(bf.base, t1)), ctx.q.w(in_la(bf.base, t2)));
  return identity("diag_block_radius", wb, m, ctx.tol.identity);
}

CheckResult prop_offdiag_swap(const BlockFrame& bf, const ComplexMatrix& t1,
                              const ComplexMatrix& t2, CheckContext& ctx) {
  return identity("offdiag_swap", ctx.q.w(offdiag(bf, t1, t2)), ctx.q.w(offdiag(bf, t2, t1)),
                  ctx.tol.identity);
}

CheckResult prop_offdiag_phase(const BlockFrame& bf, const ComplexMatrix& t1,
                               const ComplexMatrix& t2, double theta, CheckContext& ctx) {
  const Interval a = ctx.q.w(offdiag(bf, t1, std::polar(1.0, theta) * t2));
  return identity("offdiag_phase", a, ctx.q.w(offdiag(bf, t1, t2)), ctx.tol.identity);
}

CheckResult prop_circulant_radius(const BlockFrame& bf, const ComplexMatrix& t1,
                                  const ComplexMatrix& t2, CheckContext& ctx) {
  const Interval wb = ctx.q.w(FramedOperator(bf.lifted, assemble2x2(t1, t2, t2, t1)));
  const Interval m = imax(ctx.q.w(FramedOperator(bf.base, t1 + t2)),
                          ctx.q.w(FramedOperator(bf.base, t1 - t2)));
  return identity("circulant_radius", wb, m, ctx.tol.identity);
}

CheckResult prop_offdiag_equal_radius(const BlockFrame& bf, const ComplexMatrix& t,
                                      CheckContext& ctx) {
  return identity("offdiag_equal_radius", ctx.q.w(offdiag(bf, t, t)),
                  ctx.q.w(in_la(bf.base, t)), ctx.tol.identity);
}

CheckResult prop_pinching_diag(const BlockFrame& bf, const ComplexMatrix& t1,
                               const ComplexMatrix& t2, const ComplexMatrix& t3,
                               const ComplexMatrix& t4, CheckContext& ctx) {
  const ComplexMatrix z(bf.n(), bf.n());
  const Interval d = ctx.q.w(FramedOperator(bf.lifted, assemble2x2(t1, z, z, t4)));
  const Interval f = ctx.q.w(FramedOperator(bf.lifted, assemble2x2(t1, t2, t3, t4)));
  return inequality(
      "pinching_diag", [&](bool up) { return std::pair{d.at(up), f.at(up)}; },
      ctx.tol.identity);
}

CheckResult prop_pinching_offdiag(const BlockFrame& bf, const ComplexMatrix& t1,
                                  const ComplexMatrix& t2, const ComplexMatrix& t3,
                                  const ComplexMatrix& t4, CheckContext& ctx) {
  const Interval o = ctx.q.w(offdiag(bf, t2, t3));
  const Interval f = ctx.q.w(FramedOperator(bf.lifted, assemble2x2(t1, t2, t3, t4)));
  return inequality(
      "pinching_offdiag", [&](bool up) { return std::pair{o.at(up), f.at(up)}; },
      ctx.tol.identity);
}

CheckResult prop_square_zero_block_radius(const BlockFrame& bf, const ComplexMatrix& t,
                                          CheckContext& ctx) {
  const Interval wb = ctx.q.w(pm_block(bf, t, t));
  return identity("square_zero_block_radius", wb,
                  Interval::point(ctx.q.norm(FramedOperator(bf.base, t))), ctx.tol.identity);
}

CheckResult prop_square_zero_block_square(const BlockFrame& bf, const ComplexMatrix& t,
                                          CheckContext& ctx) {
  const ComplexMatrix b = assemble2x2(t, t, -t, -t);
  const double d = (bf.lifted->metric() * b * b).frobenius_norm();
  const double scale = bf.base->metric_norm() * t.frobenius_norm() * t.frobenius_norm();
  return defect("square_zero_block_square", d, scale, ctx.tol.algebra);
}

CheckResult prop_block_spectral_domination(const BlockFrame& bf, const ComplexMatrix& t1,
                                           const ComplexMatrix& t2, const ComplexMatrix& t3,
                                           const ComplexMatrix& t4, CheckContext& ctx) {
  auto n = [&](const ComplexMatrix& m) { return ctx.q.norm(FramedOperator(bf.base, m)); };
  const double bound = nonneg2x2_spectral_radius(n(t1), n(t2), n(t3), n(t4));
  const double r = ctx.q.r(FramedOperator(bf.lifted, assemble2x2(t1, t2, t3, t4)));
  return inequality(
      "block_spectral_domination", [&](bool) { return std::pair{r, bound}; }, ctx.tol.spectral);
}

CheckResult prop_block_norm_diag(const BlockFrame& bf, const ComplexMatrix& t1,
                                 const ComplexMatrix& t4, CheckContext& ctx) {
  const ComplexMatrix z(bf.n(), bf.n());
  const double nb = ctx.q.norm(FramedOperator(bf.lifted, assemble2x2(t1, z, z, t4)));
  const double m = std::max(ctx.q.norm(FramedOperator(bf.base, t1)),
                            ctx.q.norm(FramedOperator(bf.base, t4)));
  return identity("block_norm_diag", Interval::point(nb), Interval::point(m), ctx.tol.identity);
}

CheckResult prop_block_norm_offdiag(const BlockFrame& bf, const ComplexMatrix& t2,
                                    const ComplexMatrix& t3, CheckContext& ctx) {
  const double nb = ctx.q.norm(offdiag(bf, t2, t3));
  const double m = std::max(ctx.q.norm(FramedOperator(bf.base, t2)),
                            ctx.q.norm(FramedOperator(bf.base, t3)));
  return identity("block_norm_offdiag", Interval::point(nb), Interval::point(m),
                  ctx.tol.identity);
}

CheckResult prop_block_sharp(const BlockFrame& bf, const ComplexMatrix& t1,
                             const ComplexMatrix& t2, const ComplexMatrix& t3,
                             const ComplexMatrix& t4, CheckContext& ctx) {
  const Block2 b = block2(bf, t1, t2, t3, t4);
  const Block2 bs = block_sharp(bf, b);
  const ComplexMatrix direct = sharp_adjoint(b.assembled);
  const double d = (bs.assembled.matrix() - direct).frobenius_norm();
  return defect("block_sharp", d, direct.frobenius_norm() * bf.base->range_condition(),
                ctx.tol.algebra);
}

CheckResult prop_special_unitaries(const BlockFrame& bf, CheckContext& ctx) {
  double worst = 0.0;
  for (SpecialUnitary kind : {SpecialUnitary::hadamard, SpecialUnitary::swap}) {
    const FramedOperator u = special_unitary(bf, kind);
    const ComplexMatrix us = sharp_adjoint(u);
    const ComplexMatrix& p = bf.lifted->projector();
    worst = std::max({worst, (us * u.matrix() - p).frobenius_norm(),
                      (u.matrix() * us - p).frobenius_norm()});
  }
  return defect("special_unitaries", worst, bf.base->range_condition(), ctx.tol.algebra);
}

CheckResult prop_circulant_power(const ComplexMatrix& t1, const ComplexMatrix& t2, unsigned n,
                                 CheckContext& ctx) {
  const std::size_t m = t1.rows();
  const ComplexMatrix big = power(assemble2x2(t1, t2, t2, t1), n);
  const ComplexMatrix p = big.block(0, 0, m, m);
  const ComplexMatrix q = big.block(0, m, m, m);
  const ComplexMatrix sum = power(t1 + t2, n);
  const ComplexMatrix diff = power(t1 - t2, n);
  const double d = std::max((p + q - sum).frobenius_norm(), (p - q - diff).frobenius_norm());
  return defect("circulant_power", d, std::max(sum.frobenius_norm(), diff.frobenius_norm()),
                ctx.tol.algebra);
}

}  // namespace arad
