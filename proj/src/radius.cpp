#include "arad/radius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "arad/error.hpp"
#include "arad/linalg.hpp"
#include "arad/rng.hpp"

namespace arad {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Support {
  double theta = 0.0;
  double hp = 0.0;  // support value in direction θ
  double hm = 0.0;  // support value in direction θ + π
};

// Farthest point from the origin of the wedge {Re(e^{ia}z) ≤ h1} ∩ {Re(e^{i(a+δ)}z) ≤ h2}.
double vertex_modulus(double h1, double h2, double delta) {
  const double s = (h2 - h1) / std::sin(delta) + h1 * std::tan(0.5 * delta);
  return std::hypot(h1, s);
}

class SupportSweep {
 public:
  SupportSweep(const ComplexMatrix& c, double err) : c_(c), err_(err) {
    const ComplexMatrix ca = c.adjoint();
    h1_ = 0.5 * (c + ca);
    h2_ = cplx(0.0, -0.5) * (c - ca);
  }

  Support evaluate(double theta) {
    const auto [lo, hi] = hermitian_extreme_values(at(theta));
    ++evaluations_;
    // A support value is a lower bound for w as well.
    const double h = std::max(hi, -lo);
    if (h > best_) {
      best_ = h;
      best_theta_ = theta;
    }
    return {theta, hi + err_, -lo + err_};
  }

  double lower() const { return std::max(0.0, best_ - err_); }

  // The Rayleigh quotients of the extreme eigenvectors at the best angle are
  // points of W(C) at least as far out as the best support value.
  double refined_lower() {
    if (best_theta_ < 0.0) return lower();
    if (best_theta_ != refined_theta_) {
      const ExtremePairs ex = hermitian_extremes(at(best_theta_));
      refined_ = std::max({refined_, point_modulus(ex.max_vector), point_modulus(ex.min_vector)});
      refined_theta_ = best_theta_;
    }
    return std::max(lower(), refined_);
  }

  std::size_t evaluations() const { return evaluations_; }

 private:
  ComplexMatrix at(double theta) const {
    const double co = std::cos(theta);
    const double si = std::sin(theta);
    const std::size_t n = c_.rows();
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = co * h1_(i, j) - si * h2_(i, j);
    return h;
  }

  double point_modulus(const CVector& x) const {
    const CVector cx = c_ * x;
    const double xx = inner(x, x).real();
    if (!(xx > 0.0)) return 0.0;
    return std::max(0.0, std::abs(inner(cx, x)) / xx - err_);
  }

  const ComplexMatrix& c_;
  ComplexMatrix h1_;
  ComplexMatrix h2_;
  double err_;
  double best_ = 0.0;
  double best_theta_ = -1.0;
  double refined_ = 0.0;
  double refined_theta_ = -1.0;
  std::size_t evaluations_ = 0;
};

// |<Tx, x>_A| / ‖x‖_A² for the given x, or -1 when ‖x‖_A² ≤ floor·‖x‖².
// Accumulated in extended precision: the sampler maximizes this over many
// nearly tied candidates and would otherwise select upward roundoff.
double quotient(const ComplexMatrix& a, const ComplexMatrix& t, const CVector& x, double floor) {
  using lcplx = std::complex<long double>;
  const std::size_t n = x.size();
  lcplx num = 0.0L;
  long double den = 0.0L, xx = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    lcplx ax = 0.0L, tx = 0.0L;
    for (std::size_t j = 0; j < n; ++j) {
      const lcplx xj(x[j]);
      ax += lcplx(a(i, j)) * xj;
      tx += lcplx(t(i, j)) * xj;
    }
    const lcplx xi(x[i]);
    den += (std::conj(xi) * ax).real();
    xx += std::norm(xi);
    num += std::conj(ax) * tx;  // <Tx, x>_A = (Ax)* (Tx)
  }
  if (!(den > static_cast<long double>(floor) * xx)) return -1.0;
  return static_cast<double>(std::abs(num) / den);
}

}  // namespace

void RadiusConfig::validate() const {
  if (!(rel_width > 0.0) || initial_grid < 6 || refinement_rounds == 0 || max_evaluations == 0 ||
      samples == 0 || gelfand_depth == 0)
    throw Error(ErrorCode::ConfigInvalid, "radius configuration fields must be positive");
}

Enclosure numerical_radius(const ComplexMatrix& c, const RadiusConfig& cfg) {
  if (!c.square()) throw Error(ErrorCode::NotSquare, "numerical radius needs a square matrix");
  cfg.validate();
  Enclosure out;
  if (c.rows() == 0) return out;

  // Slack covering the eigenvalue and Rayleigh-quotient roundoff, so that the
  // lines stay outside W(C) and the points stay inside the disk of radius w.
  const double err = 8.0 * static_cast<double>(c.rows() + 1) * kEps * c.frobenius_norm();
  SupportSweep sweep(c, err);

  const std::size_t k0 = cfg.initial_grid / 2;
  std::vector<Support> supports;
  supports.reserve(k0);
  for (std::size_t k = 0; k < k0; ++k)
    supports.push_back(sweep.evaluate(std::numbers::pi * static_cast<double>(k) /
                                      static_cast<double>(k0)));

  std::vector<double> bound;
  std::vector<Support> fresh;
  out.converged = false;
  for (std::size_t round = 0;; ++round) {
    const std::size_t k = supports.size();
    bound.assign(k, 0.0);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      const double gap = supports[i + 1].theta - supports[i].theta;
      bound[i] = std::max(vertex_modulus(supports[i].hp, supports[i + 1].hp, gap),
                          vertex_modulus(supports[i].hm, supports[i + 1].hm, gap));
    }
    const double wrap_gap = supports.front().theta + std::numbers::pi - supports.back().theta;
    bound[k - 1] = std::max(vertex_modulus(supports.back().hp, supports.front().hm, wrap_gap),
                            vertex_modulus(supports.back().hm, supports.front().hp, wrap_gap));

    out.lower = sweep.refined_lower();
    out.upper = std::max(out.lower, *std::max_element(bound.begin(), bound.end()));
    out.grid_size = 2 * k;
    const double target = cfg.rel_width * std::max(1.0, out.upper);
    if (out.upper - out.lower <= target) {
      out.converged = true;
      break;
    }
    if (round == cfg.refinement_rounds) break;

    // The vertex bound overshoots by O(δ²), so an interval whose excess is e
    // needs about sqrt(e / target) pieces.
    fresh.clear();
    std::vector<std::pair<std::size_t, std::size_t>> plan;
    std::size_t wanted = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const double excess = bound[i] - out.lower;
      if (excess <= target) continue;
      const double pieces = std::clamp(std::ceil(std::sqrt(excess / target)), 2.0, 32.0);
      plan.emplace_back(i, static_cast<std::size_t>(pieces));
      wanted += static_cast<std::size_t>(pieces) - 1;
    }
    const std::size_t budget = cfg.max_evaluations - std::min(cfg.max_evaluations, sweep.evaluations());
    if (budget < plan.size()) break;
    const double shrink = wanted > budget ? static_cast<double>(budget) / static_cast<double>(wanted) : 1.0;
    for (const auto& [i, pieces] : plan) {
      const std::size_t m = std::max<std::size_t>(
          2, static_cast<std::size_t>(std::floor(static_cast<double>(pieces - 1) * shrink)) + 1);
      const double from = supports[i].theta;
      const double to = i + 1 < k ? supports[i + 1].theta : supports.front().theta + std::numbers::pi;
      for (std::size_t j = 1; j < m; ++j) {
        double theta = from + (to - from) * static_cast<double>(j) / static_cast<double>(m);
        if (theta >= std::numbers::pi) theta -= std::numbers::pi;
        fresh.push_back({theta, 0.0, 0.0});
      }
    }
    if (sweep.evaluations() + fresh.size() > cfg.max_evaluations) break;
    for (Support& s : fresh) s = sweep.evaluate(s.theta);
    std::sort(fresh.begin(), fresh.end(),
              [](const Support& a, const Support& b) { return a.theta < b.theta; });
    const std::size_t old = supports.size();
    supports.insert(supports.end(), fresh.begin(), fresh.end());
    std::inplace_merge(supports.begin(), supports.begin() + static_cast<std::ptrdiff_t>(old),
                       supports.end(),
                       [](const Support& a, const Support& b) { return a.theta < b.theta; });
  }
  out.evaluations = sweep.evaluations();
  return out;
}

double gelfand_spectral_radius(const ComplexMatrix& c, unsigned depth) {
  if (!c.square()) throw Error(ErrorCode::NotSquare, "spectral radius needs a square matrix");
  if (c.rows() == 0) return 0.0;
  const double f0 = c.frobenius_norm();
  if (f0 == 0.0) return 0.0;
  // C^{2^j} = e^{log_scale} · m with ‖m‖_F = 1.
  ComplexMatrix m = cplx(1.0 / f0) * c;
  double log_scale = std::log(f0);
  double power = 1.0;
  for (unsigned j = 0; j < depth; ++j) {
    ComplexMatrix sq = m * m;
    const double f = sq.frobenius_norm();
    if (f == 0.0) return 0.0;
    m = cplx(1.0 / f) * std::move(sq);
    log_scale = 2.0 * log_scale + std::log(f);
    power *= 2.0;
  }
  return std::exp((log_scale + std::log(spectral_norm(m))) / power);
}

ComplexMatrix herm_part_at(const FramedOperator& op, double theta) {
  op.require_bounded();
  const cplx phase = std::polar(1.0, theta);
  const ComplexMatrix& r = op.reduced();
  return cplx(0.5) * (phase * r + std::conj(phase) * r.adjoint());
}

Enclosure a_numerical_radius(const FramedOperator& op, const RadiusConfig& cfg) {
  op.require_bounded();
  return numerical_radius(op.compressed(), cfg);
}

double a_numerical_radius_sampled(const FramedOperator& op, const RadiusConfig& cfg) {
  cfg.validate();
  const PsdFrame& f = op.frame();
  if (f.rank() == 0) throw Error(ErrorCode::DegenerateFrame, "A = 0 has no unit vectors");
  const ComplexMatrix& a = f.metric();
  const ComplexMatrix& t = op.matrix();
  const ComplexMatrix& q = f.range_basis();
  const ComplexMatrix& nb = f.null_basis();
  const std::size_t r = f.rank();
  const std::size_t k = op.dim() - r;
  // x = Qy + Nz with a small null-space part. Mostly-null x would make
  // ‖x‖_A² tiny and amplify roundoff in the quotient past the true supremum;
  // the floor catches whatever still gets close.
  constexpr double kNullWeight = 0.1;
  const double floor = 1e-6 * f.metric_norm();

  // |<Tx, x>_A| / ‖x‖_A², or -1 when x is too close to N(A).
  auto ratio = [&](const CVector& y, const CVector& z) {
    CVector x = q * y;
    if (k > 0) {
      const CVector nz = nb * z;
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += nz[i];
    }
    return quotient(a, t, x, floor);
  };

  Rng rng(cfg.sample_seed);
  std::normal_distribution<double> n01(0.0, 1.0);
  auto perturb = [&](CVector& v, double sigma) {
    for (cplx& c : v) c += sigma * cplx(n01(rng), n01(rng));
  };

  // ‖y‖ = 1 and ‖z‖ ≤ kNullWeight. The metric as stored is only numerically
  // singular, so x close to N(A) would see its roundoff-level eigenvalues.
  auto shape = [&](CVector& y, CVector& z) {
    const double ny = norm2(y);
    if (!(ny > 0.0)) return false;
    for (cplx& c : y) c /= ny;
    const double nz = norm2(z) / ny;
    const double zs = nz > kNullWeight ? kNullWeight / (nz * ny) : 1.0 / ny;
    for (cplx& c : z) c *= zs;
    return true;
  };

  const std::size_t global = (cfg.samples + 1) / 2;
  double best = -1.0;
  CVector best_y, best_z;
  for (std::size_t s = 0; s < global; ++s) {
    CVector y = gaussian_vector(r, rng);
    CVector z = gaussian_vector(k, rng);
    if (!shape(y, z)) continue;
    const double v = ratio(y, z);
    if (v > best) {
      best = v;
      best_y = std::move(y);
      best_z = std::move(z);
    }
  }
  if (best < 0.0) return 0.0;

  // (1+1) evolution strategy with the one-fifth success rule.
  double sigma = 0.3;
  for (std::size_t s = global; s < cfg.samples; ++s) {
    CVector y = best_y, z = best_z;
    perturb(y, sigma);
    perturb(z, kNullWeight * sigma);
    if (!shape(y, z)) continue;
    const double v = ratio(y, z);
    if (v > best) {
      best = v;
      best_y = std::move(y);
      best_z = std::move(z);
      sigma *= 1.5;
    } else {
      sigma = std::max(sigma * 0.904, 1e-12);
    }
  }
  return best;
}

double a_spectral_radius(const FramedOperator& op, const RadiusConfig& cfg) {
  op.require_bounded();
  return gelfand_spectral_radius(op.compressed(), cfg.gelfand_depth);
}

FramedOperator re_A(const FramedOperator& op) {
  return FramedOperator(op.frame_ref(), cplx(0.5) * (op.matrix() + sharp_adjoint(op)));
}

FramedOperator im_A(const FramedOperator& op) {
  return FramedOperator(op.frame_ref(), cplx(0.0, -0.5) * (op.matrix() - sharp_adjoint(op)));
}

}  // namespace arad
