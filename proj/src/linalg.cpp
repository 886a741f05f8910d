#include "arad/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "arad/error.hpp"

namespace arad {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Jacobi parameter t = tan(angle) for the real symmetric 2x2 problem with
// diagonal (app, aqq) and off-diagonal r > 0.
double jacobi_t(double app, double aqq, double r) {
  const double tau = (aqq - app) / (2.0 * r);
  const double t = 1.0 / (std::abs(tau) + std::hypot(1.0, tau));
  return tau >= 0.0 ? t : -t;
}

// A <- G* A G and V <- V G for the complex rotation that annihilates A(p,q).
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const cplx phase = apq / r;  // e^{i phi}
  const cplx conj_phase = std::conj(phase);
  const double t = jacobi_t(a(p, p).real(), a(q, q).real(), r);
  const double c = 1.0 / std::hypot(1.0, t);
  const double s = t * c;
  const std::size_t n = a.rows();

  for (std::size_t i = 0; i < n; ++i) {
    const cplx aip = a(i, p);
    const cplx aiq = a(i, q);
    a(i, p) = c * aip - s * conj_phase * aiq;
    a(i, q) = s * aip + c * conj_phase * aiq;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const cplx apj = a(p, j);
    const cplx aqj = a(q, j);
    a(p, j) = c * apj - s * phase * aqj;
    a(q, j) = s * apj + c * phase * aqj;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t i = 0; i < v.rows(); ++i) {
    const cplx vip = v(i, p);
    const cplx viq = v(i, q);
    v(i, p) = c * vip - s * conj_phase * viq;
    v(i, q) = s * vip + c * conj_phase * viq;
  }
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, what);
}

// Number of eigenvalues of the symmetric tridiagonal (d, e) strictly below x.
std::size_t sturm_count(const std::vector<double>& d, const std::vector<double>& e2, double x,
                        double pivmin) {
  std::size_t count = 0;
  double q = d[0] - x;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    q = d[i] - x - e2[i - 1] / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

// LU with partial pivoting of H - shift I. Tiny pivots are replaced by
// `floor` so inverse iteration stays finite at an exact eigenvalue.
class ShiftedLU {
 public:
  ShiftedLU(const ComplexMatrix& h, double shift, double floor) : lu_(h), piv_(h.rows()) {
    const std::size_t n = h.rows();
    for (std::size_t i = 0; i < n; ++i) lu_(i, i) -= shift;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t best = k;
      double best_abs = std::abs(lu_(k, k));
      for (std::size_t i = k + 1; i < n; ++i) {
        const double v = std::abs(lu_(i, k));
        if (v > best_abs) {
          best = i;
          best_abs = v;
        }
      }
      piv_[k] = best;
      if (best != k)
        for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(best, j));
      if (std::abs(lu_(k, k)) < floor) lu_(k, k) = floor;
      const cplx inv = 1.0 / lu_(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        const cplx f = lu_(i, k) * inv;
        lu_(i, k) = f;
        if (f == cplx{}) continue;
        for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
      }
    }
  }

  void solve(CVector& b) const {
    const std::size_t n = lu_.rows();
    for (std::size_t k = 0; k < n; ++k) {
      if (piv_[k] != k) std::swap(b[k], b[piv_[k]]);
      for (std::size_t i = k + 1; i < n; ++i) b[i] -= lu_(i, k) * b[k];
    }
    for (std::size_t k = n; k-- > 0;) {
      cplx s = b[k];
      for (std::size_t j = k + 1; j < n; ++j) s -= lu_(k, j) * b[j];
      b[k] = s / lu_(k, k);
    }
  }

 private:
  ComplexMatrix lu_;
  std::vector<std::size_t> piv_;
};

CVector eigenvector_near(const ComplexMatrix& h, double lambda, double scale) {
  const std::size_t n = h.rows();
  CVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = cplx(1.0 + 0.1 * static_cast<double>(i), 0.05 * static_cast<double>(i % 3));
  }
  const ShiftedLU lu(h, lambda, std::max(kEps * scale, std::numeric_limits<double>::min()));
  for (int it = 0; it < 3; ++it) {
    lu.solve(x);
    const double nx = norm2(x);
    if (!(nx > 0.0) || !std::isfinite(nx)) break;
    for (auto& v : x) v /= nx;
  }
  return x;
}

}  // namespace

RankTolerance RankTolerance::from_scale(std::size_t rows, std::size_t cols, double largest) {
  return RankTolerance{static_cast<double>(std::max(rows, cols)) * kEps * std::abs(largest)};
}

double hermitian_defect(const ComplexMatrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) {
      const double d = std::norm(m(i, j) - std::conj(m(j, i)));
      s += (i == j) ? d : 2.0 * d;
    }
  return std::sqrt(s);
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix h(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    h(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

HermitianEigen hermitian_eig(const ComplexMatrix& m) {
  require_square(m, "hermitian_eig: matrix must be square");
  const std::size_t n = m.rows();
  const double scale = m.frobenius_norm();
  if (hermitian_defect(m) > kSymmetryTolerance * scale) {
    throw Error(ErrorCode::NotHermitian, "hermitian_eig: asymmetry beyond tolerance");
  }
  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = kJacobiOffDiagonal * scale;

  bool converged = off_diagonal_norm(a) <= threshold;
  for (int sweep = 0; sweep < kJacobiSweepCap && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    converged = off_diagonal_norm(a) <= threshold;
  }
  if (!converged) throw Error(ErrorCode::NoConvergence, "hermitian_eig: sweep cap exceeded");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

ComplexMatrix orthonormalize_columns(ComplexMatrix basis) {
  const std::size_t m = basis.rows();
  const std::size_t n = basis.cols();
  std::size_t next_unit = 0;
  for (std::size_t j = 0; j < n; ++j) {
    CVector col = basis.column(j);
    const double original = norm2(col);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        cplx proj{};
        for (std::size_t i = 0; i < m; ++i) proj += std::conj(basis(i, k)) * col[i];
        for (std::size_t i = 0; i < m; ++i) col[i] -= proj * basis(i, k);
      }
    }
    double nc = norm2(col);
    // Collapsed column: substitute standard basis vectors until one survives.
    while (!(nc > 1e-8 * std::max(original, 1e-300)) && next_unit < m) {
      col.assign(m, cplx{});
      col[next_unit++] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < j; ++k) {
          cplx proj{};
          for (std::size_t i = 0; i < m; ++i) proj += std::conj(basis(i, k)) * col[i];
          for (std::size_t i = 0; i < m; ++i) col[i] -= proj * basis(i, k);
        }
      }
      nc = norm2(col);
      if (nc > 0.5) break;
    }
    for (auto& x : col) x /= nc;
    basis.set_column(j, col);
  }
  return basis;
}

Svd svd(const ComplexMatrix& m) {
  if (m.rows() < m.cols()) {
    Svd t = svd(m.adjoint());
    return Svd{std::move(t.singular_values), std::move(t.v), std::move(t.u)};
  }
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  ComplexMatrix g = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double tol = static_cast<double>(rows) * kEps;

  bool converged = n < 2;
  for (int sweep = 0; sweep < kJacobiSweepCap && !converged; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        cplx gamma{};
        for (std::size_t i = 0; i < rows; ++i) {
          alpha += std::norm(g(i, p));
          beta += std::norm(g(i, q));
          gamma += std::conj(g(i, p)) * g(i, q);
        }
        const double r = std::abs(gamma);
        if (r == 0.0 || r <= tol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const cplx conj_phase = std::conj(gamma / r);
        const double t = jacobi_t(alpha, beta, r);
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;
        for (std::size_t i = 0; i < rows; ++i) {
          const cplx gp = g(i, p);
          const cplx gq = g(i, q);
          g(i, p) = c * gp - s * conj_phase * gq;
          g(i, q) = s * gp + c * conj_phase * gq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const cplx vp = v(i, p);
          const cplx vq = v(i, q);
          v(i, p) = c * vp - s * conj_phase * vq;
          v(i, q) = s * vp + c * conj_phase * vq;
        }
      }
    }
    converged = !rotated;
  }
  if (!converged) throw Error(ErrorCode::NoConvergence, "svd: sweep cap exceeded");

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = norm2(g.column(j));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

  Svd out{std::vector<double>(n), ComplexMatrix(rows, rows), ComplexMatrix(n, n)};
  const double cutoff = RankTolerance::from_scale(rows, n, sigma.empty() ? 0.0 : sigma[order[0]])
                            .threshold;
  ComplexMatrix u(rows, rows);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    out.singular_values[k] = sigma[j];
    for (std::size_t i = 0; i < n; ++i) out.v(i, k) = v(i, j);
    if (sigma[j] > cutoff && sigma[j] > 0.0) {
      for (std::size_t i = 0; i < rows; ++i) u(i, k) = g(i, j) / sigma[j];
    }
  }
  out.u = orthonormalize_columns(std::move(u));
  return out;
}

RankTolerance default_tolerance(const ComplexMatrix& m) {
  const Svd s = svd(m);
  return RankTolerance::from_scale(m.rows(), m.cols(),
                                   s.singular_values.empty() ? 0.0 : s.singular_values[0]);
}

ComplexMatrix pinv(const ComplexMatrix& m, RankTolerance tol) {
  const Svd s = svd(m);
  ComplexMatrix x(m.cols(), m.rows());
  for (std::size_t k = 0; k < s.singular_values.size(); ++k) {
    const double sk = s.singular_values[k];
    if (!(sk > tol.threshold)) break;
    for (std::size_t i = 0; i < m.cols(); ++i) {
      const cplx vik = s.v(i, k) / sk;
      for (std::size_t j = 0; j < m.rows(); ++j) x(i, j) += vik * std::conj(s.u(j, k));
    }
  }
  return x;
}

ComplexMatrix pinv(const ComplexMatrix& m) { return pinv(m, default_tolerance(m)); }

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const HermitianEigen e = hermitian_eig(m);
  const std::size_t n = m.rows();
  if (n == 0) return {};
  const double largest = std::max(std::abs(e.values.front()), std::abs(e.values.back()));
  const double tau = RankTolerance::from_scale(n, n, largest).threshold;
  if (e.values.front() < -tau) throw Error(ErrorCode::NotPsd, "psd_sqrt: negative eigenvalue");
  ComplexMatrix r(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double root = std::sqrt(std::max(e.values[k], 0.0));
    if (root == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vik = e.vectors(i, k) * root;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += vik * std::conj(e.vectors(j, k));
    }
  }
  return hermitian_part(r);
}

std::size_t numerical_rank(const ComplexMatrix& m, RankTolerance tol) {
  const Svd s = svd(m);
  return static_cast<std::size_t>(
      std::count_if(s.singular_values.begin(), s.singular_values.end(),
                    [&](double x) { return x > tol.threshold; }));
}

ComplexMatrix range_projector(const ComplexMatrix& m, RankTolerance tol) {
  const Svd s = svd(m);
  ComplexMatrix p(m.rows(), m.rows());
  for (std::size_t k = 0; k < s.singular_values.size(); ++k) {
    if (!(s.singular_values[k] > tol.threshold)) break;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.rows(); ++j) p(i, j) += s.u(i, k) * std::conj(s.u(j, k));
  }
  return hermitian_part(p);
}

ComplexMatrix range_projector(const ComplexMatrix& m) {
  return range_projector(m, default_tolerance(m));
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.empty()) return 0.0;
  return svd(m).singular_values.front();
}

double nonneg2x2_spectral_radius(double a, double b, double c, double d) {
  if (a < 0.0 || b < 0.0 || c < 0.0 || d < 0.0) {
    throw Error(ErrorCode::NegativeEntry, "nonneg2x2_spectral_radius: entries must be >= 0");
  }
  return 0.5 * ((a + d) + std::sqrt((a - d) * (a - d) + 4.0 * b * c));
}

namespace {

// Real symmetric tridiagonal matrix (d, |e|) unitarily similar to a Hermitian
// matrix, with Gershgorin bounds for bisection.
struct Tridiagonal {
  std::vector<double> d;
  std::vector<double> e2;
  double lo = 0.0;
  double hi = 0.0;
  double scale = 0.0;
  double pivmin = 0.0;

  // k-th smallest eigenvalue (0-based) by bisection on the Sturm count.
  double kth(std::size_t k) const {
    double l = lo - kEps * scale, u = hi + kEps * scale;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (l + u);
      if (mid <= l || mid >= u) break;
      if (u - l <= 2.0 * kEps * std::max(std::abs(l), std::abs(u))) break;
      if (sturm_count(d, e2, mid, pivmin) > k)
        u = mid;
      else
        l = mid;
    }
    return 0.5 * (l + u);
  }
};

// Householder reduction; `a` is overwritten. Requires n >= 2.
Tridiagonal tridiagonalize(ComplexMatrix a) {
  const std::size_t n = a.rows();
  std::vector<double> d(n), e(n - 1);
  CVector v(n), p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;
    double xnorm = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = a(k + 1 + i, k);
      xnorm += std::norm(v[i]);
    }
    xnorm = std::sqrt(xnorm);
    d[k] = a(k, k).real();
    e[k] = xnorm;
    if (xnorm == 0.0) continue;
    const double x0abs = std::abs(v[0]);
    const cplx phase = x0abs > 0.0 ? v[0] / x0abs : cplx(1.0);
    v[0] += phase * xnorm;
    double vn = 0.0;
    for (std::size_t i = 0; i < m; ++i) vn += std::norm(v[i]);
    vn = std::sqrt(vn);
    if (vn == 0.0) continue;
    for (std::size_t i = 0; i < m; ++i) v[i] /= vn;
    // Trailing block update A22 <- (I - 2vv*) A22 (I - 2vv*).
    for (std::size_t i = 0; i < m; ++i) {
      cplx s{};
      for (std::size_t j = 0; j < m; ++j) s += a(k + 1 + i, k + 1 + j) * v[j];
      p[i] = s;
    }
    double beta = 0.0;
    for (std::size_t i = 0; i < m; ++i) beta += (std::conj(v[i]) * p[i]).real();
    for (std::size_t i = 0; i < m; ++i) p[i] -= beta * v[i];
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        a(k + 1 + i, k + 1 + j) -= 2.0 * (v[i] * std::conj(p[j]) + p[i] * std::conj(v[j]));
  }
  d[n - 2] = a(n - 2, n - 2).real();
  d[n - 1] = a(n - 1, n - 1).real();
  e[n - 2] = std::abs(a(n - 1, n - 2));

  Tridiagonal t;
  t.e2.resize(n - 1);
  t.lo = t.hi = d[0];
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? e[i - 1] : 0.0) + (i + 1 < n ? e[i] : 0.0);
    t.lo = std::min(t.lo, d[i] - r);
    t.hi = std::max(t.hi, d[i] + r);
    t.scale = std::max(t.scale, std::abs(d[i]) + r);
    if (i + 1 < n) t.e2[i] = e[i] * e[i];
  }
  t.pivmin = std::max(std::numeric_limits<double>::min(), kEps * kEps * t.scale * t.scale);
  t.d = std::move(d);
  return t;
}

}  // namespace

std::pair<double, double> hermitian_extreme_values(const ComplexMatrix& h) {
  require_square(h, "hermitian_extreme_values: matrix must be square");
  const std::size_t n = h.rows();
  if (n == 0) return {0.0, 0.0};
  if (n == 1) return {h(0, 0).real(), h(0, 0).real()};
  const Tridiagonal t = tridiagonalize(h);
  return {t.kth(0), t.kth(n - 1)};
}

ExtremePairs hermitian_extremes(const ComplexMatrix& h) {
  require_square(h, "hermitian_extremes: matrix must be square");
  const std::size_t n = h.rows();
  ExtremePairs out;
  if (n == 0) return out;
  if (n == 1) {
    out.min_value = out.max_value = h(0, 0).real();
    out.min_vector = out.max_vector = CVector{cplx(1.0)};
    return out;
  }
  const Tridiagonal t = tridiagonalize(h);
  out.min_value = t.kth(0);
  out.max_value = t.kth(n - 1);
  out.min_vector = eigenvector_near(h, out.min_value, t.scale);
  out.max_vector = eigenvector_near(h, out.max_value, t.scale);
  return out;
}

}  // namespace arad
