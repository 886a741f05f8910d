#include "arad/frame.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arad/error.hpp"
#include "arad/rng.hpp"

namespace arad {

namespace {

// Q diag(f(λ)) Q*
ComplexMatrix spectral_function(const ComplexMatrix& q, std::span<const double> lambda,
                                double (*f)(double)) {
  const std::size_t n = q.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    const double w = f(lambda[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const cplx qi = q(i, k) * w;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += qi * std::conj(q(j, k));
    }
  }
  return out;
}

ComplexMatrix block_diag(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

}  // namespace

double PsdFrame::metric_norm() const noexcept {
  return lambda_.empty() ? 0.0 : *std::max_element(lambda_.begin(), lambda_.end());
}

double PsdFrame::range_condition() const noexcept {
  if (lambda_.empty()) return 1.0;
  const auto [lo, hi] = std::minmax_element(lambda_.begin(), lambda_.end());
  return *hi / *lo;
}

void PsdFrame::finish() {
  sqrt_a_ = spectral_function(q_, lambda_, [](double l) { return std::sqrt(l); });
  pinv_sqrt_a_ = spectral_function(q_, lambda_, [](double l) { return 1.0 / std::sqrt(l); });
  pinv_a_ = spectral_function(q_, lambda_, [](double l) { return 1.0 / l; });
  projector_ = spectral_function(q_, lambda_, [](double) { return 1.0; });
}

ComplexMatrix PsdFrame::compress(const ComplexMatrix& t) const {
  if (t.rows() != dim() || t.cols() != dim())
    throw Error(ErrorCode::DimensionMismatch, "operator does not match frame dimension");
  ComplexMatrix c = q_.adjoint() * t * q_;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) c(i, j) *= std::sqrt(lambda_[i] / lambda_[j]);
  return c;
}

ComplexMatrix PsdFrame::expand(const ComplexMatrix& c) const {
  if (c.rows() != rank() || c.cols() != rank())
    throw Error(ErrorCode::DimensionMismatch, "range coordinates do not match frame rank");
  ComplexMatrix s = c;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s(i, j) *= std::sqrt(lambda_[j] / lambda_[i]);
  return q_ * s * q_.adjoint();
}

FrameRef PsdFrame::doubled() const {
  auto f = std::shared_ptr<PsdFrame>(new PsdFrame());
  f->a_ = block_diag(a_, a_);
  f->q_ = block_diag(q_, q_);
  f->n_ = block_diag(n_, n_);
  f->lambda_ = lambda_;
  f->lambda_.insert(f->lambda_.end(), lambda_.begin(), lambda_.end());
  f->tol_ = tol_;
  f->sqrt_a_ = block_diag(sqrt_a_, sqrt_a_);
  f->pinv_sqrt_a_ = block_diag(pinv_sqrt_a_, pinv_sqrt_a_);
  f->pinv_a_ = block_diag(pinv_a_, pinv_a_);
  f->projector_ = block_diag(projector_, projector_);
  return f;
}

FrameRef make_frame(const ComplexMatrix& a) {
  if (!a.square()) throw Error(ErrorCode::NotSquare, "metric must be square");
  HermitianEigen e = hermitian_eig(a);
  const std::size_t n = a.rows();
  double largest = 0.0;
  for (double v : e.values) largest = std::max(largest, std::abs(v));
  const RankTolerance tol = RankTolerance::from_scale(n, n, largest);
  if (n > 0 && e.values.front() < -tol.threshold)
    throw Error(ErrorCode::NotPsd,
                "metric has eigenvalue " + std::to_string(e.values.front()));

  std::vector<std::size_t> range, null;
  for (std::size_t k = 0; k < n; ++k) (e.values[k] > tol.threshold ? range : null).push_back(k);

  auto f = std::shared_ptr<PsdFrame>(new PsdFrame());
  f->a_ = hermitian_part(a);
  f->tol_ = tol;
  f->q_ = ComplexMatrix(n, range.size());
  f->n_ = ComplexMatrix(n, null.size());
  for (std::size_t k = 0; k < range.size(); ++k) {
    f->q_.set_column(k, e.vectors.column(range[k]));
    f->lambda_.push_back(e.values[range[k]]);
  }
  for (std::size_t k = 0; k < null.size(); ++k) f->n_.set_column(k, e.vectors.column(null[k]));
  f->finish();
  return f;
}

FrameRef random_psd(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  if (rank < 1 || rank > dim)
    throw Error(ErrorCode::BadRank, "rank " + std::to_string(rank) + " outside [1, " +
                                        std::to_string(dim) + "]");
  Rng rng(seed);
  const ComplexMatrix w = haar_unitary(dim, rng);
  ComplexMatrix b(rank, dim);
  for (std::size_t k = 0; k < rank; ++k) {
    const double s = std::exp(uniform(rng, std::log(0.1), std::log(3.0)));
    for (std::size_t j = 0; j < dim; ++j) b(k, j) = s * std::conj(w(j, k));
  }
  FrameRef f = make_frame(b.adjoint() * b);
  if (f->rank() != rank)
    throw Error(ErrorCode::PostconditionFailed, "generated metric lost rank");
  return f;
}

cplx semi_inner(const PsdFrame& frame, std::span<const cplx> x, std::span<const cplx> y) {
  if (x.size() != frame.dim() || y.size() != frame.dim())
    throw Error(ErrorCode::DimensionMismatch, "vector length does not match frame dimension");
  return inner(frame.metric() * x, y);
}

double semi_norm(const PsdFrame& frame, std::span<const cplx> x) {
  return std::sqrt(std::max(0.0, semi_inner(frame, x, x).real()));
}

FramedOperator::FramedOperator(FrameRef frame, ComplexMatrix t)
    : frame_(std::move(frame)), t_(std::move(t)) {
  const PsdFrame& f = *frame_;
  if (!t_.square() || t_.rows() != f.dim())
    throw Error(ErrorCode::DimensionMismatch, "operator does not match frame dimension");
  compressed_ = f.compress(t_);
  reduced_ = f.range_basis() * compressed_ * f.range_basis().adjoint();

  // A^{1/2} T (I − P) = Q Λ^{1/2} (Q* T N) N*, and (I − P) T* A is the
  // adjoint of Q Λ (Q* T N) N*; both norms only need the cross block.
  const ComplexMatrix cross = f.range_basis().adjoint() * t_ * f.null_basis();
  double half = 0.0, full = 0.0;
  const auto lambda = f.range_eigenvalues();
  for (std::size_t i = 0; i < cross.rows(); ++i)
    for (std::size_t j = 0; j < cross.cols(); ++j) {
      const double m = std::norm(cross(i, j));
      half += lambda[i] * m;
      full += lambda[i] * lambda[i] * m;
    }
  bounded_defect_ = std::sqrt(half);
  adjoint_defect_ = std::sqrt(full);
  tau_member_ = 1e-8 * (1.0 + t_.frobenius_norm() * f.metric_norm());
}

void FramedOperator::require_bounded() const {
  if (!in_LA_half())
    throw Error(ErrorCode::NotABounded,
                "T does not map N(A) into N(A) (defect " + std::to_string(bounded_defect_) + ")");
}

void FramedOperator::require_in_LA() const {
  if (!in_LA())
    throw Error(ErrorCode::NotInLA,
                "R(T*A) is not contained in R(A) (defect " + std::to_string(adjoint_defect_) + ")");
}

double op_seminorm(const FramedOperator& op) {
  op.require_bounded();
  return spectral_norm(op.compressed());
}

ComplexMatrix sharp_adjoint(const FramedOperator& op) {
  op.require_in_LA();
  const PsdFrame& f = op.frame();
  return f.pinv_metric() * op.matrix().adjoint() * f.metric();
}

FramedOperator sharp(const FramedOperator& op) {
  return FramedOperator(op.frame_ref(), sharp_adjoint(op));
}

Classification classify(const FramedOperator& op) {
  const PsdFrame& f = op.frame();
  const double tau = op.member_tolerance();
  Classification c;
  const ComplexMatrix at = f.metric() * op.matrix();
  c.A_selfadjoint = hermitian_defect(at) <= tau;
  if (c.A_selfadjoint) {
    const ExtremePairs ex = hermitian_extremes(hermitian_part(at));
    c.A_positive = ex.min_value >= -tau;
  }
  if (op.in_LA()) {
    const ComplexMatrix u_sharp = sharp_adjoint(op);
    c.A_unitary = (u_sharp * op.matrix() - f.projector()).frobenius_norm() <= tau &&
                  (op.matrix() * u_sharp - f.projector()).frobenius_norm() <= tau;
  }
  return c;
}

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::arbitrary: return "arbitrary";
    case OperatorKind::in_LA: return "in_LA";
    case OperatorKind::A_selfadjoint: return "A_selfadjoint";
    case OperatorKind::A_positive: return "A_positive";
    case OperatorKind::nilpotent_AT2zero: return "nilpotent_AT2zero";
  }
  return "?";
}

OperatorKind parse_operator_kind(std::string_view name) {
  for (OperatorKind k : {OperatorKind::arbitrary, OperatorKind::in_LA, OperatorKind::A_selfadjoint,
                         OperatorKind::A_positive, OperatorKind::nilpotent_AT2zero})
    if (to_string(k) == name) return k;
  throw Error(ErrorCode::ConfigInvalid, "unknown operator kind '" + std::string(name) + "'");
}

FramedOperator generate(OperatorKind kind, const FrameRef& frame, std::uint64_t seed) {
  const PsdFrame& f = *frame;
  const std::size_t n = f.dim();
  Rng rng(seed);
  switch (kind) {
    case OperatorKind::arbitrary:
      return FramedOperator(frame, gaussian_matrix(n, n, rng));
    case OperatorKind::in_LA: {
      const ComplexMatrix s = gaussian_matrix(n, n, rng);
      return FramedOperator(frame, f.pinv_metric() * s * f.metric());
    }
    case OperatorKind::A_selfadjoint:
    case OperatorKind::A_positive: {
      const ComplexMatrix g = gaussian_matrix(n, n, rng);
      const ComplexMatrix h =
          kind == OperatorKind::A_positive ? g * g.adjoint() : hermitian_part(g);
      const ComplexMatrix php = hermitian_part(f.projector() * h * f.projector());
      return FramedOperator(frame, f.pinv_metric() * php);
    }
    case OperatorKind::nilpotent_AT2zero: {
      const std::size_t r = f.rank();
      if (r < 2)
        throw Error(ErrorCode::UnsatisfiableKind,
                    "AT^2 = 0 with a nonzero A-part needs rank >= 2");
      // Square-zero on the range: X = U [[0, Y], [0, 0]] U*.
      const std::size_t k = r / 2;
      const ComplexMatrix y = gaussian_matrix(k, r - k, rng);
      ComplexMatrix x(r, r);
      x.set_block(0, k, y);
      const ComplexMatrix u = haar_unitary(r, rng);
      x = u * x * u.adjoint();
      const ComplexMatrix& q = f.range_basis();
      const ComplexMatrix& nb = f.null_basis();
      ComplexMatrix t = q * x * q.adjoint();
      if (nb.cols() > 0) {
        t += nb * gaussian_matrix(nb.cols(), r, rng) * q.adjoint();
        t += nb * gaussian_matrix(nb.cols(), nb.cols(), rng) * nb.adjoint();
      }
      return FramedOperator(frame, std::move(t));
    }
  }
  throw Error(ErrorCode::ConfigInvalid, "unknown operator kind");
}

FramedOperator generate_A_unitary(const FrameRef& frame, std::uint64_t seed) {
  const PsdFrame& f = *frame;
  Rng rng(seed);
  const ComplexMatrix w = haar_unitary(f.rank(), rng);
  ComplexMatrix u = f.expand(w);
  u += ComplexMatrix::identity(f.dim()) - f.projector();
  return FramedOperator(frame, std::move(u));
}

}  // namespace arad
