#include "arad/matrix.hpp"

#include <cmath>

#include "arad/error.hpp"

namespace arad {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(op) + ": shapes differ");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::DimensionMismatch, "entry count does not equal rows*cols");
  }
  if (!all_finite()) throw Error(ErrorCode::NonFinite, "matrix entries must be finite");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite()) throw Error(ErrorCode::NonFinite, "matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  if (!m.all_finite()) throw Error(ErrorCode::NonFinite, "matrix entries must be finite");
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                   std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block out of range");
  }
  ComplexMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block out of range");
  }
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

CVector ComplexMatrix::column(std::size_t j) const {
  CVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void ComplexMatrix::set_column(std::size_t j, std::span<const cplx> v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_shape(*this, o, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_shape(*this, o, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

double ComplexMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& x : data_) s += std::norm(x);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::abs(x));
  return m;
}

bool ComplexMatrix::all_finite() const noexcept {
  for (const auto& x : data_) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  }
  return true;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "operator*: inner dims");
  ComplexMatrix c(a.rows(), b.cols());
  const std::size_t n = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx* crow = &c(i, 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      const cplx* brow = &b(k, 0);
      for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

CVector operator*(const ComplexMatrix& a, std::span<const cplx> x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matvec: dims");
  CVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s{};
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

ComplexMatrix power(const ComplexMatrix& m, unsigned n) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "power of non-square matrix");
  ComplexMatrix result = ComplexMatrix::identity(m.rows());
  ComplexMatrix base = m;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

ComplexMatrix assemble2x2(const ComplexMatrix& a, const ComplexMatrix& b,
                          const ComplexMatrix& c, const ComplexMatrix& d) {
  const std::size_t n = a.rows();
  for (const auto* m : {&a, &b, &c, &d}) {
    if (m->rows() != n || m->cols() != n) {
      throw Error(ErrorCode::DimensionMismatch, "assemble2x2: blocks must be n x n");
    }
  }
  ComplexMatrix r(2 * n, 2 * n);
  r.set_block(0, 0, a);
  r.set_block(0, n, b);
  r.set_block(n, 0, c);
  r.set_block(n, n, d);
  return r;
}

cplx inner(std::span<const cplx> x, std::span<const cplx> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "inner: lengths");
  cplx s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
  return s;
}

double norm2(std::span<const cplx> x) {
  double s = 0.0;
  for (const auto& v : x) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace arad
