#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace arad {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Dense rectangular complex matrix, row-major.
///
/// Constructors that take caller data reject non-finite entries; arithmetic
/// results are not re-validated.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b);

  CVector column(std::size_t j) const;
  void set_column(std::size_t j, std::span<const cplx> v);

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  double frobenius_norm() const noexcept;
  double max_abs() const noexcept;
  bool all_finite() const noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx s);
CVector operator*(const ComplexMatrix& a, std::span<const cplx> x);

/// Integer power by repeated squaring; power 0 gives the identity.
ComplexMatrix power(const ComplexMatrix& m, unsigned n);

/// [[a, b], [c, d]] for equally sized square blocks.
ComplexMatrix assemble2x2(const ComplexMatrix& a, const ComplexMatrix& b,
                          const ComplexMatrix& c, const ComplexMatrix& d);

/// <x, y> = y* x (linear in the first argument).
cplx inner(std::span<const cplx> x, std::span<const cplx> y);
double norm2(std::span<const cplx> x);

}  // namespace arad
