#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace opmeans {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  /// n x n zero matrix. n must be >= 1.
  explicit ComplexMatrix(std::size_t n);
  /// Takes n*n row-major entries; throws on wrong length or non-finite data.
  ComplexMatrix(std::size_t n, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return data_.size(); }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<Complex> entries() noexcept { return data_; }
  std::span<const Complex> entries() const noexcept { return data_; }

  bool all_finite() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& t);

/// (H + H*) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix& h);

/// AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

Complex trace(const ComplexMatrix& t);
double frobenius_norm(const ComplexMatrix& t);

/// ||T - T*||_F.
double hermitian_defect(const ComplexMatrix& t);

/// General inverse by LU with partial pivoting. Throws Error(Singular) when a
/// pivot falls below eps * n * max|entry|.
ComplexMatrix inverse(const ComplexMatrix& t);

/// Throws Error(DimensionMismatch) unless a and b have the same dimension.
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace opmeans
