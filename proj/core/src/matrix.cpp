#include "opmeans/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "opmeans/error.hpp"

namespace opmeans {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::TriangleEqualityFails: return "TriangleEqualityFails";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InvalidTolerance: return "InvalidTolerance";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {
  if (n == 0) throw Error(ErrorCode::Precondition, "matrix dimension must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), data_(std::move(entries)) {
  if (n == 0) throw Error(ErrorCode::Precondition, "matrix dimension must be >= 1");
  if (data_.size() != n * n) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(n * n) + " entries, got " +
                    std::to_string(data_.size()));
  }
  if (!all_finite()) throw Error(ErrorCode::DomainError, "non-finite matrix entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "ragged row list");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(n, std::move(entries));
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs);
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  // i-k-j order keeps the inner loop on contiguous rows.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& t) {
  const std::size_t n = t.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = std::conj(t(j, i));
  return out;
}

ComplexMatrix hermitian_part(const ComplexMatrix& h) {
  const std::size_t n = h.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = h(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = 0.5 * (h(i, j) + std::conj(h(j, i)));
      out(i, j) = z;
      out(j, i) = std::conj(z);
    }
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

Complex trace(const ComplexMatrix& t) {
  Complex s{};
  for (std::size_t i = 0; i < t.dim(); ++i) s += t(i, i);
  return s;
}

double frobenius_norm(const ComplexMatrix& t) {
  // Scaled accumulation; entries can be large after exp().
  double scale = 0.0;
  double ssq = 1.0;
  for (const Complex& z : t.entries()) {
    for (double v : {z.real(), z.imag()}) {
      if (v == 0.0) continue;
      const double a = std::abs(v);
      if (scale < a) {
        ssq = 1.0 + ssq * (scale / a) * (scale / a);
        scale = a;
      } else {
        ssq += (a / scale) * (a / scale);
      }
    }
  }
  return scale * std::sqrt(ssq);
}

double hermitian_defect(const ComplexMatrix& t) {
  const std::size_t n = t.dim();
  double ssq = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ssq += std::norm(t(i, j) - std::conj(t(j, i)));
  return std::sqrt(ssq);
}

ComplexMatrix inverse(const ComplexMatrix& t) {
  const std::size_t n = t.dim();
  ComplexMatrix lu = t;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  double max_entry = 0.0;
  for (const Complex& z : t.entries()) max_entry = std::max(max_entry, std::abs(z));
  const double pivot_floor =
      std::numeric_limits<double>::epsilon() * static_cast<double>(n) * max_entry;

  // Gauss-Jordan with partial pivoting, applied to [lu | inv].
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(lu(r, col)) > std::abs(lu(piv, col))) piv = r;
    if (!(std::abs(lu(piv, col)) > pivot_floor))
      throw Error(ErrorCode::Singular, "matrix is numerically singular");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(lu(col, j), lu(piv, j));
        std::swap(inv(col, j), inv(piv, j));
      }
    }
    const Complex d = 1.0 / lu(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      lu(col, j) *= d;
      inv(col, j) *= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = lu(r, col);
      if (f == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        lu(r, j) -= f * lu(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

}  // namespace opmeans
