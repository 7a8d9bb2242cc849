#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gyb {

using Complex = std::complex<double>;

/// Default absolute entrywise tolerance for all equality checks.
inline constexpr double kDefaultTolerance = 1e-9;

/// Dense square complex matrix, row-major.
///
/// Acts on column vectors: entry (row, col) is the coefficient of basis
/// vector `row` in the image of basis vector `col`. For an endomorphism of
/// V^{⊗n} the basis is the lexicographic multi-index basis with the first
/// tensor factor most significant.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  /// Row-by-row literal; every row must have as many entries as there are rows.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ == 0; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }

  std::span<Complex> entries() noexcept { return data_; }
  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  /// Largest absolute entry.
  double max_abs() const noexcept;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
/// Matrix product a·b (b acts first).
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max-entry distance; +inf when dimensions differ.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kDefaultTolerance);

/// V^{⊗n} with dim V = d.
struct TensorShape {
  std::size_t d = 0;
  std::size_t n = 0;

  /// d^n, throws ShapeError on overflow or zero fields.
  std::size_t dim() const;
  bool compatible(const ComplexMatrix& f) const { return f.dim() == dim(); }
};

/// Checked integer power, throws ShapeError on overflow.
std::size_t ipow(std::size_t base, std::size_t exp);

}  // namespace gyb
