#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace nilcert {

using Complex = std::complex<double>;

/// Unit roundoff of the working precision (2^-52).
inline constexpr double kEpsilon = 0x1p-52;

/// Dense square complex matrix stored row-major.
///
/// Instances are values: every entry is finite and the order is at least
/// one, checked on construction. No operation mutates an existing matrix;
/// arithmetic always produces a fresh one.
class ComplexMatrix {
 public:
  /// Zero matrix of order n.
  explicit ComplexMatrix(std::size_t n);

  /// Takes ownership of n*n row-major entries.
  ComplexMatrix(std::size_t n, std::vector<Complex> entries);

  /// Row-by-row literal, e.g. {{0, 1}, {0, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);

  /// Builds entry (i, j) from fn(i, j).
  template <typename Fn>
  static ComplexMatrix generate(std::size_t n, Fn&& fn) {
    std::vector<Complex> entries(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        entries[i * n + j] = Complex(fn(i, j));
      }
    }
    return ComplexMatrix(n, std::move(entries));
  }

  std::size_t order() const noexcept { return n_; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * n_ + j];
  }
  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<const Complex> row(std::size_t i) const noexcept {
    return std::span<const Complex>(data_).subspan(i * n_, n_);
  }

  /// Exact entrywise equality.
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Complex> data_;
};

/// Hermitian pair (A, B) with T = A + iB.
struct CartesianDecomposition {
  ComplexMatrix real_part;  // (T + T*) / 2
  ComplexMatrix imag_part;  // (T - T*) / (2i)
};

ComplexMatrix adjoint(const ComplexMatrix& t);
ComplexMatrix multiply(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix add(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix subtract(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix scale(Complex factor, const ComplexMatrix& x);

inline ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
  return multiply(x, y);
}
inline ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y) {
  return add(x, y);
}
inline ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y) {
  return subtract(x, y);
}
inline ComplexMatrix operator*(Complex factor, const ComplexMatrix& x) {
  return scale(factor, x);
}

/// Entrywise modulus |T| as a (real, nonnegative) complex matrix.
ComplexMatrix entrywise_abs(const ComplexMatrix& t);

Complex trace(const ComplexMatrix& t);
double frobenius_norm(const ComplexMatrix& t);

/// T^k; T^0 is the identity.
ComplexMatrix matrix_power(const ComplexMatrix& t, unsigned k);

CartesianDecomposition cartesian_decompose(const ComplexMatrix& t);

/// A + iB.
ComplexMatrix reconstruct(const CartesianDecomposition& parts);

/// ||H - H*||_F.
double hermitian_defect(const ComplexMatrix& h);

/// 1e-10 * max(1, ||T||_F).
double default_zero_tolerance(const ComplexMatrix& t);

bool is_zero(const ComplexMatrix& t, double tol);
bool is_zero(const ComplexMatrix& t);

}  // namespace nilcert
