#include "nilcert/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "nilcert/error.hpp"

namespace nilcert {
namespace {

void require_same_order(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.order() != y.order()) throw OrderMismatchError(x.order(), y.order());
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t n) : ComplexMatrix(n, std::vector<Complex>(n * n)) {}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), data_(std::move(entries)) {
  if (n_ == 0) throw std::invalid_argument("matrix order must be at least 1");
  if (data_.size() != n_ * n_) {
    throw std::invalid_argument("expected " + std::to_string(n_ * n_) + " entries, got " +
                                std::to_string(data_.size()));
  }
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!std::isfinite(data_[k].real()) || !std::isfinite(data_[k].imag())) {
      throw NonFiniteError("non-finite entry at (" + std::to_string(k / n_) + ", " +
                           std::to_string(k % n_) + ")");
    }
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix([&] {
        const std::size_t n = rows.size();
        std::vector<Complex> entries;
        entries.reserve(n * n);
        for (const auto& r : rows) {
          if (r.size() != n) throw std::invalid_argument("matrix literal is not square");
          entries.insert(entries.end(), r.begin(), r.end());
        }
        return ComplexMatrix(n, std::move(entries));
      }()) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  return generate(n, [](std::size_t i, std::size_t j) { return i == j ? 1.0 : 0.0; });
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  return generate(values.size(),
                  [&](std::size_t i, std::size_t j) { return i == j ? values[i] : 0.0; });
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix adjoint(const ComplexMatrix& t) {
  return ComplexMatrix::generate(
      t.order(), [&](std::size_t i, std::size_t j) { return std::conj(t(j, i)); });
}

ComplexMatrix multiply(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_order(x, y);
  const std::size_t n = x.order();
  // Split storage keeps the inner loop in plain real arithmetic, which the
  // compiler vectorizes and which avoids the NaN-recovery path of
  // std::complex multiplication.
  const auto is_real = [](const ComplexMatrix& m) {
    return std::all_of(m.entries().begin(), m.entries().end(),
                       [](const Complex& z) { return z.imag() == 0.0; });
  };
  if (is_real(x) && is_real(y)) {
    std::vector<double> yr(n * n), c(n * n, 0.0);
    for (std::size_t k = 0; k < n * n; ++k) yr[k] = y.entries()[k].real();
    for (std::size_t i = 0; i < n; ++i) {
      double* out = &c[i * n];
      for (std::size_t k = 0; k < n; ++k) {
        const double a = x(i, k).real();
        if (a == 0.0) continue;
        const double* b = &yr[k * n];
        for (std::size_t j = 0; j < n; ++j) out[j] += a * b[j];
      }
    }
    std::vector<Complex> entries(c.begin(), c.end());
    return ComplexMatrix(n, std::move(entries));
  }

  std::vector<double> yr(n * n), yi(n * n), cr(n * n, 0.0), ci(n * n, 0.0);
  const auto ye = y.entries();
  for (std::size_t k = 0; k < n * n; ++k) {
    yr[k] = ye[k].real();
    yi[k] = ye[k].imag();
  }
  for (std::size_t i = 0; i < n; ++i) {
    double* out_r = &cr[i * n];
    double* out_i = &ci[i * n];
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = x(i, k).real();
      const double ai = x(i, k).imag();
      if (ar == 0.0 && ai == 0.0) continue;
      const double* br = &yr[k * n];
      const double* bi = &yi[k * n];
      for (std::size_t j = 0; j < n; ++j) {
        out_r[j] += ar * br[j] - ai * bi[j];
        out_i[j] += ar * bi[j] + ai * br[j];
      }
    }
  }
  std::vector<Complex> entries(n * n);
  for (std::size_t k = 0; k < n * n; ++k) entries[k] = Complex(cr[k], ci[k]);
  return ComplexMatrix(n, std::move(entries));
}

ComplexMatrix add(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_order(x, y);
  return ComplexMatrix::generate(x.order(),
                                 [&](std::size_t i, std::size_t j) { return x(i, j) + y(i, j); });
}

ComplexMatrix subtract(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_order(x, y);
  return ComplexMatrix::generate(x.order(),
                                 [&](std::size_t i, std::size_t j) { return x(i, j) - y(i, j); });
}

ComplexMatrix scale(Complex factor, const ComplexMatrix& x) {
  return ComplexMatrix::generate(x.order(),
                                 [&](std::size_t i, std::size_t j) { return factor * x(i, j); });
}

ComplexMatrix entrywise_abs(const ComplexMatrix& t) {
  return ComplexMatrix::generate(t.order(),
                                 [&](std::size_t i, std::size_t j) { return std::abs(t(i, j)); });
}

Complex trace(const ComplexMatrix& t) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < t.order(); ++i) sum += t(i, i);
  return sum;
}

double frobenius_norm(const ComplexMatrix& t) {
  // Scaled sum of squares so that entries near the overflow threshold do not
  // produce an infinite norm.
  double largest = 0.0;
  for (const Complex& z : t.entries()) {
    largest = std::max({largest, std::abs(z.real()), std::abs(z.imag())});
  }
  if (largest == 0.0) return 0.0;
  double sum = 0.0;
  for (const Complex& z : t.entries()) {
    const double re = z.real() / largest;
    const double im = z.imag() / largest;
    sum += re * re + im * im;
  }
  return largest * std::sqrt(sum);
}

ComplexMatrix matrix_power(const ComplexMatrix& t, unsigned k) {
  ComplexMatrix result = ComplexMatrix::identity(t.order());
  if (k == 0) return result;
  ComplexMatrix base = t;
  bool first = true;
  while (true) {
    if (k & 1U) {
      result = first ? base : result * base;
      first = false;
    }
    k >>= 1U;
    if (k == 0) break;
    base = base * base;
  }
  return result;
}

CartesianDecomposition cartesian_decompose(const ComplexMatrix& t) {
  const std::size_t n = t.order();
  // Component-wise formulas: entry (j, i) is computed from the same two
  // operands as entry (i, j) in swapped order, so the outputs are Hermitian
  // bit-for-bit and have exactly real diagonals.
  auto re = ComplexMatrix::generate(n, [&](std::size_t i, std::size_t j) {
    const Complex a = t(i, j);
    const Complex b = t(j, i);
    return Complex((a.real() + b.real()) / 2.0, (a.imag() - b.imag()) / 2.0);
  });
  auto im = ComplexMatrix::generate(n, [&](std::size_t i, std::size_t j) {
    // (a - conj(b)) / (2i) = ((Im a + Im b) / 2, -(Re a - Re b) / 2)
    const Complex a = t(i, j);
    const Complex b = t(j, i);
    return Complex((a.imag() + b.imag()) / 2.0, (b.real() - a.real()) / 2.0);
  });
  return {std::move(re), std::move(im)};
}

ComplexMatrix reconstruct(const CartesianDecomposition& parts) {
  const ComplexMatrix& a = parts.real_part;
  const ComplexMatrix& b = parts.imag_part;
  if (a.order() != b.order()) throw OrderMismatchError(a.order(), b.order());
  return ComplexMatrix::generate(a.order(), [&](std::size_t i, std::size_t j) {
    return Complex(a(i, j).real() - b(i, j).imag(), a(i, j).imag() + b(i, j).real());
  });
}

double hermitian_defect(const ComplexMatrix& h) { return frobenius_norm(h - adjoint(h)); }

double default_zero_tolerance(const ComplexMatrix& t) {
  return 1e-10 * std::max(1.0, frobenius_norm(t));
}

bool is_zero(const ComplexMatrix& t, double tol) {
  if (tol < 0.0) throw std::invalid_argument("tolerance must be nonnegative");
  return frobenius_norm(t) <= tol;
}

bool is_zero(const ComplexMatrix& t) { return is_zero(t, default_zero_tolerance(t)); }

}  // namespace nilcert
