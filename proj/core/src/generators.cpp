#include "nilcert/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilcert/error.hpp"

namespace nilcert {
namespace {

constexpr int kMaxUnitaryAttempts = 8;

void require_scale(double entry_scale) {
  if (!(entry_scale >= 0.0) || !std::isfinite(entry_scale)) {
    throw std::invalid_argument("entry_scale must be finite and nonnegative");
  }
}

// Column-major orthonormalization in place; false if a column collapses.
bool gram_schmidt(std::vector<std::vector<Complex>>& cols) {
  const std::size_t n = cols.size();
  for (std::size_t j = 0; j < n; ++j) {
    auto& v = cols[j];
    double original = 0.0;
    for (const Complex& z : v) original += std::norm(z);
    original = std::sqrt(original);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        Complex dot = 0.0;
        for (std::size_t k = 0; k < n; ++k) dot += std::conj(cols[i][k]) * v[k];
        for (std::size_t k = 0; k < n; ++k) v[k] -= dot * cols[i][k];
      }
    }
    double norm = 0.0;
    for (const Complex& z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (!(norm > 1e-10 * original)) return false;
    for (Complex& z : v) z /= norm;
  }
  return true;
}

}  // namespace

ComplexMatrix random_gaussian_matrix(Rng& rng, std::size_t order, double entry_scale) {
  require_scale(entry_scale);
  std::vector<Complex> entries(order * order);
  for (auto& z : entries) z = entry_scale * rng.complex_gaussian();
  return ComplexMatrix(order, std::move(entries));
}

ComplexMatrix random_unitary(Rng& rng, std::size_t order) {
  for (int attempt = 0; attempt < kMaxUnitaryAttempts; ++attempt) {
    std::vector<std::vector<Complex>> cols(order, std::vector<Complex>(order));
    for (auto& col : cols) {
      for (auto& z : col) z = rng.complex_gaussian();
    }
    if (gram_schmidt(cols)) {
      return ComplexMatrix::generate(order,
                                     [&](std::size_t i, std::size_t j) { return cols[j][i]; });
    }
  }
  throw Error("random_unitary: degenerate Gaussian draw " +
              std::to_string(kMaxUnitaryAttempts) + " times in a row");
}

ComplexMatrix random_unitary(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  return random_unitary(rng, cfg.order);
}

ComplexMatrix random_nilpotent(Rng& rng, std::size_t order, double entry_scale,
                               std::optional<std::size_t> index_lower_bound) {
  require_scale(entry_scale);
  if (order < 2) throw std::invalid_argument("a nonzero nilpotent needs order >= 2");
  if (!(entry_scale > 0.0)) throw std::invalid_argument("random_nilpotent needs entry_scale > 0");
  const std::size_t bound = index_lower_bound.value_or(2);
  if (bound > order) throw std::invalid_argument("index_lower_bound exceeds order");

  std::vector<Complex> upper(order * order, Complex(0.0));
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = i + 1; j < order; ++j) upper[i * order + j] = entry_scale * rng.complex_gaussian();
  }
  const double floor = entry_scale / 4.0;
  for (std::size_t i = 0; i + 1 < std::max<std::size_t>(bound, 2); ++i) {
    Complex& z = upper[i * order + i + 1];
    const double modulus = std::abs(z);
    if (modulus < floor) z = modulus == 0.0 ? Complex(floor) : z * (floor / modulus);
  }
  const ComplexMatrix s(order, std::move(upper));
  const ComplexMatrix q = random_unitary(rng, order);
  return q * s * adjoint(q);
}

ComplexMatrix random_nilpotent(const GeneratorConfig& cfg,
                               std::optional<std::size_t> index_lower_bound) {
  Rng rng(cfg.seed);
  return random_nilpotent(rng, cfg.order, cfg.entry_scale, index_lower_bound);
}

ComplexMatrix random_hermitian(Rng& rng, std::size_t order, double entry_scale) {
  return cartesian_decompose(random_gaussian_matrix(rng, order, entry_scale)).real_part;
}

ComplexMatrix random_hermitian(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  return random_hermitian(rng, cfg.order, cfg.entry_scale);
}

ComplexMatrix random_psd(Rng& rng, std::size_t order, double entry_scale) {
  const ComplexMatrix g = random_gaussian_matrix(rng, order, entry_scale);
  return adjoint(g) * g;
}

ComplexMatrix random_psd(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  return random_psd(rng, cfg.order, cfg.entry_scale);
}

ComplexMatrix random_accretive(Rng& rng, std::size_t order, double entry_scale) {
  const ComplexMatrix p = random_psd(rng, order, entry_scale);
  const ComplexMatrix h = random_hermitian(rng, order, entry_scale);
  return reconstruct({p, h});
}

ComplexMatrix random_accretive(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  return random_accretive(rng, cfg.order, cfg.entry_scale);
}

}  // namespace nilcert
