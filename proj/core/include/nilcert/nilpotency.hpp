#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nilcert/matrix.hpp"

namespace nilcert {

/// Relative threshold factor used by nilpotency_index when none is given.
inline constexpr double kDefaultNilpotencyTolerance = 1e-10;

/// Result of scanning T, T^2, ..., T^n for the first (numerically) zero power.
///
/// power k counts as zero when ||T^k||_F <= tol * || |T|^k ||_F, where |T| is
/// the entrywise modulus. The right-hand side bounds the rounding error of the
/// computed product, so the test is scale-free and never fires on a power that
/// is small only because T is small or non-normal.
struct NilpotencyReport {
  /// Smallest k with T^k = 0, if any k <= n qualifies.
  std::optional<std::size_t> index;
  /// ||T^k||_F for k = 1..n (element k-1).
  std::vector<double> power_norms;
  /// Absolute threshold tol * || |T|^k ||_F for k = 1..n.
  std::vector<double> thresholds;
  /// The relative factor tol.
  double tol_used = kDefaultNilpotencyTolerance;
};

NilpotencyReport nilpotency_index(const ComplexMatrix& t,
                                  double tol = kDefaultNilpotencyTolerance);

struct NormalityReport {
  bool normal = false;
  /// ||T T* - T* T||_F
  double defect = 0.0;
};

/// Normal iff defect <= tol * max(1, ||T||_F^2).
NormalityReport is_normal(const ComplexMatrix& t, double tol = 1e-10);

/// g_k = ||T^k||_F^(1/k), k = 1..K.
struct GelfandSequence {
  std::vector<double> values;
  std::size_t requested = 0;
  /// Set when a power left the representable range; values then stops early.
  bool truncated = false;
};

GelfandSequence gelfand_sequence(const ComplexMatrix& t, std::size_t k_max);

/// g_k alone, by repeated squaring: O(log k) products instead of k.
double gelfand_term(const ComplexMatrix& t, std::size_t k);

/// | ||T^k||_2 - ||T||_2^k | in the spectral norm.
double norm_power_defect(const ComplexMatrix& t, unsigned k);

}  // namespace nilcert
