#pragma once

#include <cstddef>

#include "nilcert/matrix.hpp"

namespace nilcert {

/// Composite-trapezoid discretization of (Vf)(x) = ∫_0^x f(t) dt on the grid
/// x_i = i/n, i = 1..n: with h = 1/n, V[i][j] = h below the diagonal, h/2 on
/// it, 0 above. Its real part is exactly (h/2) times the all-ones matrix.
ComplexMatrix volterra_matrix(std::size_t n);

struct VolterraReport {
  std::size_t n = 0;
  double min_eig_re = 0.0;
  double max_eig_re = 0.0;
  /// Spectral radius read off the triangular diagonal: h/2 = 1/(2n).
  double spectral_radius_exact = 0.0;
  /// Gelfand term g_K at K = gelfand_k; a quasinilpotence indicator only.
  double gelfand_tail = 0.0;
  std::size_t gelfand_k = 0;
  bool gelfand_truncated = false;
  bool nilpotent = false;
  bool certificate_present = false;
};

VolterraReport volterra_report(std::size_t n);

}  // namespace nilcert
