#include "nilcert/volterra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nilcert/nilpotency.hpp"
#include "nilcert/spectral.hpp"
#include "nilcert/theorems.hpp"

namespace nilcert {

ComplexMatrix volterra_matrix(std::size_t n) {
  if (n == 0) throw std::invalid_argument("volterra_matrix needs n >= 1");
  const double h = 1.0 / static_cast<double>(n);
  return ComplexMatrix::generate(n, [&](std::size_t i, std::size_t j) {
    if (j < i) return h;
    if (j == i) return h / 2.0;
    return 0.0;
  });
}

VolterraReport volterra_report(std::size_t n) {
  const ComplexMatrix v = volterra_matrix(n);
  VolterraReport r;
  r.n = n;

  const ComplexMatrix re = cartesian_decompose(v).real_part;
  const SpectrumReport spec = hermitian_eigenvalues(re);
  r.min_eig_re = spec.min();
  r.max_eig_re = spec.max();

  r.spectral_radius_exact = v(0, 0).real();
  for (std::size_t i = 1; i < n; ++i) {
    r.spectral_radius_exact = std::max(r.spectral_radius_exact, std::abs(v(i, i)));
  }

  r.gelfand_k = 2 * n;
  r.gelfand_tail = gelfand_term(v, r.gelfand_k);
  r.gelfand_truncated = !std::isfinite(r.gelfand_tail);

  r.nilpotent = nilpotency_index(v).index.has_value();
  r.certificate_present = non_nilpotence_certificate(v).has_value();
  return r;
}

}  // namespace nilcert
