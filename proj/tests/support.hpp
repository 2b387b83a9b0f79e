#pragma once

#include "nilcert/matrix.hpp"
#include "oracles.hpp"

namespace test_support {

inline oracle::Dense to_dense(const nilcert::ComplexMatrix& m) {
  oracle::Dense d(m.order(), std::vector<oracle::Complex>(m.order()));
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) d[i][j] = m(i, j);
  }
  return d;
}

inline const nilcert::ComplexMatrix& jordan2() {
  static const nilcert::ComplexMatrix m{{0, 1}, {0, 0}};
  return m;
}

inline const nilcert::ComplexMatrix& example_pp() {
  static const nilcert::ComplexMatrix m{
      {2, 2, -2, 0}, {5, 1, -3, 0}, {1, 5, -3, 0}, {0, 0, 0, 0}};
  return m;
}

inline const nilcert::ComplexMatrix& strict_upper4() {
  static const nilcert::ComplexMatrix m{
      {0, 1, 2, 4}, {0, 0, 2, 1}, {0, 0, 0, 5}, {0, 0, 0, 0}};
  return m;
}

inline double max_abs_diff(const nilcert::ComplexMatrix& a, const nilcert::ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return worst;
}

}  // namespace test_support
