#include <cmath>

#include "doctest.h"
#include "nilcert/nilpotency.hpp"
#include "nilcert/spectral.hpp"
#include "nilcert/volterra.hpp"

using namespace nilcert;

TEST_CASE("small Volterra matrices") {
  CHECK(volterra_matrix(1) == ComplexMatrix{{0.5}});
  CHECK(volterra_matrix(2) == (ComplexMatrix{{0.25, 0}, {0.5, 0.25}}));
  CHECK_THROWS_AS(volterra_matrix(0), std::invalid_argument);
}

TEST_CASE("real part is exactly a multiple of the all-ones matrix") {
  for (std::size_t n : {1u, 2u, 3u, 7u, 16u, 100u, 255u, 512u}) {
    const auto re = cartesian_decompose(volterra_matrix(n)).real_part;
    const Complex expected = 0.5 / static_cast<double>(n);
    bool exact = true;
    for (const Complex& z : re.entries()) exact = exact && z == expected;
    CHECK_MESSAGE(exact, "n = " << n);
  }
}

TEST_CASE("Jacobi sees a PSD real part with top eigenvalue one half") {
  for (std::size_t n : {3u, 10u, 16u, 33u, 64u}) {
    const auto spec = hermitian_eigenvalues(cartesian_decompose(volterra_matrix(n)).real_part);
    CHECK(spec.min() >= -1e-12);
    CHECK(std::abs(spec.max() - 0.5) <= 1e-10);
    CHECK(classify_definiteness(spec) == Definiteness::PositiveSemidefinite);
  }
}

TEST_CASE("spectral radius decreases with n") {
  double previous = 1.0;
  for (std::size_t n = 1; n <= 40; ++n) {
    const auto v = volterra_matrix(n);
    const double rho = std::abs(v(0, 0));
    CHECK(rho == 0.5 / static_cast<double>(n));
    CHECK(rho < previous);
    previous = rho;
  }
}

TEST_CASE("Gelfand terms do not increase") {
  const auto g = gelfand_sequence(volterra_matrix(32), 64);
  REQUIRE(g.values.size() == 64);
  for (std::size_t k = 2; k < g.values.size(); ++k) {
    CHECK(g.values[k] <= g.values[k - 1] * (1 + 1e-12));
  }
}

TEST_CASE("volterra_report") {
  const auto r16 = volterra_report(16);
  CHECK(r16.n == 16);
  CHECK(r16.min_eig_re >= -1e-12);
  CHECK(std::abs(r16.max_eig_re - 0.5) <= 1e-10);
  CHECK(r16.spectral_radius_exact == 1.0 / 32);
  CHECK_FALSE(r16.nilpotent);
  CHECK(r16.certificate_present);

  const auto r64 = volterra_report(64);
  CHECK(r64.spectral_radius_exact == 1.0 / 128);
  CHECK(r64.gelfand_k == 128);
  CHECK_FALSE(r64.gelfand_truncated);
  CHECK(r64.gelfand_tail >= 1.0 / 128);
  CHECK(r64.gelfand_tail <= 4.0 / 128);
  CHECK_FALSE(r64.nilpotent);
  CHECK(r64.certificate_present);
}
