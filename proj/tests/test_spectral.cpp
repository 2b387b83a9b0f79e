#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "nilcert/error.hpp"
#include "nilcert/generators.hpp"
#include "nilcert/spectral.hpp"
#include "support.hpp"

using namespace nilcert;
using test_support::example_pp;
using test_support::jordan2;
using test_support::strict_upper4;

namespace {

// Re(example_pp) and Re(strict_upper4) spectra, frozen from the
// characteristic-polynomial oracle (30-digit evaluation).
const std::vector<double> kExamplePpRe{-3.70952802339159118, -1.33577691152621442, 0.0,
                                       5.04530493491780559};
const std::vector<double> kStrictUpper4Re{-2.81061292775755116, -1.04291276116859232,
                                          -0.204898224434488120, 4.05842391336063160};

SpectrumReport spectrum_of(std::vector<double> values, double tol = 1e-12) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return SpectrumReport{std::move(values), n, tol};
}

double scale_of(const ComplexMatrix& h) { return std::max(1.0, frobenius_norm(h)); }

}  // namespace

TEST_CASE("hermitian_eigenvalues on the gallery matrices") {
  const auto re_j = cartesian_decompose(jordan2()).real_part;
  const auto sj = hermitian_eigenvalues(re_j);
  REQUIRE(sj.eigenvalues.size() == 2);
  CHECK(sj.eigenvalues[0] == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(sj.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(sj.order == 2);
  CHECK(sj.tol == doctest::Approx(1e-8));

  const auto sd = hermitian_eigenvalues(ComplexMatrix::diagonal({0, 3, -2, -1}));
  CHECK(sd.eigenvalues == std::vector<double>{-2, -1, 0, 3});

  const auto re_pp = cartesian_decompose(example_pp()).real_part;
  const auto spp = hermitian_eigenvalues(re_pp);
  const std::vector<double> printed{-3.71, -1.33, 0.0, 5.04};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(spp.eigenvalues[i] - printed[i]) <= 0.01);
    CHECK(std::abs(spp.eigenvalues[i] - kExamplePpRe[i]) <= 1e-12 * scale_of(re_pp));
  }

  const auto re_su = cartesian_decompose(strict_upper4()).real_part;
  const auto ssu = hermitian_eigenvalues(re_su);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(ssu.eigenvalues[i] - kStrictUpper4Re[i]) <= 1e-12 * scale_of(re_su));
  }
}

TEST_CASE("frozen spectra agree with the characteristic-polynomial oracle") {
  for (const auto* m : {&example_pp(), &strict_upper4()}) {
    const auto re = cartesian_decompose(*m).real_part;
    const auto roots = oracle::hermitian_eigenvalues_by_charpoly(test_support::to_dense(re));
    const auto& frozen = (m == &example_pp()) ? kExamplePpRe : kStrictUpper4Re;
    REQUIRE(roots.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(roots[i] - frozen[i]) <= 1e-9);
  }
  // 3x3 strictly upper chain: Re T = [[0,1,0],[1,0,1],[0,1,0]] / 2, spectrum {-1/sqrt2, 0, 1/sqrt2}.
  const ComplexMatrix chain{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  const auto re = cartesian_decompose(chain).real_part;
  const auto roots = oracle::hermitian_eigenvalues_by_charpoly(test_support::to_dense(re));
  const auto spec = hermitian_eigenvalues(re);
  REQUIRE(roots.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(spec.eigenvalues[i] - roots[i]) <= 1e-9);
  CHECK(spec.eigenvalues[2] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("non-Hermitian input is rejected with its defect") {
  try {
    hermitian_eigenvalues(jordan2());
    FAIL("expected HermitianViolationError");
  } catch (const HermitianViolationError& e) {
    CHECK(e.defect() == doctest::Approx(std::sqrt(2.0)));
  }
  // Within the validation tolerance is accepted.
  const ComplexMatrix nearly{{1, 1e-12}, {0, 2}};
  CHECK_NOTHROW(hermitian_eigenvalues(nearly));
}

TEST_CASE("eigenvalue sum and reconstruction on random Hermitian matrices") {
  Rng rng(1234);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 16;
    const auto h = random_hermitian(rng, n, std::pow(10.0, trial % 5 - 2));
    const double s = scale_of(h);
    const auto sys = detail::hermitian_eigensystem(h);
    CHECK(std::is_sorted(sys.eigenvalues.begin(), sys.eigenvalues.end()));

    double sum = 0.0;
    for (double x : sys.eigenvalues) sum += x;
    CHECK(std::abs(sum - trace(h).real()) <= static_cast<double>(n) * 1e-10 * s);

    const auto lambda = ComplexMatrix::diagonal(sys.eigenvalues);
    const auto back = sys.vectors * lambda * adjoint(sys.vectors);
    CHECK(frobenius_norm(back - h) <= 1e-10 * s);
    CHECK(frobenius_norm(adjoint(sys.vectors) * sys.vectors - ComplexMatrix::identity(n)) <=
          1e-12 * static_cast<double>(n));
  }
}

TEST_CASE("eigenvalue product matches cofactor determinant for n <= 4") {
  Rng rng(77);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto h = random_hermitian(rng, n);
    const auto spec = hermitian_eigenvalues(h);
    double product = 1.0;
    for (double x : spec.eigenvalues) product *= x;
    const auto det = oracle::cofactor_determinant(test_support::to_dense(h));
    CHECK(std::abs(det.imag()) <= 1e-12 * std::pow(scale_of(h), static_cast<double>(n)));
    CHECK(std::abs(product - det.real()) <= 1e-8 * std::max(std::abs(det.real()), 1e-12));
  }
}

TEST_CASE("shift invariance") {
  Rng rng(4321);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 8;
    const auto h = random_hermitian(rng, n);
    const double c = 10.0 * (rng.uniform() - 0.5);
    const auto shifted = h + scale(c, ComplexMatrix::identity(n));
    const auto a = hermitian_eigenvalues(h);
    const auto b = hermitian_eigenvalues(shifted);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(b.eigenvalues[i] - (a.eigenvalues[i] + c)) <= 1e-10 * scale_of(shifted));
    }
  }
}

TEST_CASE("classify_definiteness") {
  CHECK(classify_definiteness(spectrum_of({-0.5, 0.5})) == Definiteness::Indefinite);
  CHECK(classify_definiteness(spectrum_of({0, 0, 0.5})) == Definiteness::PositiveSemidefinite);
  CHECK(classify_definiteness(spectrum_of({0, 0, 0})) == Definiteness::Zero);
  CHECK(classify_definiteness(spectrum_of({1, 2})) == Definiteness::PositiveDefinite);
  CHECK(classify_definiteness(spectrum_of({-1, -2})) == Definiteness::NegativeDefinite);
  CHECK(classify_definiteness(spectrum_of({-1, 0})) == Definiteness::NegativeSemidefinite);
  // Tolerance absorbs rounding noise on either side of zero.
  CHECK(classify_definiteness(spectrum_of({-1e-13, 1.0}, 1e-12)) ==
        Definiteness::PositiveSemidefinite);
  CHECK(classify_definiteness(spectrum_of({-1e-13, 1e-13}, 1e-12)) == Definiteness::Zero);

  SUBCASE("negation mirrors the verdict") {
    auto mirror = [](Definiteness d) {
      switch (d) {
        case Definiteness::PositiveDefinite: return Definiteness::NegativeDefinite;
        case Definiteness::NegativeDefinite: return Definiteness::PositiveDefinite;
        case Definiteness::PositiveSemidefinite: return Definiteness::NegativeSemidefinite;
        case Definiteness::NegativeSemidefinite: return Definiteness::PositiveSemidefinite;
        default: return d;
      }
    };
    Rng rng(55);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + trial % 6;
      // Mix Hermitian, PSD and negated PSD inputs so every class shows up.
      ComplexMatrix h = trial % 3 == 0   ? random_hermitian(rng, n)
                        : trial % 3 == 1 ? random_psd(rng, n)
                                         : scale(-1.0, random_psd(rng, n));
      const double tol = default_spectral_tolerance(h);
      const auto pos = classify_definiteness(hermitian_eigenvalues(h, tol));
      const auto neg = classify_definiteness(hermitian_eigenvalues(scale(-1.0, h), tol));
      CHECK(neg == mirror(pos));
    }
  }
}

TEST_CASE("spectrum_symmetry examples") {
  const auto diag = spectrum_symmetry(spectrum_of({-2, -1, 0, 3}));
  CHECK(diag.matched_pairs == std::vector<double>{0.0});
  CHECK(diag.intersection_is_subset_of_zero);
  CHECK_FALSE(diag.intersection_is_empty);
  CHECK(diag.intersection_is_exactly_zero());

  const auto su = spectrum_symmetry(spectrum_of({-0.205, -1.043, -2.811, 4.058}));
  CHECK(su.intersection_is_empty);
  CHECK(su.intersection_is_subset_of_zero);

  const auto j = spectrum_symmetry(spectrum_of({-0.5, 0.5}));
  CHECK(j.matched_pairs == std::vector<double>{0.5});
  CHECK_FALSE(j.intersection_is_subset_of_zero);
  CHECK(j.has_nonzero_pair());

  // Multiset semantics: one -1 cannot pair with two +1s.
  const auto multi = spectrum_symmetry(spectrum_of({-1, 1, 1}));
  CHECK(multi.matched_pairs == std::vector<double>{1.0});
  const auto two = spectrum_symmetry(spectrum_of({-1, -1, 1, 1}));
  CHECK(two.matched_pairs == std::vector<double>{1.0, 1.0});
}

TEST_CASE("spectrum_symmetry is negation invariant and consistent") {
  Rng rng(808);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 7;
    std::vector<double> values;
    for (std::size_t i = 0; i < n; ++i) {
      // Small integer grid makes exact and near pairs common.
      const double base = std::round(6.0 * (rng.uniform() - 0.5));
      values.push_back(base + (rng.uniform() < 0.3 ? 1e-10 * (rng.uniform() - 0.5) : 0.0));
    }
    std::vector<double> negated;
    for (double x : values) negated.push_back(-x);
    const auto a = spectrum_symmetry(spectrum_of(values, 1e-8));
    const auto b = spectrum_symmetry(spectrum_of(negated, 1e-8));
    CHECK(a.matched_pairs == b.matched_pairs);
    CHECK(a.intersection_is_empty == b.intersection_is_empty);
    CHECK(a.intersection_is_subset_of_zero == b.intersection_is_subset_of_zero);
    if (a.intersection_is_empty) CHECK(a.intersection_is_subset_of_zero);
    const bool only_zero = std::all_of(a.matched_pairs.begin(), a.matched_pairs.end(),
                                       [](double x) { return x == 0.0; });
    CHECK(a.intersection_is_subset_of_zero == only_zero);
  }
}

TEST_CASE("clustering and zero multiplicity") {
  const auto spec = spectrum_of({-1.0, 0.0, 1e-10, 2.0, 2.0 + 5e-9, 3.0}, 1e-8);
  const auto clusters = cluster_eigenvalues(spec, spec.tol);
  REQUIRE(clusters.size() == 4);
  CHECK(clusters[1].multiplicity == 2);
  CHECK(clusters[2].multiplicity == 2);
  CHECK(zero_multiplicity(spec, spec.tol) == 2);
  CHECK(zero_multiplicity(spectrum_of({0, 0, 0, 3}), 1e-12) == 3);
}

TEST_CASE("spectral_norm") {
  CHECK(spectral_norm(ComplexMatrix::identity(3)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(spectral_norm(jordan2()) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(spectral_norm(ComplexMatrix::diagonal({0, 3, -2, -1})) ==
        doctest::Approx(3.0).epsilon(1e-14));
  CHECK(spectral_norm(ComplexMatrix(3)) == 0.0);

  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = random_gaussian_matrix(rng, 2 + trial % 6);
    const double s = spectral_norm(t);
    CHECK(s <= frobenius_norm(t) * (1 + 1e-12));
    CHECK(s * std::sqrt(static_cast<double>(t.order())) >= frobenius_norm(t) * (1 - 1e-12));
  }
}

TEST_CASE("Jacobi handles larger and degenerate inputs") {
  // All-ones matrix: rank one, eigenvalue n once and 0 with multiplicity n-1.
  const std::size_t n = 40;
  const auto ones = ComplexMatrix::generate(n, [](std::size_t, std::size_t) { return 1.0; });
  const auto spec = hermitian_eigenvalues(ones);
  CHECK(spec.max() == doctest::Approx(40.0).epsilon(1e-12));
  CHECK(std::abs(spec.eigenvalues[n - 2]) <= 1e-12 * 40);
  CHECK(zero_multiplicity(spec, spec.tol) == n - 1);
}
