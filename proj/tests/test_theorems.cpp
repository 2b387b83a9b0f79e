#include <cmath>
#include <vector>

#include "doctest.h"
#include "nilcert/generators.hpp"
#include "nilcert/theorems.hpp"
#include "nilcert/volterra.hpp"
#include "support.hpp"

using namespace nilcert;
using test_support::example_pp;
using test_support::jordan2;
using test_support::strict_upper4;

namespace {
const Complex I{0.0, 1.0};

bool has_witness_near(const Verdict& v, double x, double tol) {
  for (double w : v.witnesses) {
    if (std::abs(w - x) <= tol) return true;
  }
  return false;
}
}  // namespace

TEST_CASE("analyze examples") {
  const auto j = analyze(jordan2());
  REQUIRE(j.nilpotency.index);
  CHECK(*j.nilpotency.index == 2);
  CHECK(j.re_class == Definiteness::Indefinite);
  CHECK_FALSE(j.certificate);
  CHECK_FALSE(j.inconsistent);
  CHECK(j.verdicts.size() == 7);
  REQUIRE(j.find(theorem_id::kCorollary));
  CHECK(j.find(theorem_id::kCorollary)->passed());
  CHECK(j.find("no_such_id") == nullptr);

  const auto v = analyze(volterra_matrix(16));
  REQUIRE(v.certificate);
  CHECK(v.certificate->kind == CertificateKind::RealPartPSD);
  CHECK_FALSE(v.nilpotency.index);

  const auto z = analyze(ComplexMatrix(3));
  CHECK(z.zero);
  CHECK(z.re_class == Definiteness::Zero);
  CHECK(z.im_class == Definiteness::Zero);
  CHECK(z.normality.normal);
  REQUIRE(z.nilpotency.index);
  CHECK(*z.nilpotency.index == 1);
  CHECK_FALSE(z.certificate);
  for (const auto& tv : z.verdicts) CHECK(tv.verdict.state != VerdictState::Fail);
}

TEST_CASE("non_nilpotence_certificate examples") {
  const auto v = non_nilpotence_certificate(volterra_matrix(64));
  REQUIRE(v);
  CHECK(v->kind == CertificateKind::RealPartPSD);
  CHECK(v->witness_spectrum.min() >= -1e-12);
  CHECK(v->nonzero_norm > 0.0);

  CHECK_FALSE(non_nilpotence_certificate(jordan2()));
  CHECK_FALSE(non_nilpotence_certificate(ComplexMatrix(2)));

  Rng rng(5);
  const auto h = random_hermitian(rng, 5);
  const auto c = non_nilpotence_certificate(ComplexMatrix::identity(5) + I * h);
  REQUIRE(c);
  CHECK(c->kind == CertificateKind::RealPartPSD);
  CHECK(c->witness_class == Definiteness::PositiveDefinite);

  // The other three variants.
  const auto nsd = non_nilpotence_certificate(scale(-1.0, ComplexMatrix::identity(2)));
  REQUIRE(nsd);
  CHECK(nsd->kind == CertificateKind::RealPartNSD);
  // Re = 0 and Im = [[0,-i],[i,0]]: both fail to be semidefinite.
  CHECK_FALSE(non_nilpotence_certificate(ComplexMatrix{{0, 1}, {-1, 0}}));
  const auto ip = non_nilpotence_certificate(I * ComplexMatrix::identity(3));
  REQUIRE(ip);
  CHECK(ip->kind == CertificateKind::ImagPartPSD);
  const auto in = non_nilpotence_certificate(scale(-1.0, I * ComplexMatrix::identity(3)));
  REQUIRE(in);
  CHECK(in->kind == CertificateKind::ImagPartNSD);
}

TEST_CASE("opposite_signs_check examples") {
  const auto j = opposite_signs_check(jordan2());
  CHECK(j.passed());
  CHECK(has_witness_near(j, -0.5, 1e-12));
  CHECK(has_witness_near(j, 0.5, 1e-12));

  const auto pp = opposite_signs_check(example_pp());
  CHECK(pp.passed());
  CHECK(has_witness_near(pp, -3.71, 0.01));
  CHECK(has_witness_near(pp, 5.04, 0.01));

  CHECK(opposite_signs_check(ComplexMatrix::identity(3)).state == VerdictState::NotApplicable);
  CHECK(opposite_signs_check(ComplexMatrix(3)).state == VerdictState::NotApplicable);
}

TEST_CASE("small_dim_symmetry_oracle examples") {
  CHECK(small_dim_symmetry_oracle(jordan2()).passed());
  const ComplexMatrix chain{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  const auto c = small_dim_symmetry_oracle(chain);
  CHECK(c.passed());
  CHECK(has_witness_near(c, std::sqrt(0.5), 1e-12));
  CHECK(small_dim_symmetry_oracle(ComplexMatrix(3)).state == VerdictState::NotApplicable);
  CHECK(small_dim_symmetry_oracle(example_pp()).state == VerdictState::NotApplicable);
  CHECK(small_dim_symmetry_oracle(ComplexMatrix::identity(2)).state ==
        VerdictState::NotApplicable);
}

TEST_CASE("dim4_multiplicity_oracle examples") {
  CHECK(dim4_multiplicity_oracle(example_pp()).passed());
  CHECK(dim4_multiplicity_oracle(strict_upper4()).passed());
  CHECK(dim4_multiplicity_oracle(ComplexMatrix(4)).passed());
  CHECK(dim4_multiplicity_oracle(jordan2()).state == VerdictState::NotApplicable);
  CHECK(dim4_multiplicity_oracle(ComplexMatrix::identity(4)).state ==
        VerdictState::NotApplicable);
}

TEST_CASE("two_by_two_disjoint_oracle examples") {
  Rng rng(100);
  CHECK(two_by_two_disjoint_oracle(ComplexMatrix::diagonal({1, 2}), rng, 100).passed());
  CHECK(two_by_two_disjoint_oracle(ComplexMatrix::diagonal({1, -1}), rng).state ==
        VerdictState::NotApplicable);
  CHECK(two_by_two_disjoint_oracle(ComplexMatrix{{0, 0.5}, {0.5, 0}}, rng).state ==
        VerdictState::NotApplicable);
  CHECK(two_by_two_disjoint_oracle(ComplexMatrix::identity(3), rng).state ==
        VerdictState::NotApplicable);

  std::vector<ComplexMatrix> bs;
  for (int k = 0; k < 20; ++k) bs.push_back(random_hermitian(rng, 2));
  CHECK(two_by_two_disjoint_oracle(ComplexMatrix{{3, 1}, {1, -1}}, bs).passed());
}

TEST_CASE("certificate soundness on random nilpotents") {
  Rng rng(1001);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const auto t = random_nilpotent(rng, n, std::pow(10.0, trial % 5 - 2));
    CHECK_FALSE(non_nilpotence_certificate(t));
  }
}

TEST_CASE("accretive matrices are certified and never nilpotent") {
  Rng rng(2002);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const auto t = random_accretive(rng, n);
    const auto r = analyze(t);
    CHECK_FALSE(r.nilpotency.index);
    CHECK(r.certificate);
    CHECK(r.find(theorem_id::kMainTheorem)->passed());
    CHECK_FALSE(r.inconsistent);
  }
}

TEST_CASE("corollary, trace and normality verdicts on random nilpotents") {
  Rng rng(3003);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const auto t = random_nilpotent(rng, n);
    const auto r = analyze(t);
    CHECK(r.re_class == Definiteness::Indefinite);
    CHECK(r.im_class == Definiteness::Indefinite);
    CHECK(r.find(theorem_id::kCorollary)->passed());
    CHECK(r.find(theorem_id::kTrace)->passed());
    CHECK(r.find(theorem_id::kNormality)->passed());
    CHECK(std::abs(r.trace) <= static_cast<double>(n) * 1e-10);
  }
}

TEST_CASE("small-dimension and dim-4 oracles on random nilpotents") {
  Rng rng(4004);
  for (int trial = 0; trial < 500; ++trial) {
    const auto t = random_nilpotent(rng, 2 + trial % 2);
    CHECK(small_dim_symmetry_oracle(t).passed());
  }
  for (int trial = 0; trial < 300; ++trial) {
    CHECK(dim4_multiplicity_oracle(random_nilpotent(rng, 4)).passed());
  }
}

TEST_CASE("order-two nilpotents always have a nonzero matched pair") {
  Rng rng(5005);
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = analyze(random_nilpotent(rng, 2));
    CHECK(r.re_symmetry.has_nonzero_pair());
    CHECK(r.im_symmetry.has_nonzero_pair());
  }
}
