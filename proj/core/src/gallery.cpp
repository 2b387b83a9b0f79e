#include "nilcert/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nilcert/error.hpp"

namespace nilcert::gallery {
namespace {

using VS = VerdictState;

const std::vector<Entry>& entries() {
  static const std::vector<Entry> kEntries = [] {
    std::vector<Entry> e;
    e.push_back(Entry{
        "jordan2",
        ComplexMatrix{{0, 1}, {0, 0}},
        Expectation{.nilindex = 2,
                    .re_spectrum = {-0.5, 0.5},
                    .re_spectrum_tol = 1e-12,
                    .re_intersection_subset_of_zero = false,
                    .re_intersection_empty = false,
                    .trace_zero = true,
                    .certificate_present = false,
                    .corollary = VS::Pass,
                    .small_dim = VS::Pass,
                    .dim4 = VS::NotApplicable},
        "2x2 Jordan block: T^2 = 0, T != 0, Re T indefinite with spectrum {-1/2, 1/2}",
    });
    e.push_back(Entry{
        "example_pp",
        ComplexMatrix{{2, 2, -2, 0}, {5, 1, -3, 0}, {1, 5, -3, 0}, {0, 0, 0, 0}},
        Expectation{.nilindex = 3,
                    .re_spectrum = {-3.71, -1.33, 0.0, 5.04},
                    .re_spectrum_tol = 0.01,
                    .re_intersection_subset_of_zero = true,
                    .re_intersection_empty = false,
                    .trace_zero = true,
                    .certificate_present = false,
                    .corollary = VS::Pass,
                    .small_dim = VS::NotApplicable,
                    .dim4 = VS::Pass},
        "4x4 nilpotent of index 3 whose real part satisfies sigma(A) ∩ sigma(-A) = {0}",
    });
    e.push_back(Entry{
        "diag_counter",
        ComplexMatrix::diagonal({0, 3, -2, -1}),
        Expectation{.nilindex = std::nullopt,
                    .re_spectrum = {-2, -1, 0, 3},
                    .re_spectrum_tol = 1e-12,
                    .re_intersection_subset_of_zero = true,
                    .re_intersection_empty = false,
                    .trace_zero = true,
                    .certificate_present = false,
                    .corollary = VS::NotApplicable,
                    .small_dim = VS::NotApplicable,
                    .dim4 = VS::NotApplicable},
        "nonzero traceless Hermitian 4x4 with sigma(A) ∩ sigma(-A) = {0}",
    });
    e.push_back(Entry{
        "strict_upper4",
        ComplexMatrix{{0, 1, 2, 4}, {0, 0, 2, 1}, {0, 0, 0, 5}, {0, 0, 0, 0}},
        Expectation{.nilindex = 4,
                    .re_spectrum = {-2.811, -1.043, -0.205, 4.058},
                    .re_spectrum_tol = 0.005,
                    .re_intersection_subset_of_zero = true,
                    .re_intersection_empty = true,
                    .trace_zero = true,
                    .certificate_present = false,
                    .corollary = VS::Pass,
                    .small_dim = VS::NotApplicable,
                    .dim4 = VS::Pass},
        "strictly upper triangular 4x4: T^4 = 0, T^3 != 0, real part with empty "
        "symmetric intersection",
    });
    return e;
  }();
  return kEntries;
}

template <typename T>
void expect_eq(std::ostringstream& diff, std::string_view what, const T& got, const T& want) {
  if (!(got == want)) diff << what << " mismatch; ";
}

}  // namespace

std::vector<std::string> list() {
  std::vector<std::string> names;
  for (const auto& e : entries()) names.push_back(e.name);
  return names;
}

const Entry& get(std::string_view name) {
  const auto& all = entries();
  const auto it =
      std::find_if(all.begin(), all.end(), [&](const Entry& e) { return e.name == name; });
  if (it == all.end()) throw LookupError("unknown gallery entry '" + std::string(name) + "'");
  return *it;
}

Verdict verify(std::string_view name, const AnalysisOptions& opts) {
  const Entry& entry = get(name);
  const Expectation& want = entry.expected;
  const AnalysisReport got = analyze(entry.matrix, opts);

  std::ostringstream diff;
  expect_eq(diff, "nilindex", got.nilpotency.index, want.nilindex);

  double worst = 0.0;
  if (got.re_spectrum.eigenvalues.size() != want.re_spectrum.size()) {
    diff << "Re spectrum length mismatch; ";
  } else {
    for (std::size_t i = 0; i < want.re_spectrum.size(); ++i) {
      worst = std::max(worst, std::abs(got.re_spectrum.eigenvalues[i] - want.re_spectrum[i]));
    }
    if (worst > want.re_spectrum_tol) diff << "Re spectrum off by " << worst << "; ";
  }
  expect_eq(diff, "symmetry subset-of-zero", got.re_symmetry.intersection_is_subset_of_zero,
            want.re_intersection_subset_of_zero);
  expect_eq(diff, "symmetry empty", got.re_symmetry.intersection_is_empty,
            want.re_intersection_empty);
  expect_eq(diff, "trace zero", got.trace == Complex(0.0), want.trace_zero);
  expect_eq(diff, "certificate", got.certificate.has_value(), want.certificate_present);
  expect_eq(diff, "corollary", got.find(theorem_id::kCorollary)->state, want.corollary);
  expect_eq(diff, "small-dim", got.find(theorem_id::kSmallDim)->state, want.small_dim);
  expect_eq(diff, "dim4", got.find(theorem_id::kDim4)->state, want.dim4);
  if (got.inconsistent) diff << "report flagged inconsistent; ";

  const std::string problems = diff.str();
  if (!problems.empty()) return Verdict{VerdictState::Fail, problems, {worst}};
  return Verdict{VerdictState::Pass, entry.citation, {worst}};
}

}  // namespace nilcert::gallery
