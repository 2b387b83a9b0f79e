#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilcert/matrix.hpp"
#include "nilcert/nilpotency.hpp"
#include "nilcert/random.hpp"
#include "nilcert/spectral.hpp"

namespace nilcert {

enum class VerdictState { Pass, Fail, NotApplicable };

std::string_view to_string(VerdictState s);

/// Three-state outcome of an oracle. NotApplicable is never a pass.
struct Verdict {
  VerdictState state = VerdictState::NotApplicable;
  std::string detail;
  std::vector<double> witnesses;

  bool passed() const { return state == VerdictState::Pass; }
  bool applicable() const { return state != VerdictState::NotApplicable; }
};

enum class CertificateKind { RealPartPSD, RealPartNSD, ImagPartPSD, ImagPartNSD };

std::string_view to_string(CertificateKind k);

/// Witness that a nonzero T is not nilpotent: one of its Hermitian parts is
/// semidefinite, so nilpotence would force T = 0.
struct Certificate {
  CertificateKind kind = CertificateKind::RealPartPSD;
  SpectrumReport witness_spectrum;
  Definiteness witness_class = Definiteness::PositiveSemidefinite;
  double nonzero_norm = 0.0;  // ||T||_F
};

/// Tolerances shared by every oracle. Relative values are multiplied by
/// max(1, ||X||_F) of the matrix they are applied to.
struct AnalysisOptions {
  double spectral_tol = 1e-8;
  double nilpotency_tol = kDefaultNilpotencyTolerance;
  double normality_tol = 1e-10;
};

namespace theorem_id {
inline constexpr std::string_view kMainTheorem = "main_theorem";
inline constexpr std::string_view kCorollary = "corollary_opposite_signs";
inline constexpr std::string_view kSmallDim = "small_dim_symmetry";
inline constexpr std::string_view kDim4 = "dim4_multiplicity";
inline constexpr std::string_view kTwoByTwo = "two_by_two_disjoint";
inline constexpr std::string_view kTrace = "trace_necessity";
inline constexpr std::string_view kNormality = "nilpotent_normal_iff_zero";
}  // namespace theorem_id

struct TheoremVerdict {
  std::string id;
  Verdict verdict;
};

struct AnalysisReport {
  std::size_t order = 0;
  double frobenius_norm = 0.0;
  Complex trace = 0.0;
  bool zero = false;

  SpectrumReport re_spectrum;
  SpectrumReport im_spectrum;
  Definiteness re_class = Definiteness::Zero;
  Definiteness im_class = Definiteness::Zero;
  SymmetryReport re_symmetry;
  SymmetryReport im_symmetry;
  std::size_t re_zero_multiplicity = 0;
  std::size_t im_zero_multiplicity = 0;

  NilpotencyReport nilpotency;
  NormalityReport normality;
  std::optional<Certificate> certificate;
  std::vector<TheoremVerdict> verdicts;

  /// A certificate together with a nilpotency index: impossible in exact
  /// arithmetic, so the tolerances are mis-set for this input.
  bool inconsistent = false;

  const Verdict* find(std::string_view id) const;
};

/// Runs every check on T. Propagates ConvergenceError from the eigensolver.
AnalysisReport analyze(const ComplexMatrix& t, const AnalysisOptions& opts = {});

/// Searches Re T >= 0, Re T <= 0, Im T >= 0, Im T <= 0 in that order. Absent
/// for T = 0 or when both parts are indefinite; absence proves nothing.
std::optional<Certificate> non_nilpotence_certificate(const ComplexMatrix& t,
                                                      double spectral_tol = 1e-8);

/// For nonzero nilpotent T, both Re T and Im T must be indefinite.
Verdict opposite_signs_check(const ComplexMatrix& t, const AnalysisOptions& opts = {});

/// Orders 2 and 3: a nonzero nilpotent T has neither sigma(Re T) ∩ sigma(-Re T)
/// nor the same for Im T equal to {0}.
Verdict small_dim_symmetry_oracle(const ComplexMatrix& t, const AnalysisOptions& opts = {});

/// Order 4: a nonzero nilpotent T never has sigma(A) ∩ sigma(-A) = {0} with 0
/// of multiplicity exactly 2, for A = Re T or A = Im T.
Verdict dim4_multiplicity_oracle(const ComplexMatrix& t, const AnalysisOptions& opts = {});

/// Hermitian 2x2 A with empty sigma(A) ∩ sigma(-A): A + iB is not nilpotent
/// for each supplied B.
Verdict two_by_two_disjoint_oracle(const ComplexMatrix& a_input,
                                   std::span<const ComplexMatrix> b_samples,
                                   const AnalysisOptions& opts = {});

/// Same, with `batch` random Hermitian B drawn from rng.
Verdict two_by_two_disjoint_oracle(const ComplexMatrix& a_input, Rng& rng,
                                   std::size_t batch = 100, const AnalysisOptions& opts = {});

}  // namespace nilcert
