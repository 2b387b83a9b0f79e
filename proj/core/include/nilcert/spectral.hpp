#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "nilcert/matrix.hpp"

namespace nilcert {

/// Ascending real spectrum of a Hermitian matrix together with the
/// resolution at which two eigenvalues count as equal.
struct SpectrumReport {
  std::vector<double> eigenvalues;
  std::size_t order = 0;
  double tol = 0.0;

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
};

enum class Definiteness {
  Zero,
  PositiveDefinite,
  PositiveSemidefinite,
  NegativeDefinite,
  NegativeSemidefinite,
  Indefinite,
};

std::string_view to_string(Definiteness d);

/// True for PositiveDefinite and PositiveSemidefinite (Zero excluded).
bool is_positive_semidefinite(Definiteness d);
/// True for NegativeDefinite and NegativeSemidefinite (Zero excluded).
bool is_negative_semidefinite(Definiteness d);

/// Outcome of matching a spectrum against its negation.
struct SymmetryReport {
  /// Each lambda >= 0 such that lambda and -lambda both occur; 0 at most once.
  std::vector<double> matched_pairs;
  /// sigma(A) ∩ sigma(-A) ⊆ {0}
  bool intersection_is_subset_of_zero = true;
  /// sigma(A) ∩ sigma(-A) = ∅
  bool intersection_is_empty = true;
  double tol = 0.0;

  /// sigma(A) ∩ sigma(-A) = {0}: zero occurs and no nonzero pair does.
  bool intersection_is_exactly_zero() const {
    return intersection_is_subset_of_zero && !intersection_is_empty;
  }
  bool has_nonzero_pair() const { return !intersection_is_subset_of_zero; }
};

/// A run of eigenvalues grouped together as one multiple eigenvalue.
struct EigenvalueCluster {
  double value = 0.0;  // mean of the members
  std::size_t multiplicity = 0;
};

/// 1e-8 * max(1, ||H||_F): equality resolution used by spectrum reports.
double default_spectral_tolerance(const ComplexMatrix& h);

/// 1e-10 * max(1, ||H||_F): how far from Hermitian an input may be.
double hermitian_input_tolerance(const ComplexMatrix& h);

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi.
/// Throws HermitianViolationError or ConvergenceError.
SpectrumReport hermitian_eigenvalues(const ComplexMatrix& h, double tol);
SpectrumReport hermitian_eigenvalues(const ComplexMatrix& h);

Definiteness classify_definiteness(const SpectrumReport& spec, double tol);
Definiteness classify_definiteness(const SpectrumReport& spec);

SymmetryReport spectrum_symmetry(const SpectrumReport& spec, double tol);
SymmetryReport spectrum_symmetry(const SpectrumReport& spec);

/// Greedy left-to-right clustering of the sorted spectrum: a cluster grows
/// while the next eigenvalue lies within tol of the cluster's first member.
std::vector<EigenvalueCluster> cluster_eigenvalues(const SpectrumReport& spec, double tol);

/// Number of eigenvalues with |lambda| <= tol.
std::size_t zero_multiplicity(const SpectrumReport& spec, double tol);

/// Operator 2-norm: sqrt of the largest eigenvalue of T*T.
double spectral_norm(const ComplexMatrix& t);

namespace detail {

struct HermitianEigensystem {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix vectors;            // column k belongs to eigenvalues[k]
  std::size_t sweeps = 0;
};

inline constexpr std::size_t kMaxJacobiSweeps = 60;

/// Full Jacobi eigensystem; H = V diag(lambda) V*. Input validation as for
/// hermitian_eigenvalues.
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& h);

}  // namespace detail
}  // namespace nilcert
