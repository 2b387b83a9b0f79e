#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilcert/matrix.hpp"
#include "nilcert/theorems.hpp"

namespace nilcert::gallery {

/// Verdict bundle recorded with each fixture. verify() recomputes all of it.
struct Expectation {
  std::optional<std::size_t> nilindex;
  /// Ascending real-part spectrum and how closely it must be reproduced.
  std::vector<double> re_spectrum;
  double re_spectrum_tol = 0.0;
  bool re_intersection_subset_of_zero = false;
  bool re_intersection_empty = false;
  bool trace_zero = false;
  bool certificate_present = false;
  VerdictState corollary = VerdictState::NotApplicable;
  VerdictState small_dim = VerdictState::NotApplicable;
  VerdictState dim4 = VerdictState::NotApplicable;
};

struct Entry {
  std::string name;
  ComplexMatrix matrix;
  Expectation expected;
  std::string citation;
};

/// Version of the fixture set; bump when an entry or expectation changes.
inline constexpr int kGalleryVersion = 1;

std::vector<std::string> list();

/// Throws nilcert::LookupError for unknown names.
const Entry& get(std::string_view name);

/// Runs analyze() on the entry and diffs it against the recorded expectation.
/// The detail lists every mismatch.
Verdict verify(std::string_view name, const AnalysisOptions& opts = {});

}  // namespace nilcert::gallery
