#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilcert/random.hpp"

namespace nilcert::cli {

enum class Property { Main, Corollary, SmallDim, Dim4, Trace };

std::optional<Property> parse_property(std::string_view name);
std::string_view to_string(Property p);

struct FuzzOptions {
  Property property = Property::Main;
  std::size_t trials = 100;
  std::size_t dim = 4;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  /// Run exactly one trial from this per-trial seed (as printed on failure).
  std::optional<std::uint64_t> replay_seed;
};

struct TrialFailure {
  std::size_t trial = 0;
  std::uint64_t trial_seed = 0;
  std::string detail;
};

struct FuzzResult {
  std::size_t trials = 0;
  std::vector<TrialFailure> failures;  // ordered by trial index
};

/// Throws std::invalid_argument when dim does not suit the property.
void validate(const FuzzOptions& opts);

/// One trial; returns a description of the failure, if any.
std::optional<std::string> run_trial(Property property, std::size_t dim, Rng& rng);

/// Trial i draws from Rng(derive_seed(seed, i)), so the outcome does not
/// depend on `jobs`.
FuzzResult run_fuzz(const FuzzOptions& opts);

}  // namespace nilcert::cli
