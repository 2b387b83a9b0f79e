#include "fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nilcert/generators.hpp"
#include "nilcert/nilpotency.hpp"
#include "nilcert/theorems.hpp"

namespace nilcert::cli {
namespace {

std::optional<std::string> failure_from(const Verdict& v) {
  if (v.passed()) return std::nullopt;
  return std::string(to_string(v.state)) + ": " + v.detail;
}

}  // namespace

std::optional<Property> parse_property(std::string_view name) {
  if (name == "main") return Property::Main;
  if (name == "corollary") return Property::Corollary;
  if (name == "smalldim") return Property::SmallDim;
  if (name == "dim4") return Property::Dim4;
  if (name == "trace") return Property::Trace;
  return std::nullopt;
}

std::string_view to_string(Property p) {
  switch (p) {
    case Property::Main: return "main";
    case Property::Corollary: return "corollary";
    case Property::SmallDim: return "smalldim";
    case Property::Dim4: return "dim4";
    case Property::Trace: return "trace";
  }
  return "unknown";
}

void validate(const FuzzOptions& opts) {
  if (opts.trials == 0) throw std::invalid_argument("--trials must be positive");
  if (opts.jobs == 0) throw std::invalid_argument("--jobs must be positive");
  switch (opts.property) {
    case Property::Main:
      if (opts.dim < 1) throw std::invalid_argument("--dim must be at least 1");
      break;
    case Property::Corollary:
    case Property::Trace:
      if (opts.dim < 2) throw std::invalid_argument("--dim must be at least 2 for nilpotents");
      break;
    case Property::SmallDim:
      if (opts.dim != 2 && opts.dim != 3) {
        throw std::invalid_argument("--property smalldim needs --dim 2 or 3");
      }
      break;
    case Property::Dim4:
      if (opts.dim != 4) throw std::invalid_argument("--property dim4 needs --dim 4");
      break;
  }
}

std::optional<std::string> run_trial(Property property, std::size_t dim, Rng& rng) {
  switch (property) {
    case Property::Main: {
      const ComplexMatrix t = random_accretive(rng, dim);
      if (frobenius_norm(t) <= 1e-8) return std::nullopt;
      const auto report = analyze(t);
      if (report.nilpotency.index) {
        return "accretive matrix reported nilpotent with index " +
               std::to_string(*report.nilpotency.index);
      }
      if (!report.certificate) return "accretive matrix received no certificate";
      return std::nullopt;
    }
    case Property::Corollary:
      return failure_from(opposite_signs_check(random_nilpotent(rng, dim)));
    case Property::SmallDim:
      return failure_from(small_dim_symmetry_oracle(random_nilpotent(rng, dim)));
    case Property::Dim4:
      return failure_from(dim4_multiplicity_oracle(random_nilpotent(rng, dim)));
    case Property::Trace: {
      const ComplexMatrix t = random_nilpotent(rng, dim);
      if (!nilpotency_index(t).index) return "generated nilpotent has no index";
      const double mag = std::abs(trace(t));
      const double bound = static_cast<double>(dim) * 1e-10;
      if (mag > bound) {
        std::ostringstream msg;
        msg << "|trace| = " << mag << " exceeds " << bound;
        return msg.str();
      }
      return std::nullopt;
    }
  }
  return "unknown property";
}

FuzzResult run_fuzz(const FuzzOptions& opts) {
  validate(opts);
  FuzzResult result;
  if (opts.replay_seed) {
    result.trials = 1;
    Rng rng(*opts.replay_seed);
    if (auto f = run_trial(opts.property, opts.dim, rng)) {
      result.failures.push_back({0, *opts.replay_seed, *f});
    }
    return result;
  }

  result.trials = opts.trials;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < opts.trials; i = next++) {
      const std::uint64_t trial_seed = derive_seed(opts.seed, i);
      Rng rng(trial_seed);
      std::optional<std::string> failure;
      try {
        failure = run_trial(opts.property, opts.dim, rng);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure) {
        std::lock_guard lock(mu);
        result.failures.push_back({i, trial_seed, *failure});
      }
    }
  };
  const std::size_t jobs = std::min(opts.jobs, opts.trials);
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  std::sort(result.failures.begin(), result.failures.end(),
            [](const TrialFailure& a, const TrialFailure& b) { return a.trial < b.trial; });
  return result;
}

}  // namespace nilcert::cli
