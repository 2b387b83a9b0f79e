#pragma once

#include <cstdint>

#include "nilcert/matrix.hpp"

namespace nilcert {

/// SplitMix64 output function (Steele, Lea, Flood 2014): advances *state by
/// 0x9E3779B97F4A7C15 and returns the mixed value.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed for trial `index` of a batch started from `seed`. Independent of the
/// order in which trials run.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// xoshiro256** 1.0 (Blackman and Vigna) seeded by four SplitMix64 draws.
///
/// Gaussian variates use the basic Box-Muller transform on two consecutive
/// 53-bit uniforms u1 in (0, 1] and u2 in [0, 1); both outputs of a pair are
/// consumed in order, cosine branch first. The whole stream is therefore a
/// pure function of the seed and reproducible from any language.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal N(0, 1).
  double gaussian();
  /// Real and imaginary parts independent N(0, 1).
  Complex complex_gaussian();

  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace nilcert
