#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "nilcert/matrix.hpp"
#include "nilcert/random.hpp"

namespace nilcert {

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t order = 1;
  double entry_scale = 1.0;
};

/// Identifier written into report headers so runs can be replayed elsewhere.
inline constexpr const char* kGeneratorAlgorithm =
    "xoshiro256** seeded by splitmix64; Box-Muller gaussians";

/// Matrix of independent complex Gaussians times `entry_scale`.
ComplexMatrix random_gaussian_matrix(Rng& rng, std::size_t order, double entry_scale = 1.0);

/// Unitary from modified Gram-Schmidt (with one re-orthogonalization pass) on
/// the columns of a complex Gaussian matrix. Rank-deficient draws are
/// redrawn; throws nilcert::Error after 8 failed attempts.
ComplexMatrix random_unitary(Rng& rng, std::size_t order);
ComplexMatrix random_unitary(const GeneratorConfig& cfg);

/// Q S Q* with S strictly upper triangular complex Gaussian and Q unitary.
///
/// The first `index_lower_bound - 1` superdiagonal entries of S (at least the
/// first one) are pushed to modulus >= entry_scale / 4, which makes the
/// result nonzero with nilpotency index >= index_lower_bound. Order >= 2.
ComplexMatrix random_nilpotent(Rng& rng, std::size_t order, double entry_scale = 1.0,
                               std::optional<std::size_t> index_lower_bound = std::nullopt);
ComplexMatrix random_nilpotent(const GeneratorConfig& cfg,
                               std::optional<std::size_t> index_lower_bound = std::nullopt);

/// (G + G*) / 2.
ComplexMatrix random_hermitian(Rng& rng, std::size_t order, double entry_scale = 1.0);
ComplexMatrix random_hermitian(const GeneratorConfig& cfg);

/// G* G.
ComplexMatrix random_psd(Rng& rng, std::size_t order, double entry_scale = 1.0);
ComplexMatrix random_psd(const GeneratorConfig& cfg);

/// P + iH with P = random_psd and H = random_hermitian, so Re T = P.
ComplexMatrix random_accretive(Rng& rng, std::size_t order, double entry_scale = 1.0);
ComplexMatrix random_accretive(const GeneratorConfig& cfg);

}  // namespace nilcert
