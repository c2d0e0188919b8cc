#pragma once

#include <cstdint>
#include <random>

namespace dichro {

/// mt19937_64 output is fully specified by the standard, so seeded runs are
/// bit-reproducible across platforms. Distributions are avoided for the same reason.
using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Independent generator for sample/try `index` under a master seed. Results of
/// a sampling loop therefore do not depend on how the loop is split across workers.
Rng substream(std::uint64_t master_seed, std::uint64_t index);

/// Uniform value in [0, bound) by rejection on raw 64-bit draws.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

}  // namespace dichro
