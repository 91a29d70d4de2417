#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace plabel {

using Rng = std::mt19937_64;

// Uniform draw from [0, bound). Rejection sampling on the raw engine output,
// so sequences are identical across standard library implementations.
std::uint64_t draw_below(Rng & rng, std::uint64_t bound);

// Uniform k-subset of {lo..hi}, sorted ascending (Floyd's algorithm).
std::vector<int> random_subset(Rng & rng, int k, int lo, int hi);

// splitmix64 finalizer; derives independent per-instance seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace plabel
