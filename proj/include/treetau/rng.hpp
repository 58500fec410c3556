#pragma once

#include <cstdint>
#include <random>

namespace treetau {

using RandomSource = std::mt19937_64;

/// Independent stream for a worker: seed and index mixed through splitmix64.
inline RandomSource worker_rng(std::uint64_t seed, std::uint64_t worker) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (worker + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return RandomSource(z);
}

}  // namespace treetau
