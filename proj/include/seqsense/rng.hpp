#pragma once

#include <cstdint>
#include <random>

namespace seqsense {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Per-repetition stream for repeated experiments: independent of evaluation
// order and thread count. Documented scheme, part of the reproducibility
// contract.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master + 0x9E3779B97F4A7C15ULL * (index + 1));
}

// Uniform double in [0,1) with exactly 53 random bits; avoids the
// implementation-defined std::uniform_real_distribution.
inline double canonical_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace seqsense
