// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace khobor {

// mt19937_64 output is pinned by the standard, so seeded runs replay
// identically everywhere. std::uniform_int_distribution and std::shuffle
// are implementation-defined; use these helpers wherever reproducibility
// is part of a contract.

// Bounded draw via modulo. Bias is ~n/2^64, invisible next to the
// determinism requirement.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

// Uniform in [0,1) from the top 53 bits.
inline double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates with draw_below.
template <typename T>
void shuffle_inplace(std::vector<T>& values, std::mt19937_64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(draw_below(rng, i));
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace khobor
