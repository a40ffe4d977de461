#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace mprec {

/// SplitMix64 generator (Steele, Lea & Flood 2014). All seeded behaviour in
/// the library (random bijections, sampled fault sets) goes through this
/// generator rather than std::mt19937 + distributions, because the standard
/// distributions are not pinned across implementations and reproducibility of
/// seeded runs is part of the CLI contract.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound) by rejection; bound must be positive.
    std::uint64_t next_below(std::uint64_t bound) {
        // Rejection zone keeps the result exactly uniform.
        const std::uint64_t limit = (~0ull) - (~0ull) % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(values[i - 1], values[j]);
        }
    }

    /// Sorted k-subset of {0, ..., universe-1}, sampled uniformly
    /// (partial Fisher-Yates over an index array).
    std::vector<int> sample_subset(int universe, int k);

private:
    std::uint64_t state_;
};

inline std::vector<int> SplitMix64::sample_subset(int universe, int k) {
    std::vector<int> indices(static_cast<std::size_t>(universe));
    for (int i = 0; i < universe; ++i) indices[static_cast<std::size_t>(i)] = i;
    std::vector<int> picked;
    picked.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(next_below(universe - i));
        std::swap(indices[static_cast<std::size_t>(i)], indices[j]);
        picked.push_back(indices[static_cast<std::size_t>(i)]);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

}  // namespace mprec
