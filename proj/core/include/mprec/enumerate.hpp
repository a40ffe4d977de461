#pragma once

#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

namespace mprec {

/// C(n, k) in exact 64-bit arithmetic (the sweep universes stay far below
/// overflow range).
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return result;
}

/// Visits every k-subset of {0, ..., universe-1} as a sorted index span, in
/// lexicographic order. fn may return void, or bool where false stops the
/// enumeration.
template <typename Fn>
bool for_each_combination(int universe, int k, Fn&& fn) {
    auto call = [&](std::span<const int> combo) -> bool {
        if constexpr (std::is_void_v<decltype(fn(combo))>) {
            fn(combo);
            return true;
        } else {
            return fn(combo);
        }
    };
    if (k < 0 || k > universe) return true;
    std::vector<int> combo(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i;
    if (k == 0) return call(combo);
    while (true) {
        if (!call(combo)) return false;
        int i = k - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == universe - k + i) --i;
        if (i < 0) return true;
        ++combo[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

/// As above but with the first element pinned, visiting the k-subsets whose
/// minimum is exactly `first`. This is the block shape the parallel sweeps
/// hand to workers.
template <typename Fn>
bool for_each_combination_with_min(int universe, int k, int first, Fn&& fn) {
    if (k <= 0 || first > universe - k) return true;
    std::vector<int> combo(static_cast<std::size_t>(k));
    combo[0] = first;
    return for_each_combination(universe - first - 1, k - 1, [&](std::span<const int> tail) {
        for (int j = 1; j < k; ++j) {
            combo[static_cast<std::size_t>(j)] = first + 1 + tail[static_cast<std::size_t>(j - 1)];
        }
        if constexpr (std::is_void_v<decltype(fn(std::span<const int>(combo)))>) {
            fn(std::span<const int>(combo));
            return true;
        } else {
            return fn(std::span<const int>(combo));
        }
    });
}

}  // namespace mprec
