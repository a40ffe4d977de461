#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mprec/graph.hpp"
#include "mprec/rng.hpp"

namespace mprec::verify {

struct CheckResult {
    std::string id;
    std::string claim;
    bool pass = false;
    double ms = 0;
    std::string detail;
};

struct Options {
    /// Largest dimension exercised. 3..5 select subsets of the checks; 6
    /// adds the sampled dimension-6 sweep.
    int max_m = 5;
    int fmp_g4_samples = 20;
    int predictor_samples = 50;
    int g5_instances = 3;
    int random_graphs = 200;
    int g5_ham_samples = 1000;
    int m6_fpm_samples = 100000;
    int m6_ham_samples = 1000;
    std::uint64_t seed = 1;
    int workers = 0;   // 0 = hardware concurrency
    /// Re-run every captured sweep single-threaded and compare canonical
    /// reports byte for byte.
    bool determinism_check = true;
};

/// Runs the full result-verification suite and returns one row per check.
/// Rows print through the CLI table or the acceptance harness; progress
/// lines go to `progress` when given.
std::vector<CheckResult> run_paper_checks(const Options& opt, std::ostream* progress = nullptr);

bool all_passed(const std::vector<CheckResult>& results);

/// Reference maximum-matching size by bitmask dynamic programming, kept
/// deliberately independent of the blossom search it gates. Guarded to at
/// most 22 alive vertices.
int brute_force_max_matching_size(const Graph& g);

/// Seeded Erdos-Renyi-style test graph: order 1..max_n, edge probability
/// drawn from [5%, 95%].
Graph random_graph(SplitMix64& rng, int max_n);

}  // namespace mprec::verify
