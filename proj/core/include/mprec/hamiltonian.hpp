#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mprec/graph.hpp"

namespace mprec {

struct HamiltonianError : std::runtime_error {
    explicit HamiltonianError(const std::string& what) : std::runtime_error(what) {}
};

struct HamWitness {
    enum class Kind { cycle, path };
    Kind kind = Kind::cycle;
    std::vector<int> sequence;   // cycle closes implicitly; path endpoints first/last
};

/// Exhaustive backtracking search for a Hamiltonian cycle of the live graph.
/// Returns a witness or a definitive nullopt. Prunes on stranded low-degree
/// vertices and on disconnection, both conservative; requires at least 3
/// alive vertices.
std::optional<HamWitness> hamiltonian_cycle(const Graph& g);

/// Hamiltonian path between two distinct alive endpoints, or nullopt.
std::optional<HamWitness> hamiltonian_path(const Graph& g, int u, int v);

/// Independent replay: adjacency of consecutive vertices, full coverage of
/// the live vertex set, closure for cycles.
bool replay_witness(const Graph& g, const HamWitness& w);

enum class FaultHamMode { exhaustive, sample };

struct FaultHamOptions {
    int budget = 0;
    FaultHamMode mode = FaultHamMode::exhaustive;
    int samples = 0;            // sample mode: number of size-`budget` draws
    std::uint64_t seed = 0;     // sample mode
    bool connected = false;     // additionally demand a Ham path for every alive pair
    int workers = 1;
};

struct FaultHamReport {
    int budget = 0;
    FaultHamMode mode = FaultHamMode::exhaustive;
    bool connected = false;
    std::uint64_t instances = 0;
    std::uint64_t pair_checks = 0;
    std::vector<FaultSet> failures;   // in enumeration/draw order
    double max_search_ms = 0;
    double total_ms = 0;
};

/// Checks fault-Hamiltonicity over vertex+edge fault sets. Exhaustive mode
/// visits every fault set of size 1..budget in deterministic order (just
/// the empty set when budget = 0); sample mode draws `samples` sets of size
/// exactly `budget` from the seeded generator. Results are deterministic for
/// any worker count.
FaultHamReport verify_fault_hamiltonian(const Graph& g, const FaultHamOptions& opt);

}  // namespace mprec
