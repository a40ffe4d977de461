#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mprec/graph.hpp"
#include "mprec/matching.hpp"

namespace mprec {

struct PreclusionError : std::runtime_error {
    explicit PreclusionError(const std::string& what) : std::runtime_error(what) {}
};

/// The four preclusion variants. MP/FMP draw faults from edges only;
/// SMP/FSMP from vertices and edges. MP/SMP ask for a perfect or almost
/// perfect matching of the survivor (by remaining parity), FMP/FSMP for a
/// fractional perfect matching.
enum class PreclusionKind { MP, SMP, FMP, FSMP };

bool kind_is_fractional(PreclusionKind kind);
bool kind_allows_vertex_faults(PreclusionKind kind);
std::string to_string(PreclusionKind kind);
PreclusionKind parse_preclusion_kind(const std::string& name);

/// Survivability of G - F under the kind's predicate. Throws when F draws
/// from outside the kind's fault universe.
bool survives(const Graph& g, const FaultSet& f, PreclusionKind kind);

/// True iff f is exactly the live star of some single vertex (edges only).
bool is_trivial_solution(const Graph& g, const FaultSet& f);

struct PreclusionCertificate {
    std::optional<DeficiencyWitness> deficiency;          // fractional kinds
    std::optional<OddComponentsWitness> odd_components;   // integral kinds
};

struct OptimalPreclusionSet {
    FaultSet faults;
    bool trivial = false;
    PreclusionCertificate certificate;
};

struct SweptSize {
    int size = 0;
    std::uint64_t count = 0;                  // subsets at this size
    std::optional<std::uint64_t> survivors;   // absent when the size was cut short
};

struct PreclusionOptions {
    int budget = 1;
    /// Finish the sweep at the hit size and keep every optimal set (needed
    /// for structure reports); otherwise stop at the lexicographically first
    /// preclusive set.
    bool all_witnesses = false;
    /// Cap on reported optimal sets (0 = no cap). Sweeping is unaffected.
    int max_witnesses = 0;
    int workers = 0;   // 0 = hardware concurrency
    bool with_certificates = true;
};

struct PreclusionResult {
    PreclusionKind kind = PreclusionKind::MP;
    bool found = false;
    int number = 0;        // valid when found
    int budget = 0;
    bool exhaustive = false;
    std::vector<OptimalPreclusionSet> optimal_sets;
    std::vector<SweptSize> swept_sizes;
    double wall_time_ms = 0;
};

/// Sweeps fault-set sizes 1, 2, ... through `budget`, enumerating each
/// size's subsets of the kind's universe in lexicographic order over dense
/// element indices (vertices by ID first, then edges by index). Stops at the
/// first size containing a preclusive set. Deterministic for any worker
/// count, including the optimal-set list. A clean sweep through the budget
/// is a reported outcome (found = false), not an error.
PreclusionResult preclusion_number(const Graph& g, PreclusionKind kind,
                                   const PreclusionOptions& opt);

struct G3FsmpShape {
    bool all_match = false;       // every optimal set = 1 vertex + 1 boundary edge, adjacent
    bool diagonal_free = false;   // no optimal set contains a diagonal edge
    std::vector<bool> per_set;
};

struct StructureReport {
    PreclusionKind kind = PreclusionKind::MP;
    /// (vertex count, edge count) -> number of optimal sets of that shape.
    std::map<std::pair<int, int>, int> composition;
    int trivial_count = 0;
    /// Engaged for FSMP results on the canonical G(8,4).
    std::optional<G3FsmpShape> g3_fsmp;
};

/// Classifies the optimal sets of a preclusion result; for FSMP on the
/// canonical G(8,4) it additionally checks the one-vertex-plus-adjacent-
/// boundary-edge shape.
StructureReport optimal_set_structure(const Graph& g, const PreclusionResult& result);

}  // namespace mprec
