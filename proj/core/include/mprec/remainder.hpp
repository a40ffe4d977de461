#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mprec/constructors.hpp"
#include "mprec/graph.hpp"
#include "mprec/preclusion.hpp"

namespace mprec {

/// A 4-vertex set of G(8,4) left isolated after deleting an optimal FSMP set
/// {u, e} and three further vertices {x, y, z}, with that provenance kept.
struct RemainderSet {
    std::vector<int> vertices;      // sorted, size 4
    FaultSet provenance_faults;     // the optimal FSMP set {u, e}
    std::vector<int> provenance_s;  // the 3-set whose removal isolates `vertices`
};

/// All distinct remainder sets of g3, which must be G(8,4)-shaped (8
/// vertices, 12 edges, 3-regular, nonbipartite — checked, not canonized).
/// Enumerates every optimal FSMP set F and every 3-subset S of the surviving
/// vertices with i(G-F-S) = 4; deduplicates on the isolated 4-set, keeping
/// the first provenance in enumeration order. Output sorted by vertex set.
std::vector<RemainderSet> enumerate_remainder_sets(const Graph& g3);

/// {phi(v) : v in r}, sorted.
std::vector<int> phi_image(const Bijection& phi, std::span<const int> r);

struct G4ConditionOutcome {
    bool holds = false;
    std::optional<RemainderSet> witness;     // first satisfying R in list order
    std::optional<Edge> g1_edge;             // the surviving G1 edge, when exactly one
};

/// Does some remainder set R leave at most one edge in G1 - phi(R)?
G4ConditionOutcome g4_condition(const Graph& g1, const Bijection& phi,
                                const std::vector<RemainderSet>& remainder_sets);

/// fsmp of the composed 4-dimensional graph, decided from the remainder-set
/// condition alone: 3 when it holds, 4 otherwise.
int predict_fsmp_g4(const Graph& g0, const Graph& g1, const Bijection& phi);

/// When the condition holds, the size-3 fault set {u, e, e'} it implies
/// (provenance faults on the part-0 side plus the surviving part-1 edge,
/// offset into the composed ID space).
FaultSet assemble_g4_witness(const G4ConditionOutcome& outcome, int half);

/// Every automorphism of the live graph, brute force; guarded to order <= 10.
std::vector<std::vector<int>> graph_automorphisms(const Graph& g);

/// Number of distinct orbits the given vertex sets occupy under the graph's
/// automorphism group.
int orbit_count(const Graph& g, const std::vector<std::vector<int>>& sets);

}  // namespace mprec
