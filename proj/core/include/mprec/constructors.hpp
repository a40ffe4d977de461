#pragma once

#include <cstdint>
#include <vector>

#include "mprec/graph.hpp"
#include "mprec/rng.hpp"

namespace mprec {

/// Bijection from V(G0) to V(G1), both indexed locally 0..n-1.
struct Bijection {
    std::vector<int> map;

    static Bijection identity(int n);
    static Bijection random(int n, SplitMix64& rng);

    int size() const { return static_cast<int>(map.size()); }
    bool is_permutation() const;
    int operator()(int v) const { return map[static_cast<std::size_t>(v)]; }

    friend bool operator==(const Bijection&, const Bijection&) = default;
};

/// G0 (+)_phi G1 with the composition metadata the preclusion analysis needs.
/// Part 0 keeps its IDs, part 1 is offset by |V(G0)|; the cross edges
/// v--(half + phi(v)) form a perfect matching between the parts.
struct ComposedGraph {
    Graph graph;
    int half = 0;
    Bijection phi;
    std::vector<Edge> cross_edges;

    std::vector<int> part0() const;
    std::vector<int> part1() const;
};

/// One composition step of an RHL build: joins the two already-built halves
/// of `span` vertices rooted at global offset `base` (part 1 lives at
/// base + span/2) with the local bijection `phi`.
struct CompositionStep {
    int dimension = 0;      // dimension of the composed result, >= 4
    int base = 0;
    std::vector<int> phi;   // length span/2 = 2^(dimension-1)
};

/// Recorded composition tree, flattened bottom-up, left-to-right.
/// This order is the contract for bijection sequences supplied to build_rhl:
/// all dimension-4 steps from lowest base to highest, then dimension-5, and
/// so on up to the single dimension-m step. Empty for m = 3.
struct CompositionPlan {
    int dimension = 3;
    std::vector<CompositionStep> steps;
};

/// An m-dimensional restricted HL-graph together with how it was composed.
/// For m = 3 this is exactly G(8,4) and the plan is empty; for m >= 4
/// cross_edges holds the top-level cross matching.
struct RhlGraph {
    Graph graph;
    int dimension = 3;
    CompositionPlan plan;
    std::vector<Edge> cross_edges;

    /// Top-level bijection (m >= 4 only).
    Bijection top_phi() const;
    int half() const { return graph.order() / 2; }
};

/// The recursive circulant G(8,4): vertices 0..7, octagon edges (i, i+1 mod 8)
/// plus the four diagonals (i, i+4). 3-regular, 12 edges, nonbipartite.
Graph recursive_circulant_g84();

/// Octagon edges of the canonical G(8,4) labeling.
bool is_g84_boundary_edge(const Edge& e);
/// Diagonal (i, i+4) edges of the canonical labeling.
bool is_g84_diagonal_edge(const Edge& e);

/// True iff the live graph equals canonical G(8,4) (same IDs, no faults).
bool is_canonical_g84(const Graph& g);

/// Weak G(8,4) shape test: 8 alive vertices, 12 live edges, 3-regular,
/// nonbipartite. Does not canonize.
bool looks_like_g84(const Graph& g);

/// BFS 2-coloring of the live graph.
bool is_bipartite(const Graph& g);

/// The (+)_phi composition. Requires equal orders, fully alive inputs and a
/// valid permutation.
ComposedGraph compose(const Graph& g0, const Graph& g1, const Bijection& phi);

/// Builds an m-dimensional restricted HL-graph from an explicit bijection
/// sequence in composition-plan order. Requires exactly 2^(m-3) - 1
/// bijections with the per-step lengths 2^(d-1).
RhlGraph build_rhl(int m, const std::vector<Bijection>& phis);

/// Builds an m-dimensional restricted HL-graph drawing every bijection
/// uniformly from the seeded generator.
RhlGraph build_rhl(int m, std::uint64_t seed);

/// G(8,4) itself (m = 3).
RhlGraph build_rhl(int m);

/// Binary n-cube; 2^n vertices, IDs adjacent iff they differ in one bit.
Graph hypercube(int n);

}  // namespace mprec
