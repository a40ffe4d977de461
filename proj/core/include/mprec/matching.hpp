#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mprec/graph.hpp"

namespace mprec {

struct MatchingError : std::runtime_error {
    explicit MatchingError(const std::string& what) : std::runtime_error(what) {}
};

/// Integral matching as a mate table over the graph's ID space.
struct Matching {
    std::vector<int> mate;   // mate[v] = partner, or -1

    int size() const;
    std::vector<Edge> matched_edges() const;
    std::vector<int> exposed(const Graph& g) const;   // alive and unmatched
    bool is_valid(const Graph& g) const;              // mates live-adjacent, symmetric
};

/// Maximum-cardinality matching of the live graph (Edmonds blossom search).
/// Deterministic for a fixed graph.
Matching max_matching(const Graph& g);

/// Perfect: even live order, nothing exposed. Almost perfect: odd live
/// order, exactly one exposed vertex.
bool has_perfect_matching(const Graph& g);
bool has_almost_perfect_matching(const Graph& g);

/// Two copies v+ = v and v- = v + n of every vertex; each live edge (u,v)
/// lifts to (u+, v-) and (v+, u-). Copies of dead vertices are dead.
/// G has a fractional perfect matching iff the cover has a perfect matching.
Graph bipartite_double_cover(const Graph& g);

/// Half-integral edge weights, stored exactly as counts of halves (0, 1, 2
/// per edge). Deciders return the normal form, in which the half-weight
/// edges form vertex-disjoint odd cycles; constructions that assign 1/2
/// along an even cycle (a Hamiltonian cycle of an even-order graph, say)
/// are valid fractional matchings but not normalized.
class FractionalMatching {
public:
    FractionalMatching() = default;
    explicit FractionalMatching(int edge_count)
        : halves_(static_cast<std::size_t>(edge_count), 0) {}

    int half_weight(int e) const { return halves_[static_cast<std::size_t>(e)]; }
    void set_half_weight(int e, int halves);

    /// Sum of incident weights at v, in halves (2 = the perfect value 1).
    int vertex_sum_halves(const Graph& g, int v) const;

    /// Fractional matching laws: weights only on live edges, every alive
    /// vertex sums to at most 1.
    bool is_valid(const Graph& g) const;
    /// Every alive vertex sums to exactly 1.
    bool is_perfect(const Graph& g) const;

    /// Rewrites even cycles of half-weights integrally (alternating 0/1),
    /// leaving odd cycles; establishes the normal form for perfect
    /// matchings.
    void normalize(const Graph& g);

    int edge_count() const { return static_cast<int>(halves_.size()); }

private:
    std::vector<std::uint8_t> halves_;
};

/// A set s whose removal isolates more than |s| vertices; certifies that no
/// fractional perfect matching exists.
struct DeficiencyWitness {
    std::vector<int> s;
    std::vector<int> isolated;

    /// Recomputes the isolated set from scratch and checks |isolated| > |s|.
    bool is_valid(const Graph& g) const;
};

struct FpmOutcome {
    bool has_fpm = false;
    std::optional<FractionalMatching> matching;   // engaged when has_fpm
    std::optional<DeficiencyWitness> witness;     // engaged when !has_fpm
};

/// Decides fractional-perfect-matching existence through the bipartite
/// double cover and returns a certificate either way.
FpmOutcome has_fractional_perfect_matching(const Graph& g);

/// Direct evaluation of the isolated-vertex criterion: true iff
/// i(G-S) <= |S| for every S subseteq alive(G). Exponential; guarded to
/// at most 20 alive vertices.
bool scheinerman_oracle(const Graph& g);

/// Weight 1/2 on the edges of a Hamiltonian cycle, 0 elsewhere. The cycle
/// is validated against the live graph first.
FractionalMatching fpm_from_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle);

/// Joins two part-wise fractional perfect matchings across a cross edge
/// (weight 1), producing a fractional perfect matching of `target`.
/// Throws when supports overlap or some alive vertex of `target` ends up
/// uncovered.
FractionalMatching patch_cross_edge(const Graph& target, const FractionalMatching& fm0,
                                    const FractionalMatching& fm1, const Edge& cross);

/// Tutte-style certificate for integral non-matchability: removing s leaves
/// more odd components than the matching slack allows.
struct OddComponentsWitness {
    std::vector<int> s;
    std::vector<std::vector<int>> odd_components;

    bool is_valid(const Graph& g) const;
};

/// Gallai-Edmonds separator of the live graph: s = N(D) \ D where D is the
/// set of inessential vertices. For a graph with no perfect (resp. almost
/// perfect) matching the witness certifies the deficiency.
OddComponentsWitness odd_components_witness(const Graph& g);

/// Fractional-perfect-matching decider over one fixed base graph, built for
/// fault sweeps: it keeps a master cover matching and, per query, repairs
/// only the part a fault set invalidates instead of re-solving.
class FpmDecider {
public:
    explicit FpmDecider(const Graph& base);

    /// FPM existence for base - F, with F given as live vertex IDs plus
    /// dense edge indices. Does not mutate the base graph.
    bool has_fpm_under_faults(std::span<const int> fault_vertices,
                              std::span<const int> fault_edge_indices);

    bool has_fpm(const FaultSet& f);

    bool base_has_fpm() const { return master_perfect_; }
    const Graph& base() const { return *g_; }

private:
    bool augment(int u);

    const Graph* g_ = nullptr;
    int n_ = 0;
    bool master_perfect_ = false;
    std::vector<int> master_mate_plus_, master_mate_minus_;
    std::vector<int> mate_plus_, mate_minus_;
    std::vector<int> newly_exposed_;
    std::vector<std::uint32_t> dead_v_, dead_e_;
    std::uint32_t epoch_ = 0;
    std::vector<std::uint32_t> visited_;
    std::uint32_t visit_stamp_ = 0;
};

/// Maximum-matching size under a fault overlay, sharing the blossom search
/// with max_matching. Used by the integral preclusion sweeps.
class IntegralDecider {
public:
    explicit IntegralDecider(const Graph& base) : g_(&base) {}

    /// True iff base - F still has a perfect or almost perfect matching,
    /// i.e. the maximum matching covers floor(alive/2) pairs.
    bool survives(std::span<const int> fault_vertices, std::span<const int> fault_edge_indices);

private:
    const Graph* g_;
};

}  // namespace mprec
