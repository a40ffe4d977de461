#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mprec {

struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

/// Undirected edge with canonical endpoint order (u < v).
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge& a, const Edge& b) {
        if (auto c = a.u <=> b.u; c != 0) return c;
        return a.v <=> b.v;
    }
};

/// Vertex and edge faults applied together. size() counts both parts, which
/// is the |F| used by all preclusion definitions.
struct FaultSet {
    std::vector<int> vertices;   // sorted, unique
    std::vector<Edge> edges;     // sorted, unique, canonical

    static FaultSet of_vertices(std::vector<int> vs);
    static FaultSet of_edges(std::vector<Edge> es);
    static FaultSet mixed(std::vector<int> vs, std::vector<Edge> es);

    int size() const { return static_cast<int>(vertices.size() + edges.size()); }
    bool empty() const { return vertices.empty() && edges.empty(); }
    bool edges_only() const { return vertices.empty(); }

    friend bool operator==(const FaultSet&, const FaultSet&) = default;
};

/// Simple undirected graph with stable vertex IDs and deletion masks.
///
/// Vertices are 0..order()-1. Edges carry a dense index 0..edge_count()-1
/// assigned at construction in lexicographic endpoint order, so subset
/// enumeration over edges is deterministic. Deletion never renumbers:
/// a deleted vertex or edge keeps its ID/index and is skipped by all live
/// queries. An edge is live iff it was not deleted and both endpoints are
/// alive.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an explicit edge list. Rejects out-of-range
    /// endpoints, self-loops and duplicate edges as distinct errors.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool vertex_alive(int v) const { return vertex_alive_[static_cast<std::size_t>(v)] != 0; }
    /// True iff the edge was not deleted itself; endpoints may still be dead.
    bool edge_present(int e) const { return edge_present_[static_cast<std::size_t>(e)] != 0; }
    bool edge_live(int e) const {
        const Edge& ed = edges_[static_cast<std::size_t>(e)];
        return edge_present(e) && vertex_alive(ed.u) && vertex_alive(ed.v);
    }

    int alive_count() const { return alive_count_; }
    int live_edge_count() const;
    std::vector<int> alive_vertices() const;
    std::vector<int> live_edges() const;

    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    /// Dense index of edge (u,v), or -1 when the graph has no such edge.
    int edge_index(int u, int v) const;
    bool has_live_edge(int u, int v) const;

    /// (neighbor, edge index) pairs as constructed, dead entries included.
    std::span<const std::pair<int, int>> adjacency_raw(int v) const {
        return adj_[static_cast<std::size_t>(v)];
    }

    /// Live neighbors of an alive vertex, ascending.
    std::vector<int> live_neighbors(int v) const;
    int live_degree(int v) const;

    /// Visits (neighbor, edge index) for every live edge at v.
    template <typename Fn>
    void for_live_neighbors(int v, Fn&& fn) const {
        for (const auto& [w, e] : adj_[static_cast<std::size_t>(v)]) {
            if (vertex_alive_[static_cast<std::size_t>(w)] && edge_present_[static_cast<std::size_t>(e)]) {
                fn(w, e);
            }
        }
    }

    void check_vertex(int v) const;

    /// Equality on live adjacency under the same ID space (no isomorphism).
    bool same_live_graph(const Graph& other) const;

private:
    friend Graph delete_faults(const Graph& g, const FaultSet& f);

    int n_ = 0;
    int alive_count_ = 0;
    std::vector<Edge> edges_;                              // lex sorted; index = position
    std::vector<std::vector<std::pair<int, int>>> adj_;    // per vertex: (neighbor, edge idx)
    std::vector<char> vertex_alive_;
    std::vector<char> edge_present_;
};

/// G - F: fault vertices removed with their incident edges, fault edges
/// removed, IDs preserved. F is validated against the graph as it is before
/// any element of F is applied; referencing an already-dead element throws.
Graph delete_faults(const Graph& g, const FaultSet& f);

/// Number of isolated vertices of G-S (S removed on top of existing faults).
/// This is the i(G-S) of the fractional-perfect-matching criterion.
int isolated_count(const Graph& g, std::span<const int> s);

/// The isolated vertices themselves, ascending.
std::vector<int> isolated_vertices(const Graph& g, std::span<const int> s);

/// Minimum live degree over alive vertices; throws on an empty graph.
int min_degree(const Graph& g);

/// Connected components of the live graph, each sorted, ordered by minimum
/// vertex.
std::vector<std::vector<int>> components(const Graph& g);

}  // namespace mprec
