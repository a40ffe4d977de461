#include "mprec/constructors.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace mprec {

Bijection Bijection::identity(int n) {
    Bijection b;
    b.map.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) b.map[static_cast<std::size_t>(i)] = i;
    return b;
}

Bijection Bijection::random(int n, SplitMix64& rng) {
    Bijection b = identity(n);
    rng.shuffle(b.map);
    return b;
}

bool Bijection::is_permutation() const {
    std::vector<char> seen(map.size(), 0);
    for (int x : map) {
        if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = 1;
    }
    return true;
}

std::vector<int> ComposedGraph::part0() const {
    std::vector<int> out(static_cast<std::size_t>(half));
    for (int i = 0; i < half; ++i) out[static_cast<std::size_t>(i)] = i;
    return out;
}

std::vector<int> ComposedGraph::part1() const {
    std::vector<int> out(static_cast<std::size_t>(half));
    for (int i = 0; i < half; ++i) out[static_cast<std::size_t>(i)] = half + i;
    return out;
}

Bijection RhlGraph::top_phi() const {
    if (plan.steps.empty()) throw GraphError("dimension-3 RHL graph has no composition");
    Bijection b;
    b.map = plan.steps.back().phi;
    return b;
}

Graph recursive_circulant_g84() {
    std::vector<Edge> edges;
    for (int i = 0; i < 8; ++i) edges.emplace_back(i, (i + 1) % 8);
    for (int i = 0; i < 4; ++i) edges.emplace_back(i, i + 4);
    return Graph(8, edges);
}

bool is_g84_boundary_edge(const Edge& e) {
    return e.v - e.u == 1 || (e.u == 0 && e.v == 7);
}

bool is_g84_diagonal_edge(const Edge& e) {
    return e.v - e.u == 4;
}

bool is_canonical_g84(const Graph& g) {
    if (g.order() != 8) return false;
    return g.same_live_graph(recursive_circulant_g84());
}

bool looks_like_g84(const Graph& g) {
    if (g.alive_count() != 8 || g.live_edge_count() != 12) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (g.vertex_alive(v) && g.live_degree(v) != 3) return false;
    }
    return !is_bipartite(g);
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    std::queue<int> queue;
    for (int start = 0; start < g.order(); ++start) {
        if (!g.vertex_alive(start) || color[static_cast<std::size_t>(start)] >= 0) continue;
        color[static_cast<std::size_t>(start)] = 0;
        queue.push(start);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            bool odd_cycle = false;
            g.for_live_neighbors(v, [&](int w, int) {
                if (color[static_cast<std::size_t>(w)] < 0) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    queue.push(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    odd_cycle = true;
                }
            });
            if (odd_cycle) return false;
        }
    }
    return true;
}

ComposedGraph compose(const Graph& g0, const Graph& g1, const Bijection& phi) {
    if (g0.order() != g1.order()) {
        throw GraphError("compose: parts have different orders (" + std::to_string(g0.order()) +
                         " vs " + std::to_string(g1.order()) + ")");
    }
    if (g0.alive_count() != g0.order() || g1.alive_count() != g1.order()) {
        throw GraphError("compose: parts must be fully alive");
    }
    if (phi.size() != g0.order() || !phi.is_permutation()) {
        throw GraphError("compose: phi is not a permutation of the part order");
    }
    const int half = g0.order();
    std::vector<Edge> edges;
    for (int e = 0; e < g0.edge_count(); ++e) {
        if (g0.edge_present(e)) edges.push_back(g0.edge(e));
    }
    for (int e = 0; e < g1.edge_count(); ++e) {
        if (g1.edge_present(e)) {
            edges.emplace_back(g1.edge(e).u + half, g1.edge(e).v + half);
        }
    }
    ComposedGraph out;
    out.half = half;
    out.phi = phi;
    for (int v = 0; v < half; ++v) {
        Edge cross(v, half + phi(v));
        out.cross_edges.push_back(cross);
        edges.push_back(cross);
    }
    std::sort(out.cross_edges.begin(), out.cross_edges.end());
    out.graph = Graph(2 * half, edges);
    return out;
}

namespace {

// Step layout for dimension m: for d = 4..m, the 2^(m-d) steps of dimension d
// from lowest base to highest.
std::vector<std::pair<int, int>> step_layout(int m) {
    std::vector<std::pair<int, int>> layout;  // (dimension, base)
    for (int d = 4; d <= m; ++d) {
        int span = 1 << d;
        int count = 1 << (m - d);
        for (int i = 0; i < count; ++i) layout.emplace_back(d, i * span);
    }
    return layout;
}

RhlGraph build_rhl_from_plan(int m, const std::vector<Bijection>& phis) {
    if (m < 3) throw GraphError("restricted HL-graphs start at dimension 3");
    const auto layout = step_layout(m);
    if (phis.size() != layout.size()) {
        throw GraphError("build_rhl: expected " + std::to_string(layout.size()) +
                         " bijections for dimension " + std::to_string(m) + ", got " +
                         std::to_string(phis.size()));
    }

    RhlGraph out;
    out.dimension = m;
    out.plan.dimension = m;

    // Leaves: one G(8,4) per 8-vertex block.
    const Graph g84 = recursive_circulant_g84();
    const int leaves = 1 << (m - 3);
    std::vector<Edge> edges;
    for (int leaf = 0; leaf < leaves; ++leaf) {
        int base = leaf * 8;
        for (int e = 0; e < g84.edge_count(); ++e) {
            edges.emplace_back(g84.edge(e).u + base, g84.edge(e).v + base);
        }
    }

    for (std::size_t s = 0; s < layout.size(); ++s) {
        auto [d, base] = layout[s];
        const Bijection& phi = phis[s];
        int part = 1 << (d - 1);
        if (phi.size() != part || !phi.is_permutation()) {
            throw GraphError("build_rhl: step " + std::to_string(s) + " needs a permutation of " +
                             std::to_string(part) + " elements");
        }
        CompositionStep step;
        step.dimension = d;
        step.base = base;
        step.phi = phi.map;
        out.plan.steps.push_back(step);

        bool top = (s + 1 == layout.size());
        for (int v = 0; v < part; ++v) {
            Edge cross(base + v, base + part + phi(v));
            edges.push_back(cross);
            if (top) out.cross_edges.push_back(cross);
        }
    }
    std::sort(out.cross_edges.begin(), out.cross_edges.end());
    out.graph = Graph(1 << m, edges);
    return out;
}

}  // namespace

RhlGraph build_rhl(int m, const std::vector<Bijection>& phis) {
    return build_rhl_from_plan(m, phis);
}

RhlGraph build_rhl(int m, std::uint64_t seed) {
    if (m < 3) throw GraphError("restricted HL-graphs start at dimension 3");
    SplitMix64 rng(seed);
    std::vector<Bijection> phis;
    for (auto [d, base] : step_layout(m)) {
        (void)base;
        phis.push_back(Bijection::random(1 << (d - 1), rng));
    }
    return build_rhl_from_plan(m, phis);
}

RhlGraph build_rhl(int m) {
    return build_rhl_from_plan(m, {});
}

Graph hypercube(int n) {
    if (n < 0) throw GraphError("hypercube dimension must be non-negative");
    int size = 1 << n;
    std::vector<Edge> edges;
    for (int v = 0; v < size; ++v) {
        for (int b = 0; b < n; ++b) {
            int w = v ^ (1 << b);
            if (v < w) edges.emplace_back(v, w);
        }
    }
    return Graph(size, edges);
}

}  // namespace mprec
