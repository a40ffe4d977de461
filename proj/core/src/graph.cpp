#include "mprec/graph.hpp"

#include <algorithm>
#include <set>

namespace mprec {

FaultSet FaultSet::of_vertices(std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    FaultSet f;
    f.vertices = std::move(vs);
    return f;
}

FaultSet FaultSet::of_edges(std::vector<Edge> es) {
    std::sort(es.begin(), es.end());
    FaultSet f;
    f.edges = std::move(es);
    return f;
}

FaultSet FaultSet::mixed(std::vector<int> vs, std::vector<Edge> es) {
    std::sort(vs.begin(), vs.end());
    std::sort(es.begin(), es.end());
    FaultSet f;
    f.vertices = std::move(vs);
    f.edges = std::move(es);
    return f;
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 0) throw GraphError("vertex count must be non-negative");
    for (const Edge& e : edges) {
        if (e.u == e.v) {
            throw GraphError("self-loop on vertex " + std::to_string(e.u));
        }
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            throw GraphError("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ") with n=" + std::to_string(n));
        }
    }
    edges_.assign(edges.begin(), edges.end());
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i] == edges_[i - 1]) {
            throw GraphError("duplicate edge (" + std::to_string(edges_[i].u) + "," +
                             std::to_string(edges_[i].v) + ")");
        }
    }
    adj_.resize(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        adj_[static_cast<std::size_t>(edges_[e].u)].emplace_back(edges_[e].v, static_cast<int>(e));
        adj_[static_cast<std::size_t>(edges_[e].v)].emplace_back(edges_[e].u, static_cast<int>(e));
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
    vertex_alive_.assign(static_cast<std::size_t>(n), 1);
    edge_present_.assign(edges_.size(), 1);
    alive_count_ = n;
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

int Graph::live_edge_count() const {
    int count = 0;
    for (int e = 0; e < edge_count(); ++e) {
        if (edge_live(e)) ++count;
    }
    return count;
}

std::vector<int> Graph::alive_vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(alive_count_));
    for (int v = 0; v < n_; ++v) {
        if (vertex_alive(v)) out.push_back(v);
    }
    return out;
}

std::vector<int> Graph::live_edges() const {
    std::vector<int> out;
    for (int e = 0; e < edge_count(); ++e) {
        if (edge_live(e)) out.push_back(e);
    }
    return out;
}

int Graph::edge_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
    Edge key(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || !(*it == key)) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool Graph::has_live_edge(int u, int v) const {
    int e = edge_index(u, v);
    return e >= 0 && edge_live(e);
}

std::vector<int> Graph::live_neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for_live_neighbors(v, [&](int w, int) { out.push_back(w); });
    return out;
}

int Graph::live_degree(int v) const {
    check_vertex(v);
    int d = 0;
    for_live_neighbors(v, [&](int, int) { ++d; });
    return d;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw GraphError("vertex " + std::to_string(v) + " out of range");
    }
    if (!vertex_alive(v)) {
        throw GraphError("vertex " + std::to_string(v) + " is not alive");
    }
}

bool Graph::same_live_graph(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (int v = 0; v < n_; ++v) {
        if (vertex_alive(v) != other.vertex_alive(v)) return false;
    }
    for (int v = 0; v < n_; ++v) {
        if (!vertex_alive(v)) continue;
        if (live_neighbors(v) != other.live_neighbors(v)) return false;
    }
    return true;
}

Graph delete_faults(const Graph& g, const FaultSet& f) {
    // Validate the whole set against the pre-deletion state first.
    std::set<int> seen_v;
    for (int v : f.vertices) {
        g.check_vertex(v);
        if (!seen_v.insert(v).second) {
            throw GraphError("fault vertex " + std::to_string(v) + " listed twice");
        }
    }
    std::set<std::pair<int, int>> seen_e;
    for (const Edge& e : f.edges) {
        int idx = g.edge_index(e.u, e.v);
        if (idx < 0 || !g.edge_live(idx)) {
            throw GraphError("fault edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") is not a live edge");
        }
        if (!seen_e.insert({e.u, e.v}).second) {
            throw GraphError("fault edge listed twice");
        }
    }
    Graph out = g;
    for (int v : f.vertices) {
        out.vertex_alive_[static_cast<std::size_t>(v)] = 0;
        --out.alive_count_;
    }
    for (const Edge& e : f.edges) {
        out.edge_present_[static_cast<std::size_t>(g.edge_index(e.u, e.v))] = 0;
    }
    return out;
}

namespace {

std::vector<char> removal_mask(const Graph& g, std::span<const int> s) {
    std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
    for (int v : s) {
        g.check_vertex(v);
        removed[static_cast<std::size_t>(v)] = 1;
    }
    return removed;
}

}  // namespace

std::vector<int> isolated_vertices(const Graph& g, std::span<const int> s) {
    std::vector<char> removed = removal_mask(g, s);
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v) {
        if (!g.vertex_alive(v) || removed[static_cast<std::size_t>(v)]) continue;
        bool isolated = true;
        g.for_live_neighbors(v, [&](int w, int) {
            if (!removed[static_cast<std::size_t>(w)]) isolated = false;
        });
        if (isolated) out.push_back(v);
    }
    return out;
}

int isolated_count(const Graph& g, std::span<const int> s) {
    return static_cast<int>(isolated_vertices(g, s).size());
}

int min_degree(const Graph& g) {
    if (g.alive_count() == 0) throw GraphError("min_degree of an empty graph");
    int best = -1;
    for (int v = 0; v < g.order(); ++v) {
        if (!g.vertex_alive(v)) continue;
        int d = g.live_degree(v);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<char> visited(static_cast<std::size_t>(g.order()), 0);
    std::vector<std::vector<int>> comps;
    std::vector<int> stack;
    for (int start = 0; start < g.order(); ++start) {
        if (!g.vertex_alive(start) || visited[static_cast<std::size_t>(start)]) continue;
        std::vector<int> comp;
        stack.push_back(start);
        visited[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            g.for_live_neighbors(v, [&](int w, int) {
                if (!visited[static_cast<std::size_t>(w)]) {
                    visited[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace mprec
