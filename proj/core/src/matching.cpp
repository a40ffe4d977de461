#include "mprec/matching.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>

namespace mprec {

namespace {

// ---------------------------------------------------------------------------
// Edmonds blossom search over the live graph plus an optional fault overlay.
// Classic BFS formulation with base[] contraction; O(V^3), which is plenty
// for the instance sizes the sweeps visit.
// ---------------------------------------------------------------------------
class Blossom {
public:
    Blossom(const Graph& g, std::span<const int> fault_vertices,
            std::span<const int> fault_edge_indices)
        : g_(g),
          n_(g.order()),
          dead_(static_cast<std::size_t>(n_), 0),
          edge_dead_(static_cast<std::size_t>(g.edge_count()), 0),
          mate_(static_cast<std::size_t>(n_), -1),
          parent_(static_cast<std::size_t>(n_), -1),
          base_(static_cast<std::size_t>(n_), 0) {
        for (int v : fault_vertices) dead_[static_cast<std::size_t>(v)] = 1;
        for (int e : fault_edge_indices) edge_dead_[static_cast<std::size_t>(e)] = 1;
    }

    int run() {
        greedy_init();
        for (int v = 0; v < n_; ++v) {
            if (alive(v) && mate_[static_cast<std::size_t>(v)] < 0) {
                int endpoint = find_path(v);
                if (endpoint >= 0) augment_from(endpoint);
            }
        }
        int matched = 0;
        for (int v = 0; v < n_; ++v) {
            if (alive(v) && mate_[static_cast<std::size_t>(v)] >= 0) ++matched;
        }
        return matched / 2;
    }

    std::vector<int> take_mate() { return std::move(mate_); }

private:
    bool alive(int v) const {
        return g_.vertex_alive(v) && !dead_[static_cast<std::size_t>(v)];
    }
    bool edge_ok(int e) const {
        return g_.edge_present(e) && !edge_dead_[static_cast<std::size_t>(e)];
    }

    void greedy_init() {
        for (int e = 0; e < g_.edge_count(); ++e) {
            const Edge& ed = g_.edge(e);
            if (!edge_ok(e) || !alive(ed.u) || !alive(ed.v)) continue;
            if (mate_[static_cast<std::size_t>(ed.u)] < 0 && mate_[static_cast<std::size_t>(ed.v)] < 0) {
                mate_[static_cast<std::size_t>(ed.u)] = ed.v;
                mate_[static_cast<std::size_t>(ed.v)] = ed.u;
            }
        }
    }

    int lca(int a, int b) const {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        int x = a;
        while (true) {
            x = base_[static_cast<std::size_t>(x)];
            seen[static_cast<std::size_t>(x)] = 1;
            if (mate_[static_cast<std::size_t>(x)] < 0) break;
            x = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(x)])];
        }
        int y = b;
        while (true) {
            y = base_[static_cast<std::size_t>(y)];
            if (seen[static_cast<std::size_t>(y)]) return y;
            y = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(y)])];
        }
    }

    void mark_path(std::vector<char>& in_blossom, int v, int stem, int child) {
        while (base_[static_cast<std::size_t>(v)] != stem) {
            int mv = mate_[static_cast<std::size_t>(v)];
            in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
            in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = 1;
            parent_[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent_[static_cast<std::size_t>(mv)];
        }
    }

    // BFS for an augmenting path from root; returns its exposed endpoint
    // (path recoverable through parent_) or -1.
    int find_path(int root) {
        std::fill(parent_.begin(), parent_.end(), -1);
        std::vector<char> used(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;
        used[static_cast<std::size_t>(root)] = 1;
        std::queue<int> bfs;
        bfs.push(root);
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (const auto& [w, e] : g_.adjacency_raw(v)) {
                if (!alive(w) || !edge_ok(e)) continue;
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(w)] ||
                    mate_[static_cast<std::size_t>(v)] == w) {
                    continue;
                }
                if (w == root ||
                    (mate_[static_cast<std::size_t>(w)] >= 0 &&
                     parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(w)])] >= 0)) {
                    // Odd cycle: contract the blossom onto the stem.
                    int stem = lca(v, w);
                    std::vector<char> in_blossom(static_cast<std::size_t>(n_), 0);
                    mark_path(in_blossom, v, stem, w);
                    mark_path(in_blossom, w, stem, v);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
                            base_[static_cast<std::size_t>(i)] = stem;
                            if (!used[static_cast<std::size_t>(i)]) {
                                used[static_cast<std::size_t>(i)] = 1;
                                bfs.push(i);
                            }
                        }
                    }
                } else if (parent_[static_cast<std::size_t>(w)] < 0) {
                    parent_[static_cast<std::size_t>(w)] = v;
                    if (mate_[static_cast<std::size_t>(w)] < 0) return w;
                    int mw = mate_[static_cast<std::size_t>(w)];
                    used[static_cast<std::size_t>(mw)] = 1;
                    bfs.push(mw);
                }
            }
        }
        return -1;
    }

    void augment_from(int v) {
        while (v >= 0) {
            int pv = parent_[static_cast<std::size_t>(v)];
            int next = mate_[static_cast<std::size_t>(pv)];
            mate_[static_cast<std::size_t>(v)] = pv;
            mate_[static_cast<std::size_t>(pv)] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<char> dead_;
    std::vector<char> edge_dead_;
    std::vector<int> mate_;
    std::vector<int> parent_;
    std::vector<int> base_;
};

}  // namespace

int Matching::size() const {
    int matched = 0;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
        if (mate[static_cast<std::size_t>(v)] > v) ++matched;
    }
    return matched;
}

std::vector<Edge> Matching::matched_edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
        int w = mate[static_cast<std::size_t>(v)];
        if (w > v) out.emplace_back(v, w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Matching::exposed(const Graph& g) const {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v) {
        if (g.vertex_alive(v) && mate[static_cast<std::size_t>(v)] < 0) out.push_back(v);
    }
    return out;
}

bool Matching::is_valid(const Graph& g) const {
    if (static_cast<int>(mate.size()) != g.order()) return false;
    for (int v = 0; v < g.order(); ++v) {
        int w = mate[static_cast<std::size_t>(v)];
        if (w < 0) continue;
        if (!g.vertex_alive(v) || !g.vertex_alive(w)) return false;
        if (mate[static_cast<std::size_t>(w)] != v) return false;
        if (!g.has_live_edge(v, w)) return false;
    }
    return true;
}

Matching max_matching(const Graph& g) {
    Blossom search(g, {}, {});
    search.run();
    Matching m;
    m.mate = search.take_mate();
    return m;
}

bool has_perfect_matching(const Graph& g) {
    if (g.alive_count() % 2 != 0) return false;
    return 2 * max_matching(g).size() == g.alive_count();
}

bool has_almost_perfect_matching(const Graph& g) {
    if (g.alive_count() % 2 != 1) return false;
    return 2 * max_matching(g).size() == g.alive_count() - 1;
}

Graph bipartite_double_cover(const Graph& g) {
    const int n = g.order();
    std::vector<Edge> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!g.edge_live(e)) continue;
        edges.emplace_back(g.edge(e).u, g.edge(e).v + n);
        edges.emplace_back(g.edge(e).v, g.edge(e).u + n);
    }
    Graph cover(2 * n, edges);
    std::vector<int> dead;
    for (int v = 0; v < n; ++v) {
        if (!g.vertex_alive(v)) {
            dead.push_back(v);
            dead.push_back(v + n);
        }
    }
    if (dead.empty()) return cover;
    return delete_faults(cover, FaultSet::of_vertices(std::move(dead)));
}

void FractionalMatching::set_half_weight(int e, int halves) {
    if (halves < 0 || halves > 2) throw MatchingError("edge weight must be 0, 1/2 or 1");
    halves_[static_cast<std::size_t>(e)] = static_cast<std::uint8_t>(halves);
}

int FractionalMatching::vertex_sum_halves(const Graph& g, int v) const {
    int sum = 0;
    g.for_live_neighbors(v, [&](int, int e) { sum += halves_[static_cast<std::size_t>(e)]; });
    return sum;
}

bool FractionalMatching::is_valid(const Graph& g) const {
    if (edge_count() != g.edge_count()) return false;
    for (int e = 0; e < edge_count(); ++e) {
        if (halves_[static_cast<std::size_t>(e)] > 0 && !g.edge_live(e)) return false;
    }
    for (int v = 0; v < g.order(); ++v) {
        if (g.vertex_alive(v) && vertex_sum_halves(g, v) > 2) return false;
    }
    return true;
}

bool FractionalMatching::is_perfect(const Graph& g) const {
    if (!is_valid(g)) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (g.vertex_alive(v) && vertex_sum_halves(g, v) != 2) return false;
    }
    return true;
}

void FractionalMatching::normalize(const Graph& g) {
    std::vector<char> visited(halves_.size(), 0);
    for (int e0 = 0; e0 < edge_count(); ++e0) {
        if (halves_[static_cast<std::size_t>(e0)] != 1 || visited[static_cast<std::size_t>(e0)] ||
            !g.edge_live(e0)) {
            continue;
        }
        std::vector<int> cycle;
        const int start = g.edge(e0).u;
        int cur_edge = e0;
        int cur_vertex = start;
        bool closed = false;
        while (true) {
            visited[static_cast<std::size_t>(cur_edge)] = 1;
            cycle.push_back(cur_edge);
            const Edge& ed = g.edge(cur_edge);
            int next_vertex = (ed.u == cur_vertex) ? ed.v : ed.u;
            if (next_vertex == start) {
                closed = true;
                break;
            }
            int next_edge = -1;
            g.for_live_neighbors(next_vertex, [&](int, int e) {
                if (next_edge < 0 && e != cur_edge && halves_[static_cast<std::size_t>(e)] == 1) {
                    next_edge = e;
                }
            });
            if (next_edge < 0) break;  // open half-path; leave untouched
            cur_edge = next_edge;
            cur_vertex = next_vertex;
        }
        if (closed && cycle.size() % 2 == 0) {
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                halves_[static_cast<std::size_t>(cycle[i])] = (i % 2 == 0) ? 2 : 0;
            }
        }
    }
}

bool DeficiencyWitness::is_valid(const Graph& g) const {
    std::vector<int> recomputed = isolated_vertices(g, s);
    return recomputed == isolated && static_cast<int>(isolated.size()) > static_cast<int>(s.size());
}

namespace {

// Maximum matching of the implicit bipartite double cover: mate_plus[v] = w
// records the cover edge v+ -- w-. Kuhn augmentation from every exposed
// plus-vertex yields a maximum matching, so failure of any single
// augmentation is already decisive.
struct CoverMatching {
    std::vector<int> mate_plus;
    std::vector<int> mate_minus;
    bool perfect = false;
};

bool cover_augment(const Graph& g, int u, std::vector<int>& mate_plus,
                   std::vector<int>& mate_minus, std::vector<char>& visited) {
    for (const auto& [w, e] : g.adjacency_raw(u)) {
        if (!g.vertex_alive(w) || !g.edge_present(e) || visited[static_cast<std::size_t>(w)]) {
            continue;
        }
        visited[static_cast<std::size_t>(w)] = 1;
        int x = mate_minus[static_cast<std::size_t>(w)];
        if (x < 0 || cover_augment(g, x, mate_plus, mate_minus, visited)) {
            mate_plus[static_cast<std::size_t>(u)] = w;
            mate_minus[static_cast<std::size_t>(w)] = u;
            return true;
        }
    }
    return false;
}

CoverMatching full_cover_matching(const Graph& g) {
    const int n = g.order();
    CoverMatching cm;
    cm.mate_plus.assign(static_cast<std::size_t>(n), -1);
    cm.mate_minus.assign(static_cast<std::size_t>(n), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!g.edge_live(e)) continue;
        const Edge& ed = g.edge(e);
        if (cm.mate_plus[static_cast<std::size_t>(ed.u)] < 0 &&
            cm.mate_minus[static_cast<std::size_t>(ed.v)] < 0) {
            cm.mate_plus[static_cast<std::size_t>(ed.u)] = ed.v;
            cm.mate_minus[static_cast<std::size_t>(ed.v)] = ed.u;
        }
        if (cm.mate_plus[static_cast<std::size_t>(ed.v)] < 0 &&
            cm.mate_minus[static_cast<std::size_t>(ed.u)] < 0) {
            cm.mate_plus[static_cast<std::size_t>(ed.v)] = ed.u;
            cm.mate_minus[static_cast<std::size_t>(ed.u)] = ed.v;
        }
    }
    cm.perfect = true;
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
        if (!g.vertex_alive(u) || cm.mate_plus[static_cast<std::size_t>(u)] >= 0) continue;
        std::fill(visited.begin(), visited.end(), 0);
        if (!cover_augment(g, u, cm.mate_plus, cm.mate_minus, visited)) cm.perfect = false;
    }
    return cm;
}

FractionalMatching fold_cover_matching(const Graph& g, const CoverMatching& cm) {
    FractionalMatching fm(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!g.edge_live(e)) continue;
        const Edge& ed = g.edge(e);
        int halves = (cm.mate_plus[static_cast<std::size_t>(ed.u)] == ed.v ? 1 : 0) +
                     (cm.mate_plus[static_cast<std::size_t>(ed.v)] == ed.u ? 1 : 0);
        fm.set_half_weight(e, halves);
    }
    fm.normalize(g);
    return fm;
}

// Koenig construction on the cover, projected back: with Z the alternating
// reachability from exposed plus-vertices, the vertices whose minus copy is
// reachable but whose plus copy is not form the deficiency set s.
DeficiencyWitness koenig_witness(const Graph& g, const CoverMatching& cm) {
    const int n = g.order();
    std::vector<char> z_plus(static_cast<std::size_t>(n), 0), z_minus(static_cast<std::size_t>(n), 0);
    std::queue<int> bfs;
    for (int u = 0; u < n; ++u) {
        if (g.vertex_alive(u) && cm.mate_plus[static_cast<std::size_t>(u)] < 0) {
            z_plus[static_cast<std::size_t>(u)] = 1;
            bfs.push(u);
        }
    }
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        g.for_live_neighbors(u, [&](int w, int) {
            if (z_minus[static_cast<std::size_t>(w)]) return;
            z_minus[static_cast<std::size_t>(w)] = 1;
            int x = cm.mate_minus[static_cast<std::size_t>(w)];
            if (x >= 0 && !z_plus[static_cast<std::size_t>(x)]) {
                z_plus[static_cast<std::size_t>(x)] = 1;
                bfs.push(x);
            }
        });
    }
    DeficiencyWitness witness;
    for (int v = 0; v < n; ++v) {
        if (g.vertex_alive(v) && !z_plus[static_cast<std::size_t>(v)] &&
            z_minus[static_cast<std::size_t>(v)]) {
            witness.s.push_back(v);
        }
    }
    witness.isolated = isolated_vertices(g, witness.s);
    if (!witness.is_valid(g)) {
        throw MatchingError("internal: deficiency extraction produced an invalid witness");
    }
    return witness;
}

}  // namespace

FpmOutcome has_fractional_perfect_matching(const Graph& g) {
    CoverMatching cm = full_cover_matching(g);
    FpmOutcome out;
    out.has_fpm = cm.perfect;
    if (cm.perfect) {
        out.matching = fold_cover_matching(g, cm);
    } else {
        out.witness = koenig_witness(g, cm);
    }
    return out;
}

bool scheinerman_oracle(const Graph& g) {
    const std::vector<int> alive = g.alive_vertices();
    const int a = static_cast<int>(alive.size());
    if (a > 20) {
        throw MatchingError("scheinerman_oracle: size guard exceeded (" + std::to_string(a) +
                            " alive vertices, limit 20)");
    }
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(a), 0);
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < a; ++i) local[static_cast<std::size_t>(alive[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < a; ++i) {
        g.for_live_neighbors(alive[static_cast<std::size_t>(i)], [&](int w, int) {
            nbr[static_cast<std::size_t>(i)] |=
                1u << local[static_cast<std::size_t>(w)];
        });
    }
    const std::uint32_t full = (1u << a) - 1;
    for (std::uint64_t s = 0; s <= full; ++s) {
        std::uint32_t rest = full & ~static_cast<std::uint32_t>(s);
        int isolated = 0;
        for (std::uint32_t bits = rest; bits != 0; bits &= bits - 1) {
            int i = std::countr_zero(bits);
            if ((nbr[static_cast<std::size_t>(i)] & rest) == 0) ++isolated;
        }
        if (isolated > std::popcount(static_cast<std::uint32_t>(s))) return false;
    }
    return true;
}

FractionalMatching fpm_from_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle) {
    const int len = static_cast<int>(cycle.size());
    if (len != g.alive_count() || len < 3) {
        throw MatchingError("cycle does not cover the live graph");
    }
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (int v : cycle) {
        g.check_vertex(v);
        if (seen[static_cast<std::size_t>(v)]) {
            throw MatchingError("cycle repeats vertex " + std::to_string(v));
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    FractionalMatching fm(g.edge_count());
    for (int i = 0; i < len; ++i) {
        int u = cycle[static_cast<std::size_t>(i)];
        int v = cycle[static_cast<std::size_t>((i + 1) % len)];
        int e = g.edge_index(u, v);
        if (e < 0 || !g.edge_live(e)) {
            throw MatchingError("cycle uses missing edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
        }
        fm.set_half_weight(e, 1);
    }
    return fm;
}

FractionalMatching patch_cross_edge(const Graph& target, const FractionalMatching& fm0,
                                    const FractionalMatching& fm1, const Edge& cross) {
    if (fm0.edge_count() != target.edge_count() || fm1.edge_count() != target.edge_count()) {
        throw MatchingError("patch_cross_edge: parts use a different edge index space");
    }
    int cross_idx = target.edge_index(cross.u, cross.v);
    if (cross_idx < 0 || !target.edge_live(cross_idx)) {
        throw MatchingError("patch_cross_edge: cross edge is not live in the target");
    }
    FractionalMatching out(target.edge_count());
    for (int e = 0; e < target.edge_count(); ++e) {
        int h0 = fm0.half_weight(e);
        int h1 = fm1.half_weight(e);
        if (h0 > 0 && h1 > 0) {
            throw MatchingError("patch_cross_edge: overlapping supports at edge " +
                                std::to_string(e));
        }
        int h = h0 + h1;
        if (h > 0 && !target.edge_live(e)) {
            throw MatchingError("patch_cross_edge: support uses a dead edge");
        }
        out.set_half_weight(e, h);
    }
    if (out.half_weight(cross_idx) != 0) {
        throw MatchingError("patch_cross_edge: cross edge already weighted");
    }
    out.set_half_weight(cross_idx, 2);
    if (!out.is_perfect(target)) {
        throw MatchingError("patch_cross_edge: patched assignment leaves vertices uncovered");
    }
    return out;
}

bool OddComponentsWitness::is_valid(const Graph& g) const {
    std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
    for (int v : s) {
        if (v < 0 || v >= g.order() || !g.vertex_alive(v)) return false;
        removed[static_cast<std::size_t>(v)] = 1;
    }
    Graph rest = delete_faults(g, FaultSet::of_vertices(s));
    auto comps = components(rest);
    std::vector<std::vector<int>> odd;
    for (auto& c : comps) {
        if (c.size() % 2 == 1) odd.push_back(c);
    }
    if (odd != odd_components) return false;
    int slack = (g.alive_count() % 2 == 0) ? 0 : 1;
    return static_cast<int>(odd.size()) > static_cast<int>(s.size()) + slack;
}

OddComponentsWitness odd_components_witness(const Graph& g) {
    Matching m = max_matching(g);
    const int max_size = m.size();
    std::vector<int> inessential;
    for (int v = 0; v < g.order(); ++v) {
        if (!g.vertex_alive(v)) continue;
        int one_fault[1] = {v};
        Blossom without_v(g, one_fault, {});
        if (without_v.run() == max_size) inessential.push_back(v);
    }
    std::vector<char> in_d(static_cast<std::size_t>(g.order()), 0);
    for (int v : inessential) in_d[static_cast<std::size_t>(v)] = 1;
    OddComponentsWitness witness;
    std::vector<char> in_s(static_cast<std::size_t>(g.order()), 0);
    for (int v : inessential) {
        g.for_live_neighbors(v, [&](int w, int) {
            if (!in_d[static_cast<std::size_t>(w)] && !in_s[static_cast<std::size_t>(w)]) {
                in_s[static_cast<std::size_t>(w)] = 1;
                witness.s.push_back(w);
            }
        });
    }
    std::sort(witness.s.begin(), witness.s.end());
    Graph rest = delete_faults(g, FaultSet::of_vertices(witness.s));
    for (auto& c : components(rest)) {
        if (c.size() % 2 == 1) witness.odd_components.push_back(c);
    }
    return witness;
}

// ---------------------------------------------------------------------------
// FpmDecider
// ---------------------------------------------------------------------------

FpmDecider::FpmDecider(const Graph& base) : g_(&base), n_(base.order()) {
    CoverMatching cm = full_cover_matching(base);
    master_perfect_ = cm.perfect;
    master_mate_plus_ = std::move(cm.mate_plus);
    master_mate_minus_ = std::move(cm.mate_minus);
    mate_plus_ = master_mate_plus_;
    mate_minus_ = master_mate_minus_;
    dead_v_.assign(static_cast<std::size_t>(n_), 0);
    dead_e_.assign(static_cast<std::size_t>(base.edge_count()), 0);
    visited_.assign(static_cast<std::size_t>(n_), 0);
}

bool FpmDecider::augment(int u) {
    for (const auto& [w, e] : g_->adjacency_raw(u)) {
        if (!g_->vertex_alive(w) || !g_->edge_present(e)) continue;
        if (dead_v_[static_cast<std::size_t>(w)] == epoch_ ||
            dead_e_[static_cast<std::size_t>(e)] == epoch_) {
            continue;
        }
        if (visited_[static_cast<std::size_t>(w)] == visit_stamp_) continue;
        visited_[static_cast<std::size_t>(w)] = visit_stamp_;
        int x = mate_minus_[static_cast<std::size_t>(w)];
        if (x < 0 || augment(x)) {
            mate_plus_[static_cast<std::size_t>(u)] = w;
            mate_minus_[static_cast<std::size_t>(w)] = u;
            return true;
        }
    }
    return false;
}

bool FpmDecider::has_fpm_under_faults(std::span<const int> fault_vertices,
                                      std::span<const int> fault_edge_indices) {
    if (epoch_ == std::numeric_limits<std::uint32_t>::max()) {
        std::fill(dead_v_.begin(), dead_v_.end(), 0);
        std::fill(dead_e_.begin(), dead_e_.end(), 0);
        epoch_ = 0;
    }
    ++epoch_;
    for (int v : fault_vertices) dead_v_[static_cast<std::size_t>(v)] = epoch_;
    for (int e : fault_edge_indices) dead_e_[static_cast<std::size_t>(e)] = epoch_;

    mate_plus_ = master_mate_plus_;
    mate_minus_ = master_mate_minus_;
    newly_exposed_.clear();

    for (int v : fault_vertices) {
        int w = mate_plus_[static_cast<std::size_t>(v)];
        if (w >= 0) {
            mate_plus_[static_cast<std::size_t>(v)] = -1;
            mate_minus_[static_cast<std::size_t>(w)] = -1;
        }
        int u = mate_minus_[static_cast<std::size_t>(v)];
        if (u >= 0) {
            mate_minus_[static_cast<std::size_t>(v)] = -1;
            mate_plus_[static_cast<std::size_t>(u)] = -1;
            if (dead_v_[static_cast<std::size_t>(u)] != epoch_) newly_exposed_.push_back(u);
        }
    }
    for (int e : fault_edge_indices) {
        const Edge& ed = g_->edge(e);
        if (mate_plus_[static_cast<std::size_t>(ed.u)] == ed.v) {
            mate_plus_[static_cast<std::size_t>(ed.u)] = -1;
            mate_minus_[static_cast<std::size_t>(ed.v)] = -1;
            if (dead_v_[static_cast<std::size_t>(ed.u)] != epoch_) newly_exposed_.push_back(ed.u);
        }
        if (mate_plus_[static_cast<std::size_t>(ed.v)] == ed.u) {
            mate_plus_[static_cast<std::size_t>(ed.v)] = -1;
            mate_minus_[static_cast<std::size_t>(ed.u)] = -1;
            if (dead_v_[static_cast<std::size_t>(ed.v)] != epoch_) newly_exposed_.push_back(ed.v);
        }
    }

    if (visit_stamp_ > std::numeric_limits<std::uint32_t>::max() - 256) {
        std::fill(visited_.begin(), visited_.end(), 0);
        visit_stamp_ = 0;
    }

    if (master_perfect_) {
        for (int u : newly_exposed_) {
            if (mate_plus_[static_cast<std::size_t>(u)] >= 0) continue;
            ++visit_stamp_;
            if (!augment(u)) return false;
        }
        return true;
    }

    // The base graph itself lacks a perfect cover matching; repair cannot
    // assume anything, so re-augment every exposed live plus-vertex.
    for (int u = 0; u < n_; ++u) {
        if (!g_->vertex_alive(u) || dead_v_[static_cast<std::size_t>(u)] == epoch_) continue;
        if (mate_plus_[static_cast<std::size_t>(u)] >= 0) continue;
        ++visit_stamp_;
        if (!augment(u)) return false;
    }
    return true;
}

bool FpmDecider::has_fpm(const FaultSet& f) {
    std::vector<int> edge_indices;
    edge_indices.reserve(f.edges.size());
    for (const Edge& e : f.edges) {
        int idx = g_->edge_index(e.u, e.v);
        if (idx < 0 || !g_->edge_live(idx)) {
            throw MatchingError("fault edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                ") is not live in the base graph");
        }
        edge_indices.push_back(idx);
    }
    for (int v : f.vertices) g_->check_vertex(v);
    return has_fpm_under_faults(f.vertices, edge_indices);
}

bool IntegralDecider::survives(std::span<const int> fault_vertices,
                               std::span<const int> fault_edge_indices) {
    Blossom search(*g_, fault_vertices, fault_edge_indices);
    int matched_pairs = search.run();
    int remaining = g_->alive_count() - static_cast<int>(fault_vertices.size());
    return matched_pairs == remaining / 2;
}

}  // namespace mprec
