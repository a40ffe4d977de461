#include "mprec/hamiltonian.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <thread>

#include "mprec/enumerate.hpp"
#include "mprec/rng.hpp"

namespace mprec {

namespace {

// Multi-path Hamiltonian cycle search: every edge is unknown/in/out, chosen
// edges form vertex-disjoint path segments, and the branch step fixes one
// unknown edge at the most constrained open vertex. Degree saturation and
// forced completion propagate eagerly, a merge that would close a cycle
// before covering every vertex is rejected, and the unknown+in edge graph
// must stay connected. The branching is exhaustive, so a nullopt answer is
// definitive.
class CycleSearch {
public:
    // Optional virtual vertex: adjacent to exactly the two given globals,
    // which turns a Hamiltonian path instance into a cycle instance.
    CycleSearch(const Graph& g, int virtual_u = -1, int virtual_v = -1) {
        std::vector<int> alive = g.alive_vertices();
        local_.assign(static_cast<std::size_t>(g.order()), -1);
        for (int i = 0; i < static_cast<int>(alive.size()); ++i) {
            local_[static_cast<std::size_t>(alive[static_cast<std::size_t>(i)])] = i;
        }
        global_ = alive;
        n_ = static_cast<int>(alive.size());
        adj_.resize(static_cast<std::size_t>(n_) + (virtual_u >= 0 ? 1 : 0));
        for (int e = 0; e < g.edge_count(); ++e) {
            if (!g.edge_live(e)) continue;
            add_edge(local_[static_cast<std::size_t>(g.edge(e).u)],
                     local_[static_cast<std::size_t>(g.edge(e).v)]);
        }
        if (virtual_u >= 0) {
            global_.push_back(-1);
            int x = n_++;
            add_edge(x, local_[static_cast<std::size_t>(virtual_u)]);
            add_edge(x, local_[static_cast<std::size_t>(virtual_v)]);
        }
    }

    std::optional<std::vector<int>> run() {
        if (n_ < 3) return std::nullopt;
        State s;
        s.edge_state.assign(edges_.size(), 0);
        s.deg_in.assign(static_cast<std::size_t>(n_), 0);
        s.deg_unknown.assign(static_cast<std::size_t>(n_), 0);
        s.seg_other.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            s.seg_other[static_cast<std::size_t>(v)] = v;
            s.deg_unknown[static_cast<std::size_t>(v)] =
                static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
        }
        for (int v = 0; v < n_; ++v) {
            if (!settle_vertex(s, v)) return std::nullopt;
        }
        if (!drain(s)) return std::nullopt;
        if (!solve(s)) return std::nullopt;
        return extract();
    }

private:
    struct State {
        std::vector<std::int8_t> edge_state;   // 0 unknown, 1 in, 2 out
        std::vector<int> deg_in;
        std::vector<int> deg_unknown;
        std::vector<int> seg_other;            // valid for segment endpoints
        std::vector<int> dirty;
        int in_count = 0;
        bool complete = false;
    };

    void add_edge(int u, int v) {
        int e = static_cast<int>(edges_.size());
        edges_.emplace_back(u, v);
        adj_[static_cast<std::size_t>(u)].emplace_back(v, e);
        adj_[static_cast<std::size_t>(v)].emplace_back(u, e);
    }

    bool assign_in(State& s, int e) {
        std::int8_t state = s.edge_state[static_cast<std::size_t>(e)];
        if (state == 1) return true;
        if (state == 2) return false;
        auto [u, v] = edges_[static_cast<std::size_t>(e)];
        if (s.deg_in[static_cast<std::size_t>(u)] >= 2 || s.deg_in[static_cast<std::size_t>(v)] >= 2) {
            return false;
        }
        if (s.seg_other[static_cast<std::size_t>(u)] == v) {
            // Closing a segment into a cycle: legal only as the final edge.
            if (s.in_count + 1 != n_) return false;
            s.edge_state[static_cast<std::size_t>(e)] = 1;
            ++s.in_count;
            s.complete = true;
            return true;
        }
        int a = s.seg_other[static_cast<std::size_t>(u)];
        int b = s.seg_other[static_cast<std::size_t>(v)];
        s.seg_other[static_cast<std::size_t>(a)] = b;
        s.seg_other[static_cast<std::size_t>(b)] = a;
        s.edge_state[static_cast<std::size_t>(e)] = 1;
        ++s.in_count;
        for (int x : {u, v}) {
            ++s.deg_in[static_cast<std::size_t>(x)];
            --s.deg_unknown[static_cast<std::size_t>(x)];
            s.dirty.push_back(x);
        }
        return true;
    }

    bool assign_out(State& s, int e) {
        std::int8_t state = s.edge_state[static_cast<std::size_t>(e)];
        if (state == 2) return true;
        if (state == 1) return false;
        s.edge_state[static_cast<std::size_t>(e)] = 2;
        auto [u, v] = edges_[static_cast<std::size_t>(e)];
        for (int x : {u, v}) {
            --s.deg_unknown[static_cast<std::size_t>(x)];
            s.dirty.push_back(x);
        }
        return true;
    }

    // Degree bookkeeping at one vertex: too few options is a contradiction,
    // exactly enough forces the remaining unknown edges in, saturation
    // forces them out.
    bool settle_vertex(State& s, int v) {
        int need = 2 - s.deg_in[static_cast<std::size_t>(v)];
        int unknown = s.deg_unknown[static_cast<std::size_t>(v)];
        if (need < 0) return false;
        if (unknown < need) return false;
        if (need == 0 && unknown > 0) {
            for (const auto& [w, e] : adj_[static_cast<std::size_t>(v)]) {
                (void)w;
                if (s.edge_state[static_cast<std::size_t>(e)] == 0 && !assign_out(s, e)) return false;
            }
        } else if (need > 0 && unknown == need) {
            for (const auto& [w, e] : adj_[static_cast<std::size_t>(v)]) {
                (void)w;
                if (s.edge_state[static_cast<std::size_t>(e)] == 0 && !assign_in(s, e)) return false;
                if (s.complete) return true;
            }
        }
        return true;
    }

    bool drain(State& s) {
        while (!s.dirty.empty() && !s.complete) {
            int v = s.dirty.back();
            s.dirty.pop_back();
            if (!settle_vertex(s, v)) return false;
        }
        return true;
    }

    bool connected(const State& s) const {
        std::vector<char> reach(static_cast<std::size_t>(n_), 0);
        std::vector<int> stack{0};
        reach[0] = 1;
        int seen = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++seen;
            for (const auto& [w, e] : adj_[static_cast<std::size_t>(v)]) {
                if (s.edge_state[static_cast<std::size_t>(e)] != 2 &&
                    !reach[static_cast<std::size_t>(w)]) {
                    reach[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        return seen == n_;
    }

    bool solve(State& s) {
        if (s.complete) {
            result_edges_ = s.edge_state;
            return true;
        }
        if (!connected(s)) return false;
        // Branch vertex: open, fewest unknown edges.
        int best = -1, best_unknown = 0;
        for (int v = 0; v < n_; ++v) {
            if (s.deg_in[static_cast<std::size_t>(v)] >= 2) continue;
            int unknown = s.deg_unknown[static_cast<std::size_t>(v)];
            if (best < 0 || unknown < best_unknown) {
                best = v;
                best_unknown = unknown;
            }
        }
        if (best < 0) return false;   // every vertex saturated yet no closure
        int edge = -1;
        for (const auto& [w, e] : adj_[static_cast<std::size_t>(best)]) {
            (void)w;
            if (s.edge_state[static_cast<std::size_t>(e)] == 0) {
                edge = e;
                break;
            }
        }
        if (edge < 0) return false;
        {
            State child = s;
            if (assign_in(child, edge) && drain(child) && solve(child)) return true;
        }
        State child = std::move(s);
        if (assign_out(child, edge) && drain(child) && solve(child)) return true;
        return false;
    }

    std::optional<std::vector<int>> extract() const {
        // Walk the in-edges from local 0; they form one cycle by construction.
        std::vector<std::array<int, 2>> next(static_cast<std::size_t>(n_), {-1, -1});
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            if (result_edges_[e] != 1) continue;
            auto [u, v] = edges_[e];
            (next[static_cast<std::size_t>(u)][0] < 0 ? next[static_cast<std::size_t>(u)][0]
                                                      : next[static_cast<std::size_t>(u)][1]) = v;
            (next[static_cast<std::size_t>(v)][0] < 0 ? next[static_cast<std::size_t>(v)][0]
                                                      : next[static_cast<std::size_t>(v)][1]) = u;
        }
        std::vector<int> cycle;
        cycle.reserve(static_cast<std::size_t>(n_));
        int prev = -1, cur = 0;
        do {
            cycle.push_back(cur);
            int a = next[static_cast<std::size_t>(cur)][0];
            int b = next[static_cast<std::size_t>(cur)][1];
            int nxt = (a == prev) ? b : a;
            prev = cur;
            cur = nxt;
        } while (cur != 0 && static_cast<int>(cycle.size()) <= n_);
        if (static_cast<int>(cycle.size()) != n_) return std::nullopt;
        return cycle;
    }

    int n_ = 0;
    std::vector<int> local_;
    std::vector<int> global_;   // local -> global; virtual vertex maps to -1
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<std::int8_t> result_edges_;

public:
    int to_global(int local) const { return global_[static_cast<std::size_t>(local)]; }
};

}  // namespace

std::optional<HamWitness> hamiltonian_cycle(const Graph& g) {
    if (g.alive_count() < 3) {
        throw HamiltonianError("a Hamiltonian cycle needs at least 3 alive vertices");
    }
    CycleSearch search(g);
    auto cycle = search.run();
    if (!cycle) return std::nullopt;
    HamWitness w;
    w.kind = HamWitness::Kind::cycle;
    for (int v : *cycle) w.sequence.push_back(search.to_global(v));
    return w;
}

std::optional<HamWitness> hamiltonian_path(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw HamiltonianError("path endpoints must differ");
    CycleSearch search(g, u, v);
    auto cycle = search.run();
    if (!cycle) return std::nullopt;
    // Rotate the cycle so the virtual vertex (global -1) leads, then drop it.
    std::vector<int> seq;
    seq.reserve(cycle->size());
    for (int x : *cycle) seq.push_back(search.to_global(x));
    auto at = std::find(seq.begin(), seq.end(), -1);
    std::rotate(seq.begin(), at, seq.end());
    seq.erase(seq.begin());
    if (seq.front() != u) std::reverse(seq.begin(), seq.end());
    HamWitness w;
    w.kind = HamWitness::Kind::path;
    w.sequence = std::move(seq);
    return w;
}

bool replay_witness(const Graph& g, const HamWitness& w) {
    const auto& seq = w.sequence;
    if (static_cast<int>(seq.size()) != g.alive_count()) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (int v : seq) {
        if (v < 0 || v >= g.order() || !g.vertex_alive(v)) return false;
        if (seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (!g.has_live_edge(seq[i - 1], seq[i])) return false;
    }
    if (w.kind == HamWitness::Kind::cycle) {
        if (seq.size() < 3) return false;
        return g.has_live_edge(seq.back(), seq.front());
    }
    return seq.size() >= 2;
}

namespace {

struct FaultUniverseView {
    std::vector<int> vertices;
    std::vector<int> edge_indices;

    int size() const { return static_cast<int>(vertices.size() + edge_indices.size()); }

    FaultSet to_fault_set(const Graph& g, std::span<const int> combo) const {
        FaultSet f;
        for (int idx : combo) {
            if (idx < static_cast<int>(vertices.size())) {
                f.vertices.push_back(vertices[static_cast<std::size_t>(idx)]);
            } else {
                int e = edge_indices[static_cast<std::size_t>(idx - static_cast<int>(vertices.size()))];
                f.edges.push_back(g.edge(e));
            }
        }
        return f;
    }
};

bool instance_ok(const Graph& g, const FaultSet& f, bool connected) {
    Graph faulted = delete_faults(g, f);
    if (faulted.alive_count() < 3) return false;
    if (!hamiltonian_cycle(faulted).has_value()) return false;
    if (connected) {
        auto alive = faulted.alive_vertices();
        for (std::size_t i = 0; i < alive.size(); ++i) {
            for (std::size_t j = i + 1; j < alive.size(); ++j) {
                if (!hamiltonian_path(faulted, alive[i], alive[j]).has_value()) return false;
            }
        }
    }
    return true;
}

}  // namespace

FaultHamReport verify_fault_hamiltonian(const Graph& g, const FaultHamOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    FaultHamReport report;
    report.budget = opt.budget;
    report.mode = opt.mode;
    report.connected = opt.connected;

    FaultUniverseView universe{g.alive_vertices(), g.live_edges()};
    std::vector<FaultSet> instances;
    if (opt.mode == FaultHamMode::exhaustive) {
        if (opt.budget == 0) {
            instances.push_back(FaultSet{});
        } else {
            for (int k = 1; k <= opt.budget; ++k) {
                for_each_combination(universe.size(), k, [&](std::span<const int> combo) {
                    instances.push_back(universe.to_fault_set(g, combo));
                });
            }
        }
    } else {
        SplitMix64 rng(opt.seed);
        for (int i = 0; i < opt.samples; ++i) {
            auto combo = rng.sample_subset(universe.size(), opt.budget);
            instances.push_back(universe.to_fault_set(g, combo));
        }
    }
    report.instances = instances.size();

    std::vector<char> ok(instances.size(), 0);
    std::vector<double> case_ms(instances.size(), 0);
    std::atomic<std::size_t> next{0};
    int workers = std::max(1, opt.workers);
    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) break;
            auto c0 = std::chrono::steady_clock::now();
            ok[i] = instance_ok(g, instances[i], opt.connected) ? 1 : 0;
            case_ms[i] = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - c0)
                             .count();
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (!ok[i]) report.failures.push_back(instances[i]);
        report.max_search_ms = std::max(report.max_search_ms, case_ms[i]);
    }
    if (opt.connected) {
        for (const auto& f : instances) {
            std::uint64_t a =
                static_cast<std::uint64_t>(g.alive_count() - static_cast<int>(f.vertices.size()));
            report.pair_checks += a * (a - 1) / 2;
        }
    }
    report.total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace mprec
