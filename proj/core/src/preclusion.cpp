#include "mprec/preclusion.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "mprec/constructors.hpp"
#include "mprec/enumerate.hpp"

namespace mprec {

bool kind_is_fractional(PreclusionKind kind) {
    return kind == PreclusionKind::FMP || kind == PreclusionKind::FSMP;
}

bool kind_allows_vertex_faults(PreclusionKind kind) {
    return kind == PreclusionKind::SMP || kind == PreclusionKind::FSMP;
}

std::string to_string(PreclusionKind kind) {
    switch (kind) {
        case PreclusionKind::MP: return "mp";
        case PreclusionKind::SMP: return "smp";
        case PreclusionKind::FMP: return "fmp";
        case PreclusionKind::FSMP: return "fsmp";
    }
    return "?";
}

PreclusionKind parse_preclusion_kind(const std::string& name) {
    if (name == "mp") return PreclusionKind::MP;
    if (name == "smp") return PreclusionKind::SMP;
    if (name == "fmp") return PreclusionKind::FMP;
    if (name == "fsmp") return PreclusionKind::FSMP;
    throw PreclusionError("unknown preclusion kind '" + name + "'");
}

bool survives(const Graph& g, const FaultSet& f, PreclusionKind kind) {
    if (!kind_allows_vertex_faults(kind) && !f.vertices.empty()) {
        throw PreclusionError(to_string(kind) + " draws faults from edges only");
    }
    Graph faulted = delete_faults(g, f);
    if (kind_is_fractional(kind)) {
        return has_fractional_perfect_matching(faulted).has_fpm;
    }
    int remaining = faulted.alive_count();
    return 2 * max_matching(faulted).size() >= remaining - (remaining % 2);
}

bool is_trivial_solution(const Graph& g, const FaultSet& f) {
    if (!f.vertices.empty()) {
        throw PreclusionError("trivial solutions are defined for edge-only fault sets");
    }
    for (int v = 0; v < g.order(); ++v) {
        if (!g.vertex_alive(v)) continue;
        std::vector<Edge> star;
        g.for_live_neighbors(v, [&](int, int e) { star.push_back(g.edge(e)); });
        std::sort(star.begin(), star.end());
        if (star == f.edges && !star.empty()) return true;
    }
    return false;
}

namespace {

struct Universe {
    std::vector<int> vertices;       // live vertex IDs, ascending (empty for edge kinds)
    std::vector<int> edge_indices;   // live edge indices, ascending

    int size() const { return static_cast<int>(vertices.size() + edge_indices.size()); }

    void split(std::span<const int> combo, std::vector<int>& out_vertices,
               std::vector<int>& out_edges) const {
        out_vertices.clear();
        out_edges.clear();
        const int nv = static_cast<int>(vertices.size());
        for (int idx : combo) {
            if (idx < nv) {
                out_vertices.push_back(vertices[static_cast<std::size_t>(idx)]);
            } else {
                out_edges.push_back(edge_indices[static_cast<std::size_t>(idx - nv)]);
            }
        }
    }

    FaultSet to_fault_set(const Graph& g, std::span<const int> combo) const {
        std::vector<int> vs, es;
        split(combo, vs, es);
        FaultSet f;
        f.vertices = std::move(vs);
        for (int e : es) f.edges.push_back(g.edge(e));
        return f;
    }
};

Universe make_universe(const Graph& g, PreclusionKind kind) {
    Universe u;
    if (kind_allows_vertex_faults(kind)) u.vertices = g.alive_vertices();
    u.edge_indices = g.live_edges();
    return u;
}

// Per-worker survivability check, allocation-free across candidates.
class SurvivalProbe {
public:
    SurvivalProbe(const Graph& g, PreclusionKind kind)
        : g_(g), kind_(kind) {
        if (kind_is_fractional(kind_)) fpm_.emplace(g);
    }

    bool survives(std::span<const int> fault_vertices, std::span<const int> fault_edges) {
        if (kind_is_fractional(kind_)) {
            return fpm_->has_fpm_under_faults(fault_vertices, fault_edges);
        }
        IntegralDecider integral(g_);
        return integral.survives(fault_vertices, fault_edges);
    }

private:
    const Graph& g_;
    PreclusionKind kind_;
    std::optional<FpmDecider> fpm_;
};

struct BlockOutcome {
    std::vector<std::vector<int>> hits;   // combos, block-local lex order
    std::uint64_t tested = 0;
    bool truncated = false;               // stopped at the block's first hit
};

struct SizeSweep {
    std::vector<std::vector<int>> hits;   // global lex order (may be truncated)
    std::uint64_t tested = 0;
    std::uint64_t hit_count = 0;
    bool complete = false;                // every subset of this size visited
};

// One size-k pass. Blocks are keyed by the combo's first element; workers
// draw blocks in order from a shared counter, so the merged hit list is in
// global lexicographic order no matter how many threads run.
SizeSweep sweep_size(const Graph& g, PreclusionKind kind, const Universe& universe, int k,
                     bool stop_at_first_hit, int workers) {
    const int u = universe.size();
    SizeSweep sweep;
    if (k > u) {
        sweep.complete = true;
        return sweep;
    }
    const int block_count = u - k + 1;
    std::vector<BlockOutcome> blocks(static_cast<std::size_t>(block_count));
    std::atomic<int> next_block{0};
    std::atomic<int> first_hit_block{block_count};

    auto work = [&]() {
        SurvivalProbe probe(g, kind);
        std::vector<int> fault_vertices, fault_edges;
        fault_vertices.reserve(static_cast<std::size_t>(k));
        fault_edges.reserve(static_cast<std::size_t>(k));
        while (true) {
            int b = next_block.fetch_add(1);
            if (b >= block_count) break;
            if (stop_at_first_hit && b > first_hit_block.load()) continue;
            BlockOutcome& out = blocks[static_cast<std::size_t>(b)];
            for_each_combination_with_min(u, k, b, [&](std::span<const int> combo) {
                ++out.tested;
                universe.split(combo, fault_vertices, fault_edges);
                if (!probe.survives(fault_vertices, fault_edges)) {
                    out.hits.emplace_back(combo.begin(), combo.end());
                    if (stop_at_first_hit) {
                        int cur = first_hit_block.load();
                        while (b < cur && !first_hit_block.compare_exchange_weak(cur, b)) {
                        }
                        out.truncated = true;
                        return false;
                    }
                }
                return true;
            });
        }
    };

    workers = std::max(1, workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    if (stop_at_first_hit) {
        int hb = first_hit_block.load();
        if (hb < block_count) {
            sweep.hits.push_back(blocks[static_cast<std::size_t>(hb)].hits.front());
            sweep.hit_count = 1;
            sweep.complete = false;
            return sweep;
        }
        // no hit anywhere: the whole size was enumerated
    }
    sweep.complete = true;
    for (auto& b : blocks) {
        sweep.tested += b.tested;
        sweep.hit_count += b.hits.size();
        for (auto& h : b.hits) sweep.hits.push_back(std::move(h));
    }
    return sweep;
}

PreclusionCertificate make_certificate(const Graph& g, PreclusionKind kind, const FaultSet& f) {
    PreclusionCertificate cert;
    Graph faulted = delete_faults(g, f);
    if (kind_is_fractional(kind)) {
        FpmOutcome outcome = has_fractional_perfect_matching(faulted);
        if (outcome.has_fpm) {
            throw PreclusionError("internal: certificate requested for a surviving fault set");
        }
        cert.deficiency = std::move(*outcome.witness);
    } else {
        cert.odd_components = odd_components_witness(faulted);
        if (!cert.odd_components->is_valid(faulted)) {
            throw PreclusionError("internal: odd-components certificate failed validation");
        }
    }
    return cert;
}

}  // namespace

PreclusionResult preclusion_number(const Graph& g, PreclusionKind kind,
                                   const PreclusionOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    if (opt.budget < 1) throw PreclusionError("budget must be at least 1");
    int workers = opt.workers > 0 ? opt.workers
                                  : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    Universe universe = make_universe(g, kind);
    PreclusionResult result;
    result.kind = kind;
    result.budget = opt.budget;

    for (int k = 1; k <= opt.budget; ++k) {
        SizeSweep sweep =
            sweep_size(g, kind, universe, k, /*stop_at_first_hit=*/!opt.all_witnesses, workers);
        SweptSize row;
        row.size = k;
        row.count = binomial(universe.size(), k);
        if (sweep.complete) {
            row.survivors = row.count - sweep.hit_count;
        }
        result.swept_sizes.push_back(row);
        if (!sweep.hits.empty()) {
            result.found = true;
            result.number = k;
            result.exhaustive = true;   // all smaller sizes were fully swept
            std::size_t keep = sweep.hits.size();
            if (opt.max_witnesses > 0) {
                keep = std::min(keep, static_cast<std::size_t>(opt.max_witnesses));
            }
            for (std::size_t i = 0; i < keep; ++i) {
                OptimalPreclusionSet entry;
                entry.faults = universe.to_fault_set(g, sweep.hits[i]);
                entry.trivial = entry.faults.edges_only() && is_trivial_solution(g, entry.faults);
                if (opt.with_certificates) {
                    entry.certificate = make_certificate(g, kind, entry.faults);
                }
                result.optimal_sets.push_back(std::move(entry));
            }
            break;
        }
    }
    if (!result.found) result.exhaustive = true;
    result.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

StructureReport optimal_set_structure(const Graph& g, const PreclusionResult& result) {
    StructureReport report;
    report.kind = result.kind;
    for (const auto& entry : result.optimal_sets) {
        std::pair<int, int> shape{static_cast<int>(entry.faults.vertices.size()),
                                  static_cast<int>(entry.faults.edges.size())};
        ++report.composition[shape];
        if (entry.trivial) ++report.trivial_count;
    }
    if (result.kind == PreclusionKind::FSMP && is_canonical_g84(g)) {
        G3FsmpShape shape;
        shape.all_match = true;
        shape.diagonal_free = true;
        for (const auto& entry : result.optimal_sets) {
            bool match = entry.faults.vertices.size() == 1 && entry.faults.edges.size() == 1;
            if (match) {
                const Edge& e = entry.faults.edges.front();
                int u = entry.faults.vertices.front();
                match = is_g84_boundary_edge(e) &&
                        (g.has_live_edge(u, e.u) || g.has_live_edge(u, e.v));
            }
            for (const Edge& e : entry.faults.edges) {
                if (is_g84_diagonal_edge(e)) shape.diagonal_free = false;
            }
            shape.per_set.push_back(match);
            if (!match) shape.all_match = false;
        }
        report.g3_fsmp = std::move(shape);
    }
    return report;
}

}  // namespace mprec
