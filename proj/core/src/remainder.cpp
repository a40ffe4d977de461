#include "mprec/remainder.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mprec/enumerate.hpp"

namespace mprec {

std::vector<RemainderSet> enumerate_remainder_sets(const Graph& g3) {
    if (!looks_like_g84(g3)) {
        throw GraphError("remainder sets are defined on G(8,4)");
    }
    PreclusionOptions opt;
    opt.budget = 2;
    opt.all_witnesses = true;
    opt.with_certificates = false;
    opt.workers = 1;
    PreclusionResult fsmp = preclusion_number(g3, PreclusionKind::FSMP, opt);
    if (!fsmp.found || fsmp.number != 2) {
        throw GraphError("input passed the shape test but its fsmp is not 2");
    }

    std::map<std::vector<int>, RemainderSet> found;
    for (const auto& optimal : fsmp.optimal_sets) {
        Graph faulted = delete_faults(g3, optimal.faults);
        std::vector<int> alive = faulted.alive_vertices();
        for_each_combination(static_cast<int>(alive.size()), 3, [&](std::span<const int> combo) {
            std::vector<int> s = {alive[static_cast<std::size_t>(combo[0])],
                                  alive[static_cast<std::size_t>(combo[1])],
                                  alive[static_cast<std::size_t>(combo[2])]};
            std::vector<int> isolated = isolated_vertices(faulted, s);
            if (isolated.size() != 4) return;
            if (!found.contains(isolated)) {
                RemainderSet r;
                r.vertices = isolated;
                r.provenance_faults = optimal.faults;
                r.provenance_s = s;
                found.emplace(std::move(isolated), std::move(r));
            }
        });
    }
    std::vector<RemainderSet> out;
    out.reserve(found.size());
    for (auto& [key, value] : found) {
        (void)key;
        out.push_back(std::move(value));
    }
    return out;
}

std::vector<int> phi_image(const Bijection& phi, std::span<const int> r) {
    std::vector<int> out;
    out.reserve(r.size());
    for (int v : r) {
        if (v < 0 || v >= phi.size()) {
            throw GraphError("phi_image: vertex " + std::to_string(v) + " outside phi's domain");
        }
        out.push_back(phi(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

G4ConditionOutcome g4_condition(const Graph& g1, const Bijection& phi,
                                const std::vector<RemainderSet>& remainder_sets) {
    G4ConditionOutcome outcome;
    for (const RemainderSet& r : remainder_sets) {
        std::vector<int> image = phi_image(phi, r.vertices);
        Graph rest = delete_faults(g1, FaultSet::of_vertices(image));
        std::vector<int> surviving = rest.live_edges();
        if (surviving.size() <= 1) {
            outcome.holds = true;
            outcome.witness = r;
            if (surviving.size() == 1) outcome.g1_edge = rest.edge(surviving.front());
            return outcome;
        }
    }
    return outcome;
}

int predict_fsmp_g4(const Graph& g0, const Graph& g1, const Bijection& phi) {
    if (!looks_like_g84(g1)) {
        throw GraphError("predict_fsmp_g4: part 1 is not G(8,4)-shaped");
    }
    std::vector<RemainderSet> remainder_sets = enumerate_remainder_sets(g0);
    return g4_condition(g1, phi, remainder_sets).holds ? 3 : 4;
}

FaultSet assemble_g4_witness(const G4ConditionOutcome& outcome, int half) {
    if (!outcome.holds || !outcome.witness) {
        throw GraphError("assemble_g4_witness: condition does not hold");
    }
    if (!outcome.g1_edge) {
        // G(8,4) has independence number 3, so deleting any 4 vertices always
        // leaves at least one edge; a holding condition carries it.
        throw GraphError("assemble_g4_witness: no surviving part-1 edge recorded");
    }
    FaultSet f = outcome.witness->provenance_faults;
    f.edges.emplace_back(outcome.g1_edge->u + half, outcome.g1_edge->v + half);
    std::sort(f.edges.begin(), f.edges.end());
    return f;
}

std::vector<std::vector<int>> graph_automorphisms(const Graph& g) {
    const int n = g.order();
    if (n > 10) throw GraphError("brute-force automorphism search is limited to order 10");
    for (int v = 0; v < n; ++v) {
        if (!g.vertex_alive(v)) {
            throw GraphError("automorphism search expects a fully alive graph");
        }
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> autos;
    do {
        bool ok = true;
        for (int e = 0; e < g.edge_count() && ok; ++e) {
            if (!g.edge_live(e)) continue;
            const Edge& ed = g.edge(e);
            int iu = perm[static_cast<std::size_t>(ed.u)];
            int iv = perm[static_cast<std::size_t>(ed.v)];
            ok = g.has_live_edge(iu, iv);
        }
        if (ok) autos.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return autos;
}

int orbit_count(const Graph& g, const std::vector<std::vector<int>>& sets) {
    auto autos = graph_automorphisms(g);
    std::set<std::vector<int>> canon;
    for (const auto& s : sets) {
        std::vector<int> best;
        for (const auto& a : autos) {
            std::vector<int> image;
            image.reserve(s.size());
            for (int v : s) image.push_back(a[static_cast<std::size_t>(v)]);
            std::sort(image.begin(), image.end());
            if (best.empty() || image < best) best = std::move(image);
        }
        canon.insert(best);
    }
    return static_cast<int>(canon.size());
}

}  // namespace mprec
