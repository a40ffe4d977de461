#include "mprec/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "mprec/constructors.hpp"
#include "mprec/enumerate.hpp"
#include "mprec/graph_io.hpp"
#include "mprec/hamiltonian.hpp"
#include "mprec/matching.hpp"
#include "mprec/preclusion.hpp"
#include "mprec/remainder.hpp"

namespace mprec::verify {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    return hw > 0 ? hw : 1;
}

// Captured sweeps for the determinism re-run: inputs plus the canonical
// (timing-free) report produced at the configured worker count.
struct CapturedSweep {
    std::string label;
    Graph graph;
    PreclusionKind kind;
    PreclusionOptions options;
    std::string canonical;
};

struct Session {
    Options opt;
    int workers = 1;
    std::ostream* progress = nullptr;
    std::vector<CapturedSweep> captured;
    std::vector<CheckResult> results;

    void note(const std::string& line) {
        if (progress) (*progress) << "  " << line << '\n' << std::flush;
    }

    PreclusionResult run_sweep(const std::string& label, const Graph& g, PreclusionKind kind,
                               PreclusionOptions options) {
        options.workers = workers;
        PreclusionResult r = preclusion_number(g, kind, options);
        CapturedSweep cap{label, g, kind, options, to_json(r, false).dump()};
        captured.push_back(std::move(cap));
        return r;
    }

    void add(CheckResult r) {
        if (progress) {
            (*progress) << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << "  " << r.claim << "  ("
                        << static_cast<long long>(r.ms) << " ms)";
            if (!r.detail.empty()) (*progress) << "  -- " << r.detail;
            (*progress) << '\n' << std::flush;
        }
        results.push_back(std::move(r));
    }
};

std::string fault_set_brief(const FaultSet& f) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int v : f.vertices) {
        out << (first ? "" : ", ") << "v" << v;
        first = false;
    }
    for (const Edge& e : f.edges) {
        out << (first ? "" : ", ") << "(" << e.u << "," << e.v << ")";
        first = false;
    }
    out << "}";
    return out.str();
}

FaultSet star_of(const Graph& g, int v) {
    std::vector<Edge> edges;
    g.for_live_neighbors(v, [&](int, int e) { edges.push_back(g.edge(e)); });
    return FaultSet::of_edges(std::move(edges));
}

// --- criteria -------------------------------------------------------------

void check_g3_fsmp(Session& s, PreclusionResult& out_result) {
    auto t0 = Clock::now();
    Graph g3 = recursive_circulant_g84();
    PreclusionOptions po;
    po.budget = 2;
    po.all_witnesses = true;
    PreclusionResult r = s.run_sweep("g3-fsmp", g3, PreclusionKind::FSMP, po);
    bool pass = r.found && r.number == 2 && r.exhaustive && r.swept_sizes.size() == 2 &&
                r.swept_sizes[0].count == 20 && r.swept_sizes[0].survivors == 20 &&
                r.swept_sizes[1].count == 190;
    double ms = ms_since(t0);
    pass = pass && ms < 1000;
    std::ostringstream detail;
    detail << "fsmp(G3)=" << (r.found ? r.number : -1) << ", optimal sets: "
           << r.optimal_sets.size() << ", size-2 subsets swept: " << r.swept_sizes[1].count;
    s.add({"C1", "fsmp(G3) = 2 by exhaustive sweep of all 190 two-element fault sets", pass, ms,
           detail.str()});
    out_result = std::move(r);
}

void check_g3_fsmp_structure(Session& s, const PreclusionResult& g3_fsmp) {
    auto t0 = Clock::now();
    Graph g3 = recursive_circulant_g84();
    StructureReport report = optimal_set_structure(g3, g3_fsmp);
    bool pass = report.g3_fsmp.has_value() && report.g3_fsmp->all_match &&
                report.g3_fsmp->diagonal_free && !g3_fsmp.optimal_sets.empty();
    double ms = ms_since(t0);
    pass = pass && ms < 1000;
    std::ostringstream detail;
    detail << g3_fsmp.optimal_sets.size()
           << " optimal sets, every one = vertex + adjacent boundary edge, no diagonals";
    s.add({"C2", "every optimal FSMP set of G3 is one vertex + one adjacent boundary edge", pass,
           ms, detail.str()});
}

void check_g3_mp_smp(Session& s) {
    auto t0 = Clock::now();
    Graph g3 = recursive_circulant_g84();
    PreclusionOptions po;
    po.budget = 3;
    po.all_witnesses = true;
    PreclusionResult mp = s.run_sweep("g3-mp", g3, PreclusionKind::MP, po);
    PreclusionResult smp = s.run_sweep("g3-smp", g3, PreclusionKind::SMP, po);
    bool pass = mp.found && mp.number == 3 && smp.found && smp.number == 3;
    for (int k = 1; k <= 3; ++k) {
        pass = pass && mp.swept_sizes[static_cast<std::size_t>(k - 1)].count == binomial(12, k) &&
               smp.swept_sizes[static_cast<std::size_t>(k - 1)].count == binomial(20, k);
    }
    double ms = ms_since(t0);
    pass = pass && ms < 5000;
    std::ostringstream detail;
    detail << "mp=" << mp.number << " (" << mp.optimal_sets.size() << " optimal sets), smp="
           << smp.number << " (" << smp.optimal_sets.size() << " optimal sets)";
    s.add({"C3", "mp(G3) = smp(G3) = 3, exhaustive through size 3", pass, ms, detail.str()});
}

void check_fmp(Session& s) {
    auto t0 = Clock::now();
    Graph g3 = recursive_circulant_g84();
    PreclusionOptions po3;
    po3.budget = 3;
    PreclusionResult fmp3 = s.run_sweep("g3-fmp", g3, PreclusionKind::FMP, po3);
    bool pass = fmp3.found && fmp3.number == 3;
    int checked = 0;
    for (int i = 0; i < s.opt.fmp_g4_samples && pass; ++i) {
        RhlGraph g4 = build_rhl(4, s.opt.seed + 1000 + static_cast<std::uint64_t>(i));
        PreclusionOptions po4;
        po4.budget = 4;
        PreclusionResult fmp4 = s.run_sweep("g4-fmp-" + std::to_string(i), g4.graph,
                                            PreclusionKind::FMP, po4);
        pass = fmp4.found && fmp4.number == 4 && fmp4.swept_sizes[2].survivors == binomial(32, 3);
        ++checked;
    }
    double ms = ms_since(t0);
    pass = pass && ms < 10000;
    std::ostringstream detail;
    detail << "fmp(G3)=" << fmp3.number << "; fmp(G4)=4 on " << checked << " seeded instances";
    s.add({"C4", "fmp(G3) = 3 and fmp(G4) = 4 across seeded bijections", pass, ms, detail.str()});
}

void check_g4_predictor(Session& s) {
    auto t0 = Clock::now();
    Graph g84 = recursive_circulant_g84();
    std::vector<RemainderSet> remainder_sets = enumerate_remainder_sets(g84);
    bool pass = !remainder_sets.empty();
    int predicted3 = 0, predicted4 = 0;
    for (int i = 0; i < s.opt.predictor_samples && pass; ++i) {
        RhlGraph g4 = build_rhl(4, s.opt.seed + 2000 + static_cast<std::uint64_t>(i));
        Bijection phi = g4.top_phi();
        G4ConditionOutcome condition = g4_condition(g84, phi, remainder_sets);
        int predicted = condition.holds ? 3 : 4;
        PreclusionOptions po;
        po.budget = 4;
        PreclusionResult brute = s.run_sweep("g4-fsmp-" + std::to_string(i), g4.graph,
                                             PreclusionKind::FSMP, po);
        pass = brute.found && brute.number == predicted;
        if (predicted == 3) {
            ++predicted3;
            // The implied {u, e, e'} witness must itself preclude.
            FaultSet witness = assemble_g4_witness(condition, g4.half());
            pass = pass && !survives(g4.graph, witness, PreclusionKind::FSMP);
        } else {
            ++predicted4;
        }
    }
    double ms = ms_since(t0);
    pass = pass && ms < 120000;
    std::ostringstream detail;
    detail << remainder_sets.size() << " remainder sets; predictions matched brute force on "
           << (predicted3 + predicted4) << " instances (" << predicted3 << "x fsmp=3, "
           << predicted4 << "x fsmp=4)";
    s.add({"C5", "remainder-set prediction equals brute-force fsmp(G4) on seeded bijections",
           pass, ms, detail.str()});
}

void check_g5_fsmp(Session& s) {
    auto t0 = Clock::now();
    bool pass = true;
    double worst_instance_ms = 0;
    std::ostringstream detail;
    for (int i = 0; i < s.opt.g5_instances && pass; ++i) {
        auto i0 = Clock::now();
        RhlGraph g5 = build_rhl(5, s.opt.seed + 3000 + static_cast<std::uint64_t>(i));
        PreclusionOptions po;
        po.budget = 4;
        PreclusionResult sweep =
            s.run_sweep("g5-fsmp-" + std::to_string(i), g5.graph, PreclusionKind::FSMP, po);
        bool clean = !sweep.found && sweep.exhaustive && sweep.swept_sizes.size() == 4;
        for (int k = 1; k <= 4 && clean; ++k) {
            const SweptSize& row = sweep.swept_sizes[static_cast<std::size_t>(k - 1)];
            clean = row.count == binomial(112, k) && row.survivors == binomial(112, k);
        }
        FaultSet star = star_of(g5.graph, 0);
        bool star_precludes = star.size() == 5 && !survives(g5.graph, star, PreclusionKind::FSMP);
        double instance_ms = ms_since(i0);
        worst_instance_ms = std::max(worst_instance_ms, instance_ms);
        pass = clean && star_precludes && instance_ms < 15.0 * 60.0 * 1000.0;
        if (i) detail << "; ";
        detail << "seed " << (s.opt.seed + 3000 + static_cast<std::uint64_t>(i)) << ": size<=4 clean, star "
               << fault_set_brief(star) << " precludes";
    }
    double ms = ms_since(t0);
    s.add({"C6",
           "fsmp(G5) = 5: no fault set of size 4 precludes, a trivial size-5 set does "
           "(covers fmp(G5) = 5 on the edge subuniverse)",
           pass, ms, detail.str()});
}

void check_fpm_oracle_agreement(Session& s) {
    auto t0 = Clock::now();
    bool pass = true;
    SplitMix64 rng(s.opt.seed + 4000);
    int disagreements = 0;
    for (int i = 0; i < s.opt.random_graphs; ++i) {
        Graph g = random_graph(rng, 12);
        FpmOutcome outcome = has_fractional_perfect_matching(g);
        bool oracle = scheinerman_oracle(g);
        bool certificate_ok = outcome.has_fpm ? outcome.matching->is_perfect(g)
                                              : outcome.witness->is_valid(g);
        if (outcome.has_fpm != oracle || !certificate_ok) {
            ++disagreements;
            pass = false;
        }
    }
    // Every dimension-3 fault instance with |F| <= 2, three-way: direct
    // decider, incremental decider, oracle.
    Graph g3 = recursive_circulant_g84();
    FpmDecider incremental(g3);
    std::vector<int> vertex_ids = g3.alive_vertices();
    std::vector<int> edge_ids = g3.live_edges();
    const int nv = static_cast<int>(vertex_ids.size());
    const int universe = nv + static_cast<int>(edge_ids.size());
    int instances = 0;
    for (int k = 1; k <= 2; ++k) {
        for_each_combination(universe, k, [&](std::span<const int> combo) {
            FaultSet f;
            std::vector<int> fe;
            for (int idx : combo) {
                if (idx < nv) {
                    f.vertices.push_back(vertex_ids[static_cast<std::size_t>(idx)]);
                } else {
                    int e = edge_ids[static_cast<std::size_t>(idx - nv)];
                    f.edges.push_back(g3.edge(e));
                    fe.push_back(e);
                }
            }
            Graph faulted = delete_faults(g3, f);
            bool direct = has_fractional_perfect_matching(faulted).has_fpm;
            bool inc = incremental.has_fpm_under_faults(f.vertices, fe);
            bool oracle = scheinerman_oracle(faulted);
            if (direct != oracle || inc != oracle) {
                ++disagreements;
                pass = false;
            }
            ++instances;
        });
    }
    double ms = ms_since(t0);
    pass = pass && ms < 30000;
    std::ostringstream detail;
    detail << s.opt.random_graphs << " random graphs + " << instances
           << " G3 fault instances, disagreements: " << disagreements;
    s.add({"C7", "double-cover FPM decider agrees with the isolated-vertex oracle everywhere",
           pass, ms, detail.str()});
}

void check_matching_oracle(Session& s) {
    auto t0 = Clock::now();
    bool pass = true;
    SplitMix64 rng(s.opt.seed + 5000);
    int disagreements = 0;
    for (int i = 0; i < s.opt.random_graphs; ++i) {
        Graph g = random_graph(rng, 14);
        Matching m = max_matching(g);
        if (!m.is_valid(g) || m.size() != brute_force_max_matching_size(g)) {
            ++disagreements;
            pass = false;
        }
    }
    double ms = ms_since(t0);
    pass = pass && ms < 30000;
    std::ostringstream detail;
    detail << s.opt.random_graphs << " random graphs (n <= 14), disagreements: " << disagreements;
    s.add({"C8", "blossom maximum matching equals brute force on the random corpus", pass, ms,
           detail.str()});
}

void check_fault_hamiltonicity(Session& s) {
    auto t0 = Clock::now();
    Graph g3 = recursive_circulant_g84();
    FaultHamOptions one_fault;
    one_fault.budget = 1;
    one_fault.workers = s.workers;
    FaultHamReport r3 = verify_fault_hamiltonian(g3, one_fault);
    bool pass = r3.failures.empty() && r3.instances == 20;

    FaultHamOptions connected;
    connected.budget = 0;
    connected.connected = true;
    connected.workers = s.workers;
    FaultHamReport r3c = verify_fault_hamiltonian(g3, connected);
    pass = pass && r3c.failures.empty() && r3c.pair_checks == 28;

    std::uint64_t checked4 = 0, checked5 = 0;
    if (s.opt.max_m >= 4) {
        RhlGraph g4 = build_rhl(4, s.opt.seed + 6000);
        FaultHamOptions two_fault;
        two_fault.budget = 2;
        two_fault.workers = s.workers;
        FaultHamReport r4 = verify_fault_hamiltonian(g4.graph, two_fault);
        checked4 = r4.instances;
        pass = pass && r4.failures.empty() && r4.instances == 48 + binomial(48, 2);
    }
    if (s.opt.max_m >= 5) {
        RhlGraph g5 = build_rhl(5, s.opt.seed + 6001);
        FaultHamOptions sampled;
        sampled.budget = 3;
        sampled.mode = FaultHamMode::sample;
        sampled.samples = s.opt.g5_ham_samples;
        sampled.seed = s.opt.seed + 6002;
        sampled.workers = s.workers;
        FaultHamReport r5 = verify_fault_hamiltonian(g5.graph, sampled);
        checked5 = r5.instances;
        pass = pass && r5.failures.empty() &&
               r5.instances == static_cast<std::uint64_t>(s.opt.g5_ham_samples);
    }
    double ms = ms_since(t0);
    pass = pass && ms < 5.0 * 60.0 * 1000.0;
    std::ostringstream detail;
    detail << "G3: 20 one-fault cases + 28 pairs; G4: " << checked4 << " cases; G5: " << checked5
           << " sampled cases; all Hamiltonian";
    s.add({"C9", "fault-Hamiltonicity holds at the stated budgets", pass, ms, detail.str()});
}

void check_m6_sampled(Session& s) {
    auto t0 = Clock::now();
    RhlGraph g6 = build_rhl(6, s.opt.seed + 7000);
    const Graph& g = g6.graph;
    FpmDecider decider(g);
    std::vector<int> vertex_ids = g.alive_vertices();
    std::vector<int> edge_ids = g.live_edges();
    const int nv = static_cast<int>(vertex_ids.size());
    const int universe = nv + static_cast<int>(edge_ids.size());

    SplitMix64 rng(s.opt.seed + 7001);
    bool pass = true;
    int survived = 0;
    std::vector<int> fv, fe;
    for (int i = 0; i < s.opt.m6_fpm_samples && pass; ++i) {
        std::vector<int> combo = rng.sample_subset(universe, 5);
        fv.clear();
        fe.clear();
        for (int idx : combo) {
            if (idx < nv) {
                fv.push_back(vertex_ids[static_cast<std::size_t>(idx)]);
            } else {
                fe.push_back(edge_ids[static_cast<std::size_t>(idx - nv)]);
            }
        }
        if (decider.has_fpm_under_faults(fv, fe)) {
            ++survived;
        } else {
            pass = false;
        }
    }

    // Constructive lower bound: every sampled 4-fault instance keeps a
    // Hamiltonian cycle, whose half-weights form a fractional perfect
    // matching.
    SplitMix64 ham_rng(s.opt.seed + 7002);
    int ham_checked = 0;
    for (int i = 0; i < s.opt.m6_ham_samples && pass; ++i) {
        std::vector<int> combo = ham_rng.sample_subset(universe, 4);
        FaultSet f;
        for (int idx : combo) {
            if (idx < nv) {
                f.vertices.push_back(vertex_ids[static_cast<std::size_t>(idx)]);
            } else {
                f.edges.push_back(g.edge(edge_ids[static_cast<std::size_t>(idx - nv)]));
            }
        }
        Graph faulted = delete_faults(g, f);
        auto cycle = hamiltonian_cycle(faulted);
        if (!cycle) {
            pass = false;
            break;
        }
        FractionalMatching fm = fpm_from_hamiltonian_cycle(faulted, cycle->sequence);
        if (!fm.is_perfect(faulted)) {
            pass = false;
            break;
        }
        ++ham_checked;
    }
    double ms = ms_since(t0);
    pass = pass && ms < 10.0 * 60.0 * 1000.0;
    std::ostringstream detail;
    detail << survived << "/" << s.opt.m6_fpm_samples << " sampled size-5 fault sets survive; "
           << ham_checked << " sampled 4-fault instances give a Hamiltonian-cycle FPM";
    s.add({"C10", "fsmp(G6) = 6 sampled substitute: size-5 samples survive, 4-fault samples stay "
                  "Hamiltonian",
           pass, ms, detail.str()});
}

void check_determinism(Session& s) {
    auto t0 = Clock::now();
    bool pass = true;
    int compared = 0;
    int other_workers = (s.workers == 1) ? 2 : 1;
    std::string first_mismatch;
    for (const CapturedSweep& cap : s.captured) {
        PreclusionOptions po = cap.options;
        po.workers = other_workers;
        PreclusionResult rerun = preclusion_number(cap.graph, cap.kind, po);
        if (to_json(rerun, false).dump() != cap.canonical) {
            pass = false;
            if (first_mismatch.empty()) first_mismatch = cap.label;
        }
        ++compared;
    }
    double ms = ms_since(t0);
    std::ostringstream detail;
    detail << compared << " sweep reports byte-compared at " << s.workers << " vs "
           << other_workers << " workers";
    if (!first_mismatch.empty()) detail << "; first mismatch: " << first_mismatch;
    s.add({"C11", "sweep reports are byte-identical across worker counts", pass, ms,
           detail.str()});
}

}  // namespace

int brute_force_max_matching_size(const Graph& g) {
    std::vector<int> alive = g.alive_vertices();
    const int a = static_cast<int>(alive.size());
    if (a > 22) throw MatchingError("brute_force_max_matching_size: guard exceeded");
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(a), 0);
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < a; ++i) local[static_cast<std::size_t>(alive[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < a; ++i) {
        g.for_live_neighbors(alive[static_cast<std::size_t>(i)], [&](int w, int) {
            int j = local[static_cast<std::size_t>(w)];
            if (j >= 0) nbr[static_cast<std::size_t>(i)] |= 1u << j;
        });
    }
    std::vector<std::int8_t> memo(static_cast<std::size_t>(1) << a, -1);
    std::function<int(std::uint32_t)> best = [&](std::uint32_t mask) -> int {
        if (mask == 0) return 0;
        auto& slot = memo[mask];
        if (slot >= 0) return slot;
        int v = std::countr_zero(mask);
        std::uint32_t without = mask & (mask - 1);
        int result = best(without);   // leave v exposed
        std::uint32_t candidates = nbr[static_cast<std::size_t>(v)] & without;
        while (candidates) {
            int w = std::countr_zero(candidates);
            candidates &= candidates - 1;
            result = std::max(result, 1 + best(without & ~(1u << w)));
        }
        slot = static_cast<std::int8_t>(result);
        return result;
    };
    return best((a == 32) ? ~0u : ((1u << a) - 1));
}

Graph random_graph(SplitMix64& rng, int max_n) {
    int n = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_n)));
    std::uint64_t percent = 5 + rng.next_below(91);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.next_below(100) < percent) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

std::vector<CheckResult> run_paper_checks(const Options& opt, std::ostream* progress) {
    Session s;
    s.opt = opt;
    s.workers = resolve_workers(opt.workers);
    s.progress = progress;

    PreclusionResult g3_fsmp;
    check_g3_fsmp(s, g3_fsmp);
    check_g3_fsmp_structure(s, g3_fsmp);
    check_g3_mp_smp(s);
    if (opt.max_m >= 4) check_fmp(s);
    if (opt.max_m >= 4) check_g4_predictor(s);
    if (opt.max_m >= 5) check_g5_fsmp(s);
    check_fpm_oracle_agreement(s);
    check_matching_oracle(s);
    check_fault_hamiltonicity(s);
    if (opt.max_m >= 6) check_m6_sampled(s);
    if (opt.determinism_check) check_determinism(s);
    return s.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace mprec::verify
