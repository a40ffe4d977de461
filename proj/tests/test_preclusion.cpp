#include <doctest.h>

#include "mprec/constructors.hpp"
#include "mprec/graph_io.hpp"
#include "mprec/preclusion.hpp"
#include "mprec/rng.hpp"
#include "oracles.hpp"

using namespace mprec;

TEST_SUITE_BEGIN("preclusion");

TEST_CASE("kind bookkeeping") {
    CHECK(parse_preclusion_kind("fsmp") == PreclusionKind::FSMP);
    CHECK(to_string(PreclusionKind::SMP) == "smp");
    CHECK(kind_is_fractional(PreclusionKind::FMP));
    CHECK_FALSE(kind_is_fractional(PreclusionKind::SMP));
    CHECK(kind_allows_vertex_faults(PreclusionKind::FSMP));
    CHECK_FALSE(kind_allows_vertex_faults(PreclusionKind::FMP));
    CHECK_THROWS_AS(parse_preclusion_kind("nope"), PreclusionError);
}

TEST_CASE("survivability of g84 fault sets") {
    Graph g3 = recursive_circulant_g84();
    CHECK(survives(g3, FaultSet{}, PreclusionKind::FSMP));
    CHECK_FALSE(survives(g3, FaultSet::mixed({2}, {Edge(0, 1)}), PreclusionKind::FSMP));
    // only vertices 3 and 6 are nonadjacent to both ends of (0,1)
    CHECK(survives(g3, FaultSet::mixed({3}, {Edge(0, 1)}), PreclusionKind::FSMP));
    CHECK(survives(g3, FaultSet::mixed({6}, {Edge(0, 1)}), PreclusionKind::FSMP));
    CHECK_THROWS_AS(survives(g3, FaultSet::of_vertices({0}), PreclusionKind::FMP),
                    PreclusionError);
    CHECK_THROWS_AS(survives(g3, FaultSet::of_vertices({0}), PreclusionKind::MP),
                    PreclusionError);
}

TEST_CASE("g84 preclusion numbers across all four kinds") {
    Graph g3 = recursive_circulant_g84();
    PreclusionOptions opt;
    opt.budget = 4;
    opt.all_witnesses = true;
    opt.workers = 2;

    PreclusionResult fsmp = preclusion_number(g3, PreclusionKind::FSMP, opt);
    CHECK(fsmp.found);
    CHECK(fsmp.number == 2);
    CHECK(fsmp.exhaustive);
    CHECK(fsmp.optimal_sets.size() == 32);
    CHECK(fsmp.swept_sizes[0].count == 20);
    CHECK(fsmp.swept_sizes[1].count == 190);
    CHECK(fsmp.swept_sizes[1].survivors == 190 - 32);

    PreclusionResult fmp = preclusion_number(g3, PreclusionKind::FMP, opt);
    CHECK(fmp.number == 3);
    CHECK(fmp.optimal_sets.size() == 16);

    PreclusionResult mp = preclusion_number(g3, PreclusionKind::MP, opt);
    CHECK(mp.number == 3);
    CHECK(mp.optimal_sets.size() == 16);

    PreclusionResult smp = preclusion_number(g3, PreclusionKind::SMP, opt);
    CHECK(smp.number == 3);
    CHECK(smp.optimal_sets.size() == 72);

    // numbers agree with the naive enumerator
    CHECK(oracle::naive_preclusion(g3, PreclusionKind::FSMP, 4) == 2);
    CHECK(oracle::naive_preclusion(g3, PreclusionKind::FMP, 4) == 3);
    CHECK(oracle::naive_preclusion(g3, PreclusionKind::MP, 4) == 3);
    CHECK(oracle::naive_preclusion(g3, PreclusionKind::SMP, 4) == 3);
}

TEST_CASE("sweep agrees with the naive enumerator on assorted graphs") {
    std::vector<Graph> graphs;
    graphs.push_back(hypercube(3));
    {
        std::vector<Edge> c6;
        for (int i = 0; i < 6; ++i) c6.emplace_back(i, (i + 1) % 6);
        graphs.emplace_back(6, c6);
    }
    graphs.push_back(Graph(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3),
                               Edge(2, 3)}));   // K4
    PreclusionOptions opt;
    opt.budget = 3;
    opt.workers = 2;
    for (const Graph& g : graphs) {
        for (PreclusionKind kind : {PreclusionKind::MP, PreclusionKind::SMP, PreclusionKind::FMP,
                                    PreclusionKind::FSMP}) {
            PreclusionResult r = preclusion_number(g, kind, opt);
            auto naive = oracle::naive_preclusion(g, kind, opt.budget);
            if (r.found) {
                CHECK(naive == r.number);
            } else {
                CHECK_FALSE(naive.has_value());
            }
        }
    }
}

TEST_CASE("trivial solutions") {
    Graph g3 = recursive_circulant_g84();
    CHECK(is_trivial_solution(g3, FaultSet::of_edges({Edge(0, 1), Edge(0, 4), Edge(0, 7)})));
    CHECK_FALSE(is_trivial_solution(g3, FaultSet::of_edges({Edge(0, 1), Edge(0, 4)})));
    CHECK_FALSE(is_trivial_solution(g3, FaultSet::of_edges({Edge(0, 1), Edge(2, 3), Edge(4, 5)})));
    CHECK_THROWS_AS(is_trivial_solution(g3, FaultSet::of_vertices({0})), PreclusionError);
}

TEST_CASE("structure report for the g84 FSMP optimum") {
    Graph g3 = recursive_circulant_g84();
    PreclusionOptions opt;
    opt.budget = 2;
    opt.all_witnesses = true;
    opt.workers = 2;
    PreclusionResult r = preclusion_number(g3, PreclusionKind::FSMP, opt);
    StructureReport report = optimal_set_structure(g3, r);
    REQUIRE(report.g3_fsmp.has_value());
    CHECK(report.g3_fsmp->all_match);
    CHECK(report.g3_fsmp->diagonal_free);
    CHECK(report.composition.at({1, 1}) == 32);
    CHECK(report.trivial_count == 0);

    // every optimal set: one vertex adjacent to an endpoint of one boundary edge
    for (const auto& entry : r.optimal_sets) {
        REQUIRE(entry.faults.vertices.size() == 1);
        REQUIRE(entry.faults.edges.size() == 1);
        const Edge& e = entry.faults.edges.front();
        int u = entry.faults.vertices.front();
        CHECK(is_g84_boundary_edge(e));
        CHECK((g3.has_live_edge(u, e.u) || g3.has_live_edge(u, e.v)));
    }
}

TEST_CASE("mp optimal sets include the eight trivial stars") {
    Graph g3 = recursive_circulant_g84();
    PreclusionOptions opt;
    opt.budget = 3;
    opt.all_witnesses = true;
    opt.workers = 2;
    PreclusionResult mp = preclusion_number(g3, PreclusionKind::MP, opt);
    StructureReport report = optimal_set_structure(g3, mp);
    CHECK(report.trivial_count == 8);
    CHECK_FALSE(report.g3_fsmp.has_value());
}

TEST_CASE("certificates replay") {
    Graph g3 = recursive_circulant_g84();
    PreclusionOptions opt;
    opt.budget = 3;
    opt.all_witnesses = true;
    opt.workers = 2;
    for (PreclusionKind kind : {PreclusionKind::FSMP, PreclusionKind::MP}) {
        PreclusionResult r = preclusion_number(g3, kind, opt);
        for (const auto& entry : r.optimal_sets) {
            CHECK_FALSE(survives(g3, entry.faults, kind));
            Graph faulted = delete_faults(g3, entry.faults);
            if (kind_is_fractional(kind)) {
                REQUIRE(entry.certificate.deficiency.has_value());
                CHECK(entry.certificate.deficiency->is_valid(faulted));
            } else {
                REQUIRE(entry.certificate.odd_components.has_value());
                CHECK(entry.certificate.odd_components->is_valid(faulted));
            }
        }
    }
}

TEST_CASE("preclusion is monotone under edge-fault growth") {
    // Monotonicity holds for added edge faults: deleting edges only shrinks
    // the matchings of the survivor. It does NOT hold for added vertex
    // faults (a deleted vertex no longer needs covering), see below.
    Graph g3 = recursive_circulant_g84();
    FaultSet base = FaultSet::mixed({2}, {Edge(0, 1)});
    REQUIRE_FALSE(survives(g3, base, PreclusionKind::FSMP));
    SplitMix64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        FaultSet bigger = base;
        Graph faulted = delete_faults(g3, base);
        auto live = faulted.live_edges();
        Edge e = faulted.edge(live[rng.next_below(live.size())]);
        bigger.edges.push_back(e);
        std::sort(bigger.edges.begin(), bigger.edges.end());
        bigger.edges.erase(std::unique(bigger.edges.begin(), bigger.edges.end()),
                           bigger.edges.end());
        CHECK_FALSE(survives(g3, bigger, PreclusionKind::FSMP));
    }

    // edge-only kinds are monotone under any superset in their universe
    FaultSet edge_base = FaultSet::of_edges({Edge(0, 1), Edge(0, 4), Edge(0, 7)});
    REQUIRE_FALSE(survives(g3, edge_base, PreclusionKind::FMP));
    for (int e = 0; e < g3.edge_count(); ++e) {
        FaultSet bigger = edge_base;
        const Edge& extra = g3.edge(e);
        if (std::find(bigger.edges.begin(), bigger.edges.end(), extra) != bigger.edges.end()) {
            continue;
        }
        bigger.edges.push_back(extra);
        std::sort(bigger.edges.begin(), bigger.edges.end());
        CHECK_FALSE(survives(g3, bigger, PreclusionKind::FMP));
    }
}

TEST_CASE("vertex-fault growth can restore survivability") {
    // {v2, (0,1)} precludes fractionally, yet additionally deleting v0
    // leaves {1,3,4,5,6,7} with the perfect matching (1,5)(3,4)(6,7).
    Graph g3 = recursive_circulant_g84();
    FaultSet base = FaultSet::mixed({2}, {Edge(0, 1)});
    REQUIRE_FALSE(survives(g3, base, PreclusionKind::FSMP));
    FaultSet bigger = FaultSet::mixed({0, 2}, {Edge(0, 1)});
    CHECK(survives(g3, bigger, PreclusionKind::FSMP));
}

TEST_CASE("budget exhaustion is an outcome") {
    Graph g3 = recursive_circulant_g84();
    PreclusionOptions opt;
    opt.budget = 1;
    opt.workers = 2;
    PreclusionResult r = preclusion_number(g3, PreclusionKind::FSMP, opt);
    CHECK_FALSE(r.found);
    CHECK(r.exhaustive);
    CHECK(r.swept_sizes.size() == 1);
    CHECK(r.swept_sizes[0].survivors == 20);
}

TEST_CASE("early exit and the full sweep find the same first witness") {
    Graph g3 = recursive_circulant_g84();
    PreclusionOptions fast;
    fast.budget = 3;
    fast.workers = 2;
    PreclusionOptions full = fast;
    full.all_witnesses = true;
    for (PreclusionKind kind : {PreclusionKind::FSMP, PreclusionKind::FMP, PreclusionKind::MP,
                                PreclusionKind::SMP}) {
        PreclusionResult a = preclusion_number(g3, kind, fast);
        PreclusionResult b = preclusion_number(g3, kind, full);
        CHECK(a.number == b.number);
        REQUIRE(!a.optimal_sets.empty());
        CHECK(a.optimal_sets.front().faults == b.optimal_sets.front().faults);
    }
}

TEST_CASE("reports are identical across worker counts") {
    Graph g3 = recursive_circulant_g84();
    for (PreclusionKind kind : {PreclusionKind::FSMP, PreclusionKind::SMP}) {
        PreclusionOptions one;
        one.budget = 3;
        one.all_witnesses = true;
        one.workers = 1;
        PreclusionOptions four = one;
        four.workers = 4;
        std::string a = to_json(preclusion_number(g3, kind, one), false).dump();
        std::string b = to_json(preclusion_number(g3, kind, four), false).dump();
        CHECK(a == b);
    }
}

TEST_CASE("integral and fractional preclusion equal the dimension for m in 3..5") {
    PreclusionOptions opt;
    opt.budget = 5;
    opt.workers = 2;

    RhlGraph g4 = build_rhl(4, std::uint64_t{1000});
    CHECK(preclusion_number(g4.graph, PreclusionKind::SMP, opt).number == 4);
    CHECK(preclusion_number(g4.graph, PreclusionKind::MP, opt).number == 4);
    CHECK(preclusion_number(g4.graph, PreclusionKind::FMP, opt).number == 4);

    // dimension 5: the size-4 space is clean for both integral and
    // fractional faults, and the star of vertex 0 settles the upper bound
    RhlGraph g5 = build_rhl(5, std::uint64_t{1001});
    PreclusionOptions sweep;
    sweep.budget = 4;
    sweep.workers = 2;
    CHECK_FALSE(preclusion_number(g5.graph, PreclusionKind::SMP, sweep).found);
    CHECK_FALSE(preclusion_number(g5.graph, PreclusionKind::FMP, sweep).found);
    std::vector<Edge> star;
    g5.graph.for_live_neighbors(0, [&](int, int e) { star.push_back(g5.graph.edge(e)); });
    FaultSet trivial = FaultSet::of_edges(std::move(star));
    CHECK_FALSE(survives(g5.graph, trivial, PreclusionKind::SMP));
    CHECK_FALSE(survives(g5.graph, trivial, PreclusionKind::FMP));
    CHECK(is_trivial_solution(g5.graph, trivial));
}

TEST_CASE("fractional preclusion stays within the minimum degree on even order") {
    for (auto make : {+[]() { return recursive_circulant_g84(); },
                      +[]() { return hypercube(3); },
                      +[]() { return build_rhl(4, std::uint64_t{8}).graph; }}) {
        Graph g = make();
        PreclusionOptions opt;
        opt.budget = min_degree(g);
        opt.workers = 2;
        PreclusionResult r = preclusion_number(g, PreclusionKind::FMP, opt);
        CHECK(r.found);
        CHECK(r.number <= min_degree(g));
    }
}

TEST_SUITE_END();
