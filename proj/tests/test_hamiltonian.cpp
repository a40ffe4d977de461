#include <doctest.h>

#include "mprec/constructors.hpp"
#include "mprec/enumerate.hpp"
#include "mprec/hamiltonian.hpp"
#include "mprec/matching.hpp"
#include "mprec/rng.hpp"
#include "mprec/verify.hpp"
#include "oracles.hpp"

using namespace mprec;

TEST_SUITE_BEGIN("hamiltonian");

TEST_CASE("cycle search on g84") {
    Graph g3 = recursive_circulant_g84();
    auto w = hamiltonian_cycle(g3);
    REQUIRE(w.has_value());
    CHECK(w->kind == HamWitness::Kind::cycle);
    CHECK(replay_witness(g3, *w));
}

TEST_CASE("no cycle in a star") {
    Graph star(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)});
    CHECK_FALSE(hamiltonian_cycle(star).has_value());
}

TEST_CASE("cycle needs three alive vertices") {
    Graph tiny(2, {Edge(0, 1)});
    CHECK_THROWS_AS(hamiltonian_cycle(tiny), HamiltonianError);
}

TEST_CASE("g84 stays Hamiltonian under any single fault") {
    Graph g3 = recursive_circulant_g84();
    for (int v = 0; v < 8; ++v) {
        Graph faulted = delete_faults(g3, FaultSet::of_vertices({v}));
        auto w = hamiltonian_cycle(faulted);
        REQUIRE(w.has_value());
        CHECK(replay_witness(faulted, *w));
    }
    for (int e = 0; e < g3.edge_count(); ++e) {
        Graph faulted = delete_faults(g3, FaultSet::of_edges({g3.edge(e)}));
        auto w = hamiltonian_cycle(faulted);
        REQUIRE(w.has_value());
        CHECK(replay_witness(faulted, *w));
    }
}

TEST_CASE("path search endpoints") {
    Graph p3(3, {Edge(0, 1), Edge(1, 2)});
    auto found = hamiltonian_path(p3, 0, 2);
    REQUIRE(found.has_value());
    CHECK(found->sequence.front() == 0);
    CHECK(found->sequence.back() == 2);
    CHECK(replay_witness(p3, *found));
    CHECK_FALSE(hamiltonian_path(p3, 0, 1).has_value());
    CHECK_THROWS_AS(hamiltonian_path(p3, 0, 0), HamiltonianError);
    CHECK_THROWS_AS(hamiltonian_path(p3, 0, 5), GraphError);
}

TEST_CASE("g84 is Hamiltonian-connected") {
    Graph g3 = recursive_circulant_g84();
    for (int u = 0; u < 8; ++u) {
        for (int v = u + 1; v < 8; ++v) {
            auto w = hamiltonian_path(g3, u, v);
            REQUIRE(w.has_value());
            CHECK(w->sequence.front() == u);
            CHECK(w->sequence.back() == v);
            CHECK(replay_witness(g3, *w));
        }
    }
}

TEST_CASE("search verdict matches the subset-DP oracle") {
    SplitMix64 rng(2024);
    int hamiltonian_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = verify::random_graph(rng, 9);
        if (g.alive_count() < 3) continue;
        bool found = hamiltonian_cycle(g).has_value();
        CHECK(found == oracle::ham_cycle_exists(g));
        if (found) ++hamiltonian_seen;
    }
    CHECK(hamiltonian_seen > 5);   // corpus exercises both outcomes
}

TEST_CASE("fault sweep on g84, budget 1") {
    FaultHamOptions opt;
    opt.budget = 1;
    opt.workers = 2;
    FaultHamReport r = verify_fault_hamiltonian(recursive_circulant_g84(), opt);
    CHECK(r.instances == 20);
    CHECK(r.failures.empty());
}

TEST_CASE("zero-fault Hamiltonian-connected sweep counts all pairs") {
    FaultHamOptions opt;
    opt.budget = 0;
    opt.connected = true;
    opt.workers = 2;
    FaultHamReport r = verify_fault_hamiltonian(recursive_circulant_g84(), opt);
    CHECK(r.instances == 1);
    CHECK(r.pair_checks == 28);
    CHECK(r.failures.empty());
}

TEST_CASE("two-fault sweep on a dimension-4 instance") {
    RhlGraph g4 = build_rhl(4, std::uint64_t{6000});
    FaultHamOptions opt;
    opt.budget = 2;
    opt.workers = 2;
    FaultHamReport r = verify_fault_hamiltonian(g4.graph, opt);
    CHECK(r.instances == 48 + binomial(48, 2));
    CHECK(r.failures.empty());
}

TEST_CASE("sampled sweeps are deterministic in the seed") {
    RhlGraph g5 = build_rhl(5, std::uint64_t{77});
    FaultHamOptions opt;
    opt.budget = 3;
    opt.mode = FaultHamMode::sample;
    opt.samples = 50;
    opt.seed = 9;
    opt.workers = 2;
    FaultHamReport a = verify_fault_hamiltonian(g5.graph, opt);
    FaultHamReport b = verify_fault_hamiltonian(g5.graph, opt);
    CHECK(a.instances == 50);
    CHECK(a.failures.empty());
    CHECK(a.failures == b.failures);
    CHECK(a.instances == b.instances);
}

TEST_CASE("a found cycle yields a fractional perfect matching") {
    SplitMix64 rng(31);
    for (std::uint64_t seed : {10ull, 11ull, 12ull}) {
        RhlGraph g4 = build_rhl(4, seed);
        auto vs = rng.sample_subset(16, 2);
        Graph faulted = delete_faults(g4.graph, FaultSet::of_vertices(vs));
        auto w = hamiltonian_cycle(faulted);
        REQUIRE(w.has_value());
        FractionalMatching fm = fpm_from_hamiltonian_cycle(faulted, w->sequence);
        CHECK(fm.is_perfect(faulted));
    }
}

TEST_SUITE_END();
