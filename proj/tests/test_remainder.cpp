#include <doctest.h>

#include <set>

#include "mprec/constructors.hpp"
#include "mprec/enumerate.hpp"
#include "mprec/preclusion.hpp"
#include "mprec/remainder.hpp"
#include "mprec/rng.hpp"

using namespace mprec;

namespace {

// Independent enumeration straight from the optimal-set characterization:
// every boundary edge paired with every vertex adjacent to one of its ends,
// then all 3-subsets of the survivors.
std::set<std::vector<int>> naive_remainder_sets(const Graph& g3) {
    std::set<std::vector<int>> out;
    for (int e = 0; e < g3.edge_count(); ++e) {
        if (!is_g84_boundary_edge(g3.edge(e))) continue;
        const Edge& edge = g3.edge(e);
        for (int u = 0; u < 8; ++u) {
            if (u == edge.u || u == edge.v) continue;
            if (!g3.has_live_edge(u, edge.u) && !g3.has_live_edge(u, edge.v)) continue;
            Graph faulted = delete_faults(g3, FaultSet::mixed({u}, {edge}));
            std::vector<int> alive = faulted.alive_vertices();
            for_each_combination(static_cast<int>(alive.size()), 3,
                                 [&](std::span<const int> combo) {
                std::vector<int> s{alive[static_cast<std::size_t>(combo[0])],
                                   alive[static_cast<std::size_t>(combo[1])],
                                   alive[static_cast<std::size_t>(combo[2])]};
                std::vector<int> isolated = isolated_vertices(faulted, s);
                if (isolated.size() == 4) out.insert(isolated);
            });
        }
    }
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("remainder");

TEST_CASE("enumeration over the canonical g84") {
    Graph g3 = recursive_circulant_g84();
    std::vector<RemainderSet> sets = enumerate_remainder_sets(g3);
    CHECK(sets.size() == 8);

    // matches the direct characterization-based enumeration
    std::set<std::vector<int>> expected = naive_remainder_sets(g3);
    std::set<std::vector<int>> got;
    for (const auto& r : sets) got.insert(r.vertices);
    CHECK(got == expected);

    // the documented instance with its provenance
    CHECK(sets.front().vertices == std::vector<int>{0, 1, 3, 6});
    CHECK(sets.front().provenance_faults == FaultSet::mixed({2}, {Edge(0, 1)}));
    CHECK(sets.front().provenance_s == std::vector<int>{4, 5, 7});
}

TEST_CASE("provenance replays for every remainder set") {
    Graph g3 = recursive_circulant_g84();
    for (const RemainderSet& r : enumerate_remainder_sets(g3)) {
        REQUIRE(r.vertices.size() == 4);
        Graph faulted = delete_faults(g3, r.provenance_faults);
        CHECK(isolated_vertices(faulted, r.provenance_s) == r.vertices);
        // no live edge inside R once the fault edge is gone
        for (std::size_t i = 0; i < r.vertices.size(); ++i) {
            for (std::size_t j = i + 1; j < r.vertices.size(); ++j) {
                CHECK_FALSE(faulted.has_live_edge(r.vertices[i], r.vertices[j]));
            }
        }
    }
}

TEST_CASE("all remainder sets lie in one automorphism orbit") {
    Graph g3 = recursive_circulant_g84();
    CHECK(graph_automorphisms(g3).size() == 16);
    std::vector<std::vector<int>> sets;
    for (const auto& r : enumerate_remainder_sets(g3)) sets.push_back(r.vertices);
    CHECK(orbit_count(g3, sets) == 1);
}

TEST_CASE("rejects graphs that are not g84-shaped") {
    CHECK_THROWS_AS(enumerate_remainder_sets(hypercube(3)), GraphError);
    CHECK_THROWS_AS(enumerate_remainder_sets(Graph(8, {Edge(0, 1)})), GraphError);
}

TEST_CASE("phi images") {
    std::vector<int> r{0, 1, 3, 6};
    CHECK(phi_image(Bijection::identity(8), r) == std::vector<int>{0, 1, 3, 6});
    Bijection shift;
    for (int i = 0; i < 8; ++i) shift.map.push_back((i + 1) % 8);
    CHECK(phi_image(shift, r) == std::vector<int>{1, 2, 4, 7});
    Bijection reversal;
    for (int i = 0; i < 8; ++i) reversal.map.push_back(7 - i);
    CHECK(phi_image(reversal, r) == std::vector<int>{1, 4, 6, 7});
    CHECK_THROWS_AS(phi_image(Bijection::identity(4), r), GraphError);
}

TEST_CASE("condition under the identity bijection") {
    Graph g3 = recursive_circulant_g84();
    std::vector<RemainderSet> sets = enumerate_remainder_sets(g3);
    G4ConditionOutcome outcome = g4_condition(g3, Bijection::identity(8), sets);
    CHECK(outcome.holds);
    REQUIRE(outcome.witness.has_value());
    CHECK(outcome.witness->vertices == std::vector<int>{0, 1, 3, 6});
    REQUIRE(outcome.g1_edge.has_value());
    CHECK(*outcome.g1_edge == Edge(4, 5));
    // deleting {0,1,3,6} from g84 leaves exactly the edge (4,5)
    Graph rest = delete_faults(g3, FaultSet::of_vertices({0, 1, 3, 6}));
    CHECK(rest.live_edge_count() == 1);

    CHECK_FALSE(g4_condition(g3, Bijection::identity(8), {}).holds);
}

TEST_CASE("prediction matches brute force on seeded instances") {
    Graph g3 = recursive_circulant_g84();
    int seen3 = 0, seen4 = 0;
    for (std::uint64_t seed = 2000; seed < 2012; ++seed) {
        RhlGraph g4 = build_rhl(4, seed);
        Bijection phi = g4.top_phi();
        int predicted = predict_fsmp_g4(g3, g3, phi);
        PreclusionOptions opt;
        opt.budget = 4;
        opt.workers = 2;
        PreclusionResult brute = preclusion_number(g4.graph, PreclusionKind::FSMP, opt);
        REQUIRE(brute.found);
        CHECK(brute.number == predicted);
        (predicted == 3 ? seen3 : seen4)++;
    }
    CHECK(seen3 + seen4 == 12);
}

TEST_CASE("identity composition has fsmp 3 and the assembled witness precludes") {
    Graph g3 = recursive_circulant_g84();
    CHECK(predict_fsmp_g4(g3, recursive_circulant_g84(), Bijection::identity(8)) == 3);

    std::vector<RemainderSet> sets = enumerate_remainder_sets(g3);
    G4ConditionOutcome outcome = g4_condition(g3, Bijection::identity(8), sets);
    FaultSet witness = assemble_g4_witness(outcome, 8);
    CHECK(witness.size() == 3);

    ComposedGraph g4 = compose(g3, recursive_circulant_g84(), Bijection::identity(8));
    CHECK_FALSE(survives(g4.graph, witness, PreclusionKind::FSMP));

    // the science behind it: S0 + phi(R) isolates 8 > 7 vertices
    Graph faulted = delete_faults(g4.graph, witness);
    std::vector<int> s = outcome.witness->provenance_s;
    for (int v : phi_image(Bijection::identity(8), outcome.witness->vertices)) {
        s.push_back(8 + v);
    }
    std::sort(s.begin(), s.end());
    CHECK(s.size() == 7);
    CHECK(isolated_count(faulted, s) == 8);
}

TEST_CASE("prediction is invariant under automorphism relabelings of part 1") {
    Graph g3 = recursive_circulant_g84();
    auto autos = graph_automorphisms(g3);
    SplitMix64 rng(17);
    for (std::uint64_t seed : {501ull, 502ull, 503ull}) {
        SplitMix64 phi_rng(seed);
        Bijection phi = Bijection::random(8, phi_rng);
        int base_prediction = predict_fsmp_g4(g3, g3, phi);
        for (int rep = 0; rep < 4; ++rep) {
            const auto& sigma = autos[rng.next_below(autos.size())];
            Bijection composed;
            for (int v = 0; v < 8; ++v) {
                composed.map.push_back(sigma[static_cast<std::size_t>(phi(v))]);
            }
            CHECK(predict_fsmp_g4(g3, g3, composed) == base_prediction);
        }
    }
}

TEST_SUITE_END();
