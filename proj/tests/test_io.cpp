#include <doctest.h>

#include <fstream>

#include "mprec/constructors.hpp"
#include "mprec/graph_io.hpp"
#include "mprec/matching.hpp"
#include "mprec/preclusion.hpp"

using namespace mprec;

TEST_SUITE_BEGIN("io");

TEST_CASE("g84 graph file carries edge family tags") {
    GraphFile gf = GraphFile::from_g84();
    CHECK(gf.n == 8);
    CHECK(gf.edges.size() == 12);
    REQUIRE(gf.metadata.has_value());
    CHECK(gf.metadata->family == "g84");
    CHECK(gf.metadata->dimension == 3);
    CHECK(gf.metadata->boundary_edges.size() == 8);
    CHECK(gf.metadata->diagonal_edges.size() == 4);
}

TEST_CASE("graph file JSON round trip") {
    GraphFile gf = GraphFile::from_rhl(build_rhl(4, std::uint64_t{42}));
    nlohmann::json j = to_json(gf);
    GraphFile back = graph_file_from_json(j);
    CHECK(back.n == gf.n);
    CHECK(back.edges == gf.edges);
    REQUIRE(back.metadata.has_value());
    CHECK(back.metadata->family == "rhl");
    CHECK(back.metadata->dimension == 4);
    CHECK(back.metadata->cross_edges == gf.metadata->cross_edges);
    REQUIRE(back.metadata->composition.has_value());
    CHECK(back.metadata->composition->steps.size() == 1);
    CHECK(back.metadata->composition->steps[0].phi ==
          gf.metadata->composition->steps[0].phi);
    CHECK(back.to_graph().same_live_graph(gf.to_graph()));
}

TEST_CASE("metadata validation rejects inconsistencies") {
    GraphFile gf = GraphFile::from_rhl(build_rhl(4, std::uint64_t{42}));
    nlohmann::json j = to_json(gf);
    j["metadata"]["cross_edges"][0] = {0, 1};   // not a part-to-part matching
    CHECK_THROWS_AS(graph_file_from_json(j), IoError);

    nlohmann::json bad = to_json(GraphFile::from_g84());
    bad["metadata"]["boundary_edges"][0] = {0, 5};   // not an edge of the graph
    CHECK_THROWS_AS(graph_file_from_json(bad), IoError);
}

TEST_CASE("graph document validation") {
    CHECK_THROWS_AS(graph_file_from_json(nlohmann::json{{"edges", nlohmann::json::array()}}),
                    IoError);
    nlohmann::json loop = {{"n", 2}, {"edges", {{0, 0}}}};
    CHECK_THROWS_AS(graph_file_from_json(loop), GraphError);
    nlohmann::json bad_pair = {{"n", 2}, {"edges", {{0}}}};
    CHECK_THROWS_AS(graph_file_from_json(bad_pair), IoError);
}

TEST_CASE("edge list round trip") {
    Graph g = recursive_circulant_g84();
    std::string text = to_edge_list(g);
    CHECK(text.substr(0, 4) == "8 12");
    Graph back = parse_edge_list(text);
    CHECK(back.same_live_graph(g));

    CHECK_THROWS_AS(parse_edge_list("3"), IoError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), IoError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), IoError);
}

TEST_CASE("dot export styles the edge families") {
    std::string dot84 = to_dot(GraphFile::from_g84());
    CHECK(dot84.find("graph g {") == 0);
    int solid = 0, dashed = 0;
    for (std::size_t pos = 0; (pos = dot84.find("[style=solid]", pos)) != std::string::npos; ++pos)
        ++solid;
    for (std::size_t pos = 0; (pos = dot84.find("[style=dashed]", pos)) != std::string::npos; ++pos)
        ++dashed;
    CHECK(solid == 8);
    CHECK(dashed == 4);

    std::string dot4 = to_dot(GraphFile::from_rhl(build_rhl(4, std::uint64_t{42})));
    int bold = 0;
    for (std::size_t pos = 0; (pos = dot4.find("style=bold", pos)) != std::string::npos; ++pos)
        ++bold;
    CHECK(bold == 8);
}

TEST_CASE("file IO errors carry exit-friendly types") {
    CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.json"), IoError);
    CHECK_THROWS_AS(write_graph_file("/nonexistent/dir/out.json", GraphFile::from_g84()),
                    IoError);
}

TEST_CASE("preclusion report schema") {
    Graph g3 = recursive_circulant_g84();
    PreclusionOptions opt;
    opt.budget = 2;
    opt.all_witnesses = true;
    opt.workers = 2;
    PreclusionResult r = preclusion_number(g3, PreclusionKind::FSMP, opt);

    nlohmann::ordered_json j = to_json(r, true);
    CHECK(j["kind"] == "fsmp");
    CHECK(j["found"] == true);
    CHECK(j["number"] == 2);
    CHECK(j["exhaustive"] == true);
    CHECK(j["optimal_sets"].size() == 32);
    CHECK(j["optimal_sets"][0]["certificate"]["type"] == "deficiency");
    CHECK(j["swept_sizes"][0]["size"] == 1);
    CHECK(j["swept_sizes"][0]["count"] == 20);
    CHECK(j.contains("wall_time_ms"));
    CHECK_FALSE(to_json(r, false).contains("wall_time_ms"));

    PreclusionOptions small;
    small.budget = 1;
    small.workers = 2;
    nlohmann::ordered_json none = to_json(preclusion_number(g3, PreclusionKind::FSMP, small), false);
    CHECK(none["found"] == false);
    CHECK(none["number"].is_null());
    CHECK(none["lower_bound"] == 2);
}

TEST_CASE("matching and fault-sweep reports serialize") {
    Graph g3 = recursive_circulant_g84();
    nlohmann::ordered_json m = to_json(max_matching(g3));
    CHECK(m.is_array());
    CHECK(m.size() == 4);

    FaultHamOptions opt;
    opt.budget = 1;
    opt.workers = 2;
    FaultHamReport r = verify_fault_hamiltonian(g3, opt);
    nlohmann::ordered_json j = to_json(r, true);
    CHECK(j["budget"] == 1);
    CHECK(j["mode"] == "exhaustive");
    CHECK(j["cases"] == 20);
    CHECK(j["failures"].empty());
    CHECK(j.contains("total_ms"));
    CHECK_FALSE(to_json(r, false).contains("total_ms"));
}

TEST_CASE("half weights serialize as exact strings") {
    Graph c3(3, {Edge(0, 1), Edge(1, 2), Edge(0, 2)});
    FpmOutcome out = has_fractional_perfect_matching(c3);
    REQUIRE(out.has_fpm);
    nlohmann::ordered_json j = fractional_matching_json(c3, *out.matching);
    CHECK(j.size() == 3);
    CHECK(j["0,1"] == "1/2");

    Graph two(2, {Edge(0, 1)});
    FpmOutcome single = has_fractional_perfect_matching(two);
    REQUIRE(single.has_fpm);
    nlohmann::ordered_json k = fractional_matching_json(two, *single.matching);
    CHECK(k["0,1"] == "1");
}

TEST_SUITE_END();
