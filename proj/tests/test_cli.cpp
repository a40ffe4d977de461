#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "commands.hpp"
#include "mprec/graph_io.hpp"
#include "mprec/remainder.hpp"

using namespace mprec;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("mprec-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
    static int& counter() {
        static int value = 0;
        return value;
    }
};

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("construct writes the requested families") {
    TempDir tmp;
    std::ostringstream out;

    cli::ConstructArgs g84;
    g84.family = "g84";
    g84.out = tmp.file("g84.json");
    CHECK(cli::cmd_construct(g84, out) == 0);
    GraphFile gf = read_graph_file(g84.out);
    CHECK(gf.n == 8);
    CHECK(gf.edges.size() == 12);

    cli::ConstructArgs rhl5;
    rhl5.family = "rhl";
    rhl5.m = 5;
    rhl5.phi = "seed:1";
    rhl5.out = tmp.file("rhl5.json");
    CHECK(cli::cmd_construct(rhl5, out) == 0);
    GraphFile r5 = read_graph_file(rhl5.out);
    CHECK(r5.n == 32);
    CHECK(r5.edges.size() == 80);

    cli::ConstructArgs cube;
    cube.family = "hypercube";
    cube.m = 3;
    cube.out = tmp.file("q3.json");
    CHECK(cli::cmd_construct(cube, out) == 0);
    CHECK(read_graph_file(cube.out).edges.size() == 12);
}

TEST_CASE("construct argument validation") {
    TempDir tmp;
    std::ostringstream out;
    cli::ConstructArgs args;
    args.family = "rhl";
    args.m = 2;
    args.out = tmp.file("bad.json");
    CHECK_THROWS_AS(cli::cmd_construct(args, out), cli::UsageError);
    args.m = 4;
    args.family = "nope";
    CHECK_THROWS_AS(cli::cmd_construct(args, out), cli::UsageError);
    args.family = "rhl";
    args.phi = "seed:abc";
    CHECK_THROWS_AS(cli::cmd_construct(args, out), cli::UsageError);
    args.phi = "file:/nonexistent/phis.json";
    CHECK_THROWS_AS(cli::cmd_construct(args, out), IoError);
    args.phi = "identity";
    args.out.clear();
    CHECK_THROWS_AS(cli::cmd_construct(args, out), cli::UsageError);
}

TEST_CASE("construct accepts explicit bijection files") {
    TempDir tmp;
    std::ostringstream out;
    {
        std::ofstream phis(tmp.file("phi.json"));
        phis << "[[0,1,2,3,4,5,6,7]]";
    }
    cli::ConstructArgs args;
    args.family = "rhl";
    args.m = 4;
    args.phi = "file:" + tmp.file("phi.json");
    args.out = tmp.file("rhl4.json");
    CHECK(cli::cmd_construct(args, out) == 0);
    GraphFile gf = read_graph_file(args.out);
    REQUIRE(gf.metadata.has_value());
    REQUIRE(gf.metadata->composition.has_value());
    CHECK(gf.metadata->composition->steps[0].phi ==
          std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("analyze reports the preclusion number and a witness") {
    TempDir tmp;
    std::ostringstream out;
    cli::ConstructArgs construct;
    construct.family = "g84";
    construct.out = tmp.file("g84.json");
    cli::cmd_construct(construct, out);

    cli::AnalyzeArgs analyze;
    analyze.kind = "fsmp";
    analyze.graph_path = tmp.file("g84.json");
    analyze.workers = 2;
    analyze.report_path = tmp.file("report.json");
    std::ostringstream text;
    CHECK(cli::cmd_analyze(analyze, text) == 0);
    CHECK(text.str().find("= 2") != std::string::npos);

    std::ifstream in(analyze.report_path);
    nlohmann::json report = nlohmann::json::parse(in);
    CHECK(report["kind"] == "fsmp");
    CHECK(report["number"] == 2);
    CHECK(report.contains("wall_time_ms"));

    analyze.kind = "fmp";
    analyze.report_path.clear();
    std::ostringstream fmp_text;
    CHECK(cli::cmd_analyze(analyze, fmp_text) == 0);
    CHECK(fmp_text.str().find("= 3") != std::string::npos);
}

TEST_CASE("analyze rejects bad input") {
    TempDir tmp;
    std::ostringstream out;
    cli::AnalyzeArgs analyze;
    analyze.kind = "nope";
    analyze.graph_path = tmp.file("missing.json");
    CHECK_THROWS_AS(cli::cmd_analyze(analyze, out), cli::UsageError);
    analyze.kind = "fsmp";
    CHECK_THROWS_AS(cli::cmd_analyze(analyze, out), IoError);
    {
        std::ofstream bad(tmp.file("bad.json"));
        bad << "{not json";
    }
    analyze.graph_path = tmp.file("bad.json");
    CHECK_THROWS_AS(cli::cmd_analyze(analyze, out), IoError);
}

TEST_CASE("remainder analysis of the identity composition") {
    std::ostringstream text;
    cli::RemainderArgs args;
    args.phi = "identity";
    args.workers = 2;
    CHECK(cli::cmd_remainder(args, text) == 0);
    CHECK(text.str().find("remainder sets: 8") != std::string::npos);
    CHECK(text.str().find("predicted fsmp(G4) = 3") != std::string::npos);
}

TEST_CASE("remainder seed draws the same bijection construct composes with") {
    TempDir tmp;
    std::ostringstream out;
    cli::ConstructArgs construct;
    construct.family = "rhl";
    construct.m = 4;
    construct.phi = "seed:42";
    construct.out = tmp.file("rhl4.json");
    cli::cmd_construct(construct, out);
    GraphFile gf = read_graph_file(construct.out);
    REQUIRE(gf.metadata.has_value());
    REQUIRE(gf.metadata->composition.has_value());
    Bijection phi;
    phi.map = gf.metadata->composition->steps[0].phi;

    Graph g84 = recursive_circulant_g84();
    int predicted = predict_fsmp_g4(g84, g84, phi);

    std::ostringstream text;
    cli::RemainderArgs args;
    args.phi = "seed:42";
    args.workers = 2;
    CHECK(cli::cmd_remainder(args, text) == 0);
    CHECK(text.str().find("predicted fsmp(G4) = " + std::to_string(predicted)) !=
          std::string::npos);
}

TEST_CASE("remainder --validate agrees with brute force") {
    TempDir tmp;
    std::ostringstream text;
    cli::RemainderArgs args;
    args.phi = "seed:42";
    args.validate = true;
    args.workers = 2;
    args.report_path = tmp.file("remainder.json");
    CHECK(cli::cmd_remainder(args, text) == 0);
    CHECK(text.str().find("agree") != std::string::npos);

    std::ifstream in(args.report_path);
    nlohmann::json report = nlohmann::json::parse(in);
    CHECK(report["agree"] == true);
    CHECK(report["predicted_fsmp"] == report["brute_force_fsmp"]);
    CHECK(report["remainder_sets"].size() == 8);
}

TEST_CASE("a seeded dimension-5 instance analyzes to 5") {
    TempDir tmp;
    std::ostringstream out;
    cli::ConstructArgs construct;
    construct.family = "rhl";
    construct.m = 5;
    construct.phi = "seed:1";
    construct.out = tmp.file("rhl5.json");
    cli::cmd_construct(construct, out);

    cli::AnalyzeArgs analyze;
    analyze.kind = "fsmp";
    analyze.graph_path = construct.out;
    analyze.budget = 5;
    analyze.workers = 2;
    std::ostringstream text;
    CHECK(cli::cmd_analyze(analyze, text) == 0);
    CHECK(text.str().find("= 5") != std::string::npos);
}

TEST_CASE("export to dot and edge list") {
    TempDir tmp;
    std::ostringstream out;
    cli::ConstructArgs construct;
    construct.family = "g84";
    construct.out = tmp.file("g84.json");
    cli::cmd_construct(construct, out);

    cli::ExportArgs dot;
    dot.graph_path = tmp.file("g84.json");
    dot.format = "dot";
    dot.out = tmp.file("g84.dot");
    CHECK(cli::cmd_export(dot, out) == 0);
    std::ifstream dot_in(dot.out);
    std::stringstream dot_text;
    dot_text << dot_in.rdbuf();
    CHECK(dot_text.str().find("graph g {") == 0);

    cli::ExportArgs edges;
    edges.graph_path = tmp.file("g84.json");
    edges.format = "edgelist";
    edges.out = tmp.file("g84.edges");
    CHECK(cli::cmd_export(edges, out) == 0);
    std::ifstream edge_in(edges.out);
    std::stringstream edge_text;
    edge_text << edge_in.rdbuf();
    Graph back = parse_edge_list(edge_text.str());
    CHECK(back.same_live_graph(recursive_circulant_g84()));

    cli::ExportArgs bad = edges;
    bad.format = "svg";
    CHECK_THROWS_AS(cli::cmd_export(bad, out), cli::UsageError);
}

TEST_SUITE_END();
