#include "commands.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <unistd.h>

#include "mprec/constructors.hpp"
#include "mprec/graph_io.hpp"
#include "mprec/preclusion.hpp"
#include "mprec/remainder.hpp"
#include "mprec/rng.hpp"
#include "mprec/verify.hpp"

namespace mprec::cli {

namespace {

struct PhiSpec {
    enum class Kind { identity, seed, file } kind = Kind::identity;
    std::uint64_t seed = 0;
    std::string path;
};

PhiSpec parse_phi_spec(const std::string& text) {
    PhiSpec spec;
    if (text == "identity") {
        spec.kind = PhiSpec::Kind::identity;
        return spec;
    }
    if (text.starts_with("seed:")) {
        spec.kind = PhiSpec::Kind::seed;
        std::string digits = text.substr(5);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), spec.seed);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
            throw UsageError("bad seed in --phi '" + text + "'");
        }
        return spec;
    }
    if (text.starts_with("file:")) {
        spec.kind = PhiSpec::Kind::file;
        spec.path = text.substr(5);
        if (spec.path.empty()) throw UsageError("empty path in --phi '" + text + "'");
        return spec;
    }
    throw UsageError("--phi must be identity, seed:<u64> or file:<path>");
}

std::vector<Bijection> bijections_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open phi file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError("invalid JSON in phi file '" + path + "': " + e.what());
    }
    if (!j.is_array()) throw IoError("phi file must hold an array of permutation arrays");
    std::vector<Bijection> out;
    for (const auto& row : j) {
        if (!row.is_array()) throw IoError("phi file must hold an array of permutation arrays");
        Bijection b;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw IoError("phi entries must be integers");
            b.map.push_back(x.get<int>());
        }
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<Bijection> identity_bijections(int m) {
    std::vector<Bijection> out;
    for (int d = 4; d <= m; ++d) {
        int count = 1 << (m - d);
        for (int i = 0; i < count; ++i) out.push_back(Bijection::identity(1 << (d - 1)));
    }
    return out;
}

RhlGraph build_rhl_from_spec(int m, const PhiSpec& phi) {
    switch (phi.kind) {
        case PhiSpec::Kind::identity: return build_rhl(m, identity_bijections(m));
        case PhiSpec::Kind::seed: return build_rhl(m, phi.seed);
        case PhiSpec::Kind::file: return build_rhl(m, bijections_from_file(phi.path));
    }
    throw UsageError("unreachable phi kind");
}

// Single length-8 bijection for the remainder analysis. A seed spec draws
// the same bijection that `construct --family rhl --m 4 --phi seed:<s>`
// composes with.
Bijection single_bijection_from_spec(const PhiSpec& phi) {
    switch (phi.kind) {
        case PhiSpec::Kind::identity: return Bijection::identity(8);
        case PhiSpec::Kind::seed: {
            SplitMix64 rng(phi.seed);
            return Bijection::random(8, rng);
        }
        case PhiSpec::Kind::file: {
            auto all = bijections_from_file(phi.path);
            if (all.size() == 1 && all.front().size() == 8) return all.front();
            throw IoError("remainder expects a phi file with exactly one length-8 permutation");
        }
    }
    throw UsageError("unreachable phi kind");
}

std::string witness_text(const FaultSet& f) {
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

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("failed writing '" + path + "'");
}

bool use_color() {
    return ::isatty(1) != 0 && std::getenv("NO_COLOR") == nullptr;
}

}  // namespace

int cmd_construct(const ConstructArgs& args, std::ostream& out) {
    if (args.out.empty()) throw UsageError("construct needs --out <path>");
    PhiSpec phi = parse_phi_spec(args.phi);
    GraphFile gf;
    if (args.family == "g84") {
        gf = GraphFile::from_g84();
    } else if (args.family == "rhl") {
        if (args.m < 3) throw UsageError("rhl graphs need --m >= 3");
        gf = GraphFile::from_rhl(build_rhl_from_spec(args.m, phi));
    } else if (args.family == "hypercube") {
        if (args.m < 0) throw UsageError("hypercube needs --m >= 0");
        gf = GraphFile::from_hypercube(args.m);
    } else {
        throw UsageError("unknown family '" + args.family + "' (g84, rhl, hypercube)");
    }
    write_graph_file(args.out, gf);
    out << "wrote " << args.out << " (n=" << gf.n << ", m=" << gf.edges.size() << ")\n";
    return 0;
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out) {
    PreclusionKind kind;
    try {
        kind = parse_preclusion_kind(args.kind);
    } catch (const PreclusionError& e) {
        throw UsageError(e.what());
    }
    Graph g = read_graph_file(args.graph_path).to_graph();
    PreclusionOptions opt;
    opt.budget = args.budget > 0 ? args.budget : min_degree(g);
    opt.all_witnesses = args.all_witnesses;
    opt.workers = args.workers;
    PreclusionResult result = preclusion_number(g, kind, opt);

    out << to_string(kind) << "(" << args.graph_path << ")";
    if (result.found) {
        out << " = " << result.number << "\n";
        out << "first optimal set: " << witness_text(result.optimal_sets.front().faults)
            << (result.optimal_sets.front().trivial ? " (trivial)" : "") << "\n";
        if (args.all_witnesses) out << "optimal sets: " << result.optimal_sets.size() << "\n";
    } else {
        out << " > " << result.budget << " (exhaustive through the budget)\n";
    }
    out << "wall time: " << static_cast<long long>(result.wall_time_ms) << " ms\n";
    if (!args.report_path.empty()) {
        write_text_file(args.report_path, to_json(result, true).dump(2) + "\n");
        out << "report: " << args.report_path << "\n";
    }
    return 0;
}

int cmd_remainder(const RemainderArgs& args, std::ostream& out) {
    Bijection phi = single_bijection_from_spec(parse_phi_spec(args.phi));
    if (phi.size() != 8 || !phi.is_permutation()) {
        throw UsageError("remainder needs a permutation of 8 elements");
    }
    Graph g84 = recursive_circulant_g84();
    std::vector<RemainderSet> remainder_sets = enumerate_remainder_sets(g84);
    G4ConditionOutcome condition = g4_condition(g84, phi, remainder_sets);
    int predicted = condition.holds ? 3 : 4;

    nlohmann::ordered_json report;
    nlohmann::ordered_json sets = nlohmann::ordered_json::array();
    for (const RemainderSet& r : remainder_sets) {
        nlohmann::ordered_json item;
        item["vertices"] = r.vertices;
        item["provenance"] = {{"faults", to_json(r.provenance_faults)}, {"s", r.provenance_s}};
        sets.push_back(std::move(item));
    }
    report["remainder_sets"] = std::move(sets);
    report["condition"] = condition.holds;
    report["witness_R"] = condition.witness ? nlohmann::ordered_json(condition.witness->vertices)
                                            : nlohmann::ordered_json(nullptr);
    report["predicted_fsmp"] = predicted;

    out << "remainder sets: " << remainder_sets.size() << "\n";
    out << "condition (some R leaves <= 1 edge in G1 - phi(R)): "
        << (condition.holds ? "true" : "false") << "\n";
    if (condition.witness) {
        out << "witness R: " << witness_text(FaultSet::of_vertices(condition.witness->vertices))
            << "\n";
    }
    out << "predicted fsmp(G4) = " << predicted << "\n";

    if (args.validate) {
        ComposedGraph g4 = compose(g84, recursive_circulant_g84(), phi);
        PreclusionOptions opt;
        opt.budget = 4;
        opt.workers = args.workers;
        PreclusionResult brute = preclusion_number(g4.graph, PreclusionKind::FSMP, opt);
        bool agree = brute.found && brute.number == predicted;
        report["brute_force_fsmp"] = brute.found ? nlohmann::ordered_json(brute.number)
                                                 : nlohmann::ordered_json(nullptr);
        report["agree"] = agree;
        out << "brute-force fsmp(G4) = " << (brute.found ? std::to_string(brute.number) : "?")
            << " -> " << (agree ? "agree" : "DISAGREE") << "\n";
        if (!args.report_path.empty()) {
            write_text_file(args.report_path, report.dump(2) + "\n");
            out << "report: " << args.report_path << "\n";
        }
        return agree ? 0 : 1;
    }
    if (!args.report_path.empty()) {
        write_text_file(args.report_path, report.dump(2) + "\n");
        out << "report: " << args.report_path << "\n";
    }
    return 0;
}

int cmd_verify_paper(const VerifyArgs& args, std::ostream& out) {
    verify::Options opt;
    opt.max_m = args.max_m;
    opt.predictor_samples = args.phi_samples;
    opt.fmp_g4_samples = args.phi_samples;
    opt.seed = args.seed;
    opt.workers = args.workers;
    auto results = verify::run_paper_checks(opt, &out);

    const bool color = use_color();
    const char* green = color ? "\033[32m" : "";
    const char* red = color ? "\033[31m" : "";
    const char* reset = color ? "\033[0m" : "";
    out << "\n";
    for (const auto& r : results) {
        out << (r.pass ? green : red) << (r.pass ? "PASS" : "FAIL") << reset << "  " << r.id
            << "  " << r.claim << "  (" << static_cast<long long>(r.ms) << " ms)\n";
    }
    bool ok = verify::all_passed(results);
    out << (ok ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return ok ? 0 : 1;
}

int cmd_export(const ExportArgs& args, std::ostream& out) {
    if (args.out.empty()) throw UsageError("export needs --out <path>");
    GraphFile gf = read_graph_file(args.graph_path);
    if (args.format == "dot") {
        write_text_file(args.out, to_dot(gf));
    } else if (args.format == "edgelist") {
        write_text_file(args.out, to_edge_list(gf.to_graph()));
    } else {
        throw UsageError("unknown format '" + args.format + "' (dot, edgelist)");
    }
    out << "wrote " << args.out << "\n";
    return 0;
}

}  // namespace mprec::cli
