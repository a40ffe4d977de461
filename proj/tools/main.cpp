#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "mprec/graph_io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"matching preclusion toolkit for hypercube-like interconnection graphs"};
    app.require_subcommand(1);

    mprec::cli::ConstructArgs construct_args;
    auto* construct = app.add_subcommand("construct", "build a graph and write it as JSON");
    construct->add_option("--family", construct_args.family, "g84, rhl or hypercube")->required();
    construct->add_option("--m", construct_args.m, "dimension (rhl >= 3, hypercube >= 0)");
    construct->add_option("--phi", construct_args.phi, "identity | seed:<u64> | file:<path>");
    construct->add_option("--out", construct_args.out, "output path")->required();

    mprec::cli::AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand("analyze", "compute a preclusion number exactly");
    analyze->add_option("kind", analyze_args.kind, "mp, smp, fmp or fsmp")->required();
    analyze->add_option("graph", analyze_args.graph_path, "graph JSON file")->required();
    analyze->add_option("--budget", analyze_args.budget,
                        "largest fault-set size to sweep (default: minimum degree)");
    analyze->add_flag("--all-witnesses", analyze_args.all_witnesses,
                      "sweep the hit size completely and keep every optimal set");
    analyze->add_option("--workers", analyze_args.workers, "worker threads (default: hardware)");
    analyze->add_option("--report", analyze_args.report_path, "write the full JSON report here");

    mprec::cli::RemainderArgs remainder_args;
    auto* remainder = app.add_subcommand(
        "remainder", "remainder-set analysis of the 4-dimensional composition");
    remainder->add_option("--phi", remainder_args.phi, "identity | seed:<u64> | file:<path>");
    remainder->add_flag("--validate", remainder_args.validate,
                        "also brute-force fsmp(G4) and compare");
    remainder->add_option("--workers", remainder_args.workers, "worker threads");
    remainder->add_option("--report", remainder_args.report_path, "write the JSON report here");

    mprec::cli::VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify-paper", "run the full result-verification suite");
    verify->add_option("--max-m", verify_args.max_m, "largest dimension to exercise (3-6)");
    verify->add_option("--phi-samples", verify_args.phi_samples,
                       "seeded bijections per dimension-4 check");
    verify->add_option("--seed", verify_args.seed, "base seed");
    verify->add_option("--workers", verify_args.workers, "worker threads (default: hardware)");

    mprec::cli::ExportArgs export_args;
    auto* exporter = app.add_subcommand("export", "convert a graph JSON file");
    exporter->add_option("graph", export_args.graph_path, "graph JSON file")->required();
    exporter->add_option("--format", export_args.format, "dot or edgelist")->required();
    exporter->add_option("--out", export_args.out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*construct) return mprec::cli::cmd_construct(construct_args, std::cout);
        if (*analyze) return mprec::cli::cmd_analyze(analyze_args, std::cout);
        if (*remainder) return mprec::cli::cmd_remainder(remainder_args, std::cout);
        if (*verify) return mprec::cli::cmd_verify_paper(verify_args, std::cout);
        if (*exporter) return mprec::cli::cmd_export(export_args, std::cout);
    } catch (const mprec::cli::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const mprec::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
