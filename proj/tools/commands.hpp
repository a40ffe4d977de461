#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace mprec::cli {

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct ConstructArgs {
    std::string family;
    int m = 3;
    std::string phi = "identity";   // identity | seed:<u64> | file:<path>
    std::string out;
};

struct AnalyzeArgs {
    std::string kind;
    std::string graph_path;
    int budget = 0;   // 0 = minimum live degree of the input
    bool all_witnesses = false;
    int workers = 0;
    std::string report_path;
};

struct RemainderArgs {
    std::string phi = "identity";
    bool validate = false;
    int workers = 0;
    std::string report_path;
};

struct VerifyArgs {
    int max_m = 5;
    int phi_samples = 50;
    std::uint64_t seed = 1;
    int workers = 0;
};

struct ExportArgs {
    std::string graph_path;
    std::string format;   // dot | edgelist
    std::string out;
};

int cmd_construct(const ConstructArgs& args, std::ostream& out);
int cmd_analyze(const AnalyzeArgs& args, std::ostream& out);
int cmd_remainder(const RemainderArgs& args, std::ostream& out);
int cmd_verify_paper(const VerifyArgs& args, std::ostream& out);
int cmd_export(const ExportArgs& args, std::ostream& out);

}  // namespace mprec::cli
