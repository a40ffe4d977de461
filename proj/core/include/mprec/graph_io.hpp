#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>

#include "mprec/constructors.hpp"
#include "mprec/graph.hpp"
#include "mprec/hamiltonian.hpp"
#include "mprec/matching.hpp"
#include "mprec/preclusion.hpp"

namespace mprec {

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct GraphFileMetadata {
    std::string family;   // "g84" | "rhl" | "hypercube"
    int dimension = 0;
    std::optional<CompositionPlan> composition;
    std::vector<Edge> cross_edges;
    std::vector<Edge> boundary_edges;
    std::vector<Edge> diagonal_edges;
};

/// JSON graph document: vertex count, edge list, optional construction
/// metadata. Metadata is validated against the edge set on parse.
struct GraphFile {
    int n = 0;
    std::vector<Edge> edges;
    std::optional<GraphFileMetadata> metadata;

    Graph to_graph() const { return Graph(n, edges); }

    static GraphFile from_graph(const Graph& g);
    static GraphFile from_g84();
    static GraphFile from_rhl(const RhlGraph& r);
    static GraphFile from_hypercube(int dimension);
};

nlohmann::ordered_json to_json(const GraphFile& gf);
GraphFile graph_file_from_json(const nlohmann::json& j);

GraphFile read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const GraphFile& gf);

/// Plain text edge list: header line "n m", then one "u v" line per live
/// edge, ascending.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

/// Graphviz output; boundary/diagonal/cross edges get distinct styles when
/// the metadata tags them.
std::string to_dot(const GraphFile& gf);

nlohmann::ordered_json to_json(const Edge& e);
nlohmann::ordered_json to_json(const FaultSet& f);
nlohmann::ordered_json to_json(const Matching& m);
/// Nonzero weights only, keyed "u,v", valued "1/2" or "1".
nlohmann::ordered_json fractional_matching_json(const Graph& g, const FractionalMatching& fm);
nlohmann::ordered_json to_json(const DeficiencyWitness& w);
nlohmann::ordered_json to_json(const OddComponentsWitness& w);
nlohmann::ordered_json to_json(const PreclusionCertificate& c);

/// include_timing=false yields the canonical form used for determinism
/// comparisons (wall_time_ms is the only volatile field).
nlohmann::ordered_json to_json(const PreclusionResult& r, bool include_timing);
nlohmann::ordered_json to_json(const StructureReport& r);
nlohmann::ordered_json to_json(const FaultHamReport& r, bool include_timing);

}  // namespace mprec
