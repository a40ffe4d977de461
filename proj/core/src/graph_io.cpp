#include "mprec/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace mprec {

using nlohmann::json;
using nlohmann::ordered_json;

GraphFile GraphFile::from_graph(const Graph& g) {
    GraphFile gf;
    gf.n = g.order();
    for (int e : g.live_edges()) gf.edges.push_back(g.edge(e));
    return gf;
}

GraphFile GraphFile::from_g84() {
    GraphFile gf = from_graph(recursive_circulant_g84());
    GraphFileMetadata meta;
    meta.family = "g84";
    meta.dimension = 3;
    for (const Edge& e : gf.edges) {
        if (is_g84_boundary_edge(e)) meta.boundary_edges.push_back(e);
        if (is_g84_diagonal_edge(e)) meta.diagonal_edges.push_back(e);
    }
    gf.metadata = std::move(meta);
    return gf;
}

GraphFile GraphFile::from_rhl(const RhlGraph& r) {
    GraphFile gf = from_graph(r.graph);
    GraphFileMetadata meta;
    meta.family = "rhl";
    meta.dimension = r.dimension;
    meta.composition = r.plan;
    meta.cross_edges = r.cross_edges;
    if (r.dimension == 3) {
        for (const Edge& e : gf.edges) {
            if (is_g84_boundary_edge(e)) meta.boundary_edges.push_back(e);
            if (is_g84_diagonal_edge(e)) meta.diagonal_edges.push_back(e);
        }
    }
    gf.metadata = std::move(meta);
    return gf;
}

GraphFile GraphFile::from_hypercube(int dimension) {
    GraphFile gf = from_graph(hypercube(dimension));
    GraphFileMetadata meta;
    meta.family = "hypercube";
    meta.dimension = dimension;
    gf.metadata = std::move(meta);
    return gf;
}

namespace {

ordered_json edges_json(const std::vector<Edge>& edges) {
    ordered_json arr = ordered_json::array();
    for (const Edge& e : edges) arr.push_back({e.u, e.v});
    return arr;
}

std::vector<Edge> edges_from_json(const json& arr, const char* what) {
    if (!arr.is_array()) throw IoError(std::string(what) + " must be an array of pairs");
    std::vector<Edge> out;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer()) {
            throw IoError(std::string(what) + " entries must be [u, v] integer pairs");
        }
        out.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return out;
}

std::vector<int> ints_from_json(const json& arr, const char* what) {
    if (!arr.is_array()) throw IoError(std::string(what) + " must be an integer array");
    std::vector<int> out;
    for (const auto& item : arr) {
        if (!item.is_number_integer()) throw IoError(std::string(what) + " must hold integers");
        out.push_back(item.get<int>());
    }
    return out;
}

void validate_metadata(const GraphFile& gf) {
    const GraphFileMetadata& meta = *gf.metadata;
    std::set<Edge> edge_set(gf.edges.begin(), gf.edges.end());
    for (const Edge& e : meta.cross_edges) {
        if (!edge_set.contains(e)) throw IoError("metadata cross edge missing from edge list");
    }
    for (const Edge& e : meta.boundary_edges) {
        if (!edge_set.contains(e)) throw IoError("metadata boundary edge missing from edge list");
    }
    for (const Edge& e : meta.diagonal_edges) {
        if (!edge_set.contains(e)) throw IoError("metadata diagonal edge missing from edge list");
    }
    if (!meta.cross_edges.empty()) {
        int half = gf.n / 2;
        std::vector<char> used(static_cast<std::size_t>(gf.n), 0);
        if (static_cast<int>(meta.cross_edges.size()) != half) {
            throw IoError("metadata cross edges do not form a perfect matching between parts");
        }
        for (const Edge& e : meta.cross_edges) {
            if (e.u >= half || e.v < half || used[static_cast<std::size_t>(e.u)] ||
                used[static_cast<std::size_t>(e.v)]) {
                throw IoError("metadata cross edges do not form a perfect matching between parts");
            }
            used[static_cast<std::size_t>(e.u)] = 1;
            used[static_cast<std::size_t>(e.v)] = 1;
        }
    }
}

}  // namespace

ordered_json to_json(const GraphFile& gf) {
    ordered_json j;
    j["n"] = gf.n;
    j["edges"] = edges_json(gf.edges);
    if (gf.metadata) {
        const GraphFileMetadata& meta = *gf.metadata;
        ordered_json m;
        m["family"] = meta.family;
        m["dimension"] = meta.dimension;
        if (meta.composition) {
            ordered_json steps = ordered_json::array();
            for (const CompositionStep& s : meta.composition->steps) {
                steps.push_back({{"dimension", s.dimension}, {"base", s.base}, {"phi", s.phi}});
            }
            m["composition"] = {{"dimension", meta.composition->dimension}, {"steps", steps}};
        }
        if (!meta.cross_edges.empty()) m["cross_edges"] = edges_json(meta.cross_edges);
        if (!meta.boundary_edges.empty()) m["boundary_edges"] = edges_json(meta.boundary_edges);
        if (!meta.diagonal_edges.empty()) m["diagonal_edges"] = edges_json(meta.diagonal_edges);
        j["metadata"] = std::move(m);
    }
    return j;
}

GraphFile graph_file_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw IoError("graph document needs 'n' and 'edges'");
    }
    if (!j["n"].is_number_integer()) throw IoError("'n' must be an integer");
    GraphFile gf;
    gf.n = j["n"].get<int>();
    gf.edges = edges_from_json(j["edges"], "edges");
    if (j.contains("metadata") && !j["metadata"].is_null()) {
        const json& m = j["metadata"];
        GraphFileMetadata meta;
        meta.family = m.value("family", std::string{});
        meta.dimension = m.value("dimension", 0);
        if (m.contains("composition")) {
            CompositionPlan plan;
            plan.dimension = m["composition"].value("dimension", 0);
            for (const auto& s : m["composition"].value("steps", json::array())) {
                CompositionStep step;
                step.dimension = s.value("dimension", 0);
                step.base = s.value("base", 0);
                step.phi = ints_from_json(s.value("phi", json::array()), "phi");
                plan.steps.push_back(std::move(step));
            }
            meta.composition = std::move(plan);
        }
        if (m.contains("cross_edges")) {
            meta.cross_edges = edges_from_json(m["cross_edges"], "cross_edges");
        }
        if (m.contains("boundary_edges")) {
            meta.boundary_edges = edges_from_json(m["boundary_edges"], "boundary_edges");
        }
        if (m.contains("diagonal_edges")) {
            meta.diagonal_edges = edges_from_json(m["diagonal_edges"], "diagonal_edges");
        }
        gf.metadata = std::move(meta);
        validate_metadata(gf);
    }
    // Surface malformed edge lists (range, loops, duplicates) at parse time.
    (void)gf.to_graph();
    return gf;
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw IoError("invalid JSON in '" + path + "': " + e.what());
    }
    try {
        return graph_file_from_json(j);
    } catch (const GraphError& e) {
        throw IoError("invalid graph in '" + path + "': " + e.what());
    }
}

void write_graph_file(const std::string& path, const GraphFile& gf) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << to_json(gf).dump(2) << '\n';
    if (!out) throw IoError("failed writing '" + path + "'");
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    std::vector<int> live = g.live_edges();
    out << g.order() << ' ' << live.size() << '\n';
    for (int e : live) out << g.edge(e).u << ' ' << g.edge(e).v << '\n';
    return out.str();
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n = 0;
    long long m = 0;
    if (!(in >> n >> m) || n < 0 || m < 0) throw IoError("edge list needs a 'n m' header");
    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw IoError("edge list ended early");
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, edges);
    } catch (const GraphError& e) {
        throw IoError(std::string("invalid edge list: ") + e.what());
    }
}

std::string to_dot(const GraphFile& gf) {
    std::set<Edge> cross, boundary, diagonal;
    if (gf.metadata) {
        cross.insert(gf.metadata->cross_edges.begin(), gf.metadata->cross_edges.end());
        boundary.insert(gf.metadata->boundary_edges.begin(), gf.metadata->boundary_edges.end());
        diagonal.insert(gf.metadata->diagonal_edges.begin(), gf.metadata->diagonal_edges.end());
    }
    std::ostringstream out;
    out << "graph g {\n  node [shape=circle];\n";
    std::vector<Edge> edges = gf.edges;
    std::sort(edges.begin(), edges.end());
    for (const Edge& e : edges) {
        out << "  " << e.u << " -- " << e.v;
        if (cross.contains(e)) {
            out << " [style=bold, color=blue]";
        } else if (diagonal.contains(e)) {
            out << " [style=dashed]";
        } else if (boundary.contains(e)) {
            out << " [style=solid]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

ordered_json to_json(const Edge& e) { return ordered_json::array({e.u, e.v}); }

ordered_json to_json(const FaultSet& f) {
    ordered_json j;
    j["vertices"] = f.vertices;
    j["edges"] = edges_json(f.edges);
    return j;
}

ordered_json to_json(const Matching& m) {
    ordered_json arr = ordered_json::array();
    for (const Edge& e : m.matched_edges()) arr.push_back(to_json(e));
    return arr;
}

ordered_json fractional_matching_json(const Graph& g, const FractionalMatching& fm) {
    ordered_json j = ordered_json::object();
    for (int e = 0; e < fm.edge_count(); ++e) {
        int h = fm.half_weight(e);
        if (h == 0) continue;
        std::string key = std::to_string(g.edge(e).u) + "," + std::to_string(g.edge(e).v);
        j[key] = (h == 1) ? "1/2" : "1";
    }
    return j;
}

ordered_json to_json(const DeficiencyWitness& w) {
    ordered_json j;
    j["type"] = "deficiency";
    j["s"] = w.s;
    j["isolated"] = w.isolated;
    return j;
}

ordered_json to_json(const OddComponentsWitness& w) {
    ordered_json j;
    j["type"] = "odd_components";
    j["s"] = w.s;
    j["odd_components"] = w.odd_components;
    return j;
}

ordered_json to_json(const PreclusionCertificate& c) {
    if (c.deficiency) return to_json(*c.deficiency);
    if (c.odd_components) return to_json(*c.odd_components);
    return nullptr;
}

ordered_json to_json(const PreclusionResult& r, bool include_timing) {
    ordered_json j;
    j["kind"] = to_string(r.kind);
    j["found"] = r.found;
    if (r.found) {
        j["number"] = r.number;
    } else {
        j["number"] = nullptr;
        j["lower_bound"] = r.budget + 1;
    }
    j["budget"] = r.budget;
    j["exhaustive"] = r.exhaustive;
    ordered_json sets = ordered_json::array();
    for (const auto& entry : r.optimal_sets) {
        ordered_json s;
        s["vertices"] = entry.faults.vertices;
        s["edges"] = edges_json(entry.faults.edges);
        s["trivial"] = entry.trivial;
        s["certificate"] = to_json(entry.certificate);
        sets.push_back(std::move(s));
    }
    j["optimal_sets"] = std::move(sets);
    ordered_json swept = ordered_json::array();
    for (const auto& row : r.swept_sizes) {
        ordered_json s;
        s["size"] = row.size;
        s["count"] = row.count;
        if (row.survivors) {
            s["survivors"] = *row.survivors;
        } else {
            s["survivors"] = nullptr;
        }
        swept.push_back(std::move(s));
    }
    j["swept_sizes"] = std::move(swept);
    if (include_timing) j["wall_time_ms"] = r.wall_time_ms;
    return j;
}

ordered_json to_json(const StructureReport& r) {
    ordered_json j;
    j["kind"] = to_string(r.kind);
    ordered_json comp = ordered_json::array();
    for (const auto& [shape, count] : r.composition) {
        comp.push_back({{"vertices", shape.first}, {"edges", shape.second}, {"count", count}});
    }
    j["composition"] = std::move(comp);
    j["trivial_count"] = r.trivial_count;
    if (r.g3_fsmp) {
        j["g3_fsmp"] = {{"all_match", r.g3_fsmp->all_match},
                        {"diagonal_free", r.g3_fsmp->diagonal_free},
                        {"per_set", r.g3_fsmp->per_set}};
    } else {
        j["g3_fsmp"] = nullptr;
    }
    return j;
}

ordered_json to_json(const FaultHamReport& r, bool include_timing) {
    ordered_json j;
    j["budget"] = r.budget;
    j["mode"] = (r.mode == FaultHamMode::exhaustive) ? "exhaustive" : "sample";
    j["connected"] = r.connected;
    j["cases"] = r.instances;
    j["pair_checks"] = r.pair_checks;
    ordered_json failures = ordered_json::array();
    for (const FaultSet& f : r.failures) failures.push_back(to_json(f));
    j["failures"] = std::move(failures);
    if (include_timing) {
        j["max_search_ms"] = r.max_search_ms;
        j["total_ms"] = r.total_ms;
    }
    return j;
}

}  // namespace mprec
