#include "spreadlab/report.hpp"

#include <cstdio>

namespace spreadlab {

using nlohmann::json;

json to_json(const Graph& g) {
    json j;
    j["n"] = g.n;
    auto arr = json::array();
    for (const auto& [u, v] : g.edges) arr.push_back({u, v});
    j["edges"] = arr;
    return j;
}

json to_json(const GraphClass& c) {
    return json{{"is_connected", c.is_connected},
                {"is_tree", c.is_tree},
                {"is_unicyclic", c.is_unicyclic},
                {"is_pseudo_forest", c.is_pseudo_forest},
                {"is_complete", c.is_complete},
                {"is_closed_under_labeling", c.is_closed_under_labeling},
                {"is_k4_free", c.is_k4_free},
                {"min_degree", c.min_degree},
                {"vertex_connectivity", c.vertex_connectivity}};
}

json to_json(const RankCertificate& cert) {
    json j;
    j["rank"] = cert.rank;
    j["mode"] = cert.mode == FieldMode::prime ? "prime" : "exact-rational";
    if (cert.mode == FieldMode::prime) j["prime"] = cert.prime;
    j["witness_point"] = cert.witness_point;
    j["witness_minor"] = {{"rows", cert.minor_rows}, {"cols", cert.minor_cols}};
    j["trials_agreeing"] = cert.trials_agreeing;
    if (cert.escalated) j["escalated"] = true;
    if (cert.symbolically_confirmed) j["symbolically_confirmed"] = true;
    if (cert.probabilistic_only) j["probabilistic_only"] = true;
    return j;
}

json to_json(const BoundReport& report) {
    json comps = json::array();
    for (const auto& c : report.components) {
        json j{{"index", c.index},
               {"n", c.n},
               {"edges", c.edge_count},
               {"min_degree", c.min_degree},
               {"value", c.value},
               {"lower_general", c.lower_general},
               {"upper_general", c.upper_general},
               {"upper_mu", c.upper_mu},
               {"satisfied", c.satisfied}};
        if (c.connectivity) j["connectivity"] = *c.connectivity;
        if (c.lower_connectivity) j["lower_connectivity"] = *c.lower_connectivity;
        if (c.upper_min_degree) j["upper_min_degree"] = *c.upper_min_degree;
        comps.push_back(std::move(j));
    }
    return json{{"components", comps}, {"all_satisfied", report.all_satisfied}};
}

json to_json(const SpreadResult& result) {
    json comps = json::array();
    json rank_certs = json::array();
    for (const auto& c : result.components) {
        comps.push_back(json{{"index", c.index},
                             {"n", c.n},
                             {"edges", c.edge_count},
                             {"value", c.value},
                             {"method", c.method}});
        if (c.certificate) {
            json rc = to_json(*c.certificate);
            rc["component"] = c.index;
            rank_certs.push_back(std::move(rc));
        }
    }
    json base = json::array();
    for (const auto& [u, v] : result.base_edges) base.push_back({u, v});
    json certificate{{"base_edges", base}};
    if (!rank_certs.empty()) certificate["rank_certificates"] = rank_certs;
    return json{{"value", result.value},
                {"method", result.method},
                {"components", comps},
                {"bounds", to_json(result.bounds)},
                {"certificate", certificate},
                {"cross_checked", result.cross_checked}};
}

json to_json(const CompactFaceReport& report) {
    json normals = json::array();
    for (const auto& w : report.witness_normal) normals.push_back(rational_string(w));
    json j{{"mcd", report.mcd},
           {"witness_subset", report.witness_subset},
           {"witness_normal", normals}};
    if (report.rank_route_value) j["rank_route_value"] = *report.rank_route_value;
    return j;
}

const char* planarity_name(Planarity p) {
    switch (p) {
        case Planarity::planar: return "planar";
        case Planarity::nonplanar: return "nonplanar";
        default: return "unknown";
    }
}

json to_json(const HandleTable& table) {
    json rows = json::array();
    for (const auto& r : table.rows)
        rows.push_back(json{{"pair", {r.i, r.j}},
                            {"before", r.before},
                            {"after", r.after},
                            {"delta", r.delta},
                            {"planar_after", planarity_name(r.planar_after)}});
    return json{{"planar_before", planarity_name(table.planar_before)},
                {"rows", rows},
                {"deltas_equal_two", table.deltas_equal_two}};
}

json to_json(const PathStarReport& report) {
    auto edges_json = [](const std::vector<Edge>& es) {
        json arr = json::array();
        for (const auto& [u, v] : es) arr.push_back({u, v});
        return arr;
    };
    return json{{"ok", report.ok},
                {"restricted_rank", report.restricted_rank},
                {"spread", report.spread_value},
                {"subset", edges_json(report.subset)},
                {"missing_path_edges", edges_json(report.missing_path_edges)}};
}

std::string input_digest(const Graph& g) {
    const std::string text = serialize_graph(g, GraphFormat::edge_list);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json to_json(const RunReport& report) {
    return json{{"schema", kSchema},
                {"command", report.command},
                {"input_digest", report.digest},
                {"seed", report.seed},
                {"engine", report.engine},
                {"result", report.result},
                {"elapsed_ms", report.elapsed_ms}};
}

} // namespace spreadlab
