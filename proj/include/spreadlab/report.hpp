#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "spreadlab/algebra.hpp"
#include "spreadlab/graph.hpp"
#include "spreadlab/newton.hpp"
#include "spreadlab/spread.hpp"

namespace spreadlab {

inline constexpr const char* kSchema = "spread-lab/1";

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const GraphClass& c);
nlohmann::json to_json(const RankCertificate& cert);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const SpreadResult& result);
nlohmann::json to_json(const CompactFaceReport& report);
nlohmann::json to_json(const HandleTable& table);
nlohmann::json to_json(const PathStarReport& report);

const char* planarity_name(Planarity p);

/// FNV-1a of the canonical edge-list serialization, as a hex string.
std::string input_digest(const Graph& g);

/// Envelope every CLI command emits in JSON mode. Identical inputs and seed
/// reproduce it byte for byte, elapsed_ms aside.
struct RunReport {
    std::string command;
    std::string digest;
    std::uint64_t seed = 0;
    nlohmann::json engine;
    nlohmann::json result;
    double elapsed_ms = 0.0;
};

nlohmann::json to_json(const RunReport& report);

} // namespace spreadlab
