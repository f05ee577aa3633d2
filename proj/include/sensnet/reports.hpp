#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sensnet/config.hpp"
#include "sensnet/subnet.hpp"

namespace sensnet {

// Header object shared by every JSON report: tool version, schema version,
// the command that produced it, and the effective settings. Settings that
// only affect where output goes or how many workers run (out, *_out,
// threads) are omitted.
nlohmann::ordered_json provenance_json(const std::string& command, const Config& cfg);

void write_json(const nlohmann::ordered_json& j, const std::string& path);

// Numeric CSV with full round-trip precision.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

// Standalone SVG of the overlay: one polyline per link, one dot per node.
void write_svg_subnet(const SubnetGraph& sg, const Window& w, const std::string& path);

}  // namespace sensnet
