#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dgc/harness.hpp"

namespace dgc {

using DrawnEdges = std::vector<std::pair<std::string, std::string>>;

Graph parse_graph(std::string_view text);
nlohmann::json graph_json(const Graph& g);
std::string serialize_graph(const Graph& g);

// Flat list of {src,dst} objects, or a list of such lists (one per group).
std::vector<DrawnEdges> parse_cluster_edges(std::string_view text);
std::vector<EdgeMask> cluster_masks(const Graph& g, const std::vector<DrawnEdges>& groups);

nlohmann::json coarsening_json(const Graph& g, const CoarseningResult& result);
nlohmann::json kernel_json(const Graph& g, const KernelBasis& basis);
nlohmann::json report_json(const SweepReport& report);
std::string report_csv(const SweepReport& report);

std::string export_dot(const Graph& g);
std::string export_dot(const Graph& original, const CoarseningResult& result);

std::string format_number(double x);

std::string mode_name(Mode mode);
Mode parse_mode(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view data);

} // namespace dgc
