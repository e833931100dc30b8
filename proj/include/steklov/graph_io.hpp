#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "steklov/graph.hpp"

namespace steklov {

std::string_view role_name(VertexRole role) noexcept;
VertexRole parse_role(std::string_view name);

/// {"vertices":[{"id":0,"measure":1.0,"role":"boundary"},...],
///  "edges":[{"u":0,"v":1,"w":1.0},...]}
/// Field order is fixed; unknown fields are a ParseError on input.
nlohmann::ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& doc);

Graph parse_graph(std::string_view text);
std::string dump_graph(const Graph& g);

Graph load_graph(const std::filesystem::path& path);
void save_graph(const Graph& g, const std::filesystem::path& path);

}  // namespace steklov
