#include "steklov/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "steklov/error.hpp"

namespace steklov {

namespace {

void reject_unknown(const nlohmann::json& obj, std::initializer_list<std::string_view> allowed,
                    std::string_view where) {
  if (!obj.is_object()) fail(ErrorCode::ParseError, std::string(where) + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (auto name : allowed) known = known || it.key() == name;
    if (!known) fail(ErrorCode::ParseError, "unknown field '" + it.key() + "' in " + std::string(where));
  }
}

const nlohmann::json& require(const nlohmann::json& obj, const char* key, std::string_view where) {
  if (!obj.contains(key)) fail(ErrorCode::ParseError, std::string(where) + " lacks '" + key + "'");
  return obj.at(key);
}

double number(const nlohmann::json& v, std::string_view what) {
  if (!v.is_number()) fail(ErrorCode::ParseError, std::string(what) + " must be a number");
  return v.get<double>();
}

std::uint64_t index(const nlohmann::json& v, std::string_view what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    fail(ErrorCode::ParseError, std::string(what) + " must be a non-negative integer");
  return v.get<std::uint64_t>();
}

}  // namespace

std::string_view role_name(VertexRole role) noexcept {
  switch (role) {
    case VertexRole::Interior: return "interior";
    case VertexRole::Boundary: return "boundary";
    case VertexRole::Dirichlet: return "dirichlet";
  }
  return "interior";
}

VertexRole parse_role(std::string_view name) {
  if (name == "interior") return VertexRole::Interior;
  if (name == "boundary") return VertexRole::Boundary;
  if (name == "dirichlet") return VertexRole::Dirichlet;
  fail(ErrorCode::ParseError, "unknown role '" + std::string(name) + "'");
}

nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    nlohmann::ordered_json v;
    v["id"] = x;
    v["measure"] = g.measure(x);
    v["role"] = role_name(g.role(x));
    doc["vertices"].push_back(std::move(v));
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) {
    nlohmann::ordered_json j;
    j["u"] = e.u;
    j["v"] = e.v;
    j["w"] = e.weight;
    doc["edges"].push_back(std::move(j));
  }
  return doc;
}

Graph graph_from_json(const nlohmann::json& doc) {
  reject_unknown(doc, {"vertices", "edges"}, "graph");
  const auto& vertices = require(doc, "vertices", "graph");
  const auto& edges = require(doc, "edges", "graph");
  if (!vertices.is_array() || !edges.is_array()) fail(ErrorCode::ParseError, "vertices and edges must be arrays");

  const std::size_t n = vertices.size();
  std::vector<double> measures(n, 0.0);
  std::vector<VertexRole> roles(n, VertexRole::Interior);
  std::vector<bool> seen(n, false);
  for (const auto& v : vertices) {
    reject_unknown(v, {"id", "measure", "role"}, "vertex");
    const std::uint64_t id = index(require(v, "id", "vertex"), "vertex id");
    if (id >= n || seen[id]) fail(ErrorCode::ParseError, "vertex ids must be 0..n-1 without repeats");
    seen[id] = true;
    measures[id] = v.contains("measure") ? number(v.at("measure"), "measure") : 1.0;
    if (!(measures[id] > 0.0)) fail(ErrorCode::ParseError, "vertex " + std::to_string(id) + " has non-positive measure");
    const auto& role = require(v, "role", "vertex");
    if (!role.is_string()) fail(ErrorCode::ParseError, "role must be a string");
    roles[id] = parse_role(role.get<std::string>());
  }

  std::vector<Edge> out;
  for (const auto& e : edges) {
    reject_unknown(e, {"u", "v", "w"}, "edge");
    Edge edge;
    edge.u = static_cast<VertexId>(index(require(e, "u", "edge"), "edge endpoint"));
    edge.v = static_cast<VertexId>(index(require(e, "v", "edge"), "edge endpoint"));
    edge.weight = e.contains("w") ? number(e.at("w"), "edge weight") : 1.0;
    if (!(edge.weight > 0.0)) fail(ErrorCode::ParseError, "edge weights must be positive");
    out.push_back(edge);
  }
  try {
    return Graph::make(n, std::move(out), std::move(measures), std::move(roles));
  } catch (const Error& err) {
    fail(ErrorCode::ParseError, err.what());
  }
}

Graph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    fail(ErrorCode::ParseError, err.what());
  }
  return graph_from_json(doc);
}

std::string dump_graph(const Graph& g) {
  return graph_to_json(g).dump(2) + "\n";
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void save_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
  out << dump_graph(g);
  if (!out) fail(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace steklov
