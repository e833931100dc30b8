#include "steklov/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "steklov/error.hpp"

namespace steklov {

namespace {

std::pair<VertexId, VertexId> ordered(VertexId a, VertexId b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

Graph Graph::make(std::size_t n, std::vector<Edge> edges, std::vector<double> measures,
                  std::vector<VertexRole> roles) {
  if (measures.size() != n || roles.size() != n)
    fail(ErrorCode::IndexOutOfRange, "measure/role lists must have one entry per vertex");
  for (std::size_t x = 0; x < n; ++x) {
    if (!(measures[x] > 0.0))
      fail(ErrorCode::NonPositiveMeasure, "vertex " + std::to_string(x) + " has non-positive measure");
  }
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      fail(ErrorCode::IndexOutOfRange,
           "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} references a missing vertex");
    if (e.u == e.v) fail(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    if (!(e.weight > 0.0))
      fail(ErrorCode::NonPositiveWeight,
           "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} has non-positive weight");
    if (!seen.insert(ordered(e.u, e.v)).second)
      fail(ErrorCode::DuplicateEdge, "duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
  }
  Graph g;
  g.edges_ = std::move(edges);
  g.measures_ = std::move(measures);
  g.roles_ = std::move(roles);
  g.build_adjacency();
  return g;
}

Graph Graph::combinatorial(std::size_t n, std::span<const std::pair<VertexId, VertexId>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back({a, b, 1.0});
  Graph g = make(n, std::move(edges), std::vector<double>(n, 1.0), std::vector<VertexRole>(n, VertexRole::Interior));
  return g.with_roles(combinatorial_boundary(g));
}

void Graph::build_adjacency() {
  adjacency_.assign(measures_.size(), {});
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    adjacency_[edges_[e].u].push_back({edges_[e].v, e});
    adjacency_[edges_[e].v].push_back({edges_[e].u, e});
  }
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a >= vertex_count() || b >= vertex_count()) return std::nullopt;
  for (const Incidence& inc : adjacency_[a])
    if (inc.neighbor == b) return inc.edge;
  return std::nullopt;
}

double Graph::weight(VertexId a, VertexId b) const {
  const auto e = find_edge(a, b);
  return e ? edges_[*e].weight : 0.0;
}

std::vector<VertexId> Graph::vertices_with(VertexRole role) const {
  std::vector<VertexId> out;
  for (VertexId x = 0; x < roles_.size(); ++x)
    if (roles_[x] == role) out.push_back(x);
  return out;
}

Graph Graph::with_roles(std::vector<VertexRole> roles) const {
  return make(vertex_count(), edges_, measures_, std::move(roles));
}

Graph Graph::with_measures(std::vector<double> measures) const {
  return make(vertex_count(), edges_, std::move(measures), roles_);
}

Graph Graph::with_weights(std::vector<double> weights) const {
  if (weights.size() != edges_.size()) fail(ErrorCode::IndexOutOfRange, "one weight per edge required");
  std::vector<Edge> edges = edges_;
  for (std::size_t e = 0; e < edges.size(); ++e) edges[e].weight = weights[e];
  return make(vertex_count(), std::move(edges), measures_, roles_);
}

Graph Graph::delete_edges(std::span<const EdgeId> ids) const {
  std::vector<bool> drop(edges_.size(), false);
  for (EdgeId e : ids) {
    if (e >= edges_.size()) fail(ErrorCode::EdgeNotFound, "edge index " + std::to_string(e) + " out of range");
    drop[e] = true;
  }
  std::vector<Edge> kept;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (!drop[e]) kept.push_back(edges_[e]);
  return make(vertex_count(), std::move(kept), measures_, roles_);
}

Graph Graph::delete_edges(std::span<const std::pair<VertexId, VertexId>> pairs) const {
  std::vector<EdgeId> ids;
  for (auto [a, b] : pairs) {
    const auto e = find_edge(a, b);
    if (!e) fail(ErrorCode::EdgeNotFound, "no edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    ids.push_back(*e);
  }
  return delete_edges(ids);
}

Graph Graph::induced(std::span<const VertexId> keep) const {
  std::vector<std::int64_t> position(vertex_count(), -1);
  std::vector<double> measures;
  std::vector<VertexRole> roles;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] >= vertex_count()) fail(ErrorCode::IndexOutOfRange, "induced: vertex out of range");
    position[keep[k]] = static_cast<std::int64_t>(k);
    measures.push_back(measures_[keep[k]]);
    roles.push_back(roles_[keep[k]]);
  }
  std::vector<Edge> edges;
  for (const Edge& e : edges_) {
    if (position[e.u] >= 0 && position[e.v] >= 0)
      edges.push_back({static_cast<VertexId>(position[e.u]), static_cast<VertexId>(position[e.v]), e.weight});
  }
  return make(keep.size(), std::move(edges), std::move(measures), std::move(roles));
}

std::vector<std::size_t> Graph::component_labels() const {
  const std::size_t n = vertex_count();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, unset);
  std::size_t next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] != unset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (const Incidence& inc : adjacency_[x]) {
        if (label[inc.neighbor] == unset) {
          label[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<VertexId>> Graph::components() const {
  const auto label = component_labels();
  std::size_t count = 0;
  for (std::size_t l : label) count = std::max(count, l + 1);
  std::vector<std::vector<VertexId>> out(count);
  for (VertexId x = 0; x < label.size(); ++x) out[label[x]].push_back(x);
  return out;
}

bool Graph::connected() const {
  return vertex_count() <= 1 || components().size() == 1;
}

bool Graph::is_tree() const {
  return vertex_count() >= 1 && edge_count() + 1 == vertex_count() && connected();
}

bool Graph::is_unit_weight() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight == 1.0; }) &&
         std::all_of(measures_.begin(), measures_.end(), [](double m) { return m == 1.0; });
}

GraphDiagnostics Graph::diagnostics() const {
  GraphDiagnostics d;
  d.connected = connected();
  std::vector<bool> member(vertex_count());
  for (VertexId x = 0; x < vertex_count(); ++x) {
    member[x] = roles_[x] != VertexRole::Dirichlet;
    d.degrees.push_back(degree(x));
    if (degree(x) <= 1) d.leaves.push_back(x);
  }
  d.dirichlet_interior_connected = components_of_subset(*this, member).size() <= 1;
  return d;
}

bool Graph::operator==(const Graph& other) const {
  return edges_ == other.edges_ && measures_ == other.measures_ && roles_ == other.roles_;
}

std::vector<VertexRole> combinatorial_boundary(const Graph& g) {
  std::vector<VertexRole> roles(g.vertex_count(), VertexRole::Interior);
  for (VertexId x = 0; x < g.vertex_count(); ++x)
    if (g.degree(x) <= 1) roles[x] = VertexRole::Boundary;
  return roles;
}

std::vector<std::vector<VertexId>> components_of_subset(const Graph& g, const std::vector<bool>& member) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (!member[s] || seen[s]) continue;
    out.emplace_back();
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (const Incidence& inc : g.incident(x)) {
        if (member[inc.neighbor] && !seen[inc.neighbor]) {
          seen[inc.neighbor] = true;
          stack.push_back(inc.neighbor);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

}  // namespace steklov
