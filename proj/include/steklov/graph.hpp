#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace steklov {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class VertexRole : std::uint8_t { Interior, Boundary, Dirichlet };

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 1.0;

  VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

struct GraphDiagnostics {
  bool connected = false;
  bool dirichlet_interior_connected = false;  // G[V \ B_D] connected
  std::vector<VertexId> leaves;               // degree <= 1
  std::vector<std::size_t> degrees;
};

/// A finite simple graph with vertex measures, edge weights and a role per
/// vertex (interior, boundary B, Dirichlet boundary B_D).
///
/// Values are immutable once built; every "mutation" returns a new graph and
/// re-runs validation, so a Graph in hand always satisfies its invariants.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds. Throws Error with DuplicateEdge, SelfLoop,
  /// NonPositiveWeight, NonPositiveMeasure or IndexOutOfRange.
  static Graph make(std::size_t n, std::vector<Edge> edges, std::vector<double> measures,
                    std::vector<VertexRole> roles);

  /// Unit weights, unit measures, boundary = vertices of degree <= 1.
  static Graph combinatorial(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const noexcept { return measures_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const double> measures() const noexcept { return measures_; }
  double measure(VertexId v) const { return measures_.at(v); }
  std::span<const VertexRole> roles() const noexcept { return roles_; }
  VertexRole role(VertexId v) const { return roles_.at(v); }
  std::span<const Incidence> incident(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  /// Edge weight, or 0 when a and b are not adjacent.
  double weight(VertexId a, VertexId b) const;

  std::vector<VertexId> vertices_with(VertexRole role) const;
  std::vector<VertexId> boundary() const { return vertices_with(VertexRole::Boundary); }
  std::vector<VertexId> dirichlet() const { return vertices_with(VertexRole::Dirichlet); }

  Graph with_roles(std::vector<VertexRole> roles) const;
  Graph with_measures(std::vector<double> measures) const;
  Graph with_weights(std::vector<double> weights) const;

  /// Removes the listed edges. Vertex set, measures and roles are unchanged.
  Graph delete_edges(std::span<const EdgeId> ids) const;
  /// Same, addressing edges by endpoints. Throws EdgeNotFound.
  Graph delete_edges(std::span<const std::pair<VertexId, VertexId>> pairs) const;

  /// Subgraph induced on `keep` (in the given order); roles, measures and
  /// weights are inherited.
  Graph induced(std::span<const VertexId> keep) const;

  /// Connected components, each sorted ascending; components are ordered by
  /// their smallest vertex.
  std::vector<std::vector<VertexId>> components() const;
  /// Component index per vertex, consistent with components().
  std::vector<std::size_t> component_labels() const;

  bool connected() const;
  bool is_tree() const;
  bool is_unit_weight() const;
  GraphDiagnostics diagnostics() const;

  bool operator==(const Graph& other) const;

 private:
  void build_adjacency();

  std::vector<Edge> edges_;
  std::vector<double> measures_;
  std::vector<VertexRole> roles_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Roles of a combinatorial graph: Boundary where degree <= 1, Interior
/// otherwise, no Dirichlet vertices.
std::vector<VertexRole> combinatorial_boundary(const Graph& g);

/// Components of g[subset] (subset given as a membership mask).
std::vector<std::vector<VertexId>> components_of_subset(const Graph& g, const std::vector<bool>& member);

}  // namespace steklov
