#pragma once

#include <optional>
#include <span>
#include <vector>

#include "steklov/graph.hpp"
#include "steklov/rational.hpp"

namespace steklov {

/// Geometric representation: each edge {x, y} becomes a segment of length
/// 1 / w_xy.
struct MetricGraph {
  Graph graph;
  std::vector<double> lengths;  // per edge id
};

MetricGraph metric_realization(const Graph& g);

/// A point of |K(G)|: a vertex, or an interior point of an edge at distance
/// `offset` from the edge's `u` endpoint.
struct GeometricPoint {
  enum class Kind { Vertex, Edge };
  Kind kind = Kind::Vertex;
  VertexId vertex = 0;
  EdgeId edge = 0;
  double offset = 0.0;

  static GeometricPoint at_vertex(VertexId v) { return {Kind::Vertex, v, 0, 0.0}; }
  static GeometricPoint on_edge(EdgeId e, double t) { return {Kind::Edge, 0, e, t}; }
  bool is_vertex() const noexcept { return kind == Kind::Vertex; }
  bool operator==(const GeometricPoint&) const = default;
};

/// Piecewise-linear extension of f evaluated at p.
double pl_value(const MetricGraph& mg, std::span<const double> f, const GeometricPoint& p);

struct ZeroSet {
  double threshold = 0.0;                // |f(x)| <= threshold counts as zero
  std::vector<bool> zero_vertex;         // per vertex
  std::vector<GeometricPoint> points;    // zero vertices, then interior edge zeros
  std::vector<EdgeId> zero_edges;        // edges with both endpoints zero
};

/// Vertices with |f| <= tau_zero * ||f||_inf, one interior zero on each edge
/// whose endpoint values change sign strictly, and edges vanishing entirely.
ZeroSet zero_set(const Graph& g, std::span<const double> f, double tau_zero = 1e-9);

// --- clump numbers (unit-length trees) -------------------------------------

struct Clump {
  double length = 0.0;
  std::vector<VertexId> vertices;  // vertices of G inside the clump
};

struct ClumpReport {
  GeometricPoint point;
  std::vector<Clump> clumps;
  double value = 0.0;   // Clump(T, p)
  bool equilibrium = false;
};

/// Clumps of the unit-length tree T with respect to an arbitrary point.
ClumpReport clump_at(const Graph& tree, const GeometricPoint& p);

struct ClumpNumber {
  Rational value{0};          // integer or half-integer
  GeometricPoint equilibrium;  // the unique minimiser
  ClumpReport report;          // clumps at the equilibrium point
};

/// Minimum of Clump(T, p) over vertices and edge midpoints. Throws NotATree
/// or NotUnitWeight.
ClumpNumber clump_number(const Graph& tree);

/// Clump(T, v) as an exact integer (the size of the largest branch at v).
std::int64_t clump_at_vertex(const Graph& tree, VertexId v);

// --- nodal domains -------------------------------------------------------------

struct NodalDomain {
  int sign = 1;
  std::vector<VertexId> vertices;          // vertices of G inside U
  std::vector<VertexId> zero_vertices;     // vertices of G on the frontier of U
  std::vector<GeometricPoint> cut_points;  // interior edge zeros on the frontier
  Graph induced;                           // G_U
  std::vector<GeometricPoint> origin;      // point of |K(G)| behind each vertex of G_U
  std::vector<double> restriction;         // f on V(G_U), zero on B_D(G_U)
};

struct NodalDecomposition {
  ZeroSet zeros;
  std::vector<NodalDomain> domains;
  /// The zero set contains a boundary vertex or a whole edge; the nodal
  /// theorem is not asserted for such eigenfunctions.
  bool degenerate = false;
};

/// Connected components of |K(G)| minus the zero set of f, each with its
/// induced graph. Throws AllZero.
NodalDecomposition nodal_domains(const Graph& g, std::span<const double> f, double tau_zero = 1e-9);

struct DomainVerdict {
  double lambda1 = 0.0;
  double deviation = 0.0;  // |lambda_1(G_U) - sigma|
  bool one_signed = false;
  double residual = 0.0;   // eigen-equation residual of f restricted to G_U
  bool admissible = false; // Omega_D nonempty, connected, and B(G_U) nonempty
  bool ok = false;
};

struct NodalVerdict {
  bool degenerate = false;
  std::vector<DomainVerdict> domains;
  bool ok = false;
};

/// For every nodal domain U of the eigenfunction f (with eigenvalue sigma),
/// checks lambda_1(G_U) = sigma and that f restricted to G_U is its first
/// eigenfunction.
NodalVerdict verify_nodal_theorem(const Graph& g, double sigma, std::span<const double> f, double tol = 1e-8,
                                  double tau_zero = 1e-9);

}  // namespace steklov
