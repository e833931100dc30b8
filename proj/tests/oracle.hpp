#pragma once

// Independent reference computations built on Eigen. They share nothing with
// the library's own solvers beyond the Graph accessors.

#include <algorithm>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "steklov/graph.hpp"

namespace oracle {

using steklov::Graph;
using steklov::VertexId;
using steklov::VertexRole;

inline Eigen::MatrixXd laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    L(e.u, e.u) += e.weight;
    L(e.v, e.v) += e.weight;
    L(e.u, e.v) -= e.weight;
    L(e.v, e.u) -= e.weight;
  }
  return L;
}

inline std::vector<double> sorted(const Eigen::VectorXd& v) {
  std::vector<double> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<double> laplacian_spectrum(const Graph& g) {
  const Eigen::MatrixXd L = laplacian(g);
  Eigen::VectorXd m(L.rows());
  for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = g.measure(static_cast<VertexId>(i));
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(L, m.asDiagonal().toDenseMatrix());
  return sorted(es.eigenvalues());
}

/// DtN matrix on B (Dirichlet vertices eliminated with zero data).
inline Eigen::MatrixXd dtn(const Graph& g) {
  const Eigen::MatrixXd L = laplacian(g);
  std::vector<Eigen::Index> b, o;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (g.role(x) == VertexRole::Boundary) b.push_back(x);
    if (g.role(x) == VertexRole::Interior) o.push_back(x);
  }
  const auto nb = static_cast<Eigen::Index>(b.size());
  const auto no = static_cast<Eigen::Index>(o.size());
  Eigen::MatrixXd Lbb(nb, nb), Lbo(nb, no), Loo(no, no);
  for (Eigen::Index i = 0; i < nb; ++i) {
    for (Eigen::Index j = 0; j < nb; ++j) Lbb(i, j) = L(b[i], b[j]);
    for (Eigen::Index j = 0; j < no; ++j) Lbo(i, j) = L(b[i], o[j]);
  }
  for (Eigen::Index i = 0; i < no; ++i)
    for (Eigen::Index j = 0; j < no; ++j) Loo(i, j) = L(o[i], o[j]);
  if (no == 0) return Lbb;
  return Lbb - Lbo * Loo.fullPivLu().solve(Lbo.transpose());
}

inline std::vector<double> steklov_spectrum(const Graph& g) {
  const Eigen::MatrixXd S = dtn(g);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(S.rows(), S.cols());
  Eigen::Index k = 0;
  for (VertexId x = 0; x < g.vertex_count(); ++x)
    if (g.role(x) == VertexRole::Boundary) M(k, k) = g.measure(x), ++k;
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (S + S.transpose()), M);
  return sorted(es.eigenvalues());
}

/// Random connected graph: random spanning tree plus extra edges, random
/// weights and measures, combinatorial roles unless some leaves exist.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double extra_prob, bool unit = false) {
  std::uniform_real_distribution<double> w(0.3, 3.0);
  std::bernoulli_distribution extra(extra_prob);
  std::vector<steklov::Edge> edges;
  for (VertexId x = 1; x < n; ++x) {
    std::uniform_int_distribution<VertexId> pick(0, x - 1);
    edges.push_back({pick(rng), x, unit ? 1.0 : w(rng)});
  }
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = x + 1; y < n; ++y) {
      bool present = false;
      for (const auto& e : edges) present |= (e.u == x && e.v == y) || (e.u == y && e.v == x);
      if (!present && extra(rng)) edges.push_back({x, y, unit ? 1.0 : w(rng)});
    }
  std::vector<double> m(n, 1.0);
  if (!unit)
    for (double& v : m) v = w(rng);
  std::vector<VertexRole> roles(n, VertexRole::Interior);
  Graph g = Graph::make(n, edges, m, roles);
  roles = steklov::combinatorial_boundary(g);
  if (std::count(roles.begin(), roles.end(), VertexRole::Boundary) == 0) roles[0] = VertexRole::Boundary;
  return g.with_roles(roles);
}

}  // namespace oracle

namespace oracle {

/// Host graph, a connected spanning subgraph with the same vertex ids, and
/// a boundary B containing the host boundary.
struct SubgraphPair {
  Graph big;
  Graph small;
};

inline SubgraphPair random_subgraph_pair(std::mt19937_64& rng, std::size_t n, double extra_prob) {
  std::bernoulli_distribution coin(0.5), keep(0.4);
  Graph big = random_graph(rng, n, extra_prob);
  // Spanning tree by DFS, then a random share of the remaining edges.
  std::vector<bool> seen(n, false), tree_edge(big.edge_count(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const auto& inc : big.incident(x))
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        tree_edge[inc.edge] = true;
        stack.push_back(inc.neighbor);
      }
  }
  std::vector<steklov::EdgeId> drop;
  for (steklov::EdgeId e = 0; e < big.edge_count(); ++e)
    if (!tree_edge[e] && !keep(rng)) drop.push_back(e);
  std::vector<VertexRole> roles(big.roles().begin(), big.roles().end());
  for (auto& r : roles)
    if (r == VertexRole::Interior && coin(rng) && coin(rng)) r = VertexRole::Boundary;
  Graph small = big.delete_edges(drop).with_roles(roles);
  return {std::move(big), std::move(small)};
}

}  // namespace oracle
