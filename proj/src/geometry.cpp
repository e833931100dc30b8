#include "steklov/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "steklov/error.hpp"
#include "steklov/spectral.hpp"

namespace steklov {

MetricGraph metric_realization(const Graph& g) {
  MetricGraph mg{g, {}};
  mg.lengths.reserve(g.edge_count());
  for (const Edge& e : g.edges()) mg.lengths.push_back(1.0 / e.weight);
  return mg;
}

double pl_value(const MetricGraph& mg, std::span<const double> f, const GeometricPoint& p) {
  if (p.is_vertex()) return f[p.vertex];
  const Edge& e = mg.graph.edge(p.edge);
  const double len = mg.lengths[p.edge];
  const double s = p.offset / len;
  return (1.0 - s) * f[e.u] + s * f[e.v];
}

ZeroSet zero_set(const Graph& g, std::span<const double> f, double tau_zero) {
  ZeroSet z;
  double fmax = 0.0;
  for (double v : f) fmax = std::max(fmax, std::abs(v));
  z.threshold = tau_zero * fmax;
  z.zero_vertex.assign(g.vertex_count(), false);
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (std::abs(f[x]) <= z.threshold) {
      z.zero_vertex[x] = true;
      z.points.push_back(GeometricPoint::at_vertex(x));
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const bool zu = z.zero_vertex[ed.u], zv = z.zero_vertex[ed.v];
    if (zu && zv) {
      z.zero_edges.push_back(e);
    } else if (!zu && !zv && (f[ed.u] > 0) != (f[ed.v] > 0)) {
      const double a = std::abs(f[ed.u]), b = std::abs(f[ed.v]);
      z.points.push_back(GeometricPoint::on_edge(e, a / (a + b) / ed.weight));
    }
  }
  return z;
}

namespace {

void require_unit_tree(const Graph& tree) {
  if (!tree.is_tree()) fail(ErrorCode::NotATree, "clump numbers are defined for trees");
  if (!tree.is_unit_weight()) fail(ErrorCode::NotUnitWeight, "clump numbers need unit edge lengths");
}

// Vertices reachable from `start` without passing through `blocked`.
std::vector<VertexId> branch(const Graph& g, VertexId start, VertexId blocked) {
  std::vector<VertexId> out{start};
  std::vector<bool> seen(g.vertex_count(), false);
  seen[start] = seen[blocked] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const Incidence& inc : g.incident(out[k]))
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        out.push_back(inc.neighbor);
      }
  std::sort(out.begin(), out.end());
  return out;
}

ClumpReport raw_clump_at(const Graph& tree, const GeometricPoint& p) {
  ClumpReport r;
  r.point = p;
  if (p.is_vertex()) {
    if (p.vertex >= tree.vertex_count()) fail(ErrorCode::IndexOutOfRange, "clump point vertex out of range");
    for (const Incidence& inc : tree.incident(p.vertex)) {
      auto verts = branch(tree, inc.neighbor, p.vertex);
      r.clumps.push_back({static_cast<double>(verts.size()), std::move(verts)});
    }
  } else {
    if (p.edge >= tree.edge_count()) fail(ErrorCode::IndexOutOfRange, "clump point edge out of range");
    if (!(p.offset > 0.0 && p.offset < 1.0)) fail(ErrorCode::InvalidParams, "edge points need an offset in (0, 1)");
    const Edge& e = tree.edge(p.edge);
    auto su = branch(tree, e.u, e.v);
    auto sv = branch(tree, e.v, e.u);
    const double lu = p.offset + static_cast<double>(su.size() - 1);
    const double lv = (1.0 - p.offset) + static_cast<double>(sv.size() - 1);
    r.clumps.push_back({lu, std::move(su)});
    r.clumps.push_back({lv, std::move(sv)});
  }
  for (const Clump& c : r.clumps) r.value = std::max(r.value, c.length);
  return r;
}

// Subtree sizes with the tree rooted at 0.
struct Rooting {
  std::vector<VertexId> parent;
  std::vector<std::int64_t> size;
};

Rooting root_at_zero(const Graph& tree) {
  const std::size_t n = tree.vertex_count();
  Rooting r{std::vector<VertexId>(n, 0), std::vector<std::int64_t>(n, 1)};
  std::vector<VertexId> order{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (const Incidence& inc : tree.incident(order[k]))
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        r.parent[inc.neighbor] = order[k];
        order.push_back(inc.neighbor);
      }
  for (std::size_t k = order.size(); k-- > 1;) r.size[r.parent[order[k]]] += r.size[order[k]];
  return r;
}

}  // namespace

std::int64_t clump_at_vertex(const Graph& tree, VertexId v) {
  require_unit_tree(tree);
  const Rooting r = root_at_zero(tree);
  const auto n = static_cast<std::int64_t>(tree.vertex_count());
  std::int64_t best = v == 0 ? 0 : n - r.size[v];
  for (const Incidence& inc : tree.incident(v))
    if (inc.neighbor != r.parent[v] || v == 0) best = std::max(best, r.size[inc.neighbor]);
  return best;
}

ClumpNumber clump_number(const Graph& tree) {
  require_unit_tree(tree);
  const std::size_t n = tree.vertex_count();
  const Rooting r = root_at_zero(tree);
  const auto total = static_cast<std::int64_t>(n);

  // Values are doubled so that half-integers stay integral.
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<GeometricPoint> argmin;
  auto offer = [&](std::int64_t twice, GeometricPoint p) {
    if (twice < best) {
      best = twice;
      argmin = {p};
    } else if (twice == best) {
      argmin.push_back(p);
    }
  };
  for (VertexId v = 0; v < n; ++v) {
    std::int64_t m = v == 0 ? 0 : total - r.size[v];
    for (const Incidence& inc : tree.incident(v))
      if (v == 0 || inc.neighbor != r.parent[v]) m = std::max(m, r.size[inc.neighbor]);
    offer(2 * m, GeometricPoint::at_vertex(v));
  }
  for (EdgeId e = 0; e < tree.edge_count(); ++e) {
    const Edge& ed = tree.edge(e);
    const VertexId child = r.parent[ed.v] == ed.u && ed.v != 0 ? ed.v : ed.u;
    const std::int64_t a = r.size[child] - 1, b = total - r.size[child] - 1;
    offer(2 * std::max(a, b) + 1, GeometricPoint::on_edge(e, 0.5));
  }
  if (argmin.size() != 1)
    fail(ErrorCode::CertificationFailed, "equilibrium point of a tree is not unique");

  ClumpNumber out;
  out.value = Rational(best, 2);
  out.equilibrium = argmin.front();
  out.report = raw_clump_at(tree, out.equilibrium);
  out.report.equilibrium = true;
  return out;
}

ClumpReport clump_at(const Graph& tree, const GeometricPoint& p) {
  require_unit_tree(tree);
  ClumpReport r = raw_clump_at(tree, p);
  r.equilibrium = clump_number(tree).equilibrium == p;
  return r;
}

namespace {

struct DisjointSets {
  std::vector<VertexId> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  VertexId find(VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(VertexId a, VertexId b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

NodalDecomposition nodal_domains(const Graph& g, std::span<const double> f, double tau_zero) {
  const std::size_t n = g.vertex_count();
  if (f.size() != n) fail(ErrorCode::IndexOutOfRange, "function must have one value per vertex");
  double fmax = 0.0;
  for (double v : f) fmax = std::max(fmax, std::abs(v));
  if (!(fmax > 0.0)) fail(ErrorCode::AllZero, "function vanishes identically");

  NodalDecomposition out;
  out.zeros = zero_set(g, f, tau_zero);
  const auto& zero = out.zeros.zero_vertex;
  auto sign = [&](VertexId x) { return zero[x] ? 0 : (f[x] > 0 ? 1 : -1); };

  out.degenerate = !out.zeros.zero_edges.empty();
  for (VertexId x = 0; x < n; ++x)
    if (zero[x] && g.role(x) == VertexRole::Boundary) out.degenerate = true;

  DisjointSets ds(n);
  for (const Edge& e : g.edges())
    if (sign(e.u) != 0 && sign(e.u) == sign(e.v)) ds.unite(e.u, e.v);

  std::map<VertexId, std::size_t> domain_of_root;
  for (VertexId x = 0; x < n; ++x) {
    if (zero[x]) continue;
    const VertexId root = ds.find(x);
    auto [it, fresh] = domain_of_root.emplace(root, out.domains.size());
    if (fresh) {
      out.domains.emplace_back();
      out.domains.back().sign = sign(x);
    }
    out.domains[it->second].vertices.push_back(x);
  }

  for (NodalDomain& dom : out.domains) {
    std::vector<std::int64_t> local(n, -1);
    std::vector<double> measures;
    std::vector<VertexRole> roles;
    for (VertexId x : dom.vertices) {
      local[x] = static_cast<std::int64_t>(dom.origin.size());
      dom.origin.push_back(GeometricPoint::at_vertex(x));
      dom.restriction.push_back(f[x]);
      measures.push_back(g.measure(x));
      roles.push_back(g.role(x) == VertexRole::Boundary ? VertexRole::Boundary : VertexRole::Interior);
    }
    auto add_frontier = [&](GeometricPoint p) {
      dom.origin.push_back(p);
      dom.restriction.push_back(0.0);
      measures.push_back(1.0);
      roles.push_back(VertexRole::Dirichlet);
      return static_cast<VertexId>(dom.origin.size() - 1);
    };
    std::map<VertexId, VertexId> zero_local;
    std::vector<Edge> edges;
    for (VertexId x : dom.vertices) {
      const auto lx = static_cast<VertexId>(local[x]);
      for (const Incidence& inc : g.incident(x)) {
        const VertexId y = inc.neighbor;
        const Edge& e = g.edge(inc.edge);
        if (sign(y) == dom.sign) {
          if (x < y) edges.push_back({lx, static_cast<VertexId>(local[y]), e.weight});
        } else if (sign(y) == 0) {
          auto it = zero_local.find(y);
          if (it == zero_local.end()) {
            it = zero_local.emplace(y, add_frontier(GeometricPoint::at_vertex(y))).first;
            dom.zero_vertices.push_back(y);
          }
          edges.push_back({lx, it->second, e.weight});
        } else {
          const double a = std::abs(f[x]), b = std::abs(f[y]);
          const double frac = a / (a + b);  // share of the edge on x's side
          const double len = 1.0 / e.weight;
          const double from_u = x == e.u ? frac * len : len - frac * len;
          const GeometricPoint cut = GeometricPoint::on_edge(inc.edge, from_u);
          dom.cut_points.push_back(cut);
          edges.push_back({lx, add_frontier(cut), e.weight / frac});
        }
      }
    }
    std::sort(dom.zero_vertices.begin(), dom.zero_vertices.end());
    const std::size_t m = dom.origin.size();
    dom.induced = Graph::make(m, std::move(edges), std::move(measures), std::move(roles));
  }
  return out;
}

NodalVerdict verify_nodal_theorem(const Graph& g, double sigma, std::span<const double> f, double tol, double tau_zero) {
  NodalVerdict out;
  const NodalDecomposition dec = nodal_domains(g, f, tau_zero);
  out.degenerate = dec.degenerate;
  if (dec.degenerate) {
    out.ok = true;
    return out;
  }
  out.ok = true;
  for (const NodalDomain& dom : dec.domains) {
    DomainVerdict v;
    const Graph& gu = dom.induced;
    const GraphDiagnostics diag = gu.diagnostics();
    v.admissible = !gu.boundary().empty() && !gu.dirichlet().empty() && diag.dirichlet_interior_connected;
    if (v.admissible) {
      const SpectralResult r = dirichlet_steklov_spectrum(gu);
      v.lambda1 = r.values.front();
      v.deviation = std::abs(v.lambda1 - sigma);
      v.one_signed = true;
      for (VertexId x = 0; x < gu.vertex_count(); ++x)
        if (gu.role(x) != VertexRole::Dirichlet && !(r.extended.front()[x] > 0.0)) v.one_signed = false;
      // f restricted to G_U must itself solve the eigenproblem.
      double scale = 0.0;
      for (double val : dom.restriction) scale = std::max(scale, std::abs(val));
      const auto lap = apply_laplacian(gu, dom.restriction);
      for (VertexId x = 0; x < gu.vertex_count(); ++x) {
        double res = 0.0;
        if (gu.role(x) == VertexRole::Interior) res = std::abs(lap[x]);
        if (gu.role(x) == VertexRole::Boundary) res = std::abs(-lap[x] - sigma * dom.restriction[x]);
        v.residual = std::max(v.residual, res / scale);
      }
      v.ok = v.deviation <= tol * std::max(1.0, sigma) && v.one_signed && v.residual <= tol;
    }
    out.ok = out.ok && v.ok;
    out.domains.push_back(v);
  }
  return out;
}

}  // namespace steklov
