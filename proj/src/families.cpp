#include "steklov/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/constants/constants.hpp>

#include "steklov/error.hpp"

namespace steklov {

namespace {

using nlohmann::ordered_json;

void require(bool ok, const std::string& msg) {
  if (!ok) fail(ErrorCode::InvalidParams, msg);
}

void validate(const BroomParams& p) {
  require(p.l > 0, "broom length l must be positive");
  require(p.i >= 0 && p.d >= 0, "broom parameters i and d must be non-negative");
}

// Candidate path lengths from the case table of Lambda(l, n).
std::vector<int> split_candidates(const Rational& l, int n) {
  if (n <= 1) return {n};
  if (l >= n) return {0};
  const Rational half = (Rational(n) - l) / 2;
  const Rational f = frac(half);
  const auto lo = static_cast<int>(floor(half));
  if (f < Rational(1, 2)) return {lo};
  if (f > Rational(1, 2)) return {lo + 1};
  return {lo, lo + 1};
}

FamilyGraph broom_graph(double l, const BroomParams& shape) {
  const int i = shape.i;
  const int d = shape.d;
  const std::size_t n = static_cast<std::size_t>(2 + i + d);
  std::vector<Edge> edges;
  edges.push_back({0, 1, 1.0 / l});
  for (int j = 0; j < i; ++j) edges.push_back({static_cast<VertexId>(1 + j), static_cast<VertexId>(2 + j), 1.0});
  const auto vi = static_cast<VertexId>(1 + i);
  for (int k = 0; k < d; ++k) edges.push_back({vi, static_cast<VertexId>(2 + i + k), 1.0});
  std::vector<VertexRole> roles(n, VertexRole::Interior);
  roles[0] = VertexRole::Dirichlet;
  if (d == 0) roles[vi] = VertexRole::Boundary;
  for (int k = 0; k < d; ++k) roles[2 + i + k] = VertexRole::Boundary;

  FamilyGraph out{Graph::make(n, std::move(edges), std::vector<double>(n, 1.0), std::move(roles)), "broom", {}, {}};
  out.landmarks.emplace_back("o", 0);
  for (int j = 0; j <= i; ++j) out.landmarks.emplace_back("v" + std::to_string(j), static_cast<VertexId>(1 + j));
  for (int k = 0; k < d; ++k) out.landmarks.emplace_back("u" + std::to_string(k + 1), static_cast<VertexId>(2 + i + k));
  return out;
}

RootedTree tree_from(const Graph& g, VertexId root) { return RootedTree{g, root}; }

}  // namespace

BroomParams BroomParams::normalized() const {
  if (d == 1) return {l, i + 1, 0};
  return *this;
}

std::string to_string(const BroomParams& p) {
  return "Br(" + to_string(p.l) + "," + std::to_string(p.i) + "," + std::to_string(p.d) + ")";
}

std::optional<VertexId> FamilyGraph::landmark(std::string_view name) const {
  for (const auto& [key, v] : landmarks)
    if (key == name) return v;
  return std::nullopt;
}

FamilyGraph build_broom(const BroomParams& params) {
  validate(params);
  const BroomParams p = params.normalized();
  FamilyGraph out = broom_graph(to_double(p.l), p);
  out.params = ordered_json{{"l", to_string(p.l)}, {"i", p.i}, {"d", p.d}};
  return out;
}

FamilyGraph build_broom(double l, int i, int d) {
  require(std::isfinite(l) && l > 0.0, "broom length l must be positive");
  require(i >= 0 && d >= 0, "broom parameters i and d must be non-negative");
  const BroomParams p = BroomParams{1, i, d}.normalized();
  FamilyGraph out = broom_graph(l, p);
  out.params = ordered_json{{"l", l}, {"i", p.i}, {"d", p.d}};
  return out;
}

Rational broom_lambda1(const BroomParams& params) {
  validate(params);
  const Rational li = params.l + params.i;
  if (params.d == 0) return Rational(1) / li;
  return Rational(1) / (Rational(1) + li * params.d);
}

std::vector<Rational> broom_eigenfunction(const BroomParams& params) {
  validate(params);
  const BroomParams p = params.normalized();
  std::vector<Rational> f(static_cast<std::size_t>(2 + p.i + p.d), Rational(0));
  const Rational li = p.l + p.i;
  for (int j = 0; j <= p.i; ++j) {
    const Rational lj = p.l + j;
    f[1 + j] = p.d == 0 ? lj / li : lj * p.d / (Rational(1) + li * p.d);
  }
  for (int k = 0; k < p.d; ++k) f[2 + p.i + k] = 1;
  return f;
}

MinimalBroomSolution minimal_broom(const Rational& l, int n) {
  require(l > 0, "minimal broom length l must be positive");
  require(n >= 0, "minimal broom size n must be non-negative");
  MinimalBroomSolution out;
  out.l = l;
  out.n = n;
  out.split_indices = split_candidates(l, n);
  for (int i : out.split_indices) {
    const BroomParams p = BroomParams{l, i, n - i}.normalized();
    if (std::find(out.minimizers.begin(), out.minimizers.end(), p) == out.minimizers.end()) out.minimizers.push_back(p);
  }
  out.value = broom_lambda1(out.minimizers.front());
  return out;
}

MinimalBroomSolution minimal_broom_total(const Rational& l) {
  require(l > 0, "minimal broom length l must be positive");
  MinimalBroomSolution out = l.denominator() == 1 ? minimal_broom(Rational(1), static_cast<int>(l.numerator()) - 1)
                                                  : minimal_broom(frac(l), static_cast<int>(floor(l)));
  return out;
}

Extended lambda_total(const Extended& l) {
  require(l > 0, "Lambda(l) needs l > 0");
  if (l <= 2) return Extended(1) / l;
  const Extended k = boost::multiprecision::floor((l + 1) / 2);
  return Extended(1) / (1 + k * (l - k));
}

std::vector<std::pair<int, int>> minimal_broom_total_shapes(const Extended& l) {
  require(l > 0, "minimal broom length l must be positive");
  const Extended fl = boost::multiprecision::floor(l);
  if (fl == l) {
    const auto sol = minimal_broom_total(Rational(static_cast<std::int64_t>(fl)));
    std::vector<std::pair<int, int>> out;
    for (const auto& p : sol.minimizers) out.emplace_back(p.i, p.d);
    return out;
  }
  const int n = static_cast<int>(fl);
  const Extended lf = l - fl;
  int i = 0;
  if (n <= 1) {
    i = n;
  } else {
    const Extended half = (Extended(n) - lf) / 2;
    const Extended f = half - boost::multiprecision::floor(half);
    i = static_cast<int>(boost::multiprecision::floor(half)) + (f > Extended(0.5) ? 1 : 0);
  }
  const BroomParams p = BroomParams{1, i, n - i}.normalized();
  return {{p.i, p.d}};
}

RootedTree broom_arm(const BroomParams& params) {
  const FamilyGraph fg = build_broom(params);
  return tree_from(fg.graph, 0);
}

RootedTree broom_tooth(int i, int d) {
  require(i >= 0 && d >= 0, "broom parameters i and d must be non-negative");
  const BroomParams p = BroomParams{1, i, d}.normalized();
  // v_0 .. v_i then pendants, rooted at v_0.
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int j = 0; j < p.i; ++j) edges.emplace_back(j, j + 1);
  for (int k = 0; k < p.d; ++k) edges.emplace_back(p.i, p.i + 1 + k);
  return rooted_tree(static_cast<std::size_t>(1 + p.i + p.d), edges, 0);
}

RootedTree rooted_path(int length) {
  require(length >= 0, "path length must be non-negative");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int j = 0; j < length; ++j) edges.emplace_back(j, j + 1);
  return rooted_tree(static_cast<std::size_t>(length + 1), edges, 0);
}

RootedTree rooted_tree(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges, VertexId root) {
  require(n >= 1 && root < n, "rooted tree needs a root inside its vertex set");
  Graph g = Graph::combinatorial(n, edges);
  require(g.is_tree(), "rooted tree edge list is not a tree");
  return {std::move(g), root};
}

FamilyGraph build_dumbbell(int d0, int i, int d1) {
  require(d0 >= 0 && d1 >= 0 && i >= 1, "dumbbell needs d0, d1 >= 0 and i >= 1");
  const std::size_t n = static_cast<std::size_t>(i + 1 + d0 + d1);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int j = 0; j < i; ++j) edges.emplace_back(j, j + 1);
  for (int k = 0; k < d0; ++k) edges.emplace_back(0, i + 1 + k);
  for (int k = 0; k < d1; ++k) edges.emplace_back(i, i + 1 + d0 + k);
  FamilyGraph out{Graph::combinatorial(n, edges), "dumbbell", ordered_json{{"d0", d0}, {"i", i}, {"d1", d1}}, {}};
  for (int j = 0; j <= i; ++j) out.landmarks.emplace_back("v" + std::to_string(j), static_cast<VertexId>(j));
  return out;
}

FamilyGraph build_star(std::span<const RootedTree> arms) {
  require(arms.size() >= 2, "a star needs at least two arms");
  std::size_t n = 1;
  for (const RootedTree& arm : arms) {
    require(arm.graph.vertex_count() >= 2, "star arms must be nontrivial");
    require(arm.graph.is_tree(), "star arms must be trees");
    n += arm.graph.vertex_count() - 1;
  }
  std::vector<Edge> edges;
  ordered_json sizes = ordered_json::array();
  VertexId next = 1;
  for (const RootedTree& arm : arms) {
    const std::size_t m = arm.graph.vertex_count();
    std::vector<VertexId> map(m);
    for (VertexId x = 0; x < m; ++x) map[x] = x == arm.root ? 0 : next++;
    for (const Edge& e : arm.graph.edges()) edges.push_back({map[e.u], map[e.v], e.weight});
    sizes.push_back(m);
  }
  Graph g = Graph::make(n, std::move(edges), std::vector<double>(n, 1.0), std::vector<VertexRole>(n, VertexRole::Interior));
  g = g.with_roles(combinatorial_boundary(g));
  return FamilyGraph{std::move(g), "star", ordered_json{{"arms", arms.size()}, {"arm_sizes", sizes}}, {{"center", 0}}};
}

FamilyGraph build_star_paths(int r, int l) {
  require(r >= 2 && l >= 1, "St(r;l) needs r >= 2 and l >= 1");
  std::vector<RootedTree> arms(static_cast<std::size_t>(r), rooted_path(l));
  FamilyGraph out = build_star(arms);
  out.params = ordered_json{{"r", r}, {"l", l}};
  return out;
}

namespace {

// Index of tooth vertex t in the copy hung on base vertex x.
struct CombLayout {
  std::size_t base_n = 0;
  std::size_t tooth_n = 0;
  VertexId root = 0;

  VertexId at(VertexId x, VertexId t) const {
    if (t == root) return x;
    const VertexId rank = t < root ? t : t - 1;
    return static_cast<VertexId>(base_n + x * (tooth_n - 1) + rank);
  }
};

CombLayout comb_layout(const Graph& base, const RootedTree& tooth) {
  require(base.vertex_count() >= 1 && base.connected(), "comb base must be connected");
  require(tooth.graph.vertex_count() >= 2 && tooth.graph.is_tree(), "comb tooth must be a nontrivial tree");
  require(tooth.root < tooth.graph.vertex_count(), "comb tooth root out of range");
  return {base.vertex_count(), tooth.graph.vertex_count(), tooth.root};
}

}  // namespace

FamilyGraph build_comb(const Graph& base, const RootedTree& tooth) {
  const CombLayout lay = comb_layout(base, tooth);
  const std::size_t n = lay.base_n * lay.tooth_n;
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  for (VertexId x = 0; x < lay.base_n; ++x)
    for (const Edge& e : tooth.graph.edges()) edges.push_back({lay.at(x, e.u), lay.at(x, e.v), e.weight});
  Graph g = Graph::make(n, std::move(edges), std::vector<double>(n, 1.0), std::vector<VertexRole>(n, VertexRole::Interior));
  g = g.with_roles(combinatorial_boundary(g));
  FamilyGraph out{std::move(g), "comb",
                  ordered_json{{"base_vertices", lay.base_n}, {"base_edges", base.edge_count()}, {"tooth_vertices", lay.tooth_n}},
                  {}};
  for (VertexId x = 0; x < lay.base_n; ++x) out.landmarks.emplace_back("base" + std::to_string(x), x);
  return out;
}

FamilyGraph build_path(int n) {
  require(n >= 1, "path needs at least one vertex");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int j = 0; j + 1 < n; ++j) edges.emplace_back(j, j + 1);
  FamilyGraph out{Graph::combinatorial(static_cast<std::size_t>(n), edges), "path", ordered_json{{"n", n}}, {}};
  out.landmarks.emplace_back("start", 0);
  out.landmarks.emplace_back("end", static_cast<VertexId>(n - 1));
  return out;
}

FamilyGraph build_cycle(int n) {
  require(n >= 3, "cycle needs at least three vertices");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int j = 0; j < n; ++j) edges.emplace_back(j, (j + 1) % n);
  return FamilyGraph{Graph::combinatorial(static_cast<std::size_t>(n), edges), "cycle", ordered_json{{"n", n}}, {}};
}

double mu_max_path(int n) {
  require(n >= 1, "mu_max_path needs n >= 1");
  const double c = std::cos(std::numbers::pi / (2.0 * n));
  return 4.0 * c * c;
}

Extended mu_max_path_extended(int n) {
  require(n >= 1, "mu_max_path needs n >= 1");
  const Extended c = boost::multiprecision::cos(boost::math::constants::pi<Extended>() / (2 * n));
  return 4 * c * c;
}

Extended theta(int i) {
  require(i >= 2, "theta_i needs i >= 2");
  return Extended(1) / mu_max_path_extended(i);
}

Graph tooth_with_dirichlet_edge(const RootedTree& tooth, double mu) {
  require(mu > 0.0, "Dirichlet edge weight must be positive");
  const std::size_t m = tooth.graph.vertex_count();
  std::vector<Edge> edges(tooth.graph.edges().begin(), tooth.graph.edges().end());
  edges.push_back({tooth.root, static_cast<VertexId>(m), mu});
  std::vector<double> measures(tooth.graph.measures().begin(), tooth.graph.measures().end());
  measures.push_back(1.0);
  Graph g = Graph::make(m + 1, std::move(edges), std::move(measures), std::vector<VertexRole>(m + 1, VertexRole::Interior));
  std::vector<VertexRole> roles = combinatorial_boundary(g);
  roles[m] = VertexRole::Dirichlet;
  return g.with_roles(std::move(roles));
}

CombSpectrum comb_spectrum(const Graph& base, const RootedTree& tooth) {
  const CombLayout lay = comb_layout(base, tooth);
  require(lay.base_n >= 2, "comb base must be nontrivial");
  const Graph comb = build_comb(base, tooth).graph;
  const std::vector<VertexId> boundary = comb.boundary();
  const std::size_t n = comb.vertex_count();

  const SpectralResult mu = laplacian_spectrum(base);
  CombSpectrum out;
  out.laplacian = mu.values;
  out.values.push_back(0.0);
  out.eigenfunctions.emplace_back(n, 1.0 / std::sqrt(static_cast<double>(boundary.size())));
  for (std::size_t k = 1; k < lay.base_n; ++k) {
    const Graph ti = tooth_with_dirichlet_edge(tooth, mu.values[k]);
    const SpectralResult lam = dirichlet_steklov_spectrum(ti);
    const std::vector<double>& f = lam.extended.front();
    const std::vector<double>& g = mu.extended[k];
    std::vector<double> h(n, 0.0);
    for (VertexId x = 0; x < lay.base_n; ++x)
      for (VertexId t = 0; t < lay.tooth_n; ++t) h[lay.at(x, t)] = g[x] * f[t];
    double norm = 0.0;
    for (VertexId b : boundary) norm += h[b] * h[b] * comb.measure(b);
    norm = std::sqrt(norm);
    if (norm > 0.0)
      for (double& v : h) v /= norm;
    out.values.push_back(lam.values.front());
    out.eigenfunctions.push_back(std::move(h));
  }
  return out;
}

}  // namespace steklov
