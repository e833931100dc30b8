#include "steklov/extremal.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "steklov/error.hpp"
#include "steklov/geometry.hpp"
#include "steklov/spectral.hpp"

namespace steklov {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const std::string& msg) {
  if (!ok) fail(ErrorCode::InvalidParams, msg);
}

Rational lambda_of(const Rational& l) { return minimal_broom_total(l).value; }

std::string broom_name(const BroomParams& p) { return "Br(" + std::to_string(p.i) + "," + std::to_string(p.d) + ")"; }

// All multisets of size k over {0, .., kinds-1}, as non-decreasing sequences.
std::vector<std::vector<int>> multisets(int kinds, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int t = from; t < kinds; ++t) {
      cur.push_back(t);
      self(self, t);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Stars with `brooms` arms drawn from Br(m) plus `unit_arms` single edges.
std::vector<PredictedMinimizer> broom_stars(int m, int brooms, int unit_arms) {
  const auto shapes = minimal_broom_total(Rational(m)).minimizers;
  std::vector<PredictedMinimizer> out;
  for (const auto& pick : multisets(static_cast<int>(shapes.size()), brooms)) {
    std::vector<RootedTree> arms;
    std::string desc = "St(";
    for (std::size_t a = 0; a < pick.size(); ++a) {
      arms.push_back(broom_arm(shapes[pick[a]]));
      desc += (a ? "," : "") + broom_name(shapes[pick[a]]);
    }
    for (int u = 0; u < unit_arms; ++u) {
      arms.push_back(rooted_path(1));
      desc += ",P2";
    }
    desc += ")";
    out.push_back({desc, build_star(arms).graph});
  }
  return out;
}

bool is_tree_graph(const Graph& g) { return g.vertex_count() >= 1 && g.is_tree(); }

CanonicalCode class_code(const Graph& g, ClassKind kind) {
  return kind == ClassKind::Trees ? tree_code(g) : graph_code(g);
}

// Eigenvalues of the pencil (a, diag(d)) with d > 0.
std::vector<double> diagonal_pencil(const Matrix& a, std::span<const double> d) {
  const std::size_t n = a.rows();
  Matrix c(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) c(r, s) = a(r, s) / std::sqrt(d[r] * d[s]);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s) c(r, s) = c(s, r) = 0.5 * (c(r, s) + c(s, r));
  return symmetric_eigen(c).values;
}

std::vector<double> values_only(const SpectralResult& r, std::size_t count) {
  std::vector<double> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(r.eigenvalue(i));
  return out;
}

SpectralOptions no_vectors() {
  SpectralOptions o;
  o.vectors = false;
  return o;
}

// Vertex map of `small` into `big` after validating the subgraph relation.
std::vector<VertexId> validate_embedding(const Graph& big, const Graph& small, std::vector<VertexId> embedding) {
  const std::size_t n = small.vertex_count();
  if (embedding.empty()) {
    if (n > big.vertex_count()) fail(ErrorCode::NotASubgraph, "subgraph has more vertices than the host");
    embedding.resize(n);
    for (VertexId v = 0; v < n; ++v) embedding[v] = v;
  }
  if (embedding.size() != n) fail(ErrorCode::NotASubgraph, "embedding must list one host vertex per subgraph vertex");
  std::vector<bool> used(big.vertex_count(), false);
  for (VertexId v = 0; v < n; ++v) {
    const VertexId x = embedding[v];
    if (x >= big.vertex_count() || used[x]) fail(ErrorCode::NotASubgraph, "embedding is not injective into the host");
    used[x] = true;
    if (std::abs(big.measure(x) - small.measure(v)) > 1e-12 * std::max(1.0, big.measure(x)))
      fail(ErrorCode::NotASubgraph, "vertex measures differ at vertex " + std::to_string(v));
    if (big.role(x) == VertexRole::Dirichlet || small.role(v) == VertexRole::Dirichlet)
      fail(ErrorCode::InvalidParams, "monotonicity is stated without Dirichlet vertices");
  }
  for (const Edge& e : small.edges()) {
    const double w = big.weight(embedding[e.u], embedding[e.v]);
    if (w == 0.0 || std::abs(w - e.weight) > 1e-12 * std::max(1.0, w))
      fail(ErrorCode::NotASubgraph, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not a host edge");
  }
  for (VertexId x : big.boundary()) {
    auto it = std::find(embedding.begin(), embedding.end(), x);
    if (it == embedding.end() || small.role(static_cast<VertexId>(it - embedding.begin())) != VertexRole::Boundary)
      fail(ErrorCode::NotASubgraph, "host boundary vertex " + std::to_string(x) + " is not a boundary vertex of the subgraph");
  }
  return embedding;
}

}  // namespace

const char* case_name(ExtremalCase c) noexcept {
  switch (c) {
    case ExtremalCase::Sigma2: return "sigma2";
    case ExtremalCase::NotDividing: return "i_not_dividing";
    case ExtremalCase::Dividing: return "i_dividing";
  }
  return "?";
}

const char* match_name(MatchVerdict v) noexcept {
  switch (v) {
    case MatchVerdict::Match: return "match";
    case MatchVerdict::Mismatch: return "mismatch";
    case MatchVerdict::ExamplesAttain: return "examples_attain";
    case MatchVerdict::ExamplesMissed: return "examples_missed";
  }
  return "?";
}

std::vector<PredictedMinimizer> sigma2_dumbbells(int n) {
  require(n >= 2, "sigma_2 extremal problem needs n >= 2");
  const int r = (n - 1) % 4 + 1;
  const int m = (n - r) / 4;
  std::vector<std::array<int, 3>> shapes;
  switch (r) {
    case 1: shapes = {{m, 2 * m, m}}; break;
    case 2: shapes = {{m, 2 * m + 1, m}}; break;
    case 3: shapes = {{m + 1, 2 * m, m + 1}, {m, 2 * m + 2, m}, {m, 2 * m + 1, m + 1}}; break;
    default: shapes = {{m + 1, 2 * m + 1, m + 1}}; break;
  }
  std::vector<PredictedMinimizer> out;
  std::set<CanonicalCode> seen;
  for (const auto& [d0, i, d1] : shapes) {
    // DB(1,0,1) is the path on three vertices, already listed as DB(0,2,0).
    if (i == 0) continue;
    Graph g = build_dumbbell(d0, i, d1).graph;
    if (!seen.insert(tree_code(g)).second) continue;
    out.push_back({"DB(" + std::to_string(d0) + "," + std::to_string(i) + "," + std::to_string(d1) + ")", std::move(g)});
  }
  return out;
}

ExtremalTarget predicted_bound(int n, int i) {
  require(n >= 3 && i >= 2 && i < n, "predicted_bound needs 2 <= i < n");
  ExtremalTarget t;
  t.n = n;
  t.i = i;
  if (i == 2) {
    t.tag = ExtremalCase::Sigma2;
    t.m = Rational(n - 1, 2);
    t.exact_bound = lambda_of(t.m);
    t.minimizers = sigma2_dumbbells(n);
  } else if (n % i != 0) {
    t.tag = ExtremalCase::NotDividing;
    const int m = n / i;
    const int s = n - i * m;
    t.m = Rational(m);
    t.exact_bound = lambda_of(t.m);
    t.characterized = s == 1;
    t.minimizers = broom_stars(m, i, s - 1);
  } else {
    t.tag = ExtremalCase::Dividing;
    const int m = n / i;
    t.m = Rational(m);
    t.theta = theta(i);
    const Extended arg = Extended(m - 1) + *t.theta;
    t.bound = lambda_total(arg);
    // theta_i is rational only for i = 3 among i > 2.
    if (i == 3) t.exact_bound = lambda_of(Rational(m - 1) + Rational(1, 3));
    for (const auto& [ti, td] : minimal_broom_total_shapes(arg)) {
      const RootedTree tooth = broom_tooth(ti, td);
      const std::string tname = "Br(" + std::to_string(ti) + "," + std::to_string(td) + ")";
      t.minimizers.push_back({"Comb(P" + std::to_string(i) + ";" + tname + ")", build_comb(build_path(i).graph, tooth).graph});
      if (i % 2 == 1)
        t.minimizers.push_back({"Comb(C" + std::to_string(i) + ";" + tname + ")", build_comb(build_cycle(i).graph, tooth).graph});
    }
  }
  if (t.exact_bound) t.bound = Extended(t.exact_bound->numerator()) / Extended(t.exact_bound->denominator());
  return t;
}

void sequential_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  for (std::size_t k = 0; k < count; ++k) body(k);
}

int ExtremalReport::exit_code() const noexcept {
  if (!bound_ok) return 2;
  if (certified()) return 0;
  return 3;
}

double sigma_i(const Graph& g, int i, double* residual) {
  if (i < 1 || g.boundary().size() < static_cast<std::size_t>(i)) {
    if (residual) *residual = 0.0;
    return kInf;
  }
  const SpectralResult r = steklov_spectrum(g, no_vectors());
  if (residual) *residual = r.max_residual;
  return r.eigenvalue(static_cast<std::size_t>(i));
}

ExtremalReport verify_extremal(int n, int i, ClassKind kind, const SweepOptions& options) {
  const int limit = kind == ClassKind::Trees ? kMaxSweepTreeOrder : kMaxSweepGraphOrder;
  if (n > limit || n < 3)
    fail(ErrorCode::OutOfSupportedRange, std::string("sweeps over ") + kind_name(kind) + " support 3 <= n <= " +
                                             std::to_string(limit) + ", got n = " + std::to_string(n));
  const auto start = std::chrono::steady_clock::now();
  ExtremalReport rep;
  rep.target = predicted_bound(n, i);
  rep.kind = kind;
  rep.tol = options.tol;

  GraphClassStream stream(kind, n, options.cache);
  rep.class_size = stream.size();
  SweepState state = options.resume.value_or(SweepState{0, kInf, {}, 0.0, 0});
  if (state.next > rep.class_size) fail(ErrorCode::InvalidParams, "resume state is past the end of the class");
  if (options.keep_values) {
    rep.codes.resize(rep.class_size);
    rep.values.assign(rep.class_size, std::numeric_limits<double>::quiet_NaN());
  }

  const std::size_t chunk = std::max<std::size_t>(1, options.checkpoint_every);
  std::vector<double> values, residuals;
  while (state.next < rep.class_size) {
    const std::size_t begin = state.next;
    const std::size_t count = std::min(chunk, rep.class_size - begin);
    values.assign(count, 0.0);
    residuals.assign(count, 0.0);
    options.parallel_for(count, [&](std::size_t k) {
      const Graph g = decode_graph(stream.code(begin + k));
      values[k] = sigma_i(g, i, &residuals[k]);
    });
    // Fold in code order so the outcome does not depend on scheduling.
    for (std::size_t k = 0; k < count; ++k) {
      const double v = values[k];
      state.max_residual = std::max(state.max_residual, residuals[k]);
      if (options.keep_values) {
        rep.codes[begin + k] = stream.code(begin + k);
        rep.values[begin + k] = v;
      }
      if (std::isinf(v)) {
        ++state.infinite;
        continue;
      }
      if (v < state.minimum) {
        state.minimum = v;
        std::erase_if(state.candidates, [&](const auto& c) { return c.second > v + options.tol; });
      }
      if (v <= state.minimum + options.tol) state.candidates.emplace_back(stream.code(begin + k), v);
    }
    state.next = begin + count;
    if (options.on_checkpoint) options.on_checkpoint(state);
  }

  rep.minimum = state.minimum;
  rep.max_residual = state.max_residual;
  rep.infinite = state.infinite;
  for (const auto& [code, v] : state.candidates)
    if (v <= state.minimum + options.tol) rep.argmin.push_back(code);
  std::sort(rep.argmin.begin(), rep.argmin.end());

  std::set<CanonicalCode> predicted;
  for (const PredictedMinimizer& pm : rep.target.minimizers) {
    if (kind == ClassKind::Trees && !is_tree_graph(pm.graph)) continue;
    predicted.insert(class_code(pm.graph, kind));
  }
  rep.predicted.assign(predicted.begin(), predicted.end());

  const Extended diff = Extended(rep.minimum) - rep.target.bound;
  rep.bound_ok = diff >= -Extended(options.tol);
  rep.attains_bound = boost::multiprecision::abs(diff) <= Extended(options.tol);
  if (rep.target.characterized) {
    rep.match = rep.argmin == rep.predicted ? MatchVerdict::Match : MatchVerdict::Mismatch;
  } else {
    const bool all_in = std::includes(rep.argmin.begin(), rep.argmin.end(), rep.predicted.begin(), rep.predicted.end());
    rep.match = all_in ? MatchVerdict::ExamplesAttain : MatchVerdict::ExamplesMissed;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// --- monotonicity and rigidity --------------------------------------------

MonotonicityVerdict check_monotonicity(const Graph& big, const Graph& small, std::vector<VertexId> embedding,
                                       double tol) {
  validate_embedding(big, small, std::move(embedding));
  const std::size_t nb = big.boundary().size();
  MonotonicityVerdict out;
  out.big = values_only(steklov_spectrum(big, no_vectors()), nb);
  out.small = values_only(steklov_spectrum(small, no_vectors()), nb);
  out.min_slack = kInf;
  for (std::size_t k = 0; k < nb; ++k) out.min_slack = std::min(out.min_slack, out.big[k] - out.small[k]);
  if (nb == 0) out.min_slack = 0.0;
  out.ok = out.min_slack >= -tol;
  return out;
}

RigidityData rigidity_data(const Graph& big, const Graph& small, std::vector<VertexId> embedding, double tau_zero) {
  embedding = validate_embedding(big, small, std::move(embedding));
  if (!big.connected() || !small.connected()) fail(ErrorCode::Disconnected, "rigidity needs connected graphs");
  const std::vector<VertexId> bt = big.boundary();
  if (bt.size() < 2) fail(ErrorCode::InvalidParams, "rigidity needs at least two host boundary vertices");
  const std::size_t nbig = big.vertex_count();
  RigidityData d;

  // Basis of H: harmonic extensions of e_b / m_b - e_1 / m_1.
  for (std::size_t k = 1; k < bt.size(); ++k) {
    std::vector<double> data(nbig, 0.0);
    data[bt[k]] = 1.0 / big.measure(bt[k]);
    data[bt[0]] = -1.0 / big.measure(bt[0]);
    d.basis.push_back(harmonic_extension(big, data));
  }
  std::vector<double> scale;
  for (const auto& f : d.basis) {
    double s = 0.0;
    for (double v : f) s = std::max(s, std::abs(v));
    scale.push_back(std::max(s, 1.0));
  }

  d.zero.assign(nbig, false);
  for (VertexId x = 0; x < nbig; ++x) {
    if (big.role(x) != VertexRole::Interior) continue;
    bool all = true;
    for (std::size_t k = 0; k < d.basis.size(); ++k) all = all && std::abs(d.basis[k][x]) <= tau_zero * scale[k];
    d.zero[x] = all;
  }

  const std::size_t ns = small.vertex_count();
  d.condition1 = true;
  for (VertexId v = 0; v < ns; ++v)
    if (small.role(v) == VertexRole::Boundary && big.role(embedding[v]) != VertexRole::Boundary && !d.zero[embedding[v]])
      d.condition1 = false;
  d.same_boundary = small.boundary().size() == bt.size();

  // Components of the host once the subgraph's edges are removed.
  std::vector<std::pair<VertexId, VertexId>> own;
  for (const Edge& e : small.edges()) own.emplace_back(embedding[e.u], embedding[e.v]);
  const Graph rest = big.delete_edges(own);
  d.attached = rest.component_labels();

  d.condition2 = true;
  for (VertexId v = 0; v < ns; ++v) {
    const VertexId x = embedding[v];
    for (VertexId y = 0; y < nbig; ++y) {
      if (d.attached[y] != d.attached[x]) continue;
      for (std::size_t k = 0; k < d.basis.size(); ++k)
        if (std::abs(d.basis[k][y] - d.basis[k][x]) > tau_zero * scale[k]) d.condition2 = false;
    }
  }

  std::vector<std::size_t> hits(nbig, 0);
  for (VertexId v = 0; v < ns; ++v) ++hits[d.attached[embedding[v]]];
  d.comb = std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h <= 1; });

  d.separation = kInf;
  for (VertexId a = 0; a < ns; ++a)
    for (VertexId b = a + 1; b < ns; ++b) {
      double best = 0.0;
      for (std::size_t k = 0; k < d.basis.size(); ++k)
        best = std::max(best, std::abs(d.basis[k][embedding[a]] - d.basis[k][embedding[b]]) / scale[k]);
      d.separation = std::min(d.separation, best);
    }
  d.separates = d.separation > tau_zero;

  // Condition (3): minimise the Dirichlet energy of `small` over boundary
  // data constant on B~ and mean-zero on B. Harmonic extension in `small`
  // is optimal for fixed boundary data, so the DtN operator suffices.
  d.sigma_top = steklov_spectrum(big, no_vectors()).eigenvalue(bt.size());
  const DtnOperator dtn = dtn_matrix(small, DtnVariant::Steklov);
  const std::size_t nbs = dtn.boundary.size();
  std::vector<std::size_t> column(nbs, 0);
  std::vector<double> mass{0.0};
  for (std::size_t r = 0; r < nbs; ++r) {
    const VertexId v = dtn.boundary[r];
    if (big.role(embedding[v]) == VertexRole::Boundary) {
      column[r] = 0;
      mass[0] += small.measure(v);
    } else {
      column[r] = mass.size();
      mass.push_back(small.measure(v));
    }
  }
  if (mass.size() == 1) {
    d.condition3 = true;
    d.condition3_value = kInf;
  } else {
    Matrix a(mass.size(), mass.size());
    for (std::size_t r = 0; r < nbs; ++r)
      for (std::size_t s = 0; s < nbs; ++s) a(column[r], column[s]) += dtn.schur(r, s);
    const auto vals = diagonal_pencil(a, mass);
    d.condition3_value = vals[1];
    d.condition3 = d.condition3_value >= d.sigma_top - 1e-8 * std::max(1.0, d.sigma_top);
  }
  return d;
}

RigidityVerdict check_rigidity_equivalence(const Graph& big, const Graph& small, std::vector<VertexId> embedding,
                                           double rel, double tau_zero) {
  RigidityVerdict out;
  out.data = rigidity_data(big, small, embedding, tau_zero);
  const std::size_t nb = big.boundary().size();
  const auto sb = values_only(steklov_spectrum(big, no_vectors()), nb);
  const auto ss = values_only(steklov_spectrum(small, no_vectors()), nb);
  out.spectra_equal = true;
  for (std::size_t k = 0; k < nb; ++k) out.spectra_equal = out.spectra_equal && eigen_equal(sb[k], ss[k], rel);
  out.conditions = out.data.condition1 && out.data.condition2 && out.data.condition3;
  out.ok = out.conditions == out.spectra_equal;
  if (out.data.same_boundary && out.data.separates) {
    out.comb_agrees = out.data.comb == out.spectra_equal;
    out.ok = out.ok && *out.comb_agrees;
  }
  return out;
}

// --- first eigenfunctions and the lambda_1 bound ----------------------------

PositivityVerdict verify_positivity(const Graph& g, double tol, double tau_zero) {
  if (!g.connected()) fail(ErrorCode::HypothesesNotMet, "positivity needs a connected graph");
  const auto bd = g.dirichlet();
  if (bd.empty()) fail(ErrorCode::HypothesesNotMet, "positivity needs Dirichlet vertices");
  PositivityVerdict out;
  out.interior_connected = g.diagnostics().dirichlet_interior_connected;
  const SpectralResult full = dirichlet_steklov_spectrum(g);
  out.lambda1 = full.eigenvalue(1);

  if (!out.interior_connected) {
    std::vector<bool> member(g.vertex_count(), false);
    for (VertexId x = 0; x < g.vertex_count(); ++x) member[x] = g.role(x) != VertexRole::Dirichlet;
    std::vector<double> pieces;
    for (const auto& comp : components_of_subset(g, member)) {
      std::vector<VertexId> keep(comp.begin(), comp.end());
      keep.insert(keep.end(), bd.begin(), bd.end());
      const Graph piece = g.induced(keep);
      if (piece.boundary().empty()) continue;
      const auto r = dirichlet_steklov_spectrum(piece, no_vectors());
      pieces.insert(pieces.end(), r.values.begin(), r.values.end());
    }
    std::sort(pieces.begin(), pieces.end());
    out.decomposition_error = pieces.size() == full.values.size() ? 0.0 : kInf;
    for (std::size_t k = 0; k < std::min(pieces.size(), full.values.size()); ++k)
      out.decomposition_error =
          std::max(out.decomposition_error, std::abs(pieces[k] - full.values[k]) / std::max(1.0, std::abs(full.values[k])));
    out.ok = out.decomposition_error <= tol;
    return out;
  }

  out.simple = multiplicity(full.values, 0) == 1;
  const auto& f = full.extended.front();
  double fmax = 0.0;
  for (double v : f) fmax = std::max(fmax, std::abs(v));
  int sign = 0;
  out.one_signed = true;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (g.role(x) == VertexRole::Dirichlet) continue;
    if (std::abs(f[x]) <= tau_zero * fmax) {
      out.one_signed = false;
      continue;
    }
    const int s = f[x] > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    out.one_signed = out.one_signed && s == sign;
  }
  out.higher_change_sign = true;
  for (std::size_t k = 1; k < full.vectors.size(); ++k) {
    const auto& u = full.vectors[k];
    double umax = 0.0;
    for (double v : u) umax = std::max(umax, std::abs(v));
    const bool pos = std::any_of(u.begin(), u.end(), [&](double v) { return v > tau_zero * umax; });
    const bool neg = std::any_of(u.begin(), u.end(), [&](double v) { return v < -tau_zero * umax; });
    out.higher_change_sign = out.higher_change_sign && pos && neg;
  }
  out.ok = out.simple && out.one_signed && out.higher_change_sign;
  return out;
}

RealBroomMinimum minimal_broom_real(double l, int n, double rel) {
  require(l > 0 && n >= 0, "minimal broom needs l > 0 and n >= 0");
  std::vector<std::pair<double, std::pair<int, int>>> all;
  for (int i = 0; i <= n; ++i) {
    const int d = n - i;
    const double v = d == 0 ? 1.0 / (l + i) : 1.0 / (1.0 + (l + i) * d);
    const BroomParams p = BroomParams{1, i, d}.normalized();
    all.push_back({v, {p.i, p.d}});
  }
  RealBroomMinimum out{kInf, {}};
  for (const auto& a : all) out.value = std::min(out.value, a.first);
  for (const auto& [v, shape] : all)
    if (v <= out.value * (1.0 + rel) &&
        std::find(out.shapes.begin(), out.shapes.end(), shape) == out.shapes.end())
      out.shapes.push_back(shape);
  return out;
}

Lambda1Verdict verify_lambda1_bound(const Graph& g, double tol) {
  auto need = [](bool ok, const std::string& msg) {
    if (!ok) fail(ErrorCode::HypothesesNotMet, msg);
  };
  need(g.vertex_count() >= 2 && g.is_tree(), "the lambda_1 bound is stated for trees");
  const auto bd = g.dirichlet();
  need(!bd.empty() && !g.boundary().empty(), "the lambda_1 bound needs both B and B_D nonempty");
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    const bool leaf = g.degree(x) <= 1;
    need(leaf == (g.role(x) != VertexRole::Interior), "leaves must be exactly the boundary and Dirichlet vertices");
  }
  std::vector<VertexId> keep;
  for (VertexId x = 0; x < g.vertex_count(); ++x)
    if (g.role(x) != VertexRole::Dirichlet) keep.push_back(x);
  const Graph inner = g.induced(keep);
  need(inner.is_tree() && inner.is_unit_weight(), "the graph off B_D must be a unit-weight tree");
  for (VertexId x : keep) need(g.measure(x) == 1.0, "the graph off B_D must carry unit measures");

  Lambda1Verdict out;
  out.n = static_cast<int>(keep.size()) - 1;
  need(out.n >= 1, "the graph off B_D needs at least two vertices");
  double total = 0.0;
  std::set<VertexId> anchors;
  for (VertexId o : bd) {
    const Incidence inc = g.incident(o).front();
    total += g.edge(inc.edge).weight;
    anchors.insert(inc.neighbor);
  }
  out.l = 1.0 / total;
  const RealBroomMinimum best = minimal_broom_real(out.l, out.n);
  out.bound = best.value;
  out.lambda1 = dirichlet_steklov_spectrum(g, no_vectors()).eigenvalue(1);
  out.slack = out.lambda1 - out.bound;
  out.equality = std::abs(out.slack) <= tol;

  // Equality shape: every Dirichlet vertex hangs off one vertex v, and the
  // rest of the tree rooted at v is a minimal broom with o removed.
  if (anchors.size() == 1) {
    const VertexId v = *anchors.begin();
    const auto pos = std::find(keep.begin(), keep.end(), v) - keep.begin();
    const CanonicalCode code = rooted_tree_code(inner, static_cast<VertexId>(pos));
    for (const auto& [i, d] : best.shapes) {
      const RootedTree tooth = broom_tooth(i, d);
      out.structural = out.structural || rooted_tree_code(tooth.graph, tooth.root) == code;
    }
  }
  out.ok = out.slack >= -tol && out.equality == out.structural;
  return out;
}

// --- tree bounds -------------------------------------------------------------

ClumpBoundVerdict verify_steklov_clump(const Graph& tree, double tol) {
  if (!tree.is_tree()) fail(ErrorCode::NotATree, "clump bound needs a tree");
  if (tree.boundary().size() < 2) fail(ErrorCode::InvalidParams, "clump bound needs |B| >= 2");
  ClumpBoundVerdict out;
  const ClumpNumber cn = clump_number(tree);
  out.clump = cn.value;
  const MinimalBroomSolution br = minimal_broom_total(cn.value);
  out.bound = br.value;
  out.sigma2 = sigma_i(tree, 2);
  out.equality = std::abs(out.sigma2 - to_double(out.bound)) <= tol;

  std::set<CanonicalCode> arms;
  for (const BroomParams& p : br.minimizers) {
    const RootedTree arm = broom_arm(p);
    arms.insert(rooted_tree_code(arm.graph, arm.root));
  }
  const GeometricPoint& p = cn.equilibrium;
  for (const Clump& c : cn.report.clumps) {
    // Rebuild the clump as a tree rooted at the equilibrium point.
    VertexId attach = 0;
    double length = 1.0;
    if (p.is_vertex()) {
      for (const Incidence& inc : tree.incident(p.vertex))
        if (std::binary_search(c.vertices.begin(), c.vertices.end(), inc.neighbor)) attach = inc.neighbor;
    } else {
      const Edge& e = tree.edge(p.edge);
      const bool u_side = std::binary_search(c.vertices.begin(), c.vertices.end(), e.u);
      attach = u_side ? e.u : e.v;
      length = u_side ? p.offset : 1.0 - p.offset;
    }
    std::map<VertexId, VertexId> local;
    for (VertexId x : c.vertices) local.emplace(x, static_cast<VertexId>(local.size() + 1));
    std::vector<Edge> edges{{0, local.at(attach), 1.0 / length}};
    for (const Edge& e : tree.edges())
      if (local.count(e.u) && local.count(e.v)) edges.push_back({local.at(e.u), local.at(e.v), 1.0});
    const std::size_t n = local.size() + 1;
    const Graph g = Graph::make(n, std::move(edges), std::vector<double>(n, 1.0),
                                std::vector<VertexRole>(n, VertexRole::Interior));
    if (arms.count(rooted_tree_code(g, 0))) ++out.broom_clumps;
  }
  out.structural = out.broom_clumps >= 2;
  out.ok = out.sigma2 >= to_double(out.bound) - tol && out.equality == out.structural;
  return out;
}

TreeBoundVerdict verify_sigma2_tree(const Graph& tree, double tol) {
  if (!tree.is_tree()) fail(ErrorCode::NotATree, "tree bound needs a tree");
  if (tree.boundary().size() < 2) fail(ErrorCode::InvalidParams, "tree bound needs |B| >= 2");
  TreeBoundVerdict out;
  out.bound = lambda_of(Rational(static_cast<std::int64_t>(tree.edge_count()), 2));
  out.sigma2 = sigma_i(tree, 2);
  out.equality = std::abs(out.sigma2 - to_double(out.bound)) <= tol;
  const CanonicalCode code = tree_code(tree);
  for (const auto& pm : sigma2_dumbbells(static_cast<int>(tree.vertex_count())))
    out.dumbbell = out.dumbbell || tree_code(pm.graph) == code;
  out.ok = out.sigma2 >= to_double(out.bound) - tol && out.equality == out.dumbbell;
  return out;
}

// --- remaining statements ----------------------------------------------------

BipartiteVerdict verify_bipartite_top(const Graph& g, double tol) {
  if (!g.connected()) fail(ErrorCode::Disconnected, "bipartite check needs a connected graph");
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, -1);
  side[0] = 0;
  std::vector<VertexId> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const Incidence& inc : g.incident(queue[k])) {
      if (side[inc.neighbor] < 0) {
        side[inc.neighbor] = 1 - side[queue[k]];
        queue.push_back(inc.neighbor);
      } else if (side[inc.neighbor] == side[queue[k]]) {
        fail(ErrorCode::NotBipartite, "graph has an odd cycle");
      }
    }

  BipartiteVerdict out;
  const SpectralResult r = laplacian_spectrum(g);
  out.mu_max = r.values.back();
  out.simple = multiplicity(r.values, r.values.size() - 1) == 1;
  const auto& f = r.vectors.back();
  out.alternating = true;
  for (const Edge& e : g.edges()) out.alternating = out.alternating && f[e.u] * f[e.v] < 0.0;
  // Distance from x to the zero of the linear interpolant on [xy] is
  // |f(x)| / (|f(x)| + |f(y)|) times the edge length 1 / w_xy.
  for (VertexId x = 0; x < n; ++x) {
    double sum = 0.0;
    for (const Incidence& inc : g.incident(x)) {
      const double w = g.edge(inc.edge).weight;
      const double ax = std::abs(f[x]), ay = std::abs(f[inc.neighbor]);
      sum += w * (ax + ay) / ax;
    }
    sum /= g.measure(x);
    out.identity_error = std::max(out.identity_error, std::abs(sum - out.mu_max) / std::max(1.0, out.mu_max));
  }
  if (n == 1) out.identity_error = 0.0;
  out.ok = out.simple && out.alternating && out.identity_error <= tol;
  return out;
}

RegStarVerdict verify_reg_star(int r, int l, const std::optional<RootedTree>& extension, double rel) {
  require(r >= 2 && l >= 1, "regular star needs r >= 2 and l >= 1");
  const Graph star = build_star_paths(r, l).graph;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const Edge& e : star.edges()) edges.emplace_back(e.u, e.v);
  std::size_t n = star.vertex_count();
  RegStarVerdict out;
  out.extension_lambda1 = kInf;
  int longest_branch = 0;
  if (extension && extension->graph.vertex_count() > 1) {
    const Graph& ext = extension->graph;
    if (!ext.is_tree()) fail(ErrorCode::NotATree, "extension must be a tree");
    std::vector<VertexId> map(ext.vertex_count());
    for (VertexId x = 0; x < ext.vertex_count(); ++x)
      map[x] = x == extension->root ? 0 : static_cast<VertexId>(n++);
    for (const Edge& e : ext.edges()) edges.emplace_back(map[e.u], map[e.v]);

    std::vector<VertexRole> roles(ext.vertex_count(), VertexRole::Interior);
    for (VertexId x = 0; x < ext.vertex_count(); ++x)
      if (ext.degree(x) <= 1) roles[x] = VertexRole::Boundary;
    roles[extension->root] = VertexRole::Dirichlet;
    const Graph ext_d = Graph::make(ext.vertex_count(), {ext.edges().begin(), ext.edges().end()},
                                    std::vector<double>(ext.vertex_count(), 1.0), roles);
    out.extension_lambda1 = dirichlet_steklov_spectrum(ext_d, no_vectors()).eigenvalue(1);

    const Graph cut = ext.induced([&] {
      std::vector<VertexId> keep;
      for (VertexId x = 0; x < ext.vertex_count(); ++x)
        if (x != extension->root) keep.push_back(x);
      return keep;
    }());
    for (const auto& comp : cut.components()) longest_branch = std::max(longest_branch, static_cast<int>(comp.size()));
  }
  out.graph = Graph::combinatorial(n, edges);
  const SpectralResult s = steklov_spectrum(out.graph, no_vectors());
  const double bound = 1.0 / l;
  out.upper_ok = true;
  for (int i = 2; i <= r; ++i) {
    out.sigma.push_back(s.eigenvalue(static_cast<std::size_t>(i)));
    out.upper_ok = out.upper_ok && (out.sigma.back() <= bound || eigen_equal(out.sigma.back(), bound, rel));
  }
  out.sigma2_equal = eigen_equal(out.sigma.front(), bound, rel);
  out.equality_predicted = out.extension_lambda1 >= bound || eigen_equal(out.extension_lambda1, bound, rel);
  // A branch with k vertices off the root has k edges.
  const int cap = static_cast<int>(std::floor(std::sqrt(4.0 * (l - 1) + 1.0) + 1e-12));
  out.corollary_applies = longest_branch <= cap;
  out.ok = out.upper_ok && out.sigma2_equal == out.equality_predicted && (!out.corollary_applies || out.sigma2_equal);
  return out;
}

SigmaLambdaVerdict verify_sigma_lambda(const Graph& g, VertexId z, double w) {
  if (z >= g.vertex_count()) fail(ErrorCode::IndexOutOfRange, "vertex z out of range");
  if (g.role(z) != VertexRole::Interior) fail(ErrorCode::InvalidParams, "z must be an interior vertex");
  require(w > 0.0, "Dirichlet edge weight must be positive");
  if (!g.connected()) fail(ErrorCode::Disconnected, "graph must be connected");
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back({z, static_cast<VertexId>(n), w});
  std::vector<double> measures(g.measures().begin(), g.measures().end());
  measures.push_back(1.0);
  std::vector<VertexRole> roles(g.roles().begin(), g.roles().end());
  roles.push_back(VertexRole::Dirichlet);
  const Graph ext = Graph::make(n + 1, std::move(edges), std::move(measures), std::move(roles));

  SigmaLambdaVerdict out;
  out.sigma2 = sigma_i(g, 2);
  out.lambda1 = dirichlet_steklov_spectrum(ext, no_vectors()).eigenvalue(1);
  out.gap = out.sigma2 - out.lambda1;
  out.ok = out.gap > 1e-12 * std::max(1.0, out.sigma2);
  return out;
}

}  // namespace steklov
