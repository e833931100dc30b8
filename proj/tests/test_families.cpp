#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracle.hpp"
#include "steklov/error.hpp"
#include "steklov/families.hpp"
#include "steklov/spectral.hpp"

using namespace steklov;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

// Brute force over every (i, d) with i + d = n, in normalised form.
std::pair<Rational, std::vector<BroomParams>> brute_min(const Rational& l, int n) {
  Rational best(1000000);
  std::vector<BroomParams> arg;
  for (int i = 0; i <= n; ++i) {
    const BroomParams p = BroomParams{l, i, n - i}.normalized();
    const Rational v = broom_lambda1(p);
    if (v < best) {
      best = v;
      arg = {p};
    } else if (v == best && std::find(arg.begin(), arg.end(), p) == arg.end()) {
      arg.push_back(p);
    }
  }
  return {best, arg};
}

bool same_set(std::vector<BroomParams> a, std::vector<BroomParams> b) {
  auto key = [](const BroomParams& p) { return std::pair{p.i, p.d}; };
  auto less = [&](const BroomParams& x, const BroomParams& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

// Rational edge weight of a broom edge: 1/l on {o, v0}, 1 elsewhere.
Rational broom_weight(const BroomParams& p, const Edge& e) { return (e.u == 0 || e.v == 0) ? Rational(1) / p.l : q(1); }

}  // namespace

TEST_CASE("broom construction") {
  const auto a = build_broom(BroomParams{q(1), 0, 2});
  CHECK(a.graph.vertex_count() == 4);
  CHECK(a.graph.boundary() == std::vector<VertexId>{2, 3});
  CHECK(a.graph.dirichlet() == std::vector<VertexId>{0});

  const auto b = build_broom(BroomParams{q(2), 3, 0});
  CHECK(b.graph.vertex_count() == 5);
  CHECK(b.graph.weight(0, 1) == doctest::Approx(0.5));
  CHECK(b.graph.boundary() == std::vector<VertexId>{*b.landmark("v3")});

  CHECK(BroomParams{q(1), 0, 1}.normalized() == BroomParams{q(1), 1, 0});
  CHECK(build_broom(BroomParams{q(1), 0, 1}).graph == build_broom(BroomParams{q(1), 1, 0}).graph);
  CHECK_THROWS_AS(build_broom(BroomParams{q(0), 1, 1}), Error);
  CHECK_THROWS_AS(build_broom(BroomParams{q(1), -1, 1}), Error);
}

TEST_CASE("broom first eigenvalue and eigenfunction") {
  CHECK(broom_lambda1({q(1), 0, 2}) == q(1, 3));
  CHECK(broom_eigenfunction({q(1), 0, 2}) == std::vector<Rational>{q(0), q(2, 3), q(1), q(1)});
  CHECK(broom_lambda1({q(2), 3, 0}) == q(1, 5));
  CHECK(broom_lambda1({q(1, 2), 1, 0}) == q(2, 3));
  const auto g = build_broom(BroomParams{q(1, 2), 1, 0}).graph;
  CHECK(std::abs(dirichlet_steklov_spectrum(g).values[0] - 2.0 / 3.0) <= 1e-12);
}

TEST_CASE("closed-form broom eigenvalues match the numeric spectrum") {
  for (const Rational& l : {q(1, 3), q(1, 2), q(1), q(3, 2), q(2), q(3), q(10, 3)})
    for (int i = 0; i <= 4; ++i)
      for (int d = 0; d <= 4; ++d) {
        const BroomParams p{l, i, d};
        const double num = dirichlet_steklov_spectrum(build_broom(p).graph).values[0];
        CHECK(std::abs(num - to_double(broom_lambda1(p))) <= 1e-10);
      }
}

TEST_CASE("broom eigenfunction solves the eigen-equations exactly") {
  for (const Rational& l : {q(1, 3), q(1), q(5, 2), q(10, 3)})
    for (int i = 0; i <= 4; ++i)
      for (int d = 0; d <= 4; ++d) {
        const BroomParams p = BroomParams{l, i, d}.normalized();
        const Graph g = build_broom(p).graph;
        const auto f = broom_eigenfunction(p);
        const Rational lam = broom_lambda1(p);
        for (VertexId x = 0; x < g.vertex_count(); ++x) {
          if (g.role(x) == VertexRole::Dirichlet) {
            CHECK(f[x] == q(0));
            continue;
          }
          Rational flux(0);
          for (const Incidence& inc : g.incident(x))
            flux += (f[x] - f[inc.neighbor]) * broom_weight(p, g.edge(inc.edge));
          if (g.role(x) == VertexRole::Interior)
            CHECK(flux == q(0));
          else
            CHECK(flux == lam * f[x]);
        }
      }
}

TEST_CASE("minimal brooms") {
  const auto t = minimal_broom(q(1), 2);
  CHECK(t.value == q(1, 3));
  CHECK(same_set(t.minimizers, {BroomParams{q(1), 0, 2}, BroomParams{q(1), 1, 1}.normalized()}));
  const auto s = minimal_broom(q(3), 2);
  CHECK(s.value == q(1, 7));
  CHECK(same_set(s.minimizers, {BroomParams{q(3), 0, 2}}));
  CHECK(minimal_broom(q(2), 0).value == q(1, 2));

  for (int num = 1; num <= 24; ++num)
    for (int den : {1, 2, 3, 4, 5, 7})
      for (int n = 0; n <= 9; ++n) {
        const Rational l(num, den);
        const auto sol = minimal_broom(l, n);
        const auto [v, arg] = brute_min(l, n);
        CAPTURE(num);
        CAPTURE(den);
        CAPTURE(n);
        CHECK(sol.value == v);
        CHECK(same_set(sol.minimizers, arg));
        for (const auto& p : sol.minimizers) CHECK(p.i + p.d == n);
      }
}

TEST_CASE("Lambda(l, n) and Lambda(l) are strictly decreasing") {
  for (int n = 0; n <= 8; ++n)
    for (int num = 1; num < 40; ++num) {
      const Rational l(num, 4), l2(num + 1, 4);
      CHECK(minimal_broom(l, n).value > minimal_broom(l2, n).value);
      CHECK(minimal_broom(l, n).value > minimal_broom(l, n + 1).value);
    }
  for (int num = 1; num < 80; ++num)
    CHECK(minimal_broom_total(Rational(num, 6)).value > minimal_broom_total(Rational(num + 1, 6)).value);
}

TEST_CASE("Lambda(l) case table") {
  const auto four = minimal_broom_total(q(4));
  CHECK(four.value == q(1, 5));
  CHECK(same_set(four.minimizers, {BroomParams{q(1), 1, 2}}));
  const auto three = minimal_broom_total(q(3));
  CHECK(three.value == q(1, 3));
  CHECK(same_set(three.minimizers, {BroomParams{q(1), 0, 2}, BroomParams{q(1), 1, 1}.normalized()}));
  const auto frac_case = minimal_broom_total(q(10, 3));
  CHECK(frac_case.value == q(3, 11));
  CHECK(same_set(frac_case.minimizers, {BroomParams{q(1, 3), 1, 2}}));

  for (int num = 1; num <= 60; ++num)
    for (int den : {1, 2, 3, 5}) {
      const Rational l(num, den);
      const Rational v = minimal_broom_total(l).value;
      if (l <= 2) CHECK(v == Rational(1) / l);
      if (l >= 1) {
        const Rational k = floor((l + 1) / 2);
        CHECK(v == Rational(1) / (Rational(1) + k * (l - k)));
      }
      if (den == 1) CHECK(v == Rational(1, 1 + (num * num) / 4));
      CHECK(std::abs(to_double(v) - static_cast<double>(lambda_total(Extended(to_double(l))))) < 1e-12);
    }
  // Odd integers have two minimisers.
  for (int m = 1; m <= 6; ++m) CHECK(minimal_broom_total(q(2 * m + 1)).minimizers.size() == 2);
}

TEST_CASE("dumbbells") {
  const auto db = build_dumbbell(2, 2, 2);
  CHECK(db.graph.vertex_count() == 7);
  CHECK(db.graph.boundary().size() == 4);
  CHECK(std::abs(steklov_spectrum(db.graph).eigenvalue(2) - 1.0 / 3.0) < 1e-10);
  const auto p5 = build_dumbbell(1, 2, 1);
  CHECK(p5.graph.vertex_count() == 5);
  CHECK(p5.graph.boundary().size() == 2);
  CHECK(std::abs(steklov_spectrum(p5.graph).eigenvalue(2) - steklov_spectrum(build_path(5).graph).eigenvalue(2)) < 1e-12);
  CHECK_THROWS_AS(build_dumbbell(1, 0, 1), Error);
}

TEST_CASE("stars") {
  const auto k13 = build_star_paths(3, 1);
  CHECK(k13.graph.vertex_count() == 4);
  CHECK(k13.graph.degree(0) == 3);
  const auto spider = build_star_paths(3, 2);
  CHECK(spider.graph.vertex_count() == 7);
  CHECK(spider.graph.boundary().size() == 3);

  // Br(2) = Br(1, 1, 0); its arm is o - v0 - v1, a path of length 2.
  const auto br2 = minimal_broom_total(q(2)).minimizers.front();
  std::vector<RootedTree> arms(3, broom_arm(br2));
  const auto s = build_star(arms);
  CHECK(s.graph.vertex_count() == 7);
  CHECK(oracle::steklov_spectrum(s.graph) == oracle::steklov_spectrum(spider.graph));
  CHECK_THROWS_AS(build_star(std::vector<RootedTree>{rooted_path(1)}), Error);
}

TEST_CASE("combs") {
  const RootedTree edge = rooted_path(1);
  const auto cat = build_comb(build_path(3).graph, edge);
  CHECK(cat.graph.vertex_count() == 6);
  CHECK(cat.graph.boundary().size() == 3);
  const auto tri = build_comb(build_cycle(3).graph, edge);
  CHECK(tri.graph.vertex_count() == 6);
  CHECK(tri.graph.edge_count() == 6);
  CHECK(build_comb(build_path(2).graph, edge).graph.vertex_count() == 4);

  const auto cs = build_comb(build_path(3).graph, edge);
  const auto spec = comb_spectrum(build_path(3).graph, edge);
  CHECK(spec.values[0] == 0.0);
  CHECK(std::abs(spec.values[2] - 0.75) < 1e-12);
  CHECK(std::abs(spec.values[1] - 0.5) < 1e-12);
  (void)cs;
}

TEST_CASE("comb spectrum matches the numeric spectrum") {
  std::vector<Graph> bases;
  for (int n = 2; n <= 5; ++n) bases.push_back(build_path(n).graph);
  for (int n = 3; n <= 5; ++n) bases.push_back(build_cycle(n).graph);
  // Rooted trees with at most four vertices, up to rooted isomorphism.
  std::vector<RootedTree> teeth;
  teeth.push_back(rooted_path(1));
  teeth.push_back(rooted_path(2));
  teeth.push_back(rooted_path(3));
  const std::vector<std::pair<VertexId, VertexId>> p3{{0, 1}, {1, 2}};
  teeth.push_back(rooted_tree(3, p3, 1));
  const std::vector<std::pair<VertexId, VertexId>> p4{{0, 1}, {1, 2}, {2, 3}};
  teeth.push_back(rooted_tree(4, p4, 1));
  const std::vector<std::pair<VertexId, VertexId>> k13{{0, 1}, {0, 2}, {0, 3}};
  teeth.push_back(rooted_tree(4, k13, 0));
  teeth.push_back(rooted_tree(4, k13, 1));
  for (const Graph& base : bases)
    for (const RootedTree& tooth : teeth) {
      const Graph comb = build_comb(base, tooth).graph;
      const auto closed = comb_spectrum(base, tooth);
      const SpectralResult num = steklov_spectrum(comb);
      for (std::size_t i = 0; i < closed.values.size(); ++i)
        CHECK(std::abs(closed.values[i] - num.values[i]) <= 1e-9);
      // The assembled functions are genuine eigenfunctions.
      for (std::size_t i = 0; i < closed.values.size(); ++i) {
        const auto& h = closed.eigenfunctions[i];
        const auto lap = apply_laplacian(comb, h);
        for (VertexId x : comb.vertices_with(VertexRole::Interior)) CHECK(std::abs(lap[x]) < 1e-9);
        const auto dn = normal_derivative(comb, h);
        const auto b = comb.boundary();
        for (std::size_t k = 0; k < b.size(); ++k) CHECK(std::abs(dn[k] - closed.values[i] * h[b[k]]) < 1e-9);
      }
    }
}

TEST_CASE("paths and cycles") {
  CHECK(mu_max_path(2) == doctest::Approx(2.0));
  CHECK(mu_max_path(3) == doctest::Approx(laplacian_spectrum(build_path(3).graph).values.back()));
  CHECK(std::abs(laplacian_spectrum(build_cycle(5).graph).values.back() - mu_max_path(5)) < 1e-12);
  CHECK(abs(mu_max_path_extended(3) - 3) < Extended("1e-45"));
  CHECK(abs(theta(2) - Extended(0.5)) < Extended("1e-45"));
  CHECK_THROWS_AS(build_cycle(2), Error);
  CHECK_THROWS_AS(build_path(0), Error);
}
