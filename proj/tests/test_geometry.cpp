#include <doctest.h>

#include <cmath>

#include "steklov/enumeration.hpp"
#include "steklov/error.hpp"
#include "steklov/families.hpp"
#include "steklov/geometry.hpp"
#include "steklov/spectral.hpp"

using namespace steklov;

namespace {

Graph unit_edge() { return build_path(2).graph; }

// Fine-grid oracle: 100 evenly spaced points per edge plus all vertices.
double grid_clump(const Graph& t) {
  double best = std::numeric_limits<double>::infinity();
  for (VertexId v = 0; v < t.vertex_count(); ++v) best = std::min(best, clump_at(t, GeometricPoint::at_vertex(v)).value);
  for (EdgeId e = 0; e < t.edge_count(); ++e)
    for (int s = 1; s < 100; ++s) best = std::min(best, clump_at(t, GeometricPoint::on_edge(e, s / 100.0)).value);
  return best;
}

}  // namespace

TEST_CASE("metric realization and PL values") {
  const Graph g = Graph::make(2, {{0, 1, 3.0}}, {1, 1}, {VertexRole::Boundary, VertexRole::Boundary});
  const MetricGraph mg = metric_realization(g);
  CHECK(mg.lengths[0] == doctest::Approx(1.0 / 3.0));
  CHECK(metric_realization(unit_edge()).lengths[0] == 1.0);
  const MetricGraph br = metric_realization(build_broom(BroomParams{Rational(1, 3), 0, 1}).graph);
  CHECK(br.lengths[0] == doctest::Approx(1.0 / 3.0));

  const MetricGraph u = metric_realization(unit_edge());
  const std::vector<double> f{0, 1}, h{-1, 1};
  CHECK(pl_value(u, f, GeometricPoint::on_edge(0, 0.5)) == doctest::Approx(0.5));
  CHECK(pl_value(u, f, GeometricPoint::at_vertex(1)) == 1.0);
  CHECK(pl_value(u, h, GeometricPoint::on_edge(0, 0.25)) == doctest::Approx(-0.5));
}

TEST_CASE("zero sets") {
  const auto p3 = zero_set(build_path(3).graph, std::vector<double>{-1, 0, 1});
  REQUIRE(p3.points.size() == 1);
  CHECK(p3.points[0] == GeometricPoint::at_vertex(1));
  const auto e = zero_set(unit_edge(), std::vector<double>{-1, 1});
  REQUIRE(e.points.size() == 1);
  CHECK(e.points[0].offset == doctest::Approx(0.5));

  const Graph p4 = build_path(4).graph;
  const SpectralResult s = steklov_spectrum(p4);
  const auto z = zero_set(p4, s.extended[1]);
  REQUIRE(z.points.size() == 1);
  CHECK(!z.points[0].is_vertex());
  CHECK(p4.edge(z.points[0].edge).u == 1);
  CHECK(z.points[0].offset == doctest::Approx(0.5));
}

TEST_CASE("clump numbers") {
  const auto star = clump_number(build_star_paths(3, 1).graph);
  CHECK(star.value == Rational(1));
  CHECK(star.equilibrium == GeometricPoint::at_vertex(0));
  const auto p4 = clump_number(build_path(4).graph);
  CHECK(p4.value == Rational(3, 2));
  CHECK(!p4.equilibrium.is_vertex());
  CHECK(p4.report.clumps.size() == 2);
  const auto p5 = clump_number(build_path(5).graph);
  CHECK(p5.value == Rational(2));
  CHECK(p5.equilibrium == GeometricPoint::at_vertex(2));
  CHECK(clump_number(unit_edge()).value == Rational(1, 2));
  CHECK(clump_number(build_path(3).graph).value == Rational(1));
  CHECK_THROWS_AS(clump_number(build_cycle(4).graph), Error);
  CHECK_THROWS_AS(clump_number(build_broom(BroomParams{Rational(1, 2), 1, 0}).graph), Error);
}

TEST_CASE("clump number properties over all trees with at most ten vertices") {
  for (int n = 2; n <= 10; ++n)
    for (const Graph& t : enumerate_trees(n)) {
      const ClumpNumber c = clump_number(t);
      const double value = to_double(c.value);
      CHECK(2 * c.value <= Rational(static_cast<std::int64_t>(t.edge_count())));
      double total = 0;
      for (const Clump& cl : c.report.clumps) total += cl.length;
      CHECK(total == doctest::Approx(static_cast<double>(t.edge_count())));
      if (!c.equilibrium.is_vertex())
        for (const Clump& cl : c.report.clumps) CHECK(cl.length == doctest::Approx(t.edge_count() / 2.0));
      const double grid = grid_clump(t);
      CHECK(grid >= value - 1e-12);
      CHECK(clump_at(t, c.equilibrium).value == doctest::Approx(value));
      CHECK(clump_at(t, c.equilibrium).equilibrium);
      // Lower semicontinuity at vertices.
      for (VertexId v = 0; v < t.vertex_count(); ++v) {
        const double here = clump_at(t, GeometricPoint::at_vertex(v)).value;
        for (const Incidence& inc : t.incident(v)) {
          const Edge& e = t.edge(inc.edge);
          const double off = e.u == v ? 1e-3 : 1.0 - 1e-3;
          CHECK(clump_at(t, GeometricPoint::on_edge(inc.edge, off)).value >= here - 2e-3);
        }
      }
    }
}

TEST_CASE("nodal domains") {
  const Graph p4 = build_path(4).graph;
  const SpectralResult s = steklov_spectrum(p4);
  const auto dec = nodal_domains(p4, s.extended[1]);
  CHECK(!dec.degenerate);
  REQUIRE(dec.domains.size() == 2);
  for (const NodalDomain& d : dec.domains) {
    CHECK(d.induced.vertex_count() == 3);
    CHECK(d.induced.boundary().size() == 1);
    CHECK(d.induced.dirichlet().size() == 1);
    const VertexId z = d.induced.dirichlet()[0];
    CHECK(d.induced.incident(z)[0].edge < d.induced.edge_count());
    CHECK(d.induced.edge(d.induced.incident(z)[0].edge).weight == doctest::Approx(2.0));
  }

  const Graph k4 = build_cycle(4).graph;
  const auto whole = nodal_domains(k4.with_roles({VertexRole::Boundary, VertexRole::Interior, VertexRole::Interior,
                                                  VertexRole::Interior}),
                                   std::vector<double>(4, 1.0));
  REQUIRE(whole.domains.size() == 1);
  CHECK(whole.domains[0].induced.dirichlet().empty());

  const auto split = nodal_domains(build_path(3).graph, std::vector<double>{-1, 0, 1});
  REQUIRE(split.domains.size() == 2);
  for (const NodalDomain& d : split.domains) CHECK(d.zero_vertices == std::vector<VertexId>{1});

  CHECK_THROWS_AS(nodal_domains(p4, std::vector<double>(4, 0.0)), Error);
}

TEST_CASE("nodal domain theorem examples") {
  const Graph p4 = build_path(4).graph;
  const SpectralResult s = steklov_spectrum(p4);
  CHECK(s.values[1] == doctest::Approx(2.0 / 3.0));
  const NodalVerdict v = verify_nodal_theorem(p4, s.values[1], s.extended[1]);
  CHECK(v.ok);
  for (const auto& d : v.domains) CHECK(d.lambda1 == doctest::Approx(2.0 / 3.0));

  const Graph db = build_dumbbell(2, 2, 2).graph;
  const SpectralResult sd = steklov_spectrum(db);
  // The antisymmetric eigenfunction of sigma_2 = 1/3 vanishes at the centre.
  const auto d = verify_nodal_theorem(db, sd.values[1], sd.extended[1]);
  CHECK(d.ok);
  CHECK(d.domains.size() == 2);

  const Graph star = build_star_paths(3, 1).graph;
  const std::vector<double> f{0, 1, -1, 0};
  const auto vs = verify_nodal_theorem(star, 1.0, f);
  CHECK(vs.degenerate);  // vanishes at a boundary leaf
  const std::vector<double> g{0, 1, -0.5, -0.5};
  const auto vg = verify_nodal_theorem(star, 1.0, g);
  CHECK(vg.ok);
  for (const auto& dom : vg.domains) CHECK(dom.lambda1 == doctest::Approx(1.0));
}

TEST_CASE("nodal domain theorem over all trees with at most nine vertices") {
  int checked = 0;
  for (int n = 2; n <= 9; ++n)
    for (const Graph& t : enumerate_trees(n)) {
      const SpectralResult s = steklov_spectrum(t);
      for (std::size_t k = 0; k < s.values.size(); ++k) {
        if (s.values[k] <= 1e-9) continue;
        const NodalVerdict v = verify_nodal_theorem(t, s.values[k], s.extended[k]);
        if (v.degenerate) continue;
        ++checked;
        for (const auto& d : v.domains) {
          CHECK(d.admissible);
          CHECK(d.deviation <= 1e-8);
        }
        CHECK(v.ok);
      }
    }
  CHECK(checked > 100);
}
