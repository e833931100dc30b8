#include <doctest.h>

#include "steklov/clump_combinatorics.hpp"
#include "steklov/enumeration.hpp"
#include "steklov/error.hpp"
#include "steklov/families.hpp"
#include "steklov/geometry.hpp"
#include "steklov/spectral.hpp"

using namespace steklov;

TEST_CASE("sub-k examples") {
  CHECK(is_sub_k(build_path(2).graph, 1).sub_k);
  const auto p5 = is_sub_k(build_path(5).graph, 2);
  CHECK_FALSE(p5.sub_k);
  REQUIRE(p5.candidates.size() == 1);
  CHECK(p5.candidates[0] == std::pair<VertexId, int>{2, 2});
  CHECK(is_sub_k(build_path(3).graph, 2).sub_k);
  // Clump = 2 at the centre but only one arm is Br(2).
  const auto spider = build_star(std::vector<RootedTree>{rooted_path(2), rooted_path(1), rooted_path(1)});
  CHECK(is_sub_k(spider.graph, 2).sub_k);
}

TEST_CASE("removal for bounded clump") {
  const auto p7 = find_removal_for_clump(build_path(7).graph, 1, 2);
  REQUIRE(p7);
  CHECK(p7->removed.size() == 1);
  for (const Rational& c : p7->clump_numbers) CHECK(c <= 2);
  CHECK(p7->removed == std::vector<EdgeId>{1});

  for (int n = 2; n <= 5; ++n) {
    const auto none = find_removal_for_clump(build_path(n).graph, 0, 2);
    REQUIRE(none);
    CHECK(none->removed.empty());
  }
  const auto half = find_removal_for_clump(build_path(4).graph, 0, 1, true);
  REQUIRE(half);
  CHECK(half->removed.empty());
  CHECK_FALSE(find_removal_for_clump(build_path(4).graph, 0, 1, false));
}

TEST_CASE("removal lemmas hold on all small trees") {
  for (int n = 2; n <= 11; ++n)
    for (const Graph& t : enumerate_trees(n))
      for (int r = 0; r <= 2; ++r)
        for (int k = 1; k <= 3; ++k) {
          for (bool half : {false, true})
            if (removal_hypothesis_holds(t.edge_count(), r, k, half)) {
              const auto cert = find_removal_for_clump(t, r, k, half);
              REQUIRE(cert);
              CHECK(cert->removed.size() <= static_cast<std::size_t>(r));
            }
        }
}

TEST_CASE("sub-k removal") {
  const auto star = find_removal_sub_k(build_star_paths(3, 2).graph, 1, 2);
  CHECK(star.kind == SubKRemoval::Kind::StarException);
  const auto p5 = find_removal_sub_k(build_path(5).graph, 0, 2);
  CHECK(p5.kind == SubKRemoval::Kind::StarException);
  const Graph cat = build_comb(build_path(3).graph, rooted_path(1)).graph;
  CHECK_THROWS_AS(find_removal_sub_k(cat, 0, 2), Error);

  for (int k = 1; k <= 3; ++k)
    for (int r = 0; r <= 2; ++r) {
      const int n = (r + 2) * k + 1;
      if (n > 11) continue;
      for (const Graph& t : enumerate_trees(n)) {
        const auto res = find_removal_sub_k(t, r, k);
        CHECK(res.kind != SubKRemoval::Kind::NotFound);
        if (res.kind == SubKRemoval::Kind::StarException) CHECK(is_broom_star(t, r + 2, k));
      }
    }
}

TEST_CASE("type A/B classification") {
  const auto p4 = classify_type_AB(build_path(4).graph, 2);
  REQUIRE(p4.witness_a);
  CHECK(*p4.r_a == 2);
  CHECK(p4.witness_a->removed == std::vector<EdgeId>{1});
  const auto k13 = classify_type_AB(build_star_paths(3, 1).graph, 2);
  CHECK(k13.verdict == TypeABClassification::Verdict::TypeB);
  CHECK(*k13.r_b == 2);
  CHECK(k13.witness_b->removed.empty());
  CHECK_THROWS_AS(classify_type_AB(build_path(2).graph, 3), Error);

  for (int n = 1; n <= 10; ++n)
    for (const Graph& t : enumerate_trees(n))
      for (int k = 1; k <= 4; ++k) {
        if (t.edge_count() + 1 < static_cast<std::size_t>(k)) continue;
        CHECK_NOTHROW(classify_type_AB(t, k));
      }
}

TEST_CASE("sub-k trees satisfy sigma_2 > Lambda(k)") {
  int count = 0;
  for (int n = 2; n <= 10; ++n)
    for (const Graph& t : enumerate_trees(n)) {
      const double s2 = steklov_spectrum(t).eigenvalue(2);
      for (int k = 1; k <= 4; ++k)
        if (is_sub_k(t, k).sub_k) {
          ++count;
          CHECK(s2 > to_double(minimal_broom_total(Rational(k)).value) + 1e-12);
        }
    }
  CHECK(count > 0);
}
