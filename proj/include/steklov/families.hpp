#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "steklov/graph.hpp"
#include "steklov/rational.hpp"
#include "steklov/spectral.hpp"

namespace steklov {

/// Broom Br(l, i, d): root o (Dirichlet) joined by an edge of length l to
/// v_0, a unit path v_0 ... v_i, and d boundary pendants on v_i (v_i itself is
/// the boundary vertex when d = 0).
struct BroomParams {
  Rational l{1};
  int i = 0;
  int d = 0;

  /// Br(l, i, 1) and Br(l, i+1, 0) are the same graph; the latter is canonical.
  BroomParams normalized() const;
  bool operator==(const BroomParams&) const = default;
};

std::string to_string(const BroomParams& p);

struct RootedTree {
  Graph graph;
  VertexId root = 0;
};

struct FamilyGraph {
  Graph graph;
  std::string family;
  nlohmann::ordered_json params;
  std::vector<std::pair<std::string, VertexId>> landmarks;

  std::optional<VertexId> landmark(std::string_view name) const;
};

// --- brooms --------------------------------------------------------------

/// Vertex order: o, v_0 .. v_i, u_1 .. u_d (after normalisation).
FamilyGraph build_broom(const BroomParams& params);
/// Same construction with a real Dirichlet length (used for irrational l).
FamilyGraph build_broom(double l, int i, int d);

/// 1/(l+i) when d = 0, 1/(1+(l+i)d) otherwise.
Rational broom_lambda1(const BroomParams& params);
/// First eigenfunction in build_broom vertex order, normalised to 1 on the
/// boundary pendants (or on v_i when d = 0).
std::vector<Rational> broom_eigenfunction(const BroomParams& params);

/// Minimal brooms Br(l, n) with value Lambda(l, n). Minimisers are listed in
/// normalised form; ties are never broken.
struct MinimalBroomSolution {
  Rational l{1};
  int n = 0;
  Rational value{0};
  std::vector<BroomParams> minimizers;
  std::vector<int> split_indices;  // candidate lengths I(l, n) of the interior path
};

MinimalBroomSolution minimal_broom(const Rational& l, int n);

/// Br(l) and Lambda(l): Br(1, l-1) for integer l, Br({l}, floor l) otherwise.
MinimalBroomSolution minimal_broom_total(const Rational& l);

/// Lambda(l) in extended precision for real (possibly irrational) l > 0.
Extended lambda_total(const Extended& l);
/// Shapes (i, d) of Br(l) for real l; ties reported only for exactly
/// representable integer l.
std::vector<std::pair<int, int>> minimal_broom_total_shapes(const Extended& l);

/// The broom as a rooted tree with the Dirichlet vertex o as root (a star arm).
RootedTree broom_arm(const BroomParams& params);
/// Broom with o deleted, rooted at v_0 (a comb tooth).
RootedTree broom_tooth(int i, int d);

// --- other families ------------------------------------------------------

FamilyGraph build_dumbbell(int d0, int i, int d1);
FamilyGraph build_star(std::span<const RootedTree> arms);
FamilyGraph build_star_paths(int r, int l);
FamilyGraph build_comb(const Graph& base, const RootedTree& tooth);
FamilyGraph build_path(int n);
FamilyGraph build_cycle(int n);

/// Rooted path with `length` edges, rooted at an end.
RootedTree rooted_path(int length);
/// Unit-weight rooted tree from an edge list.
RootedTree rooted_tree(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges, VertexId root);

/// 4 cos^2(pi / (2n)), the top Laplacian eigenvalue of P_n.
double mu_max_path(int n);
Extended mu_max_path_extended(int n);
/// theta_i = 1 / (4 cos^2(pi / (2i))).
Extended theta(int i);

/// Closed-form Steklov data of Comb(base; tooth): sigma_1 = 0 and
/// sigma_i = lambda_1(T_i) for 2 <= i <= |V(base)|, where T_i is the tooth
/// with a Dirichlet edge of weight mu_i(base) at its root. Eigenfunctions are
/// assembled as h(v) = g_i(x) f_i(phi_x(v)).
struct CombSpectrum {
  std::vector<double> laplacian;                  // mu_1..mu_|V(base)| of the base
  std::vector<double> values;                     // sigma_1..sigma_|V(base)|
  std::vector<std::vector<double>> eigenfunctions;  // on V(comb)
};

CombSpectrum comb_spectrum(const Graph& base, const RootedTree& tooth);

/// T_i: the tooth plus a Dirichlet vertex joined to the root with weight mu.
Graph tooth_with_dirichlet_edge(const RootedTree& tooth, double mu);

}  // namespace steklov
