#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "steklov/enumeration.hpp"
#include "steklov/families.hpp"
#include "steklov/graph.hpp"
#include "steklov/rational.hpp"

namespace steklov {

// --- predicted bounds ------------------------------------------------------

enum class ExtremalCase { Sigma2, NotDividing, Dividing };
const char* case_name(ExtremalCase c) noexcept;

struct PredictedMinimizer {
  std::string description;  // e.g. "DB(2,4,2)", "Comb(P4;Br(1,0))"
  Graph graph;              // combinatorial roles
};

struct ExtremalTarget {
  int n = 0;
  int i = 0;
  ExtremalCase tag = ExtremalCase::Sigma2;
  /// (n-1)/2 for sigma_2, floor(n/i) or n/i otherwise.
  Rational m{0};
  std::optional<Rational> exact_bound;  // set whenever the bound is rational
  Extended bound{0};
  std::optional<Extended> theta;        // dividing case only
  std::vector<PredictedMinimizer> minimizers;
  /// True when the listed minimisers are the complete equality set; false
  /// for n = im + s with 2 <= s <= i-1, where they are only examples.
  bool characterized = true;
};

/// Throws InvalidParams unless n >= 3 and 2 <= i < n.
ExtremalTarget predicted_bound(int n, int i);

/// Dumbbells attaining sigma_2 = Lambda((n-1)/2) on n >= 2 vertices.
std::vector<PredictedMinimizer> sigma2_dumbbells(int n);

// --- class sweeps ------------------------------------------------------------

inline constexpr int kMaxSweepTreeOrder = 12;
inline constexpr int kMaxSweepGraphOrder = 7;

/// Runs body(k) for every k in [0, count). The library never spawns threads;
/// callers that want parallelism plug in their own pool.
using ParallelFor = std::function<void(std::size_t count, const std::function<void(std::size_t)>& body)>;

void sequential_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Resumable reduction state: classes [0, next) have been folded into
/// (minimum, candidates). Candidates hold every class within tol of the
/// running minimum, in code order.
struct SweepState {
  std::size_t next = 0;
  double minimum = 0.0;
  std::vector<std::pair<CanonicalCode, double>> candidates;
  double max_residual = 0.0;
  std::size_t infinite = 0;  // classes with fewer than i boundary vertices
};

struct SweepOptions {
  double tol = 1e-9;
  ParallelFor parallel_for = sequential_for;
  std::size_t checkpoint_every = 1000;
  std::function<void(const SweepState&)> on_checkpoint;
  std::optional<SweepState> resume;
  const ClassCache* cache = nullptr;
  bool keep_values = false;
};

enum class MatchVerdict { Match, Mismatch, ExamplesAttain, ExamplesMissed };
const char* match_name(MatchVerdict v) noexcept;

struct ExtremalReport {
  ExtremalTarget target;
  ClassKind kind = ClassKind::Trees;
  std::size_t class_size = 0;
  double minimum = 0.0;
  std::vector<CanonicalCode> argmin;     // sorted
  std::vector<CanonicalCode> predicted;  // predicted minimisers inside the class, sorted
  bool bound_ok = false;                 // minimum >= bound - tol
  bool attains_bound = false;            // |minimum - bound| <= tol
  MatchVerdict match = MatchVerdict::Match;
  double tol = 1e-9;
  double max_residual = 0.0;
  std::size_t infinite = 0;
  double seconds = 0.0;
  std::vector<CanonicalCode> codes;  // filled when keep_values is set
  std::vector<double> values;

  bool certified() const noexcept {
    return bound_ok && attains_bound && (match == MatchVerdict::Match || match == MatchVerdict::ExamplesAttain);
  }
  /// 0 certified, 2 bound violated, 3 rigidity (argmin) mismatch.
  int exit_code() const noexcept;
};

/// Exhaustive sweep of sigma_i over the class. Throws OutOfSupportedRange.
ExtremalReport verify_extremal(int n, int i, ClassKind kind, const SweepOptions& options = {});

/// sigma_i of a combinatorial graph, +infinity when |B| < i.
double sigma_i(const Graph& g, int i, double* residual = nullptr);

// --- monotonicity and rigidity --------------------------------------------

/// `embedding[v]` is the vertex of `big` playing the role of vertex v of
/// `small`; an empty embedding means the identity.
struct MonotonicityVerdict {
  std::vector<double> big;    // sigma_i(big) for i <= |B~|
  std::vector<double> small;  // sigma_i(small) for the same i
  double min_slack = 0.0;
  bool ok = false;
};

/// Throws NotASubgraph when small is not a subgraph of big with B containing
/// the boundary of big.
MonotonicityVerdict check_monotonicity(const Graph& big, const Graph& small, std::vector<VertexId> embedding = {},
                                       double tol = 1e-9);

struct RigidityData {
  std::vector<std::vector<double>> basis;  // of H(big), on V(big)
  std::vector<bool> zero;                  // Z(big), per vertex of big
  std::vector<std::size_t> attached;       // component label of big minus E(small), per vertex of big
  bool condition1 = false;
  bool condition2 = false;
  bool condition3 = false;
  double condition3_value = 0.0;  // min Rayleigh quotient over the admissible subspace
  double sigma_top = 0.0;         // sigma_{|B~|}(big)
  bool separates = false;         // H(big) separates V(small)
  double separation = 0.0;        // smallest max_f |f(x) - f(y)| over pairs of V(small)
  bool comb = false;              // attached components pairwise disjoint
  bool same_boundary = false;     // B = B~
};

RigidityData rigidity_data(const Graph& big, const Graph& small, std::vector<VertexId> embedding = {},
                           double tau_zero = 1e-9);

struct RigidityVerdict {
  RigidityData data;
  bool spectra_equal = false;  // sigma_i(big) = sigma_i(small) for all i <= |B~|
  bool conditions = false;     // (1) and (2) and (3)
  std::optional<bool> comb_agrees;
  bool ok = false;
};

RigidityVerdict check_rigidity_equivalence(const Graph& big, const Graph& small, std::vector<VertexId> embedding = {},
                                           double rel = 1e-8, double tau_zero = 1e-9);

// --- first eigenfunctions and the lambda_1 bound ----------------------------

struct PositivityVerdict {
  bool interior_connected = true;
  double lambda1 = 0.0;
  bool simple = false;
  bool one_signed = false;
  bool higher_change_sign = false;
  double decomposition_error = 0.0;  // disconnected interior only
  bool ok = false;
};

/// Throws HypothesesNotMet when G is disconnected or B_D is empty.
PositivityVerdict verify_positivity(const Graph& g, double tol = 1e-8, double tau_zero = 1e-9);

/// Lambda(l, n) for real l: minimum of lambda_1 over Br(l, i, n - i), with the
/// normalised shapes (i, d) attaining it.
struct RealBroomMinimum {
  double value = 0.0;
  std::vector<std::pair<int, int>> shapes;
};
RealBroomMinimum minimal_broom_real(double l, int n, double rel = 1e-12);

struct Lambda1Verdict {
  double l = 0.0;
  int n = 0;
  double lambda1 = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  bool equality = false;    // numerically
  bool structural = false;  // predicted by the shape of G
  bool ok = false;
};

/// Throws HypothesesNotMet unless G is a tree whose leaves are exactly
/// B and B_D, both nonempty, with a unit-weight tree on V \ B_D.
Lambda1Verdict verify_lambda1_bound(const Graph& g, double tol = 1e-9);

// --- tree bounds -------------------------------------------------------------

struct ClumpBoundVerdict {
  Rational clump{0};
  double sigma2 = 0.0;
  Rational bound{0};
  bool equality = false;
  int broom_clumps = 0;  // equilibrium clumps isomorphic to Br(Clump)
  bool structural = false;
  bool ok = false;
};

ClumpBoundVerdict verify_steklov_clump(const Graph& tree, double tol = 1e-9);

struct TreeBoundVerdict {
  double sigma2 = 0.0;
  Rational bound{0};
  bool equality = false;
  bool dumbbell = false;
  bool ok = false;
};

TreeBoundVerdict verify_sigma2_tree(const Graph& tree, double tol = 1e-9);

// --- remaining statements ----------------------------------------------------

struct BipartiteVerdict {
  double mu_max = 0.0;
  bool simple = false;
  bool alternating = false;
  double identity_error = 0.0;  // max over vertices, relative to max(1, mu)
  bool ok = false;
};

/// Throws NotBipartite or Disconnected.
BipartiteVerdict verify_bipartite_top(const Graph& g, double tol = 1e-9);

struct RegStarVerdict {
  Graph graph;                 // St(r;l) wedged with the extension at the centre
  std::vector<double> sigma;   // sigma_2 .. sigma_r
  bool upper_ok = false;
  bool sigma2_equal = false;
  double extension_lambda1 = 0.0;  // +inf for a trivial extension
  bool equality_predicted = false;
  bool corollary_applies = false;
  bool ok = false;
};

/// `extension` is rooted at the vertex glued to the centre; nullopt means
/// the bare star.
RegStarVerdict verify_reg_star(int r, int l, const std::optional<RootedTree>& extension, double rel = 1e-8);

struct SigmaLambdaVerdict {
  double sigma2 = 0.0;
  double lambda1 = 0.0;
  double gap = 0.0;
  bool ok = false;
};

/// Attaches a Dirichlet vertex to the interior vertex z by an edge of weight
/// w and checks sigma_2(G) > lambda_1 of the result.
SigmaLambdaVerdict verify_sigma_lambda(const Graph& g, VertexId z, double w);

}  // namespace steklov
