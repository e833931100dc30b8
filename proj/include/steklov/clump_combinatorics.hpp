#pragma once

#include <optional>
#include <vector>

#include "steklov/graph.hpp"
#include "steklov/rational.hpp"

namespace steklov {

/// Outcome of an edge-removal search on a tree.
struct RemovalCertificate {
  std::vector<EdgeId> removed;                    // edge ids of the input tree
  std::vector<std::vector<VertexId>> components;  // vertex sets of the resulting forest
  std::vector<Rational> clump_numbers;            // per component
  std::vector<bool> sub_k;                        // per component (sub-k searches only)
};

struct SubKWitness {
  bool sub_k = false;
  Rational clump{0};
  /// Vertices o with Clump(T, o) = k, and for each the number of clumps at o
  /// that are minimal brooms Br(k) rooted at o.
  std::vector<std::pair<VertexId, int>> candidates;
  std::optional<VertexId> witness;  // first candidate with at most one broom clump
};

/// Sub-k test. Throws NotATree / NotUnitWeight.
SubKWitness is_sub_k(const Graph& tree, int k);

/// Smallest (by size, then lexicographically by edge id) set of at most r
/// edges whose removal leaves trees with clump number <= k (or <= k + 1/2 when
/// `half` is set). Returns nullopt when no such set exists.
std::optional<RemovalCertificate> find_removal_for_clump(const Graph& tree, int r, int k, bool half = false);

/// Whether the clump-removal lemma's edge-count hypothesis holds.
bool removal_hypothesis_holds(std::size_t edges, int r, int k, bool half);

struct SubKRemoval {
  enum class Kind { Removal, StarException, NotFound };
  Kind kind = Kind::NotFound;
  std::optional<RemovalCertificate> certificate;
};

/// For |E(T)| = (r+2)k: at most r edges whose removal leaves sub-k trees, or
/// the verdict that T is a star of degree r+2 whose arms are all Br(k).
/// Throws HypothesisViolated when |E(T)| != (r+2)k.
SubKRemoval find_removal_sub_k(const Graph& tree, int r, int k);

/// Star of degree `degree` centred somewhere with every arm (rooted at the
/// centre) a minimal broom Br(k).
bool is_broom_star(const Graph& tree, int degree, int k);

struct TypeABClassification {
  enum class Verdict { TypeA, TypeB, Both };
  int k = 1;
  Verdict verdict = Verdict::TypeA;
  std::optional<int> r_a;
  std::optional<RemovalCertificate> witness_a;
  std::optional<int> r_b;
  std::optional<RemovalCertificate> witness_b;
};

const char* verdict_name(TypeABClassification::Verdict v) noexcept;

/// Exhaustive search for type-A and type-B witnesses. Throws
/// HypothesisViolated when |E| < k-1 and CertificationFailed when neither
/// witness exists.
TypeABClassification classify_type_AB(const Graph& tree, int k);

}  // namespace steklov
