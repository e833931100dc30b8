#include "steklov/clump_combinatorics.hpp"

#include <algorithm>
#include <functional>

#include "steklov/enumeration.hpp"
#include "steklov/error.hpp"
#include "steklov/families.hpp"
#include "steklov/geometry.hpp"

namespace steklov {

namespace {

// Visits the size-s subsets of {0..m-1} in lexicographic order until `fn`
// returns true.
bool for_each_subset(std::size_t m, std::size_t s, const std::function<bool(const std::vector<EdgeId>&)>& fn) {
  if (s > m) return false;
  std::vector<EdgeId> pick(s);
  for (std::size_t k = 0; k < s; ++k) pick[k] = static_cast<EdgeId>(k);
  while (true) {
    if (fn(pick)) return true;
    std::size_t k = s;
    while (k > 0 && pick[k - 1] == m - s + k - 1) --k;
    if (k == 0) return false;
    ++pick[k - 1];
    for (std::size_t j = k; j < s; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::vector<Graph> pieces(const Graph& forest, const std::vector<std::vector<VertexId>>& comps) {
  std::vector<Graph> out;
  for (const auto& c : comps) out.push_back(forest.induced(c));
  return out;
}

std::vector<CanonicalCode> broom_codes(int k) {
  std::vector<CanonicalCode> out;
  for (const BroomParams& p : minimal_broom_total(Rational(k)).minimizers) {
    const RootedTree arm = broom_arm(p);
    out.push_back(rooted_tree_code(arm.graph, arm.root));
  }
  return out;
}

// Rooted codes of the clumps at vertex o (each clump together with o).
std::vector<CanonicalCode> clump_codes_at(const Graph& tree, VertexId o) {
  std::vector<CanonicalCode> out;
  const ClumpReport rep = clump_at(tree, GeometricPoint::at_vertex(o));
  for (const Clump& c : rep.clumps) {
    std::vector<VertexId> keep{o};
    keep.insert(keep.end(), c.vertices.begin(), c.vertices.end());
    out.push_back(rooted_tree_code(tree.induced(keep), 0));
  }
  return out;
}

void require_tree(const Graph& tree) {
  if (!tree.is_tree()) fail(ErrorCode::NotATree, "edge-removal searches need a tree");
  if (!tree.is_unit_weight()) fail(ErrorCode::NotUnitWeight, "edge-removal searches need unit edge lengths");
}

std::optional<RemovalCertificate> search(const Graph& tree, std::size_t min_size, std::size_t max_size,
                                         const std::function<bool(const Graph&, RemovalCertificate&)>& accept) {
  std::optional<RemovalCertificate> found;
  for (std::size_t s = min_size; s <= max_size && !found; ++s) {
    for_each_subset(tree.edge_count(), s, [&](const std::vector<EdgeId>& ids) {
      const Graph forest = tree.delete_edges(ids);
      RemovalCertificate cert;
      cert.removed = ids;
      cert.components = forest.components();
      for (const Graph& piece : pieces(forest, cert.components))
        if (!accept(piece, cert)) return false;
      found = std::move(cert);
      return true;
    });
  }
  return found;
}

}  // namespace

SubKWitness is_sub_k(const Graph& tree, int k) {
  if (k < 1) fail(ErrorCode::InvalidParams, "sub-k needs k >= 1");
  SubKWitness out;
  const ClumpNumber cn = clump_number(tree);
  out.clump = cn.value;
  if (cn.value < k) {
    out.sub_k = true;
    return out;
  }
  if (cn.value > k) return out;
  const auto brooms = broom_codes(k);
  for (VertexId o = 0; o < tree.vertex_count(); ++o) {
    if (clump_at_vertex(tree, o) != k) continue;
    int count = 0;
    for (const auto& code : clump_codes_at(tree, o))
      if (std::find(brooms.begin(), brooms.end(), code) != brooms.end()) ++count;
    out.candidates.emplace_back(o, count);
    if (count <= 1 && !out.witness) out.witness = o;
  }
  out.sub_k = out.witness.has_value();
  return out;
}

bool removal_hypothesis_holds(std::size_t edges, int r, int k, bool half) {
  const auto limit = static_cast<long long>(r + 2) * k + r + (half ? 1 : 0);
  return r >= 0 && k >= 0 && static_cast<long long>(edges) <= limit;
}

std::optional<RemovalCertificate> find_removal_for_clump(const Graph& tree, int r, int k, bool half) {
  require_tree(tree);
  if (r < 0 || k < 0) fail(ErrorCode::InvalidParams, "removal search needs r, k >= 0");
  const Rational bound = half ? Rational(2 * k + 1, 2) : Rational(k);
  const std::size_t cap = std::min<std::size_t>(static_cast<std::size_t>(r), tree.edge_count());
  return search(tree, 0, cap, [&](const Graph& piece, RemovalCertificate& cert) {
    const Rational c = clump_number(piece).value;
    cert.clump_numbers.push_back(c);
    return c <= bound;
  });
}

bool is_broom_star(const Graph& tree, int degree, int k) {
  require_tree(tree);
  if (degree < 1 || k < 1) return false;
  if (tree.vertex_count() != static_cast<std::size_t>(degree) * static_cast<std::size_t>(k) + 1) return false;
  const auto brooms = broom_codes(k);
  for (VertexId c = 0; c < tree.vertex_count(); ++c) {
    if (tree.degree(c) != static_cast<std::size_t>(degree)) continue;
    const auto codes = clump_codes_at(tree, c);
    if (std::all_of(codes.begin(), codes.end(),
                    [&](const auto& code) { return std::find(brooms.begin(), brooms.end(), code) != brooms.end(); }))
      return true;
  }
  return false;
}

SubKRemoval find_removal_sub_k(const Graph& tree, int r, int k) {
  require_tree(tree);
  if (r < 0 || k < 1) fail(ErrorCode::InvalidParams, "sub-k removal needs r >= 0 and k >= 1");
  if (tree.edge_count() != static_cast<std::size_t>(r + 2) * static_cast<std::size_t>(k))
    fail(ErrorCode::HypothesisViolated, "sub-k removal needs |E| = (r+2)k");
  SubKRemoval out;
  if (is_broom_star(tree, r + 2, k)) {
    out.kind = SubKRemoval::Kind::StarException;
    return out;
  }
  out.certificate = search(tree, 0, static_cast<std::size_t>(r), [&](const Graph& piece, RemovalCertificate& cert) {
    const SubKWitness w = is_sub_k(piece, k);
    cert.clump_numbers.push_back(w.clump);
    cert.sub_k.push_back(w.sub_k);
    return w.sub_k;
  });
  out.kind = out.certificate ? SubKRemoval::Kind::Removal : SubKRemoval::Kind::NotFound;
  return out;
}

const char* verdict_name(TypeABClassification::Verdict v) noexcept {
  switch (v) {
    case TypeABClassification::Verdict::TypeA: return "A";
    case TypeABClassification::Verdict::TypeB: return "B";
    case TypeABClassification::Verdict::Both: return "A+B";
  }
  return "?";
}

TypeABClassification classify_type_AB(const Graph& tree, int k) {
  require_tree(tree);
  if (k < 1) fail(ErrorCode::InvalidParams, "type A/B classification needs k >= 1");
  const std::size_t e = tree.edge_count();
  if (e + 1 < static_cast<std::size_t>(k)) fail(ErrorCode::HypothesisViolated, "type A/B needs |E| >= k-1");
  TypeABClassification out;
  out.k = k;
  const auto uk = static_cast<std::size_t>(k);

  if ((e + 1) % uk == 0) {
    const std::size_t r = (e + 1) / uk;
    auto cert = search(tree, r - 1, r - 1, [&](const Graph& piece, RemovalCertificate& c) {
      c.clump_numbers.push_back(clump_number(piece).value);
      return piece.edge_count() == uk - 1;
    });
    if (cert) {
      out.r_a = static_cast<int>(r);
      out.witness_a = std::move(cert);
    }
  }
  const std::size_t rb = e / uk + 1;
  if (rb >= 2) {
    auto cert = search(tree, rb - 2, rb - 2, [&](const Graph& piece, RemovalCertificate& c) {
      const Rational cn = clump_number(piece).value;
      c.clump_numbers.push_back(cn);
      return cn <= k - 1;
    });
    if (cert) {
      out.r_b = static_cast<int>(rb);
      out.witness_b = std::move(cert);
    }
  }
  if (out.witness_a && out.witness_b)
    out.verdict = TypeABClassification::Verdict::Both;
  else if (out.witness_a)
    out.verdict = TypeABClassification::Verdict::TypeA;
  else if (out.witness_b)
    out.verdict = TypeABClassification::Verdict::TypeB;
  else
    fail(ErrorCode::CertificationFailed, "tree is neither of type A nor of type B");
  return out;
}

}  // namespace steklov
