#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "steklov/families.hpp"
#include "steklov/graph.hpp"

namespace steklov {

/// Canonical codes are printable strings:
///   "T:<rooted>"    free tree, rooted at its centroid (least of two)
///   "R:<rooted>"    rooted tree, root marked by position
///   "G<n>:<hex>"    connected or general unit-weight graph on n <= 10 vertices
/// where <rooted> is "(" child* ")" and a child is an optional "[w]" weight
/// annotation (omitted for weight 1) followed by its own rooted code.
using CanonicalCode = std::string;

inline constexpr int kMaxTreeOrder = 16;
inline constexpr int kMaxGraphOrder = 7;
inline constexpr int kMaxGraphCodeOrder = 10;

CanonicalCode tree_code(const Graph& tree);
CanonicalCode rooted_tree_code(const Graph& tree, VertexId root);
CanonicalCode graph_code(const Graph& g);

/// Tree code for trees (rooted when a root is given), graph code otherwise.
CanonicalCode canonical_code(const Graph& g, std::optional<VertexId> root = std::nullopt);
bool is_isomorphic(const Graph& a, const Graph& b);

/// Inverse maps: the decoded graph has combinatorial roles and unit measures.
Graph decode_graph(const CanonicalCode& code);
RootedTree decode_rooted_tree(const CanonicalCode& code);

enum class ClassKind { Trees, ConnectedGraphs };
const char* kind_name(ClassKind kind) noexcept;

/// Version tag of the generators; part of every cache key.
inline constexpr int kGeneratorVersion = 1;

/// Codes of all isomorphism classes, sorted. Throws OutOfSupportedRange.
std::vector<CanonicalCode> generate_class_codes(ClassKind kind, int n);

std::vector<Graph> enumerate_trees(int n);
std::vector<Graph> enumerate_connected_graphs(int n);

/// On-disk store of class lists, one canonical code per line, in
/// `<dir>/<kind>-n<n>-v<version>.txt`. Unreadable or unwritable directories
/// degrade to in-memory generation.
class ClassCache {
 public:
  explicit ClassCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  /// STEKLOV_CACHE_DIR, or ".steklov-cache" when unset.
  static ClassCache from_environment();

  std::vector<CanonicalCode> codes(ClassKind kind, int n) const;
  std::filesystem::path file_for(ClassKind kind, int n) const;
  const std::filesystem::path& directory() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
};

/// Resumable producer of class representatives in code order.
class GraphClassStream {
 public:
  GraphClassStream(ClassKind kind, int n, const ClassCache* cache = nullptr);

  std::optional<Graph> next();
  std::size_t position() const noexcept { return cursor_; }
  void seek(std::size_t position);
  std::size_t size() const noexcept { return codes_.size(); }
  const CanonicalCode& code(std::size_t index) const { return codes_.at(index); }
  ClassKind kind() const noexcept { return kind_; }
  int order() const noexcept { return n_; }

 private:
  ClassKind kind_;
  int n_;
  std::vector<CanonicalCode> codes_;
  std::size_t cursor_ = 0;
};

}  // namespace steklov
