#include "steklov/enumeration.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <system_error>

#include "steklov/error.hpp"

namespace steklov {

namespace {

// --- trees -----------------------------------------------------------------

struct Arc {
  int to;
  double weight;
};
using TreeAdj = std::vector<std::vector<Arc>>;

TreeAdj tree_adjacency(const Graph& g) {
  TreeAdj adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back({static_cast<int>(e.v), e.weight});
    adj[e.v].push_back({static_cast<int>(e.u), e.weight});
  }
  return adj;
}

std::string weight_tag(double w) {
  if (w == 1.0) return {};
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, w);
  return "[" + std::string(buf, res.ptr) + "]";
}

std::string rooted_code(const TreeAdj& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (const Arc& a : adj[v])
    if (a.to != parent) kids.push_back(weight_tag(a.weight) + rooted_code(adj, a.to, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ')';
  return out;
}

std::vector<int> centroids(const TreeAdj& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> parent(n, -1), order{0}, size(n, 1);
  parent[0] = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (const Arc& a : adj[order[k]])
      if (parent[a.to] < 0) parent[a.to] = order[k], order.push_back(a.to);
  for (std::size_t k = order.size(); k-- > 1;) size[parent[order[k]]] += size[order[k]];
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    int worst = v == 0 ? 0 : n - size[v];
    for (const Arc& a : adj[v])
      if (a.to != parent[v] || v == 0) worst = std::max(worst, size[a.to]);
    if (2 * worst <= n) out.push_back(v);
  }
  return out;
}

std::string free_tree_code(const TreeAdj& adj) {
  std::string best;
  for (int c : centroids(adj)) {
    std::string code = rooted_code(adj, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return "T:" + best;
}

void require_tree(const Graph& g) {
  if (!g.is_tree()) fail(ErrorCode::NotATree, "tree code requested for a graph that is not a tree");
}

// Parses "(" child* ")" starting at pos; appends vertices and edges.
int parse_rooted(std::string_view s, std::size_t& pos, std::vector<Edge>& edges, int& next_id) {
  if (pos >= s.size() || s[pos] != '(') fail(ErrorCode::ParseError, "malformed tree code");
  ++pos;
  const int me = next_id++;
  while (pos < s.size() && s[pos] != ')') {
    double w = 1.0;
    if (s[pos] == '[') {
      const std::size_t close = s.find(']', pos);
      if (close == std::string_view::npos) fail(ErrorCode::ParseError, "malformed weight tag");
      const auto res = std::from_chars(s.data() + pos + 1, s.data() + close, w);
      if (res.ec != std::errc() || res.ptr != s.data() + close) fail(ErrorCode::ParseError, "malformed weight tag");
      pos = close + 1;
    }
    const int child = parse_rooted(s, pos, edges, next_id);
    edges.push_back({static_cast<VertexId>(me), static_cast<VertexId>(child), w});
  }
  if (pos >= s.size()) fail(ErrorCode::ParseError, "unterminated tree code");
  ++pos;
  return me;
}

Graph graph_from_edges(std::size_t n, std::vector<Edge> edges) {
  Graph g = Graph::make(n, std::move(edges), std::vector<double>(n, 1.0), std::vector<VertexRole>(n, VertexRole::Interior));
  return g.with_roles(combinatorial_boundary(g));
}

// --- general graphs ----------------------------------------------------------

using Cells = std::vector<std::vector<int>>;

struct SmallGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;  // bitsets
};

void refine(const SmallGraph& g, Cells& cells) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() < 2) continue;
      std::vector<std::pair<std::vector<int>, int>> keyed;
      for (int v : cells[c]) {
        std::vector<int> sig(cells.size());
        for (std::size_t d = 0; d < cells.size(); ++d)
          for (int u : cells[d]) sig[d] += (g.adj[v] >> u) & 1u;
        keyed.emplace_back(std::move(sig), v);
      }
      std::sort(keyed.begin(), keyed.end());
      Cells pieces;
      for (std::size_t k = 0; k < keyed.size(); ++k) {
        if (k == 0 || keyed[k].first != keyed[k - 1].first) pieces.emplace_back();
        pieces.back().push_back(keyed[k].second);
      }
      if (pieces.size() > 1) {
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

std::string adjacency_bits(const SmallGraph& g, const Cells& cells) {
  std::vector<int> label(g.n);
  for (std::size_t c = 0; c < cells.size(); ++c) label[cells[c][0]] = static_cast<int>(c);
  std::vector<int> at(g.n);
  for (int v = 0; v < g.n; ++v) at[label[v]] = v;
  std::string bits;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) bits += ((g.adj[at[i]] >> at[j]) & 1u) ? '1' : '0';
  return bits;
}

void search(const SmallGraph& g, Cells cells, std::string& best) {
  refine(g, cells);
  const auto open = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (open == cells.end()) {
    std::string bits = adjacency_bits(g, cells);
    if (best.empty() || bits < best) best = std::move(bits);
    return;
  }
  const std::size_t at = static_cast<std::size_t>(open - cells.begin());
  const std::vector<int> target = cells[at];
  for (int v : target) {
    Cells next = cells;
    std::vector<int> rest;
    for (int u : target)
      if (u != v) rest.push_back(u);
    next[at] = {v};
    next.insert(next.begin() + static_cast<std::ptrdiff_t>(at + 1), rest);
    search(g, std::move(next), best);
  }
}

std::string bits_to_hex(const std::string& bits) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::size_t k = 0; k < bits.size(); k += 4) {
    int nib = 0;
    for (std::size_t j = 0; j < 4; ++j) nib = 2 * nib + (k + j < bits.size() && bits[k + j] == '1');
    out += digits[nib];
  }
  return out;
}

std::string small_graph_code(const SmallGraph& g) {
  std::string best;
  Cells cells(1);
  for (int v = 0; v < g.n; ++v) cells[0].push_back(v);
  if (g.n > 0) search(g, cells, best);
  return "G" + std::to_string(g.n) + ":" + bits_to_hex(best);
}

SmallGraph small_graph(const Graph& g) {
  const auto n = static_cast<int>(g.vertex_count());
  if (n > kMaxGraphCodeOrder)
    fail(ErrorCode::OutOfSupportedRange, "graph codes support at most " + std::to_string(kMaxGraphCodeOrder) + " vertices");
  if (!g.is_unit_weight()) fail(ErrorCode::NotUnitWeight, "graph codes are defined for unit-weight graphs");
  SmallGraph s{n, std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0)};
  for (const Edge& e : g.edges()) {
    s.adj[e.u] |= 1u << e.v;
    s.adj[e.v] |= 1u << e.u;
  }
  return s;
}

// --- generators ----------------------------------------------------------------

std::vector<CanonicalCode> grow_trees(const std::vector<CanonicalCode>& smaller) {
  std::set<CanonicalCode> out;
  for (const auto& code : smaller) {
    const Graph t = decode_graph(code);
    TreeAdj adj = tree_adjacency(t);
    const int n = static_cast<int>(adj.size());
    adj.emplace_back();
    for (int v = 0; v < n; ++v) {
      adj[v].push_back({n, 1.0});
      adj[n] = {{v, 1.0}};
      out.insert(free_tree_code(adj));
      adj[v].pop_back();
    }
  }
  return {out.begin(), out.end()};
}

std::vector<CanonicalCode> grow_graphs(const std::vector<CanonicalCode>& smaller) {
  std::set<CanonicalCode> out;
  for (const auto& code : smaller) {
    SmallGraph g = small_graph(decode_graph(code));
    const int n = g.n;
    g.n = n + 1;
    g.adj.push_back(0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      SmallGraph h = g;
      h.adj[n] = mask;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) h.adj[v] |= 1u << n;
      out.insert(small_graph_code(h));
    }
  }
  return {out.begin(), out.end()};
}

int max_order(ClassKind kind) { return kind == ClassKind::Trees ? kMaxTreeOrder : kMaxGraphOrder; }

void check_range(ClassKind kind, int n) {
  if (n < 1 || n > max_order(kind))
    fail(ErrorCode::OutOfSupportedRange, std::string(kind_name(kind)) + " are enumerated for 1 <= n <= " +
                                             std::to_string(max_order(kind)));
}

std::vector<CanonicalCode> base_codes(ClassKind kind) {
  return {kind == ClassKind::Trees ? CanonicalCode("T:()") : CanonicalCode("G1:")};
}

std::vector<CanonicalCode> grow(ClassKind kind, const std::vector<CanonicalCode>& smaller) {
  return kind == ClassKind::Trees ? grow_trees(smaller) : grow_graphs(smaller);
}

}  // namespace

CanonicalCode tree_code(const Graph& tree) {
  require_tree(tree);
  return free_tree_code(tree_adjacency(tree));
}

CanonicalCode rooted_tree_code(const Graph& tree, VertexId root) {
  require_tree(tree);
  if (root >= tree.vertex_count()) fail(ErrorCode::IndexOutOfRange, "root out of range");
  return "R:" + rooted_code(tree_adjacency(tree), static_cast<int>(root), -1);
}

CanonicalCode graph_code(const Graph& g) { return small_graph_code(small_graph(g)); }

CanonicalCode canonical_code(const Graph& g, std::optional<VertexId> root) {
  if (root) return rooted_tree_code(g, *root);
  if (g.is_tree()) return tree_code(g);
  return graph_code(g);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

Graph decode_graph(const CanonicalCode& code) {
  if (code.rfind("T:", 0) == 0) return decode_rooted_tree("R:" + code.substr(2)).graph;
  if (code.rfind("R:", 0) == 0) return decode_rooted_tree(code).graph;
  if (!code.empty() && code[0] == 'G') {
    const std::size_t colon = code.find(':');
    int n = 0;
    const auto res = std::from_chars(code.data() + 1, code.data() + colon, n);
    if (colon == std::string::npos || res.ec != std::errc() || n < 1 || n > kMaxGraphCodeOrder)
      fail(ErrorCode::ParseError, "malformed graph code");
    const std::string hex = code.substr(colon + 1);
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit) {
        if (bit / 4 >= hex.size()) fail(ErrorCode::ParseError, "graph code too short");
        const char h = hex[bit / 4];
        const int nib = h >= 'a' ? h - 'a' + 10 : h - '0';
        if ((nib >> (3 - bit % 4)) & 1) edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j), 1.0});
      }
    return graph_from_edges(static_cast<std::size_t>(n), std::move(edges));
  }
  fail(ErrorCode::ParseError, "unknown canonical code prefix");
}

RootedTree decode_rooted_tree(const CanonicalCode& code) {
  if (code.rfind("R:", 0) != 0 && code.rfind("T:", 0) != 0) fail(ErrorCode::ParseError, "not a tree code");
  std::string_view body(code);
  body.remove_prefix(2);
  std::size_t pos = 0;
  std::vector<Edge> edges;
  int next_id = 0;
  parse_rooted(body, pos, edges, next_id);
  if (pos != body.size()) fail(ErrorCode::ParseError, "trailing characters in tree code");
  return {graph_from_edges(static_cast<std::size_t>(next_id), std::move(edges)), 0};
}

const char* kind_name(ClassKind kind) noexcept { return kind == ClassKind::Trees ? "trees" : "graphs"; }

std::vector<CanonicalCode> generate_class_codes(ClassKind kind, int n) {
  check_range(kind, n);
  std::vector<CanonicalCode> codes = base_codes(kind);
  for (int m = 2; m <= n; ++m) codes = grow(kind, codes);
  return codes;
}

std::vector<Graph> enumerate_trees(int n) {
  std::vector<Graph> out;
  for (const auto& c : generate_class_codes(ClassKind::Trees, n)) out.push_back(decode_graph(c));
  return out;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  std::vector<Graph> out;
  for (const auto& c : generate_class_codes(ClassKind::ConnectedGraphs, n)) out.push_back(decode_graph(c));
  return out;
}

ClassCache ClassCache::from_environment() {
  const char* env = std::getenv("STEKLOV_CACHE_DIR");
  return ClassCache(env && *env ? std::filesystem::path(env) : std::filesystem::path(".steklov-cache"));
}

std::filesystem::path ClassCache::file_for(ClassKind kind, int n) const {
  return dir_ / (std::string(kind_name(kind)) + "-n" + std::to_string(n) + "-v" + std::to_string(kGeneratorVersion) + ".txt");
}

std::vector<CanonicalCode> ClassCache::codes(ClassKind kind, int n) const {
  check_range(kind, n);
  const auto path = file_for(kind, n);
  if (std::ifstream in(path); in) {
    std::vector<CanonicalCode> codes;
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) codes.push_back(line);
    if (!codes.empty() && std::is_sorted(codes.begin(), codes.end())) return codes;
  }
  std::vector<CanonicalCode> codes = n == 1 ? base_codes(kind) : grow(kind, this->codes(kind, n - 1));
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (!ec) {
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      for (const auto& c : codes) out << c << '\n';
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }
  return codes;
}

GraphClassStream::GraphClassStream(ClassKind kind, int n, const ClassCache* cache) : kind_(kind), n_(n) {
  codes_ = cache ? cache->codes(kind, n) : generate_class_codes(kind, n);
}

std::optional<Graph> GraphClassStream::next() {
  if (cursor_ >= codes_.size()) return std::nullopt;
  return decode_graph(codes_[cursor_++]);
}

void GraphClassStream::seek(std::size_t position) {
  if (position > codes_.size()) fail(ErrorCode::IndexOutOfRange, "stream position beyond the class list");
  cursor_ = position;
}

}  // namespace steklov
