#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace agp {

using Vertex = std::int32_t;

/// Ordered pair (tail, head). For undirected edges the order is irrelevant.
struct Arc {
  Vertex from;
  Vertex to;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by diameter computations when some ordered pair is unreachable.
class NotStronglyConnected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kUnreachable = -1;

/// Immutable simple digraph on vertices 0..n-1 with sorted CSR out- and
/// in-adjacency. Duplicate arcs are merged; loops are rejected.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  static DirectedGraph build(int n, std::span<const Arc> arcs);
  static DirectedGraph build(int n, std::initializer_list<Arc> arcs) {
    return build(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  int vertex_count() const { return n_; }
  std::size_t arc_count() const { return out_targets_.size(); }

  std::span<const Vertex> out(Vertex v) const {
    return {out_targets_.data() + out_offsets_[v],
            out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const Vertex> in(Vertex v) const {
    return {in_sources_.data() + in_offsets_[v],
            in_sources_.data() + in_offsets_[v + 1]};
  }

  bool has_arc(Vertex u, Vertex v) const;
  /// Same as has_arc; lets path validation treat both graph kinds uniformly.
  bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v); }

  /// All arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.n_ == b.n_ && a.out_offsets_ == b.out_offsets_ &&
           a.out_targets_ == b.out_targets_;
  }

 private:
  int n_ = 0;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Vertex> in_sources_;
};

/// Immutable simple undirected graph; each edge is stored once as (min,max)
/// and appears in both endpoints' neighbour lists.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  static UndirectedGraph build(int n, std::span<const Arc> edges);
  static UndirectedGraph build(int n, std::initializer_list<Arc> edges) {
    return build(n, std::span<const Arc>(edges.begin(), edges.size()));
  }

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  bool has_edge(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return has_edge(u, v); }

  /// Edges as (min,max) pairs in lexicographic order.
  const std::vector<Arc>& edges() const { return edges_; }

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
};

DirectedGraph transpose(const DirectedGraph& g);

/// Replaces every edge {u,v} by the arcs (u,v) and (v,u).
DirectedGraph symmetrize(const UndirectedGraph& g);

struct InducedSubgraph {
  DirectedGraph graph;
  std::vector<Vertex> to_parent;    // local id -> parent id
  std::vector<Vertex> from_parent;  // parent id -> local id, or -1
};

/// G[keep]; `keep` is indexed by parent vertex id.
InducedSubgraph induced_subgraph(const DirectedGraph& g,
                                 const std::vector<bool>& keep);

// ---------------------------------------------------------------------------
// Paths

/// A simple path that has been checked against some graph. Construct through
/// PathWitness::validated; the raw constructor is for already-checked data.
struct PathWitness {
  std::vector<Vertex> vertices;
  std::optional<int> baseline;  // dist(s,t) or diameter the length is measured above
  std::string stage;

  int length() const {
    return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1;
  }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  template <class Graph>
  static PathWitness validated(const Graph& g, std::vector<Vertex> vertices,
                               std::string stage,
                               std::optional<int> baseline = std::nullopt);
};

class InvalidWitness : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Returns an error description if `path` is not a simple path of `g`.
template <class Graph>
std::optional<std::string> check_path(const Graph& g,
                                      std::span<const Vertex> path);

/// Concatenates paths whose consecutive endpoints coincide (the shared
/// endpoint is kept once). Does not validate.
std::vector<Vertex> concat_paths(
    std::initializer_list<std::span<const Vertex>> parts);

std::vector<Vertex> reversed(std::span<const Vertex> path);

// ---------------------------------------------------------------------------
// BFS, distances, reachability

struct BfsLayering {
  Vertex source = 0;
  std::vector<int> level;                 // kUnreachable for unreachable vertices
  std::vector<std::vector<Vertex>> layers;  // layers[i] = L_i, ascending ids
  int ell_max = 0;

  std::optional<int> level_of(Vertex v) const {
    if (level[v] == kUnreachable) return std::nullopt;
    return level[v];
  }
};

BfsLayering bfs_layering(const DirectedGraph& g, Vertex s);
BfsLayering bfs_layering(const UndirectedGraph& g, Vertex s);

std::vector<int> distances_from(const DirectedGraph& g, Vertex s);
std::vector<int> distances_from(const UndirectedGraph& g, Vertex s);

/// A shortest (s,t)-path (lowest-id BFS parents), or nullopt if unreachable.
std::optional<std::vector<Vertex>> shortest_path(const DirectedGraph& g,
                                                 Vertex s, Vertex t);

struct DiameterInfo {
  int diameter = 0;
  Vertex from = 0;
  Vertex to = 0;
};

/// Maximum distance over ordered pairs; ties go to the lexicographically
/// smallest pair. Throws NotStronglyConnected if any pair is unreachable.
DiameterInfo diameter_and_pair(const DirectedGraph& g);
DiameterInfo diameter_and_pair(const UndirectedGraph& g);

std::vector<bool> reachable_set(const DirectedGraph& g, Vertex s);
std::vector<bool> co_reachable_set(const DirectedGraph& g, Vertex t);

bool is_strongly_connected(const DirectedGraph& g);
bool is_connected(const UndirectedGraph& g);

/// Strongly connected after deleting any single vertex; false for n < 2
/// (a reason is written to `diagnostic` when provided).
bool is_2_strongly_connected(const DirectedGraph& g,
                             std::string* diagnostic = nullptr);

/// Connected with no articulation vertex; false for n < 2.
bool is_2_connected_undirected(const UndirectedGraph& g,
                               std::string* diagnostic = nullptr);

// ---------------------------------------------------------------------------
// Internally disjoint paths (unit vertex capacities)

/// Up to `limit` pairwise internally vertex-disjoint (s,t)-paths obtained by
/// augmenting-path max-flow on the vertex-split graph. Vertices listed in
/// `blocked` may not be used at all.
std::vector<std::vector<Vertex>> internally_disjoint_paths(
    const DirectedGraph& g, Vertex s, Vertex t, int limit,
    const std::vector<bool>* blocked = nullptr);

std::optional<std::pair<PathWitness, PathWitness>> two_internally_disjoint_paths(
    const DirectedGraph& g, Vertex s, Vertex t);
std::optional<std::pair<PathWitness, PathWitness>> two_internally_disjoint_paths(
    const UndirectedGraph& g, Vertex s, Vertex t);

// ---------------------------------------------------------------------------

template <class Graph>
std::optional<std::string> check_path(const Graph& g,
                                      std::span<const Vertex> path) {
  if (path.empty()) return std::string("empty path");
  const int n = g.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex v = path[i];
    if (v < 0 || v >= n) {
      return "vertex " + std::to_string(v) + " out of range";
    }
    if (seen[v]) return "vertex " + std::to_string(v) + " repeated";
    seen[v] = true;
    if (i > 0 && !g.adjacent(path[i - 1], v)) {
      return "missing arc " + std::to_string(path[i - 1]) + "->" +
             std::to_string(v);
    }
  }
  return std::nullopt;
}

template <class Graph>
PathWitness PathWitness::validated(const Graph& g, std::vector<Vertex> vertices,
                                   std::string stage,
                                   std::optional<int> baseline) {
  if (auto err = check_path(g, vertices)) {
    throw InvalidWitness("invalid path witness (" + stage + "): " + *err);
  }
  return PathWitness{std::move(vertices), baseline, std::move(stage)};
}

}  // namespace agp
