#include "agp/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace agp {

namespace {

void check_endpoints(int n, const Arc& a, const char* what) {
  const auto pair = "(" + std::to_string(a.from) + "," + std::to_string(a.to) + ")";
  if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) {
    throw GraphError(std::string(what) + " " + pair + " has an endpoint outside [0," +
                     std::to_string(n) + ")");
  }
  if (a.from == a.to) {
    throw GraphError(std::string(what) + " " + pair + " is a loop");
  }
}

template <class Neighbors>
std::vector<int> bfs_levels(int n, Vertex s, Neighbors&& neighbors) {
  std::vector<int> level(static_cast<std::size_t>(n), kUnreachable);
  std::deque<Vertex> queue{s};
  level[s] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : neighbors(v)) {
      if (level[u] == kUnreachable) {
        level[u] = level[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return level;
}

BfsLayering layering_from_levels(Vertex s, std::vector<int> level) {
  BfsLayering result;
  result.source = s;
  int max_level = 0;
  for (int l : level) max_level = std::max(max_level, l);
  result.layers.assign(static_cast<std::size_t>(max_level) + 1, {});
  for (Vertex v = 0; v < static_cast<Vertex>(level.size()); ++v) {
    if (level[v] != kUnreachable) result.layers[level[v]].push_back(v);
  }
  result.ell_max = max_level;
  result.level = std::move(level);
  return result;
}

// Strong connectivity of g - removed (removed may be -1).
bool strongly_connected_without(const DirectedGraph& g, Vertex removed) {
  const int n = g.vertex_count();
  Vertex root = 0;
  if (root == removed) root = 1;
  if (root >= n) return true;
  auto sweep = [&](bool forward) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Vertex> stack{root};
    seen[root] = true;
    int count = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : forward ? g.out(v) : g.in(v)) {
        if (u != removed && !seen[u]) {
          seen[u] = true;
          ++count;
          stack.push_back(u);
        }
      }
    }
    return count == n - (removed >= 0 ? 1 : 0);
  };
  return sweep(true) && sweep(false);
}

bool connected_without(const UndirectedGraph& g, Vertex removed) {
  const int n = g.vertex_count();
  Vertex root = 0;
  if (root == removed) root = 1;
  if (root >= n) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Vertex> stack{root};
  seen[root] = true;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (u != removed && !seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n - (removed >= 0 ? 1 : 0);
}

}  // namespace

// ---------------------------------------------------------------------------

DirectedGraph DirectedGraph::build(int n, std::span<const Arc> arcs) {
  if (n < 0) throw GraphError("negative vertex count");
  std::vector<Arc> sorted(arcs.begin(), arcs.end());
  for (const Arc& a : sorted) check_endpoints(n, a, "arc");
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  DirectedGraph g;
  g.n_ = n;
  g.out_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.in_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Arc& a : sorted) {
    ++g.out_offsets_[a.from + 1];
    ++g.in_offsets_[a.to + 1];
  }
  std::partial_sum(g.out_offsets_.begin(), g.out_offsets_.end(), g.out_offsets_.begin());
  std::partial_sum(g.in_offsets_.begin(), g.in_offsets_.end(), g.in_offsets_.begin());
  g.out_targets_.resize(sorted.size());
  g.in_sources_.resize(sorted.size());
  std::vector<std::size_t> out_pos(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
  std::vector<std::size_t> in_pos(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  // Arcs are sorted by (from,to), so both indices come out sorted.
  for (const Arc& a : sorted) {
    g.out_targets_[out_pos[a.from]++] = a.to;
    g.in_sources_[in_pos[a.to]++] = a.from;
  }
  return g;
}

bool DirectedGraph::has_arc(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_) return false;
  auto o = out(u);
  return std::binary_search(o.begin(), o.end(), v);
}

std::vector<Arc> DirectedGraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : out(u)) result.push_back({u, v});
  }
  return result;
}

UndirectedGraph UndirectedGraph::build(int n, std::span<const Arc> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  std::vector<Arc> normalized;
  normalized.reserve(edges.size());
  for (const Arc& e : edges) {
    check_endpoints(n, e, "edge");
    normalized.push_back({std::min(e.from, e.to), std::max(e.from, e.to)});
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

  UndirectedGraph g;
  g.n_ = n;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Arc& e : normalized) {
    ++g.offsets_[e.from + 1];
    ++g.offsets_[e.to + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adj_.resize(2 * normalized.size());
  std::vector<std::size_t> pos(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Arc& e : normalized) {
    g.adj_[pos[e.from]++] = e.to;
    g.adj_[pos[e.to]++] = e.from;
  }
  for (Vertex v = 0; v < n; ++v) {
    std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  g.edges_ = std::move(normalized);
  return g;
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

DirectedGraph transpose(const DirectedGraph& g) {
  std::vector<Arc> arcs = g.arcs();
  for (Arc& a : arcs) std::swap(a.from, a.to);
  return DirectedGraph::build(g.vertex_count(), arcs);
}

DirectedGraph symmetrize(const UndirectedGraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.edge_count());
  for (const Arc& e : g.edges()) {
    arcs.push_back(e);
    arcs.push_back({e.to, e.from});
  }
  return DirectedGraph::build(g.vertex_count(), arcs);
}

InducedSubgraph induced_subgraph(const DirectedGraph& g, const std::vector<bool>& keep) {
  InducedSubgraph result;
  result.from_parent.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (keep[v]) {
      result.from_parent[v] = static_cast<Vertex>(result.to_parent.size());
      result.to_parent.push_back(v);
    }
  }
  std::vector<Arc> arcs;
  for (Vertex v : result.to_parent) {
    for (Vertex u : g.out(v)) {
      if (keep[u]) arcs.push_back({result.from_parent[v], result.from_parent[u]});
    }
  }
  result.graph = DirectedGraph::build(static_cast<int>(result.to_parent.size()), arcs);
  return result;
}

// ---------------------------------------------------------------------------

std::vector<Vertex> concat_paths(std::initializer_list<std::span<const Vertex>> parts) {
  std::vector<Vertex> result;
  for (auto part : parts) {
    if (part.empty()) continue;
    auto begin = part.begin();
    if (!result.empty() && result.back() == part.front()) ++begin;
    result.insert(result.end(), begin, part.end());
  }
  return result;
}

std::vector<Vertex> reversed(std::span<const Vertex> path) {
  return {path.rbegin(), path.rend()};
}

// ---------------------------------------------------------------------------

BfsLayering bfs_layering(const DirectedGraph& g, Vertex s) {
  return layering_from_levels(s, distances_from(g, s));
}

BfsLayering bfs_layering(const UndirectedGraph& g, Vertex s) {
  return layering_from_levels(s, distances_from(g, s));
}

std::vector<int> distances_from(const DirectedGraph& g, Vertex s) {
  return bfs_levels(g.vertex_count(), s, [&](Vertex v) { return g.out(v); });
}

std::vector<int> distances_from(const UndirectedGraph& g, Vertex s) {
  return bfs_levels(g.vertex_count(), s, [&](Vertex v) { return g.neighbors(v); });
}

std::optional<std::vector<Vertex>> shortest_path(const DirectedGraph& g, Vertex s, Vertex t) {
  const int n = g.vertex_count();
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<Vertex> queue{s};
  seen[s] = true;
  while (!queue.empty() && !seen[t]) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.out(v)) {
      if (!seen[u]) {
        seen[u] = true;
        parent[u] = v;
        queue.push_back(u);
      }
    }
  }
  if (!seen[t]) return std::nullopt;
  std::vector<Vertex> path;
  for (Vertex v = t; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

template <class Graph>
DiameterInfo diameter_impl(const Graph& g) {
  DiameterInfo best;
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    const auto dist = distances_from(g, u);
    for (Vertex v = 0; v < n; ++v) {
      if (dist[v] == kUnreachable) {
        throw NotStronglyConnected("graph is not strongly connected: " + std::to_string(v) +
                                   " is unreachable from " + std::to_string(u));
      }
      if (dist[v] > best.diameter) best = {dist[v], u, v};
    }
  }
  return best;
}

}  // namespace

DiameterInfo diameter_and_pair(const DirectedGraph& g) { return diameter_impl(g); }
DiameterInfo diameter_and_pair(const UndirectedGraph& g) { return diameter_impl(g); }

std::vector<bool> reachable_set(const DirectedGraph& g, Vertex s) {
  const auto dist = distances_from(g, s);
  std::vector<bool> result(dist.size());
  for (std::size_t v = 0; v < dist.size(); ++v) result[v] = dist[v] != kUnreachable;
  return result;
}

std::vector<bool> co_reachable_set(const DirectedGraph& g, Vertex t) {
  const auto dist = bfs_levels(g.vertex_count(), t, [&](Vertex v) { return g.in(v); });
  std::vector<bool> result(dist.size());
  for (std::size_t v = 0; v < dist.size(); ++v) result[v] = dist[v] != kUnreachable;
  return result;
}

bool is_strongly_connected(const DirectedGraph& g) { return strongly_connected_without(g, -1); }

bool is_connected(const UndirectedGraph& g) { return connected_without(g, -1); }

bool is_2_strongly_connected(const DirectedGraph& g, std::string* diagnostic) {
  if (g.vertex_count() < 2) {
    if (diagnostic) *diagnostic = "2-strong connectivity needs at least 2 vertices";
    return false;
  }
  if (!strongly_connected_without(g, -1)) {
    if (diagnostic) *diagnostic = "graph is not strongly connected";
    return false;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!strongly_connected_without(g, v)) {
      if (diagnostic) *diagnostic = "removing vertex " + std::to_string(v) + " breaks strong connectivity";
      return false;
    }
  }
  return true;
}

bool is_2_connected_undirected(const UndirectedGraph& g, std::string* diagnostic) {
  if (g.vertex_count() < 2) {
    if (diagnostic) *diagnostic = "2-connectivity needs at least 2 vertices";
    return false;
  }
  if (!connected_without(g, -1)) {
    if (diagnostic) *diagnostic = "graph is not connected";
    return false;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!connected_without(g, v)) {
      if (diagnostic) *diagnostic = "vertex " + std::to_string(v) + " is an articulation vertex";
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<Vertex>> internally_disjoint_paths(const DirectedGraph& g, Vertex s,
                                                           Vertex t, int limit,
                                                           const std::vector<bool>* blocked) {
  if (s == t) throw GraphError("disjoint paths need distinct endpoints");
  const int n = g.vertex_count();
  // Node 2v is v_in, 2v+1 is v_out; the split arc carries the vertex capacity.
  struct Edge {
    int to;
    int cap;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(2 * n));
  auto add = [&](int a, int b, int cap) {
    incident[a].push_back(static_cast<int>(edges.size()));
    edges.push_back({b, cap});
    incident[b].push_back(static_cast<int>(edges.size()));
    edges.push_back({a, 0});
  };
  auto usable = [&](Vertex v) { return !blocked || !(*blocked)[v] || v == s || v == t; };
  for (Vertex v = 0; v < n; ++v) {
    if (!usable(v)) continue;
    add(2 * v, 2 * v + 1, (v == s || v == t) ? limit : 1);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!usable(v)) continue;
    for (Vertex u : g.out(v)) {
      if (usable(u)) add(2 * v + 1, 2 * u, 1);
    }
  }

  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  while (flow < limit) {
    std::vector<int> via(static_cast<std::size_t>(2 * n), -1);
    std::deque<int> queue{source};
    std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
    seen[source] = true;
    while (!queue.empty() && !seen[sink]) {
      const int x = queue.front();
      queue.pop_front();
      for (int e : incident[x]) {
        if (edges[e].cap > 0 && !seen[edges[e].to]) {
          seen[edges[e].to] = true;
          via[edges[e].to] = e;
          queue.push_back(edges[e].to);
        }
      }
    }
    if (!seen[sink]) break;
    for (int x = sink; x != source;) {
      const int e = via[x];
      edges[e].cap -= 1;
      edges[e ^ 1].cap += 1;
      x = edges[e ^ 1].to;
    }
    ++flow;
  }

  // Decompose: an arc u_out -> v_in carries flow iff its reverse has capacity.
  std::vector<std::vector<Vertex>> paths;
  std::vector<std::vector<int>> flow_out(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (int e : incident[2 * v + 1]) {
      if ((e & 1) == 0 && edges[e].to % 2 == 0 && edges[e ^ 1].cap > 0) {
        flow_out[v].push_back(edges[e].to / 2);
      }
    }
  }
  for (int i = 0; i < flow; ++i) {
    std::vector<Vertex> path{s};
    Vertex v = s;
    while (v != t) {
      const Vertex next = flow_out[v].back();
      flow_out[v].pop_back();
      path.push_back(next);
      v = next;
    }
    paths.push_back(std::move(path));
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

std::optional<std::pair<PathWitness, PathWitness>> two_internally_disjoint_paths(
    const DirectedGraph& g, Vertex s, Vertex t) {
  auto paths = internally_disjoint_paths(g, s, t, 2);
  if (paths.size() < 2) return std::nullopt;
  return std::pair{PathWitness::validated(g, std::move(paths[0]), "disjoint-pair"),
                   PathWitness::validated(g, std::move(paths[1]), "disjoint-pair")};
}

std::optional<std::pair<PathWitness, PathWitness>> two_internally_disjoint_paths(
    const UndirectedGraph& g, Vertex s, Vertex t) {
  auto paths = internally_disjoint_paths(symmetrize(g), s, t, 2);
  if (paths.size() < 2) return std::nullopt;
  return std::pair{PathWitness::validated(g, std::move(paths[0]), "disjoint-pair"),
                   PathWitness::validated(g, std::move(paths[1]), "disjoint-pair")};
}

}  // namespace agp
