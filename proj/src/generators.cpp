#include "agp/generators.hpp"

#include <algorithm>
#include <numeric>

namespace agp::gen {

namespace {

std::vector<Vertex> permutation(Rng& rng, int n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

void add_random_arcs(Rng& rng, int n, double p, bool undirected, std::vector<Arc>& arcs) {
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = undirected ? u + 1 : 0; v < n; ++v) {
      if (u != v && coin(rng)) arcs.push_back({u, v});
    }
  }
}

void require_at_least(int n, int min, const char* what) {
  if (n < min) throw GraphError(std::string(what) + " needs n >= " + std::to_string(min));
}

}  // namespace

DirectedGraph random_digraph(Rng& rng, int n, double p) {
  std::vector<Arc> arcs;
  add_random_arcs(rng, n, p, false, arcs);
  return DirectedGraph::build(n, arcs);
}

UndirectedGraph random_undirected(Rng& rng, int n, double p) {
  std::vector<Arc> edges;
  add_random_arcs(rng, n, p, true, edges);
  return UndirectedGraph::build(n, edges);
}

UndirectedGraph random_connected_undirected(Rng& rng, int n, double p) {
  require_at_least(n, 1, "connected graph");
  std::vector<Arc> edges;
  const auto perm = permutation(rng, n);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.push_back({perm[i], perm[pick(rng)]});
  }
  add_random_arcs(rng, n, p, true, edges);
  return UndirectedGraph::build(n, edges);
}

UndirectedGraph random_2_connected_undirected(Rng& rng, int n, double p) {
  require_at_least(n, 3, "2-connected graph");
  std::vector<Arc> edges;
  const auto perm = permutation(rng, n);
  for (int i = 0; i < n; ++i) edges.push_back({perm[i], perm[(i + 1) % n]});
  add_random_arcs(rng, n, p, true, edges);
  return UndirectedGraph::build(n, edges);
}

DirectedGraph random_2_strongly_connected(Rng& rng, int n, double p) {
  require_at_least(n, 3, "2-strongly-connected graph");
  std::vector<Arc> arcs;
  const auto perm = permutation(rng, n);
  for (int i = 0; i < n; ++i) {
    arcs.push_back({perm[i], perm[(i + 1) % n]});
    arcs.push_back({perm[i], perm[(i + 2) % n]});
  }
  add_random_arcs(rng, n, p, false, arcs);
  return DirectedGraph::build(n, arcs);
}

DirectedGraph random_2sc_bidirected_cycle(Rng& rng, int n, double p) {
  require_at_least(n, 3, "2-strongly-connected graph");
  std::vector<Arc> arcs;
  const auto perm = permutation(rng, n);
  for (int i = 0; i < n; ++i) {
    arcs.push_back({perm[i], perm[(i + 1) % n]});
    arcs.push_back({perm[(i + 1) % n], perm[i]});
  }
  add_random_arcs(rng, n, p, false, arcs);
  return DirectedGraph::build(n, arcs);
}

}  // namespace agp::gen
