#pragma once

#include <random>

#include "agp/graph.hpp"

namespace agp::gen {

using Rng = std::mt19937_64;

/// Each ordered pair becomes an arc with probability p.
DirectedGraph random_digraph(Rng& rng, int n, double p);

/// Each unordered pair becomes an edge with probability p.
UndirectedGraph random_undirected(Rng& rng, int n, double p);

/// Random spanning tree plus G(n,p) edges.
UndirectedGraph random_connected_undirected(Rng& rng, int n, double p);

/// Random Hamiltonian cycle plus G(n,p) edges; n >= 3.
UndirectedGraph random_2_connected_undirected(Rng& rng, int n, double p);

/// Relabelled ring with arcs i->i+1 and i->i+2 plus random extra arcs; n >= 3.
DirectedGraph random_2_strongly_connected(Rng& rng, int n, double p);

/// Relabelled bidirected cycle plus random extra arcs (larger diameter); n >= 3.
DirectedGraph random_2sc_bidirected_cycle(Rng& rng, int n, double p);

}  // namespace agp::gen
