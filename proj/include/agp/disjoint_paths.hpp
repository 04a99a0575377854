#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "agp/graph.hpp"
#include "agp/oracle.hpp"

namespace agp {

/// Terminals of a chain instance: disjoint (s,w)-, (w,v)- and (v,t)-paths.
/// s, w, v are distinct and t differs from s and w. v == t is accepted as the
/// degenerate chain whose last path is the single vertex t.
struct ChainQuery {
  const DirectedGraph& graph;
  Vertex s;
  Vertex w;
  Vertex v;
  Vertex t;
};

struct ChainSolution {
  PathWitness r1;
  PathWitness r2;
  PathWitness r3;
  int total_length = 0;

  /// r1 . r2 . r3 as one (s,t)-path.
  std::vector<Vertex> concatenated() const;
};

struct ChainOutcome {
  SearchStatus status = SearchStatus::absent;
  std::optional<ChainSolution> solution;
};

struct ChainOptions {
  std::uint64_t node_budget = 10'000'000;
};

using ChainBackend = std::function<ChainOutcome(const ChainQuery&, const ChainOptions&)>;

/// Registers (or replaces) a backend under `name`.
void register_chain_backend(const std::string& name, ChainBackend backend);
std::vector<std::string> chain_backend_names();
bool has_chain_backend(const std::string& name);

/// Throws std::invalid_argument for an unknown backend or a malformed query.
ChainOutcome solve_chain3(const ChainQuery& q, const std::string& backend = "exhaustive",
                          const ChainOptions& options = {});

/// Value of the order-free relaxation: vertex-disjoint routing from {s,w,v}
/// to {w,v,t} as a single commodity (at most 3; at most 2 when v == t).
int chain_flow_relaxation(const ChainQuery& q);

}  // namespace agp
