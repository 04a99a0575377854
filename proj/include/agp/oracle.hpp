#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "agp/graph.hpp"

namespace agp {

enum class OracleEngine { automatic, subset_dp, branch_and_bound };

struct OracleLimits {
  int dp_vertex_cap = 20;                     // subset DP only when n <= cap; cap <= 25
  std::uint64_t bnb_node_budget = 100'000'000;
  OracleEngine engine = OracleEngine::automatic;
};

struct OracleAnswer {
  int value = 0;
  PathWitness witness;
  bool exact = true;  // false only when branch-and-bound ran out of nodes
};

class UnreachableTarget : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Longest simple path anywhere in g.
OracleAnswer longest_path_oracle(const DirectedGraph& g, const OracleLimits& limits = {});
OracleAnswer longest_path_oracle(const UndirectedGraph& g, const OracleLimits& limits = {});

/// Longest simple (s,t)-path; nullopt when t is unreachable from s.
std::optional<OracleAnswer> longest_st_path_oracle(const DirectedGraph& g, Vertex s, Vertex t,
                                                   const OracleLimits& limits = {});
std::optional<OracleAnswer> longest_st_path_oracle(const UndirectedGraph& g, Vertex s, Vertex t,
                                                   const OracleLimits& limits = {});

struct DetourOracleAnswer {
  int k_star = 0;  // longest (s,t)-path minus dist(s,t)
  int distance = 0;
  OracleAnswer longest;
};

/// Throws UnreachableTarget when t cannot be reached from s.
DetourOracleAnswer detour_oracle(const DirectedGraph& g, Vertex s, Vertex t,
                                 const OracleLimits& limits = {});
DetourOracleAnswer detour_oracle(const UndirectedGraph& g, Vertex s, Vertex t,
                                 const OracleLimits& limits = {});

enum class SearchStatus { found, absent, inconclusive };

struct HamiltonianSearch {
  SearchStatus status = SearchStatus::absent;
  std::optional<PathWitness> witness;
};

HamiltonianSearch hamiltonian_path_from(const UndirectedGraph& g, Vertex w,
                                        const OracleLimits& limits = {});

}  // namespace agp
