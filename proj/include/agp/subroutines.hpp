#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "agp/graph.hpp"
#include "agp/oracle.hpp"

namespace agp {

enum class Strategy { automatic, color_coding, subset_dp, branch_and_bound };

std::string to_string(Strategy s);
std::optional<Strategy> parse_strategy(const std::string& name);

struct SubroutineConfig {
  Strategy strategy = Strategy::automatic;
  std::uint64_t seed = 0x5eedULL;
  double failure_probability = 1e-3;  // delta for color coding
  OracleLimits limits;
};

struct PathSearch {
  SearchStatus status = SearchStatus::absent;
  std::optional<PathWitness> witness;
  std::string engine;
  bool randomized = false;
  double failure_probability = 0.0;  // meaningful for randomized "absent"
  std::uint64_t trials = 0;          // color-coding trials actually run

  bool found() const { return status == SearchStatus::found; }
  bool inconclusive() const { return status == SearchStatus::inconclusive; }
};

/// Some path with at least k arcs. Color coding looks for a colourful path
/// of exactly k arcs with k+1 colours (a longer path has such a prefix).
PathSearch has_path_at_least(const DirectedGraph& g, int k, const SubroutineConfig& cfg = {});

/// Some (s,t)-path with at least k arcs. Color coding here only sees paths
/// with at most max(k, min(2k, n-1)) arcs and is therefore a weaker test.
PathSearch long_st_path(const DirectedGraph& g, Vertex s, Vertex t, int k,
                        const SubroutineConfig& cfg = {});

/// Some (s,t)-path with exactly dist(s,t)+ell arcs. Throws UnreachableTarget.
PathSearch exact_detour(const DirectedGraph& g, Vertex s, Vertex t, int ell,
                        const SubroutineConfig& cfg = {});

/// Number of color-coding trials for c colours and failure probability delta.
std::uint64_t color_coding_trials(int colors, double delta);

}  // namespace agp
