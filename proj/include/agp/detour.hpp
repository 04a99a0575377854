#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "agp/disjoint_paths.hpp"
#include "agp/graph.hpp"
#include "agp/subroutines.hpp"

namespace agp {

struct DetourQuery {
  std::variant<std::reference_wrapper<const DirectedGraph>,
               std::reference_wrapper<const UndirectedGraph>>
      graph;
  Vertex s = 0;
  Vertex t = 0;
  int k = 0;
};

enum class Verdict { yes, no, inconclusive };

enum class DetourStage {
  trivial_k0,
  unreachable,
  exact_probe,
  pair_enumeration,
  case1,
  case2,
  exhausted,
};

std::string to_string(Verdict v);
std::string to_string(DetourStage s);

/// Symbols of the configuration that produced an answer. Vertex ids refer to
/// the input graph.
struct DetourTrace {
  std::optional<int> p, q, r, ell;
  std::optional<Vertex> u, v, w, x, y;
  std::vector<Vertex> X;        // case 2: vertices that reach t inside H
  std::vector<Vertex> region_h; // case 2: vertex set of H
};

struct InconclusiveEvent {
  DetourStage stage;
  std::string subroutine;
  std::string detail;
};

struct DetourAnswer {
  Verdict verdict = Verdict::no;
  std::optional<PathWitness> witness;
  DetourStage stage = DetourStage::exhausted;
  std::optional<DetourTrace> trace;
  int distance = -1;  // dist(s,t), or -1 when unreachable
  std::vector<DetourStage> completed_stages;
  std::vector<InconclusiveEvent> inconclusive;
};

struct DetourConfig {
  SubroutineConfig subroutine;
  std::string backend = "exhaustive";
  ChainOptions chain;
  int threads = 1;  // workers for pair and u enumeration
};

DetourAnswer solve_directed_detour(const DetourQuery& q, const DetourConfig& cfg = {});
DetourAnswer solve_undirected_detour(const DetourQuery& q, const DetourConfig& cfg = {});

/// Dispatches on the graph kind held by the query.
DetourAnswer solve_detour(const DetourQuery& q, const DetourConfig& cfg = {});

/// Human-readable report of stage, trace symbols and witness.
std::string explain(const DetourAnswer& answer);

}  // namespace agp
