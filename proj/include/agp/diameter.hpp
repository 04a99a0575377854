#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "agp/detour.hpp"
#include "agp/graph.hpp"
#include "agp/subroutines.hpp"

namespace agp {

/// Diameter above which every 2-strongly-connected digraph is guaranteed a
/// path of length diam+4: 2^(3^17). Far beyond any representable size, so
/// it is kept as documentation and never compared against.
inline constexpr const char* DIAM_GUARANTEE = "2^(3^17)";

enum class LpadMode { undirected2c, directed2sc, oracle };

std::string to_string(LpadMode m);
std::optional<LpadMode> parse_lpad_mode(const std::string& name);

struct LpadQuery {
  std::variant<std::reference_wrapper<const DirectedGraph>,
               std::reference_wrapper<const UndirectedGraph>>
      graph;
  int k = 0;
  LpadMode mode = LpadMode::oracle;
};

/// Raised when the graph does not satisfy the connectivity required by the
/// selected mode (or the mode does not match the graph kind).
class LpadPreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BuilderOutcome {
  enum class Status { built, failed };
  Status status = Status::failed;
  std::optional<PathWitness> witness;
  std::string step;       // construction that produced the witness
  std::string failed_at;  // one of the labels below when failed
  int diameter = 0;

  bool built() const { return status == Status::built; }
};

/// Labels used in BuilderOutcome::failed_at.
inline constexpr const char* kBuilderLabels[] = {
    "disjoint-st-paths", "long-Pi",           "outer-scan",
    "alternation-scan",  "five-path-near-s",  "five-path-near-t",
    "combination"};

/// Best-effort construction of a path of length >= diam+4 in a
/// 2-strongly-connected digraph. Every candidate is validated before it is
/// returned. Throws LpadPreconditionError on other inputs.
BuilderOutcome build_diam_plus4_path(const DirectedGraph& g);

struct LpadAnswer {
  Verdict verdict = Verdict::no;
  std::optional<PathWitness> witness;
  int diameter = 0;
  std::string stage;  // "cycle", "builder", "exact-search", "oracle"
  bool randomized = false;
  double failure_probability = 0.0;
  std::optional<BuilderOutcome> builder;
  std::vector<std::string> notices;
  std::vector<std::string> inconclusive;  // subroutines that ran out of budget
};

struct LpadConfig {
  SubroutineConfig subroutine;
};

LpadAnswer solve_lpad_undirected_2connected(const UndirectedGraph& g, int k,
                                            const LpadConfig& cfg = {});

LpadAnswer solve_lpad(const LpadQuery& q, const LpadConfig& cfg = {});

}  // namespace agp
