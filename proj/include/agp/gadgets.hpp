#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "agp/graph.hpp"

namespace agp {

/// Role map of a constructed G_ell. Roles are 1-indexed as in the drawings:
/// source[i] is s_i, sink[i] is t_i, hats[j][i] is h_i of hat j (hats are
/// numbered 1..2*ell-1; index 0 of every array is unused and holds -1).
struct GadgetBlueprint {
  int ell = 0;
  Vertex s = -1;
  Vertex t = -1;
  std::array<Vertex, 15> source{};
  std::array<Vertex, 15> sink{};
  std::vector<std::array<Vertex, 11>> hats;  // hats[0] unused
  int median_hat = 0;

  int hat_count() const { return 2 * ell - 1; }
  int vertex_count() const { return 16 * ell + 20; }
  Vertex hat(int j, int i) const { return hats[j][i]; }

  friend bool operator==(const GadgetBlueprint&, const GadgetBlueprint&) = default;
};

struct GadgetGraph {
  DirectedGraph graph;
  GadgetBlueprint blueprint;
};

GadgetGraph build_G_ell(int ell);

/// The two internally disjoint (s,t)-paths of length 8*ell+10 that together
/// cover every vertex.
std::vector<Vertex> gadget_path_p1(const GadgetBlueprint& bp);
std::vector<Vertex> gadget_path_p2(const GadgetBlueprint& bp);

/// s9 s10 s, P1, t t10 t9: length 8*ell+14.
PathWitness witness_long_path(const DirectedGraph& g, const GadgetBlueprint& bp);
PathWitness witness_long_path(const GadgetBlueprint& bp);

/// A path of length 4*ell+15 ending at h8 of the median hat.
PathWitness witness_h8_path(const DirectedGraph& g, const GadgetBlueprint& bp);
PathWitness witness_h8_path(const GadgetBlueprint& bp);

struct VerifyClause {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyClause> clauses;
  bool ok() const;
  std::string to_text() const;
};

/// Checks the structural and metric properties of G_ell against `g`.
VerifyReport verify_G_ell(const DirectedGraph& g, const GadgetBlueprint& bp);

// ---------------------------------------------------------------------------
// Hardness reductions

enum class ReductionKind { k1_undirected, kge5_2sc };

std::string to_string(ReductionKind kind);

struct ReductionEmbedding {
  std::vector<Vertex> source_to_target;  // input vertex -> vertex of the output
  // undirected k=1 construction
  Vertex universal = -1;
  std::vector<Vertex> pendant_s;  // s .. neighbour of u
  std::vector<Vertex> pendant_t;  // neighbour of u .. t
  // 2-strongly-connected construction
  std::optional<GadgetBlueprint> blueprint;
  std::array<Vertex, 5> connector{-1, -1, -1, -1, -1};  // c1..c4 at 1..4
};

struct ReductionInstance {
  ReductionKind kind = ReductionKind::k1_undirected;
  DirectedGraph graph;                       // symmetric for the undirected kind
  std::optional<UndirectedGraph> undirected; // set for the undirected kind
  UndirectedGraph source;
  Vertex w = -1;                             // chosen start vertex (2sc kind)
  ReductionEmbedding embedding;
  int target_k = 0;
  int claimed_diameter = 0;
};

class ReductionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Copy of g, a universal vertex u and two pendant paths of length n-1
/// ending in u. The output has a path of length 2n-1 iff g has a
/// Hamiltonian path. Requires n >= 2.
ReductionInstance reduce_k1(const UndirectedGraph& g);

/// Smallest ell admitted for a given k (k >= 5).
int kge5_min_ell(int k);

/// Symmetrised H glued to G_ell through the connector c1..c4 with c2 = w.
/// Requires H 2-connected and |V(H)| = 4*ell + (k-5) with ell at least
/// kge5_min_ell(k); the error message names the nearest admissible size.
ReductionInstance reduce_kge5(const UndirectedGraph& h, Vertex w, int k);

/// One instance per choice of w.
std::vector<ReductionInstance> reduce_kge5_family(const UndirectedGraph& h, int k);

/// Extends the h8 witness of G_ell through c4 -> c2 = w and along a
/// Hamiltonian path of H starting at w. Throws InvalidWitness if `ham` is not
/// such a path.
PathWitness lift_ham_witness(const ReductionInstance& r, const std::vector<Vertex>& ham);

}  // namespace agp
