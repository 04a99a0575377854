#include "doctest.h"

#include "agp/generators.hpp"
#include "agp/oracle.hpp"
#include "brute_force.hpp"

using namespace agp;

namespace {

// s=0, a=1, t=2, b1..b4 = 3..6
DirectedGraph two_parallel_paths() {
  return DirectedGraph::build(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}});
}

DirectedGraph directed_path(int n) {
  std::vector<Arc> arcs;
  for (Vertex i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  return DirectedGraph::build(n, arcs);
}

DirectedGraph complete_digraph(int n) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) arcs.push_back({u, v});
  return DirectedGraph::build(n, arcs);
}

UndirectedGraph petersen() {
  std::vector<Arc> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return UndirectedGraph::build(10, e);
}

const OracleLimits kDp{20, 100'000'000, OracleEngine::subset_dp};
const OracleLimits kBnb{20, 100'000'000, OracleEngine::branch_and_bound};

}  // namespace

TEST_CASE("longest_path_oracle examples") {
  for (const auto& lim : {kDp, kBnb}) {
    auto a = longest_path_oracle(directed_path(5), lim);
    CHECK(a.value == 4);
    CHECK(a.exact);
    CHECK(a.witness.length() == 4);

    std::vector<Arc> c6;
    for (Vertex i = 0; i < 6; ++i) c6.push_back({i, (i + 1) % 6});
    CHECK(longest_path_oracle(DirectedGraph::build(6, c6), lim).value == 5);
  }
}

TEST_CASE("longest_st_path_oracle examples") {
  for (const auto& lim : {kDp, kBnb}) {
    auto a = longest_st_path_oracle(two_parallel_paths(), 0, 2, lim);
    REQUIRE(a.has_value());
    CHECK(a->value == 5);
    CHECK(a->witness.front() == 0);
    CHECK(a->witness.back() == 2);

    auto arc = DirectedGraph::build(2, {{0, 1}});
    CHECK(longest_st_path_oracle(arc, 0, 1, lim)->value == 1);
    CHECK_FALSE(longest_st_path_oracle(arc, 1, 0, lim).has_value());
  }
  CHECK_THROWS(longest_st_path_oracle(two_parallel_paths(), 1, 1));
}

TEST_CASE("detour_oracle examples") {
  auto a = detour_oracle(two_parallel_paths(), 0, 2);
  CHECK(a.distance == 2);
  CHECK(a.k_star == 3);
  CHECK(detour_oracle(directed_path(5), 0, 4).k_star == 0);
  CHECK(detour_oracle(complete_digraph(4), 0, 3).k_star == 2);
  CHECK_THROWS_AS(detour_oracle(directed_path(5), 4, 0), UnreachableTarget);
}

TEST_CASE("hamiltonian_path_from examples") {
  std::vector<Arc> c6;
  for (Vertex i = 0; i < 6; ++i) c6.push_back({i, (i + 1) % 6});
  auto cycle = UndirectedGraph::build(6, c6);
  for (Vertex w = 0; w < 6; ++w) {
    auto h = hamiltonian_path_from(cycle, w);
    REQUIRE(h.status == SearchStatus::found);
    CHECK(h.witness->length() == 5);
    CHECK(h.witness->front() == w);
  }
  auto star = UndirectedGraph::build(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(hamiltonian_path_from(star, 0).status == SearchStatus::absent);
  CHECK(hamiltonian_path_from(star, 0, kBnb).status == SearchStatus::absent);
  for (Vertex w = 0; w < 10; ++w) {
    CHECK(hamiltonian_path_from(petersen(), w).status == SearchStatus::found);
    CHECK(hamiltonian_path_from(petersen(), w, kBnb).status == SearchStatus::found);
  }
}

TEST_CASE("tiny budget makes branch-and-bound inexact") {
  OracleLimits tiny{0, 3, OracleEngine::branch_and_bound};
  auto a = longest_path_oracle(complete_digraph(7), tiny);
  CHECK_FALSE(a.exact);
  CHECK(a.witness.length() == a.value);
  auto wheel = UndirectedGraph::build(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {0, 3}});
  CHECK(hamiltonian_path_from(wheel, 1, tiny).status == SearchStatus::inconclusive);
}

TEST_CASE("subset DP and branch-and-bound agree with brute force") {
  gen::Rng rng(31337);
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const double p = (i % 3 == 0) ? 0.15 : (i % 3 == 1 ? 0.3 : 0.5);
    auto g = gen::random_digraph(rng, n, p);
    auto dp = longest_path_oracle(g, kDp);
    auto bb = longest_path_oracle(g, kBnb);
    CHECK(dp.value == bb.value);
    CHECK(bb.exact);
    const Vertex s = 0, t = n - 1;
    auto sdp = longest_st_path_oracle(g, s, t, kDp);
    auto sbb = longest_st_path_oracle(g, s, t, kBnb);
    REQUIRE(sdp.has_value() == sbb.has_value());
    if (n <= 9) {
      CHECK(dp.value == brute::longest_path(g));
      auto lengths = brute::st_path_lengths(g, s, t);
      CHECK(sdp.has_value() == !lengths.empty());
      if (sdp) CHECK(sdp->value == *lengths.rbegin());
    }
    if (sdp) {
      CHECK(sdp->value == sbb->value);
      CHECK(sdp->value >= distances_from(g, s)[t]);
      CHECK(sdp->witness.front() == s);
      CHECK(sdp->witness.back() == t);
    }
  }
}

TEST_CASE("undirected oracle matches brute force") {
  gen::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto g = gen::random_connected_undirected(rng, 2 + static_cast<int>(rng() % 8), 0.3);
    CHECK(longest_path_oracle(g).value == brute::longest_path(g));
    CHECK(longest_path_oracle(g, kBnb).value == brute::longest_path(g));
  }
}
