#include "doctest.h"

#include "agp/generators.hpp"
#include "agp/subroutines.hpp"
#include "brute_force.hpp"

using namespace agp;

namespace {

DirectedGraph two_parallel_paths() {
  return DirectedGraph::build(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}});
}

DirectedGraph directed_path(int n) {
  std::vector<Arc> arcs;
  for (Vertex i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  return DirectedGraph::build(n, arcs);
}

SubroutineConfig with(Strategy s, std::uint64_t seed = 1) {
  SubroutineConfig cfg;
  cfg.strategy = s;
  cfg.seed = seed;
  return cfg;
}

const Strategy kExact[] = {Strategy::subset_dp, Strategy::branch_and_bound};
const Strategy kAll[] = {Strategy::subset_dp, Strategy::branch_and_bound, Strategy::color_coding};

}  // namespace

TEST_CASE("has_path_at_least examples") {
  for (Strategy s : kAll) {
    CAPTURE(to_string(s));
    auto r = has_path_at_least(directed_path(5), 4, with(s));
    REQUIRE(r.found());
    CHECK(r.witness->length() >= 4);
    auto star = DirectedGraph::build(4, {{0, 1}, {0, 2}, {0, 3}});
    auto none = has_path_at_least(star, 2, with(s));
    CHECK(none.status == SearchStatus::absent);
  }
  auto cc = has_path_at_least(DirectedGraph::build(4, {{0, 1}, {0, 2}, {0, 3}}), 2, with(Strategy::color_coding));
  CHECK(cc.randomized);
  CHECK(cc.failure_probability == doctest::Approx(1e-3));
  CHECK(cc.trials == color_coding_trials(3, 1e-3));
}

TEST_CASE("long_st_path examples") {
  for (Strategy s : kExact) {
    CAPTURE(to_string(s));
    auto g = two_parallel_paths();
    auto five = long_st_path(g, 0, 2, 5, with(s));
    REQUIRE(five.found());
    CHECK(five.witness->length() == 5);
    CHECK(long_st_path(g, 0, 2, 6, with(s)).status == SearchStatus::absent);
    auto zero = long_st_path(g, 0, 2, 0, with(s));
    REQUIRE(zero.found());
    CHECK(zero.witness->length() == 2);
  }
}

TEST_CASE("exact_detour examples") {
  auto g = two_parallel_paths();
  for (Strategy s : kAll) {
    CAPTURE(to_string(s));
    auto zero = exact_detour(g, 0, 2, 0, with(s));
    REQUIRE(zero.found());
    CHECK(zero.witness->length() == 2);
    CHECK(zero.witness->baseline == 2);
    auto three = exact_detour(g, 0, 2, 3, with(s));
    REQUIRE(three.found());
    CHECK(three.witness->length() == 5);
    CHECK(exact_detour(g, 0, 2, 1, with(s)).status == SearchStatus::absent);
    CHECK(exact_detour(g, 0, 2, 2, with(s)).status == SearchStatus::absent);
  }
  std::vector<Arc> c5;
  for (Vertex i = 0; i < 5; ++i) c5.push_back({i, (i + 1) % 5});
  auto cycle = DirectedGraph::build(5, c5);
  CHECK(exact_detour(cycle, 0, 1, 1).status == SearchStatus::absent);
  CHECK_THROWS_AS(exact_detour(directed_path(3), 2, 0, 1), UnreachableTarget);
}

TEST_CASE("tiny budget gives inconclusive, never absent") {
  SubroutineConfig cfg = with(Strategy::branch_and_bound);
  cfg.limits.bnb_node_budget = 2;
  gen::Rng rng(3);
  auto g = gen::random_digraph(rng, 10, 0.5);
  auto r = has_path_at_least(g, 9, cfg);
  CHECK(r.status != SearchStatus::absent);
  auto e = exact_detour(DirectedGraph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}), 0, 5, 3, cfg);
  CHECK(e.status == SearchStatus::inconclusive);
}

TEST_CASE("deterministic strategies agree with brute force") {
  gen::Rng rng(777);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const double p = (i % 3 == 0) ? 0.15 : (i % 3 == 1 ? 0.3 : 0.5);
    auto g = gen::random_digraph(rng, n, p);
    const Vertex s = static_cast<Vertex>(rng() % n);
    Vertex t = static_cast<Vertex>(rng() % n);
    if (t == s) t = (s + 1) % n;
    const int longest = brute::longest_path(g);
    const auto lengths = brute::st_path_lengths(g, s, t);
    const int k = static_cast<int>(rng() % (n + 1));
    for (Strategy strat : kExact) {
      auto a = has_path_at_least(g, k, with(strat));
      CHECK(a.found() == (longest >= k));
      if (a.found()) CHECK(a.witness->length() >= k);

      auto b = long_st_path(g, s, t, k, with(strat));
      const bool expect_b = !lengths.empty() && *lengths.rbegin() >= k;
      CHECK(b.found() == expect_b);
      if (b.found()) {
        CHECK(b.witness->length() >= k);
        CHECK(b.witness->front() == s);
        CHECK(b.witness->back() == t);
      }
      if (!lengths.empty()) {
        const int dist = *lengths.begin();
        const int ell = k % (n - dist + 1);
        auto c = exact_detour(g, s, t, ell, with(strat));
        CHECK(c.found() == (lengths.count(dist + ell) == 1));
        if (c.found()) CHECK(c.witness->length() - dist == ell);
      }
    }
    ++checked;
  }
  CHECK(checked == 500);
}

TEST_CASE("color coding is reproducible for a fixed seed") {
  gen::Rng rng(8);
  auto g = gen::random_digraph(rng, 10, 0.3);
  auto a = has_path_at_least(g, 5, with(Strategy::color_coding, 42));
  auto b = has_path_at_least(g, 5, with(Strategy::color_coding, 42));
  CHECK(a.status == b.status);
  CHECK(a.trials == b.trials);
  if (a.found()) CHECK(a.witness->vertices == b.witness->vertices);
}
