#include "doctest.h"

#include <algorithm>
#include <map>

#include "agp/diameter.hpp"
#include "agp/generators.hpp"
#include "brute_force.hpp"

using namespace agp;

namespace {

template <class Graph>
int brute_diameter(const Graph& g) {
  int d = 0;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b = 0; b < g.vertex_count(); ++b) {
      if (a != b) d = std::max(d, brute::distance(g, a, b));
    }
  }
  return d;
}

UndirectedGraph cycle(int n) {
  std::vector<Arc> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return UndirectedGraph::build(n, e);
}

UndirectedGraph complete(int n) {
  std::vector<Arc> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return UndirectedGraph::build(n, e);
}

bool known_label(const std::string& label) {
  return std::find(std::begin(kBuilderLabels), std::end(kBuilderLabels), label) !=
         std::end(kBuilderLabels);
}

}  // namespace

TEST_CASE("undirected 2-connected examples") {
  auto c10 = cycle(10);
  auto a = solve_lpad_undirected_2connected(c10, 3);
  REQUIRE(a.verdict == Verdict::yes);
  CHECK(a.stage == "cycle");
  CHECK(a.diameter == 5);
  CHECK(a.witness->length() == 8);
  CHECK_FALSE(check_path(c10, a.witness->vertices).has_value());

  auto k4 = complete(4);
  auto yes = solve_lpad_undirected_2connected(k4, 2);
  REQUIRE(yes.verdict == Verdict::yes);
  CHECK(yes.witness->length() >= 3);
  CHECK(solve_lpad_undirected_2connected(k4, 3).verdict == Verdict::no);

  auto zero = solve_lpad_undirected_2connected(c10, 0);
  CHECK(zero.verdict == Verdict::yes);
  CHECK(zero.witness->length() == 5);
}

TEST_CASE("preconditions are errors, not answers") {
  auto path3 = UndirectedGraph::build(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(solve_lpad_undirected_2connected(path3, 1), LpadPreconditionError);
  auto dcycle = DirectedGraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK_THROWS_AS(solve_lpad({std::cref(dcycle), 1, LpadMode::directed2sc}), LpadPreconditionError);
  CHECK_THROWS_AS(build_diam_plus4_path(dcycle), LpadPreconditionError);
  CHECK_THROWS_AS(solve_lpad({std::cref(dcycle), 1, LpadMode::undirected2c}), LpadPreconditionError);
  auto c5 = cycle(5);
  CHECK_THROWS_AS(solve_lpad({std::cref(c5), 1, LpadMode::directed2sc}), LpadPreconditionError);
  auto split = DirectedGraph::build(2, {{0, 1}});
  CHECK_THROWS_AS(solve_lpad({std::cref(split), 1, LpadMode::oracle}), LpadPreconditionError);
}

TEST_CASE("directed 2-cycle has no path above its diameter") {
  auto g = DirectedGraph::build(2, {{0, 1}, {1, 0}});
  auto a = solve_lpad({std::cref(g), 1, LpadMode::directed2sc});
  CHECK(a.diameter == 1);
  CHECK(a.verdict == Verdict::no);
  REQUIRE(a.builder.has_value());
  CHECK_FALSE(a.builder->built());
  CHECK(known_label(a.builder->failed_at));
  CHECK(solve_lpad({std::cref(g), 1, LpadMode::oracle}).verdict == Verdict::no);
}

TEST_CASE("undirected solver agrees with brute force") {
  gen::Rng rng(77);
  int checked = 0, cycles = 0;
  for (int i = 0; i < 300; ++i) {
    const int n = 3 + static_cast<int>(rng() % 10);
    auto g = gen::random_2_connected_undirected(rng, n, (i % 3) * 0.1);
    const int d = brute_diameter(g);
    const int longest = brute::longest_path(g);
    for (int k = 0; k <= 4; ++k) {
      auto a = solve_lpad_undirected_2connected(g, k);
      CHECK(a.diameter == d);
      CHECK(a.verdict != Verdict::inconclusive);
      CHECK((a.verdict == Verdict::yes) == (longest >= d + k));
      if (a.witness) {
        CHECK_FALSE(check_path(g, a.witness->vertices).has_value());
        CHECK(a.witness->length() >= d + k);
      }
      cycles += a.stage == "cycle";
      ++checked;
    }
  }
  CHECK(checked == 1500);
  CHECK(cycles > 0);
}

TEST_CASE("directed 2sc solver agrees with brute force") {
  gen::Rng rng(91);
  for (int i = 0; i < 150; ++i) {
    const int n = 3 + static_cast<int>(rng() % 8);
    auto g = (i % 2) ? gen::random_2_strongly_connected(rng, n, 0.1)
                     : gen::random_2sc_bidirected_cycle(rng, n, 0.05);
    const int d = brute_diameter(g);
    const int longest = brute::longest_path(g);
    for (int k = 0; k <= 6; ++k) {
      auto a = solve_lpad({std::cref(g), k, LpadMode::directed2sc});
      CHECK(a.diameter == d);
      CHECK((a.verdict == Verdict::yes) == (longest >= d + k));
      if (a.witness) {
        CHECK_FALSE(check_path(g, a.witness->vertices).has_value());
        CHECK(a.witness->length() >= d + k);
      }
      if (k >= 5) {
        CHECK_FALSE(a.builder.has_value());
        CHECK(std::any_of(a.notices.begin(), a.notices.end(), [](const std::string& s) {
          return s.find("NP-hard") != std::string::npos;
        }));
      }
      auto o = solve_lpad({std::cref(g), k, LpadMode::oracle});
      CHECK(o.verdict == a.verdict);
    }
  }
}

TEST_CASE("builder outcomes are sound on random 2-strongly-connected digraphs") {
  gen::Rng rng(5150);
  std::map<std::string, int> steps;
  for (int i = 0; i < 300; ++i) {
    const int n = 3 + static_cast<int>(rng() % 58);
    auto g = (i % 3 == 0) ? gen::random_2_strongly_connected(rng, n, 2.0 / n)
                          : gen::random_2sc_bidirected_cycle(rng, n, (i % 3 == 1) ? 0.0 : 1.0 / n);
    auto out = build_diam_plus4_path(g);
    const int d = diameter_and_pair(g).diameter;
    CHECK(out.diameter == d);
    if (out.built()) {
      REQUIRE(out.witness.has_value());
      CHECK_FALSE(check_path(g, out.witness->vertices).has_value());
      CHECK(out.witness->length() >= d + 4);
      ++steps["built:" + out.step];
    } else {
      CHECK_FALSE(out.witness.has_value());
      CHECK(known_label(out.failed_at));
      ++steps["failed:" + out.failed_at];
    }
  }
  std::string summary;
  for (const auto& [k, v] : steps) summary += " " + k + "=" + std::to_string(v);
  MESSAGE(summary);
  CHECK(steps.size() >= 2);
}
