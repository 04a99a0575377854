#include "doctest.h"

#include "agp/detour.hpp"
#include "agp/generators.hpp"
#include "agp/oracle.hpp"
#include "brute_force.hpp"

using namespace agp;

namespace {

DirectedGraph two_parallel_paths() {
  return DirectedGraph::build(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}});
}

UndirectedGraph undirected_cycle(int n) {
  std::vector<Arc> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return UndirectedGraph::build(n, e);
}

void check_witness(const DetourAnswer& a, Vertex s, Vertex t, int k) {
  if (a.verdict != Verdict::yes) return;
  REQUIRE(a.witness.has_value());
  CHECK(a.witness->front() == s);
  CHECK(a.witness->back() == t);
  CHECK(a.witness->length() >= a.distance + k);
}

}  // namespace

TEST_CASE("directed detour examples") {
  auto g = two_parallel_paths();
  auto yes = solve_directed_detour({std::cref(g), 0, 2, 3});
  CHECK(yes.verdict == Verdict::yes);
  CHECK(yes.stage == DetourStage::exact_probe);
  CHECK(yes.witness->length() == 5);
  CHECK(yes.trace->ell == 3);

  auto no = solve_directed_detour({std::cref(g), 0, 2, 4});
  CHECK(no.verdict == Verdict::no);
  CHECK(no.stage == DetourStage::exhausted);

  auto zero = solve_directed_detour({std::cref(g), 0, 2, 0});
  CHECK(zero.verdict == Verdict::yes);
  CHECK(zero.stage == DetourStage::trivial_k0);
  CHECK(zero.witness->length() == 2);

  auto unreachable = solve_directed_detour({std::cref(g), 2, 0, 1});
  CHECK(unreachable.verdict == Verdict::no);
  CHECK(unreachable.stage == DetourStage::unreachable);

  CHECK_THROWS(solve_directed_detour({std::cref(g), 1, 1, 1}));
}

TEST_CASE("undirected detour examples") {
  auto c8 = undirected_cycle(8);
  auto yes = solve_undirected_detour({std::cref(c8), 0, 1, 5});
  CHECK(yes.verdict == Verdict::yes);
  CHECK(yes.witness->length() == 7);
  CHECK(solve_undirected_detour({std::cref(c8), 0, 1, 7}).verdict == Verdict::no);

  auto tree = UndirectedGraph::build(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
  for (int k = 1; k <= 3; ++k) CHECK(solve_undirected_detour({std::cref(tree), 0, 5, k}).verdict == Verdict::no);
}

TEST_CASE("pair enumeration catches a climb that falls back") {
  // Only (s,t)-paths: 0,1,2 and 0,3,4,5,6,7,1,2 (length 7 = dist+5).
  auto g = DirectedGraph::build(8, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 1}});
  auto a = solve_directed_detour({std::cref(g), 0, 2, 2});
  CHECK(a.verdict == Verdict::yes);
  CHECK(a.witness->length() == 7);
  CHECK(a.stage == DetourStage::pair_enumeration);
  CHECK(a.trace->w.has_value());
  CHECK(a.trace->v.has_value());
}

TEST_CASE("explain reports") {
  auto g = two_parallel_paths();
  auto yes = solve_directed_detour({std::cref(g), 0, 2, 3});
  CHECK(explain(yes).find("exact-probe") != std::string::npos);
  auto no = solve_directed_detour({std::cref(g), 0, 2, 4});
  auto text = explain(no);
  CHECK(text.find("completed stages: exact-probe pair-enumeration case1 case2") != std::string::npos);

  DetourConfig tiny;
  tiny.subroutine.strategy = Strategy::branch_and_bound;
  tiny.subroutine.limits.bnb_node_budget = 1;
  tiny.chain.node_budget = 1;
  auto inc = solve_directed_detour({std::cref(g), 0, 2, 4}, tiny);
  CHECK(inc.verdict == Verdict::inconclusive);
  CHECK(explain(inc).find("inconclusive: ") != std::string::npos);
}

namespace {

// p, q and the gap q-p of a solution path, as defined from the BFS levels.
struct Shape {
  int p = -1, q = -1;
};

Shape shape_of(const std::vector<Vertex>& path, const std::vector<int>& level) {
  std::vector<int> seen(path.size() + 1, 0);
  Shape sh;
  for (Vertex x : path) {
    const int l = level[x];
    if (l >= 1 && ++seen[l] == 2 && (sh.p < 0 || l < sh.p)) sh.p = l;
  }
  if (sh.p < 0) return sh;
  std::size_t iu = path.size(), iv = path.size();
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (level[path[i]] != sh.p) continue;
    if (iu == path.size()) {
      iu = i;
    } else {
      iv = i;
      break;
    }
  }
  sh.q = sh.p;
  for (std::size_t i = iu; i <= iv; ++i) sh.q = std::max(sh.q, level[path[i]]);
  return sh;
}

// True if some minimum-length solution has a level gap small enough that
// the exact probe or the case analysis must find a solution.
template <class Graph>
bool cases_must_succeed(const Graph& g, Vertex s, Vertex t, int k, int max_gap) {
  const auto level = distances_from(g, s);
  const int dist = level[t];
  if (dist < 0) return false;
  int best = -1;
  std::vector<std::vector<Vertex>> minimal;
  brute::for_each_path_from(g, s, [&](const std::vector<Vertex>& p) {
    const int len = static_cast<int>(p.size()) - 1;
    if (p.back() != t || len < dist + k) return;
    if (best < 0 || len < best) {
      best = len;
      minimal.clear();
    }
    if (len == best) minimal.push_back(p);
  });
  for (const auto& p : minimal) {
    const Shape sh = shape_of(p, level);
    if (sh.p >= 0 && sh.q - sh.p <= max_gap) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("case analysis alone finds every small-gap minimum solution") {
  register_chain_backend("never", [](const ChainQuery&, const ChainOptions&) { return ChainOutcome{}; });
  DetourConfig cfg;
  cfg.backend = "never";
  gen::Rng rng(10);
  int case1 = 0, case2 = 0, required = 0;
  for (int i = 0; i < 20000; ++i) {
    const int n = 5 + static_cast<int>(rng() % 6);
    auto g = gen::random_digraph(rng, n, 0.15 + 0.05 * (i % 4));
    const auto lengths = brute::st_path_lengths(g, 0, n - 1);
    for (int k = 1; k <= 4; ++k) {
      auto a = solve_directed_detour({std::cref(g), 0, n - 1, k}, cfg);
      check_witness(a, 0, n - 1, k);
      const bool oracle_yes = !lengths.empty() && *lengths.rbegin() >= *lengths.begin() + k;
      if (a.verdict == Verdict::yes) CHECK(oracle_yes);
      if (cases_must_succeed(g, 0, n - 1, k, k - 2)) {
        ++required;
        CHECK(a.verdict == Verdict::yes);
      }
      if (a.stage == DetourStage::case1) ++case1;
      if (a.stage == DetourStage::case2) {
        ++case2;
        const auto& t = *a.trace;
        REQUIRE(t.x.has_value());
        REQUIRE(t.y.has_value());
        CHECK(g.has_arc(*t.y, *t.x));
        CHECK(std::find(t.X.begin(), t.X.end(), *t.x) != t.X.end());
        const auto levels = distances_from(g, 0);
        CHECK(levels[*t.y] == *t.p + k - 2);
        CHECK(levels[*t.u] == *t.p);
        for (Vertex v : t.X) CHECK(levels[v] >= *t.p + k - 1);
        const auto text = explain(a);
        CHECK(text.find("u=") != std::string::npos);
        CHECK(text.find("y=") != std::string::npos);
        CHECK(text.find("x=") != std::string::npos);
        CHECK(text.find("|X|=") != std::string::npos);
      }
    }
  }
  MESSAGE("case1=" << case1 << " case2=" << case2 << " required=" << required);
  CHECK(required > 0);
  CHECK(case1 > 0);
  CHECK(case2 > 0);
}

TEST_CASE("undirected case analysis alone finds every small-gap minimum solution") {
  register_chain_backend("never", [](const ChainQuery&, const ChainOptions&) { return ChainOutcome{}; });
  DetourConfig cfg;
  cfg.backend = "never";
  gen::Rng rng(20);
  int case1 = 0, case2 = 0;
  for (int i = 0; i < 3000; ++i) {
    const int n = 5 + static_cast<int>(rng() % 5);
    auto g = gen::random_connected_undirected(rng, n, 0.1 + 0.05 * (i % 3));
    const auto lengths = brute::st_path_lengths(g, 0, n - 1);
    for (int k = 1; k <= 5; ++k) {
      auto a = solve_undirected_detour({std::cref(g), 0, n - 1, k}, cfg);
      check_witness(a, 0, n - 1, k);
      if (a.verdict == Verdict::yes) CHECK(*lengths.rbegin() >= *lengths.begin() + k);
      if (cases_must_succeed(g, 0, n - 1, k, (k + 1) / 2 - 1)) CHECK(a.verdict == Verdict::yes);
      case1 += a.stage == DetourStage::case1;
      case2 += a.stage == DetourStage::case2;
    }
  }
  MESSAGE("case1=" << case1 << " case2=" << case2);
  CHECK(case1 > 0);
  CHECK(case2 > 0);
}

TEST_CASE("directed detour agrees with brute force") {
  gen::Rng rng(123);
  const double densities[] = {0.15, 0.3, 0.5};
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(rng() % 8);
    auto g = gen::random_digraph(rng, n, densities[i % 3]);
    const Vertex s = 0, t = n - 1;
    const auto lengths = brute::st_path_lengths(g, s, t);
    for (int k = 0; k <= 5; ++k) {
      auto a = solve_directed_detour({std::cref(g), s, t, k});
      const bool expected = !lengths.empty() && *lengths.rbegin() >= *lengths.begin() + k;
      CHECK(a.verdict != Verdict::inconclusive);
      CHECK((a.verdict == Verdict::yes) == expected);
      check_witness(a, s, t, k);
      if (a.verdict == Verdict::yes && a.stage != DetourStage::exact_probe && k > 0) {
        // Without a solution in [dist+k, dist+2k-1], every solution is long.
        for (int len : lengths) {
          if (len >= *lengths.begin() + k) CHECK(len >= *lengths.begin() + 2 * k);
        }
      }
    }
  }
}

TEST_CASE("undirected detour agrees with brute force") {
  gen::Rng rng(321);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 8);
    auto g = gen::random_connected_undirected(rng, n, (i % 3 + 1) * 0.1);
    const Vertex s = static_cast<Vertex>(rng() % n);
    const Vertex t = (s + 1 + static_cast<Vertex>(rng() % (n - 1))) % n;
    const auto lengths = brute::st_path_lengths(g, s, t);
    for (int k = 0; k <= 5; ++k) {
      auto a = solve_undirected_detour({std::cref(g), s, t, k});
      const bool expected = *lengths.rbegin() >= *lengths.begin() + k;
      CHECK((a.verdict == Verdict::yes) == expected);
      check_witness(a, s, t, k);
    }
  }
}

TEST_CASE("threaded enumeration gives identical answers") {
  gen::Rng rng(55);
  DetourConfig par;
  par.threads = 4;
  for (int i = 0; i < 60; ++i) {
    auto g = gen::random_digraph(rng, 9, 0.3);
    for (int k = 1; k <= 4; ++k) {
      auto a = solve_directed_detour({std::cref(g), 0, 8, k});
      auto b = solve_directed_detour({std::cref(g), 0, 8, k}, par);
      CHECK(a.verdict == b.verdict);
      CHECK(a.stage == b.stage);
      if (a.witness) CHECK(a.witness->vertices == b.witness->vertices);
    }
  }
}

TEST_CASE("budget exhaustion never yields no") {
  gen::Rng rng(77);
  DetourConfig tiny;
  tiny.subroutine.strategy = Strategy::branch_and_bound;
  tiny.subroutine.limits.bnb_node_budget = 3;
  tiny.chain.node_budget = 3;
  for (int i = 0; i < 100; ++i) {
    auto g = gen::random_digraph(rng, 9, 0.35);
    const auto lengths = brute::st_path_lengths(g, 0, 8);
    for (int k = 1; k <= 4; ++k) {
      auto a = solve_directed_detour({std::cref(g), 0, 8, k}, tiny);
      if (a.verdict == Verdict::no) {
        CHECK(a.inconclusive.empty());
        CHECK((lengths.empty() || *lengths.rbegin() < *lengths.begin() + k));
      }
      if (!a.inconclusive.empty()) CHECK(a.verdict != Verdict::no);
    }
  }
}
