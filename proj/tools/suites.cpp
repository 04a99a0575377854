#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "agp/detour.hpp"
#include "agp/diameter.hpp"
#include "agp/gadgets.hpp"
#include "agp/generators.hpp"
#include "agp/oracle.hpp"
#include "agp/subroutines.hpp"

namespace agp::suites {

void AuditLog::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& r : records_) {
    out << r.suite << '\t' << r.instance << '\t' << r.verdict << '\t' << r.inconclusive_events
        << '\n';
  }
}

std::vector<AuditRecord> AuditLog::read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<AuditRecord> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    AuditRecord r;
    std::string events;
    if (!std::getline(ls, r.suite, '\t') || !std::getline(ls, r.instance, '\t') ||
        !std::getline(ls, r.verdict, '\t') || !std::getline(ls, events)) {
      throw std::runtime_error("malformed audit line: " + line);
    }
    r.inconclusive_events = std::stoi(events);
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

SuiteResult make_result(std::string name, int criterion) {
  SuiteResult r;
  r.name = std::move(name);
  r.criterion = criterion;
  return r;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string percent(long ok, long total) {
  return total == 0 ? "n/a" : fmt(100.0 * static_cast<double>(ok) / static_cast<double>(total), 2) + "%";
}

std::string verdict_word(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "yes";
    case SearchStatus::absent: return "no";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

std::pair<Vertex, Vertex> random_pair(gen::Rng& rng, int n) {
  const Vertex s = static_cast<Vertex>(rng() % n);
  const Vertex t = (s + 1 + static_cast<Vertex>(rng() % (n - 1))) % n;
  return {s, t};
}

// Bitmask over lengths of all simple (s,t)-paths, by subset DP over the
// vertices visited. Serves as the exact-length reference for n <= 16.
std::uint32_t st_length_mask(const DirectedGraph& g, Vertex s, Vertex t) {
  const int n = g.vertex_count();
  if (n > 16) throw std::invalid_argument("st_length_mask: n > 16");
  std::vector<std::uint16_t> ends(std::size_t{1} << n, 0);
  ends[std::size_t{1} << s] = static_cast<std::uint16_t>(1u << s);
  std::uint32_t lengths = 0;
  for (std::size_t mask = 1; mask < ends.size(); ++mask) {
    const std::uint16_t e = ends[mask];
    if (!e) continue;
    if (e >> t & 1u) {
      lengths |= 1u << (__builtin_popcountll(mask) - 1);
      continue;  // paths stop at t
    }
    for (Vertex v = 0; v < n; ++v) {
      if (!(e >> v & 1u)) continue;
      for (Vertex w : g.out(v)) {
        if (mask >> w & 1u) continue;
        ends[mask | (std::size_t{1} << w)] |= static_cast<std::uint16_t>(1u << w);
      }
    }
  }
  return lengths;
}

int record_detour(AuditLog& log, const std::string& suite, const std::string& id,
                  const DetourAnswer& a) {
  log.record({suite, id, to_string(a.verdict), static_cast<int>(a.inconclusive.size())});
  return static_cast<int>(a.inconclusive.size());
}

bool witness_ok(const DirectedGraph& g, const std::optional<PathWitness>& w, Vertex s, Vertex t,
                int min_len) {
  return w && !check_path(g, w->vertices) && w->front() == s && w->back() == t &&
         w->length() >= min_len;
}

bool witness_ok(const UndirectedGraph& g, const std::optional<PathWitness>& w, Vertex s,
                Vertex t, int min_len) {
  return w && !check_path(g, w->vertices) && w->front() == s && w->back() == t &&
         w->length() >= min_len;
}

SuiteResult detour_vs_oracle(AuditLog& log) {
  auto r = make_result("detour-vs-oracle", 1);
  const auto start = Clock::now();
  gen::Rng rng(20240101);
  const double densities[] = {0.15, 0.3, 0.5};
  long runs = 0, agree = 0, bad_witness = 0, yes = 0, unreachable = 0;
  std::map<std::string, long> stages;
  const int instances = 1000;
  for (int i = 0; i < instances; ++i) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const auto g = gen::random_digraph(rng, n, densities[i % 3]);
    const auto [s, t] = random_pair(rng, n);
    std::optional<int> k_star;
    try {
      k_star = detour_oracle(g, s, t).k_star;
    } catch (const UnreachableTarget&) {
      ++unreachable;
    }
    for (int k = 0; k <= 5; ++k) {
      const auto a = solve_directed_detour({std::cref(g), s, t, k});
      record_detour(log, r.name, "i=" + std::to_string(i) + " k=" + std::to_string(k), a);
      ++runs;
      const bool expected = k_star && *k_star >= k;
      const bool got = a.verdict == Verdict::yes;
      if (a.verdict != Verdict::inconclusive && got == expected) ++agree;
      if (got) {
        ++yes;
        if (!witness_ok(g, a.witness, s, t, a.distance + k)) ++bad_witness;
      }
      ++stages[to_string(a.stage)];
    }
  }
  r.seconds = seconds_since(start);
  const long disagreements = runs - agree;
  r.passed = disagreements == 0 && bad_witness == 0 && r.seconds <= 600.0;
  r.headline = "agreement " + percent(agree, runs) + " (" + std::to_string(instances) +
               " graphs, " + std::to_string(runs) + " queries, " +
               std::to_string(disagreements) + " disagreements, " + fmt(r.seconds, 2) +
               " s <= 600 s)";
  r.table = {{"graphs", std::to_string(instances)},
             {"queries", std::to_string(runs)},
             {"agreement", percent(agree, runs)},
             {"disagreements", std::to_string(disagreements)},
             {"yes answers", std::to_string(yes)},
             {"invalid witnesses", std::to_string(bad_witness)},
             {"unreachable targets", std::to_string(unreachable)}};
  for (const auto& [stage, c] : stages) r.table.push_back({"stage " + stage, std::to_string(c)});
  return r;
}

SuiteResult undirected_detour(AuditLog& log) {
  auto r = make_result("undirected-detour", 2);
  const auto start = Clock::now();
  gen::Rng rng(424242);
  long runs = 0, agree = 0, bad_witness = 0, yes = 0;
  std::map<std::string, long> stages;
  const int instances = 500;
  for (int i = 0; i < instances; ++i) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const auto g = gen::random_connected_undirected(rng, n, 0.1 + 0.1 * (i % 4));
    const auto [s, t] = random_pair(rng, n);
    const int k_star = detour_oracle(g, s, t).k_star;
    for (int k = 0; k <= 5; ++k) {
      const auto a = solve_undirected_detour({std::cref(g), s, t, k});
      record_detour(log, r.name, "i=" + std::to_string(i) + " k=" + std::to_string(k), a);
      ++runs;
      const bool got = a.verdict == Verdict::yes;
      if (a.verdict != Verdict::inconclusive && got == (k_star >= k)) ++agree;
      if (got) {
        ++yes;
        if (!witness_ok(g, a.witness, s, t, a.distance + k)) ++bad_witness;
      }
      ++stages[to_string(a.stage)];
    }
  }
  r.seconds = seconds_since(start);
  const long disagreements = runs - agree;
  r.passed = disagreements == 0 && bad_witness == 0;
  r.headline = "agreement " + percent(agree, runs) + " (" + std::to_string(instances) +
               " graphs, " + std::to_string(runs) + " queries, " +
               std::to_string(disagreements) + " disagreements)";
  r.table = {{"graphs", std::to_string(instances)},
             {"queries", std::to_string(runs)},
             {"agreement", percent(agree, runs)},
             {"disagreements", std::to_string(disagreements)},
             {"yes answers", std::to_string(yes)},
             {"invalid witnesses", std::to_string(bad_witness)}};
  for (const auto& [stage, c] : stages) r.table.push_back({"stage " + stage, std::to_string(c)});
  return r;
}

struct CcCase {
  int kind;  // 0 has_path_at_least, 1 long_st_path, 2 exact_detour
  DirectedGraph g;
  Vertex s, t;
  int param;
};

SuiteResult subroutine_equivalence(AuditLog& log) {
  auto r = make_result("subroutines", 3);
  const auto start = Clock::now();
  gen::Rng rng(31337);
  const Strategy exact_strategies[] = {Strategy::automatic, Strategy::subset_dp,
                                       Strategy::branch_and_bound};
  long checks = 0, disagreements = 0, bad_witness = 0;
  std::vector<CcCase> cc_cases;
  const int instances = 500;
  const double densities[] = {0.15, 0.3, 0.45};
  for (int i = 0; i < instances; ++i) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const auto g = gen::random_digraph(rng, n, densities[i % 3]);
    const auto [s, t] = random_pair(rng, n);
    const int longest = longest_path_oracle(g).value;
    const auto st = longest_st_path_oracle(g, s, t);
    const std::uint32_t lengths = st_length_mask(g, s, t);
    const int dist = st ? distances_from(g, s)[t] : -1;
    const std::string id = "i=" + std::to_string(i);

    auto judge = [&](const PathSearch& p, bool expected, Vertex from, Vertex to, int min_len,
                     int exact_len, const std::string& what) {
      ++checks;
      log.record({r.name, id + " " + what, verdict_word(p.status), p.inconclusive() ? 1 : 0});
      if (p.inconclusive() || p.found() != expected) ++disagreements;
      if (p.found()) {
        const auto& w = p.witness;
        bool ok = w && !check_path(g, w->vertices) && w->length() >= min_len;
        if (ok && from >= 0) ok = w->front() == from && w->back() == to;
        if (ok && exact_len >= 0) ok = w->length() == exact_len;
        if (!ok) ++bad_witness;
      }
    };

    for (Strategy strat : exact_strategies) {
      SubroutineConfig cfg;
      cfg.strategy = strat;
      const std::string sname = to_string(strat);
      for (int k = 0; k <= n; ++k) {
        judge(has_path_at_least(g, k, cfg), longest >= k, -1, -1, k, -1,
              "has_path_at_least k=" + std::to_string(k) + " " + sname);
        judge(long_st_path(g, s, t, k, cfg), st && st->value >= k, s, t, k, -1,
              "long_st_path k=" + std::to_string(k) + " " + sname);
      }
      if (dist >= 0) {
        for (int ell = 0; dist + ell <= n - 1; ++ell) {
          judge(exact_detour(g, s, t, ell, cfg), (lengths >> (dist + ell)) & 1u, s, t, dist + ell,
                dist + ell, "exact_detour ell=" + std::to_string(ell) + " " + sname);
        }
      }
    }

    // Hardest yes-parameter per subroutine, capped so color coding stays cheap.
    if (cc_cases.size() < 90) {
      const int cap = 6;
      if (longest >= 1) cc_cases.push_back({0, g, s, t, std::min(longest, cap)});
      if (st) {
        const int window_best = [&] {
          // largest k <= cap whose window [k, max(k, min(2k, n-1))] holds a length
          for (int k = cap; k >= 1; --k) {
            const int hi = std::max(k, std::min(2 * k, n - 1));
            for (int len = k; len <= hi; ++len) {
              if (lengths >> len & 1u) return k;
            }
          }
          return 0;
        }();
        if (window_best > 0) cc_cases.push_back({1, g, s, t, window_best});
        int best_ell = -1;
        for (int ell = 0; dist + ell <= std::min(n - 1, dist + cap); ++ell) {
          if (lengths >> (dist + ell) & 1u) best_ell = ell;
        }
        if (best_ell > 0 && dist + best_ell + 1 <= 8) cc_cases.push_back({2, g, s, t, best_ell});
      }
    }
  }

  // Color-coding miss rate on yes-instances.
  SubroutineConfig cc;
  cc.strategy = Strategy::color_coding;
  const double delta = cc.failure_probability;
  long cc_runs = 0, cc_misses = 0, cc_bad = 0;
  for (std::size_t c = 0; c < cc_cases.size(); ++c) {
    const auto& cs = cc_cases[c];
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      cc.seed = seed * 7919 + c;
      PathSearch p;
      if (cs.kind == 0) p = has_path_at_least(cs.g, cs.param, cc);
      else if (cs.kind == 1) p = long_st_path(cs.g, cs.s, cs.t, cs.param, cc);
      else p = exact_detour(cs.g, cs.s, cs.t, cs.param, cc);
      ++cc_runs;
      log.record({r.name, "color-coding case=" + std::to_string(c) + " seed=" + std::to_string(seed),
                  verdict_word(p.status), p.inconclusive() ? 1 : 0});
      if (!p.found()) ++cc_misses;
      else if (!p.witness || check_path(cs.g, p.witness->vertices)) ++cc_bad;
    }
  }
  const double miss_rate = cc_runs ? static_cast<double>(cc_misses) / cc_runs : 0.0;

  r.seconds = seconds_since(start);
  r.passed = disagreements == 0 && bad_witness == 0 && cc_bad == 0 && cc_runs > 0 &&
             miss_rate <= 3 * delta;
  r.headline = std::to_string(instances) + " instances, " + std::to_string(checks) +
               " exact checks, " + std::to_string(disagreements) +
               " disagreements; color-coding miss rate " + fmt(miss_rate, 5) + " <= 3*delta=" +
               fmt(3 * delta, 5) + " over " + std::to_string(cc_runs) + " runs";
  r.table = {{"instances", std::to_string(instances)},
             {"exact checks", std::to_string(checks)},
             {"disagreements", std::to_string(disagreements)},
             {"invalid witnesses", std::to_string(bad_witness + cc_bad)},
             {"color-coding cases", std::to_string(cc_cases.size())},
             {"color-coding runs", std::to_string(cc_runs)},
             {"color-coding misses", std::to_string(cc_misses)},
             {"miss rate", fmt(miss_rate, 5)},
             {"3*delta", fmt(3 * delta, 5)}};
  return r;
}

SuiteResult gadget_verification(AuditLog&) {
  auto r = make_result("gadgets", 4);
  const auto start = Clock::now();
  bool all = true;
  for (int ell = 1; ell <= 6; ++ell) {
    const auto t0 = Clock::now();
    const auto [g, bp] = build_G_ell(ell);
    const auto report = verify_G_ell(g, bp);
    // Independent recomputation of the headline numbers.
    const bool count = g.vertex_count() == 16 * ell + 20;
    const bool diam = diameter_and_pair(g).diameter == 8 * ell + 10;
    const bool twosc = is_2_strongly_connected(g);
    const int dts = distances_from(g, bp.t)[bp.s];
    const bool back = dts <= 4 * ell + 7;
    const auto lp = witness_long_path(g, bp);
    const auto h8 = witness_h8_path(g, bp);
    const bool lp_ok = !check_path(g, lp.vertices) && lp.length() == 8 * ell + 14;
    const bool h8_ok = !check_path(g, h8.vertices) && h8.length() == 4 * ell + 15;
    const bool ok = report.ok() && count && diam && twosc && back && lp_ok && h8_ok;
    all = all && ok;
    std::ostringstream row;
    row << (ok ? "PASS" : "FAIL") << " n=" << g.vertex_count() << " diam="
        << diameter_and_pair(g).diameter << " dist(t,s)=" << dts << " long=" << lp.length()
        << " h8=" << h8.length() << " clauses=" << report.clauses.size() << " "
        << fmt(seconds_since(t0), 3) << " s";
    r.table.push_back({"ell=" + std::to_string(ell), row.str()});
  }
  r.seconds = seconds_since(start);
  r.passed = all;
  r.headline = std::string(all ? "all" : "not all") + " of ell=1..6 verified (" +
               fmt(r.seconds, 2) + " s)";
  return r;
}

SuiteResult g1_oracle(AuditLog&) {
  auto r = make_result("g1-oracle", 5);
  const auto start = Clock::now();
  const auto g1 = build_G_ell(1);
  OracleLimits limits;
  limits.bnb_node_budget = 2'000'000'000;
  const auto a = longest_path_oracle(g1.graph, limits);
  r.seconds = seconds_since(start);
  const bool valid = !check_path(g1.graph, a.witness.vertices) &&
                     a.witness.length() == a.value;
  r.passed = a.exact && valid && a.value >= 22 && a.value <= 35 && a.value == kG1LongestPath &&
             r.seconds <= 300.0;
  r.headline = "longest path of G_1 = " + std::to_string(a.value) + (a.exact ? " (exact" : " (NOT exact") +
               ", expected 22..35 and regression " + std::to_string(kG1LongestPath) + ", " +
               fmt(r.seconds, 2) + " s <= 300 s)";
  r.table = {{"value", std::to_string(a.value)},
             {"exact", a.exact ? "true" : "false"},
             {"witness valid", valid ? "true" : "false"},
             {"regression constant", std::to_string(kG1LongestPath)},
             {"seconds", fmt(r.seconds, 3)}};
  return r;
}

SuiteResult reduce_k1_suite(AuditLog&) {
  auto r = make_result("reduce-k1", 6);
  const auto start = Clock::now();
  gen::Rng rng(5353);
  int violations = 0, ham = 0;
  const int graphs = 50;
  for (int i = 0; i < graphs; ++i) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto h = gen::random_undirected(rng, n, 0.2 + 0.1 * (i % 5));
    const bool has_ham = longest_path_oracle(h).value == n - 1;
    const auto red = reduce_k1(h);
    const auto& gp = *red.undirected;
    const auto lp = longest_path_oracle(gp);
    const bool long_path = lp.exact && lp.value >= 2 * n - 1;
    const bool diam_ok = diameter_and_pair(gp).diameter == 2 * n - 2;
    ham += has_ham;
    if (!lp.exact || long_path != has_ham || !diam_ok) {
      ++violations;
      r.table.push_back({"violation i=" + std::to_string(i),
                         "n=" + std::to_string(n) + " ham=" + std::to_string(has_ham) +
                             " longest(G')=" + std::to_string(lp.value)});
    }
  }
  r.seconds = seconds_since(start);
  r.passed = violations == 0;
  r.headline = std::to_string(graphs) + " graphs, " + std::to_string(ham) +
               " with a Hamiltonian path, " + std::to_string(violations) + " violations";
  r.table.insert(r.table.begin(), {{"graphs", std::to_string(graphs)},
                                   {"hamiltonian", std::to_string(ham)},
                                   {"violations", std::to_string(violations)}});
  return r;
}

SuiteResult reduce_kge5_suite(AuditLog&) {
  auto r = make_result("reduce-kge5", 7);
  const auto start = Clock::now();
  std::vector<Arc> edges;
  for (int i = 0; i < 76; ++i) edges.push_back({i, (i + 1) % 76});
  const auto h = UndirectedGraph::build(76, edges);
  gen::Rng rng(7212);
  bool all = true;
  for (int sample = 0; sample < 3; ++sample) {
    const Vertex w = static_cast<Vertex>(rng() % 76);
    const auto red = reduce_kge5(h, w, 5);
    const bool twosc = is_2_strongly_connected(red.graph);
    const int diam = diameter_and_pair(red.graph).diameter;
    std::vector<Vertex> ham;
    for (int i = 0; i < 76; ++i) ham.push_back((w + i) % 76);
    const auto lifted = lift_ham_witness(red, ham);
    const bool lift_ok = !check_path(red.graph, lifted.vertices) && lifted.length() == 167;
    const bool ok = twosc && diam == 162 && lift_ok;
    all = all && ok;
    r.table.push_back({"w=" + std::to_string(w + 1),
                       std::string(ok ? "PASS" : "FAIL") + " n=" +
                           std::to_string(red.graph.vertex_count()) + " 2sc=" +
                           (twosc ? "true" : "false") + " diam=" + std::to_string(diam) +
                           " lifted=" + std::to_string(lifted.length())});
  }
  r.seconds = seconds_since(start);
  r.passed = all;
  r.headline = std::string(all ? "3/3" : "not all") +
               " sampled w: 2-strongly-connected, diameter 162, lifted path 167";
  return r;
}

SuiteResult lpad_undirected(AuditLog& log) {
  auto r = make_result("lpad-undirected", 8);
  const auto start = Clock::now();
  gen::Rng rng(8080);
  long runs = 0, agree = 0, bad_witness = 0;
  const int graphs = 300;
  for (int i = 0; i < graphs; ++i) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const auto g = gen::random_2_connected_undirected(rng, n, 0.1 * (i % 4));
    const int d = diameter_and_pair(g).diameter;
    const int longest = longest_path_oracle(g).value;
    for (int k = 0; k <= 4; ++k) {
      const auto a = solve_lpad_undirected_2connected(g, k);
      ++runs;
      log.record({r.name, "i=" + std::to_string(i) + " k=" + std::to_string(k),
                  to_string(a.verdict), static_cast<int>(a.inconclusive.size())});
      const bool got = a.verdict == Verdict::yes;
      if (a.verdict != Verdict::inconclusive && a.diameter == d && got == (longest >= d + k)) {
        ++agree;
      }
      if (got && (!a.witness || check_path(g, a.witness->vertices) ||
                  a.witness->length() < d + k)) {
        ++bad_witness;
      }
    }
  }
  r.seconds = seconds_since(start);
  r.passed = agree == runs && bad_witness == 0;
  r.headline = "agreement " + percent(agree, runs) + " (" + std::to_string(graphs) + " graphs, " +
               std::to_string(runs - agree) + " disagreements)";
  r.table = {{"graphs", std::to_string(graphs)},
             {"queries", std::to_string(runs)},
             {"disagreements", std::to_string(runs - agree)},
             {"invalid witnesses", std::to_string(bad_witness)}};
  return r;
}

SuiteResult builder_fuzz(AuditLog& log) {
  auto r = make_result("builder-fuzz", 9);
  const auto start = Clock::now();
  gen::Rng rng(9999);
  std::map<std::string, int> steps;
  int invalid = 0, unlabeled = 0, built = 0;
  const int graphs = 250;
  for (int i = 0; i < graphs; ++i) {
    const int n = 3 + static_cast<int>(rng() % 58);
    const auto g = (i % 3 == 0) ? gen::random_2_strongly_connected(rng, n, 2.0 / n)
                                : gen::random_2sc_bidirected_cycle(rng, n, (i % 3 == 1) ? 0.0 : 1.0 / n);
    const auto out = build_diam_plus4_path(g);
    const int d = diameter_and_pair(g).diameter;
    if (out.built()) {
      ++built;
      ++steps["built:" + out.step];
      if (!out.witness || check_path(g, out.witness->vertices) || out.witness->length() < d + 4) {
        ++invalid;
      }
      log.record({r.name, "i=" + std::to_string(i), "yes", 0});
    } else {
      ++steps["failed:" + out.failed_at];
      const bool known = std::any_of(std::begin(kBuilderLabels), std::end(kBuilderLabels),
                                     [&](const char* l) { return out.failed_at == l; });
      if (!known || out.witness) ++unlabeled;
    }
  }
  r.seconds = seconds_since(start);
  r.passed = invalid == 0 && unlabeled == 0;
  r.headline = std::to_string(graphs) + " digraphs, " + std::to_string(built) + " built, " +
               std::to_string(invalid) + " invalid witnesses, " + std::to_string(unlabeled) +
               " unlabeled failures";
  r.table = {{"graphs", std::to_string(graphs)},
             {"built", std::to_string(built)},
             {"invalid witnesses", std::to_string(invalid)},
             {"unlabeled failures", std::to_string(unlabeled)}};
  for (const auto& [k, v] : steps) r.table.push_back({k, std::to_string(v)});
  return r;
}

// Deliberately starved budgets so that inconclusive events actually occur.
SuiteResult budget_stress(AuditLog& log) {
  auto r = make_result("budget-stress", 10);
  const auto start = Clock::now();
  gen::Rng rng(1010);
  int events = 0, runs = 0, unsound = 0;
  std::map<std::string, int> verdicts;
  for (int i = 0; i < 150; ++i) {
    const int n = 8 + static_cast<int>(rng() % 7);
    const auto g = gen::random_digraph(rng, n, 0.25 + 0.1 * (i % 3));
    const auto [s, t] = random_pair(rng, n);
    DetourConfig cfg;
    cfg.chain.node_budget = 1 + i % 20;
    cfg.subroutine.limits.dp_vertex_cap = 4;
    cfg.subroutine.limits.bnb_node_budget = 5 + i % 40;
    std::optional<int> k_star;
    try {
      k_star = detour_oracle(g, s, t).k_star;
    } catch (const UnreachableTarget&) {
    }
    for (int k = 1; k <= 5; k += 2) {
      const auto a = solve_directed_detour({std::cref(g), s, t, k}, cfg);
      ++runs;
      events += record_detour(log, r.name, "detour i=" + std::to_string(i) + " k=" + std::to_string(k), a);
      ++verdicts[to_string(a.verdict)];
      const bool expected = k_star && *k_star >= k;
      if (a.verdict == Verdict::yes && (!expected || !witness_ok(g, a.witness, s, t, a.distance + k))) ++unsound;
      if (a.verdict == Verdict::no && expected) ++unsound;
    }
  }
  for (int i = 0; i < 60; ++i) {
    const int n = 6 + static_cast<int>(rng() % 10);
    const auto g = gen::random_2_strongly_connected(rng, n, 0.3);
    LpadConfig cfg;
    cfg.subroutine.limits.dp_vertex_cap = 4;
    cfg.subroutine.limits.bnb_node_budget = 3 + i % 30;
    const int k = 5 + i % 3;
    const auto a = solve_lpad({std::cref(g), k, LpadMode::oracle}, cfg);
    ++runs;
    events += static_cast<int>(a.inconclusive.size());
    ++verdicts[to_string(a.verdict)];
    log.record({r.name, "lpad i=" + std::to_string(i) + " k=" + std::to_string(k),
                to_string(a.verdict), static_cast<int>(a.inconclusive.size())});
    if (a.verdict == Verdict::yes &&
        (!a.witness || check_path(g, a.witness->vertices) || a.witness->length() < a.diameter + k)) {
      ++unsound;
    }
  }
  r.seconds = seconds_since(start);
  r.passed = events > 0 && unsound == 0;
  r.headline = std::to_string(runs) + " starved runs, " + std::to_string(events) +
               " inconclusive events, " + std::to_string(unsound) + " unsound answers";
  r.table = {{"runs", std::to_string(runs)},
             {"inconclusive events", std::to_string(events)},
             {"unsound answers", std::to_string(unsound)}};
  for (const auto& [v, c] : verdicts) r.table.push_back({"verdict " + v, std::to_string(c)});
  return r;
}

}  // namespace

SuiteResult audit_hygiene(const std::vector<AuditRecord>& records) {
  auto r = make_result("hygiene", 10);
  long flagged = 0, no_answers = 0, with_events = 0;
  std::map<std::string, long> per_suite;
  for (const auto& rec : records) {
    ++per_suite[rec.suite];
    if (rec.inconclusive_events > 0) ++with_events;
    if (rec.verdict == "no") {
      ++no_answers;
      if (rec.inconclusive_events > 0) {
        ++flagged;
        if (flagged <= 5) r.table.push_back({"violation", rec.suite + " " + rec.instance});
      }
    }
  }
  r.passed = !records.empty() && flagged == 0;
  r.headline = std::to_string(records.size()) + " audited answers, " +
               std::to_string(with_events) + " with inconclusive events, " +
               std::to_string(flagged) + " 'no' answers alongside inconclusive events";
  r.table.insert(r.table.begin(), {{"records", std::to_string(records.size())},
                                   {"no answers", std::to_string(no_answers)},
                                   {"with inconclusive events", std::to_string(with_events)},
                                   {"violations", std::to_string(flagged)}});
  for (const auto& [s, c] : per_suite) r.table.push_back({"suite " + s, std::to_string(c)});
  return r;
}

std::vector<std::string> suite_names() {
  return {"detour-vs-oracle", "undirected-detour", "subroutines",  "gadgets",
          "g1-oracle",        "reduce-k1",            "reduce-kge5",     "lpad-undirected",
          "builder-fuzz",     "budget-stress",     "hygiene"};
}

SuiteResult run_suite(const std::string& name, AuditLog& log) {
  static const std::map<std::string, std::function<SuiteResult(AuditLog&)>> suites = {
      {"detour-vs-oracle", detour_vs_oracle},
      {"undirected-detour", undirected_detour},
      {"subroutines", subroutine_equivalence},
      {"gadgets", gadget_verification},
      {"g1-oracle", g1_oracle},
      {"reduce-k1", reduce_k1_suite},
      {"reduce-kge5", reduce_kge5_suite},
      {"lpad-undirected", lpad_undirected},
      {"builder-fuzz", builder_fuzz},
      {"budget-stress", budget_stress},
  };
  if (name == "hygiene") {
    const auto start = Clock::now();
    if (log.records().empty()) budget_stress(log);
    auto r = audit_hygiene(log.records());
    r.seconds = seconds_since(start);
    return r;
  }
  const auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second(log);
}

std::string format_table(const SuiteResult& r) {
  std::size_t width = 6;
  for (const auto& [k, v] : r.table) width = std::max(width, k.size());
  std::ostringstream out;
  out << "suite " << r.name << ": " << (r.passed ? "PASS" : "FAIL") << '\n';
  out << "  " << r.headline << '\n';
  for (const auto& [k, v] : r.table) {
    out << "  " << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }
  out << "  seconds" << std::string(width - 7 + 2, ' ') << fmt(r.seconds, 2) << '\n';
  return out.str();
}

}  // namespace agp::suites
