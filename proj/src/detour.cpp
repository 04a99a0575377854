#include "agp/detour.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

namespace agp {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(DetourStage s) {
  switch (s) {
    case DetourStage::trivial_k0: return "trivial-k0";
    case DetourStage::unreachable: return "unreachable";
    case DetourStage::exact_probe: return "exact-probe";
    case DetourStage::pair_enumeration: return "pair-enumeration";
    case DetourStage::case1: return "case1";
    case DetourStage::case2: return "case2";
    case DetourStage::exhausted: return "exhausted";
  }
  return "?";
}

namespace {

struct Unit {
  std::optional<std::vector<Vertex>> path;  // local ids of the restricted graph
  DetourStage stage = DetourStage::exhausted;
  DetourTrace trace;
  std::vector<InconclusiveEvent> events;
};

// Runs fn(0..count-1) and returns the lowest index that produced a path.
// Events from indices below the winner (or from all, if none won) are kept in
// index order, so the outcome does not depend on the number of workers.
template <class Fn>
std::optional<Unit> first_success(std::size_t count, int threads, const Fn& fn,
                                  std::vector<InconclusiveEvent>& events) {
  std::vector<std::optional<Unit>> results(count);
  std::atomic<std::size_t> best{count};
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) {
      results[i] = fn(i);
      if (results[i]->path) {
        best = i;
        break;
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < count; i = next++) {
        if (i > best.load()) continue;
        Unit u = fn(i);
        if (u.path) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
        results[i] = std::move(u);
      }
    };
    std::vector<std::thread> pool;
    const int workers = std::min<int>(threads, static_cast<int>(count));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  const std::size_t winner = best.load();
  for (std::size_t i = 0; i < std::min(winner, count); ++i) {
    for (auto& e : results[i]->events) events.push_back(std::move(e));
  }
  if (winner < count) return std::move(results[winner]);
  return std::nullopt;
}

std::vector<Vertex> members(const std::vector<bool>& set) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(set.size()); ++v)
    if (set[v]) out.push_back(v);
  return out;
}

class Pipeline {
 public:
  Pipeline(const DirectedGraph& g, Vertex s, Vertex t, int k, bool undirected,
           const DetourConfig& cfg)
      : g_(g), s_(s), t_(t), k_(k), undirected_(undirected), cfg_(cfg) {}

  DetourAnswer run() {
    const int n = g_.vertex_count();
    if (s_ < 0 || s_ >= n || t_ < 0 || t_ >= n) throw GraphError("terminal out of range");
    if (s_ == t_) throw GraphError("detour needs s != t");
    if (k_ < 0) throw std::invalid_argument("k must be non-negative");
    if (!has_chain_backend(cfg_.backend)) {
      throw std::invalid_argument("unknown chain backend: " + cfg_.backend);
    }

    DetourAnswer answer;
    auto shortest = shortest_path(g_, s_, t_);
    if (!shortest) {
      answer.verdict = Verdict::no;
      answer.stage = DetourStage::unreachable;
      answer.completed_stages = {DetourStage::unreachable};
      return answer;
    }
    dist_ = static_cast<int>(shortest->size()) - 1;
    answer.distance = dist_;
    if (k_ == 0) {
      answer.verdict = Verdict::yes;
      answer.stage = DetourStage::trivial_k0;
      answer.witness = PathWitness{std::move(*shortest), dist_, to_string(DetourStage::trivial_k0)};
      answer.completed_stages = {DetourStage::trivial_k0};
      return answer;
    }

    restricted_ = induced_subgraph(g_, reachable_set(g_, s_));
    const DirectedGraph& r = restricted_.graph;
    ls_ = restricted_.from_parent[s_];
    lt_ = restricted_.from_parent[t_];

    // Exact probe for lengths dist+k .. dist+2k-1.
    for (int ell = k_; ell <= 2 * k_ - 1; ++ell) {
      auto found = exact_detour(r, ls_, lt_, ell, cfg_.subroutine);
      if (found.found()) {
        DetourTrace trace;
        trace.ell = ell;
        return finish(answer, found.witness->vertices, DetourStage::exact_probe, trace);
      }
      if (found.inconclusive()) {
        answer.inconclusive.push_back(
            {DetourStage::exact_probe, "exact_detour", "ell=" + std::to_string(ell)});
      }
    }
    answer.completed_stages.push_back(DetourStage::exact_probe);

    layering_ = bfs_layering(r, ls_);

    // Chains s -> w -> v -> t.
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex w = 0; w < r.vertex_count(); ++w) {
      if (w == ls_ || w == lt_) continue;
      for (Vertex v = 0; v < r.vertex_count(); ++v) {
        if (v != ls_ && v != w) pairs.push_back({w, v});
      }
    }
    auto chain_unit = [&](std::size_t i) {
      Unit unit;
      const auto [w, v] = pairs[i];
      auto out = solve_chain3({r, ls_, w, v, lt_}, cfg_.backend, cfg_.chain);
      if (out.status == SearchStatus::inconclusive) {
        unit.events.push_back({DetourStage::pair_enumeration, "solve_chain3",
                               "w=" + std::to_string(restricted_.to_parent[w]) +
                                   " v=" + std::to_string(restricted_.to_parent[v])});
      } else if (out.solution && out.solution->total_length >= dist_ + k_) {
        unit.path = out.solution->concatenated();
        unit.stage = DetourStage::pair_enumeration;
        unit.trace.w = restricted_.to_parent[w];
        unit.trace.v = restricted_.to_parent[v];
        unit.trace.p = layering_.level[v];
        unit.trace.q = layering_.level[w];
      }
      return unit;
    };
    if (auto hit = first_success(pairs.size(), cfg_.threads, chain_unit, answer.inconclusive)) {
      return finish(answer, *hit->path, hit->stage, hit->trace);
    }
    answer.completed_stages.push_back(DetourStage::pair_enumeration);

    // Per first vertex u of the detour: case 1 or case 2.
    std::vector<Vertex> us;
    for (Vertex u = 0; u < r.vertex_count(); ++u) {
      if (u != ls_ && u != lt_) us.push_back(u);
    }
    auto case_unit = [&](std::size_t i) { return examine(us[i]); };
    if (auto hit = first_success(us.size(), cfg_.threads, case_unit, answer.inconclusive)) {
      return finish(answer, *hit->path, hit->stage, hit->trace);
    }
    answer.completed_stages.push_back(DetourStage::case1);
    answer.completed_stages.push_back(DetourStage::case2);

    answer.stage = DetourStage::exhausted;
    answer.verdict = answer.inconclusive.empty() ? Verdict::no : Verdict::inconclusive;
    return answer;
  }

 private:
  // Level of the first vertex of H and of the vertices y in front of it.
  int h_level(int p) const {
    return undirected_ ? p + (k_ + 1) / 2 + 1 : p + k_ - 1;
  }
  int case2_length() const { return undirected_ ? k_ + (k_ + 1) / 2 : 2 * k_ - 2; }

  Unit examine(Vertex u) {
    Unit unit;
    const DirectedGraph& r = restricted_.graph;
    const int p = layering_.level[u];
    const int rr = layering_.level[lt_];
    if (rr < p) return unit;
    const int hl = h_level(p);
    unit.trace.u = restricted_.to_parent[u];
    unit.trace.p = p;
    unit.trace.r = rr;

    std::vector<bool> upper(r.vertex_count());
    for (Vertex v = 0; v < r.vertex_count(); ++v) upper[v] = layering_.level[v] >= p;

    if (rr < hl) {
      auto sub = induced_subgraph(r, upper);
      auto found = long_st_path(sub.graph, sub.from_parent[u], sub.from_parent[lt_],
                                (rr - p) + k_, cfg_.subroutine);
      if (found.inconclusive()) {
        unit.events.push_back({DetourStage::case1, "long_st_path",
                               "u=" + std::to_string(restricted_.to_parent[u])});
      }
      if (found.found()) {
        auto prefix = *shortest_path(r, ls_, u);
        auto tail = lift(sub, found.witness->vertices);
        unit.path = concat_paths({prefix, tail});
        unit.stage = DetourStage::case1;
      }
      return unit;
    }

    const int yl = hl - 1;
    if (yl < p) return unit;
    std::vector<bool> in_h(r.vertex_count());
    for (Vertex v = 0; v < r.vertex_count(); ++v) in_h[v] = layering_.level[v] >= hl;
    auto h = induced_subgraph(r, in_h);
    auto reach_t = co_reachable_set(h.graph, h.from_parent[lt_]);
    std::vector<bool> in_x(r.vertex_count(), false);
    for (Vertex v = 0; v < h.graph.vertex_count(); ++v) {
      if (reach_t[v]) in_x[h.to_parent[v]] = true;
    }
    std::vector<bool> lower(r.vertex_count());
    for (Vertex v = 0; v < r.vertex_count(); ++v) lower[v] = upper[v] && !in_x[v];
    auto sub = induced_subgraph(r, lower);
    const int need = case2_length();

    for (Vertex y : layering_.layers[yl]) {
      if (y == u) continue;
      Vertex x = -1;
      for (Vertex c : r.out(y)) {
        if (in_x[c]) {
          x = c;
          break;
        }
      }
      if (x < 0) continue;
      auto found = long_st_path(sub.graph, sub.from_parent[u], sub.from_parent[y], need,
                                cfg_.subroutine);
      if (found.inconclusive()) {
        unit.events.push_back({DetourStage::case2, "long_st_path",
                               "u=" + std::to_string(restricted_.to_parent[u]) +
                                   " y=" + std::to_string(restricted_.to_parent[y])});
      }
      if (!found.found()) continue;
      auto gx = induced_subgraph(r, in_x);
      auto inside = *shortest_path(gx.graph, gx.from_parent[x], gx.from_parent[lt_]);
      auto prefix = *shortest_path(r, ls_, u);
      auto middle = lift(sub, found.witness->vertices);
      auto suffix = lift(gx, inside);
      for (Vertex v : suffix) {
        if (!in_x[v]) throw std::logic_error("case-2 suffix leaves X");
      }
      for (Vertex v : middle) {
        if (in_x[v]) throw std::logic_error("case-2 middle path meets X");
      }
      unit.path = concat_paths({prefix, middle, suffix});
      unit.stage = DetourStage::case2;
      unit.trace.x = restricted_.to_parent[x];
      unit.trace.y = restricted_.to_parent[y];
      for (Vertex v : members(in_x)) unit.trace.X.push_back(restricted_.to_parent[v]);
      for (Vertex v : members(in_h)) unit.trace.region_h.push_back(restricted_.to_parent[v]);
      return unit;
    }
    return unit;
  }

  static std::vector<Vertex> lift(const InducedSubgraph& sub, const std::vector<Vertex>& path) {
    std::vector<Vertex> out;
    out.reserve(path.size());
    for (Vertex v : path) out.push_back(sub.to_parent[v]);
    return out;
  }

  DetourAnswer& finish(DetourAnswer& answer, const std::vector<Vertex>& local,
                       DetourStage stage, const DetourTrace& trace) {
    std::vector<Vertex> path = lift(restricted_, local);
    auto witness = PathWitness::validated(g_, std::move(path), to_string(stage), dist_);
    if (witness.front() != s_ || witness.back() != t_ || witness.length() < dist_ + k_) {
      throw std::logic_error("detour witness misses the required endpoints or length");
    }
    answer.verdict = Verdict::yes;
    answer.stage = stage;
    answer.witness = std::move(witness);
    answer.trace = trace;
    return answer;
  }

  const DirectedGraph& g_;
  Vertex s_, t_;
  int k_;
  bool undirected_;
  const DetourConfig& cfg_;
  int dist_ = 0;
  InducedSubgraph restricted_;
  Vertex ls_ = 0, lt_ = 0;
  BfsLayering layering_;
};

}  // namespace

DetourAnswer solve_directed_detour(const DetourQuery& q, const DetourConfig& cfg) {
  const auto* g = std::get_if<std::reference_wrapper<const DirectedGraph>>(&q.graph);
  if (!g) throw std::invalid_argument("directed detour solver needs a directed graph");
  return Pipeline(g->get(), q.s, q.t, q.k, false, cfg).run();
}

DetourAnswer solve_undirected_detour(const DetourQuery& q, const DetourConfig& cfg) {
  const auto* g = std::get_if<std::reference_wrapper<const UndirectedGraph>>(&q.graph);
  if (!g) throw std::invalid_argument("undirected detour solver needs an undirected graph");
  const DirectedGraph sym = symmetrize(g->get());
  DetourAnswer answer = Pipeline(sym, q.s, q.t, q.k, true, cfg).run();
  if (answer.witness) {
    answer.witness = PathWitness::validated(g->get(), answer.witness->vertices,
                                            answer.witness->stage, answer.witness->baseline);
  }
  return answer;
}

DetourAnswer solve_detour(const DetourQuery& q, const DetourConfig& cfg) {
  if (std::holds_alternative<std::reference_wrapper<const DirectedGraph>>(q.graph)) {
    return solve_directed_detour(q, cfg);
  }
  return solve_undirected_detour(q, cfg);
}

std::string explain(const DetourAnswer& a) {
  std::ostringstream out;
  out << "verdict: " << to_string(a.verdict) << "\n";
  out << "stage: " << to_string(a.stage) << "\n";
  if (a.distance >= 0) out << "dist(s,t): " << a.distance << "\n";
  if (a.trace) {
    const DetourTrace& t = *a.trace;
    out << "trace:";
    auto put = [&](const char* name, const auto& value) {
      if (value) out << " " << name << "=" << *value;
    };
    put("p", t.p);
    put("q", t.q);
    put("r", t.r);
    put("ell", t.ell);
    put("u", t.u);
    put("v", t.v);
    put("w", t.w);
    put("x", t.x);
    put("y", t.y);
    if (!t.X.empty()) out << " |X|=" << t.X.size();
    if (!t.region_h.empty()) out << " |H|=" << t.region_h.size();
    out << "\n";
  }
  if (a.witness) {
    out << "witness (length " << a.witness->length() << "):";
    for (Vertex v : a.witness->vertices) out << " " << v;
    out << "\n";
  }
  if (!a.completed_stages.empty()) {
    out << "completed stages:";
    for (DetourStage s : a.completed_stages) out << " " << to_string(s);
    out << "\n";
  }
  for (const auto& e : a.inconclusive) {
    out << "inconclusive: " << e.subroutine << " in " << to_string(e.stage);
    if (!e.detail.empty()) out << " (" << e.detail << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace agp
