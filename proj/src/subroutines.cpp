#include "agp/subroutines.hpp"

#include <bit>
#include <cmath>
#include <random>

namespace agp {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::automatic: return "auto";
    case Strategy::color_coding: return "color-coding";
    case Strategy::subset_dp: return "subset-dp";
    case Strategy::branch_and_bound: return "bnb";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(const std::string& name) {
  if (name == "auto") return Strategy::automatic;
  if (name == "color-coding") return Strategy::color_coding;
  if (name == "subset-dp") return Strategy::subset_dp;
  if (name == "bnb") return Strategy::branch_and_bound;
  return std::nullopt;
}

std::uint64_t color_coding_trials(int colors, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("failure probability must lie in (0,1)");
  return static_cast<std::uint64_t>(std::ceil(std::exp(colors) * std::log(1.0 / delta)));
}

namespace {

// ---------------------------------------------------------------------------
// Layered subset DP: layer j holds the vertex subsets of size j that are
// covered by some simple path, with the set of possible end vertices.

struct LayeredQuery {
  Vertex start = -1;   // fixed first vertex, or -1
  Vertex target = -1;  // paths may only end (never pass) here, or -1
  int min_arcs = 0;
  int max_arcs = 0;    // layers beyond max_arcs+1 vertices are not expanded
};

std::optional<std::vector<Vertex>> layered_dp(const DirectedGraph& g, const LayeredQuery& q) {
  const int n = g.vertex_count();
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> frontier;
  for (Vertex v = 0; v < n; ++v) {
    if (q.start >= 0 && v != q.start) continue;
    ends[std::size_t{1} << v] = 1u << v;
    frontier.push_back(1u << v);
  }
  auto accept = [&](std::uint32_t mask) -> std::uint32_t {
    std::uint32_t e = ends[mask];
    if (q.target >= 0) e &= 1u << q.target;
    return e;
  };
  auto rebuild = [&](std::uint32_t mask, Vertex end) {
    std::vector<Vertex> rev{end};
    while (std::popcount(mask) > 1) {
      mask &= ~(1u << end);
      for (Vertex u : g.in(end)) {
        if (u != q.target && ((ends[mask] >> u) & 1u)) {
          end = u;
          break;
        }
      }
      rev.push_back(end);
    }
    return std::vector<Vertex>(rev.rbegin(), rev.rend());
  };

  for (int arcs = 0; !frontier.empty(); ++arcs) {
    if (arcs >= q.min_arcs) {
      for (std::uint32_t mask : frontier) {
        if (std::uint32_t e = accept(mask)) return rebuild(mask, std::countr_zero(e));
      }
    }
    if (arcs >= q.max_arcs) break;
    std::vector<std::uint32_t> next;
    for (std::uint32_t mask : frontier) {
      std::uint32_t e = ends[mask];
      if (q.target >= 0) e &= ~(1u << q.target);
      while (e) {
        const Vertex v = std::countr_zero(e);
        e &= e - 1;
        for (Vertex u : g.out(v)) {
          if ((mask >> u) & 1u) continue;
          const std::uint32_t grown = mask | (1u << u);
          if (ends[grown] == 0) next.push_back(grown);
          ends[grown] |= 1u << u;
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Depth-first search that stops at the first path meeting the length window.

class WindowSearch {
 public:
  WindowSearch(const DirectedGraph& g, const LayeredQuery& q, std::uint64_t budget)
      : g_(g), q_(q), budget_(budget), used_(g.vertex_count(), 0),
        seen_(g.vertex_count(), 0), dist_(g.vertex_count(), 0) {}

  std::optional<std::vector<Vertex>> run() {
    const int n = g_.vertex_count();
    for (Vertex v = 0; v < n && !out_of_budget_; ++v) {
      if (q_.start >= 0 && v != q_.start) continue;
      path_.assign(1, v);
      used_[v] = 1;
      const bool hit = dfs(v);
      used_[v] = 0;
      if (hit) return path_;
    }
    return std::nullopt;
  }

  bool out_of_budget() const { return out_of_budget_; }

 private:
  // Vertices reachable from `from` through unused vertices, and the distance
  // to the target along them (-1 if the target is cut off).
  std::pair<int, int> explore(Vertex from) {
    ++epoch_;
    queue_.assign(1, from);
    seen_[from] = epoch_;
    dist_[from] = 0;
    int count = 0;
    int target_dist = -1;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex x = queue_[head];
      if (x == q_.target) continue;
      for (Vertex y : g_.out(x)) {
        if (used_[y] || seen_[y] == epoch_) continue;
        seen_[y] = epoch_;
        dist_[y] = dist_[x] + 1;
        ++count;
        if (y == q_.target) target_dist = dist_[y];
        queue_.push_back(y);
      }
    }
    return {count, target_dist};
  }

  bool dfs(Vertex v) {
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return false;
    }
    const int len = static_cast<int>(path_.size()) - 1;
    if (q_.target < 0 || v == q_.target) {
      if (len >= q_.min_arcs && len <= q_.max_arcs) return true;
      if (v == q_.target) return false;
    }
    if (len >= q_.max_arcs) return false;
    const auto [count, target_dist] = explore(v);
    if (len + count < q_.min_arcs) return false;
    if (q_.target >= 0 && (target_dist < 0 || len + target_dist > q_.max_arcs)) return false;
    for (Vertex u : g_.out(v)) {
      if (used_[u]) continue;
      used_[u] = 1;
      path_.push_back(u);
      if (dfs(u)) return true;
      path_.pop_back();
      used_[u] = 0;
      if (out_of_budget_) return false;
    }
    return false;
  }

  const DirectedGraph& g_;
  LayeredQuery q_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<Vertex> path_;
  std::vector<char> used_;
  std::vector<std::uint32_t> seen_;
  std::vector<int> dist_;
  std::uint32_t epoch_ = 0;
  std::vector<Vertex> queue_;
};

// ---------------------------------------------------------------------------
// Color coding: a path is colourful when its vertices carry distinct colours.

constexpr std::size_t kColorTableLimit = std::size_t{1} << 27;

struct ColorfulOutcome {
  std::optional<std::vector<Vertex>> path;
  std::uint64_t trials = 0;
};

ColorfulOutcome colorful_search(const DirectedGraph& g, const LayeredQuery& q, int colors,
                                const SubroutineConfig& cfg) {
  const int n = g.vertex_count();
  const std::size_t masks = std::size_t{1} << colors;
  if (colors > 24 || masks * static_cast<std::size_t>(n) > kColorTableLimit) {
    throw std::invalid_argument("color coding with " + std::to_string(colors) +
                                " colours on " + std::to_string(n) + " vertices is too large");
  }
  const std::uint64_t trials = color_coding_trials(colors, cfg.failure_probability);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> pick(0, colors - 1);
  std::vector<int> color(static_cast<std::size_t>(n));
  std::vector<char> table(masks * static_cast<std::size_t>(n));
  auto at = [&](std::size_t mask, Vertex v) -> char& { return table[mask * n + v]; };

  ColorfulOutcome out;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    out.trials = trial + 1;
    for (int& c : color) c = pick(rng);
    std::fill(table.begin(), table.end(), 0);
    for (Vertex v = 0; v < n; ++v) {
      if (q.start < 0 || v == q.start) at(std::size_t{1} << color[v], v) = 1;
    }
    for (std::size_t mask = 1; mask < masks; ++mask) {
      const int arcs = std::popcount(mask) - 1;
      for (Vertex v = 0; v < n; ++v) {
        if (!at(mask, v)) continue;
        const bool at_target = q.target >= 0 && v == q.target;
        if ((q.target < 0 || at_target) && arcs >= q.min_arcs && arcs <= q.max_arcs) {
          std::vector<Vertex> rev{v};
          std::size_t m = mask;
          Vertex cur = v;
          while (std::popcount(m) > 1) {
            m &= ~(std::size_t{1} << color[cur]);
            for (Vertex u : g.in(cur)) {
              if (((m >> color[u]) & 1u) && at(m, u) && !(q.target >= 0 && u == q.target)) {
                cur = u;
                break;
              }
            }
            rev.push_back(cur);
          }
          out.path = std::vector<Vertex>(rev.rbegin(), rev.rend());
          return out;
        }
        if (at_target) continue;
        for (Vertex u : g.out(v)) {
          const std::size_t bit = std::size_t{1} << color[u];
          if (!(mask & bit)) at(mask | bit, u) = 1;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Strategy resolve(const SubroutineConfig& cfg, int n) {
  if (cfg.strategy != Strategy::automatic) return cfg.strategy;
  return n <= std::min(cfg.limits.dp_vertex_cap, 25) ? Strategy::subset_dp
                                                     : Strategy::branch_and_bound;
}

PathSearch run(const DirectedGraph& g, const LayeredQuery& q, int colors,
               const SubroutineConfig& cfg, const char* stage) {
  PathSearch result;
  const Strategy strategy = resolve(cfg, g.vertex_count());
  result.engine = to_string(strategy);
  std::optional<std::vector<Vertex>> path;
  switch (strategy) {
    case Strategy::subset_dp:
      if (g.vertex_count() > 25) throw std::invalid_argument("subset DP needs n <= 25");
      path = layered_dp(g, q);
      break;
    case Strategy::branch_and_bound: {
      WindowSearch search(g, q, cfg.limits.bnb_node_budget);
      path = search.run();
      if (!path && search.out_of_budget()) result.status = SearchStatus::inconclusive;
      break;
    }
    case Strategy::color_coding: {
      auto outcome = colorful_search(g, q, colors, cfg);
      path = std::move(outcome.path);
      result.randomized = true;
      result.trials = outcome.trials;
      result.failure_probability = cfg.failure_probability;
      break;
    }
    case Strategy::automatic:
      break;
  }
  if (path) {
    result.status = SearchStatus::found;
    result.witness = PathWitness::validated(g, std::move(*path), stage);
  }
  return result;
}

PathSearch trivially(SearchStatus status, std::optional<PathWitness> witness = std::nullopt) {
  PathSearch r;
  r.status = status;
  r.witness = std::move(witness);
  r.engine = "direct";
  return r;
}

}  // namespace

PathSearch has_path_at_least(const DirectedGraph& g, int k, const SubroutineConfig& cfg) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const int n = g.vertex_count();
  if (k >= n) return trivially(SearchStatus::absent);
  if (k == 0) return trivially(SearchStatus::found, PathWitness::validated(g, {0}, "k-path"));
  LayeredQuery q;
  q.min_arcs = k;
  q.max_arcs = cfg.strategy == Strategy::branch_and_bound ? n : k;
  return run(g, q, k + 1, cfg, "k-path");
}

PathSearch long_st_path(const DirectedGraph& g, Vertex s, Vertex t, int k,
                        const SubroutineConfig& cfg) {
  if (s == t) throw GraphError("long (s,t)-path needs s != t");
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const int n = g.vertex_count();
  auto shortest = shortest_path(g, s, t);
  if (!shortest) return trivially(SearchStatus::absent);
  if (static_cast<int>(shortest->size()) - 1 >= k) {
    return trivially(SearchStatus::found, PathWitness::validated(g, std::move(*shortest), "long-st-path"));
  }
  if (k >= n) return trivially(SearchStatus::absent);
  LayeredQuery q;
  q.start = s;
  q.target = t;
  q.min_arcs = k;
  q.max_arcs = n - 1;
  int colors = 0;
  if (resolve(cfg, n) == Strategy::color_coding) {
    q.max_arcs = std::max(k, std::min(2 * k, n - 1));
    colors = q.max_arcs + 1;
  }
  return run(g, q, colors, cfg, "long-st-path");
}

PathSearch exact_detour(const DirectedGraph& g, Vertex s, Vertex t, int ell,
                        const SubroutineConfig& cfg) {
  if (s == t) throw GraphError("exact detour needs s != t");
  if (ell < 0) throw std::invalid_argument("ell must be non-negative");
  auto shortest = shortest_path(g, s, t);
  if (!shortest) {
    throw UnreachableTarget("vertex " + std::to_string(t) + " is unreachable from " +
                            std::to_string(s));
  }
  const int dist = static_cast<int>(shortest->size()) - 1;
  if (ell == 0) {
    auto r = trivially(SearchStatus::found, PathWitness::validated(g, std::move(*shortest), "exact-detour", dist));
    return r;
  }
  const int target_len = dist + ell;
  if (target_len >= g.vertex_count()) return trivially(SearchStatus::absent);
  LayeredQuery q;
  q.start = s;
  q.target = t;
  q.min_arcs = target_len;
  q.max_arcs = target_len;
  auto r = run(g, q, target_len + 1, cfg, "exact-detour");
  if (r.witness) r.witness->baseline = dist;
  return r;
}

}  // namespace agp
