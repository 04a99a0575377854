#include "agp/oracle.hpp"

#include <bit>
#include <climits>

namespace agp {

namespace {

constexpr int kDpHardCap = 25;

bool use_dp(int n, const OracleLimits& limits) {
  if (limits.dp_vertex_cap > kDpHardCap || limits.dp_vertex_cap < 0) {
    throw std::invalid_argument("dp_vertex_cap must lie in [0,25]");
  }
  switch (limits.engine) {
    case OracleEngine::subset_dp:
      if (n > limits.dp_vertex_cap) {
        throw std::invalid_argument("subset DP requested for " + std::to_string(n) +
                                    " vertices, cap is " + std::to_string(limits.dp_vertex_cap));
      }
      return true;
    case OracleEngine::branch_and_bound:
      return false;
    case OracleEngine::automatic:
      break;
  }
  return n <= limits.dp_vertex_cap;
}

// reach[mask] holds the end vertices of simple paths covering exactly `mask`
// (restricted to paths starting at `start` when start >= 0).
class SubsetDp {
 public:
  SubsetDp(const DirectedGraph& g, Vertex start) : n_(g.vertex_count()), in_mask_(n_, 0) {
    std::vector<std::uint32_t> out_mask(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex u : g.out(v)) {
        out_mask[v] |= 1u << u;
        in_mask_[u] |= 1u << v;
      }
    }
    reach_.assign(std::size_t{1} << n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      if (start < 0 || v == start) reach_[std::size_t{1} << v] |= 1u << v;
    }
    for (std::size_t mask = 1; mask < reach_.size(); ++mask) {
      std::uint32_t ends = reach_[mask];
      while (ends) {
        const int v = std::countr_zero(ends);
        ends &= ends - 1;
        std::uint32_t next = out_mask[v] & ~static_cast<std::uint32_t>(mask);
        while (next) {
          const int u = std::countr_zero(next);
          next &= next - 1;
          reach_[mask | (std::size_t{1} << u)] |= 1u << u;
        }
      }
    }
  }

  // Largest mask (by popcount, then lowest value) whose end set meets `ends`.
  std::optional<std::pair<std::size_t, Vertex>> best(std::uint32_t ends) const {
    int best_count = -1;
    std::pair<std::size_t, Vertex> result{0, 0};
    for (std::size_t mask = 1; mask < reach_.size(); ++mask) {
      const std::uint32_t hit = reach_[mask] & ends;
      if (!hit) continue;
      const int c = std::popcount(mask);
      if (c > best_count) {
        best_count = c;
        result = {mask, static_cast<Vertex>(std::countr_zero(hit))};
      }
    }
    if (best_count < 0) return std::nullopt;
    return result;
  }

  bool covers(std::size_t mask, Vertex end) const { return (reach_[mask] >> end) & 1u; }

  std::vector<Vertex> reconstruct(std::size_t mask, Vertex end) const {
    std::vector<Vertex> path{end};
    while (std::popcount(mask) > 1) {
      mask ^= std::size_t{1} << end;
      const std::uint32_t prev = reach_[mask] & in_mask_[end];
      end = static_cast<Vertex>(std::countr_zero(prev));
      path.push_back(end);
    }
    return {path.rbegin(), path.rend()};
  }

 private:
  int n_;
  std::vector<std::uint32_t> in_mask_;
  std::vector<std::uint32_t> reach_;
};

// Depth-first maximisation with a reachability bound.
class BranchAndBound {
 public:
  BranchAndBound(const DirectedGraph& g, Vertex target, std::uint64_t budget, int stop_at)
      : g_(g), target_(target), budget_(budget), stop_at_(stop_at), used_(g.vertex_count(), 0),
        mark_(g.vertex_count(), 0) {}

  void seed(std::vector<Vertex> path) {
    best_len_ = static_cast<int>(path.size()) - 1;
    best_ = std::move(path);
  }

  void run_from(Vertex start) {
    path_.assign(1, start);
    used_[start] = 1;
    dfs(start);
    used_[start] = 0;
  }

  bool done() const { return exhausted_ || best_len_ >= stop_at_; }
  bool exhausted() const { return exhausted_; }
  int best_length() const { return best_len_; }
  const std::vector<Vertex>& best() const { return best_; }

 private:
  std::pair<int, bool> bound(Vertex from) {
    ++epoch_;
    stack_.assign(1, from);
    mark_[from] = epoch_;
    int count = 0;
    bool hit = false;
    while (!stack_.empty()) {
      const Vertex x = stack_.back();
      stack_.pop_back();
      for (Vertex y : g_.out(x)) {
        if (!used_[y] && mark_[y] != epoch_) {
          mark_[y] = epoch_;
          ++count;
          hit |= y == target_;
          stack_.push_back(y);
        }
      }
    }
    return {count, hit};
  }

  void dfs(Vertex v) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    const int len = static_cast<int>(path_.size()) - 1;
    if ((target_ < 0 || v == target_) && len > best_len_) {
      best_len_ = len;
      best_ = path_;
    }
    if (v == target_ || best_len_ >= stop_at_) return;
    const auto [count, hit] = bound(v);
    if (target_ >= 0 && !hit) return;
    if (len + count <= best_len_) return;
    for (Vertex u : g_.out(v)) {
      if (used_[u]) continue;
      used_[u] = 1;
      path_.push_back(u);
      dfs(u);
      path_.pop_back();
      used_[u] = 0;
      if (done()) return;
    }
  }

  const DirectedGraph& g_;
  Vertex target_;
  std::uint64_t budget_;
  int stop_at_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  int best_len_ = -1;
  std::vector<Vertex> best_;
  std::vector<Vertex> path_;
  std::vector<char> used_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
  std::vector<Vertex> stack_;
};

template <class Graph>
OracleAnswer finish(const Graph& g, std::vector<Vertex> path, bool exact, const char* stage) {
  OracleAnswer a;
  a.value = static_cast<int>(path.size()) - 1;
  a.witness = PathWitness::validated(g, std::move(path), stage);
  a.exact = exact;
  return a;
}

template <class Graph>
OracleAnswer longest_path_impl(const Graph& original, const DirectedGraph& g,
                               const OracleLimits& limits) {
  const int n = g.vertex_count();
  if (n == 0) return OracleAnswer{0, PathWitness{}, true};
  if (use_dp(n, limits)) {
    SubsetDp dp(g, -1);
    auto [mask, end] = *dp.best(~0u);
    return finish(original, dp.reconstruct(mask, end), true, "oracle-dp");
  }
  BranchAndBound bnb(g, -1, limits.bnb_node_budget, n - 1);
  bnb.seed({0});
  for (Vertex v = 0; v < n && !bnb.done(); ++v) bnb.run_from(v);
  return finish(original, bnb.best(), !bnb.exhausted(), "oracle-bnb");
}

template <class Graph>
std::optional<OracleAnswer> longest_st_impl(const Graph& original, const DirectedGraph& g,
                                            Vertex s, Vertex t, const OracleLimits& limits) {
  if (s == t) throw GraphError("longest (s,t)-path needs s != t");
  auto shortest = shortest_path(g, s, t);
  if (!shortest) return std::nullopt;
  const int n = g.vertex_count();
  if (use_dp(n, limits)) {
    SubsetDp dp(g, s);
    auto [mask, end] = *dp.best(1u << t);
    return finish(original, dp.reconstruct(mask, end), true, "oracle-dp");
  }
  BranchAndBound bnb(g, t, limits.bnb_node_budget, n - 1);
  bnb.seed(*shortest);
  bnb.run_from(s);
  return finish(original, bnb.best(), !bnb.exhausted(), "oracle-bnb");
}

template <class Graph>
DetourOracleAnswer detour_impl(const Graph& g, Vertex s, Vertex t, const OracleLimits& limits) {
  auto longest = longest_st_path_oracle(g, s, t, limits);
  if (!longest) {
    throw UnreachableTarget("vertex " + std::to_string(t) + " is unreachable from " +
                            std::to_string(s));
  }
  DetourOracleAnswer a;
  a.distance = distances_from(g, s)[t];
  a.k_star = longest->value - a.distance;
  a.longest = std::move(*longest);
  return a;
}

}  // namespace

OracleAnswer longest_path_oracle(const DirectedGraph& g, const OracleLimits& limits) {
  return longest_path_impl(g, g, limits);
}

OracleAnswer longest_path_oracle(const UndirectedGraph& g, const OracleLimits& limits) {
  return longest_path_impl(g, symmetrize(g), limits);
}

std::optional<OracleAnswer> longest_st_path_oracle(const DirectedGraph& g, Vertex s, Vertex t,
                                                   const OracleLimits& limits) {
  return longest_st_impl(g, g, s, t, limits);
}

std::optional<OracleAnswer> longest_st_path_oracle(const UndirectedGraph& g, Vertex s, Vertex t,
                                                   const OracleLimits& limits) {
  return longest_st_impl(g, symmetrize(g), s, t, limits);
}

DetourOracleAnswer detour_oracle(const DirectedGraph& g, Vertex s, Vertex t,
                                 const OracleLimits& limits) {
  return detour_impl(g, s, t, limits);
}

DetourOracleAnswer detour_oracle(const UndirectedGraph& g, Vertex s, Vertex t,
                                 const OracleLimits& limits) {
  return detour_impl(g, s, t, limits);
}

HamiltonianSearch hamiltonian_path_from(const UndirectedGraph& ug, Vertex w,
                                        const OracleLimits& limits) {
  const int n = ug.vertex_count();
  if (w < 0 || w >= n) throw GraphError("start vertex out of range");
  const DirectedGraph g = symmetrize(ug);
  HamiltonianSearch result;
  if (use_dp(n, limits)) {
    SubsetDp dp(g, w);
    const std::size_t full = (std::size_t{1} << n) - 1;
    for (Vertex v = 0; v < n; ++v) {
      if (dp.covers(full, v)) {
        result.status = SearchStatus::found;
        result.witness = PathWitness::validated(ug, dp.reconstruct(full, v), "hamiltonian-dp");
        return result;
      }
    }
    return result;
  }
  BranchAndBound bnb(g, -1, limits.bnb_node_budget, n - 1);
  bnb.run_from(w);
  if (bnb.best_length() == n - 1) {
    result.status = SearchStatus::found;
    result.witness = PathWitness::validated(ug, bnb.best(), "hamiltonian-bnb");
  } else if (bnb.exhausted()) {
    result.status = SearchStatus::inconclusive;
  }
  return result;
}

}  // namespace agp
