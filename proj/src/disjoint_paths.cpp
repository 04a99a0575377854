#include "agp/disjoint_paths.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace agp {

std::vector<Vertex> ChainSolution::concatenated() const {
  return concat_paths({r1.vertices, r2.vertices, r3.vertices});
}

namespace {

void check_query(const ChainQuery& q) {
  const int n = q.graph.vertex_count();
  for (Vertex x : {q.s, q.w, q.v, q.t}) {
    if (x < 0 || x >= n) throw std::invalid_argument("chain terminal out of range");
  }
  if (q.s == q.w || q.s == q.v || q.w == q.v || q.t == q.s || q.t == q.w) {
    throw std::invalid_argument("chain terminals must be distinct (only v == t is allowed)");
  }
}

// Simple (s,t)-paths through w and then v, by depth-first search. Terminals of
// later phases are closed until their phase begins.
class ChainSearch {
 public:
  ChainSearch(const ChainQuery& q, std::uint64_t budget)
      : q_(q), budget_(budget), used_(q.graph.vertex_count(), 0),
        mark_(q.graph.vertex_count(), 0) {
    goals_ = {q.w, q.v, q.t};
    if (q.v == q.t) goals_ = {q.w, q.t};
  }

  std::optional<std::vector<Vertex>> run() {
    path_.assign(1, q_.s);
    used_[q_.s] = 1;
    if (dfs(q_.s, 0)) return path_;
    return std::nullopt;
  }

  bool out_of_budget() const { return out_of_budget_; }

 private:
  bool closed(Vertex x, std::size_t phase) const {
    if (used_[x]) return true;
    for (std::size_t later = phase + 1; later < goals_.size(); ++later) {
      if (goals_[later] == x) return true;
    }
    return false;
  }

  // Can the current phase goal still be reached, and from it each later goal?
  bool feasible(Vertex from, std::size_t phase) {
    for (std::size_t p = phase; p < goals_.size(); ++p) {
      ++epoch_;
      stack_.assign(1, from);
      mark_[from] = epoch_;
      bool hit = false;
      while (!stack_.empty() && !hit) {
        const Vertex x = stack_.back();
        stack_.pop_back();
        for (Vertex y : q_.graph.out(x)) {
          if (y == goals_[p]) {
            hit = true;
            break;
          }
          if (mark_[y] == epoch_ || closed(y, p)) continue;
          mark_[y] = epoch_;
          stack_.push_back(y);
        }
      }
      if (!hit) return false;
      from = goals_[p];
    }
    return true;
  }

  bool dfs(Vertex x, std::size_t phase) {
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return false;
    }
    if (x == goals_[phase]) {
      if (phase + 1 == goals_.size()) return true;
      ++phase;
    }
    if (!feasible(x, phase)) return false;
    for (Vertex y : q_.graph.out(x)) {
      if (closed(y, phase)) continue;
      used_[y] = 1;
      path_.push_back(y);
      if (dfs(y, phase)) return true;
      path_.pop_back();
      used_[y] = 0;
      if (out_of_budget_) return false;
    }
    return false;
  }

  const ChainQuery& q_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<Vertex> goals_;
  std::vector<Vertex> path_;
  std::vector<char> used_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
  std::vector<Vertex> stack_;
};

ChainSolution split(const ChainQuery& q, const std::vector<Vertex>& path) {
  const auto iw = std::find(path.begin(), path.end(), q.w);
  const auto iv = std::find(path.begin(), path.end(), q.v);
  ChainSolution sol;
  sol.r1 = PathWitness::validated(q.graph, {path.begin(), iw + 1}, "chain-r1");
  sol.r2 = PathWitness::validated(q.graph, {iw, iv + 1}, "chain-r2");
  sol.r3 = PathWitness::validated(q.graph, {iv, path.end()}, "chain-r3");
  sol.total_length = sol.r1.length() + sol.r2.length() + sol.r3.length();
  if (auto err = check_path(q.graph, sol.concatenated())) {
    throw InvalidWitness("chain concatenation is not simple: " + *err);
  }
  return sol;
}

ChainOutcome exhaustive_backend(const ChainQuery& q, const ChainOptions& options) {
  ChainSearch search(q, options.node_budget);
  ChainOutcome out;
  if (auto path = search.run()) {
    out.status = SearchStatus::found;
    out.solution = split(q, *path);
  } else if (search.out_of_budget()) {
    out.status = SearchStatus::inconclusive;
  }
  return out;
}

ChainOutcome flow_prefilter_backend(const ChainQuery& q, const ChainOptions& options) {
  const int required = q.v == q.t ? 2 : 3;
  if (chain_flow_relaxation(q) < required) return ChainOutcome{};
  return exhaustive_backend(q, options);
}

struct Registry {
  std::mutex mutex;
  std::map<std::string, ChainBackend> backends{
      {"exhaustive", exhaustive_backend},
      {"flow-prefilter", flow_prefilter_backend},
  };
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

int chain_flow_relaxation(const ChainQuery& q) {
  check_query(q);
  const DirectedGraph& g = q.graph;
  const int n = g.vertex_count();
  // Nodes: 2x = x_in, 2x+1 = x_out, 2n = super source, 2n+1 = super sink.
  const int source = 2 * n, sink = 2 * n + 1;
  struct Edge {
    int to;
    int cap;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(2 * n + 2));
  auto add = [&](int a, int b) {
    incident[a].push_back(static_cast<int>(edges.size()));
    edges.push_back({b, 1});
    incident[b].push_back(static_cast<int>(edges.size()));
    edges.push_back({a, 0});
  };
  std::vector<char> starts(n, 0), ends(n, 0);
  starts[q.s] = starts[q.w] = 1;
  ends[q.w] = ends[q.t] = 1;
  if (q.v != q.t) starts[q.v] = ends[q.v] = 1;
  for (Vertex x = 0; x < n; ++x) {
    if (starts[x]) add(source, 2 * x + 1);
    if (ends[x]) add(2 * x, sink);
    if (!starts[x] && !ends[x]) add(2 * x, 2 * x + 1);
    for (Vertex y : g.out(x)) add(2 * x + 1, 2 * y);
  }
  int flow = 0;
  while (true) {
    std::vector<int> via(2 * n + 2, -1);
    std::vector<char> seen(2 * n + 2, 0);
    std::vector<int> queue{source};
    seen[source] = 1;
    for (std::size_t head = 0; head < queue.size() && !seen[sink]; ++head) {
      for (int e : incident[queue[head]]) {
        if (edges[e].cap > 0 && !seen[edges[e].to]) {
          seen[edges[e].to] = 1;
          via[edges[e].to] = e;
          queue.push_back(edges[e].to);
        }
      }
    }
    if (!seen[sink]) break;
    for (int x = sink; x != source; x = edges[via[x] ^ 1].to) {
      edges[via[x]].cap -= 1;
      edges[via[x] ^ 1].cap += 1;
    }
    ++flow;
  }
  return flow;
}

void register_chain_backend(const std::string& name, ChainBackend backend) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  r.backends[name] = std::move(backend);
}

std::vector<std::string> chain_backend_names() {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  std::vector<std::string> names;
  for (const auto& [name, _] : r.backends) names.push_back(name);
  return names;
}

bool has_chain_backend(const std::string& name) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  return r.backends.count(name) > 0;
}

ChainOutcome solve_chain3(const ChainQuery& q, const std::string& backend,
                          const ChainOptions& options) {
  check_query(q);
  ChainBackend fn;
  {
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    auto it = r.backends.find(backend);
    if (it == r.backends.end()) throw std::invalid_argument("unknown chain backend: " + backend);
    fn = it->second;
  }
  return fn(q, options);
}

}  // namespace agp
