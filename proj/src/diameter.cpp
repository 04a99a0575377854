#include "agp/diameter.hpp"

#include <algorithm>
#include <array>

namespace agp {

std::string to_string(LpadMode m) {
  switch (m) {
    case LpadMode::undirected2c: return "undirected2c";
    case LpadMode::directed2sc: return "directed2sc";
    case LpadMode::oracle: return "oracle";
  }
  return "?";
}

std::optional<LpadMode> parse_lpad_mode(const std::string& name) {
  if (name == "undirected2c") return LpadMode::undirected2c;
  if (name == "directed2sc") return LpadMode::directed2sc;
  if (name == "oracle") return LpadMode::oracle;
  return std::nullopt;
}

namespace {

using Path = std::vector<Vertex>;

// Two internally disjoint (s,t)-paths with per-vertex position lookup.
// Paths are indexed 0 and 1; position j of path i is v_{i,j} for
// 1 <= j <= p(i), position 0 is s and p(i)+1 is t.
class Frame {
 public:
  Frame(const DirectedGraph& g, Path p0, Path p1)
      : g_(g), paths_{std::move(p0), std::move(p1)},
        side_(g.vertex_count(), -1), pos_(g.vertex_count(), -1) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < static_cast<int>(paths_[i].size()); ++j) {
        side_[paths_[i][j]] = i;
        pos_[paths_[i][j]] = j;
      }
    }
  }

  const DirectedGraph& graph() const { return g_; }
  Vertex s() const { return paths_[0].front(); }
  Vertex t() const { return paths_[0].back(); }
  int p(int i) const { return static_cast<int>(paths_[i].size()) - 2; }
  const Path& path(int i) const { return paths_[i]; }
  Vertex v(int i, int j) const { return paths_[i][j]; }
  bool on_paths(Vertex x) const { return side_[x] >= 0; }
  bool inner(Vertex x) const { return on_paths(x) && x != s() && x != t(); }
  int side(Vertex x) const { return side_[x]; }
  int pos(Vertex x) const { return pos_[x]; }

  // Positions a..b of path i, inclusive.
  Path segment(int i, int a, int b) const {
    return Path(paths_[i].begin() + a, paths_[i].begin() + b + 1);
  }

  // Shortest outer path from `from` to any vertex with target[x] set. Inner
  // vertices avoid both paths and everything in `blocked`.
  std::optional<Path> outer_path(Vertex from, const std::vector<char>& target,
                                 const std::vector<char>* blocked = nullptr) const {
    const int n = g_.vertex_count();
    std::vector<Vertex> parent(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<Vertex> queue{from};
    seen[from] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : g_.out(x)) {
        if (y != from && target[y]) {
          Path path{y};
          for (Vertex z = x; z != -1; z = parent[z]) path.push_back(z);
          std::reverse(path.begin(), path.end());
          for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            if (on_paths(path[i])) throw std::logic_error("outer path touches P1 or P2");
          }
          return path;
        }
        if (seen[y] || on_paths(y) || (blocked && (*blocked)[y])) continue;
        seen[y] = 1;
        parent[y] = x;
        queue.push_back(y);
      }
    }
    return std::nullopt;
  }

  std::vector<char> mark(std::initializer_list<Vertex> xs) const {
    std::vector<char> m(g_.vertex_count(), 0);
    for (Vertex x : xs) m[x] = 1;
    return m;
  }

 private:
  const DirectedGraph& g_;
  std::array<Path, 2> paths_;
  std::vector<int> side_, pos_;
};

Path join(std::initializer_list<std::span<const Vertex>> parts) { return concat_paths(parts); }

// Inner vertices of q (a (t,s)-path) that lie on P1 or P2, as indices into q.
std::vector<std::size_t> hits(const Frame& f, const Path& q) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < q.size(); ++i) {
    if (f.inner(q[i])) out.push_back(i);
  }
  return out;
}

Path sub(const Path& q, std::size_t a, std::size_t b) {
  return Path(q.begin() + static_cast<std::ptrdiff_t>(a),
              q.begin() + static_cast<std::ptrdiff_t>(b) + 1);
}

struct NearS {
  std::vector<Path> full;  // candidates for a whole path of length >= d+4
  std::vector<std::pair<Path, int>> five;  // path ending in v_{i,3}, and i
};

// A path of length >= 5 ending in v_{i,3} that uses no v_{x,y} with y > 3,
// built from the last two on-path vertices c, d of each (t,s)-path.
NearS near_s(const Frame& f, const std::array<Path, 2>& qs) {
  NearS out;
  auto keep_five = [&](Path r, int i) {
    if (f.p(i) < 3 || r.back() != f.v(i, 3) || r.size() < 6) return;
    if (check_path(f.graph(), r)) return;
    for (Vertex x : r) {
      if (x == f.t() || (f.inner(x) && f.pos(x) > 3)) return;
    }
    out.five.emplace_back(std::move(r), i);
  };
  for (const auto& q : qs) {
    const auto h = hits(f, q);
    if (h.empty()) continue;
    const Vertex d = q[h.back()];
    const int i = f.side(d), j = f.pos(d);
    const Path to_s = sub(q, h.back(), q.size() - 1);
    if (j >= 2) {
      if (f.p(1 - i) >= 3) {
        keep_five(join({f.segment(i, 1, j), to_s, f.segment(1 - i, 0, 3)}), 1 - i);
      }
      out.full.push_back(join({f.segment(i, 1, j), to_s, f.path(1 - i)}));
      continue;
    }
    if (h.size() < 2) continue;
    const Vertex c = q[h[h.size() - 2]];
    const int ic = f.side(c), jc = f.pos(c);
    const Path c_to_s = sub(q, h[h.size() - 2], q.size() - 1);
    const Path c_to_d = sub(q, h[h.size() - 2], h.back());
    if (ic == i) {
      if (jc >= 4) {
        out.full.push_back(join({f.segment(i, 2, jc), c_to_s, f.path(1 - i)}));
      } else if (f.p(1 - i) >= 3) {
        keep_five(join({c_to_s, f.segment(1 - i, 0, 3)}), 1 - i);
      }
    } else {
      if (jc >= 4) {
        out.full.push_back(join({f.segment(ic, 0, jc), c_to_d, f.segment(i, 1, f.p(i) + 1)}));
      } else if (f.p(i) >= 3) {
        keep_five(join({f.segment(ic, 0, jc), c_to_d, f.segment(i, 1, 3)}), i);
      }
    }
  }
  return out;
}

class Builder {
 public:
  explicit Builder(const DirectedGraph& g) : g_(g) {}

  BuilderOutcome run() {
    const auto info = diameter_and_pair(g_);
    d_ = info.diameter;
    out_.diameter = d_;
    const Vertex s = info.from, t = info.to;

    auto st = two_internally_disjoint_paths(g_, s, t);
    if (!st) return fail("disjoint-st-paths");
    // (a)
    if (accept(st->first.vertices, "long-Pi") || accept(st->second.vertices, "long-Pi")) return out_;
    const Frame f(g_, st->first.vertices, st->second.vertices);

    // (b) outer path from v_{i,j} back to v_{3-i,j'} with j' <= j-3
    for (int i = 0; i < 2; ++i) {
      for (int j = f.p(i); j >= 4; --j) {
        std::vector<char> target(g_.vertex_count(), 0);
        for (int jj = 1; jj <= std::min(j - 3, f.p(1 - i)); ++jj) target[f.v(1 - i, jj)] = 1;
        auto path = f.outer_path(f.v(i, j), target);
        if (!path) continue;
        const int jj = f.pos(path->back());
        if (accept(join({f.segment(i, 0, j), *path, f.segment(1 - i, jj, f.p(1 - i) + 1)}),
                   "outer-scan")) {
          return out_;
        }
      }
    }

    // (c) outer (v_{i,j}, s)-path with j >= 4, or (t, v_{i,j})-path with j <= p_i - 3
    for (int i = 0; i < 2; ++i) {
      for (int j = f.p(i); j >= 4; --j) {
        auto path = f.outer_path(f.v(i, j), f.mark({s}));
        if (path && accept(join({f.segment(i, 1, j), *path, f.path(1 - i)}), "longjump")) {
          return out_;
        }
      }
      for (int j = 1; j <= f.p(i) - 3; ++j) {
        auto path = f.outer_path(t, f.mark({f.v(i, j)}));
        if (path && accept(join({f.path(1 - i), *path, f.segment(i, j, f.p(i))}), "longjump")) {
          return out_;
        }
      }
    }

    // (d) two internally disjoint (t,s)-paths and the alternation structure
    auto ts = two_internally_disjoint_paths(g_, t, s);
    if (!ts) return fail("alternation-scan");
    const std::array<Path, 2> qs{ts->first.vertices, ts->second.vertices};
    for (const auto& q : qs) {
      const auto h = hits(f, q);
      if (h.empty()) {
        if (accept(join({f.segment(0, 1, f.p(0) + 1), q, f.segment(1, 0, f.p(1))}),
                   "alternation-scan")) {
          return out_;
        }
        continue;
      }
      const int i = f.side(q[h.front()]);
      std::size_t r = 0;
      while (r < h.size() && f.side(q[h[r]]) == i) ++r;
      if (accept(join({f.path(1 - i), sub(q, 0, h[r - 1])}), "alternation-scan")) return out_;
    }

    const NearS head = near_s(f, qs);
    for (const auto& p : head.full) {
      if (accept(p, "five-path-near-s")) return out_;
    }
    if (head.five.empty()) return fail("five-path-near-s");

    // Near t: the same construction in the transpose with s and t exchanged.
    const DirectedGraph gt = transpose(g_);
    const Frame ft(gt, reversed(f.path(0)), reversed(f.path(1)));
    const NearS tail = near_s(ft, {reversed(qs[0]), reversed(qs[1])});
    for (const auto& p : tail.full) {
      if (accept(reversed(p), "five-path-near-t")) return out_;
    }
    if (tail.five.empty()) return fail("five-path-near-t");

    for (const auto& [r, i] : head.five) {
      for (const auto& [rt, ii] : tail.five) {
        if (combine(f, r, i, reversed(rt), ii)) return out_;
      }
    }
    return fail("combination");
  }

 private:
  bool combine(const Frame& f, const Path& r, int i, const Path& rr, int ii) {
    const int pe = f.p(ii) - 2;  // R' starts at v_{ii,pe}
    if (i == ii) {
      if (pe < 3) return false;
      return accept(join({r, f.segment(i, 3, pe), rr}), "combination");
    }
    std::vector<char> forbidden(g_.vertex_count(), 0);
    for (Vertex x : r) forbidden[x] = 1;
    for (Vertex x : rr) forbidden[x] = 1;
    forbidden[f.v(i, 3)] = 0;
    forbidden[f.v(ii, pe)] = 0;
    for (int j : {1, 2}) forbidden[f.v(i, j)] = 1;
    for (int j : {f.p(ii), f.p(ii) - 1}) {
      if (j >= 1) forbidden[f.v(ii, j)] = 1;
    }
    std::vector<char> target(g_.vertex_count(), 0);
    for (int y = 1; y <= pe; ++y) {
      if (!forbidden[f.v(ii, y)]) target[f.v(ii, y)] = 1;
    }
    for (int y = f.p(i); y >= 3; --y) {
      const Vertex from = f.v(i, y);
      if (forbidden[from]) continue;
      auto path = f.outer_path(from, target, &forbidden);
      if (!path) continue;
      const int yy = f.pos(path->back());
      if (accept(join({r, f.segment(i, 3, y), *path, f.segment(ii, yy, pe), rr}), "combination")) {
        return true;
      }
    }
    return false;
  }

  bool accept(const Path& path, const char* step) {
    if (static_cast<int>(path.size()) - 1 < d_ + 4) return false;
    if (check_path(g_, path)) return false;
    out_.status = BuilderOutcome::Status::built;
    out_.witness = PathWitness::validated(g_, path, std::string("builder:") + step, d_);
    out_.step = step;
    return true;
  }

  BuilderOutcome fail(const char* label) {
    out_.status = BuilderOutcome::Status::failed;
    out_.failed_at = label;
    return out_;
  }

  const DirectedGraph& g_;
  int d_ = 0;
  BuilderOutcome out_;
};

void exact_search(const DirectedGraph& g, int target, const LpadConfig& cfg,
                  LpadAnswer& answer) {
  auto found = has_path_at_least(g, target, cfg.subroutine);
  answer.stage = "exact-search";
  answer.randomized = found.randomized;
  answer.failure_probability = found.failure_probability;
  if (found.found()) {
    answer.verdict = Verdict::yes;
    answer.witness = found.witness;
  } else if (found.inconclusive()) {
    answer.verdict = Verdict::inconclusive;
    answer.inconclusive.push_back("has_path_at_least(" + found.engine + ")");
  } else {
    answer.verdict = Verdict::no;
  }
}

std::optional<Path> any_shortest_path(const DirectedGraph& g, Vertex s, Vertex t) {
  return shortest_path(g, s, t);
}

std::optional<Path> any_shortest_path(const UndirectedGraph& g, Vertex s, Vertex t) {
  return shortest_path(symmetrize(g), s, t);
}

template <class Graph>
void trivial(const Graph& g, const DiameterInfo& info, LpadAnswer& answer) {
  const auto path = any_shortest_path(g, info.from, info.to);
  answer.verdict = Verdict::yes;
  answer.stage = "trivial-k0";
  answer.witness = PathWitness::validated(g, *path, "trivial-k0", info.diameter);
}

template <class Graph>
void rebase(const Graph& g, LpadAnswer& answer) {
  if (answer.witness) {
    answer.witness = PathWitness::validated(g, answer.witness->vertices, answer.stage,
                                            answer.diameter);
  }
}

LpadAnswer solve_directed_2sc(const DirectedGraph& g, int k, const LpadConfig& cfg) {
  std::string why;
  if (!is_2_strongly_connected(g, &why)) {
    throw LpadPreconditionError("graph is not 2-strongly-connected: " + why);
  }
  LpadAnswer answer;
  const auto info = diameter_and_pair(g);
  answer.diameter = info.diameter;
  if (k == 0) {
    trivial(g, info, answer);
    return answer;
  }
  if (k <= 4) {
    answer.builder = build_diam_plus4_path(g);
    if (answer.builder->built()) {
      answer.verdict = Verdict::yes;
      answer.stage = "builder";
      answer.witness = answer.builder->witness;
      return answer;
    }
    answer.notices.push_back("diam+4 builder failed at " + answer.builder->failed_at +
                             "; falling back to exact search");
  } else {
    answer.notices.push_back("k >= 5: NP-hard regime, exact search only");
  }
  exact_search(g, info.diameter + k, cfg, answer);
  rebase(g, answer);
  return answer;
}

template <class Graph>
LpadAnswer solve_oracle(const Graph& g, int k, const LpadConfig& cfg) {
  LpadAnswer answer;
  DiameterInfo info;
  try {
    info = diameter_and_pair(g);
  } catch (const NotStronglyConnected& e) {
    throw LpadPreconditionError(e.what());
  }
  answer.diameter = info.diameter;
  answer.notices.push_back("oracle mode: NP-hard regime, exact search only");
  if (k == 0) {
    trivial(g, info, answer);
    return answer;
  }
  const auto oracle = longest_path_oracle(g, cfg.subroutine.limits);
  answer.stage = "oracle";
  if (oracle.value >= info.diameter + k) {
    answer.verdict = Verdict::yes;
    answer.witness = PathWitness::validated(g, oracle.witness.vertices, "oracle", info.diameter);
  } else if (!oracle.exact) {
    answer.verdict = Verdict::inconclusive;
    answer.inconclusive.push_back("longest_path_oracle");
  } else {
    answer.verdict = Verdict::no;
  }
  return answer;
}

}  // namespace

BuilderOutcome build_diam_plus4_path(const DirectedGraph& g) {
  std::string why;
  if (!is_2_strongly_connected(g, &why)) {
    throw LpadPreconditionError("graph is not 2-strongly-connected: " + why);
  }
  return Builder(g).run();
}

LpadAnswer solve_lpad_undirected_2connected(const UndirectedGraph& g, int k,
                                            const LpadConfig& cfg) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  std::string why;
  if (!is_2_connected_undirected(g, &why)) {
    throw LpadPreconditionError("graph is not 2-connected: " + why);
  }
  LpadAnswer answer;
  const auto info = diameter_and_pair(g);
  const int d = info.diameter;
  answer.diameter = d;
  if (k == 0) {
    trivial(g, info, answer);
    return answer;
  }
  if (d <= k) {
    exact_search(symmetrize(g), d + k, cfg, answer);
    rebase(g, answer);
    return answer;
  }
  // A cycle through the diametral pair has length >= 2d >= d+k+1.
  auto pair = two_internally_disjoint_paths(g, info.from, info.to);
  if (!pair) throw std::logic_error("2-connected graph without two disjoint paths");
  std::vector<Vertex> cycle = pair->first.vertices;
  const auto& back = pair->second.vertices;
  cycle.insert(cycle.end(), back.rbegin() + 1, back.rend() - 1);
  cycle.resize(static_cast<std::size_t>(d + k + 1));
  answer.verdict = Verdict::yes;
  answer.stage = "cycle";
  answer.witness = PathWitness::validated(g, std::move(cycle), "cycle", d);
  return answer;
}

LpadAnswer solve_lpad(const LpadQuery& q, const LpadConfig& cfg) {
  if (q.k < 0) throw std::invalid_argument("k must be non-negative");
  const auto* dg = std::get_if<std::reference_wrapper<const DirectedGraph>>(&q.graph);
  const auto* ug = std::get_if<std::reference_wrapper<const UndirectedGraph>>(&q.graph);
  switch (q.mode) {
    case LpadMode::undirected2c:
      if (!ug) throw LpadPreconditionError("mode undirected2c needs an undirected graph");
      return solve_lpad_undirected_2connected(ug->get(), q.k, cfg);
    case LpadMode::directed2sc:
      if (!dg) throw LpadPreconditionError("mode directed2sc needs a directed graph");
      return solve_directed_2sc(dg->get(), q.k, cfg);
    case LpadMode::oracle:
      return dg ? solve_oracle(dg->get(), q.k, cfg) : solve_oracle(ug->get(), q.k, cfg);
  }
  throw std::invalid_argument("unknown mode");
}

}  // namespace agp
