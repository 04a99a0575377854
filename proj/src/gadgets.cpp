#include "agp/gadgets.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace agp {

namespace {

// Source gadget arcs as (i, j) over indices 0 = s, 1..14 = s_i.
constexpr std::pair<int, int> kSourceArcs[] = {
    // forward
    {0, 1}, {0, 9}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8},
    {9, 10}, {10, 11}, {11, 12}, {12, 13}, {13, 14},
    {9, 2}, {1, 10}, {4, 13}, {14, 7},
    // backward
    {2, 0}, {10, 0}, {2, 9}, {10, 1}, {3, 10}, {11, 2}, {6, 3}, {5, 4},
    {7, 5}, {8, 6}, {12, 11}, {13, 12},
};

// Hat gadget arcs over h1..h10.
constexpr std::pair<int, int> kHatArcs[] = {
    {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10},
    {5, 1}, {3, 9}, {10, 4}, {9, 5},
    {2, 8}, {8, 7}, {7, 6}, {6, 2},
};

std::vector<Vertex> build_path(const GadgetBlueprint& bp, bool first) {
  std::vector<Vertex> path{bp.s};
  const int top = first ? 8 : 14;
  for (int i = first ? 1 : 9; i <= top; ++i) path.push_back(bp.source[i]);
  for (int j = 1; j <= bp.hat_count(); ++j) {
    // Odd hats carry P1 on h1..h3 and P2 on h4..h10; even hats the reverse.
    const bool short_side = (j % 2 == 1) == first;
    if (short_side) {
      for (int i : {2, 3}) path.push_back(bp.hat(j, i));
    } else {
      for (int i = 5; i <= 10; ++i) path.push_back(bp.hat(j, i));
    }
  }
  for (int i = top - 1; i >= (first ? 1 : 9); --i) path.push_back(bp.sink[i]);
  path.push_back(bp.t);
  return path;
}

std::vector<Vertex> long_path(const GadgetBlueprint& bp) {
  std::vector<Vertex> path{bp.source[9], bp.source[10]};
  const auto p1 = gadget_path_p1(bp);
  path.insert(path.end(), p1.begin(), p1.end());
  path.push_back(bp.sink[10]);
  path.push_back(bp.sink[9]);
  return path;
}

std::vector<Vertex> h8_path(const GadgetBlueprint& bp) {
  const int m = bp.median_hat;
  const Vertex h1 = bp.hat(m, 1);
  // h1 of the median hat lies on P2 when ell is even and on P1 when odd;
  // the two-vertex lead-in comes from the other side of the source.
  const bool via_p1 = bp.ell % 2 == 1;
  std::vector<Vertex> path = via_p1 ? std::vector<Vertex>{bp.source[9], bp.source[10]}
                                    : std::vector<Vertex>{bp.source[1], bp.source[2]};
  for (Vertex x : via_p1 ? gadget_path_p1(bp) : gadget_path_p2(bp)) {
    path.push_back(x);
    if (x == h1) break;
  }
  // The two-arc detour from h3 to h10 outside the hat: through h5 of the next
  // hat, or through t7 when the median hat is the last one.
  const Vertex w = m < bp.hat_count() ? bp.hat(m + 1, 5) : bp.sink[7];
  for (Vertex x : {bp.hat(m, 2), bp.hat(m, 3), w, bp.hat(m, 10), bp.hat(m, 4), bp.hat(m, 5),
                   bp.hat(m, 6), bp.hat(m, 7), bp.hat(m, 8)}) {
    path.push_back(x);
  }
  return path;
}

void add(VerifyReport& r, std::string name, bool ok, std::string detail) {
  r.clauses.push_back({std::move(name), ok, std::move(detail)});
}

template <class Fn>
void add_checked(VerifyReport& r, const std::string& name, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    add(r, name, false, e.what());
  }
}

// Simple (a,b)-paths using only arcs of the hat j.
std::vector<std::vector<Vertex>> hat_paths(const DirectedGraph& g, const GadgetBlueprint& bp,
                                           int j, Vertex a, Vertex b) {
  std::vector<char> in_hat(g.vertex_count(), 0);
  for (int i = 1; i <= 10; ++i) in_hat[bp.hat(j, i)] = 1;
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path{a};
  std::vector<char> used(g.vertex_count(), 0);
  used[a] = 1;
  std::function<void(Vertex)> dfs = [&](Vertex x) {
    if (x == b) {
      out.push_back(path);
      return;
    }
    for (Vertex y : g.out(x)) {
      if (!in_hat[y] || used[y]) continue;
      used[y] = 1;
      path.push_back(y);
      dfs(y);
      path.pop_back();
      used[y] = 0;
    }
  };
  dfs(a);
  return out;
}

}  // namespace

GadgetGraph build_G_ell(int ell) {
  if (ell < 1) throw std::invalid_argument("G_ell needs ell >= 1");
  GadgetBlueprint bp;
  bp.ell = ell;
  bp.median_hat = ell;
  bp.source.fill(-1);
  bp.sink.fill(-1);
  bp.s = 0;
  for (int i = 1; i <= 14; ++i) bp.source[i] = i;
  bp.t = 15;
  for (int i = 1; i <= 14; ++i) bp.sink[i] = 15 + i;
  Vertex next = 30;
  const int hats = 2 * ell - 1;
  bp.hats.assign(static_cast<std::size_t>(hats) + 1, {});
  bp.hats[0].fill(-1);
  for (int j = 1; j <= hats; ++j) {
    auto& h = bp.hats[j];
    h.fill(-1);
    h[1] = j == 1 ? bp.source[8] : bp.hats[j - 1][10];
    h[4] = j == 1 ? bp.source[14] : bp.hats[j - 1][3];
    for (int i : {2, 5, 6, 7, 8, 9}) h[i] = next++;
    if (j < hats) {
      h[3] = next++;
      h[10] = next++;
    } else {
      h[3] = bp.sink[8];
      h[10] = bp.sink[14];
    }
  }
  std::vector<Arc> arcs;
  auto src = [&](int i) { return i == 0 ? bp.s : bp.source[i]; };
  auto snk = [&](int i) { return i == 0 ? bp.t : bp.sink[i]; };
  for (auto [a, b] : kSourceArcs) {
    arcs.push_back({src(a), src(b)});
    arcs.push_back({snk(b), snk(a)});
  }
  for (int j = 1; j <= hats; ++j) {
    for (auto [a, b] : kHatArcs) arcs.push_back({bp.hats[j][a], bp.hats[j][b]});
  }
  return {DirectedGraph::build(bp.vertex_count(), arcs), std::move(bp)};
}

std::vector<Vertex> gadget_path_p1(const GadgetBlueprint& bp) { return build_path(bp, true); }
std::vector<Vertex> gadget_path_p2(const GadgetBlueprint& bp) { return build_path(bp, false); }

PathWitness witness_long_path(const DirectedGraph& g, const GadgetBlueprint& bp) {
  return PathWitness::validated(g, long_path(bp), "gadget-long-path", 8 * bp.ell + 10);
}

PathWitness witness_long_path(const GadgetBlueprint& bp) {
  return witness_long_path(build_G_ell(bp.ell).graph, bp);
}

PathWitness witness_h8_path(const DirectedGraph& g, const GadgetBlueprint& bp) {
  return PathWitness::validated(g, h8_path(bp), "gadget-h8-path");
}

PathWitness witness_h8_path(const GadgetBlueprint& bp) {
  return witness_h8_path(build_G_ell(bp.ell).graph, bp);
}

bool VerifyReport::ok() const {
  return !clauses.empty() &&
         std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.passed; });
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : clauses) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  return out.str();
}

VerifyReport verify_G_ell(const DirectedGraph& g, const GadgetBlueprint& bp) {
  VerifyReport r;
  const int ell = bp.ell;
  const int d = 8 * ell + 10;
  const bool size_ok = g.vertex_count() == bp.vertex_count();
  add(r, "vertex-count", size_ok,
      std::to_string(g.vertex_count()) + " (expected " + std::to_string(16 * ell + 20) + ")");
  if (!size_ok) return r;
  add(r, "arc-count", g.arc_count() == static_cast<std::size_t>(32 * ell + 44),
      std::to_string(g.arc_count()) + " (expected " + std::to_string(32 * ell + 44) + ")");

  std::string why;
  const bool two_sc = is_2_strongly_connected(g, &why);
  add(r, "2-strongly-connected", two_sc, why);

  add_checked(r, "diameter", [&] {
    const auto info = diameter_and_pair(g);
    const int st = distances_from(g, bp.s)[bp.t];
    add(r, "diameter", info.diameter == d && st == d,
        "diam " + std::to_string(info.diameter) + ", dist(s,t) " + std::to_string(st) +
            " (expected " + std::to_string(d) + ")");
  });

  const int ts = distances_from(g, bp.t)[bp.s];
  add(r, "dist(t,s)", ts != kUnreachable && ts <= 4 * ell + 7,
      std::to_string(ts) + " (bound " + std::to_string(4 * ell + 7) + ")");

  bool degrees = true;
  std::string bad;
  for (int j = 1; j <= bp.hat_count(); ++j) {
    for (int i : {1, 4}) {
      const Vertex x = bp.hat(j, i);
      if (g.in(x).size() != 2 || g.out(x).size() != 2) {
        degrees = false;
        bad += " hat" + std::to_string(j) + ".h" + std::to_string(i);
      }
    }
  }
  add(r, "h1-h4-degrees", degrees, bad);

  bool unique = true;
  bad.clear();
  for (int j = 1; j <= bp.hat_count(); ++j) {
    const auto paths = hat_paths(g, bp, j, bp.hat(j, 4), bp.hat(j, 1));
    const std::vector<Vertex> expected{bp.hat(j, 4), bp.hat(j, 5), bp.hat(j, 1)};
    if (paths.size() != 1 || paths.front() != expected) {
      unique = false;
      bad += " hat" + std::to_string(j) + " has " + std::to_string(paths.size()) + " paths";
    }
  }
  add(r, "h4-h1-path", unique, bad);

  const auto p1 = gadget_path_p1(bp);
  const auto p2 = gadget_path_p2(bp);
  {
    std::vector<char> covered(g.vertex_count(), 0);
    for (Vertex x : p1) covered[x] = 1;
    for (Vertex x : p2) covered[x] = 1;
    const bool cover = std::all_of(covered.begin(), covered.end(), [](char c) { return c; });
    auto e1 = check_path(g, p1), e2 = check_path(g, p2);
    std::vector<Vertex> inner1(p1.begin() + 1, p1.end() - 1), inner2(p2.begin() + 1, p2.end() - 1);
    std::sort(inner1.begin(), inner1.end());
    std::sort(inner2.begin(), inner2.end());
    std::vector<Vertex> common;
    std::set_intersection(inner1.begin(), inner1.end(), inner2.begin(), inner2.end(),
                          std::back_inserter(common));
    const int l1 = static_cast<int>(p1.size()) - 1, l2 = static_cast<int>(p2.size()) - 1;
    add(r, "P1-P2-cover", !e1 && !e2 && cover && common.empty() && l1 == d && l2 == d,
        "lengths " + std::to_string(l1) + "/" + std::to_string(l2) +
            (e1 ? ", P1: " + *e1 : "") + (e2 ? ", P2: " + *e2 : "") +
            (common.empty() ? "" : ", shared inner vertices"));
  }

  {
    // Transpose symmetry: a_i <-> a_{d-i}, b_i <-> b_{d-i}.
    std::vector<Vertex> phi(g.vertex_count(), -1);
    for (int i = 0; i <= d; ++i) {
      phi[p1[i]] = p1[d - i];
      phi[p2[i]] = p2[d - i];
    }
    bool sym = true;
    for (const auto& a : g.arcs()) sym = sym && g.has_arc(phi[a.to], phi[a.from]);
    add(r, "transpose-symmetry", sym, "");
  }

  add_checked(r, "witness-long-path", [&] {
    const auto w = witness_long_path(g, bp);
    add(r, "witness-long-path", w.length() == d + 4,
        "length " + std::to_string(w.length()) + " (expected " + std::to_string(d + 4) + ")");
  });
  add_checked(r, "witness-h8-path", [&] {
    const auto w = witness_h8_path(g, bp);
    add(r, "witness-h8-path", w.length() == 4 * ell + 15 && w.back() == bp.hat(bp.median_hat, 8),
        "length " + std::to_string(w.length()) + " (expected " + std::to_string(4 * ell + 15) +
            ")");
  });
  return r;
}

// ---------------------------------------------------------------------------

std::string to_string(ReductionKind kind) {
  return kind == ReductionKind::k1_undirected ? "k1-undirected" : "kge5-2sc";
}

ReductionInstance reduce_k1(const UndirectedGraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw ReductionError("the undirected k=1 construction needs n >= 2");
  ReductionInstance r;
  r.kind = ReductionKind::k1_undirected;
  r.source = g;
  r.target_k = 1;
  r.claimed_diameter = 2 * n - 2;
  auto& e = r.embedding;
  for (Vertex v = 0; v < n; ++v) e.source_to_target.push_back(v);
  e.universal = n;
  // s = n+1 .. 2n-1 (next to u), then 2n (next to u) .. 3n-2 = t.
  for (Vertex v = n + 1; v <= 2 * n - 1; ++v) e.pendant_s.push_back(v);
  for (Vertex v = 2 * n; v <= 3 * n - 2; ++v) e.pendant_t.push_back(v);
  std::vector<Arc> edges = g.edges();
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, e.universal});
  for (std::size_t i = 0; i + 1 < e.pendant_s.size(); ++i) {
    edges.push_back({e.pendant_s[i], e.pendant_s[i + 1]});
  }
  edges.push_back({e.pendant_s.back(), e.universal});
  edges.push_back({e.universal, e.pendant_t.front()});
  for (std::size_t i = 0; i + 1 < e.pendant_t.size(); ++i) {
    edges.push_back({e.pendant_t[i], e.pendant_t[i + 1]});
  }
  r.undirected = UndirectedGraph::build(3 * n - 1, edges);
  r.graph = symmetrize(*r.undirected);
  return r;
}

int kge5_min_ell(int k) { return 17 + (k + 3) / 4; }

ReductionInstance reduce_kge5(const UndirectedGraph& h, Vertex w, int k) {
  if (k < 5) throw ReductionError("the 2-strongly-connected construction needs k >= 5");
  const int n = h.vertex_count();
  const int lmin = kge5_min_ell(k);
  const int smallest = 4 * lmin + (k - 5);
  const int rem = ((k - 5) % 4 + 4) % 4;
  if (n < smallest || (n - (k - 5)) % 4 != 0) {
    const int nearest = n <= smallest ? smallest : smallest + 4 * ((n - smallest + 2) / 4);
    throw ReductionError("need |V(H)| ≡ " + std::to_string(rem) + " (mod 4), ≥ " +
                         std::to_string(smallest) + "; got " + std::to_string(n) +
                         ", nearest admissible " + std::to_string(nearest));
  }
  std::string why;
  if (!is_2_connected_undirected(h, &why)) throw ReductionError("H is not 2-connected: " + why);
  if (w < 0 || w >= n) throw ReductionError("w out of range");
  const int ell = (n - (k - 5)) / 4;

  auto gadget = build_G_ell(ell);
  const auto& bp = gadget.blueprint;
  const int base = bp.vertex_count();
  ReductionInstance r;
  r.kind = ReductionKind::kge5_2sc;
  r.source = h;
  r.w = w;
  r.target_k = k;
  r.claimed_diameter = 8 * ell + 10;
  auto& e = r.embedding;
  for (Vertex v = 0; v < n; ++v) e.source_to_target.push_back(base + v);
  const Vertex other = w == 0 ? 1 : 0;
  e.connector = {-1, base + other, base + w, bp.hat(bp.median_hat, 6), bp.hat(bp.median_hat, 8)};
  e.blueprint = bp;

  std::vector<Arc> arcs = gadget.graph.arcs();
  for (const auto& edge : h.edges()) {
    arcs.push_back({base + edge.from, base + edge.to});
    arcs.push_back({base + edge.to, base + edge.from});
  }
  const auto& c = e.connector;
  for (auto [a, b] : {std::pair{3, 1}, {4, 2}, {1, 4}, {2, 3}}) arcs.push_back({c[a], c[b]});
  r.graph = DirectedGraph::build(base + n, arcs);
  return r;
}

std::vector<ReductionInstance> reduce_kge5_family(const UndirectedGraph& h, int k) {
  std::vector<ReductionInstance> out;
  for (Vertex w = 0; w < h.vertex_count(); ++w) out.push_back(reduce_kge5(h, w, k));
  return out;
}

PathWitness lift_ham_witness(const ReductionInstance& r, const std::vector<Vertex>& ham) {
  if (r.kind != ReductionKind::kge5_2sc || !r.embedding.blueprint) {
    throw std::invalid_argument("lifting needs a 2-strongly-connected reduction instance");
  }
  const int n = r.source.vertex_count();
  if (static_cast<int>(ham.size()) != n || ham.front() != r.w) {
    throw InvalidWitness("not a Hamiltonian path of H starting at w");
  }
  if (auto err = check_path(r.source, ham)) throw InvalidWitness("Hamiltonian path: " + *err);
  auto path = h8_path(*r.embedding.blueprint);
  for (Vertex v : ham) path.push_back(r.embedding.source_to_target[v]);
  return PathWitness::validated(r.graph, std::move(path), "lifted-hamiltonian-path",
                                r.claimed_diameter);
}

}  // namespace agp
