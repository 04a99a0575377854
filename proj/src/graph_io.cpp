#include "agp/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace agp::io {

namespace {

long parse_int(const std::string& token, int line, const char* what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + token + "'");
  }
  return v;
}

}  // namespace

GraphFile parse_graph(std::istream& in) {
  std::string text;
  int line_no = 0;
  bool have_header = false;
  bool directed = true;
  long n = 0, m = 0;
  std::vector<Arc> arcs;
  while (std::getline(in, text)) {
    ++line_no;
    std::istringstream ls(text);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    std::vector<std::string> fields;
    for (std::string f; ls >> f;) fields.push_back(f);
    if (tag == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (fields.size() != 3) throw ParseError(line_no, "header must be 'p dg|ug <n> <m>'");
      if (fields[0] != "dg" && fields[0] != "ug") {
        throw ParseError(line_no, "unknown graph kind '" + fields[0] + "' (expected dg or ug)");
      }
      directed = fields[0] == "dg";
      n = parse_int(fields[1], line_no, "vertex count");
      m = parse_int(fields[2], line_no, "edge count");
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count");
      have_header = true;
      continue;
    }
    if (tag != "a" && tag != "e") throw ParseError(line_no, "unknown line type '" + tag + "'");
    if (!have_header) throw ParseError(line_no, "edge before header");
    if ((tag == "a") != directed) {
      throw ParseError(line_no, directed ? "dg files use 'a' lines" : "ug files use 'e' lines");
    }
    if (fields.size() != 2) throw ParseError(line_no, "expected two endpoints");
    const long u = parse_int(fields[0], line_no, "endpoint");
    const long v = parse_int(fields[1], line_no, "endpoint");
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(line_no, "endpoint out of range [1," + std::to_string(n) + "]");
    }
    if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
    arcs.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
  }
  if (!have_header) throw ParseError(line_no, "missing 'p' header");
  if (static_cast<long>(arcs.size()) != m) {
    throw ParseError(line_no, "header announces " + std::to_string(m) + " lines, found " +
                                  std::to_string(arcs.size()));
  }
  if (directed) return {DirectedGraph::build(static_cast<int>(n), arcs)};
  return {UndirectedGraph::build(static_cast<int>(n), arcs)};
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_graph(in);
}

namespace {

template <class Graph>
std::string format(const Graph& g, const char* kind, char tag, const std::vector<Arc>& arcs,
                   const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p " << kind << ' ' << g.vertex_count() << ' ' << arcs.size() << '\n';
  for (const auto& a : arcs) out << tag << ' ' << a.from + 1 << ' ' << a.to + 1 << '\n';
  return out.str();
}

std::vector<int> one_based(const std::vector<Vertex>& xs) {
  std::vector<int> out;
  for (Vertex x : xs) out.push_back(x + 1);
  return out;
}

}  // namespace

std::string format_graph(const DirectedGraph& g, const std::string& comment) {
  return format(g, "dg", 'a', g.arcs(), comment);
}

std::string format_graph(const UndirectedGraph& g, const std::string& comment) {
  return format(g, "ug", 'e', g.edges(), comment);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

nlohmann::ordered_json blueprint_to_json(const GadgetBlueprint& bp) {
  nlohmann::ordered_json j;
  j["ell"] = bp.ell;
  j["s"] = bp.s + 1;
  j["t"] = bp.t + 1;
  std::vector<int> source, sink;
  for (int i = 1; i <= 14; ++i) {
    source.push_back(bp.source[i] + 1);
    sink.push_back(bp.sink[i] + 1);
  }
  j["source"] = source;  // s1..s14
  j["sink"] = sink;      // t1..t14
  auto hats = nlohmann::ordered_json::array();
  for (int h = 1; h <= bp.hat_count(); ++h) {
    std::vector<int> roles;
    for (int i = 1; i <= 10; ++i) roles.push_back(bp.hat(h, i) + 1);
    hats.push_back(roles);  // h1..h10
  }
  j["hats"] = hats;
  j["median_hat"] = bp.median_hat;
  return j;
}

GadgetBlueprint blueprint_from_json(const nlohmann::json& j) {
  GadgetBlueprint bp;
  try {
    bp.ell = j.at("ell").get<int>();
    if (bp.ell < 1) throw std::invalid_argument("ell must be positive");
    bp.s = j.at("s").get<int>() - 1;
    bp.t = j.at("t").get<int>() - 1;
    bp.source.fill(-1);
    bp.sink.fill(-1);
    const auto source = j.at("source").get<std::vector<int>>();
    const auto sink = j.at("sink").get<std::vector<int>>();
    if (source.size() != 14 || sink.size() != 14) {
      throw std::invalid_argument("source and sink need 14 roles each");
    }
    for (int i = 1; i <= 14; ++i) {
      bp.source[i] = source[i - 1] - 1;
      bp.sink[i] = sink[i - 1] - 1;
    }
    const auto hats = j.at("hats").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(hats.size()) != bp.hat_count()) {
      throw std::invalid_argument("expected " + std::to_string(bp.hat_count()) + " hats");
    }
    bp.hats.assign(hats.size() + 1, {});
    bp.hats[0].fill(-1);
    for (std::size_t h = 0; h < hats.size(); ++h) {
      if (hats[h].size() != 10) throw std::invalid_argument("every hat needs 10 roles");
      bp.hats[h + 1].fill(-1);
      for (int i = 1; i <= 10; ++i) bp.hats[h + 1][i] = hats[h][i - 1] - 1;
    }
    bp.median_hat = j.at("median_hat").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad blueprint: ") + e.what());
  }
  const int n = bp.vertex_count();
  auto check = [&](Vertex v) {
    if (v < 0 || v >= n) throw std::invalid_argument("blueprint vertex out of range");
  };
  check(bp.s);
  check(bp.t);
  for (int i = 1; i <= 14; ++i) {
    check(bp.source[i]);
    check(bp.sink[i]);
  }
  for (int h = 1; h <= bp.hat_count(); ++h) {
    for (int i = 1; i <= 10; ++i) check(bp.hat(h, i));
  }
  if (bp.median_hat < 1 || bp.median_hat > bp.hat_count()) {
    throw std::invalid_argument("median hat out of range");
  }
  return bp;
}

nlohmann::ordered_json embedding_to_json(const ReductionInstance& r) {
  nlohmann::ordered_json j;
  const auto& e = r.embedding;
  j["kind"] = to_string(r.kind);
  j["target_k"] = r.target_k;
  j["claimed_diameter"] = r.claimed_diameter;
  j["source_vertices"] = r.source.vertex_count();
  j["source_to_target"] = one_based(e.source_to_target);
  if (r.kind == ReductionKind::k1_undirected) {
    j["universal"] = e.universal + 1;
    j["s"] = e.pendant_s.front() + 1;
    j["t"] = e.pendant_t.back() + 1;
    j["pendant_s"] = one_based(e.pendant_s);
    j["pendant_t"] = one_based(e.pendant_t);
  } else {
    j["w"] = r.w + 1;
    j["connector"] = {{"c1", e.connector[1] + 1},
                      {"c2", e.connector[2] + 1},
                      {"c3", e.connector[3] + 1},
                      {"c4", e.connector[4] + 1}};
    j["blueprint"] = blueprint_to_json(*e.blueprint);
  }
  return j;
}

nlohmann::ordered_json WitnessDocument::to_json() const {
  nlohmann::ordered_json j;
  j["found"] = found;
  j["verdict"] = verdict;
  j["length"] = length;
  if (baseline) {
    j["baseline"] = {{"kind", baseline_kind}, {"value", *baseline}};
  } else {
    j["baseline"] = nullptr;
  }
  j["path"] = one_based(path);
  j["stage"] = stage;
  j["verdictMeta"] = verdict_meta;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

}  // namespace agp::io
