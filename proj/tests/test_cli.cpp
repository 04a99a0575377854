#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "agp/graph_io.hpp"
#include "brute_force.hpp"
#include "cli.hpp"
#include "json.hpp"

using namespace agp;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  fs::create_directories(AGP_TEST_TMP);
  return (fs::path(AGP_TEST_TMP) / name).string();
}

std::string write(const std::string& name, const std::string& text) {
  const auto path = tmp(name);
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// s=1 reaches t=2 directly through 3, and through 4,5,6,7.
const char* kParallel =
    "c two parallel paths\n"
    "p dg 7 7\n"
    "a 1 3\na 3 2\n"
    "a 1 4\na 4 5\na 5 6\na 6 7\na 7 2\n";

std::string cycle_file(int n, const char* kind) {
  std::ostringstream s;
  s << "p " << kind << ' ' << n << ' ' << n << '\n';
  for (int i = 1; i <= n; ++i) s << (kind[0] == 'u' ? 'e' : 'a') << ' ' << i << ' ' << i % n + 1 << '\n';
  return s.str();
}

void check_witness_against_file(const std::string& json_text, const std::string& graph_path) {
  const auto j = nlohmann::json::parse(json_text);
  REQUIRE(j["found"].get<bool>());
  std::vector<Vertex> path;
  for (int v : j["path"]) path.push_back(v - 1);
  const auto file = io::read_graph_file(graph_path);
  if (file.directed()) {
    CHECK_FALSE(check_path(file.digraph(), path).has_value());
  } else {
    CHECK_FALSE(check_path(file.ugraph(), path).has_value());
  }
  CHECK(j["length"].get<int>() == static_cast<int>(path.size()) - 1);
}

}  // namespace

TEST_CASE("cli detour exit codes") {
  const auto g = write("parallel.dg", kParallel);
  {
    const auto parsed = io::read_graph_file(g);
    const auto lengths = brute::st_path_lengths(parsed.digraph(), 0, 1);
    CHECK(lengths == std::set<int>{2, 5});
  }
  auto yes = run({"detour", "--graph", g, "--source", "1", "--target", "2", "--k", "3"});
  CHECK(yes.code == 0);
  const auto j = nlohmann::json::parse(yes.out);
  CHECK(j["length"] == 5);
  CHECK(j["verdict"] == "yes");
  CHECK(j["verdictMeta"] == "exact");
  CHECK(j["baseline"]["kind"] == "dist");
  CHECK(j["baseline"]["value"] == 2);
  check_witness_against_file(yes.out, g);

  auto no = run({"detour", "--graph", g, "--source", "1", "--target", "2", "--k", "4"});
  CHECK(no.code == 1);
  CHECK(nlohmann::json::parse(no.out)["found"] == false);

  CHECK(run({"detour", "--graph", g, "--source", "1", "--target", "1", "--k", "1"}).code == 2);
  CHECK(run({"detour", "--graph", g, "--source", "1", "--target", "9", "--k", "1"}).code == 2);
  CHECK(run({"detour", "--graph", g, "--source", "1", "--target", "2", "--k", "1", "--undirected"}).code == 2);
  CHECK(run({"detour", "--graph", g, "--source", "1", "--target", "2", "--k", "1", "--backend", "nope"}).code == 2);
  CHECK(run({"detour", "--graph", g, "--source", "1", "--target", "2", "--k", "1", "--strategy", "nope"}).code == 2);
  CHECK(run({"detour", "--graph", g, "--source", "1"}).code == 2);
  CHECK(run({"detour", "--graph", tmp("missing.dg"), "--source", "1", "--target", "2", "--k", "1"}).code == 2);
}

TEST_CASE("cli detour strategies and undirected files") {
  const auto g = write("parallel2.dg", kParallel);
  for (const char* strat : {"auto", "subset-dp", "bnb", "color-coding"}) {
    auto r = run({"detour", "--graph", g, "--source", "1", "--target", "2", "--k", "3",
                  "--strategy", strat, "--seed", "7", "--threads", "2"});
    CHECK(r.code == 0);
    check_witness_against_file(r.out, g);
  }
  auto cc_no = run({"detour", "--graph", g, "--source", "1", "--target", "2", "--k", "4",
                    "--strategy", "color-coding"});
  CHECK(cc_no.code == 1);
  CHECK(nlohmann::json::parse(cc_no.out)["verdictMeta"].get<std::string>().rfind("randomized(", 0) == 0);

  const auto c8 = write("c8.ug", cycle_file(8, "ug"));
  auto u = run({"detour", "--graph", c8, "--source", "1", "--target", "2", "--k", "5", "--undirected"});
  CHECK(u.code == 0);
  CHECK(nlohmann::json::parse(u.out)["length"] == 7);
  check_witness_against_file(u.out, c8);
  CHECK(run({"detour", "--graph", c8, "--source", "1", "--target", "2", "--k", "7"}).code == 1);
}

TEST_CASE("cli parse errors name the line") {
  const auto bad = write("bad.dg", "p dg 3 2\na 1 2\na 1 7\n");
  auto r = run({"detour", "--graph", bad, "--source", "1", "--target", "2", "--k", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("cli lpad") {
  const auto c10 = write("c10.ug", cycle_file(10, "ug"));
  auto r = run({"lpad", "--graph", c10, "--k", "3", "--mode", "undirected2c"});
  CHECK(r.code == 0);
  check_witness_against_file(r.out, c10);
  CHECK(nlohmann::json::parse(r.out)["baseline"]["value"] == 5);

  const auto g1 = tmp("g1.dg");
  REQUIRE(run({"gen", "gl", "--ell", "1", "-o", g1}).code == 0);
  auto big = run({"lpad", "--graph", g1, "--k", "4", "--mode", "directed2sc"});
  CHECK(big.code == 0);
  CHECK(nlohmann::json::parse(big.out)["length"].get<int>() >= 22);
  check_witness_against_file(big.out, g1);

  const auto path = write("path.ug", "p ug 4 3\ne 1 2\ne 2 3\ne 3 4\n");
  CHECK(run({"lpad", "--graph", path, "--k", "1", "--mode", "undirected2c"}).code == 2);
  CHECK(run({"lpad", "--graph", c10, "--k", "1", "--mode", "directed2sc"}).code == 2);
  CHECK(run({"lpad", "--graph", c10, "--k", "1", "--mode", "sideways"}).code == 2);
  const auto dc = write("c5.dg", cycle_file(5, "dg"));
  CHECK(run({"lpad", "--graph", dc, "--k", "1", "--mode", "directed2sc"}).code == 2);
  // C10: diameter 5, longest path 9.
  CHECK(run({"lpad", "--graph", c10, "--k", "4", "--mode", "oracle"}).code == 0);
  CHECK(run({"lpad", "--graph", c10, "--k", "5", "--mode", "oracle"}).code == 1);
}

TEST_CASE("cli gen writes deterministic files") {
  const auto a = tmp("gl1a.dg"), b = tmp("gl1b.dg"), bp = tmp("gl1.json");
  REQUIRE(run({"gen", "gl", "--ell", "1", "-o", a, "--blueprint", bp}).code == 0);
  REQUIRE(run({"gen", "gl", "--ell", "1", "-o", b}).code == 0);
  const auto text = slurp(a);
  CHECK(text.find("p dg 36 76\n") != std::string::npos);
  CHECK(text == slurp(b));
  CHECK(nlohmann::json::parse(slurp(bp))["ell"] == 1);
  CHECK(run({"gen", "gl", "--ell", "0", "-o", a}).code == 2);

  const auto k3 = write("k3.ug", "p ug 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  const auto red = tmp("k3red.ug"), emb = tmp("k3red.json");
  REQUIRE(run({"gen", "reduce-k1", "--graph", k3, "-o", red, "--blueprint", emb}).code == 0);
  CHECK(slurp(red).find("p ug 8 ") != std::string::npos);
  CHECK(nlohmann::json::parse(slurp(emb))["kind"] == "k1-undirected");

  const auto c75 = write("c75.ug", cycle_file(75, "ug"));
  auto bad = run({"gen", "reduce-kge5", "--graph", c75, "--k", "5", "--w", "1", "-o", tmp("x.dg")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("need |V(H)| ≡ 0 (mod 4), ≥ 76") != std::string::npos);

  const auto c76 = write("c76.ug", cycle_file(76, "ug"));
  const auto out = tmp("c76red.dg"), out2 = tmp("c76red2.dg");
  REQUIRE(run({"gen", "reduce-kge5", "--graph", c76, "--k", "5", "--w", "3", "-o", out,
               "--blueprint", tmp("c76red.json")}).code == 0);
  REQUIRE(run({"gen", "reduce-kge5", "--graph", c76, "--k", "5", "--w", "3", "-o", out2}).code == 0);
  CHECK(slurp(out).find("p dg 400 ") != std::string::npos);
  CHECK(slurp(out) == slurp(out2));
  const auto emb5 = nlohmann::json::parse(slurp(tmp("c76red.json")));
  CHECK(emb5["w"] == 3);
  CHECK(emb5["claimed_diameter"] == 162);
}

TEST_CASE("cli verify and oracle") {
  const auto g2 = tmp("g2.dg"), bp = tmp("g2.json");
  REQUIRE(run({"gen", "gl", "--ell", "2", "-o", g2, "--blueprint", bp}).code == 0);
  auto v = run({"verify", "gl", "--graph", g2, "--blueprint", bp});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(v.out.find("PASS diameter") != std::string::npos);

  // Same blueprint against a graph missing one arc.
  auto text = slurp(g2);
  const auto pos = text.find("\na ");
  const auto end = text.find('\n', pos + 1);
  text.erase(pos, end - pos);
  const auto count = text.find(" 108\n");
  REQUIRE(count != std::string::npos);
  text.replace(count, 5, " 107\n");
  const auto cut = write("g2cut.dg", text);
  auto vf = run({"verify", "gl", "--graph", cut, "--blueprint", bp});
  CHECK(vf.code == 1);
  CHECK(vf.out.find("FAIL") != std::string::npos);

  const auto g1 = tmp("g1b.dg");
  REQUIRE(run({"gen", "gl", "--ell", "1", "-o", g1}).code == 0);
  CHECK(run({"verify", "gl", "--graph", g1, "--blueprint", bp}).code == 2);

  auto d = run({"oracle", "diameter", "--graph", g2});
  CHECK(d.code == 0);
  CHECK(nlohmann::json::parse(d.out)["diameter"] == 26);

  const auto par = write("parallel3.dg", kParallel);
  auto lp = run({"oracle", "longest-st-path", "--graph", par, "--source", "1", "--target", "2"});
  CHECK(lp.code == 0);
  CHECK(nlohmann::json::parse(lp.out)["value"] == 5);
  auto det = run({"oracle", "detour", "--graph", par, "--source", "1", "--target", "2"});
  CHECK(nlohmann::json::parse(det.out)["k_star"] == 3);
  auto unreachable = run({"oracle", "detour", "--graph", par, "--source", "2", "--target", "1"});
  CHECK(unreachable.code == 1);
  auto whole = run({"oracle", "longest-path", "--graph", par});
  CHECK(nlohmann::json::parse(whole.out)["value"] == 5);
}

TEST_CASE("cli bench and usage") {
  auto b = run({"bench", "--suite", "gadgets", "--audit-log", tmp("audit.log")});
  CHECK(b.code == 0);
  CHECK(b.out.find("suite gadgets: PASS") != std::string::npos);
  CHECK(run({"bench", "--suite", "nope"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
