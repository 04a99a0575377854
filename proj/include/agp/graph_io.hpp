#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"

#include "agp/gadgets.hpp"
#include "agp/graph.hpp"

namespace agp::io {

/// Plain-text graph file:
///   c comment
///   p dg <n> <m>     (or "p ug")
///   a <u> <v>        (or "e <u> <v>" for ug), 1-indexed, m lines
struct GraphFile {
  std::variant<DirectedGraph, UndirectedGraph> graph;

  bool directed() const { return std::holds_alternative<DirectedGraph>(graph); }
  const DirectedGraph& digraph() const { return std::get<DirectedGraph>(graph); }
  const UndirectedGraph& ugraph() const { return std::get<UndirectedGraph>(graph); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

GraphFile parse_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);

std::string format_graph(const DirectedGraph& g, const std::string& comment = "");
std::string format_graph(const UndirectedGraph& g, const std::string& comment = "");
void write_text_file(const std::string& path, const std::string& text);

// Documents. Vertex ids are 1-indexed in every document.
nlohmann::ordered_json blueprint_to_json(const GadgetBlueprint& bp);
GadgetBlueprint blueprint_from_json(const nlohmann::json& j);
nlohmann::ordered_json embedding_to_json(const ReductionInstance& r);

struct WitnessDocument {
  bool found = false;
  int length = 0;
  std::string baseline_kind;  // "dist" or "diameter"
  std::optional<int> baseline;
  std::vector<Vertex> path;  // 0-indexed; written 1-indexed
  std::string stage;
  std::string verdict;       // yes / no / inconclusive
  std::string verdict_meta;  // exact / randomized(delta=...) / inconclusive
  std::vector<std::string> notes;

  nlohmann::ordered_json to_json() const;
};

}  // namespace agp::io
