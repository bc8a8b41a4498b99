#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bbgroups/classify.hpp"
#include "bbgroups/complex.hpp"
#include "bbgroups/decompose.hpp"
#include "bbgroups/graph.hpp"
#include "bbgroups/presentation.hpp"

namespace bbgroups {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { empty_input, malformed_line, bad_name, loop, duplicate_edge, unknown_vertex, duplicate_vertex };

  ParseError(Kind kind, std::size_t line, std::string const& message);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }  // 1-based, 0 when not tied to a line

 private:
  Kind kind_;
  std::size_t line_;
};

char const* to_string(ParseError::Kind k);

enum class GraphFormat { edge_list, dot };

struct GraphDocument {
  std::string source;
  SimplicialGraph graph;
  std::vector<std::string> names;  // vertex i is names[i]
  bool header = false;             // order fixed by a `vertices:` line
};

// Edge-list grammar: an optional first line `vertices: <name>+`, then one
// `<name> <name>` edge per line. Blank lines and `#` lines are skipped, CRLF
// is accepted. Without a header vertices are ordered by first appearance.
GraphDocument parse_graph(std::string_view text, GraphFormat format = GraphFormat::edge_list,
                          std::string source = "<input>");

// Reads a file; throws std::runtime_error if it cannot be opened.
GraphDocument read_graph_file(std::string const& path, GraphFormat format = GraphFormat::edge_list);

// Canonical edge-list form: header with every vertex, edges in edge order.
std::string emit_graph(SimplicialGraph const& g);

enum class PresentationFormat { plain, cas, json };

std::optional<PresentationFormat> presentation_format_from_string(std::string_view s);

// "e2^-1*e3"; "1" for the empty word.
std::string format_word(Word const& w, GroupPresentation const& p);
// Commutators print as [A,B].
std::string format_relator(Word const& w, GroupPresentation const& p);

// `g` supplies vertex labels for generator sources in JSON output.
std::string emit_presentation(GroupPresentation const& p, PresentationFormat format,
                              SimplicialGraph const* g = nullptr);

nlohmann::json presentation_to_json(GroupPresentation const& p, SimplicialGraph const* g = nullptr);

// Readers for the plain and cas renderings. Generator sources are not
// recovered; kind and hypothesis come from comment lines when present.
GroupPresentation parse_plain_presentation(std::string_view text);
GroupPresentation parse_cas_presentation(std::string_view text);
GroupPresentation presentation_from_json(nlohmann::json const& j);

nlohmann::json simply_connected_to_json(SimplyConnectedVerdict const& v, SimplicialGraph const& g);
nlohmann::json family_to_json(FamilyVerdict const& v, SimplicialGraph const& g);
nlohmann::json decomposition_to_json(DecompositionTree const& d, SimplicialGraph const& g);
nlohmann::json raag_witness_to_json(RaagWitness const& w, SimplicialGraph const& g);

// "e1, e5, e7" style list of edge generator names.
std::string edge_names(std::vector<Edge> const& edges, SimplicialGraph const& g);

// Tree override: comma-separated items, each an edge generator name `e<k>` or
// a vertex pair `u-v`. Throws PreconditionError on unknown items or when the
// edges do not form a spanning tree.
SpanningTree parse_tree_override(std::string_view text, SimplicialGraph const& g);

}  // namespace bbgroups
