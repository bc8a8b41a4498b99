#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "bbgroups/bestvina_brady.hpp"
#include "bbgroups/io.hpp"

using namespace bbgroups;
using namespace support;

namespace {

ParseError::Kind kind_of(std::string const& text, std::size_t* line = nullptr, GraphFormat f = GraphFormat::edge_list) {
  try {
    parse_graph(text, f);
  } catch (ParseError const& e) {
    if (line) *line = e.line();
    return e.kind();
  }
  FAIL("no parse error for: " << text);
  return ParseError::Kind::empty_input;
}

std::multiset<Word> relator_set(GroupPresentation const& p) {
  std::multiset<Word> out;
  for (auto const& r : p.relators) out.insert(relator_normal_form(r));
  return out;
}

}  // namespace

TEST_CASE("header fixes the vertex order") {
  auto d = parse_graph("vertices: w u v\nu v\nv w\n");
  CHECK(d.header);
  CHECK(d.names == std::vector<std::string>{"w", "u", "v"});
  CHECK(d.graph.edge(0) == Edge{0, 2});  // w v
  CHECK(d.graph.label(1) == "u");
}

TEST_CASE("without a header vertices appear in first-use order") {
  auto d = parse_graph("# leading comment\n\nb a   # inline\r\na c\r\n");
  CHECK_FALSE(d.header);
  CHECK(d.names == std::vector<std::string>{"b", "a", "c"});
  CHECK(d.graph.edge_count() == 2);
}

TEST_CASE("parse errors carry a kind and a line") {
  std::size_t line = 0;
  CHECK(kind_of("", &line) == ParseError::Kind::empty_input);
  CHECK(kind_of("# nothing\n\n") == ParseError::Kind::empty_input);
  CHECK(kind_of("a b\nc c\n", &line) == ParseError::Kind::loop);
  CHECK(line == 2);
  CHECK(kind_of("a b\nb a\n", &line) == ParseError::Kind::duplicate_edge);
  CHECK(line == 2);
  CHECK(kind_of("a b c\n", &line) == ParseError::Kind::malformed_line);
  CHECK(line == 1);
  CHECK(kind_of("a\n") == ParseError::Kind::malformed_line);
  CHECK(kind_of("a-b c\n") == ParseError::Kind::bad_name);
  CHECK(kind_of("vertices: a b\n\na c\n", &line) == ParseError::Kind::unknown_vertex);
  CHECK(line == 3);
  CHECK(kind_of("vertices: a b a\n") == ParseError::Kind::duplicate_vertex);
  CHECK(kind_of("a b\nvertices: a b\n") == ParseError::Kind::malformed_line);
  try {
    parse_graph("x y\ny y\n");
  } catch (ParseError const& e) {
    CHECK(std::string(e.what()).rfind("line 2: ", 0) == 0);
  }
}

TEST_CASE("canonical emission round trips") {
  for (auto name : {"main_fig.graph", "example12.graph", "octahedron.graph", "square.graph"}) {
    auto g = fixture(name);
    auto text = emit_graph(g);
    auto back = parse_graph(text).graph;
    CHECK(same_edges(back, g));
    CHECK(emit_graph(back) == text);
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(back.label(v) == g.label(v));
  }
}

TEST_CASE("DOT subset") {
  auto d = read_graph_file(data_path("diamond.dot"), GraphFormat::dot);
  CHECK(d.graph.vertex_count() == 4);
  CHECK(d.graph.edge_count() == 5);
  auto s = parse_graph("strict graph G { /* c */ \"x1\" -- y -- z [color=red]; // tail\n x2; }", GraphFormat::dot);
  CHECK(s.names == std::vector<std::string>{"x1", "y", "z", "x2"});
  CHECK(s.graph.edge_count() == 2);
  CHECK(kind_of("digraph { a -> b }", nullptr, GraphFormat::dot) == ParseError::Kind::malformed_line);
  CHECK(kind_of("graph { a -- a }", nullptr, GraphFormat::dot) == ParseError::Kind::loop);
}

TEST_CASE("plain output for K3 and for a tree") {
  auto g = complete_graph(3);
  auto text = emit_presentation(papadima_suciu(g, first_spanning_tree(g), Verdict::yes), PresentationFormat::plain);
  CHECK(text.find("gens: e1, e2\n") != std::string::npos);
  CHECK(text.find("[e1,e2]") != std::string::npos);
  CHECK(text.find("# hypothesis: yes") != std::string::npos);

  auto p = path_graph(4);
  auto free = emit_presentation(papadima_suciu(p, first_spanning_tree(p)), PresentationFormat::plain);
  CHECK(free.substr(free.size() - 6) == "rels:\n");
  CHECK(free.find("unknown") != std::string::npos);
}

TEST_CASE("word formatting") {
  GroupPresentation p;
  p.generators = {{"a", {}}, {"b", {}}};
  CHECK(format_word(Word{}, p) == "1");
  CHECK(format_word(Word{{0, 1}, {0, 1}, {1, -1}}, p) == "a^2*b^-1");
  CHECK(format_relator(Word::commutator(Word::generator(0), Word::generator(1)), p) == "[a,b]");
}

TEST_CASE("every rendering parses back to the same relators") {
  std::mt19937 rng(51);
  for (int round = 0; round < 30; ++round) {
    auto g = random_connected_graph(4 + round % 4, 0.5, rng);
    for (auto const& p : {papadima_suciu(g, first_spanning_tree(g)), dicks_leary(g)}) {
      auto want = relator_set(p);
      auto plain = parse_plain_presentation(emit_presentation(p, PresentationFormat::plain, &g));
      auto cas = parse_cas_presentation(emit_presentation(p, PresentationFormat::cas, &g));
      auto json = presentation_from_json(nlohmann::json::parse(emit_presentation(p, PresentationFormat::json, &g)));
      for (auto const* q : {&plain, &cas, &json}) {
        CHECK(q->generator_count() == p.generator_count());
        CHECK(relator_set(*q) == want);
        CHECK(q->kind == p.kind);
      }
    }
  }
}

TEST_CASE("JSON relators are signed one-based indices") {
  auto g = complete_graph(3);
  auto j = presentation_to_json(papadima_suciu(g, first_spanning_tree(g)), &g);
  CHECK(j["generators"][0]["name"] == "e1");
  CHECK(j["generators"][0]["edge"] == nlohmann::json::array({"0", "1"}));
  auto r = j["relators"][0].get<std::vector<int>>();
  CHECK(r.size() == 4);
  for (int x : r) CHECK((x != 0 && std::abs(x) <= 2));
}

TEST_CASE("cas output names the free group") {
  auto g = complete_graph(3);
  auto text = emit_presentation(papadima_suciu(g, first_spanning_tree(g)), PresentationFormat::cas);
  CHECK(text.find("F := FreeGroup(\"e1\", \"e2\");;") != std::string::npos);
  CHECK(text.find("G := F / [") != std::string::npos);
  GroupPresentation none;
  CHECK(emit_presentation(none, PresentationFormat::cas).find("FreeGroup(0)") != std::string::npos);
}

TEST_CASE("tree overrides") {
  auto g = fixture("main_fig.graph");
  auto a = parse_tree_override("v1-v2, v2-v4,v2-v3,v5-v4,v4-v6", g);
  CHECK(a == tree_of(g, main_tree()));
  auto b = parse_tree_override(edge_names(a.edges(), g), g);
  CHECK(a == b);
  CHECK_THROWS_AS(parse_tree_override("v1-v2,v2-v4", g), PreconditionError);
  CHECK_THROWS_AS(parse_tree_override("e99,e1,e2,e3,e4", g), PreconditionError);
  CHECK_THROWS_AS(parse_tree_override("v1-v6,e1,e2,e3,e4", g), PreconditionError);
}

TEST_CASE("output is deterministic") {
  auto g = fixture("example12.graph");
  auto x = emit_presentation(papadima_suciu(g, first_spanning_tree(g)), PresentationFormat::json, &g);
  auto y = emit_presentation(papadima_suciu(g, first_spanning_tree(g)), PresentationFormat::json, &g);
  CHECK(x == y);
  CHECK(family_to_json(in_family_g(g), g).dump() == family_to_json(in_family_g(g), g).dump());
}
