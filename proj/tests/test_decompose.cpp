#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "bbgroups/bestvina_brady.hpp"
#include "bbgroups/decompose.hpp"

using namespace bbgroups;
using namespace support;

namespace {

SimplicialGraph induced_on(SimplicialGraph const& g, std::vector<std::string> const& drop) {
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (std::find(drop.begin(), drop.end(), g.label(v)) == drop.end()) keep.push_back(v);
  return induced_subgraph(g, keep).graph;
}

}  // namespace

TEST_CASE("chang graph of a cone with the star tree is the base") {
  auto cone = join(empty_graph(1), path_graph(4));
  auto star = SpanningTree::make(cone, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto w = chang_raag(cone, star);
  CHECK(oracle::isomorphic(w.gamma_prime, path_graph(4)));
  CHECK(chang_round_trip(cone, star, w));
}

TEST_CASE("chang graph of K4 with a star tree is K3") {
  auto g = complete_graph(4);
  auto w = chang_raag(g, first_spanning_tree(g));
  CHECK(oracle::isomorphic(w.gamma_prime, complete_graph(3)));
  CHECK(chang_round_trip(g, first_spanning_tree(g), w));
}

TEST_CASE("favourable figure with its drawn tree gives a path") {
  auto g = fixture("favourable.graph");
  auto t = tree_of(g, {{"v1", "v4"}, {"v4", "v2"}, {"v2", "v5"}, {"v5", "v3"}, {"v3", "v6"}});
  CHECK(count_unfavourable(g, t).unfavourable == 0);
  auto w = chang_raag(g, t);
  CHECK(oracle::isomorphic(w.gamma_prime, path_graph(5)));
  CHECK(chang_round_trip(g, t, w));
  CHECK(w.generator_map == t.edges());
  CHECK(w.gamma_prime.label(0) == edge_generator_name(*g.edge_index(t.edges()[0])));
}

TEST_CASE("an unfavourable tree is refused") {
  auto g = fixture("main_fig.graph");
  CHECK_THROWS_AS(chang_raag(g, tree_of(g, main_tree())), PreconditionError);
}

TEST_CASE("a tree-free triangle can break the relator round trip") {
  // (v2,v4,v5) has no tree edge here and leaves a commutator of tree paths
  // that the edges of Γ' do not give; Γ' comes out disconnected
  auto g = fixture("favourable.graph");
  auto t = tree_of(g, {{"v1", "v4"}, {"v1", "v2"}, {"v2", "v3"}, {"v5", "v3"}, {"v3", "v6"}});
  REQUIRE(count_unfavourable(g, t).unfavourable == 0);
  auto w = chang_raag(g, t);
  CHECK_FALSE(w.gamma_prime.is_connected());
  CHECK_FALSE(chang_round_trip(g, t, w));
  // the abelianizations still agree
  CHECK(abelianization(raag_presentation(w.gamma_prime)) == abelianization(papadima_suciu(g, t)));
  auto good = find_chang_tree(g);
  REQUIRE(good);
  CHECK(chang_round_trip(g, *good, chang_raag(g, *good)));
}

TEST_CASE("peeling the unfavourable triangle of the six-vertex figure") {
  auto g = fixture("main_fig.graph");
  auto t = tree_of(g, main_tree());
  auto p = peel_once(g, t, triangle_of(g, "v1", "v2", "v5"));
  CHECK(p.complement.graph.vertex_count() == 5);
  CHECK(same_edges(p.complement.graph, induced_on(g, {"v1"})));
  CHECK(p.tree_edge == edge_of(g, "v1", "v2"));
  CHECK(p.shared_edge == edge_of(g, "v2", "v5"));
  CHECK(p.z2.kind == PresentationKind::z_squared);
  CHECK(p.z2.relators.size() == 1);
  CHECK(abelianization(p.z2).free_rank == 2);

  // restricted tree is the drawn {e2..e5} and makes the complement favourable
  CHECK(p.restricted_tree.edges().size() == 4);
  CHECK(count_unfavourable(p.complement.graph, p.restricted_tree).unfavourable == 0);

  // f = e2 e4^-1 as a path through the tree
  auto const& h = p.complement.graph;
  auto sub_edge = [&](char const* a, char const* b) {
    return static_cast<std::uint32_t>(*h.edge_index(make_edge(*h.find_label(a), *h.find_label(b))));
  };
  CHECK(p.word_left == Word{{sub_edge("v2", "v4"), 1}, {sub_edge("v5", "v4"), -1}});
}

TEST_CASE("peel refuses bad triangles") {
  auto g = fixture("main_fig.graph");
  auto t = tree_of(g, main_tree());
  CHECK_THROWS_AS(peel_once(g, t, triangle_of(g, "v2", "v3", "v4")), PreconditionError);  // favourable
  CHECK_THROWS_AS(peel_once(g, t, Triangle{0, 2, 5}), PreconditionError);               // not a triangle
  auto o = fixture("octahedron.graph");
  auto ot = first_spanning_tree(o);
  for (auto r : classify_triangles(o, ot))
    if (!r.favourable) CHECK_THROWS_AS(peel_once(o, ot, r.triangle), PreconditionError);
}

TEST_CASE("one peel for the six-vertex figure") {
  auto g = fixture("main_fig.graph");
  auto d = iterated_decomposition(g, tree_of(g, main_tree()));
  CHECK(describe(d) == "(A_Γ1 *_Z Z^2)");
  CHECK(d.steps.size() == 1);
  CHECK(d.z2_leaf_count() == 1);
  CHECK(d.base_is_raag);
  auto flat = flatten_presentation(d);
  CHECK(abelianization(flat.presentation) == abelianization(papadima_suciu(g, *d.tree)));
  CHECK(flat.origin.size() == flat.presentation.generator_count());
}

TEST_CASE("two peels for the twelve-vertex example") {
  auto g = fixture("example12.graph");
  auto d = iterated_decomposition(g, tree_of(g, example12_tree()));
  CHECK(describe(d) == "((A_Γ2 *_Z Z^2) *_Z Z^2)");
  REQUIRE(d.steps.size() == 2);
  CHECK(d.steps[0].triangle == triangle_of(g, "v1", "v2", "v5"));
  CHECK(d.steps[1].triangle == triangle_of(g, "v10", "v11", "v9"));
  CHECK(same_edges(induced_subgraph(g, d.steps[0].complement).graph, induced_on(g, {"v1"})));
  CHECK(same_edges(induced_subgraph(g, d.steps[1].complement).graph, induced_on(g, {"v1", "v10"})));
  CHECK(d.base_vertices == d.steps[1].complement);

  // base commutators, read through the tree-edge to vertex map
  auto pe = example12_tree();
  std::set<std::pair<std::size_t, std::size_t>> got, want{{2, 3}, {2, 4}, {4, 5}, {7, 8}, {8, 9}, {9, 11}};
  auto paper_index = [&](Edge e) {
    for (std::size_t i = 0; i < pe.size(); ++i)
      if (edge_of(g, pe[i].first, pe[i].second) == e) return i + 1;
    return std::size_t{0};
  };
  for (auto e : d.base.gamma_prime.edges()) {
    auto a = paper_index(d.base.generator_map[e.lo]), b = paper_index(d.base.generator_map[e.hi]);
    got.insert({std::min(a, b), std::max(a, b)});
  }
  CHECK(got == want);
  CHECK(d.base.gamma_prime.vertex_count() == 9);
}

TEST_CASE("decomposition refuses graphs outside the family") {
  CHECK_THROWS_AS(iterated_decomposition(fixture("favourable.graph")), PreconditionError);
  CHECK_THROWS_AS(iterated_decomposition(fixture("octahedron.graph")), PreconditionError);
  CHECK_THROWS_AS(iterated_decomposition(fixture("square.graph")), PreconditionError);
  auto g = fixture("favourable.graph");
  CHECK_THROWS_AS(iterated_decomposition(g, first_spanning_tree(g)), PreconditionError);
}

TEST_CASE("flattening a single leaf is the identity") {
  auto p = raag_presentation(path_graph(3));
  auto flat = flatten_presentation(DecompositionTree::leaf(p));
  CHECK(same_relators(flat.presentation, p));
  CHECK(describe(DecompositionTree::leaf(p)) == "A_Γ");
}

TEST_CASE("decomposition soundness on random gluings") {
  std::mt19937 rng(41);
  int done = 0;
  for (int round = 0; round < 30; ++round) {
    auto a = random_special_triangulation(2 + round % 4, rng);
    auto b = add_boundary_ears(random_special_triangulation(1 + round % 3, rng));
    auto ta = triangles_of(a), tb = triangles_of(b);
    auto x = ta[rng() % ta.size()], y = tb[rng() % tb.size()];
    std::vector<std::pair<VertexId, VertexId>> glue{{x.a, y.a}, {x.b, y.b}, {x.c, y.c}};
    auto g = graph_union(a, b, glue);
    auto fam = in_family_g(g);
    if (fam.status != Verdict::yes) continue;
    ++done;
    auto d = iterated_decomposition(g);
    CHECK(abelianization(flatten_presentation(d).presentation) == abelianization(papadima_suciu(g, *d.tree)));
    CHECK(d.z2_leaf_count() == count_unfavourable(g, *d.tree).unfavourable);
    for (std::size_t i = 0; i + 1 < d.steps.size(); ++i)
      CHECK(std::includes(d.steps[i].complement.begin(), d.steps[i].complement.end(),
                          d.steps[i + 1].complement.begin(), d.steps[i + 1].complement.end()));
  }
  CHECK(done >= 5);
}

TEST_CASE("decomposition is deterministic") {
  auto g = fixture("example12.graph");
  auto x = decomposition_to_json(iterated_decomposition(g), g).dump();
  auto y = decomposition_to_json(iterated_decomposition(g), g).dump();
  CHECK(x == y);
}

TEST_CASE("default witness prefers a RAAG base") {
  for (auto name : {"main_fig.graph", "example12.graph"}) {
    auto g = fixture(name);
    auto d = iterated_decomposition(g);
    CHECK(d.base_is_raag);
    CHECK(d.z2_leaf_count() == in_family_g(g).search.unfavourable_count);
  }
}
