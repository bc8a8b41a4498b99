#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "bbgroups/classify.hpp"

using namespace bbgroups;
using namespace support;

namespace {

std::vector<char> internal_flags(SimplicialGraph const& g) {
  std::vector<char> out;
  for (auto t : triangles_of(g)) out.push_back(is_internal(g, t));
  return out;
}

std::vector<std::size_t> indices(SimplicialGraph const& g, SpanningTree const& t) {
  std::vector<std::size_t> out;
  for (auto e : t.edges()) out.push_back(*g.edge_index(e));
  return out;
}

}  // namespace

TEST_CASE("internal triangles of the six-vertex figure") {
  auto g = fixture("main_fig.graph");
  auto inner = triangle_of(g, "v2", "v5", "v4");
  for (auto t : triangles_of(g)) CHECK(is_internal(g, t) == (t == inner));
  CHECK(complement_intersection(g, triangle_of(g, "v1", "v2", "v5")) == ComplementIntersection::one_edge);
  CHECK(complement_intersection(g, inner) == ComplementIntersection::larger);
  CHECK(complement_intersection(complete_graph(3), {0, 1, 2}) == ComplementIntersection::empty);
  CHECK_FALSE(is_internal(complete_graph(3), {0, 1, 2}));
}

TEST_CASE("internal test agrees with the survivor oracle") {
  std::mt19937 rng(31);
  for (int round = 0; round < 40; ++round) {
    auto g = random_connected_graph(4 + round % 5, 0.5, rng);
    for (auto t : triangles_of(g)) {
      auto ref = oracle::internal(g, {t.a, t.b, t.c});
      // a triangle with all three vertices surviving meets its complement in
      // at least those vertices
      if (ref) CHECK(complement_intersection(g, t) == ComplementIntersection::larger);
      CHECK(is_internal(g, t) == ref);
    }
  }
}

TEST_CASE("every octahedron triangle is internal") {
  auto g = fixture("octahedron.graph");
  for (auto t : triangles_of(g)) CHECK(is_internal(g, t));
}

TEST_CASE("triangle reports count tree edges") {
  auto g = fixture("main_fig.graph");
  auto t = tree_of(g, main_tree());
  auto reps = classify_triangles(g, t);
  REQUIRE(reps.size() == 4);
  std::size_t unf = 0;
  for (auto const& r : reps) {
    CHECK(r.favourable == (r.tree_edge_count != 1));
    if (!r.favourable) {
      ++unf;
      CHECK(r.triangle == triangle_of(g, "v1", "v2", "v5"));
      CHECK_FALSE(r.internal);
    }
  }
  CHECK(unf == 1);
  auto c = count_unfavourable(g, t);
  CHECK(c.unfavourable == 1);
  CHECK(c.unfavourable_internal == 0);
}

TEST_CASE("branch and bound matches exhaustive search") {
  std::mt19937 rng(32);
  for (int round = 0; round < 40; ++round) {
    auto g = random_connected_graph(4 + round % 4, 0.55, rng);
    auto ref = oracle::tree_minima(g, internal_flags(g));
    CAPTURE(emit_graph(g));

    auto a = optimize_spanning_tree(g, TreeObjective::minimize_unfavourable);
    REQUIRE(a.best_tree);
    CHECK(a.exhaustive);
    CHECK(a.unfavourable_count == ref.unfavourable);
    CHECK(indices(g, *a.best_tree) == ref.first_best);
    CHECK(count_unfavourable(g, *a.best_tree).unfavourable == a.unfavourable_count);

    auto b = optimize_spanning_tree(g, TreeObjective::minimize_internal_unfavourable);
    REQUIRE(b.best_tree);
    CHECK(b.unfavourable_internal_count == ref.internal);

    auto c = optimize_spanning_tree(g, TreeObjective::forbid_internal_unfavourable);
    if (ref.internal_free_best == SIZE_MAX) {
      CHECK_FALSE(c.best_tree);
    } else {
      REQUIRE(c.best_tree);
      CHECK(c.unfavourable_count == ref.internal_free_best);
      CHECK(count_unfavourable(g, *c.best_tree).unfavourable_internal == 0);
    }

    auto f = is_favourable_graph(g);
    CHECK(f.witness.has_value() == (ref.unfavourable == 0));
    if (f.witness) CHECK(count_unfavourable(g, *f.witness).unfavourable == 0);
  }
}

TEST_CASE("a tight cap leaves the search non-exhaustive") {
  auto g = fixture("octahedron.graph");
  auto r = optimize_spanning_tree(g, TreeObjective::minimize_unfavourable, 5);
  CHECK_FALSE(r.exhaustive);
  auto full = optimize_spanning_tree(g, TreeObjective::minimize_internal_unfavourable);
  CHECK(full.exhaustive);
  CHECK(full.unfavourable_internal_count >= 2);
}

TEST_CASE("family membership on the fixtures") {
  CHECK(in_family_g(fixture("main_fig.graph")).status == Verdict::yes);
  CHECK(in_family_g(fixture("example12.graph")).status == Verdict::yes);
  auto fav = in_family_g(fixture("favourable.graph"));
  CHECK(fav.status == Verdict::no);
  CHECK(fav.reason == "graph is favourable");
  CHECK(in_family_g(complete_graph(4)).status == Verdict::no);
  CHECK(in_family_g(fixture("octahedron.graph")).status == Verdict::no);
  CHECK(in_family_g(fixture("square.graph")).status == Verdict::no);
  CHECK(in_family_g(empty_graph(2)).status == Verdict::no);
  auto starved = in_family_g(fixture("octahedron.graph"), kDefaultTreeCap, 0);
  CHECK(starved.status == Verdict::unknown);

  auto y = in_family_g(fixture("main_fig.graph"));
  REQUIRE(y.witness);
  auto c = count_unfavourable(fixture("main_fig.graph"), *y.witness);
  CHECK(c.unfavourable_internal == 0);
  CHECK(c.unfavourable >= 1);
}

TEST_CASE("special triangulations are recognised and replay") {
  std::mt19937 rng(33);
  for (std::size_t k = 1; k <= 12; ++k) {
    auto g = random_special_triangulation(k, rng);
    auto b = recognize_special_triangulation(g);
    REQUIRE(b);
    CHECK(b->ears.size() == k - 1);
    CHECK(same_edges(replay_special_build(g, *b), g));
  }
  CHECK(recognize_special_triangulation(fixture("strip.graph")));
  CHECK_FALSE(recognize_special_triangulation(fixture("wheel.graph")));
  CHECK_FALSE(recognize_special_triangulation(fixture("octahedron.graph")));
  CHECK(recognize_special_triangulation(fixture("main_fig.graph")));  // extra-special is special too
  CHECK_FALSE(recognize_special_triangulation(complete_graph(4)));
}

TEST_CASE("replay rejects a broken build") {
  auto g = fixture("strip.graph");
  auto b = *recognize_special_triangulation(g);
  auto bad = b;
  bad.ears[0].apex = bad.seed.a;
  CHECK_THROWS_AS(replay_special_build(g, bad), std::invalid_argument);
}

TEST_CASE("extra-special triangulations") {
  auto g = fixture("main_fig.graph");
  auto x = recognize_extra_special_triangulation(g);
  REQUIRE(x);
  std::vector<VertexId> core{*g.find_label("v2"), *g.find_label("v5"), *g.find_label("v4")};
  std::sort(core.begin(), core.end());
  CHECK(x->core == core);
  CHECK(x->ears.size() == 3);

  std::mt19937 rng(34);
  for (std::size_t k = 1; k <= 8; ++k) {
    auto core_g = random_special_triangulation(k, rng);
    auto h = add_boundary_ears(core_g);
    auto r = recognize_extra_special_triangulation(h);
    REQUIRE(r);
    CHECK(r->core.size() == core_g.vertex_count());
    CHECK(r->ears.size() == h.vertex_count() - core_g.vertex_count());
  }
  CHECK_FALSE(recognize_extra_special_triangulation(read_graph_file(data_path("diamond.dot"), GraphFormat::dot).graph));
  CHECK_FALSE(recognize_extra_special_triangulation(complete_graph(3)));
  CHECK_FALSE(recognize_extra_special_triangulation(fixture("strip.graph")));
}

TEST_CASE("clique splittings") {
  auto g = fixture("main_fig.graph");
  auto w = find_clique_splitting(g, 3);
  REQUIRE(w);
  CHECK(w->clique_size == 3);
  std::string why;
  CHECK(verify_splitting(g, *w, &why));
  std::vector<VertexId> sep{*g.find_label("v2"), *g.find_label("v5"), *g.find_label("v4")};
  std::sort(sep.begin(), sep.end());
  CHECK(w->gamma3 == sep);

  auto e12 = fixture("example12.graph");
  auto w12 = find_clique_splitting(e12, 3);
  REQUIRE(w12);
  CHECK(verify_splitting(e12, *w12));

  CHECK_FALSE(find_clique_splitting(fixture("octahedron.graph"), 3));
  CHECK_FALSE(find_clique_splitting(complete_graph(5), 1));

  auto tampered = *w;
  tampered.gamma1.pop_back();
  CHECK_FALSE(verify_splitting(g, tampered, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("gluing two family members along a clique stays splittable") {
  auto a = fixture("main_fig.graph"), b = fixture("main_fig.graph");
  auto ia = triangle_of(a, "v1", "v2", "v5"), ib = triangle_of(b, "v1", "v2", "v5");
  std::vector<std::pair<VertexId, VertexId>> glue{{ia.a, ib.a}, {ia.b, ib.b}, {ia.c, ib.c}};
  auto u = graph_union(a, b, glue);
  auto w = find_clique_splitting(u, 3);
  REQUIRE(w);
  CHECK(verify_splitting(u, *w));
}
