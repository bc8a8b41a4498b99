#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bbgroups/classify.hpp"
#include "bbgroups/graph.hpp"
#include "bbgroups/io.hpp"

namespace support {

using namespace bbgroups;

inline std::string data_path(std::string const& name) { return std::string(BB_DATA_DIR) + "/" + name; }

inline SimplicialGraph fixture(std::string const& name) { return read_graph_file(data_path(name)).graph; }

inline Edge edge_of(SimplicialGraph const& g, std::string const& a, std::string const& b) {
  return make_edge(*g.find_label(a), *g.find_label(b));
}

inline Triangle triangle_of(SimplicialGraph const& g, std::string const& a, std::string const& b,
                            std::string const& c) {
  return make_triangle(*g.find_label(a), *g.find_label(b), *g.find_label(c));
}

inline std::uint32_t gen_of(SimplicialGraph const& g, std::string const& a, std::string const& b) {
  return static_cast<std::uint32_t>(*g.edge_index(edge_of(g, a, b)));
}

inline SpanningTree tree_of(SimplicialGraph const& g, std::vector<std::pair<std::string, std::string>> const& es) {
  std::vector<Edge> edges;
  for (auto const& [a, b] : es) edges.push_back(edge_of(g, a, b));
  return SpanningTree::make(g, edges);
}

// Tree edges e1..e5 of the six-vertex worked example.
inline std::vector<std::pair<std::string, std::string>> exam_tree() {
  return {{"v1", "v2"}, {"v2", "v5"}, {"v2", "v4"}, {"v2", "v3"}, {"v4", "v6"}};
}

// Tree edges e1..e5 of the main six-vertex figure.
inline std::vector<std::pair<std::string, std::string>> main_tree() {
  return {{"v1", "v2"}, {"v2", "v4"}, {"v2", "v3"}, {"v5", "v4"}, {"v4", "v6"}};
}

// Tree edges e1..e11 of the twelve-vertex example, in label order.
inline std::vector<std::pair<std::string, std::string>> example12_tree() {
  return {{"v1", "v2"}, {"v2", "v4"},  {"v2", "v3"},  {"v5", "v4"},   {"v4", "v6"},  {"v6", "v7"},
          {"v8", "v7"}, {"v9", "v8"},  {"v11", "v8"}, {"v10", "v11"}, {"v11", "v12"}};
}

// Relabels vertex v as perm[v].
inline SimplicialGraph permute(SimplicialGraph const& g, std::vector<VertexId> const& perm) {
  std::vector<Edge> edges;
  for (auto e : g.edges()) edges.push_back(make_edge(perm[e.lo], perm[e.hi]));
  std::vector<std::string> labels(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) labels[perm[v]] = g.label(v);
  return SimplicialGraph(g.vertex_count(), edges, labels);
}

inline std::vector<VertexId> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<VertexId> p(n);
  for (VertexId i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline SimplicialGraph random_tree(std::size_t n, std::mt19937& rng) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back(make_edge(v, std::uniform_int_distribution<VertexId>(0, v - 1)(rng)));
  return permute(SimplicialGraph(n, edges), random_permutation(n, rng));
}

inline SimplicialGraph random_connected_graph(std::size_t n, double p, std::mt19937& rng) {
  std::set<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.insert(make_edge(v, std::uniform_int_distribution<VertexId>(0, v - 1)(rng)));
  std::bernoulli_distribution coin(p);
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      if (coin(rng)) edges.insert(make_edge(a, b));
  return permute(SimplicialGraph(n, {edges.begin(), edges.end()}), random_permutation(n, rng));
}

// Forward construction: a seed triangle, then ears glued along boundary edges.
// Vertex ids are shuffled afterwards so the construction order is hidden.
inline SimplicialGraph random_special_triangulation(std::size_t triangles, std::mt19937& rng) {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  std::vector<Edge> boundary = edges;
  VertexId next = 3;
  for (std::size_t k = 1; k < triangles; ++k) {
    auto i = std::uniform_int_distribution<std::size_t>(0, boundary.size() - 1)(rng);
    auto base = boundary[i];
    boundary.erase(boundary.begin() + static_cast<long>(i));
    auto v = next++;
    edges.push_back(make_edge(base.lo, v));
    edges.push_back(make_edge(base.hi, v));
    boundary.push_back(make_edge(base.lo, v));
    boundary.push_back(make_edge(base.hi, v));
  }
  return permute(SimplicialGraph(next, edges), random_permutation(next, rng));
}

// One ear on every boundary edge of a special triangulation.
inline SimplicialGraph add_boundary_ears(SimplicialGraph const& core) {
  std::vector<Edge> edges = core.edges();
  auto n = static_cast<VertexId>(core.vertex_count());
  for (auto e : core.edges()) {
    std::size_t k = 0;
    for (auto w : core.neighbours(e.lo))
      if (w != e.hi && core.adjacent(w, e.hi)) ++k;
    if (k != 1) continue;
    edges.push_back(make_edge(e.lo, n));
    edges.push_back(make_edge(e.hi, n));
    ++n;
  }
  return SimplicialGraph(n, edges);
}

inline std::vector<SpanningTree> all_trees(SimplicialGraph const& g) {
  std::vector<SpanningTree> out;
  enumerate_spanning_trees(g, kDefaultTreeCap, [&](SpanningTree const& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

}  // namespace support
