#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bbgroups {

using BigInt = boost::multiprecision::cpp_int;

// Thrown when an operation's documented precondition does not hold
// (disconnected input, edge not in graph, favourable triangle passed to a
// peel, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Position of a vertex in the graph's fixed linear order.
using VertexId = std::uint32_t;

// Undirected edge, canonically oriented from the smaller to the larger vertex.
struct Edge {
  VertexId lo = 0;
  VertexId hi = 0;

  friend auto operator<=>(Edge const&, Edge const&) = default;
};

// Builds the canonical edge {a, b}. Throws on a loop.
Edge make_edge(VertexId a, VertexId b);

// A 3-clique a < b < c. Its directed triple is (e, f, g) = (ab, bc, ac).
struct Triangle {
  VertexId a = 0;
  VertexId b = 0;
  VertexId c = 0;

  std::array<Edge, 3> edges() const { return {Edge{a, b}, Edge{b, c}, Edge{a, c}}; }
  std::array<VertexId, 3> vertices() const { return {a, b, c}; }
  bool contains(VertexId v) const { return v == a || v == b || v == c; }
  bool contains(Edge e) const { return contains(e.lo) && contains(e.hi); }

  friend auto operator<=>(Triangle const&, Triangle const&) = default;
};

Triangle make_triangle(VertexId x, VertexId y, VertexId z);

class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  // Edges may be given in any orientation and order; loops, duplicate edges
  // and out-of-range endpoints throw std::invalid_argument. Missing labels are
  // filled with the decimal vertex index.
  SimplicialGraph(std::size_t vertex_count, std::vector<Edge> edges,
                  std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Sorted lexicographically by (lo, hi); the position of an edge here is its
  // edge index.
  std::vector<Edge> const& edges() const { return edges_; }
  Edge edge(std::size_t index) const { return edges_[index]; }
  std::optional<std::size_t> edge_index(Edge e) const;
  bool has_edge(Edge e) const { return edge_index(e).has_value(); }

  bool adjacent(VertexId u, VertexId v) const {
    return u != v && matrix_[std::size_t{u} * n_ + v] != 0;
  }
  std::vector<VertexId> const& neighbours(VertexId v) const { return adj_[v]; }
  std::size_t degree(VertexId v) const { return adj_[v].size(); }

  std::string const& label(VertexId v) const { return labels_[v]; }
  std::vector<std::string> const& labels() const { return labels_; }
  std::optional<VertexId> find_label(std::string_view name) const;

  bool is_connected() const;
  // Connected components, each sorted, ordered by least member.
  std::vector<std::vector<VertexId>> components() const;

  // Same vertex count, edge set and labels.
  friend bool operator==(SimplicialGraph const& x, SimplicialGraph const& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_ && x.labels_ == y.labels_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<char> matrix_;
};

bool same_edges(SimplicialGraph const& x, SimplicialGraph const& y);

// An induced subgraph together with the map from its vertices back to the
// vertices of the graph it was cut from. Labels are inherited.
struct InducedSubgraph {
  SimplicialGraph graph;
  std::vector<VertexId> to_parent;

  std::optional<VertexId> from_parent(VertexId v) const;
  Edge edge_to_parent(Edge e) const { return make_edge(to_parent[e.lo], to_parent[e.hi]); }
};

// `verts` may be unsorted; duplicates are ignored. The result's vertex order
// follows the parent order.
InducedSubgraph induced_subgraph(SimplicialGraph const& g, std::vector<VertexId> verts);

// All 3-cliques, sorted lexicographically.
std::vector<Triangle> triangles_of(SimplicialGraph const& g);

// Induced subgraph on the vertices that keep at least one edge once the
// triangle's three edges are removed. Triangle edges between surviving
// vertices are therefore present again.
InducedSubgraph edge_set_complement(SimplicialGraph const& g, Triangle const& t);

// Subgraph of a fixed host, in host vertex ids.
struct Subgraph {
  SimplicialGraph const* host = nullptr;
  std::vector<VertexId> vertices;  // sorted
  std::vector<Edge> edges;         // sorted

  static Subgraph whole(SimplicialGraph const& g);
  static Subgraph of_triangle(SimplicialGraph const& g, Triangle const& t);
  static Subgraph of_induced(SimplicialGraph const& host, InducedSubgraph const& sub);

  friend bool operator==(Subgraph const& x, Subgraph const& y) {
    return x.host == y.host && x.vertices == y.vertices && x.edges == y.edges;
  }
};

// Common vertices and edges. Throws std::invalid_argument when the hosts differ.
Subgraph intersect(Subgraph const& x, Subgraph const& y);

// Edge subset of a host graph forming a tree through every vertex.
class SpanningTree {
 public:
  SpanningTree() = default;

  // Validates |E(T)| = |V| - 1, membership in the host, acyclicity and
  // connectivity; throws PreconditionError otherwise.
  static SpanningTree make(SimplicialGraph const& host, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::vector<Edge> const& edges() const { return edges_; }
  bool contains(Edge e) const;

  // Unique tree path u -> v as a sequence of vertices (u first).
  std::vector<VertexId> path(VertexId u, VertexId v) const;

  friend bool operator==(SpanningTree const& x, SpanningTree const& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }
  friend auto operator<=>(SpanningTree const& x, SpanningTree const& y) {
    return x.edges_ <=> y.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adj_;
};

// Tree edges restricted to a subgraph, re-expressed in the subgraph's ids.
// Throws PreconditionError if the restriction does not span the subgraph.
SpanningTree restrict_tree(SpanningTree const& t, InducedSubgraph const& sub);

// Lexicographically least spanning tree (greedy over the sorted edge list).
SpanningTree first_spanning_tree(SimplicialGraph const& g);

struct TreeEnumeration {
  std::size_t emitted = 0;
  bool overflow = false;  // stopped at the cap before exhausting the tree space
};

inline constexpr std::size_t kDefaultTreeCap = 1'000'000;

// Emits spanning trees in lexicographic order of their sorted edge-index
// sequences (include-before-exclude backtracking). The visitor may return
// false to stop early. Throws PreconditionError on disconnected input.
TreeEnumeration enumerate_spanning_trees(SimplicialGraph const& g, std::size_t cap,
                                         std::function<bool(SpanningTree const&)> const& visit);

// Counts by enumeration, without materialising SpanningTree objects.
TreeEnumeration count_spanning_trees(SimplicialGraph const& g, std::size_t cap);

// Matrix-tree theorem: determinant of a reduced Laplacian (exact Bareiss).
BigInt kirchhoff_tree_count(SimplicialGraph const& g);

// Backtracking engine shared by enumeration and the classify searches.
// `decided` edges are 0..depth-1; `in_tree[i]` holds the decision for edge i.
struct TreeSearchHooks {
  // Return false to prune the subtree below the current partial decision.
  std::function<bool(std::size_t depth, std::vector<char> const& in_tree)> partial;
  // Called with a complete tree (all remaining edges excluded). Return false
  // to stop the whole search.
  std::function<bool(std::vector<char> const& in_tree)> complete;
};

TreeEnumeration search_spanning_trees(SimplicialGraph const& g, std::size_t cap,
                                      TreeSearchHooks const& hooks);

std::optional<VertexId> dominating_vertex(SimplicialGraph const& g);

// Witness bijection phi with phi[v] the image of v, or nullopt.
std::optional<std::vector<VertexId>> graphs_isomorphic(SimplicialGraph const& x,
                                                       SimplicialGraph const& y);

// Disjoint union plus every cross edge; x's vertices come first.
SimplicialGraph join(SimplicialGraph const& x, SimplicialGraph const& y);

// Glues y onto x: overlap pairs (vx, vy) identify y's vertex vy with x's vx.
// y's remaining vertices are appended after x's. Throws std::invalid_argument
// when either side of the overlap repeats a vertex.
SimplicialGraph graph_union(SimplicialGraph const& x, SimplicialGraph const& y,
                            std::span<std::pair<VertexId, VertexId> const> overlap);

// Small constructors used by tests and the tool.
SimplicialGraph complete_graph(std::size_t n);
SimplicialGraph path_graph(std::size_t n);
SimplicialGraph cycle_graph(std::size_t n);
SimplicialGraph empty_graph(std::size_t n);
SimplicialGraph star_graph(std::size_t n);  // centre 0, n vertices in total

}  // namespace bbgroups
