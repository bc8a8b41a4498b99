#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bbgroups/complex.hpp"
#include "bbgroups/graph.hpp"

namespace bbgroups {

enum class ComplementIntersection { empty, one_vertex, one_edge, larger };

char const* to_string(ComplementIntersection c);

// How a triangle meets its edge-set complement. Depends on the graph only.
ComplementIntersection complement_intersection(SimplicialGraph const& g, Triangle const& t);

// Meets its complement in neither one vertex nor one edge. A standalone
// triangle (empty complement) is not internal.
bool is_internal(SimplicialGraph const& g, Triangle const& t);

struct TriangleReport {
  Triangle triangle;
  int tree_edge_count = 0;  // 0, 1 or 2
  bool favourable = false;  // tree_edge_count is 0 or 2
  bool internal = false;
  ComplementIntersection complement = ComplementIntersection::empty;
};

TriangleReport classify_triangle(SimplicialGraph const& g, SpanningTree const& t, Triangle const& tri);

std::vector<TriangleReport> classify_triangles(SimplicialGraph const& g, SpanningTree const& t);

struct TreeCounts {
  std::size_t unfavourable = 0;
  std::size_t unfavourable_internal = 0;
};

TreeCounts count_unfavourable(SimplicialGraph const& g, SpanningTree const& t);

enum class TreeObjective {
  minimize_unfavourable,
  // Among trees whose internal triangles are all favourable, the one with the
  // fewest unfavourable triangles.
  forbid_internal_unfavourable,
  minimize_internal_unfavourable,
};

struct TreeSearchResult {
  std::optional<SpanningTree> best_tree;  // nullopt: no feasible tree found
  std::size_t unfavourable_count = 0;
  std::size_t unfavourable_internal_count = 0;
  bool exhaustive = false;  // the whole tree space was covered
  std::size_t trees_visited = 0;
};

// Depth-first branch and bound over the lexicographic spanning-tree
// enumeration. A triangle counts toward the bound once all three of its edge
// decisions are made. Ties go to the lexicographically least tree.
TreeSearchResult optimize_spanning_tree(SimplicialGraph const& g, TreeObjective objective,
                                        std::size_t cap = kDefaultTreeCap);

struct FavourableResult {
  std::optional<SpanningTree> witness;
  bool exhaustive = false;  // meaningful when witness is empty
};

// A spanning tree making every triangle favourable. Combinatorial search
// only; simple connectivity is the caller's concern.
FavourableResult is_favourable_graph(SimplicialGraph const& g, std::size_t cap = kDefaultTreeCap);

struct FamilyVerdict {
  Verdict status = Verdict::unknown;
  std::string reason;
  std::optional<SpanningTree> witness;  // all internal triangles favourable
  TreeSearchResult search;
  SimplyConnectedVerdict simply_connected;
};

FamilyVerdict in_family_g(SimplicialGraph const& g, std::size_t tree_cap = kDefaultTreeCap,
                          std::size_t move_budget = kDefaultMoveBudget);

// Apex removed at each step together with the edge it was glued along (in
// the original graph's ids).
struct Ear {
  VertexId apex;
  Edge base;

  friend bool operator==(Ear const&, Ear const&) = default;
};

struct SpecialBuild {
  Triangle seed;
  std::vector<Ear> ears;  // construction order: ears[0] is glued first
};

std::optional<SpecialBuild> recognize_special_triangulation(SimplicialGraph const& g);

// Rebuilds the graph described by a construction sequence (labels from `like`).
SimplicialGraph replay_special_build(SimplicialGraph const& like, SpecialBuild const& build);

struct ExtraSpecialBuild {
  std::vector<VertexId> core;  // vertices of the special core
  SpecialBuild core_build;     // in the original graph's ids
  std::vector<Ear> ears;       // one apex per boundary edge of the core
};

std::optional<ExtraSpecialBuild> recognize_extra_special_triangulation(SimplicialGraph const& g);

struct SplittingWitness {
  std::vector<VertexId> gamma1, gamma2, gamma3;  // sorted; gamma3 = gamma1 ∩ gamma2
  std::size_t clique_size = 0;
};

std::optional<SplittingWitness> find_clique_splitting(SimplicialGraph const& g, std::size_t min_clique);

// Checks the splitting conditions: union and intersection of the induced
// subgraphs, no edge across, separating, connected pieces.
bool verify_splitting(SimplicialGraph const& g, SplittingWitness const& w, std::string* why = nullptr);

}  // namespace bbgroups
