#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bbgroups/graph.hpp"
#include "bbgroups/presentation.hpp"

namespace bbgroups {

using Simplex = std::vector<VertexId>;  // sorted vertex set

// Clique complex of a graph. simplices[k] holds the k-simplices, i.e. the
// (k+1)-cliques, each sorted and listed in lexicographic order.
class FlagComplex {
 public:
  explicit FlagComplex(SimplicialGraph host);

  SimplicialGraph const& host() const { return host_; }
  std::vector<std::vector<Simplex>> const& simplices() const { return simplices_; }
  std::size_t count(std::size_t dim) const { return dim < simplices_.size() ? simplices_[dim].size() : 0; }
  // -1 for the empty complex.
  long dimension() const { return static_cast<long>(simplices_.size()) - 1; }
  bool contains(Simplex s) const;
  // Alternating sum of simplex counts over all dimensions.
  long euler_characteristic() const;

 private:
  SimplicialGraph host_;
  std::vector<std::vector<Simplex>> simplices_;
};

FlagComplex build_flag_complex(SimplicialGraph const& g);

struct CollapseMove {
  enum class Kind { edge_with_triangle, vertex_with_edge } kind;
  Edge edge;                   // removed edge
  std::optional<VertexId> apex;   // third vertex of the removed triangle
  std::optional<VertexId> vertex;  // removed free vertex
};

struct SimplyConnectedVerdict {
  Verdict status = Verdict::unknown;
  std::string evidence;                      // one-line human summary
  bool disconnected = false;
  std::vector<CollapseMove> collapse;        // strategy A, complete when status came from it
  bool collapsed_to_point = false;
  std::optional<GroupPresentation> edge_path_group;  // strategy B input
  std::optional<GroupPresentation> simplified;       // strategy B output
  std::optional<AbelianInvariants> h1;
  std::size_t steps = 0;
};

inline constexpr std::size_t kDefaultMoveBudget = 100'000;

// Strategy A: greedy elementary collapses of the 2-skeleton. Strategy B:
// Tietze simplification of the edge-path group, refuted by a nonzero H1.
// Never throws on budget exhaustion; the status is then unknown.
SimplyConnectedVerdict is_simply_connected(FlagComplex const& c, std::size_t budget = kDefaultMoveBudget);

// Edge-path group of the 2-skeleton: one generator per edge outside
// first_spanning_tree(host), one relator per triangle.
GroupPresentation edge_path_group(FlagComplex const& c);

// Replays a collapse sequence on the 2-skeleton; true iff every move is an
// elementary collapse and the result is a single vertex.
bool replay_collapse(FlagComplex const& c, std::vector<CollapseMove> const& moves);

// Boundary matrix from 2-simplices to 1-simplices (rows = triangles).
IntegerMatrix triangle_boundary_matrix(FlagComplex const& c);

// H1 of the 2-skeleton computed from simplicial boundary ranks.
AbelianInvariants first_homology(FlagComplex const& c);

}  // namespace bbgroups
