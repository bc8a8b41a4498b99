#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bbgroups/complex.hpp"
#include "bbgroups/graph.hpp"
#include "bbgroups/presentation.hpp"

namespace bbgroups {

// Γ' for a favourable pair (g, t): vertex i stands for tree edge
// generator_map[i] (tree edges in edge order); two vertices are adjacent when
// their edges lie in a common triangle of g. Vertex labels are the generator
// names used by papadima_suciu(g, t).
struct RaagWitness {
  SimplicialGraph gamma_prime;
  std::vector<Edge> generator_map;
};

// Throws PreconditionError naming the first unfavourable triangle.
RaagWitness chang_raag(SimplicialGraph const& g, SpanningTree const& t);

// Whether raag_presentation(w.gamma_prime) has the relator multiset of
// papadima_suciu(g, t). A favourable tree can fail this: a triangle with no
// tree edge contributes [P,Q] for tree paths P, Q, which need not follow from
// the commutators of Γ'.
bool chang_round_trip(SimplicialGraph const& g, SpanningTree const& t, RaagWitness const& w);

// First favourable tree, in lexicographic order, passing chang_round_trip.
std::optional<SpanningTree> find_chang_tree(SimplicialGraph const& g, std::size_t cap = kDefaultTreeCap);

struct PeelResult {
  InducedSubgraph complement;
  SpanningTree restricted_tree;  // in complement ids
  GroupPresentation z2;          // <e, f | [e,f]>, e the tree edge, f the shared edge
  Edge tree_edge;                // in g's ids
  Edge shared_edge;              // in g's ids
  Word word_left;                // f as a tree path; letters are complement edge indices
  Word word_right;               // the letter f of z2
};

// Splits off one unfavourable triangle meeting its complement in one edge.
PeelResult peel_once(SimplicialGraph const& g, SpanningTree const& t, Triangle const& tri);

struct PeelStep {
  Triangle triangle;                // root ids
  Edge tree_edge;                   // root ids
  Edge shared_edge;                 // root ids
  std::vector<VertexId> complement;  // Γ_i as root vertex ids
};

struct DecompositionNode {
  enum class Kind { leaf, amalgam };
  Kind kind = Kind::leaf;
  GroupPresentation presentation;  // leaf; generator sources are root edges
  std::size_t left = 0, right = 0;  // amalgam children (node indices)
  Word word_left, word_right;       // amalgam; letters are root edge indices
  std::size_t step = 0;             // amalgam: index into DecompositionTree::steps
};

struct DecompositionTree {
  std::vector<DecompositionNode> nodes;
  std::size_t root = 0;
  std::optional<SpanningTree> tree;  // tree on the root graph
  std::vector<Edge> root_edges;       // edge index -> edge of the root graph
  std::vector<PeelStep> steps;        // peel order; steps[0] is the outermost amalgam
  std::vector<VertexId> base_vertices;  // deepest complement, root ids
  RaagWitness base;                     // Γ' of the deepest complement
  // False when the restricted tree fails chang_round_trip on the deepest
  // complement; its leaf then holds the Papadima-Suciu presentation instead.
  bool base_is_raag = true;

  static DecompositionTree leaf(GroupPresentation p);
  std::size_t z2_leaf_count() const;
};

// Peels the unfavourable triangles of a witness tree in lexicographic order.
// Without an override the witness comes from the forbid-internal search and
// the graph must be in the family; when its base leaf is not a RAAG, the first
// tree with the same unfavourable count and a RAAG base is used instead. An
// override is validated and used as given. Throws
// PreconditionError for favourable graphs and graphs outside the family.
DecompositionTree iterated_decomposition(SimplicialGraph const& g,
                                         std::optional<SpanningTree> tree = std::nullopt,
                                         std::size_t tree_cap = kDefaultTreeCap,
                                         std::size_t move_budget = kDefaultMoveBudget);

struct FlatPresentation {
  GroupPresentation presentation;
  // For each generator, the leaf node it came from and its index there.
  std::vector<std::pair<std::size_t, std::uint32_t>> origin;
};

// Free product of the leaves plus word_left * word_right^-1 per amalgam.
FlatPresentation flatten_presentation(DecompositionTree const& d);

// "((A_Γ2 *_Z Z^2) *_Z Z^2)"; the detailed form names the amalgamated
// generators and triangles: "((A_Γ2 *_<e7> H_△2) *_<e4> H_△1)".
std::string describe(DecompositionTree const& d, bool detailed = false);

}  // namespace bbgroups
