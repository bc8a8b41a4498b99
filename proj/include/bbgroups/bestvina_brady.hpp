#pragma once

#include <string>
#include <vector>

#include "bbgroups/graph.hpp"
#include "bbgroups/presentation.hpp"

namespace bbgroups {

// Name of the generator standing for edge index i: "e1", "e2", ...
std::string edge_generator_name(std::size_t edge_index);

// One generator per edge (generator i is edge i of g). For every triangle
// u < v < w with e = uv, f = vw, g = uw the relators e f e^-1 f^-1 and
// e f g^-1. Throws PreconditionError when g is disconnected.
GroupPresentation dicks_leary(SimplicialGraph const& g, Verdict simply_connected = Verdict::unknown);

// For a tree edge the single letter; otherwise the tree path from lo(e) to
// hi(e), a letter being +1 when walked from its lower to its higher endpoint.
// Generator indices are edge indices of g.
Word tree_path_word(SimplicialGraph const& g, SpanningTree const& t, Edge e);

enum class EliminationOrder { lexicographic, reverse };

// Dicks-Leary presentation with every non-tree generator eliminated through
// its tree path word. Relators are freely and cyclically reduced, kept in
// normal form, and dropped when empty, duplicated, or a commutator [A, B]
// whose letters pairwise commute through single-generator commutator
// relators of the same presentation. Generators are the tree edges in edge
// order; names and sources are kept from dicks_leary.
GroupPresentation papadima_suciu(SimplicialGraph const& g, SpanningTree const& t,
                                 Verdict simply_connected = Verdict::unknown,
                                 EliminationOrder order = EliminationOrder::lexicographic);

// Generators are the vertices (named by label), one commutator per edge.
GroupPresentation raag_presentation(SimplicialGraph const& g);

// Relators that are trivial in the RAAG spanned by the single-generator
// commutators of the same presentation, hence consequences of them.
std::vector<std::size_t> commutation_implied_relators(GroupPresentation const& p);

}  // namespace bbgroups
