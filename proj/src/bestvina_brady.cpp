#include "bbgroups/bestvina_brady.hpp"

#include <algorithm>
#include <set>

namespace bbgroups {

std::string edge_generator_name(std::size_t edge_index) { return "e" + std::to_string(edge_index + 1); }

GroupPresentation dicks_leary(SimplicialGraph const& g, Verdict simply_connected) {
  if (!g.is_connected()) throw PreconditionError("Dicks-Leary presentation needs a connected graph");
  GroupPresentation p;
  p.kind = PresentationKind::dicks_leary;
  p.hypothesis = simply_connected;
  for (std::size_t i = 0; i < g.edge_count(); ++i) p.generators.push_back({edge_generator_name(i), g.edge(i)});
  for (auto const& t : triangles_of(g)) {
    auto [ab, bc, ac] = t.edges();
    auto e = static_cast<std::uint32_t>(*g.edge_index(ab));
    auto f = static_cast<std::uint32_t>(*g.edge_index(bc));
    auto h = static_cast<std::uint32_t>(*g.edge_index(ac));
    p.relators.push_back(Word{{e, 1}, {f, 1}, {e, -1}, {f, -1}});
    p.relators.push_back(Word{{e, 1}, {f, 1}, {h, -1}});
  }
  return p;
}

Word tree_path_word(SimplicialGraph const& g, SpanningTree const& t, Edge e) {
  auto idx = g.edge_index(e);
  if (!idx) throw PreconditionError("tree_path_word: edge not in graph");
  if (t.contains(e)) return Word::generator(static_cast<std::uint32_t>(*idx));
  auto const path = t.path(e.lo, e.hi);
  std::vector<Letter> letters;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto step = make_edge(path[i], path[i + 1]);
    letters.push_back({static_cast<std::uint32_t>(*g.edge_index(step)),
                       static_cast<std::int8_t>(path[i] < path[i + 1] ? 1 : -1)});
  }
  return Word(std::move(letters));
}

std::vector<std::size_t> commutation_implied_relators(GroupPresentation const& p) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> commuting;
  std::vector<char> basic(p.relators.size(), 0);
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    if (p.relators[i].size() == 4)
      if (auto c = as_generator_commutator(p.relators[i])) {
        commuting.insert(*c);
        basic[i] = 1;
      }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (basic[i]) continue;
    bool implied = trivial_in_raag(p.relators[i], commuting);
    if (implied) out.push_back(i);
  }
  return out;
}

GroupPresentation papadima_suciu(SimplicialGraph const& g, SpanningTree const& t,
                                 Verdict simply_connected, EliminationOrder order) {
  if (t.vertex_count() != g.vertex_count()) throw PreconditionError("tree does not span the graph");
  auto dl = dicks_leary(g, simply_connected);

  std::vector<std::size_t> non_tree;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (!t.contains(g.edge(i))) non_tree.push_back(i);
  if (order == EliminationOrder::reverse) std::reverse(non_tree.begin(), non_tree.end());
  for (auto i : non_tree) {
    auto const value = tree_path_word(g, t, g.edge(i));
    for (auto& r : dl.relators) r = substitute(r, static_cast<std::uint32_t>(i), value);
  }

  GroupPresentation p;
  p.kind = PresentationKind::papadima_suciu;
  p.hypothesis = simply_connected;
  std::vector<std::optional<std::uint32_t>> map(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (t.contains(g.edge(i))) {
      map[i] = static_cast<std::uint32_t>(p.generators.size());
      p.generators.push_back(dl.generators[i]);
    }
  for (auto const& r : dl.relators) p.relators.push_back(rename(r, map));
  tidy_relators(p);
  for (auto& r : p.relators) r = relator_normal_form(r);

  auto implied = commutation_implied_relators(p);
  for (auto it = implied.rbegin(); it != implied.rend(); ++it)
    p.relators.erase(p.relators.begin() + static_cast<long>(*it));
  return p;
}

GroupPresentation raag_presentation(SimplicialGraph const& g) {
  GroupPresentation p;
  p.kind = PresentationKind::raag;
  p.hypothesis = Verdict::yes;
  for (VertexId v = 0; v < g.vertex_count(); ++v) p.generators.push_back({g.label(v), std::nullopt});
  for (auto e : g.edges()) p.relators.push_back(Word{{e.lo, 1}, {e.hi, 1}, {e.lo, -1}, {e.hi, -1}});
  return p;
}

}  // namespace bbgroups
