#include "bbgroups/decompose.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "bbgroups/bestvina_brady.hpp"
#include "bbgroups/classify.hpp"

namespace bbgroups {

namespace {

std::string triangle_name(SimplicialGraph const& g, Triangle const& t) {
  return "(" + g.label(t.a) + "," + g.label(t.b) + "," + g.label(t.c) + ")";
}

int tree_edges_in(SpanningTree const& t, Triangle const& tri) {
  int k = 0;
  for (auto e : tri.edges()) k += t.contains(e) ? 1 : 0;
  return k;
}

}  // namespace

RaagWitness chang_raag(SimplicialGraph const& g, SpanningTree const& t) {
  if (t.vertex_count() != g.vertex_count()) throw PreconditionError("tree does not span the graph");
  auto const triangles = triangles_of(g);
  for (auto const& tri : triangles)
    if (tree_edges_in(t, tri) == 1)
      throw PreconditionError("triangle " + triangle_name(g, tri) + " is unfavourable for the tree");

  RaagWitness w;
  w.generator_map = t.edges();
  std::sort(w.generator_map.begin(), w.generator_map.end());
  auto position = [&](Edge e) {
    return static_cast<VertexId>(std::lower_bound(w.generator_map.begin(), w.generator_map.end(), e) -
                                 w.generator_map.begin());
  };
  std::vector<Edge> edges;
  for (auto const& tri : triangles) {
    std::vector<Edge> in;
    for (auto e : tri.edges())
      if (t.contains(e)) in.push_back(e);
    if (in.size() == 2) edges.push_back(make_edge(position(in[0]), position(in[1])));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::string> labels;
  for (auto e : w.generator_map) labels.push_back(edge_generator_name(*g.edge_index(e)));
  w.gamma_prime = SimplicialGraph(w.generator_map.size(), std::move(edges), std::move(labels));
  return w;
}

bool chang_round_trip(SimplicialGraph const& g, SpanningTree const& t, RaagWitness const& w) {
  auto ps = papadima_suciu(g, t, Verdict::yes);
  auto raag = raag_presentation(w.gamma_prime);
  return same_relators(ps, raag);
}

std::optional<SpanningTree> find_chang_tree(SimplicialGraph const& g, std::size_t cap) {
  if (!g.is_connected()) return std::nullopt;
  struct Info {
    std::array<std::size_t, 3> edge;
    std::size_t last;
  };
  std::vector<Info> info;
  for (auto const& tri : triangles_of(g)) {
    auto e = tri.edges();
    Info x{{*g.edge_index(e[0]), *g.edge_index(e[1]), *g.edge_index(e[2])}, 0};
    x.last = *std::max_element(x.edge.begin(), x.edge.end());
    info.push_back(x);
  }
  auto clean = [&](std::size_t depth, std::vector<char> const& in) {
    return std::none_of(info.begin(), info.end(), [&](Info const& x) {
      return x.last < depth && in[x.edge[0]] + in[x.edge[1]] + in[x.edge[2]] == 1;
    });
  };
  std::optional<SpanningTree> found;
  TreeSearchHooks hooks;
  hooks.partial = clean;
  hooks.complete = [&](std::vector<char> const& in) {
    if (!clean(g.edge_count(), in)) return true;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < in.size(); ++i)
      if (in[i]) edges.push_back(g.edge(i));
    auto t = SpanningTree::make(g, std::move(edges));
    if (!chang_round_trip(g, t, chang_raag(g, t))) return true;
    found = std::move(t);
    return false;
  };
  search_spanning_trees(g, cap, hooks);
  return found;
}

PeelResult peel_once(SimplicialGraph const& g, SpanningTree const& t, Triangle const& tri) {
  for (auto e : tri.edges())
    if (!g.has_edge(e)) throw PreconditionError("not a triangle of the graph");
  if (t.vertex_count() != g.vertex_count()) throw PreconditionError("tree does not span the graph");
  auto const name = triangle_name(g, tri);
  if (tree_edges_in(t, tri) != 1) throw PreconditionError("triangle " + name + " is favourable for the tree");
  if (complement_intersection(g, tri) != ComplementIntersection::one_edge)
    throw PreconditionError("triangle " + name + " does not meet its complement in a single edge");

  PeelResult r;
  r.complement = edge_set_complement(g, tri);
  for (auto e : tri.edges()) {
    if (t.contains(e)) r.tree_edge = e;
    if (r.complement.from_parent(e.lo) && r.complement.from_parent(e.hi)) r.shared_edge = e;
  }
  try {
    r.restricted_tree = restrict_tree(t, r.complement);
  } catch (PreconditionError const&) {
    throw PreconditionError("restricted tree does not span the complement of " + name);
  }
  r.z2.kind = PresentationKind::z_squared;
  r.z2.hypothesis = Verdict::yes;
  r.z2.generators = {{edge_generator_name(*g.edge_index(r.tree_edge)), r.tree_edge},
                     {edge_generator_name(*g.edge_index(r.shared_edge)), r.shared_edge}};
  r.z2.relators = {Word::commutator(Word::generator(0), Word::generator(1))};
  auto local = make_edge(*r.complement.from_parent(r.shared_edge.lo), *r.complement.from_parent(r.shared_edge.hi));
  r.word_left = tree_path_word(r.complement.graph, r.restricted_tree, local);
  r.word_right = Word::generator(1);
  return r;
}

DecompositionTree DecompositionTree::leaf(GroupPresentation p) {
  DecompositionTree d;
  DecompositionNode n;
  n.presentation = std::move(p);
  d.nodes.push_back(std::move(n));
  return d;
}

std::size_t DecompositionTree::z2_leaf_count() const {
  return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](auto const& n) {
    return n.kind == DecompositionNode::Kind::leaf && n.presentation.kind == PresentationKind::z_squared;
  }));
}

namespace {

DecompositionTree decompose_along(SimplicialGraph const& g, SpanningTree const& witness) {
  std::optional<SpanningTree> tree = witness;
  DecompositionTree d;
  d.tree = tree;
  d.root_edges = g.edges();
  std::vector<Triangle> order;
  for (auto const& tri : triangles_of(g))
    if (tree_edges_in(*tree, tri) == 1) order.push_back(tri);

  SimplicialGraph cur = g;
  SpanningTree cur_tree = *tree;
  std::vector<VertexId> to_root(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) to_root[v] = v;
  auto root_edge = [&](Edge e) { return make_edge(to_root[e.lo], to_root[e.hi]); };
  auto root_index = [&](Edge e) { return static_cast<std::uint32_t>(*g.edge_index(root_edge(e))); };

  std::vector<GroupPresentation> z2s;
  std::vector<std::pair<Word, Word>> words;
  for (auto const& tri : order) {
    std::vector<VertexId> local;
    for (auto v : tri.vertices()) {
      auto it = std::find(to_root.begin(), to_root.end(), v);
      if (it == to_root.end())
        throw PreconditionError("triangle " + triangle_name(g, tri) + " lost a vertex to an earlier peel");
      local.push_back(static_cast<VertexId>(it - to_root.begin()));
    }
    PeelResult peel;
    try {
      peel = peel_once(cur, cur_tree, make_triangle(local[0], local[1], local[2]));
    } catch (PreconditionError const& e) {
      throw PreconditionError("peeling " + triangle_name(g, tri) + ": " + e.what());
    }

    PeelStep step;
    step.triangle = tri;
    step.tree_edge = root_edge(peel.tree_edge);
    step.shared_edge = root_edge(peel.shared_edge);
    for (auto v : peel.complement.to_parent) step.complement.push_back(to_root[v]);
    for (auto& gen : peel.z2.generators) {
      gen.source = root_edge(*gen.source);
      gen.name = edge_generator_name(*g.edge_index(*gen.source));
    }
    std::vector<Letter> left;
    for (auto l : peel.word_left.letters())
      left.push_back({root_index(peel.complement.edge_to_parent(peel.complement.graph.edge(l.gen))), l.exp});
    words.emplace_back(Word(std::move(left)), Word::generator(root_index(peel.shared_edge)));
    z2s.push_back(std::move(peel.z2));
    d.steps.push_back(std::move(step));

    to_root = d.steps.back().complement;
    cur = std::move(peel.complement.graph);
    cur_tree = std::move(peel.restricted_tree);
  }

  RaagWitness base;
  try {
    base = chang_raag(cur, cur_tree);
  } catch (PreconditionError const& e) {
    throw PreconditionError(std::string("final complement is not favourable: ") + e.what());
  }
  std::vector<std::string> names;
  for (auto& e : base.generator_map) {
    e = root_edge(e);
    names.push_back(edge_generator_name(*g.edge_index(e)));
  }
  base.gamma_prime = SimplicialGraph(base.gamma_prime.vertex_count(), base.gamma_prime.edges(), names);
  DecompositionNode leaf;
  d.base_is_raag = chang_round_trip(cur, cur_tree, base);
  leaf.presentation = d.base_is_raag ? raag_presentation(base.gamma_prime) : papadima_suciu(cur, cur_tree, Verdict::yes);
  for (std::size_t i = 0; i < base.generator_map.size(); ++i) {
    leaf.presentation.generators[i].source = base.generator_map[i];
    leaf.presentation.generators[i].name = names[i];
  }
  d.base_vertices = to_root;
  d.base = std::move(base);

  d.nodes.push_back(std::move(leaf));
  std::size_t inner = 0;
  for (std::size_t i = d.steps.size(); i-- > 0;) {
    DecompositionNode z;
    z.presentation = std::move(z2s[i]);
    d.nodes.push_back(std::move(z));
    DecompositionNode am;
    am.kind = DecompositionNode::Kind::amalgam;
    am.left = inner;
    am.right = d.nodes.size() - 1;
    am.word_left = std::move(words[i].first);
    am.word_right = std::move(words[i].second);
    am.step = i;
    d.nodes.push_back(std::move(am));
    inner = d.nodes.size() - 1;
  }
  d.root = inner;
  return d;
}

// First tree in lexicographic order with every internal triangle favourable,
// exactly `unfavourable` unfavourable triangles, and a RAAG base leaf.
std::optional<DecompositionTree> raag_base_tree(SimplicialGraph const& g, std::size_t unfavourable,
                                                std::size_t cap) {
  struct Info {
    std::array<std::size_t, 3> edge;
    std::size_t last;
    bool internal;
  };
  std::vector<Info> info;
  for (auto const& tri : triangles_of(g)) {
    auto e = tri.edges();
    Info x{{*g.edge_index(e[0]), *g.edge_index(e[1]), *g.edge_index(e[2])}, 0, is_internal(g, tri)};
    x.last = *std::max_element(x.edge.begin(), x.edge.end());
    info.push_back(x);
  }
  auto feasible = [&](std::size_t depth, std::vector<char> const& in) {
    std::size_t bad = 0;
    for (auto const& x : info) {
      if (x.last >= depth || in[x.edge[0]] + in[x.edge[1]] + in[x.edge[2]] != 1) continue;
      if (x.internal || ++bad > unfavourable) return false;
    }
    return true;
  };
  std::optional<DecompositionTree> found;
  TreeSearchHooks hooks;
  hooks.partial = feasible;
  hooks.complete = [&](std::vector<char> const& in) {
    if (!feasible(g.edge_count(), in)) return true;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < in.size(); ++i)
      if (in[i]) edges.push_back(g.edge(i));
    auto t = SpanningTree::make(g, std::move(edges));
    if (count_unfavourable(g, t).unfavourable != unfavourable) return true;
    auto d = decompose_along(g, t);
    if (!d.base_is_raag) return true;
    found = std::move(d);
    return false;
  };
  search_spanning_trees(g, cap, hooks);
  return found;
}

}  // namespace

DecompositionTree iterated_decomposition(SimplicialGraph const& g, std::optional<SpanningTree> tree,
                                         std::size_t tree_cap, std::size_t move_budget) {
  if (!tree) {
    auto fam = in_family_g(g, tree_cap, move_budget);
    if (fam.status != Verdict::yes) {
      if (fam.reason == "graph is favourable")
        throw PreconditionError("graph is favourable; its group is the RAAG of chang_raag");
      throw PreconditionError("graph is not in the family G: " + fam.reason);
    }
    auto first = decompose_along(g, *fam.witness);
    if (first.base_is_raag) return first;
    // another tree with as few unfavourable triangles may leave a RAAG base
    if (auto better = raag_base_tree(g, count_unfavourable(g, *fam.witness).unfavourable, tree_cap))
      return *better;
    return first;
  } else {
    if (tree->vertex_count() != g.vertex_count()) throw PreconditionError("tree does not span the graph");
    auto sc = is_simply_connected(build_flag_complex(g), move_budget);
    if (sc.status != Verdict::yes)
      throw PreconditionError(std::string("flag complex simple connectivity: ") + to_string(sc.status));
    auto counts = count_unfavourable(g, *tree);
    if (counts.unfavourable_internal > 0)
      throw PreconditionError("tree leaves an internal triangle unfavourable");
    if (counts.unfavourable == 0)
      throw PreconditionError("every triangle is favourable for the tree; its group is the RAAG of chang_raag");
  }
  return decompose_along(g, *tree);
}

FlatPresentation flatten_presentation(DecompositionTree const& d) {
  std::map<Edge, std::uint32_t> where;
  bool all_yes = true;
  std::function<FlatPresentation(std::size_t, std::map<Edge, std::uint32_t>&)> go =
      [&](std::size_t id, std::map<Edge, std::uint32_t>& map) -> FlatPresentation {
    auto const& node = d.nodes[id];
    FlatPresentation out;
    if (node.kind == DecompositionNode::Kind::leaf) {
      out.presentation = node.presentation;
      all_yes = all_yes && node.presentation.hypothesis == Verdict::yes;
      for (std::uint32_t i = 0; i < node.presentation.generator_count(); ++i) {
        out.origin.emplace_back(id, i);
        if (auto s = node.presentation.generators[i].source) map.emplace(*s, i);
      }
      return out;
    }
    std::map<Edge, std::uint32_t> lmap, rmap;
    auto left = go(node.left, lmap);
    auto right = go(node.right, rmap);
    auto const shift = static_cast<std::uint32_t>(left.presentation.generator_count());
    out = std::move(left);
    std::vector<std::optional<std::uint32_t>> shifted(right.presentation.generator_count());
    for (std::uint32_t i = 0; i < shifted.size(); ++i) shifted[i] = i + shift;
    for (auto& g : right.presentation.generators) out.presentation.generators.push_back(std::move(g));
    for (auto const& r : right.presentation.relators) out.presentation.relators.push_back(rename(r, shifted));
    out.origin.insert(out.origin.end(), right.origin.begin(), right.origin.end());

    auto translate = [&](Word const& w, std::map<Edge, std::uint32_t> const& m, std::uint32_t offset) {
      std::vector<Letter> letters;
      for (auto l : w.letters()) {
        auto it = m.find(d.root_edges.at(l.gen));
        if (it == m.end()) throw std::logic_error("amalgam word uses a generator outside its factor");
        letters.push_back({it->second + offset, l.exp});
      }
      return Word(std::move(letters));
    };
    out.presentation.relators.push_back(translate(node.word_left, lmap, 0) *
                                        translate(node.word_right, rmap, shift).inverse());
    map = std::move(lmap);
    for (auto [e, i] : rmap) map.emplace(e, i + shift);
    return out;
  };
  auto flat = go(d.root, where);
  if (d.nodes[d.root].kind == DecompositionNode::Kind::amalgam) {
    flat.presentation.kind = PresentationKind::generic;
    flat.presentation.hypothesis = all_yes ? Verdict::yes : Verdict::unknown;
  }
  return flat;
}

std::string describe(DecompositionTree const& d, bool detailed) {
  std::function<std::string(std::size_t, std::size_t)> go = [&](std::size_t id, std::size_t step) -> std::string {
    auto const& node = d.nodes[id];
    if (node.kind == DecompositionNode::Kind::leaf) {
      if (node.presentation.kind == PresentationKind::z_squared)
        return detailed ? "H_△" + std::to_string(step + 1) : "Z^2";
      if (d.steps.empty()) return node.presentation.kind == PresentationKind::raag ? "A_Γ" : "G";
      return (d.base_is_raag ? "A_Γ" : "H_Γ") + std::to_string(d.steps.size());
    }
    auto sep = detailed ? " *_<" + edge_generator_name(node.word_right[0].gen) + "> " : std::string(" *_Z ");
    return "(" + go(node.left, node.step) + sep + go(node.right, node.step) + ")";
  };
  return go(d.root, 0);
}

}  // namespace bbgroups
