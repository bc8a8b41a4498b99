#include "bbgroups/classify.hpp"

#include <algorithm>
#include <set>

namespace bbgroups {

char const* to_string(ComplementIntersection c) {
  switch (c) {
    case ComplementIntersection::empty: return "empty";
    case ComplementIntersection::one_vertex: return "one_vertex";
    case ComplementIntersection::one_edge: return "one_edge";
    case ComplementIntersection::larger: return "larger";
  }
  return "larger";
}

ComplementIntersection complement_intersection(SimplicialGraph const& g, Triangle const& t) {
  auto complement = edge_set_complement(g, t);
  auto common = intersect(Subgraph::of_triangle(g, t), Subgraph::of_induced(g, complement));
  switch (common.vertices.size()) {
    case 0: return ComplementIntersection::empty;
    case 1: return ComplementIntersection::one_vertex;
    case 2: return common.edges.size() == 1 ? ComplementIntersection::one_edge : ComplementIntersection::larger;
    default: return ComplementIntersection::larger;
  }
}

bool is_internal(SimplicialGraph const& g, Triangle const& t) {
  return complement_intersection(g, t) == ComplementIntersection::larger;
}

TriangleReport classify_triangle(SimplicialGraph const& g, SpanningTree const& t, Triangle const& tri) {
  TriangleReport r;
  r.triangle = tri;
  for (auto e : tri.edges())
    if (t.contains(e)) ++r.tree_edge_count;
  if (r.tree_edge_count == 3) throw std::logic_error("spanning tree contains a triangle");
  r.favourable = r.tree_edge_count != 1;
  r.complement = complement_intersection(g, tri);
  r.internal = r.complement == ComplementIntersection::larger;
  return r;
}

std::vector<TriangleReport> classify_triangles(SimplicialGraph const& g, SpanningTree const& t) {
  std::vector<TriangleReport> out;
  for (auto const& tri : triangles_of(g)) out.push_back(classify_triangle(g, t, tri));
  return out;
}

TreeCounts count_unfavourable(SimplicialGraph const& g, SpanningTree const& t) {
  TreeCounts c;
  for (auto const& r : classify_triangles(g, t)) {
    if (r.favourable) continue;
    ++c.unfavourable;
    if (r.internal) ++c.unfavourable_internal;
  }
  return c;
}

namespace {

struct TriangleInfo {
  std::array<std::size_t, 3> edge;
  std::size_t last = 0;  // largest edge index
  bool internal = false;
};

TreeSearchResult branch_and_bound(SimplicialGraph const& g, TreeObjective objective, std::size_t cap,
                                  std::optional<std::size_t> strict_bound) {
  std::vector<TriangleInfo> info;
  for (auto const& t : triangles_of(g)) {
    TriangleInfo ti;
    auto e = t.edges();
    for (int k = 0; k < 3; ++k) ti.edge[k] = *g.edge_index(e[k]);
    ti.last = *std::max_element(ti.edge.begin(), ti.edge.end());
    ti.internal = is_internal(g, t);
    info.push_back(ti);
  }

  auto counts = [&](std::size_t depth, std::vector<char> const& in_tree) {
    TreeCounts c;
    for (auto const& ti : info) {
      if (ti.last >= depth) continue;
      int k = in_tree[ti.edge[0]] + in_tree[ti.edge[1]] + in_tree[ti.edge[2]];
      if (k != 1) continue;
      ++c.unfavourable;
      if (ti.internal) ++c.unfavourable_internal;
    }
    return c;
  };
  auto score = [&](TreeCounts const& c) {
    return objective == TreeObjective::minimize_internal_unfavourable ? c.unfavourable_internal
                                                                      : c.unfavourable;
  };

  TreeSearchResult res;
  std::optional<std::size_t> bound = strict_bound;  // only scores < bound are accepted
  std::vector<char> best;
  TreeCounts best_counts;

  TreeSearchHooks hooks;
  hooks.partial = [&](std::size_t depth, std::vector<char> const& in_tree) {
    auto c = counts(depth, in_tree);
    if (objective == TreeObjective::forbid_internal_unfavourable && c.unfavourable_internal > 0) return false;
    return !bound || score(c) < *bound;
  };
  hooks.complete = [&](std::vector<char> const& in_tree) {
    auto c = counts(g.edge_count(), in_tree);
    if (objective == TreeObjective::forbid_internal_unfavourable && c.unfavourable_internal > 0) return true;
    if (bound && score(c) >= *bound) return true;
    best = in_tree;
    best_counts = c;
    bound = score(c);
    return *bound > 0;
  };
  auto run = search_spanning_trees(g, cap, hooks);
  res.trees_visited = run.emitted;
  res.exhaustive = !run.overflow;
  if (!best.empty()) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < best.size(); ++i)
      if (best[i]) edges.push_back(g.edge(i));
    res.best_tree = SpanningTree::make(g, std::move(edges));
    res.unfavourable_count = best_counts.unfavourable;
    res.unfavourable_internal_count = best_counts.unfavourable_internal;
  }
  return res;
}

}  // namespace

TreeSearchResult optimize_spanning_tree(SimplicialGraph const& g, TreeObjective objective, std::size_t cap) {
  return branch_and_bound(g, objective, cap, std::nullopt);
}

FavourableResult is_favourable_graph(SimplicialGraph const& g, std::size_t cap) {
  auto r = branch_and_bound(g, TreeObjective::minimize_unfavourable, cap, std::size_t{1});
  return {r.best_tree, r.exhaustive};
}

FamilyVerdict in_family_g(SimplicialGraph const& g, std::size_t tree_cap, std::size_t move_budget) {
  FamilyVerdict v;
  if (!g.is_connected()) {
    v.status = Verdict::no;
    v.reason = "graph is not connected";
    return v;
  }
  v.simply_connected = is_simply_connected(build_flag_complex(g), move_budget);
  if (v.simply_connected.status == Verdict::no) {
    v.status = Verdict::no;
    v.reason = "flag complex is not simply connected";
    return v;
  }
  if (v.simply_connected.status == Verdict::unknown) {
    v.reason = "simple connectivity undecided: " + v.simply_connected.evidence;
    return v;
  }
  auto fav = is_favourable_graph(g, tree_cap);
  if (fav.witness) {
    v.status = Verdict::no;
    v.reason = "graph is favourable";
    return v;
  }
  if (!fav.exhaustive) {
    v.reason = "no favourable tree among the first " + std::to_string(tree_cap) + " trees";
    return v;
  }
  v.search = optimize_spanning_tree(g, TreeObjective::forbid_internal_unfavourable, tree_cap);
  if (v.search.best_tree) {
    v.status = Verdict::yes;
    v.witness = v.search.best_tree;
    v.reason = "unfavourable; witness tree has " + std::to_string(v.search.unfavourable_count) +
               " unfavourable triangles, none internal";
  } else if (v.search.exhaustive) {
    v.status = Verdict::no;
    v.reason = "every spanning tree leaves an internal triangle unfavourable";
  } else {
    v.reason = "no suitable tree among the first " + std::to_string(tree_cap) + " trees";
  }
  return v;
}

namespace {

std::size_t common_alive_neighbours(SimplicialGraph const& g, std::vector<char> const& alive, VertexId a,
                                    VertexId b, VertexId skip) {
  std::size_t k = 0;
  for (auto w : g.neighbours(a))
    if (w != skip && alive[w] && g.adjacent(w, b)) ++k;
  return k;
}

std::size_t alive_degree(SimplicialGraph const& g, std::vector<char> const& alive, VertexId v) {
  return static_cast<std::size_t>(
      std::count_if(g.neighbours(v).begin(), g.neighbours(v).end(), [&](VertexId w) { return alive[w] != 0; }));
}

}  // namespace

SimplicialGraph replay_special_build(SimplicialGraph const& like, SpecialBuild const& build) {
  auto const n = like.vertex_count();
  std::vector<char> present(n, 0);
  std::set<Edge> edges;
  for (auto e : build.seed.edges()) edges.insert(e);
  for (auto v : build.seed.vertices()) present[v] = 1;
  auto triangles_on = [&](Edge e) {
    std::size_t k = 0;
    for (VertexId w = 0; w < n; ++w)
      if (present[w] && w != e.lo && w != e.hi && edges.contains(make_edge(e.lo, w)) &&
          edges.contains(make_edge(e.hi, w)))
        ++k;
    return k;
  };
  for (auto const& ear : build.ears) {
    if (ear.apex >= n || present[ear.apex]) throw std::invalid_argument("ear apex already present");
    if (!edges.contains(ear.base) || triangles_on(ear.base) != 1)
      throw std::invalid_argument("ear glued along a non-boundary edge");
    present[ear.apex] = 1;
    edges.insert(make_edge(ear.apex, ear.base.lo));
    edges.insert(make_edge(ear.apex, ear.base.hi));
  }
  return SimplicialGraph(n, std::vector<Edge>(edges.begin(), edges.end()), like.labels());
}

std::optional<SpecialBuild> recognize_special_triangulation(SimplicialGraph const& g) {
  auto const n = g.vertex_count();
  if (n < 3 || g.edge_count() != 2 * n - 3 || !g.is_connected()) return std::nullopt;
  std::vector<char> alive(n, 1);
  std::vector<Ear> peeled;
  for (std::size_t left = n; left > 3; --left) {
    std::optional<Ear> ear;
    for (VertexId v = 0; v < n && !ear; ++v) {
      if (!alive[v] || alive_degree(g, alive, v) != 2) continue;
      std::vector<VertexId> nb;
      for (auto w : g.neighbours(v))
        if (alive[w]) nb.push_back(w);
      if (!g.adjacent(nb[0], nb[1])) continue;
      if (common_alive_neighbours(g, alive, nb[0], nb[1], v) != 1) continue;
      ear = Ear{v, make_edge(nb[0], nb[1])};
    }
    if (!ear) return std::nullopt;
    alive[ear->apex] = 0;
    peeled.push_back(*ear);
  }
  std::vector<VertexId> rest;
  for (VertexId v = 0; v < n; ++v)
    if (alive[v]) rest.push_back(v);
  if (!g.adjacent(rest[0], rest[1]) || !g.adjacent(rest[1], rest[2]) || !g.adjacent(rest[0], rest[2]))
    return std::nullopt;
  SpecialBuild build{Triangle{rest[0], rest[1], rest[2]}, {peeled.rbegin(), peeled.rend()}};
  try {
    if (!same_edges(replay_special_build(g, build), g)) return std::nullopt;
  } catch (std::invalid_argument const&) {
    return std::nullopt;
  }
  return build;
}

std::optional<ExtraSpecialBuild> recognize_extra_special_triangulation(SimplicialGraph const& g) {
  auto const n = g.vertex_count();
  std::vector<VertexId> apexes, core;
  for (VertexId v = 0; v < n; ++v) {
    auto const& nb = g.neighbours(v);
    if (nb.size() == 2 && g.adjacent(nb[0], nb[1]))
      apexes.push_back(v);
    else
      core.push_back(v);
  }
  if (core.size() < 3) return std::nullopt;
  auto sub = induced_subgraph(g, core);
  auto inner = recognize_special_triangulation(sub.graph);
  if (!inner) return std::nullopt;

  // Boundary edges of the core lie in exactly one core triangle.
  std::map<Edge, std::size_t> boundary;
  for (auto e : sub.graph.edges()) {
    std::size_t k = 0;
    for (auto w : sub.graph.neighbours(e.lo))
      if (w != e.hi && sub.graph.adjacent(w, e.hi)) ++k;
    if (k == 1) boundary[sub.edge_to_parent(e)] = 0;
  }
  ExtraSpecialBuild out;
  out.core = core;
  for (auto p : apexes) {
    auto base = make_edge(g.neighbours(p)[0], g.neighbours(p)[1]);
    auto it = boundary.find(base);
    if (it == boundary.end() || it->second != 0) return std::nullopt;
    it->second = 1;
    out.ears.push_back({p, base});
  }
  for (auto const& [e, used] : boundary)
    if (!used) return std::nullopt;

  out.core_build.seed = make_triangle(sub.to_parent[inner->seed.a], sub.to_parent[inner->seed.b],
                                      sub.to_parent[inner->seed.c]);
  for (auto const& ear : inner->ears) out.core_build.ears.push_back({sub.to_parent[ear.apex], sub.edge_to_parent(ear.base)});
  return out;
}

std::optional<SplittingWitness> find_clique_splitting(SimplicialGraph const& g, std::size_t min_clique) {
  auto const complex = build_flag_complex(g);
  auto const n = g.vertex_count();
  for (std::size_t size = std::max<std::size_t>(min_clique, 1); size <= complex.simplices().size(); ++size) {
    for (auto const& clique : complex.simplices()[size - 1]) {
      std::vector<VertexId> rest;
      for (VertexId v = 0; v < n; ++v)
        if (!std::binary_search(clique.begin(), clique.end(), v)) rest.push_back(v);
      if (rest.size() < 2) continue;
      auto sub = induced_subgraph(g, rest);
      auto comps = sub.graph.components();
      if (comps.size() < 2) continue;
      SplittingWitness w;
      w.clique_size = size;
      w.gamma3 = clique;
      w.gamma1 = clique;
      w.gamma2 = clique;
      for (std::size_t c = 0; c < comps.size(); ++c)
        for (auto v : comps[c]) (c == 0 ? w.gamma1 : w.gamma2).push_back(sub.to_parent[v]);
      std::sort(w.gamma1.begin(), w.gamma1.end());
      std::sort(w.gamma2.begin(), w.gamma2.end());
      return w;
    }
  }
  return std::nullopt;
}

bool verify_splitting(SimplicialGraph const& g, SplittingWitness const& w, std::string* why) {
  auto fail = [&](char const* msg) {
    if (why) *why = msg;
    return false;
  };
  std::vector<VertexId> uni, inter;
  std::set_union(w.gamma1.begin(), w.gamma1.end(), w.gamma2.begin(), w.gamma2.end(), std::back_inserter(uni));
  std::set_intersection(w.gamma1.begin(), w.gamma1.end(), w.gamma2.begin(), w.gamma2.end(),
                        std::back_inserter(inter));
  if (uni.size() != g.vertex_count()) return fail("V(Γ1) ∪ V(Γ2) is not V(Γ)");
  if (inter != w.gamma3) return fail("Γ3 is not Γ1 ∩ Γ2");
  if (w.gamma1 == w.gamma2 || w.gamma1 == w.gamma3 || w.gamma2 == w.gamma3) return fail("pieces not pairwise different");
  auto in = [](std::vector<VertexId> const& s, VertexId v) { return std::binary_search(s.begin(), s.end(), v); };
  for (auto e : g.edges()) {
    bool lo1 = in(w.gamma1, e.lo), hi1 = in(w.gamma1, e.hi);
    bool lo2 = in(w.gamma2, e.lo), hi2 = in(w.gamma2, e.hi);
    if (!(lo1 && hi1) && !(lo2 && hi2)) return fail("edge between Γ1 \\ Γ3 and Γ2 \\ Γ3");
  }
  if (!induced_subgraph(g, w.gamma3).graph.is_connected()) return fail("Γ3 is not connected");
  std::vector<VertexId> outside;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!in(w.gamma3, v)) outside.push_back(v);
  if (induced_subgraph(g, outside).graph.components().size() < 2) return fail("Γ3 does not separate");
  if (g.is_connected() && (!induced_subgraph(g, w.gamma1).graph.is_connected() ||
                           !induced_subgraph(g, w.gamma2).graph.is_connected()))
    return fail("Γ1 or Γ2 is not connected");
  if (w.clique_size >= 3) {
    for (std::size_t i = 0; i < w.gamma3.size(); ++i)
      for (std::size_t j = i + 1; j < w.gamma3.size(); ++j)
        if (!g.adjacent(w.gamma3[i], w.gamma3[j])) return fail("Γ3 is not a clique");
  }
  return true;
}

}  // namespace bbgroups
