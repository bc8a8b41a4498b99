#include "bbgroups/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace bbgroups {

Edge make_edge(VertexId a, VertexId b) {
  if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Triangle make_triangle(VertexId x, VertexId y, VertexId z) {
  std::array<VertexId, 3> v{x, y, z};
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2]) throw std::invalid_argument("degenerate triangle");
  return {v[0], v[1], v[2]};
}

SimplicialGraph::SimplicialGraph(std::size_t vertex_count, std::vector<Edge> edges,
                                 std::vector<std::string> labels)
    : n_(vertex_count), labels_(std::move(labels)) {
  for (auto& e : edges) {
    if (e.lo >= n_ || e.hi >= n_) throw std::invalid_argument("edge endpoint out of range");
    e = make_edge(e.lo, e.hi);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);
  if (labels_.size() > n_) throw std::invalid_argument("more labels than vertices");
  for (std::size_t v = labels_.size(); v < n_; ++v) labels_.push_back(std::to_string(v));
  adj_.assign(n_, {});
  matrix_.assign(n_ * n_, 0);
  for (auto e : edges_) {
    adj_[e.lo].push_back(e.hi);
    adj_[e.hi].push_back(e.lo);
    matrix_[std::size_t{e.lo} * n_ + e.hi] = 1;
    matrix_[std::size_t{e.hi} * n_ + e.lo] = 1;
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::optional<std::size_t> SimplicialGraph::edge_index(Edge e) const {
  if (e.lo > e.hi) std::swap(e.lo, e.hi);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::optional<VertexId> SimplicialGraph::find_label(std::string_view name) const {
  for (std::size_t v = 0; v < n_; ++v)
    if (labels_[v] == name) return static_cast<VertexId>(v);
  return std::nullopt;
}

std::vector<std::vector<VertexId>> SimplicialGraph::components() const {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(n_, 0);
  for (VertexId s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (auto w : adj_[comp[i]])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool SimplicialGraph::is_connected() const { return n_ > 0 && components().size() == 1; }

bool same_edges(SimplicialGraph const& x, SimplicialGraph const& y) {
  return x.vertex_count() == y.vertex_count() && x.edges() == y.edges();
}

std::optional<VertexId> InducedSubgraph::from_parent(VertexId v) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), v);
  if (it == to_parent.end() || *it != v) return std::nullopt;
  return static_cast<VertexId>(it - to_parent.begin());
}

InducedSubgraph induced_subgraph(SimplicialGraph const& g, std::vector<VertexId> verts) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<long> index(g.vertex_count(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i] >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    index[verts[i]] = static_cast<long>(i);
    labels.push_back(g.label(verts[i]));
  }
  std::vector<Edge> edges;
  for (auto e : g.edges())
    if (index[e.lo] >= 0 && index[e.hi] >= 0)
      edges.push_back({static_cast<VertexId>(index[e.lo]), static_cast<VertexId>(index[e.hi])});
  return {SimplicialGraph(verts.size(), std::move(edges), std::move(labels)), std::move(verts)};
}

std::vector<Triangle> triangles_of(SimplicialGraph const& g) {
  std::vector<Triangle> out;
  for (auto e : g.edges())
    for (auto c : g.neighbours(e.hi))
      if (c > e.hi && g.adjacent(e.lo, c)) out.push_back({e.lo, e.hi, c});
  std::sort(out.begin(), out.end());
  return out;
}

InducedSubgraph edge_set_complement(SimplicialGraph const& g, Triangle const& t) {
  std::vector<VertexId> survivors;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    bool outside = false;
    for (auto w : g.neighbours(v))
      if (!t.contains(make_edge(v, w))) {
        outside = true;
        break;
      }
    if (outside) survivors.push_back(v);
  }
  return induced_subgraph(g, std::move(survivors));
}

Subgraph Subgraph::whole(SimplicialGraph const& g) {
  Subgraph s{&g, {}, g.edges()};
  s.vertices.resize(g.vertex_count());
  std::iota(s.vertices.begin(), s.vertices.end(), VertexId{0});
  return s;
}

Subgraph Subgraph::of_triangle(SimplicialGraph const& g, Triangle const& t) {
  auto e = t.edges();
  std::vector<Edge> edges(e.begin(), e.end());
  std::sort(edges.begin(), edges.end());
  return {&g, {t.a, t.b, t.c}, std::move(edges)};
}

Subgraph Subgraph::of_induced(SimplicialGraph const& host, InducedSubgraph const& sub) {
  Subgraph s{&host, sub.to_parent, {}};
  for (auto e : sub.graph.edges()) s.edges.push_back(sub.edge_to_parent(e));
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

Subgraph intersect(Subgraph const& x, Subgraph const& y) {
  if (x.host == nullptr || x.host != y.host)
    throw std::invalid_argument("intersect: subgraphs of different hosts");
  Subgraph out{x.host, {}, {}};
  std::set_intersection(x.vertices.begin(), x.vertices.end(), y.vertices.begin(),
                        y.vertices.end(), std::back_inserter(out.vertices));
  std::set_intersection(x.edges.begin(), x.edges.end(), y.edges.begin(), y.edges.end(),
                        std::back_inserter(out.edges));
  return out;
}

namespace {

struct DisjointSets {
  std::vector<VertexId> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), VertexId{0});
  }
  VertexId find(VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

SpanningTree SpanningTree::make(SimplicialGraph const& host, std::vector<Edge> edges) {
  auto const n = host.vertex_count();
  if (n == 0) throw PreconditionError("spanning tree of the empty graph");
  for (auto& e : edges) {
    e = make_edge(e.lo, e.hi);
    if (!host.has_edge(e)) throw PreconditionError("tree edge not in graph");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.size() != n - 1)
    throw PreconditionError("spanning tree needs " + std::to_string(n - 1) + " edges, got " +
                            std::to_string(edges.size()));
  DisjointSets ds(n);
  for (auto e : edges)
    if (!ds.unite(e.lo, e.hi)) throw PreconditionError("tree edges contain a cycle");
  SpanningTree t;
  t.n_ = n;
  t.edges_ = std::move(edges);
  t.adj_.assign(n, {});
  for (auto e : t.edges_) {
    t.adj_[e.lo].push_back(e.hi);
    t.adj_[e.hi].push_back(e.lo);
  }
  return t;
}

bool SpanningTree::contains(Edge e) const {
  if (e.lo > e.hi) std::swap(e.lo, e.hi);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<VertexId> SpanningTree::path(VertexId u, VertexId v) const {
  std::vector<long> prev(n_, -1);
  prev[u] = u;
  std::queue<VertexId> q;
  q.push(u);
  while (!q.empty()) {
    auto x = q.front();
    q.pop();
    if (x == v) break;
    for (auto y : adj_[x])
      if (prev[y] < 0) {
        prev[y] = x;
        q.push(y);
      }
  }
  std::vector<VertexId> out{v};
  while (out.back() != u) out.push_back(static_cast<VertexId>(prev[out.back()]));
  std::reverse(out.begin(), out.end());
  return out;
}

SpanningTree restrict_tree(SpanningTree const& t, InducedSubgraph const& sub) {
  std::vector<Edge> edges;
  for (auto e : t.edges()) {
    auto a = sub.from_parent(e.lo);
    auto b = sub.from_parent(e.hi);
    if (a && b) edges.push_back(make_edge(*a, *b));
  }
  return SpanningTree::make(sub.graph, std::move(edges));
}

SpanningTree first_spanning_tree(SimplicialGraph const& g) {
  if (!g.is_connected()) throw PreconditionError("graph is not connected");
  DisjointSets ds(g.vertex_count());
  std::vector<Edge> edges;
  for (auto e : g.edges())
    if (ds.unite(e.lo, e.hi)) edges.push_back(e);
  return SpanningTree::make(g, std::move(edges));
}

namespace {

class TreeSearch {
 public:
  TreeSearch(SimplicialGraph const& g, std::size_t cap, TreeSearchHooks const& hooks)
      : g_(g), cap_(cap), hooks_(hooks), in_tree_(g.edge_count(), 0) {}

  TreeEnumeration run() {
    std::vector<VertexId> comp(g_.vertex_count());
    std::iota(comp.begin(), comp.end(), VertexId{0});
    recurse(0, 0, comp);
    return result_;
  }

 private:
  bool recurse(std::size_t i, std::size_t included, std::vector<VertexId> const& comp) {
    auto const n = g_.vertex_count();
    auto const m = g_.edge_count();
    if (included + 1 == n) {
      if (result_.emitted == cap_) {
        result_.overflow = true;
        return false;
      }
      std::fill(in_tree_.begin() + static_cast<long>(i), in_tree_.end(), 0);
      ++result_.emitted;
      return !hooks_.complete || hooks_.complete(in_tree_);
    }
    if (i == m) return true;
    if (hooks_.partial && !hooks_.partial(i, in_tree_)) return true;

    auto const e = g_.edge(i);
    if (comp[e.lo] != comp[e.hi]) {
      auto merged = comp;
      auto from = comp[e.hi], to = comp[e.lo];
      if (from < to) std::swap(from, to);
      for (auto& c : merged)
        if (c == from) c = to;
      in_tree_[i] = 1;
      if (!recurse(i + 1, included + 1, merged)) return false;
    }
    in_tree_[i] = 0;
    if (still_connectable(i, comp)) return recurse(i + 1, included, comp);
    return true;
  }

  // Can the included edges plus undecided edges i+1.. still span the graph?
  bool still_connectable(std::size_t i, std::vector<VertexId> const& comp) const {
    DisjointSets ds(g_.vertex_count());
    for (VertexId v = 0; v < g_.vertex_count(); ++v) ds.unite(v, comp[v]);
    std::size_t pieces = 0;
    for (VertexId v = 0; v < g_.vertex_count(); ++v)
      if (comp[v] == v) ++pieces;
    for (std::size_t j = i + 1; j < g_.edge_count() && pieces > 1; ++j)
      if (ds.unite(g_.edge(j).lo, g_.edge(j).hi)) --pieces;
    return pieces == 1;
  }

  SimplicialGraph const& g_;
  std::size_t cap_;
  TreeSearchHooks const& hooks_;
  std::vector<char> in_tree_;
  TreeEnumeration result_;
};

}  // namespace

TreeEnumeration search_spanning_trees(SimplicialGraph const& g, std::size_t cap,
                                      TreeSearchHooks const& hooks) {
  if (!g.is_connected()) throw PreconditionError("graph is not connected");
  if (cap == 0) throw std::invalid_argument("tree cap must be at least 1");
  return TreeSearch(g, cap, hooks).run();
}

TreeEnumeration enumerate_spanning_trees(SimplicialGraph const& g, std::size_t cap,
                                         std::function<bool(SpanningTree const&)> const& visit) {
  TreeSearchHooks hooks;
  hooks.complete = [&](std::vector<char> const& in_tree) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < in_tree.size(); ++i)
      if (in_tree[i]) edges.push_back(g.edge(i));
    return visit(SpanningTree::make(g, std::move(edges)));
  };
  return search_spanning_trees(g, cap, hooks);
}

TreeEnumeration count_spanning_trees(SimplicialGraph const& g, std::size_t cap) {
  return search_spanning_trees(g, cap, TreeSearchHooks{});
}

BigInt kirchhoff_tree_count(SimplicialGraph const& g) {
  auto const n = g.vertex_count();
  if (n == 0) return 0;
  if (n == 1) return 1;
  auto const k = n - 1;
  std::vector<std::vector<BigInt>> a(k, std::vector<BigInt>(k, 0));
  for (std::size_t v = 0; v < k; ++v) {
    a[v][v] = static_cast<long>(g.degree(static_cast<VertexId>(v)));
    for (auto w : g.neighbours(static_cast<VertexId>(v)))
      if (w < k) a[v][w] = -1;
  }
  // Bareiss fraction-free elimination.
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p < k; ++p) {
    if (a[p][p] == 0) {
      std::size_t r = p + 1;
      while (r < k && a[r][p] == 0) ++r;
      if (r == k) return 0;
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
      a[i][p] = 0;
    }
    prev = a[p][p];
  }
  return sign * a[k - 1][k - 1];
}

std::optional<VertexId> dominating_vertex(SimplicialGraph const& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) + 1 == g.vertex_count()) return v;
  return std::nullopt;
}

namespace {

// Colour refinement run jointly on both graphs so colour ids are comparable.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colours(
    SimplicialGraph const& x, SimplicialGraph const& y) {
  std::vector<std::size_t> cx(x.vertex_count()), cy(y.vertex_count());
  for (VertexId v = 0; v < x.vertex_count(); ++v) cx[v] = x.degree(v);
  for (VertexId v = 0; v < y.vertex_count(); ++v) cy[v] = y.degree(v);
  std::size_t classes = 0;
  for (;;) {
    using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
    std::map<Signature, std::size_t> ids;
    auto signature = [](SimplicialGraph const& g, std::vector<std::size_t> const& c, VertexId v) {
      Signature s{c[v], {}};
      for (auto w : g.neighbours(v)) s.second.push_back(c[w]);
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::vector<Signature> sx, sy;
    for (VertexId v = 0; v < x.vertex_count(); ++v) sx.push_back(signature(x, cx, v));
    for (VertexId v = 0; v < y.vertex_count(); ++v) sy.push_back(signature(y, cy, v));
    for (auto const& s : sx) ids.emplace(s, 0);
    for (auto const& s : sy) ids.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (VertexId v = 0; v < x.vertex_count(); ++v) cx[v] = ids[sx[v]];
    for (VertexId v = 0; v < y.vertex_count(); ++v) cy[v] = ids[sy[v]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {cx, cy};
}

}  // namespace

std::optional<std::vector<VertexId>> graphs_isomorphic(SimplicialGraph const& x,
                                                       SimplicialGraph const& y) {
  auto const n = x.vertex_count();
  if (n != y.vertex_count() || x.edge_count() != y.edge_count()) return std::nullopt;
  auto [cx, cy] = refine_colours(x, y);
  auto hx = cx, hy = cy;
  std::sort(hx.begin(), hx.end());
  std::sort(hy.begin(), hy.end());
  if (hx != hy) return std::nullopt;

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::map<std::size_t, std::size_t> class_size;
  for (auto c : cx) ++class_size[c];
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return class_size[cx[a]] < class_size[cx[b]]; });

  std::vector<long> phi(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == n) return true;
    auto v = order[k];
    for (VertexId w = 0; w < n; ++w) {
      if (used[w] || cy[w] != cx[v]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        auto u = order[j];
        ok = x.adjacent(u, v) == y.adjacent(static_cast<VertexId>(phi[u]), w);
      }
      if (!ok) continue;
      phi[v] = w;
      used[w] = 1;
      if (extend(k + 1)) return true;
      used[w] = 0;
      phi[v] = -1;
    }
    return false;
  };
  if (n > 0 && !extend(0)) return std::nullopt;
  std::vector<VertexId> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = static_cast<VertexId>(phi[v]);
  return out;
}

SimplicialGraph join(SimplicialGraph const& x, SimplicialGraph const& y) {
  auto const nx = static_cast<VertexId>(x.vertex_count());
  std::vector<Edge> edges = x.edges();
  for (auto e : y.edges()) edges.push_back({e.lo + nx, e.hi + nx});
  for (VertexId a = 0; a < nx; ++a)
    for (VertexId b = 0; b < y.vertex_count(); ++b) edges.push_back({a, b + nx});
  auto labels = x.labels();
  labels.insert(labels.end(), y.labels().begin(), y.labels().end());
  return SimplicialGraph(x.vertex_count() + y.vertex_count(), std::move(edges), std::move(labels));
}

SimplicialGraph graph_union(SimplicialGraph const& x, SimplicialGraph const& y,
                            std::span<std::pair<VertexId, VertexId> const> overlap) {
  std::vector<long> image(y.vertex_count(), -1);
  std::vector<char> taken(x.vertex_count(), 0);
  for (auto [vx, vy] : overlap) {
    if (vx >= x.vertex_count() || vy >= y.vertex_count())
      throw std::invalid_argument("overlap vertex out of range");
    if (image[vy] >= 0 || taken[vx]) throw std::invalid_argument("overlap map is not injective");
    image[vy] = vx;
    taken[vx] = 1;
  }
  auto labels = x.labels();
  auto next = static_cast<long>(x.vertex_count());
  for (VertexId v = 0; v < y.vertex_count(); ++v)
    if (image[v] < 0) {
      image[v] = next++;
      labels.push_back(y.label(v));
    }
  std::vector<Edge> edges = x.edges();
  for (auto e : y.edges()) {
    auto f = make_edge(static_cast<VertexId>(image[e.lo]), static_cast<VertexId>(image[e.hi]));
    if (!x.has_edge(f)) edges.push_back(f);
  }
  return SimplicialGraph(static_cast<std::size_t>(next), std::move(edges), std::move(labels));
}

SimplicialGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) edges.push_back({a, b});
  return SimplicialGraph(n, std::move(edges));
}

SimplicialGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId a = 0; a + 1 < n; ++a) edges.push_back({a, a + 1});
  return SimplicialGraph(n, std::move(edges));
}

SimplicialGraph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId a = 0; a + 1 < n; ++a) edges.push_back({a, a + 1});
  if (n >= 3) edges.push_back({0, static_cast<VertexId>(n - 1)});
  return SimplicialGraph(n, std::move(edges));
}

SimplicialGraph empty_graph(std::size_t n) { return SimplicialGraph(n, {}); }

SimplicialGraph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId b = 1; b < n; ++b) edges.push_back({0, b});
  return SimplicialGraph(n, std::move(edges));
}

}  // namespace bbgroups
