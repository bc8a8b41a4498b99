// bbtool: command-line front end for the bbgroups library.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bbgroups/bestvina_brady.hpp"
#include "bbgroups/classify.hpp"
#include "bbgroups/complex.hpp"
#include "bbgroups/decompose.hpp"
#include "bbgroups/io.hpp"

using namespace bbgroups;

namespace {

enum Exit { ok = 0, parse_failure = 2, precondition = 3, undecided = 4 };

struct Options {
  std::string file;
  std::string batch;
  std::string input_format = "auto";
  std::size_t budget = kDefaultMoveBudget;
  std::size_t tree_cap = kDefaultTreeCap;
  bool json = false;

  std::string style = "ps";
  std::string tree;
  std::string out_format = "plain";
  bool force = false;

  std::string json_out;

  std::size_t enumerate = 0;
  bool optimize = false;

  bool simply_connected = false;
};

GraphDocument load(Options const& o, std::string const& path) {
  auto fmt = GraphFormat::edge_list;
  if (o.input_format == "dot") fmt = GraphFormat::dot;
  if (o.input_format == "auto") {
    auto ext = std::filesystem::path(path).extension();
    if (ext == ".dot" || ext == ".gv") fmt = GraphFormat::dot;
  }
  return read_graph_file(path, fmt);
}

std::optional<SpanningTree> tree_option(Options const& o, SimplicialGraph const& g) {
  if (o.tree.empty()) return std::nullopt;
  return parse_tree_override(o.tree, g);
}

std::string tri_text(SimplicialGraph const& g, Triangle const& t) {
  return "(" + g.label(t.a) + "," + g.label(t.b) + "," + g.label(t.c) + ")";
}

std::string vertex_list(SimplicialGraph const& g, std::vector<VertexId> const& vs) {
  std::string out;
  for (auto v : vs) out += (out.empty() ? "" : " ") + g.label(v);
  return out;
}

void write_presentation(std::ostream& os, GroupPresentation const& p) {
  os << "gens:";
  for (std::size_t i = 0; i < p.generators.size(); ++i) os << (i ? ", " : " ") << p.generators[i].name;
  os << "\nrels:\n";
  for (auto const& r : p.relators) os << "  " << format_relator(r, p) << "\n";
}

int run_check(Options const& o, GraphDocument const& doc, std::ostream& os) {
  auto const& g = doc.graph;
  auto v = is_simply_connected(build_flag_complex(g), o.budget);
  if (o.json) {
    os << simply_connected_to_json(v, g).dump(2) << "\n";
  } else {
    os << "simply connected: " << to_string(v.status) << "\n";
    os << "evidence: " << v.evidence << "\n";
    if (v.collapsed_to_point) os << "collapse moves: " << v.collapse.size() << "\n";
    if (v.h1) os << "H1: " << to_string(*v.h1) << "\n";
  }
  return v.status == Verdict::unknown ? undecided : ok;
}

int run_analyze(Options const& o, GraphDocument const& doc, std::ostream& os) {
  auto const& g = doc.graph;
  os << "graph: " << doc.source << "\n";
  os << "vertices: " << g.vertex_count() << " (" << vertex_list(g, [&] {
    std::vector<VertexId> all(g.vertex_count());
    for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
    return all;
  }()) << ")\n";
  os << "edges: " << g.edge_count() << "\n";
  os << "connected: " << (g.is_connected() ? "yes" : "no") << "\n";
  auto c = build_flag_complex(g);
  os << "flag complex: f = (";
  for (long k = 0; k <= c.dimension(); ++k) os << (k ? ", " : "") << c.count(static_cast<std::size_t>(k));
  os << "), dimension " << c.dimension() << ", euler characteristic " << c.euler_characteristic() << "\n";
  auto triangles = triangles_of(g);
  os << "triangles: " << triangles.size() << "\n";
  for (auto const& t : triangles)
    os << "  " << tri_text(g, t) << " complement " << to_string(complement_intersection(g, t))
       << (is_internal(g, t) ? " internal" : "") << "\n";
  if (!g.is_connected()) {
    os << "family G: no (graph is not connected)\n";
    return ok;
  }
  auto sc = is_simply_connected(c, o.budget);
  os << "simply connected: " << to_string(sc.status) << " (" << sc.evidence << ")\n";
  os << "H1: " << to_string(first_homology(c)) << "\n";
  os << "spanning trees: " << kirchhoff_tree_count(g) << "\n";
  auto fav = is_favourable_graph(g, o.tree_cap);
  os << "favourable: "
     << (fav.witness ? "yes, tree " + edge_names(fav.witness->edges(), g)
                     : std::string(fav.exhaustive ? "no" : "unknown (tree cap reached)"))
     << "\n";
  auto fam = in_family_g(g, o.tree_cap, o.budget);
  os << "family G: " << to_string(fam.status) << " (" << fam.reason << ")\n";
  if (fam.witness) os << "witness tree: " << edge_names(fam.witness->edges(), g) << "\n";
  auto special = recognize_special_triangulation(g);
  os << "special triangulation: " << (special ? "yes, seed " + tri_text(g, special->seed) : std::string("no")) << "\n";
  auto extra = recognize_extra_special_triangulation(g);
  os << "extra-special triangulation: " << (extra ? "yes, core " + vertex_list(g, extra->core) : std::string("no"))
     << "\n";
  auto split = find_clique_splitting(g, 3);
  if (split)
    os << "clique splitting: separator {" << vertex_list(g, split->gamma3) << "}, pieces {"
       << vertex_list(g, split->gamma1) << "} and {" << vertex_list(g, split->gamma2) << "}\n";
  else
    os << "clique splitting: none of size >= 3\n";
  return sc.status == Verdict::unknown || fam.status == Verdict::unknown ? undecided : ok;
}

int run_presentation(Options const& o, GraphDocument const& doc, std::ostream& os, std::ostream& err) {
  auto const& g = doc.graph;
  auto fmt = presentation_format_from_string(o.out_format);
  if (!fmt) throw CLI::ValidationError("--format", "expected plain, cas or json");
  if (!g.is_connected()) throw PreconditionError("graph is not connected");
  auto sc = is_simply_connected(build_flag_complex(g), o.budget);
  if (sc.status == Verdict::no && !o.force)
    throw PreconditionError("flag complex is not simply connected (" + sc.evidence + "); use --force to print anyway");
  GroupPresentation p;
  if (o.style == "dl") {
    p = dicks_leary(g, sc.status);
  } else if (o.style == "ps") {
    auto t = tree_option(o, g);
    p = papadima_suciu(g, t ? *t : first_spanning_tree(g), sc.status);
  } else {
    throw CLI::ValidationError("--style", "expected dl or ps");
  }
  os << emit_presentation(p, *fmt, &g);
  if (sc.status == Verdict::unknown) {
    err << "warning: simple connectivity undecided: " << sc.evidence << "\n";
    return undecided;
  }
  return ok;
}

int run_decompose(Options const& o, GraphDocument const& doc, std::ostream& os) {
  auto const& g = doc.graph;
  if (!g.is_connected()) throw PreconditionError("graph is not connected");
  auto override_tree = tree_option(o, g);
  std::optional<SpanningTree> favourable_tree;
  if (override_tree) {
    if (count_unfavourable(g, *override_tree).unfavourable == 0) favourable_tree = override_tree;
  } else if (is_favourable_graph(g, o.tree_cap).witness) {
    favourable_tree = find_chang_tree(g, o.tree_cap);
    if (!favourable_tree)
      throw PreconditionError("graph is favourable, but no favourable tree has Γ' relators matching the "
                              "Papadima-Suciu presentation");
  }

  nlohmann::json j;
  if (favourable_tree) {
    auto sc = is_simply_connected(build_flag_complex(g), o.budget);
    if (sc.status == Verdict::no) throw PreconditionError("flag complex is not simply connected");
    auto w = chang_raag(g, *favourable_tree);
    if (!chang_round_trip(g, *favourable_tree, w))
      throw PreconditionError("Γ' relators for this tree do not match the Papadima-Suciu presentation");
    os << "favourable: tree " << edge_names(favourable_tree->edges(), g) << "\n";
    os << "H_Γ ≅ A_Γ' with Γ' on " << w.gamma_prime.vertex_count() << " vertices\n";
    os << "Γ' edges:";
    for (auto e : w.gamma_prime.edges()) os << " " << w.gamma_prime.label(e.lo) << "-" << w.gamma_prime.label(e.hi);
    os << "\n";
    write_presentation(os, raag_presentation(w.gamma_prime));
    j["favourable"] = true;
    j["raag"] = raag_witness_to_json(w, g);
    j["presentation"] = presentation_to_json(raag_presentation(w.gamma_prime), nullptr);
    if (sc.status == Verdict::unknown) os << "warning: simple connectivity undecided\n";
  } else {
    auto d = iterated_decomposition(g, override_tree, o.tree_cap, o.budget);
    os << describe(d, false) << "\n";
    os << describe(d, true) << "\n";
    os << "tree: " << edge_names(d.tree->edges(), g) << "\n";
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
      auto const& s = d.steps[i];
      auto const& node = *std::find_if(d.nodes.begin(), d.nodes.end(), [&](auto const& n) {
        return n.kind == DecompositionNode::Kind::amalgam && n.step == i;
      });
      std::vector<Edge> edges(d.root_edges);
      GroupPresentation names;
      for (std::size_t k = 0; k < edges.size(); ++k) names.generators.push_back({edge_generator_name(k), edges[k]});
      os << "peel " << i + 1 << ": " << tri_text(g, s.triangle) << " tree edge "
         << edge_generator_name(*g.edge_index(s.tree_edge)) << ", amalgamated "
         << format_word(node.word_right, names) << " = " << format_word(node.word_left, names) << "\n";
      os << "  complement: " << vertex_list(g, s.complement) << "\n";
    }
    os << "base: A_Γ" << d.steps.size() << " on " << vertex_list(g, d.base_vertices) << "\n";
    write_presentation(os, d.nodes[0].presentation);
    auto flat = flatten_presentation(d);
    os << "abelianization: " << to_string(abelianization(flat.presentation)) << "\n";
    j = decomposition_to_json(d, g);
    j["favourable"] = false;
  }
  if (!o.json_out.empty()) {
    if (o.json_out == "-") {
      os << j.dump(2) << "\n";
    } else {
      std::ofstream f(o.json_out);
      if (!f) throw std::runtime_error("cannot write " + o.json_out);
      f << j.dump(2) << "\n";
    }
  }
  return ok;
}

int run_trees(Options const& o, GraphDocument const& doc, std::ostream& os) {
  auto const& g = doc.graph;
  if (!g.is_connected()) throw PreconditionError("graph is not connected");
  os << "spanning trees: " << kirchhoff_tree_count(g) << " (matrix-tree)\n";
  if (o.enumerate > 0) {
    std::size_t k = 0;
    auto run = enumerate_spanning_trees(g, o.enumerate, [&](SpanningTree const& t) {
      auto c = count_unfavourable(g, t);
      os << "  " << ++k << ": " << edge_names(t.edges(), g) << "  unfavourable " << c.unfavourable
         << ", internal " << c.unfavourable_internal << "\n";
      return true;
    });
    os << "listed: " << run.emitted << (run.overflow ? " (more exist)" : "") << "\n";
  }
  int code = ok;
  if (o.optimize) {
    auto show = [&](char const* what, TreeSearchResult const& r) {
      os << what << ": ";
      if (r.best_tree)
        os << r.unfavourable_count << " unfavourable, " << r.unfavourable_internal_count << " internal; tree "
           << edge_names(r.best_tree->edges(), g);
      else
        os << "no feasible tree";
      os << (r.exhaustive ? "" : " (tree cap reached)") << "\n";
      if (!r.exhaustive) code = undecided;
    };
    auto min_all = optimize_spanning_tree(g, TreeObjective::minimize_unfavourable, o.tree_cap);
    auto min_internal = optimize_spanning_tree(g, TreeObjective::minimize_internal_unfavourable, o.tree_cap);
    show("min unfavourable", min_all);
    show("min unfavourable internal", min_internal);
    show("internal favourable", optimize_spanning_tree(g, TreeObjective::forbid_internal_unfavourable, o.tree_cap));
    auto fam = in_family_g(g, o.tree_cap, o.budget);
    os << "family G: " << to_string(fam.status) << " (" << fam.reason << ")\n";
  }
  return code;
}

int dispatch(std::string const& command, Options const& o, std::string const& path, std::ostream& os,
             std::ostream& err) {
  try {
    auto doc = load(o, path);
    if (command == "analyze") return run_analyze(o, doc, os);
    if (command == "check") return run_check(o, doc, os);
    if (command == "presentation") return run_presentation(o, doc, os, err);
    if (command == "decompose") return run_decompose(o, doc, os);
    return run_trees(o, doc, os);
  } catch (ParseError const& e) {
    err << path << ": parse error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return parse_failure;
  } catch (PreconditionError const& e) {
    err << path << ": " << e.what() << "\n";
    return precondition;
  } catch (std::invalid_argument const& e) {
    err << path << ": " << e.what() << "\n";
    return precondition;
  } catch (std::runtime_error const& e) {
    err << path << ": " << e.what() << "\n";
    return parse_failure;
  }
}

int run_batch(std::string const& command, Options const& o) {
  std::vector<std::string> files;
  for (auto const& entry : std::filesystem::directory_iterator(o.batch))
    if (entry.is_regular_file()) files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  struct Result {
    std::string out, err;
    int code;
  };
  std::vector<std::future<Result>> jobs;
  for (auto const& f : files)
    jobs.push_back(std::async(std::launch::async, [&, f] {
      std::ostringstream out, err;
      int code = dispatch(command, o, f, out, err);
      return Result{out.str(), err.str(), code};
    }));
  int worst = ok;
  for (std::size_t i = 0; i < files.size(); ++i) {
    auto r = jobs[i].get();
    std::cout << "== " << std::filesystem::path(files[i]).filename().string() << " ==\n" << r.out;
    std::cerr << r.err;
    worst = std::max(worst, r.code);
  }
  return worst;
}

std::size_t env_budget(std::size_t fallback) {
  if (char const* s = std::getenv("BB_BUDGET")) {
    try {
      return static_cast<std::size_t>(std::stoull(s));
    } catch (std::exception const&) {
      std::cerr << "warning: ignoring malformed BB_BUDGET='" << s << "'\n";
    }
  }
  return fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bestvina-Brady groups of graphs: presentations, simple connectivity, decompositions"};
  app.require_subcommand(1);
  Options o;
  o.budget = env_budget(kDefaultMoveBudget);
  o.tree_cap = env_budget(kDefaultTreeCap);

  auto common = [&](CLI::App* sub, bool batch) {
    auto* file = sub->add_option("file", o.file, "graph file");
    if (batch) {
      auto* b = sub->add_option("--batch", o.batch, "process every file in a directory");
      file->excludes(b);
    }
    sub->add_option("--input-format", o.input_format, "edges, dot or auto (by extension)")
        ->check(CLI::IsMember({"auto", "edges", "dot"}));
    sub->add_option("--budget", o.budget, "move budget for simple connectivity (default BB_BUDGET or 100000)");
    sub->add_option("--tree-cap", o.tree_cap, "spanning-tree search cap (default BB_BUDGET or 1000000)");
  };

  auto* analyze = app.add_subcommand("analyze", "full report");
  common(analyze, true);

  auto* check = app.add_subcommand("check", "simple connectivity of the flag complex");
  common(check, true);
  check->add_flag("--simply-connected", o.simply_connected, "run the simple-connectivity check (default)");
  check->add_flag("--json", o.json, "JSON verdict");

  auto* presentation = app.add_subcommand("presentation", "Dicks-Leary or Papadima-Suciu presentation");
  common(presentation, false);
  presentation->add_option("--style", o.style, "dl or ps")->check(CLI::IsMember({"dl", "ps"}));
  presentation->add_option("--tree", o.tree, "spanning tree as e<k> or u-v items, comma separated");
  presentation->add_option("--format", o.out_format, "plain, cas or json")
      ->check(CLI::IsMember({"plain", "cas", "json"}));
  presentation->add_flag("--force", o.force, "print even when the flag complex is not simply connected");

  auto* decompose = app.add_subcommand("decompose", "RAAG or iterated amalgam decomposition");
  common(decompose, false);
  decompose->add_option("--tree", o.tree, "witness tree override");
  decompose->add_option("--json", o.json_out, "write the JSON form to a file ('-' for stdout)");

  auto* trees = app.add_subcommand("trees", "spanning-tree statistics");
  common(trees, true);
  trees->add_option("--enumerate", o.enumerate, "list the first N trees in lexicographic order");
  trees->add_flag("--optimize", o.optimize, "optimal trees for the unfavourable counts");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e);
  }

  auto* sub = app.get_subcommands().front();
  auto const command = sub->get_name();
  if (!o.batch.empty()) return run_batch(command, o);
  if (o.file.empty()) {
    std::cerr << command << ": a graph file or --batch is required\n";
    return parse_failure;
  }
  try {
    return dispatch(command, o, o.file, std::cout, std::cerr);
  } catch (std::exception const& e) {
    std::cerr << o.file << ": " << e.what() << "\n";
    return parse_failure;
  }
}
