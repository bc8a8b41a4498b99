#include "bbgroups/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "bbgroups/bestvina_brady.hpp"

namespace bbgroups {

ParseError::ParseError(Kind kind, std::size_t line, std::string const& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
      kind_(kind),
      line_(line) {}

char const* to_string(ParseError::Kind k) {
  switch (k) {
    case ParseError::Kind::empty_input: return "empty_input";
    case ParseError::Kind::malformed_line: return "malformed_line";
    case ParseError::Kind::bad_name: return "bad_name";
    case ParseError::Kind::loop: return "loop";
    case ParseError::Kind::duplicate_edge: return "duplicate_edge";
    case ParseError::Kind::unknown_vertex: return "unknown_vertex";
    case ParseError::Kind::duplicate_vertex: return "duplicate_vertex";
  }
  return "malformed_line";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

bool valid_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Collects vertices and edges with the checks shared by both formats.
class GraphBuilder {
 public:
  void declare(std::string const& name, std::size_t line) {
    check_name(name, line);
    if (index_.contains(name)) throw ParseError(ParseError::Kind::duplicate_vertex, line, "vertex '" + name + "' listed twice");
    add(name);
  }

  void fix_order() { fixed_ = true; }

  void edge(std::string const& a, std::string const& b, std::size_t line) {
    check_name(a, line);
    check_name(b, line);
    if (a == b) throw ParseError(ParseError::Kind::loop, line, "loop at '" + a + "'");
    auto u = lookup(a, line), v = lookup(b, line);
    auto e = make_edge(u, v);
    if (!seen_.insert(e).second)
      throw ParseError(ParseError::Kind::duplicate_edge, line, "duplicate edge " + a + " " + b);
    edges_.push_back(e);
  }

  void touch(std::string const& name, std::size_t line) {
    check_name(name, line);
    lookup(name, line);
  }

  GraphDocument finish(std::string source) {
    GraphDocument doc;
    doc.source = std::move(source);
    doc.names = names_;
    doc.header = fixed_;
    doc.graph = SimplicialGraph(names_.size(), edges_, names_);
    return doc;
  }

  bool empty() const { return names_.empty(); }

 private:
  static void check_name(std::string const& name, std::size_t line) {
    if (!valid_name(name)) throw ParseError(ParseError::Kind::bad_name, line, "invalid vertex name '" + name + "'");
  }

  VertexId lookup(std::string const& name, std::size_t line) {
    if (auto it = index_.find(name); it != index_.end()) return it->second;
    if (fixed_) throw ParseError(ParseError::Kind::unknown_vertex, line, "vertex '" + name + "' not in header");
    return add(name);
  }

  VertexId add(std::string const& name) {
    auto id = static_cast<VertexId>(names_.size());
    index_.emplace(name, id);
    names_.push_back(name);
    return id;
  }

  bool fixed_ = false;
  std::map<std::string, VertexId> index_;
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::set<Edge> seen_;
};

GraphDocument parse_edge_list(std::string_view text, std::string source) {
  GraphBuilder b;
  bool any = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto line = trim(raw);
    if (line.empty()) continue;
    if (line.starts_with("vertices:")) {
      if (any) throw ParseError(ParseError::Kind::malformed_line, line_no, "vertices header must come first");
      for (auto const& name : split_ws(line.substr(9))) b.declare(name, line_no);
      b.fix_order();
      any = true;
      continue;
    }
    any = true;
    auto tok = split_ws(line);
    if (tok.size() != 2)
      throw ParseError(ParseError::Kind::malformed_line, line_no, "expected '<name> <name>', got '" + std::string(line) + "'");
    b.edge(tok[0], tok[1], line_no);
  }
  if (!any) throw ParseError(ParseError::Kind::empty_input, 0, "empty input");
  return b.finish(std::move(source));
}

GraphDocument parse_dot(std::string_view text, std::string source) {
  // Strip comments, keeping newlines so statement line numbers survive.
  std::string clean;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '#' || (text[i] == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
      while (i < text.size() && text[i] != '\n') ++i;
      if (i < text.size()) clean += '\n';
      continue;
    }
    if (text[i] == '/' && i + 1 < text.size() && text[i + 1] == '*') {
      i += 2;
      while (i + 1 < text.size() && !(text[i] == '*' && text[i + 1] == '/')) {
        if (text[i] == '\n') clean += '\n';
        ++i;
      }
      ++i;
      continue;
    }
    clean += text[i] == '\r' ? ' ' : text[i];
  }
  if (trim(clean).empty()) throw ParseError(ParseError::Kind::empty_input, 0, "empty input");
  auto open = clean.find('{');
  auto close = clean.rfind('}');
  auto line_of = [&](std::size_t at) {
    return static_cast<std::size_t>(std::count(clean.begin(), clean.begin() + static_cast<long>(at), '\n')) + 1;
  };
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError(ParseError::Kind::malformed_line, 1, "expected 'graph { ... }'");
  auto head = split_ws(clean.substr(0, open));
  if (head.empty() || (head[0] != "graph" && !(head[0] == "strict" && head.size() > 1 && head[1] == "graph")))
    throw ParseError(ParseError::Kind::malformed_line, line_of(0), "only undirected 'graph' is supported");

  GraphBuilder b;
  std::size_t start = open + 1;
  auto statement = [&](std::size_t from, std::size_t to) {
    std::string s = clean.substr(from, to - from);
    auto first = s.find_first_not_of(" \t\n");
    auto line = line_of(from + (first == std::string::npos ? 0 : first));
    if (auto lb = s.find('['); lb != std::string::npos) {
      auto rb = s.find(']', lb);
      if (rb == std::string::npos) throw ParseError(ParseError::Kind::malformed_line, line, "unterminated attribute list");
      s.erase(lb, rb - lb + 1);
    }
    auto body = std::string(trim(s));
    if (body.empty()) return;
    if (body.find("->") != std::string::npos)
      throw ParseError(ParseError::Kind::malformed_line, line, "directed edge in undirected graph");
    std::vector<std::string> parts;
    for (std::size_t p = 0;;) {
      auto q = body.find("--", p);
      auto part = std::string(trim(std::string_view(body).substr(p, q == std::string::npos ? std::string::npos : q - p)));
      if (part.size() >= 2 && part.front() == '"' && part.back() == '"') part = part.substr(1, part.size() - 2);
      parts.push_back(part);
      if (q == std::string::npos) break;
      p = q + 2;
    }
    if (parts.size() == 1) {
      auto const& w = parts[0];
      if (w == "graph" || w == "node" || w == "edge" || w.find('=') != std::string::npos) return;
      b.touch(w, line);
      return;
    }
    for (std::size_t k = 0; k + 1 < parts.size(); ++k) b.edge(parts[k], parts[k + 1], line);
  };
  for (std::size_t i = start; i < close; ++i)
    if (clean[i] == ';' || clean[i] == '\n') {
      statement(start, i);
      start = i + 1;
    }
  statement(start, close);
  if (b.empty()) throw ParseError(ParseError::Kind::empty_input, 0, "graph has no vertices");
  return b.finish(std::move(source));
}

}  // namespace

GraphDocument parse_graph(std::string_view text, GraphFormat format, std::string source) {
  return format == GraphFormat::dot ? parse_dot(text, std::move(source)) : parse_edge_list(text, std::move(source));
}

GraphDocument read_graph_file(std::string const& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), format, path);
}

std::string emit_graph(SimplicialGraph const& g) {
  std::string out = "vertices:";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out += " " + g.label(v);
  out += "\n";
  for (auto e : g.edges()) out += g.label(e.lo) + " " + g.label(e.hi) + "\n";
  return out;
}

std::optional<PresentationFormat> presentation_format_from_string(std::string_view s) {
  if (s == "plain") return PresentationFormat::plain;
  if (s == "cas") return PresentationFormat::cas;
  if (s == "json") return PresentationFormat::json;
  return std::nullopt;
}

namespace {

std::string generator_text(GroupPresentation const& p, std::uint32_t gen) {
  return gen < p.generators.size() ? p.generators[gen].name : "x" + std::to_string(gen + 1);
}

// Runs of equal letters collapse into powers.
std::string render(Word const& w, std::function<std::string(std::uint32_t)> const& name) {
  if (w.empty()) return "1";
  std::string out;
  auto const& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    if (!out.empty()) out += "*";
    out += name(ls[i].gen);
    long power = static_cast<long>(j - i) * ls[i].exp;
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

}  // namespace

std::string format_word(Word const& w, GroupPresentation const& p) {
  return render(w, [&](std::uint32_t g) { return generator_text(p, g); });
}

std::string format_relator(Word const& w, GroupPresentation const& p) {
  if (auto c = as_commutator(w)) return "[" + format_word(c->first, p) + "," + format_word(c->second, p) + "]";
  return format_word(w, p);
}

nlohmann::json presentation_to_json(GroupPresentation const& p, SimplicialGraph const* g) {
  nlohmann::json j;
  j["kind"] = to_string(p.kind);
  j["hypothesis"] = to_string(p.hypothesis);
  j["generators"] = nlohmann::json::array();
  for (auto const& gen : p.generators) {
    nlohmann::json x;
    x["name"] = gen.name;
    if (gen.source) {
      auto label = [&](VertexId v) { return g && v < g->vertex_count() ? g->label(v) : std::to_string(v); };
      x["edge"] = {label(gen.source->lo), label(gen.source->hi)};
    }
    j["generators"].push_back(x);
  }
  j["relators"] = nlohmann::json::array();
  for (auto const& r : p.relators) {
    auto seq = nlohmann::json::array();
    for (auto l : r.letters()) seq.push_back(static_cast<long>(l.gen + 1) * l.exp);
    j["relators"].push_back(seq);
  }
  return j;
}

std::string emit_presentation(GroupPresentation const& p, PresentationFormat format, SimplicialGraph const* g) {
  std::ostringstream os;
  if (format == PresentationFormat::json) return presentation_to_json(p, g).dump(2) + "\n";
  os << "# kind: " << to_string(p.kind) << "\n";
  os << "# hypothesis: " << to_string(p.hypothesis) << "\n";
  if (p.hypothesis == Verdict::unknown)
    os << "# simple connectivity of the flag complex is undecided; this presentation assumes it\n";
  if (format == PresentationFormat::plain) {
    os << "gens:";
    for (std::size_t i = 0; i < p.generators.size(); ++i) os << (i ? ", " : " ") << p.generators[i].name;
    os << "\nrels:\n";
    for (auto const& r : p.relators) os << format_relator(r, p) << "\n";
    return os.str();
  }
  if (p.generators.empty()) {
    os << "F := FreeGroup(0);;\n";
  } else {
    os << "F := FreeGroup(";
    for (std::size_t i = 0; i < p.generators.size(); ++i) os << (i ? ", " : "") << '"' << p.generators[i].name << '"';
    os << ");;\n";
  }
  os << "G := F / [";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    os << (i ? ", " : " ");
    if (p.relators[i].empty())
      os << "One(F)";
    else
      os << render(p.relators[i], [](std::uint32_t g) { return "F." + std::to_string(g + 1); });
  }
  os << (p.relators.empty() ? "];;\n" : " ];;\n");
  return os.str();
}

namespace {

// expr := factor ('*' factor)* ; factor := atom ('^' int)? ;
// atom := name | '1' | '[' expr ',' expr ']' | '(' expr ')'
class WordParser {
 public:
  WordParser(std::string_view text, std::function<std::optional<std::uint32_t>(std::string const&)> resolve)
      : s_(text), resolve_(std::move(resolve)) {}

  Word parse() {
    auto w = expr();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return w;
  }

 private:
  [[noreturn]] void fail(std::string const& what) const {
    throw ParseError(ParseError::Kind::malformed_line, 0, what + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  Word expr() {
    auto w = factor();
    while (eat('*')) w = w * factor();
    return w;
  }
  Word factor() {
    auto w = atom();
    if (!eat('^')) return w;
    skip();
    std::size_t j = i_;
    if (j < s_.size() && (s_[j] == '-' || s_[j] == '+')) ++j;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    auto digits = std::string(s_.substr(i_, j - i_));
    if (digits.empty() || digits == "-" || digits == "+") fail("bad exponent");
    i_ = j;
    long k = std::stol(digits);
    Word base = k < 0 ? w.inverse() : w, out;
    for (long n = 0; n < std::labs(k); ++n) out = out * base;
    return out;
  }
  Word atom() {
    skip();
    if (eat('[')) {
      auto a = expr();
      if (!eat(',')) fail("expected ','");
      auto b = expr();
      if (!eat(']')) fail("expected ']'");
      return Word::commutator(a, b);
    }
    if (eat('(')) {
      auto a = expr();
      if (!eat(')')) fail("expected ')'");
      return a;
    }
    std::size_t j = i_;
    while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' || s_[j] == '.')) ++j;
    auto name = std::string(s_.substr(i_, j - i_));
    if (name.empty()) fail("expected a generator");
    i_ = j;
    if (name == "1") return {};
    auto gen = resolve_(name);
    if (!gen) fail("unknown generator '" + name + "'");
    return Word::generator(*gen);
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::function<std::optional<std::uint32_t>(std::string const&)> resolve_;
};

void read_comment(std::string_view line, GroupPresentation& p) {
  auto body = trim(line.substr(1));
  if (body.starts_with("kind:")) {
    if (auto k = presentation_kind_from_string(trim(body.substr(5)))) p.kind = *k;
  } else if (body.starts_with("hypothesis:")) {
    auto v = trim(body.substr(11));
    p.hypothesis = v == "yes" ? Verdict::yes : v == "no" ? Verdict::no : Verdict::unknown;
  }
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  for (std::size_t pos = 0; pos <= text.size();) {
    auto nl = text.find('\n', pos);
    out.push_back(trim(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos)));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

}  // namespace

GroupPresentation parse_plain_presentation(std::string_view text) {
  GroupPresentation p;
  bool in_rels = false, have_gens = false;
  auto resolve = [&](std::string const& name) { return p.find_generator(name); };
  for (auto line : lines_of(text)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      read_comment(line, p);
      continue;
    }
    if (line.starts_with("gens:")) {
      for (auto item : [&] {
             std::vector<std::string> v;
             std::string cur;
             for (char c : line.substr(5)) {
               if (c == ',') {
                 v.push_back(std::string(trim(cur)));
                 cur.clear();
               } else {
                 cur += c;
               }
             }
             if (!trim(cur).empty() || !v.empty()) v.push_back(std::string(trim(cur)));
             return v;
           }()) {
        if (item.empty()) throw ParseError(ParseError::Kind::malformed_line, 0, "empty generator name");
        p.generators.push_back({item, std::nullopt});
      }
      have_gens = true;
      continue;
    }
    if (line.starts_with("rels:")) {
      if (!have_gens) throw ParseError(ParseError::Kind::malformed_line, 0, "rels before gens");
      in_rels = true;
      if (auto rest = trim(line.substr(5)); !rest.empty()) p.relators.push_back(WordParser(rest, resolve).parse());
      continue;
    }
    if (!in_rels) throw ParseError(ParseError::Kind::malformed_line, 0, "unexpected line '" + std::string(line) + "'");
    p.relators.push_back(WordParser(line, resolve).parse());
  }
  if (!have_gens) throw ParseError(ParseError::Kind::empty_input, 0, "no gens line");
  return p;
}

GroupPresentation parse_cas_presentation(std::string_view text) {
  GroupPresentation p;
  std::string body;
  for (auto line : lines_of(text)) {
    if (!line.empty() && line.front() == '#')
      read_comment(line, p);
    else
      body += std::string(line) + " ";
  }
  auto fg = body.find("FreeGroup(");
  if (fg == std::string::npos) throw ParseError(ParseError::Kind::malformed_line, 0, "missing FreeGroup");
  auto close = body.find(')', fg);
  auto args = trim(std::string_view(body).substr(fg + 10, close - fg - 10));
  if (!args.empty() && std::isdigit(static_cast<unsigned char>(args.front()))) {
    auto n = std::stoul(std::string(args));
    for (std::size_t i = 0; i < n; ++i) p.generators.push_back({"f" + std::to_string(i + 1), std::nullopt});
  } else {
    for (std::size_t q = args.find('"'); q != std::string_view::npos; q = args.find('"', q)) {
      auto end = args.find('"', q + 1);
      if (end == std::string_view::npos) throw ParseError(ParseError::Kind::malformed_line, 0, "unterminated name");
      p.generators.push_back({std::string(args.substr(q + 1, end - q - 1)), std::nullopt});
      q = end + 1;
    }
  }
  auto slash = body.find('/', close);
  auto lb = body.find('[', slash);
  auto rb = body.rfind(']');
  if (slash == std::string::npos || lb == std::string::npos || rb == std::string::npos || rb < lb)
    throw ParseError(ParseError::Kind::malformed_line, 0, "missing relator list");
  auto list = body.substr(lb + 1, rb - lb - 1);
  for (std::size_t at; (at = list.find("One(F)")) != std::string::npos;) list.replace(at, 6, "1");
  auto resolve = [&](std::string const& name) -> std::optional<std::uint32_t> {
    if (!name.starts_with("F.")) return std::nullopt;
    auto k = std::stoul(name.substr(2));
    if (k == 0 || k > p.generators.size()) return std::nullopt;
    return static_cast<std::uint32_t>(k - 1);
  };
  std::size_t start = 0;
  for (std::size_t i = 0; i <= list.size(); ++i)
    if (i == list.size() || list[i] == ',') {
      auto item = trim(std::string_view(list).substr(start, i - start));
      if (!item.empty()) p.relators.push_back(WordParser(item, resolve).parse());
      start = i + 1;
    }
  return p;
}

GroupPresentation presentation_from_json(nlohmann::json const& j) {
  GroupPresentation p;
  if (auto k = presentation_kind_from_string(j.at("kind").get<std::string>())) p.kind = *k;
  auto h = j.at("hypothesis").get<std::string>();
  p.hypothesis = h == "yes" ? Verdict::yes : h == "no" ? Verdict::no : Verdict::unknown;
  for (auto const& g : j.at("generators")) p.generators.push_back({g.at("name").get<std::string>(), std::nullopt});
  for (auto const& r : j.at("relators")) {
    std::vector<Letter> letters;
    for (auto const& x : r) {
      auto v = x.get<long>();
      if (v == 0 || static_cast<std::size_t>(std::labs(v)) > p.generators.size())
        throw ParseError(ParseError::Kind::malformed_line, 0, "relator letter out of range");
      letters.push_back({static_cast<std::uint32_t>(std::labs(v) - 1), static_cast<std::int8_t>(v < 0 ? -1 : 1)});
    }
    p.relators.emplace_back(std::move(letters));
  }
  return p;
}

namespace {

nlohmann::json edge_json(SimplicialGraph const& g, Edge e) { return {g.label(e.lo), g.label(e.hi)}; }

nlohmann::json signed_sequence(Word const& w) {
  auto seq = nlohmann::json::array();
  for (auto l : w.letters()) seq.push_back(static_cast<long>(l.gen + 1) * l.exp);
  return seq;
}

nlohmann::json abelian_json(AbelianInvariants const& a) {
  nlohmann::json j;
  j["free_rank"] = a.free_rank;
  j["torsion"] = nlohmann::json::array();
  for (auto const& t : a.torsion) j["torsion"].push_back(t.str());
  j["text"] = to_string(a);
  return j;
}

nlohmann::json labels_json(SimplicialGraph const& g, std::vector<VertexId> const& vs) {
  auto out = nlohmann::json::array();
  for (auto v : vs) out.push_back(g.label(v));
  return out;
}

}  // namespace

nlohmann::json simply_connected_to_json(SimplyConnectedVerdict const& v, SimplicialGraph const& g) {
  nlohmann::json j;
  j["status"] = to_string(v.status);
  j["evidence"] = v.evidence;
  j["disconnected"] = v.disconnected;
  j["collapsed_to_point"] = v.collapsed_to_point;
  j["steps"] = v.steps;
  auto moves = nlohmann::json::array();
  for (auto const& m : v.collapse) {
    nlohmann::json x;
    x["kind"] = m.kind == CollapseMove::Kind::edge_with_triangle ? "edge_with_triangle" : "vertex_with_edge";
    x["edge"] = edge_json(g, m.edge);
    if (m.apex) x["apex"] = g.label(*m.apex);
    if (m.vertex) x["vertex"] = g.label(*m.vertex);
    moves.push_back(x);
  }
  j["collapse"] = moves;
  if (v.simplified) j["surviving_generators"] = v.simplified->generator_count();
  if (v.h1) j["h1"] = abelian_json(*v.h1);
  return j;
}

std::string edge_names(std::vector<Edge> const& edges, SimplicialGraph const& g) {
  std::string out;
  for (auto e : edges) {
    if (!out.empty()) out += ", ";
    auto i = g.edge_index(e);
    out += i ? edge_generator_name(*i) : g.label(e.lo) + "-" + g.label(e.hi);
  }
  return out;
}

nlohmann::json family_to_json(FamilyVerdict const& v, SimplicialGraph const& g) {
  nlohmann::json j;
  j["status"] = to_string(v.status);
  j["reason"] = v.reason;
  if (v.witness) {
    auto names = nlohmann::json::array();
    for (auto e : v.witness->edges()) names.push_back(edge_generator_name(*g.edge_index(e)));
    j["witness"] = names;
    j["unfavourable"] = v.search.unfavourable_count;
  }
  j["exhaustive"] = v.search.exhaustive;
  j["trees_visited"] = v.search.trees_visited;
  j["simply_connected"] = simply_connected_to_json(v.simply_connected, g);
  return j;
}

nlohmann::json raag_witness_to_json(RaagWitness const& w, SimplicialGraph const& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (std::size_t i = 0; i < w.generator_map.size(); ++i) {
    nlohmann::json v;
    v["name"] = w.gamma_prime.label(static_cast<VertexId>(i));
    v["edge"] = edge_json(g, w.generator_map[i]);
    j["vertices"].push_back(v);
  }
  j["edges"] = nlohmann::json::array();
  for (auto e : w.gamma_prime.edges()) j["edges"].push_back(edge_json(w.gamma_prime, e));
  return j;
}

nlohmann::json decomposition_to_json(DecompositionTree const& d, SimplicialGraph const& g) {
  nlohmann::json j;
  j["expression"] = describe(d, false);
  j["detailed"] = describe(d, true);
  if (d.tree) {
    auto names = nlohmann::json::array();
    for (auto e : d.tree->edges()) names.push_back(edge_generator_name(*g.edge_index(e)));
    j["tree"] = names;
  }
  j["steps"] = nlohmann::json::array();
  for (auto const& s : d.steps) {
    nlohmann::json x;
    x["triangle"] = labels_json(g, {s.triangle.a, s.triangle.b, s.triangle.c});
    x["tree_edge"] = edge_generator_name(*g.edge_index(s.tree_edge));
    x["shared_edge"] = edge_generator_name(*g.edge_index(s.shared_edge));
    x["complement"] = labels_json(g, s.complement);
    j["steps"].push_back(x);
  }
  j["root"] = d.root;
  j["nodes"] = nlohmann::json::array();
  for (auto const& n : d.nodes) {
    nlohmann::json x;
    if (n.kind == DecompositionNode::Kind::leaf) {
      x["kind"] = "leaf";
      x["presentation"] = presentation_to_json(n.presentation, &g);
    } else {
      x["kind"] = "amalgam";
      x["left"] = n.left;
      x["right"] = n.right;
      x["step"] = n.step;
      x["word_left"] = signed_sequence(n.word_left);
      x["word_right"] = signed_sequence(n.word_right);
    }
    j["nodes"].push_back(x);
  }
  if (!d.base_vertices.empty()) {
    j["base_vertices"] = labels_json(g, d.base_vertices);
    j["base"] = raag_witness_to_json(d.base, g);
  }
  auto flat = flatten_presentation(d);
  j["flattened"] = presentation_to_json(flat.presentation, &g);
  j["rename"] = nlohmann::json::array();
  for (auto [node, index] : flat.origin) j["rename"].push_back({node, index});
  j["z2_leaves"] = d.z2_leaf_count();
  j["abelianization"] = abelian_json(abelianization(flat.presentation));
  return j;
}

SpanningTree parse_tree_override(std::string_view text, SimplicialGraph const& g) {
  std::vector<Edge> edges;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != ',') continue;
    auto item = std::string(trim(text.substr(start, i - start)));
    start = i + 1;
    if (item.empty()) continue;
    if (auto dash = item.find('-'); dash != std::string::npos) {
      auto u = g.find_label(std::string(trim(std::string_view(item).substr(0, dash))));
      auto v = g.find_label(std::string(trim(std::string_view(item).substr(dash + 1))));
      if (!u || !v || *u == *v || !g.adjacent(*u, *v)) throw PreconditionError("tree item '" + item + "' is not an edge");
      edges.push_back(make_edge(*u, *v));
      continue;
    }
    bool numeric = item.size() > 1 && item[0] == 'e' &&
                   std::all_of(item.begin() + 1, item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!numeric) throw PreconditionError("tree item '" + item + "' is neither e<k> nor u-v");
    auto k = std::stoul(item.substr(1));
    if (k == 0 || k > g.edge_count()) throw PreconditionError("tree item '" + item + "' is out of range");
    edges.push_back(g.edge(k - 1));
  }
  return SpanningTree::make(g, std::move(edges));
}

}  // namespace bbgroups
