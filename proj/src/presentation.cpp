#include "bbgroups/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bbgroups {

char const* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

char const* to_string(PresentationKind k) {
  switch (k) {
    case PresentationKind::dicks_leary: return "dicks_leary";
    case PresentationKind::papadima_suciu: return "papadima_suciu";
    case PresentationKind::raag: return "raag";
    case PresentationKind::z_squared: return "z_squared";
    case PresentationKind::generic: return "generic";
  }
  return "generic";
}

std::optional<PresentationKind> presentation_kind_from_string(std::string_view s) {
  for (auto k : {PresentationKind::dicks_leary, PresentationKind::papadima_suciu,
                 PresentationKind::raag, PresentationKind::z_squared, PresentationKind::generic})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

std::optional<std::uint32_t> GroupPresentation::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

std::optional<std::uint32_t> GroupPresentation::find_generator(Edge source) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].source == source) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

void GroupPresentation::validate() const {
  for (auto const& r : relators)
    for (auto l : r.letters())
      if (l.gen >= generators.size()) throw std::logic_error("relator letter out of range");
  if (kind == PresentationKind::raag) {
    for (auto const& r : relators)
      if (!as_generator_commutator(r) || r.size() != 4)
        throw std::logic_error("raag relator is not a commutator of generators");
  }
  if (kind == PresentationKind::z_squared) {
    if (generators.size() != 2 || relators.size() != 1 || !as_generator_commutator(relators[0]))
      throw std::logic_error("z_squared presentation must be <x, y | [x,y]>");
  }
}

std::vector<Word> relator_multiset(GroupPresentation const& p) {
  std::vector<Word> out;
  for (auto const& r : p.relators) {
    auto nf = relator_normal_form(r);
    if (!nf.empty()) out.push_back(std::move(nf));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool same_relators(GroupPresentation const& x, GroupPresentation const& y) {
  return x.generator_count() == y.generator_count() && relator_multiset(x) == relator_multiset(y);
}

std::string to_string(AbelianInvariants const& a) {
  std::ostringstream os;
  bool first = true;
  if (a.free_rank > 0) {
    os << "Z^" << a.free_rank;
    first = false;
  }
  for (auto const& t : a.torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<BigInt> smith_diagonal(IntegerMatrix m) {
  std::vector<BigInt> diag;
  std::size_t const rows = m.size();
  std::size_t const cols = rows == 0 ? 0 : m[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: nonzero entry of least absolute value in the remaining block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide every remaining entry.
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols && clean; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            clean = false;
          }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

AbelianInvariants abelian_invariants(IntegerMatrix const& relation_matrix, std::size_t columns) {
  auto diag = smith_diagonal(relation_matrix);
  AbelianInvariants a;
  a.free_rank = columns - diag.size();
  for (auto& d : diag)
    if (d > 1) a.torsion.push_back(d);
  return a;
}

IntegerMatrix exponent_matrix(GroupPresentation const& p) {
  IntegerMatrix m;
  for (auto const& r : p.relators) {
    std::vector<BigInt> row(p.generator_count(), 0);
    for (auto l : r.letters()) row[l.gen] += l.exp;
    m.push_back(std::move(row));
  }
  return m;
}

AbelianInvariants abelianization(GroupPresentation const& p) {
  return abelian_invariants(exponent_matrix(p), p.generator_count());
}

void tidy_relators(GroupPresentation& p) {
  std::set<Word> seen;
  std::vector<Word> kept;
  for (auto const& r : p.relators) {
    auto c = cyclic_reduce(r);
    if (c.empty()) continue;
    if (!seen.insert(relator_normal_form(c)).second) continue;
    kept.push_back(std::move(c));
  }
  p.relators = std::move(kept);
}

TietzeResult tietze_simplify(GroupPresentation p, std::size_t budget) {
  TietzeResult res;
  std::vector<char> alive(p.generator_count(), 1);
  for (;;) {
    tidy_relators(p);
    // Shortest relator containing a generator exactly once; ties by index.
    std::optional<std::pair<std::size_t, std::uint32_t>> pick;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      auto const& r = p.relators[i];
      if (pick && p.relators[pick->first].size() <= r.size()) continue;
      std::optional<std::uint32_t> g;
      for (auto l : r.letters())
        if (r.occurrences(l.gen) == 1 && (!g || l.gen < *g)) g = l.gen;
      if (g) pick = std::pair{i, *g};
    }
    if (!pick) break;
    if (res.steps == budget) {
      res.exhausted = true;
      break;
    }
    ++res.steps;
    auto const [ri, gen] = *pick;
    // r = u x^e v  ==>  x^e = u^-1 v^-1
    auto const& r = p.relators[ri].letters();
    auto pos = static_cast<std::size_t>(
        std::find_if(r.begin(), r.end(), [gen = gen](Letter l) { return l.gen == gen; }) - r.begin());
    Word u(std::vector<Letter>(r.begin(), r.begin() + static_cast<long>(pos)));
    Word v(std::vector<Letter>(r.begin() + static_cast<long>(pos) + 1, r.end()));
    auto value = u.inverse() * v.inverse();
    if (r[pos].exp < 0) value = value.inverse();
    p.relators.erase(p.relators.begin() + static_cast<long>(ri));
    for (auto& other : p.relators) other = substitute(other, gen, value);
    alive[gen] = 0;
  }

  std::vector<std::optional<std::uint32_t>> map(p.generator_count());
  GroupPresentation out;
  out.kind = PresentationKind::generic;
  out.hypothesis = p.hypothesis;
  for (std::size_t g = 0; g < p.generator_count(); ++g)
    if (alive[g]) {
      map[g] = static_cast<std::uint32_t>(out.generators.size());
      out.generators.push_back(p.generators[g]);
    }
  for (auto const& r : p.relators) out.relators.push_back(rename(r, map));
  res.presentation = std::move(out);
  return res;
}

}  // namespace bbgroups
