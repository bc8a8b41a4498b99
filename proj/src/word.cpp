#include "bbgroups/word.hpp"

#include <algorithm>

namespace bbgroups {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
    out.pop_back();
  else
    out.push_back(l);
}

std::vector<Letter> rotated(std::vector<Letter> const& v, std::size_t k) {
  std::vector<Letter> out(v.begin() + static_cast<long>(k), v.end());
  out.insert(out.end(), v.begin(), v.begin() + static_cast<long>(k));
  return out;
}

}  // namespace

Word free_reduce(Word const& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto l : w.letters()) push_reduced(out, l);
  return Word(std::move(out));
}

Word cyclic_reduce(Word const& w) {
  auto r = free_reduce(w).letters();
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi)));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word operator*(Word const& x, Word const& y) {
  std::vector<Letter> out = free_reduce(x).letters_;
  for (auto l : y.letters_) push_reduced(out, l);
  return Word(std::move(out));
}

Word Word::commutator(Word const& x, Word const& y) { return x * y * x.inverse() * y.inverse(); }

bool Word::contains(std::uint32_t gen) const {
  return std::any_of(letters_.begin(), letters_.end(), [gen](Letter l) { return l.gen == gen; });
}

int Word::exponent_sum(std::uint32_t gen) const {
  int s = 0;
  for (auto l : letters_)
    if (l.gen == gen) s += l.exp;
  return s;
}

int Word::total_exponent() const {
  int s = 0;
  for (auto l : letters_) s += l.exp;
  return s;
}

std::size_t Word::occurrences(std::uint32_t gen) const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [gen](Letter l) { return l.gen == gen; }));
}

std::uint32_t Word::max_generator() const {
  std::uint32_t m = 0;
  for (auto l : letters_) m = std::max(m, l.gen);
  return m;
}

Word substitute(Word const& w, std::uint32_t gen, Word const& replacement) {
  if (replacement.contains(gen))
    throw std::invalid_argument("substitute: replacement mentions the generator it replaces");
  auto const inv = replacement.inverse();
  std::vector<Letter> out;
  for (auto l : w.letters()) {
    if (l.gen != gen) {
      push_reduced(out, l);
      continue;
    }
    for (auto r : (l.exp > 0 ? replacement : inv).letters()) push_reduced(out, r);
  }
  return free_reduce(Word(std::move(out)));
}

Word rename(Word const& w, std::vector<std::optional<std::uint32_t>> const& map) {
  std::vector<Letter> out;
  for (auto l : w.letters()) {
    if (l.gen >= map.size()) throw std::out_of_range("rename: generator outside map");
    if (auto g = map[l.gen]) push_reduced(out, {*g, l.exp});
  }
  return Word(std::move(out));
}

Word relator_normal_form(Word const& w) {
  auto const base = cyclic_reduce(w);
  if (base.empty()) return base;
  std::vector<Letter> best;
  auto const inv = base.inverse();
  for (auto const* v : {&base.letters(), &inv.letters()}) {
    for (std::size_t k = 0; k < v->size(); ++k) {
      auto r = rotated(*v, k);
      if (best.empty() || r < best) best = std::move(r);
    }
  }
  return Word(std::move(best));
}

std::optional<std::pair<Word, Word>> as_commutator(Word const& w) {
  auto const base = cyclic_reduce(w);
  auto const len = base.size();
  if (len < 4 || len % 2 != 0) return std::nullopt;
  std::optional<std::pair<Word, Word>> best;
  auto better = [](std::pair<Word, Word> const& x, std::pair<Word, Word> const& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x < y;
  };
  auto const half = len / 2;
  auto const inv = base.inverse();
  for (auto const* v : {&base.letters(), &inv.letters()}) {
    for (std::size_t k = 0; k < len; ++k) {
      auto r = rotated(*v, k);
      for (std::size_t a = 1; a < half; ++a) {
        auto const b = half - a;
        Word A(std::vector<Letter>(r.begin(), r.begin() + static_cast<long>(a)));
        Word B(std::vector<Letter>(r.begin() + static_cast<long>(a),
                                   r.begin() + static_cast<long>(a + b)));
        Word tail(std::vector<Letter>(r.begin() + static_cast<long>(a + b), r.end()));
        auto expect = A.inverse().letters();
        auto binv = B.inverse().letters();
        expect.insert(expect.end(), binv.begin(), binv.end());
        if (tail.letters() != expect) continue;
        std::pair<Word, Word> cand{std::move(A), std::move(B)};
        if (!best || better(cand, *best)) best = std::move(cand);
      }
    }
  }
  return best;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> as_generator_commutator(Word const& w) {
  auto c = as_commutator(w);
  if (!c || c->first.size() != 1 || c->second.size() != 1) return std::nullopt;
  auto x = c->first[0].gen, y = c->second[0].gen;
  if (x == y) return std::nullopt;
  return std::pair{std::min(x, y), std::max(x, y)};
}

bool trivial_in_raag(Word const& w, std::set<std::pair<std::uint32_t, std::uint32_t>> const& commuting) {
  auto commute = [&](std::uint32_t x, std::uint32_t y) {
    return x == y || commuting.contains({std::min(x, y), std::max(x, y)});
  };
  std::vector<Letter> l = free_reduce(w).letters();
  bool progress = true;
  while (progress && !l.empty()) {
    progress = false;
    for (std::size_t i = 0; i < l.size() && !progress; ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j) {
        if (l[j].gen == l[i].gen) {
          if (l[j].exp == -l[i].exp) {
            l.erase(l.begin() + static_cast<long>(j));
            l.erase(l.begin() + static_cast<long>(i));
            progress = true;
          }
          break;
        }
        if (!commute(l[i].gen, l[j].gen)) break;
      }
  }
  return l.empty();
}

}  // namespace bbgroups
