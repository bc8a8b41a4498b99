#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bbgroups {

// A generator raised to +1 or -1.
struct Letter {
  std::uint32_t gen = 0;
  std::int8_t exp = 1;

  Letter inverse() const { return {gen, static_cast<std::int8_t>(-exp)}; }
  // Total order used by relator normal forms: x1 < x1^-1 < x2 < x2^-1 < ...
  std::uint64_t key() const { return 2ull * gen + (exp < 0 ? 1 : 0); }

  friend bool operator==(Letter const&, Letter const&) = default;
  friend auto operator<=>(Letter const& x, Letter const& y) { return x.key() <=> y.key(); }
};

// Word in a free group. Operations that produce words ("*", inverse,
// substitute) return freely reduced results; the constructor keeps letters as
// given.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word generator(std::uint32_t gen, int exp = 1) {
    return Word{Letter{gen, static_cast<std::int8_t>(exp < 0 ? -1 : 1)}};
  }
  // x y x^-1 y^-1, freely reduced.
  static Word commutator(Word const& x, Word const& y);

  std::vector<Letter> const& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter const& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  bool contains(std::uint32_t gen) const;
  int exponent_sum(std::uint32_t gen) const;
  int total_exponent() const;
  std::size_t occurrences(std::uint32_t gen) const;
  std::uint32_t max_generator() const;  // 0 for the empty word

  friend Word operator*(Word const& x, Word const& y);
  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const& x, Word const& y) {
    return std::lexicographical_compare_three_way(x.letters_.begin(), x.letters_.end(),
                                                  y.letters_.begin(), y.letters_.end());
  }

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(Word const& w);

// Freely reduced, then stripped of inverse letter pairs at the ends.
Word cyclic_reduce(Word const& w);

// Replaces every gen^e by replacement^e, then freely reduces. Throws
// std::invalid_argument if the replacement mentions gen itself.
Word substitute(Word const& w, std::uint32_t gen, Word const& replacement);

// Applies a generator renumbering; letters whose generator maps to nullopt
// are dropped (used for killing tree generators).
Word rename(Word const& w, std::vector<std::optional<std::uint32_t>> const& map);

// Canonical representative of the cyclic word class of w and w^-1: the least
// rotation, over both orientations, of the cyclically reduced word.
Word relator_normal_form(Word const& w);

// Decomposition w = A B A^-1 B^-1 for some rotation of w or of w^-1, preferring
// the shortest A and then the lexicographically least (A, B).
std::optional<std::pair<Word, Word>> as_commutator(Word const& w);

// [x^a, y^b] for single generators x != y.
std::optional<std::pair<std::uint32_t, std::uint32_t>> as_generator_commutator(Word const& w);

// Word problem in the right-angled Artin group where x and y commute iff
// (min, max) is in `commuting`: cancel x^e ... x^-e whenever every letter in
// between commutes with x, until nothing cancels. Trivial iff this empties w.
bool trivial_in_raag(Word const& w, std::set<std::pair<std::uint32_t, std::uint32_t>> const& commuting);

}  // namespace bbgroups
