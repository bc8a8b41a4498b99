#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bbgroups/graph.hpp"
#include "bbgroups/word.hpp"

namespace bbgroups {

enum class Verdict { yes, no, unknown };

char const* to_string(Verdict v);

enum class PresentationKind { dicks_leary, papadima_suciu, raag, z_squared, generic };

char const* to_string(PresentationKind k);
std::optional<PresentationKind> presentation_kind_from_string(std::string_view s);

struct Generator {
  std::string name;
  std::optional<Edge> source;  // graph edge the generator stands for, if any

  friend bool operator==(Generator const&, Generator const&) = default;
};

struct GroupPresentation {
  std::vector<Generator> generators;
  std::vector<Word> relators;
  PresentationKind kind = PresentationKind::generic;
  // Simple connectivity of the flag complex, for presentations of H_Γ whose
  // validity depends on it.
  Verdict hypothesis = Verdict::unknown;

  std::size_t generator_count() const { return generators.size(); }
  std::optional<std::uint32_t> find_generator(std::string_view name) const;
  std::optional<std::uint32_t> find_generator(Edge source) const;

  // Relator letters in range, and the raag / z_squared shape constraints.
  // Throws std::logic_error describing the first violation.
  void validate() const;
};

// Relators of p in normal form, sorted; the multiset used for equality tests.
std::vector<Word> relator_multiset(GroupPresentation const& p);

// Same generator count and equal relator multisets.
bool same_relators(GroupPresentation const& x, GroupPresentation const& y);

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // elementary divisors > 1, each dividing the next

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(AbelianInvariants const&, AbelianInvariants const&) = default;
};

std::string to_string(AbelianInvariants const& a);

using IntegerMatrix = std::vector<std::vector<BigInt>>;

// Diagonal of the Smith normal form (nonzero entries only, in divisibility order).
std::vector<BigInt> smith_diagonal(IntegerMatrix m);

AbelianInvariants abelian_invariants(IntegerMatrix const& relation_matrix, std::size_t columns);

// Exponent-sum matrix (relators x generators).
IntegerMatrix exponent_matrix(GroupPresentation const& p);

AbelianInvariants abelianization(GroupPresentation const& p);

struct TietzeResult {
  GroupPresentation presentation;  // surviving generators, renumbered
  std::size_t steps = 0;
  bool exhausted = false;  // budget ran out before reaching a fixed point
};

// Repeatedly cyclically reduces relators, drops trivial and duplicate ones,
// and eliminates a generator occurring exactly once in some relator. Each
// elimination costs one step.
TietzeResult tietze_simplify(GroupPresentation p, std::size_t budget);

// Cyclically reduce, normalise, drop empties and duplicates, keep first-seen order.
void tidy_relators(GroupPresentation& p);

}  // namespace bbgroups
