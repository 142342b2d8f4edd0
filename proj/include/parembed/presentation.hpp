#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "parembed/matrix.hpp"

namespace parembed {

struct Letter {
  std::size_t generator = 0;
  std::int64_t exponent = 0;
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

/// Finite presentation <g_1..g_s | r_1..r_t>. Every stored relator is freely
/// reduced and only references generator indices < s.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t generator_count() const { return generators.size(); }
  std::size_t relator_count() const { return relators.size(); }
  bool operator==(const GroupPresentation&) const = default;
};

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... with d_i | d_{i+1}.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion_factors;

  bool trivial() const { return free_rank == 0 && torsion_factors.empty(); }
  bool torsion_free() const { return torsion_factors.empty(); }
  bool operator==(const AbelianInvariants&) const = default;
};

// Merges adjacent letters on the same generator and drops zero exponents,
// cascading; the result is the unique freely reduced form.
Word free_reduce(const Word& w);

// Grammar: `<` gens `|` words `>` where gens is a comma-separated list of
// identifiers and words is a comma-separated list of whitespace-separated
// tokens `ident`, `ident^int` or the identity `1`. A relator section that is
// all whitespace means no relators.
GroupPresentation parse_presentation(std::string_view text);

// Canonical text; parse_presentation(to_string(p)) == p.
std::string to_string(const GroupPresentation& p);

// t x s matrix; entry (j, i) is the exponent sum of generator i in relator j.
IntegerMatrix relation_matrix(const GroupPresentation& p);

AbelianInvariants abelianization(const GroupPresentation& p);

std::string to_string(const AbelianInvariants& a);

// Free group on `count` generators named <prefix>1 .. <prefix>count.
GroupPresentation free_presentation(std::size_t count, std::string_view prefix = "x");

// Sound but incomplete triviality test: every generator is killed by a
// single-letter relator with exponent +-1.
bool certifiably_trivial(const GroupPresentation& p);

}  // namespace parembed
