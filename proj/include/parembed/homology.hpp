#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parembed/integer.hpp"

namespace parembed {

// A Betti number that may be undetermined by the available data.
using BettiEntry = std::optional<std::int64_t>;
using BettiSequence = std::vector<BettiEntry>;

/// Graded Betti data of a manifold of real dimension `dim`.
///
/// `betti_z` holds ranks of integral homology (torsion-free regime) and
/// `betti_z2` mod-2 dimensions; both have length dim + 1. Entries may be
/// unknown, which propagates through every operation instead of defaulting
/// to zero.
struct BettiTable {
  int dim = 0;
  BettiSequence betti_z;
  BettiSequence betti_z2;
  bool closed = true;
  bool orientable = true;

  bool operator==(const BettiTable&) const = default;

  bool all_known() const;
};

// Standard tables.
BettiTable sphere_table(int p);
BettiTable unknown_table(int dim);

// chi = sum (-1)^i b_i over betti_z; forced to 0 for closed orientable
// odd-dimensional input even when entries are unknown.
std::optional<std::int64_t> euler_characteristic(const BettiTable& t);

// Same alternating sum taken over betti_z2.
std::optional<std::int64_t> euler_characteristic_mod2_table(const BettiTable& t);

// Kervaire semi-characteristic: sum_{i <= k} dim H^i(M; Z/2) mod 2 for
// dim = 2k + 1. Unknown if any needed entry is unknown.
std::optional<int> semi_characteristic(const BettiTable& t);

// Degrees i <= k whose betti_z2 entry is unknown (empty if none).
std::vector<std::size_t> semi_characteristic_missing(const BettiTable& t);

BettiTable kunneth_product(const BettiTable& a, const BettiTable& b);
BettiTable connected_sum(const BettiTable& a, const BettiTable& b);

/// chi(A u_C B) = chi(A) + chi(B) - chi(C). Overflow is reported, never wrapped.
inline std::int64_t euler_of_gluing(std::int64_t chi_a, std::int64_t chi_b, std::int64_t chi_boundary) {
  return checked::sub(checked::add(chi_a, chi_b), chi_boundary);
}

// Euler characteristic of S^p (p >= 0).
std::int64_t sphere_euler(int p);

std::string format_betti(const BettiSequence& seq);

}  // namespace parembed
