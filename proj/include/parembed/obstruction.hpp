#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parembed/certificate.hpp"
#include "parembed/descriptor.hpp"

namespace parembed {

enum class GroupValue { zero, integers, z2, out_of_stable_range };

std::string_view to_string(GroupValue g);

// Coefficient group of the parallelizability obstruction of a stably
// parallelizable n-manifold: 0 for n = 1, 3, 7; Z/2 for other odd n; Z for
// even n.
GroupValue kervaire_group(int n);

// pi_k(SO(2n)/U(n)) ~ pi_(k+1)(SO(2n)) in the stable range k <= 2n - 2, by
// Bott periodicity: k mod 8 in {1,3,4,5} -> 0, {2,6} -> Z, {0,7} -> Z/2.
GroupValue gamma_homotopy(int k, int n);

struct ObstructionStatus {
  bool vanishes = false;
  std::string reason;
};

/// Obstructions to null-homotoping the map M^6 -> Gamma(4) that classifies
/// the complex structure on TR^8|_M. Only degrees 2 and 6 carry nonzero
/// coefficient groups; degrees 3, 4, 5 always extend.
struct ObstructionReport6D {
  ObstructionStatus omega2;
  ObstructionStatus omega6;
  std::vector<std::string> skeleton_notes;
  std::vector<CertificateStep> steps;

  bool both_vanish() const { return omega2.vanishes && omega6.vanishes; }
};

ObstructionReport6D obstruction_ladder_6d(const ManifoldDescriptor& m);

// Aligned text tables for the CLI, one row per index.
std::string format_kervaire_table(int max_n);
std::string format_bott_table(int n, int max_k);

}  // namespace parembed
