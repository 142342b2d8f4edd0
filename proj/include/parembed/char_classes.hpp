#pragma once

#include <cstdint>

#include "parembed/certificate.hpp"
#include "parembed/descriptor.hpp"

namespace parembed {

struct LaiIndices {
  std::int64_t plus = 0;
  std::int64_t minus = 0;
  bool operator==(const LaiIndices&) const = default;
};

/// I(+-) = (chi + sum_k (+-1)^(k+1) pairings[k]) / 2.
///
/// Throws Errc::parity when a numerator is odd (the data cannot come from
/// an actual embedding) and Errc::invalid_argument when the pairing vector
/// does not have n + 1 entries.
LaiIndices lai_indices(std::int64_t chi, const LaiPairingData& data);

// Hypothesis of the cancellation theorem: both Lai indices vanish.
bool cr_precondition(std::int64_t chi, const LaiPairingData& data);

// Zero pairing vector, the value for an embedding with trivial normal bundle
// into C^(n+1).
LaiPairingData trivial_lai_data(int n);

// Wall's criterion for embedding a 6-manifold in R^8.
Decision wall_embeds_in_R8(const ManifoldDescriptor& m);

// Bockstein criterion for almost-complex structures on orientable 6-manifolds
// with torsion-free homology.
Decision admits_ac_structure_6d(const ManifoldDescriptor& m);

}  // namespace parembed
