#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parembed/homology.hpp"
#include "parembed/presentation.hpp"

namespace parembed {

/// Characteristic-class data, as vanishing flags plus pairings against [M].
struct CharClassData {
  bool c1_zero = false;
  bool p1_zero = false;
  std::optional<std::int64_t> c_top_pairing;             // <c_n(M), [M]>
  std::optional<std::vector<std::int64_t>> p1_pairings;  // <p_1 u x_i, [M]> over a basis of H^2

  bool operator==(const CharClassData&) const = default;
};

/// pairings[k] = <e^k(nu) u c_{n-k}(TX|_M), [M]> for k = 0..n.
struct LaiPairingData {
  int n = 0;
  std::vector<std::int64_t> pairings;

  bool operator==(const LaiPairingData&) const = default;
};

enum class EmbeddingEvidence { asserted, by_construction, by_wall };

std::string_view to_string(EmbeddingEvidence e);
std::optional<EmbeddingEvidence> parse_evidence(std::string_view s);

/// M embeds smoothly in R^(dim + codim).
struct Embedding {
  int codim = 0;
  EmbeddingEvidence evidence = EmbeddingEvidence::asserted;

  bool operator==(const Embedding&) const = default;
};

/// Formal record of a closed manifold's computable invariants.
struct ManifoldDescriptor {
  BettiTable betti;
  // Euler characteristic known from gluing bookkeeping when the table alone
  // does not determine it.
  std::optional<std::int64_t> euler;
  std::optional<GroupPresentation> pi1;
  bool simply_connected = false;
  bool torsion_free_homology = false;
  bool stably_parallelizable = false;
  bool w2_zero = false;
  bool bockstein_w2_zero = false;
  std::optional<Embedding> embeds;
  CharClassData chars;
  std::optional<LaiPairingData> lai;

  int dim() const { return betti.dim; }
  bool operator==(const ManifoldDescriptor&) const = default;
};

// Table value when determined, else the tracked value.
std::optional<std::int64_t> descriptor_euler(const ManifoldDescriptor& m);

struct Violation {
  std::string rule;
  std::string detail;
};

using ValidationReport = std::vector<Violation>;

ValidationReport validate(const BettiTable& t);
ValidationReport validate(const ManifoldDescriptor& m);

// Throws Errc::validation_failure listing the violations.
void require_valid(const ManifoldDescriptor& m);

// Descriptors for standard closed manifolds, with flags a careful user would
// set (stably parallelizable products of spheres etc.).
ManifoldDescriptor sphere_descriptor(int p);
ManifoldDescriptor sphere_product_descriptor(const std::vector<int>& sphere_dims);

}  // namespace parembed
