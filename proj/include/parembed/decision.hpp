#pragma once

#include <optional>
#include <string_view>

#include "parembed/certificate.hpp"
#include "parembed/descriptor.hpp"

namespace parembed {

// Kervaire's criterion. Throws validation_failure on inconsistent input and
// hypothesis_failure when the manifold is not closed.
Decision decide_parallelizable(const ManifoldDescriptor& m);

// Codimension-2 pseudo-holomorphic embedding. In dimension 6 the embedding
// evidence is derived from Wall's criterion when the descriptor has none.
Decision decide_ph_embedding(const ManifoldDescriptor& m);

// CR regular embedding in C^(n+1); same verdict logic, certified through the
// Lai indices and the cancellation theorem.
Decision decide_cr_embedding(const ManifoldDescriptor& m);

// Pseudo-holomorphic embedding of a 6-manifold in R^8.
Decision decide_ph_6d(const ManifoldDescriptor& m);

struct EquivalenceReport {
  Decision ph;
  Decision cr;
  bool agree() const { return ph.verdict == cr.verdict; }
};

EquivalenceReport check_equivalence(const ManifoldDescriptor& m);

enum class DecisionKind { parallelizable, ph, cr, ac6, ph6d };

std::optional<DecisionKind> parse_decision_kind(std::string_view s);
Decision decide(DecisionKind kind, const ManifoldDescriptor& m);

// Re-evaluates every step from its recorded inputs.
bool replay(const Decision& d);

}  // namespace parembed
