#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parembed/descriptor.hpp"

namespace parembed {

/// Expression tree over spheres, products, connected sums, relator surgery
/// and spinning, annotated with the dimension at every node.
///
///   sphere(p)                    dim p, p >= 1
///   product(a, b)                dim a + dim b
///   connected_sum({a, b, ...})   all summands share one dim >= 2
///   surger_relators(base, G)     same dim, needs dim >= 5; base must carry a
///                                free pi1 on as many generators as G has
///   spin(base)                   dim + 1
class SphereProductExpression {
 public:
  enum class Kind { sphere, product, connected_sum, surger_relators, spin };

  static SphereProductExpression sphere(int p);
  static SphereProductExpression product(SphereProductExpression a, SphereProductExpression b);
  static SphereProductExpression connected_sum(std::vector<SphereProductExpression> summands);
  static SphereProductExpression surger_relators(SphereProductExpression base, GroupPresentation relators);
  static SphereProductExpression spin(SphereProductExpression base);

  Kind kind() const { return node_->kind; }
  int dim() const { return node_->dim; }
  int sphere_dim() const { return node_->sphere_dim; }
  const std::vector<SphereProductExpression>& children() const { return node_->children; }
  const GroupPresentation& presentation() const { return *node_->presentation; }

 private:
  struct Node {
    Kind kind;
    int dim;
    int sphere_dim = 0;
    std::vector<SphereProductExpression> children;
    std::optional<GroupPresentation> presentation;
  };
  explicit SphereProductExpression(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const SphereProductExpression& e);

// Exact invariants of the manifold an expression denotes. Entries that the
// construction does not determine come back unknown; chi is always tracked.
ManifoldDescriptor evaluate(const SphereProductExpression& e);

struct BettiDelta {
  std::string series;  // "z" or "z2"
  std::size_t degree = 0;
  std::string before;  // "-" when the degree did not exist
  std::string after;
};

struct ProvenanceStep {
  std::string op;
  std::string tag;
  std::optional<std::int64_t> chi_before;
  std::optional<std::int64_t> chi_after;
  std::vector<BettiDelta> deltas;
  std::vector<std::string> notes;
};

struct ProvenanceLog {
  std::vector<ProvenanceStep> steps;

  // One `STEP <k> <op> <tag> chi:<before>-><after>` line per step, followed
  // by its `DELTA <k> ...` and `NOTE <k> ...` lines.
  std::string format() const;
};

std::vector<BettiDelta> betti_deltas(const BettiTable& before, const BettiTable& after);

// X(s): connected sum of s copies of S^1 x S^(n-2), a closed (n-1)-manifold
// with free fundamental group of rank s. s = 0 gives S^(n-1). Needs n >= 6.
SphereProductExpression build_X_s(int s, int n);

// Surgery on t disjoint embedded loops realizing the relators of p.
ManifoldDescriptor surger_relators(const SphereProductExpression& x, const GroupPresentation& p);

// ((Y x S^1) \ (D^(d) x S^1)) u (S^(d-1) x D^2) for a closed orientable
// d-manifold Y; pi1 is unchanged.
ManifoldDescriptor spin_construction(const ManifoldDescriptor& x);

// x # (S^3 x S^(n-3)); cancels chi = 2 in even dimension n.
ManifoldDescriptor kill_euler(const ManifoldDescriptor& x);

// Connected sum at descriptor level (table, tracked chi, pi1 free product,
// stable flags).
ManifoldDescriptor connected_sum(const ManifoldDescriptor& a, const ManifoldDescriptor& b);

struct ConstructionResult {
  ManifoldDescriptor descriptor;
  ProvenanceLog log;
};

// Adds S^2 x S^(d-2) / S^3 x S^(d-3) summands until the stably parallelizable
// closed d-manifold x (d >= 5) is parallelizable. Throws IndeterminateError
// when chi or the semi-characteristic cannot be evaluated.
ConstructionResult fixup_parallelizable(const ManifoldDescriptor& x);

// Closed parallelizable manifold of even dimension dim >= 6 with pi1
// presented by p, embedded in codimension 2.
ConstructionResult construct_M(const GroupPresentation& p, int dim);

}  // namespace parembed
