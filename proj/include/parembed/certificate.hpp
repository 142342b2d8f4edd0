#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace parembed {

enum class Verdict { yes, no, indeterminate };

std::string_view to_string(Verdict v);

// Each criterion is a pure function of its recorded inputs; see
// evaluate_criterion.
enum class Criterion {
  stable_parallelizability,
  kervaire_low_dimension,
  kervaire_odd,
  kervaire_even,
  codim2_embedding,
  wall_embedding,
  lai_indices,
  slapar_cancellation,
  pseudo_holomorphic,
  cr_regular,
  hypotheses_6d,
  pseudo_holomorphic_6d,
  top_chern,
  pontryagin,
  obstruction_omega2,
  obstruction_omega6,
  bockstein,
};

std::string_view criterion_id(Criterion c);
// Human-readable statement of the mathematical result the step invokes.
std::string_view criterion_citation(Criterion c);

using CriterionInputs = std::vector<std::pair<std::string, std::string>>;

struct CertificateStep {
  Criterion criterion;
  CriterionInputs inputs;
  std::string outcome;

  bool operator==(const CertificateStep&) const = default;
};

struct Decision {
  Verdict verdict = Verdict::indeterminate;
  std::vector<CertificateStep> certificate;
  std::vector<std::string> missing;
};

// Outcome vocabulary.
inline constexpr std::string_view kHolds = "holds";
inline constexpr std::string_view kFails = "fails";
inline constexpr std::string_view kUnknown = "unknown";
inline constexpr std::string_view kInapplicable = "inapplicable";
inline constexpr std::string_view kVanishes = "vanishes";
inline constexpr std::string_view kNonzeroOrUnknown = "nonzero-or-unknown";

// Recomputes a step's outcome from its inputs. Throws Errc::invalid_argument
// on malformed inputs.
std::string evaluate_criterion(Criterion c, const CriterionInputs& inputs);

inline CertificateStep make_step(Criterion c, CriterionInputs inputs) {
  std::string outcome = evaluate_criterion(c, inputs);
  return CertificateStep{c, std::move(inputs), std::move(outcome)};
}

bool is_decisive(const CertificateStep& step);

// Structural invariants: Yes/No carry a certificate ending in a decisive
// step, Indeterminate carries a non-empty missing list.
bool well_formed(const Decision& d);

std::string format_decision(const Decision& d);

}  // namespace parembed
