#include "parembed/decision.hpp"

#include <algorithm>

#include "parembed/char_classes.hpp"
#include "parembed/error.hpp"
#include "parembed/obstruction.hpp"

namespace parembed {

namespace {

std::string b(bool x) { return x ? "true" : "false"; }

std::string num(const std::optional<std::int64_t>& x) { return x ? std::to_string(*x) : "?"; }

std::string tri(Verdict v) {
  switch (v) {
    case Verdict::yes: return std::string(kHolds);
    case Verdict::no: return std::string(kFails);
    case Verdict::indeterminate: break;
  }
  return std::string(kUnknown);
}

Verdict verdict_of(const CertificateStep& s) {
  if (s.outcome == kHolds) return Verdict::yes;
  if (s.outcome == kFails) return Verdict::no;
  return Verdict::indeterminate;
}

void append(std::vector<CertificateStep>& to, const std::vector<CertificateStep>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

void add_missing(std::vector<std::string>& to, const std::vector<std::string>& from) {
  for (const auto& item : from)
    if (std::find(to.begin(), to.end(), item) == to.end()) to.push_back(item);
}

void require_even(const ManifoldDescriptor& m) {
  if (m.dim() % 2 != 0)
    throw Error(Errc::odd_dimension, "embedding criteria need an even dimension, got " + std::to_string(m.dim()));
}

struct EmbeddingEvidenceStep {
  std::vector<CertificateStep> steps;
  bool present = false;
};

EmbeddingEvidenceStep embedding_evidence(const ManifoldDescriptor& m) {
  EmbeddingEvidenceStep out;
  if (m.embeds && m.embeds->codim <= 2) {
    out.steps.push_back(make_step(Criterion::codim2_embedding, {{"embeds_codim", std::to_string(m.embeds->codim)},
                                                                {"evidence", std::string(to_string(m.embeds->evidence))}}));
  } else if (m.dim() == 6 && wall_embeds_in_R8(m).verdict == Verdict::yes) {
    append(out.steps, wall_embeds_in_R8(m).certificate);
    out.steps.push_back(make_step(Criterion::codim2_embedding,
                                  {{"embeds_codim", "2"}, {"evidence", std::string(to_string(EmbeddingEvidence::by_wall))}}));
  } else {
    out.steps.push_back(make_step(Criterion::codim2_embedding,
                                  {{"embeds_codim", m.embeds ? std::to_string(m.embeds->codim) : "none"}}));
  }
  out.present = out.steps.back().outcome == kHolds;
  return out;
}

}  // namespace

Decision decide_parallelizable(const ManifoldDescriptor& m) {
  require_valid(m);
  if (!m.betti.closed) throw Error(Errc::hypothesis_failure, "parallelizability criterion needs a closed manifold");
  Decision d;
  d.certificate.push_back(make_step(Criterion::stable_parallelizability, {{"stably_parallelizable", b(m.stably_parallelizable)}}));
  if (!m.stably_parallelizable) {
    d.verdict = Verdict::no;
    return d;
  }
  const int n = m.dim();
  if (n % 2 != 0) {
    d.certificate.push_back(make_step(Criterion::kervaire_low_dimension, {{"dim", std::to_string(n)}}));
    if (d.certificate.back().outcome == kHolds) {
      d.verdict = Verdict::yes;
      return d;
    }
    const auto s = semi_characteristic(m.betti);
    d.certificate.push_back(make_step(Criterion::kervaire_odd,
                                      {{"semi_characteristic", s ? std::to_string(*s) : "?"}}));
    if (!s)
      for (auto i : semi_characteristic_missing(m.betti)) d.missing.push_back("betti_z2[" + std::to_string(i) + "]");
  } else {
    const auto chi = descriptor_euler(m);
    d.certificate.push_back(make_step(Criterion::kervaire_even, {{"euler", num(chi)}}));
    if (!chi) d.missing.push_back("euler");
  }
  d.verdict = verdict_of(d.certificate.back());
  return d;
}

Decision decide_ph_embedding(const ManifoldDescriptor& m) {
  require_even(m);
  Decision d = decide_parallelizable(m);
  const Verdict parallel = d.verdict;
  auto evidence = embedding_evidence(m);
  append(d.certificate, evidence.steps);
  d.certificate.push_back(make_step(Criterion::pseudo_holomorphic,
                                    {{"parallelizable", tri(parallel)},
                                     {"codim2_embedding", evidence.present ? std::string(kHolds) : std::string(kUnknown)}}));
  d.verdict = verdict_of(d.certificate.back());
  if (d.verdict != Verdict::indeterminate) {
    d.missing.clear();
  } else if (!evidence.present) {
    add_missing(d.missing, {"codim-2 embedding"});
  }
  return d;
}

Decision decide_cr_embedding(const ManifoldDescriptor& m) {
  require_even(m);
  Decision d = decide_parallelizable(m);
  const Verdict parallel = d.verdict;
  auto evidence = embedding_evidence(m);
  append(d.certificate, evidence.steps);

  // The standard embedding M in R^(2n+2) = C^(n+1): TX is trivial and the
  // normal bundle of a codimension-2 embedding in Euclidean space has zero
  // Euler class, so every pairing vanishes.
  std::string lai_vanish(kUnknown);
  if (parallel == Verdict::yes) {
    const auto chi = descriptor_euler(m);
    const auto data = trivial_lai_data(m.dim() / 2);
    std::string pairings;
    for (std::size_t k = 0; k < data.pairings.size(); ++k) pairings += (k ? "," : "") + std::to_string(data.pairings[k]);
    d.certificate.push_back(make_step(Criterion::lai_indices, {{"chi", num(chi)}, {"pairings", pairings}}));
    if (chi) {
      const auto idx = lai_indices(*chi, data);
      d.certificate.push_back(make_step(Criterion::slapar_cancellation,
                                        {{"I+", std::to_string(idx.plus)}, {"I-", std::to_string(idx.minus)}}));
      lai_vanish = d.certificate.back().outcome;
    }
  }
  d.certificate.push_back(make_step(Criterion::cr_regular,
                                    {{"parallelizable", tri(parallel)},
                                     {"codim2_embedding", evidence.present ? std::string(kHolds) : std::string(kUnknown)},
                                     {"lai_vanish", lai_vanish}}));
  d.verdict = verdict_of(d.certificate.back());
  if (d.verdict != Verdict::indeterminate) {
    d.missing.clear();
  } else if (!evidence.present) {
    add_missing(d.missing, {"codim-2 embedding"});
  }
  return d;
}

Decision decide_ph_6d(const ManifoldDescriptor& m) {
  if (m.dim() != 6) throw Error(Errc::wrong_dimension, "6-manifold criterion needs dimension 6, got " + std::to_string(m.dim()));
  require_valid(m);
  Decision d;
  d.certificate.push_back(make_step(Criterion::hypotheses_6d, {{"simply_connected", b(m.simply_connected)},
                                                               {"torsion_free", b(m.torsion_free_homology)},
                                                               {"w2_zero", b(m.w2_zero)},
                                                               {"c1_zero", b(m.chars.c1_zero)}}));
  if (d.certificate.back().outcome != kHolds) {
    d.verdict = Verdict::indeterminate;
    if (!m.simply_connected) d.missing.push_back("simply_connected");
    if (!m.torsion_free_homology) d.missing.push_back("torsion_free");
    if (!m.w2_zero) d.missing.push_back("w2_zero");
    if (!m.chars.c1_zero) d.missing.push_back("c1_zero");
    return d;
  }
  append(d.certificate, wall_embeds_in_R8(m).certificate);
  append(d.certificate, obstruction_ladder_6d(m).steps);

  const auto c_top = m.chars.c_top_pairing ? m.chars.c_top_pairing : descriptor_euler(m);
  d.certificate.push_back(make_step(Criterion::top_chern, {{"c_top", num(c_top)}}));
  const std::string c3 = d.certificate.back().outcome;
  d.certificate.push_back(make_step(Criterion::pontryagin, {{"p1_zero", b(m.chars.p1_zero)}}));
  const std::string p1 = d.certificate.back().outcome;
  d.certificate.push_back(make_step(Criterion::pseudo_holomorphic_6d, {{"top_chern", c3}, {"pontryagin", p1}}));
  d.verdict = verdict_of(d.certificate.back());
  if (d.verdict == Verdict::indeterminate) d.missing.push_back("c_top_pairing");
  return d;
}

EquivalenceReport check_equivalence(const ManifoldDescriptor& m) {
  return EquivalenceReport{decide_ph_embedding(m), decide_cr_embedding(m)};
}

std::optional<DecisionKind> parse_decision_kind(std::string_view s) {
  if (s == "parallelizable") return DecisionKind::parallelizable;
  if (s == "ph") return DecisionKind::ph;
  if (s == "cr") return DecisionKind::cr;
  if (s == "ac6") return DecisionKind::ac6;
  if (s == "ph6d") return DecisionKind::ph6d;
  return std::nullopt;
}

Decision decide(DecisionKind kind, const ManifoldDescriptor& m) {
  switch (kind) {
    case DecisionKind::parallelizable: return decide_parallelizable(m);
    case DecisionKind::ph: return decide_ph_embedding(m);
    case DecisionKind::cr: return decide_cr_embedding(m);
    case DecisionKind::ac6: require_valid(m); return admits_ac_structure_6d(m);
    case DecisionKind::ph6d: return decide_ph_6d(m);
  }
  throw Error(Errc::invalid_argument, "unknown decision kind");
}

bool replay(const Decision& d) {
  return std::all_of(d.certificate.begin(), d.certificate.end(),
                     [](const CertificateStep& s) { return evaluate_criterion(s.criterion, s.inputs) == s.outcome; });
}

}  // namespace parembed
