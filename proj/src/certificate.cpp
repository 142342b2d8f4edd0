#include "parembed/certificate.hpp"

#include <cstdint>
#include <sstream>

#include "parembed/char_classes.hpp"
#include "parembed/error.hpp"

namespace parembed {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "YES";
    case Verdict::no: return "NO";
    case Verdict::indeterminate: return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

std::string_view criterion_id(Criterion c) {
  switch (c) {
    case Criterion::stable_parallelizability: return "stable-parallelizability";
    case Criterion::kervaire_low_dimension: return "kervaire-1-3-7";
    case Criterion::kervaire_odd: return "kervaire-odd";
    case Criterion::kervaire_even: return "kervaire-even";
    case Criterion::codim2_embedding: return "codim2-embedding";
    case Criterion::wall_embedding: return "wall-embedding";
    case Criterion::lai_indices: return "lai-indices";
    case Criterion::slapar_cancellation: return "slapar-cancellation";
    case Criterion::pseudo_holomorphic: return "pseudo-holomorphic";
    case Criterion::cr_regular: return "cr-regular";
    case Criterion::hypotheses_6d: return "hypotheses-6d";
    case Criterion::pseudo_holomorphic_6d: return "pseudo-holomorphic-6d";
    case Criterion::top_chern: return "top-chern";
    case Criterion::pontryagin: return "pontryagin";
    case Criterion::obstruction_omega2: return "obstruction-omega2";
    case Criterion::obstruction_omega6: return "obstruction-omega6";
    case Criterion::bockstein: return "bockstein";
  }
  return "?";
}

std::string_view criterion_citation(Criterion c) {
  switch (c) {
    case Criterion::stable_parallelizability:
      return "a parallelizable manifold is stably parallelizable";
    case Criterion::kervaire_low_dimension:
      return "Kervaire: K_1 = K_3 = K_7 = 0, stably parallelizable implies parallelizable";
    case Criterion::kervaire_odd:
      return "Kervaire: stably parallelizable odd n != 1,3,7 is parallelizable iff semi-characteristic = 0";
    case Criterion::kervaire_even:
      return "Kervaire: stably parallelizable 2n-manifold is parallelizable iff chi = 0";
    case Criterion::codim2_embedding:
      return "smooth embedding in R^(2n+2) (codimension <= 2)";
    case Criterion::wall_embedding:
      return "Wall: simply connected, torsion-free, w2 = 0 6-manifold embeds in R^8 iff p1 = 0";
    case Criterion::lai_indices:
      return "Lai: 2 I(+-) = chi + <sum_k (+-1)^(k+1) e^k(nu) c_(n-k)(TX|M), [M]>; trivial bundles give zero pairings";
    case Criterion::slapar_cancellation:
      return "Slapar cancellation: I(+) = I(-) = 0 allows isotopy to a CR regular embedding";
    case Criterion::pseudo_holomorphic:
      return "codim-2 pseudo-holomorphic embedding exists iff M is parallelizable (given a smooth codim-2 embedding)";
    case Criterion::cr_regular:
      return "CR regular embedding in C^(n+1) forces chi = 0 (Kervaire); conversely Lai = 0 + Slapar";
    case Criterion::hypotheses_6d:
      return "6-manifold hypotheses: simply connected, torsion-free homology, w2 = 0, c1 = 0";
    case Criterion::pseudo_holomorphic_6d:
      return "6-manifold criterion: pseudo-holomorphic embedding in R^8 iff c3 = 0 = p1";
    case Criterion::top_chern:
      return "c3 = top Chern class = Euler class, <c3, [M]> = chi";
    case Criterion::pontryagin:
      return "first Pontryagin class p1 vanishes";
    case Criterion::obstruction_omega2:
      return "obstruction in H^2(M; pi_2 Gamma(4)): 2 Omega_2 = c1, vanishes when c1 = 0 and H^2 torsion-free";
    case Criterion::obstruction_omega6:
      return "obstruction in H^6(M; pi_6 Gamma(4)) identified with c3, vanishes iff chi = 0";
    case Criterion::bockstein:
      return "orientable torsion-free 6-manifold is almost complex iff Bockstein(w2) = 0";
  }
  return "?";
}

namespace {

const std::string& get(const CriterionInputs& in, std::string_view key) {
  for (const auto& [k, v] : in)
    if (k == key) return v;
  throw Error(Errc::invalid_argument, "certificate step lacks input '" + std::string(key) + "'");
}

bool flag(const CriterionInputs& in, std::string_view key) {
  const auto& v = get(in, key);
  if (v == "true") return true;
  if (v == "false") return false;
  throw Error(Errc::invalid_argument, "input '" + std::string(key) + "' is not a boolean");
}

std::optional<std::int64_t> number(const CriterionInputs& in, std::string_view key) {
  const auto& v = get(in, key);
  if (v == "?" || v == "none") return std::nullopt;
  try {
    std::size_t used = 0;
    long long x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return static_cast<std::int64_t>(x);
  } catch (const std::exception&) {
    throw Error(Errc::invalid_argument, "input '" + std::string(key) + "' is not an integer");
  }
}

std::vector<std::int64_t> numbers(const CriterionInputs& in, std::string_view key) {
  std::vector<std::int64_t> out;
  std::istringstream is(get(in, key));
  std::string item;
  while (std::getline(is, item, ',')) out.push_back(std::stoll(item));
  return out;
}

std::string holds_if(bool b) { return std::string(b ? kHolds : kFails); }

std::string tri(std::optional<bool> b) { return b ? holds_if(*b) : std::string(kUnknown); }

std::optional<bool> tri_input(const CriterionInputs& in, std::string_view key) {
  const auto& v = get(in, key);
  if (v == kHolds) return true;
  if (v == kFails) return false;
  return std::nullopt;
}

}  // namespace

std::string evaluate_criterion(Criterion c, const CriterionInputs& in) {
  switch (c) {
    case Criterion::stable_parallelizability:
      return holds_if(flag(in, "stably_parallelizable"));
    case Criterion::kervaire_low_dimension: {
      const auto d = number(in, "dim");
      return (d == 1 || d == 3 || d == 7) ? std::string(kHolds) : std::string(kInapplicable);
    }
    case Criterion::kervaire_odd: {
      const auto s = number(in, "semi_characteristic");
      return s ? holds_if(*s == 0) : std::string(kUnknown);
    }
    case Criterion::kervaire_even: {
      const auto chi = number(in, "euler");
      return chi ? holds_if(*chi == 0) : std::string(kUnknown);
    }
    case Criterion::codim2_embedding: {
      const auto k = number(in, "embeds_codim");
      return (k && *k <= 2) ? std::string(kHolds) : std::string(kUnknown);
    }
    case Criterion::wall_embedding: {
      const bool hyp = flag(in, "simply_connected") && flag(in, "torsion_free") && flag(in, "w2_zero");
      if (!hyp) return std::string(kInapplicable);
      return holds_if(flag(in, "p1_zero"));
    }
    case Criterion::lai_indices: {
      const auto chi = number(in, "chi");
      if (!chi) return std::string(kUnknown);
      auto p = numbers(in, "pairings");
      LaiPairingData data{static_cast<int>(p.size()) - 1, std::move(p)};
      const auto idx = lai_indices(*chi, data);
      return "I+=" + std::to_string(idx.plus) + " I-=" + std::to_string(idx.minus);
    }
    case Criterion::slapar_cancellation: {
      const auto plus = number(in, "I+");
      const auto minus = number(in, "I-");
      if (!plus || !minus) return std::string(kUnknown);
      return holds_if(*plus == 0 && *minus == 0);
    }
    case Criterion::pseudo_holomorphic: {
      const auto par = tri_input(in, "parallelizable");
      const auto emb = tri_input(in, "codim2_embedding");
      if (par == false) return std::string(kFails);
      if (par == true && emb == true) return std::string(kHolds);
      return std::string(kUnknown);
    }
    case Criterion::cr_regular: {
      const auto par = tri_input(in, "parallelizable");
      const auto emb = tri_input(in, "codim2_embedding");
      const auto lai = tri_input(in, "lai_vanish");
      if (par == false || lai == false) return std::string(kFails);
      if (par == true && emb == true && lai == true) return std::string(kHolds);
      return std::string(kUnknown);
    }
    case Criterion::hypotheses_6d:
      return holds_if(flag(in, "simply_connected") && flag(in, "torsion_free") && flag(in, "w2_zero") &&
                      flag(in, "c1_zero"));
    case Criterion::pseudo_holomorphic_6d: {
      const auto c3 = tri_input(in, "top_chern");
      const auto p1 = tri_input(in, "pontryagin");
      if (c3 == false || p1 == false) return std::string(kFails);
      if (c3 == true && p1 == true) return std::string(kHolds);
      return std::string(kUnknown);
    }
    case Criterion::top_chern: {
      const auto c3 = number(in, "c_top");
      return tri(c3 ? std::optional<bool>(*c3 == 0) : std::nullopt);
    }
    case Criterion::pontryagin:
      return holds_if(flag(in, "p1_zero"));
    case Criterion::obstruction_omega2:
      return std::string(flag(in, "c1_zero") && flag(in, "torsion_free") ? kVanishes : kNonzeroOrUnknown);
    case Criterion::obstruction_omega6: {
      const auto chi = number(in, "euler");
      return std::string(chi && *chi == 0 ? kVanishes : kNonzeroOrUnknown);
    }
    case Criterion::bockstein:
      return holds_if(flag(in, "bockstein_w2_zero"));
  }
  throw Error(Errc::invalid_argument, "unknown criterion");
}

bool is_decisive(const CertificateStep& step) { return step.outcome == kHolds || step.outcome == kFails; }

bool well_formed(const Decision& d) {
  if (d.verdict == Verdict::indeterminate) return !d.missing.empty();
  return !d.certificate.empty() && is_decisive(d.certificate.back());
}

std::string format_decision(const Decision& d) {
  std::ostringstream os;
  os << "VERDICT: " << to_string(d.verdict) << '\n';
  for (const auto& step : d.certificate) {
    os << "  [" << criterion_id(step.criterion) << "] " << criterion_citation(step.criterion) << " |";
    for (const auto& [k, v] : step.inputs) os << ' ' << k << '=' << v;
    os << " => " << step.outcome << '\n';
  }
  if (!d.missing.empty()) {
    os << "MISSING:";
    for (const auto& m : d.missing) os << ' ' << m;
    os << '\n';
  }
  return os.str();
}

}  // namespace parembed
