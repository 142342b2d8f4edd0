#include "parembed/char_classes.hpp"

#include "parembed/error.hpp"
#include "parembed/integer.hpp"

namespace parembed {

namespace {

std::string b(bool x) { return x ? "true" : "false"; }

}  // namespace

LaiIndices lai_indices(std::int64_t chi, const LaiPairingData& data) {
  if (data.n < 0 || data.pairings.size() != static_cast<std::size_t>(data.n) + 1)
    throw Error(Errc::invalid_argument, "Lai pairing vector must have n + 1 entries");
  std::int64_t plus = chi;
  std::int64_t minus = chi;
  for (std::size_t k = 0; k < data.pairings.size(); ++k) {
    const std::int64_t p = data.pairings[k];
    plus = checked::add(plus, p);
    minus = (k % 2 == 1) ? checked::add(minus, p) : checked::sub(minus, p);
  }
  if (plus % 2 != 0 || minus % 2 != 0)
    throw Error(Errc::parity, "Lai index numerator is odd (chi + pairings = " + std::to_string(plus) +
                                  "); pairing data is inconsistent");
  return LaiIndices{plus / 2, minus / 2};
}

bool cr_precondition(std::int64_t chi, const LaiPairingData& data) {
  const auto idx = lai_indices(chi, data);
  return idx.plus == 0 && idx.minus == 0;
}

LaiPairingData trivial_lai_data(int n) {
  return LaiPairingData{n, std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0)};
}

Decision wall_embeds_in_R8(const ManifoldDescriptor& m) {
  if (m.dim() != 6) throw Error(Errc::wrong_dimension, "Wall's criterion needs dimension 6, got " + std::to_string(m.dim()));
  Decision d;
  d.certificate.push_back(make_step(Criterion::wall_embedding, {{"simply_connected", b(m.simply_connected)},
                                                                {"torsion_free", b(m.torsion_free_homology)},
                                                                {"w2_zero", b(m.w2_zero)},
                                                                {"p1_zero", b(m.chars.p1_zero)}}));
  const auto& outcome = d.certificate.back().outcome;
  if (outcome == kHolds) {
    d.verdict = Verdict::yes;
  } else if (outcome == kFails) {
    d.verdict = Verdict::no;
  } else {
    d.verdict = Verdict::indeterminate;
    if (!m.simply_connected) d.missing.push_back("simply_connected");
    if (!m.torsion_free_homology) d.missing.push_back("torsion_free");
    if (!m.w2_zero) d.missing.push_back("w2_zero");
  }
  return d;
}

Decision admits_ac_structure_6d(const ManifoldDescriptor& m) {
  if (m.dim() != 6) throw Error(Errc::wrong_dimension, "almost-complex criterion needs dimension 6, got " + std::to_string(m.dim()));
  if (!m.betti.orientable || !m.torsion_free_homology)
    throw Error(Errc::hypothesis_failure, "almost-complex criterion needs an orientable 6-manifold with torsion-free homology");
  Decision d;
  d.certificate.push_back(make_step(Criterion::bockstein, {{"bockstein_w2_zero", b(m.bockstein_w2_zero || m.w2_zero)},
                                                           {"w2_zero", b(m.w2_zero)}}));
  d.verdict = d.certificate.back().outcome == kHolds ? Verdict::yes : Verdict::no;
  return d;
}

}  // namespace parembed
