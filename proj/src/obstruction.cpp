#include "parembed/obstruction.hpp"

#include <iomanip>
#include <sstream>

#include "parembed/error.hpp"

namespace parembed {

std::string_view to_string(GroupValue g) {
  switch (g) {
    case GroupValue::zero: return "0";
    case GroupValue::integers: return "Z";
    case GroupValue::z2: return "Z/2";
    case GroupValue::out_of_stable_range: return "unstable";
  }
  return "?";
}

GroupValue kervaire_group(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "Kervaire group index must be positive");
  if (n % 2 == 0) return GroupValue::integers;
  if (n == 1 || n == 3 || n == 7) return GroupValue::zero;
  return GroupValue::z2;
}

GroupValue gamma_homotopy(int k, int n) {
  if (k < 0 || n < 1) throw Error(Errc::invalid_argument, "gamma_homotopy needs k >= 0 and n >= 1");
  if (k > 2 * n - 2) return GroupValue::out_of_stable_range;
  switch (k % 8) {
    case 2:
    case 6: return GroupValue::integers;
    case 0:
    case 7: return GroupValue::z2;
    default: return GroupValue::zero;
  }
}

ObstructionReport6D obstruction_ladder_6d(const ManifoldDescriptor& m) {
  if (m.dim() != 6) throw Error(Errc::wrong_dimension, "obstruction ladder needs dimension 6, got " + std::to_string(m.dim()));
  auto b = [](bool x) { return std::string(x ? "true" : "false"); };
  ObstructionReport6D r;

  r.steps.push_back(make_step(Criterion::obstruction_omega2,
                              {{"c1_zero", b(m.chars.c1_zero)}, {"torsion_free", b(m.torsion_free_homology)}}));
  r.omega2.vanishes = r.steps.back().outcome == kVanishes;
  if (r.omega2.vanishes)
    r.omega2.reason = "c1_zero and torsion_free: 2*Omega_2 = c1 = 0 in torsion-free H^2(M; Z)";
  else if (!m.chars.c1_zero)
    r.omega2.reason = "c1_zero not set: 2*Omega_2 = c1 may be nonzero";
  else
    r.omega2.reason = "torsion_free not set: Omega_2 may be 2-torsion";

  const auto chi = descriptor_euler(m);
  r.steps.push_back(make_step(Criterion::obstruction_omega6, {{"euler", chi ? std::to_string(*chi) : "?"}}));
  r.omega6.vanishes = r.steps.back().outcome == kVanishes;
  if (r.omega6.vanishes)
    r.omega6.reason = "euler = 0: Omega_6 is carried by c3 and <c3, [M]> = chi = 0";
  else if (chi)
    r.omega6.reason = "euler = " + std::to_string(*chi) + " != 0";
  else
    r.omega6.reason = "euler unknown";

  for (int i = 3; i <= 5; ++i)
    r.skeleton_notes.push_back("skeleton " + std::to_string(i) + ": pi_" + std::to_string(i) +
                               "(Gamma(4)) = " + std::string(to_string(gamma_homotopy(i, 4))) + ", extension unobstructed");
  return r;
}

std::string format_kervaire_table(int max_n) {
  if (max_n < 1) throw Error(Errc::invalid_argument, "--max must be at least 1");
  std::ostringstream os;
  const int width = std::max<int>(1, static_cast<int>(std::to_string(max_n).size()));
  os << std::setw(width) << "n" << "  K_n\n";
  for (int n = 1; n <= max_n; ++n) os << std::setw(width) << n << "  " << to_string(kervaire_group(n)) << '\n';
  return os.str();
}

std::string format_bott_table(int n, int max_k) {
  if (n < 1 || max_k < 0) throw Error(Errc::invalid_argument, "bott table needs --n >= 1 and --max-k >= 0");
  std::ostringstream os;
  const int width = std::max<int>(1, static_cast<int>(std::to_string(max_k).size()));
  os << std::setw(width) << "k" << "  pi_k(Gamma(" << n << "))\n";
  for (int k = 0; k <= max_k; ++k) os << std::setw(width) << k << "  " << to_string(gamma_homotopy(k, n)) << '\n';
  return os.str();
}

}  // namespace parembed
