#include "parembed/descriptor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "parembed/char_classes.hpp"
#include "parembed/error.hpp"

namespace parembed {

std::string_view to_string(EmbeddingEvidence e) {
  switch (e) {
    case EmbeddingEvidence::asserted: return "Asserted";
    case EmbeddingEvidence::by_construction: return "ByConstruction";
    case EmbeddingEvidence::by_wall: return "ByWall";
  }
  return "Asserted";
}

std::optional<EmbeddingEvidence> parse_evidence(std::string_view s) {
  if (s == "Asserted") return EmbeddingEvidence::asserted;
  if (s == "ByConstruction") return EmbeddingEvidence::by_construction;
  if (s == "ByWall") return EmbeddingEvidence::by_wall;
  return std::nullopt;
}

std::optional<std::int64_t> descriptor_euler(const ManifoldDescriptor& m) {
  if (auto chi = euler_characteristic(m.betti)) return chi;
  return m.euler;
}

namespace {

void add(ValidationReport& r, std::string rule, std::string detail) {
  r.push_back(Violation{std::move(rule), std::move(detail)});
}

std::string degree(std::size_t i) { return "degree " + std::to_string(i); }

}  // namespace

ValidationReport validate(const BettiTable& t) {
  ValidationReport r;
  if (t.dim < 0) {
    add(r, "dimension", "negative dimension");
    return r;
  }
  const std::size_t len = static_cast<std::size_t>(t.dim) + 1;
  if (t.betti_z.size() != len) add(r, "betti-length", "betti_z has " + std::to_string(t.betti_z.size()) + " entries, expected " + std::to_string(len));
  if (t.betti_z2.size() != len) add(r, "betti-length", "betti_z2 has " + std::to_string(t.betti_z2.size()) + " entries, expected " + std::to_string(len));
  if (!r.empty()) return r;

  for (std::size_t i = 0; i < len; ++i) {
    if ((t.betti_z[i] && *t.betti_z[i] < 0) || (t.betti_z2[i] && *t.betti_z2[i] < 0))
      add(r, "betti-nonnegative", degree(i));
    if (t.betti_z[i] && t.betti_z2[i] && *t.betti_z[i] > *t.betti_z2[i])
      add(r, "rank-bound", degree(i) + ": betti_z exceeds betti_z2");
  }
  if (t.closed) {
    if ((t.betti_z[0] && *t.betti_z[0] != 1) || (t.betti_z2[0] && *t.betti_z2[0] != 1))
      add(r, "connected", "degree 0 entry must be 1");
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t j = len - 1 - i;
      if (i >= j) break;
      if (t.betti_z2[i] && t.betti_z2[j] && *t.betti_z2[i] != *t.betti_z2[j])
        add(r, "duality-z2", degree(i) + " vs " + degree(j));
      if (t.orientable && t.betti_z[i] && t.betti_z[j] && *t.betti_z[i] != *t.betti_z[j])
        add(r, "duality-q", degree(i) + " vs " + degree(j));
    }
  }
  // chi does not depend on the coefficient field.
  const auto chi_q = euler_characteristic(t);
  const auto chi_2 = euler_characteristic_mod2_table(t);
  if (chi_q && chi_2 && *chi_q != *chi_2)
    add(r, "euler-field", "chi over Q is " + std::to_string(*chi_q) + " but over Z/2 is " + std::to_string(*chi_2));
  return r;
}

ValidationReport validate(const ManifoldDescriptor& m) {
  ValidationReport r = validate(m.betti);
  if (!r.empty() && r.front().rule == "betti-length") return r;
  const BettiTable& t = m.betti;
  const int d = t.dim;

  if (d < 1) add(r, "dimension", "dimension must be at least 1");

  const auto table_chi = euler_characteristic(t);
  if (table_chi && m.euler && *table_chi != *m.euler)
    add(r, "euler-tracked", "table gives chi = " + std::to_string(*table_chi) + ", tracked value is " + std::to_string(*m.euler));
  const auto chi = descriptor_euler(m);
  if (chi && t.closed && t.orientable && d % 2 == 1 && *chi != 0)
    add(r, "euler-odd", "closed odd-dimensional manifold with chi = " + std::to_string(*chi));
  // Middle Betti number is even for d = 2 mod 4 (skew intersection form) and
  // for stably parallelizable d = 0 mod 4 (signature zero).
  if (chi && t.closed && t.orientable && d % 2 == 0 && *chi % 2 != 0 && (d % 4 == 2 || m.stably_parallelizable))
    add(r, "euler-parity", "odd chi = " + std::to_string(*chi) + " in dimension " + std::to_string(d));

  if (m.torsion_free_homology)
    for (std::size_t i = 0; i < t.betti_z.size(); ++i)
      if (t.betti_z[i] && t.betti_z2[i] && *t.betti_z[i] != *t.betti_z2[i])
        add(r, "torsion-free", degree(i) + ": betti_z and betti_z2 differ despite torsion-free homology");

  if (m.w2_zero && !m.bockstein_w2_zero) add(r, "bockstein", "w2_zero requires bockstein_w2_zero");
  if (m.stably_parallelizable && (!m.w2_zero || !m.chars.p1_zero))
    add(r, "stable-frame", "stably parallelizable manifolds have w2 = 0 and p1 = 0");
  if (m.embeds && m.embeds->codim < 0) add(r, "embedding", "negative codimension");
  if (m.embeds && m.embeds->codim <= 2 && t.closed && t.orientable && !m.stably_parallelizable)
    add(r, "embedding-normal", "a codimension <= 2 Euclidean embedding has trivial normal bundle, forcing stable parallelizability");

  if (m.simply_connected) {
    if ((d >= 2 && t.betti_z[1] && *t.betti_z[1] != 0) || (d >= 2 && t.betti_z2[1] && *t.betti_z2[1] != 0))
      add(r, "simply-connected", "H_1 must vanish");
  }
  if (m.pi1) {
    try {
      const auto ab = abelianization(*m.pi1);
      if (m.simply_connected && !ab.trivial())
        add(r, "simply-connected", "pi1 abelianizes to " + to_string(ab) + ", not the trivial group");
      if (d >= 2 && t.betti_z[1] && static_cast<std::size_t>(*t.betti_z[1]) != ab.free_rank)
        add(r, "pi1-rank", "betti_z[1] = " + std::to_string(*t.betti_z[1]) + " but pi1 abelianizes to " + to_string(ab));
      if (m.torsion_free_homology && !ab.torsion_free())
        add(r, "torsion-free", "pi1 abelianization " + to_string(ab) + " has torsion");
    } catch (const Error& e) {
      add(r, "pi1", e.what());
    }
  }

  if (m.chars.p1_zero && m.chars.p1_pairings)
    for (std::int64_t x : *m.chars.p1_pairings)
      if (x != 0) {
        add(r, "p1-pairings", "p1_zero with a nonzero p1 pairing");
        break;
      }
  if (m.chars.c_top_pairing && d % 2 == 0 && chi && *m.chars.c_top_pairing != *chi)
    add(r, "c-top", "top Chern number " + std::to_string(*m.chars.c_top_pairing) + " differs from chi = " + std::to_string(*chi));

  if (m.lai) {
    if (d % 2 != 0 || m.lai->n != d / 2)
      add(r, "lai", "lai.n must be half the dimension");
    else if (m.lai->pairings.size() != static_cast<std::size_t>(m.lai->n) + 1)
      add(r, "lai", "lai.pairings must have n + 1 entries");
    else if (chi) {
      try {
        (void)lai_indices(*chi, *m.lai);
      } catch (const Error& e) {
        add(r, "lai-parity", e.what());
      }
    }
  }
  return r;
}

void require_valid(const ManifoldDescriptor& m) {
  const auto report = validate(m);
  if (report.empty()) return;
  std::ostringstream os;
  os << "descriptor fails validation:";
  for (const auto& v : report) os << " [" << v.rule << "] " << v.detail << ';';
  throw Error(Errc::validation_failure, os.str());
}

ManifoldDescriptor sphere_product_descriptor(const std::vector<int>& sphere_dims) {
  if (sphere_dims.empty()) throw Error(Errc::invalid_argument, "empty sphere product");
  ManifoldDescriptor m;
  m.betti = sphere_table(sphere_dims.front());
  for (std::size_t i = 1; i < sphere_dims.size(); ++i) m.betti = kunneth_product(m.betti, sphere_table(sphere_dims[i]));
  const bool has_circle = std::find(sphere_dims.begin(), sphere_dims.end(), 1) != sphere_dims.end();
  m.simply_connected = !has_circle;
  m.torsion_free_homology = true;
  m.stably_parallelizable = true;
  m.w2_zero = true;
  m.bockstein_w2_zero = true;
  m.chars.p1_zero = true;
  // w2 = 0 lifts to the almost-complex structure with c1 = 0 whenever one exists.
  m.chars.c1_zero = true;
  if (m.betti.dim % 2 == 0) m.chars.c_top_pairing = euler_characteristic(m.betti);
  // A product of k >= 1 spheres embeds in codimension 1.
  m.embeds = Embedding{1, EmbeddingEvidence::asserted};
  return m;
}

ManifoldDescriptor sphere_descriptor(int p) { return sphere_product_descriptor({p}); }

}  // namespace parembed
