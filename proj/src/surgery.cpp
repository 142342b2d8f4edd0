#include "parembed/surgery.hpp"

#include <algorithm>
#include <sstream>

#include "parembed/char_classes.hpp"
#include "parembed/error.hpp"
#include "parembed/obstruction.hpp"

namespace parembed {

using Expr = SphereProductExpression;

// ---------------------------------------------------------------------------
// Expression construction

Expr Expr::sphere(int p) {
  if (p < 1) throw Error(Errc::invalid_argument, "sphere dimension must be at least 1");
  return Expr(std::make_shared<const Node>(Node{Kind::sphere, p, p, {}, std::nullopt}));
}

Expr Expr::product(Expr a, Expr b) {
  const int d = a.dim() + b.dim();
  return Expr(std::make_shared<const Node>(Node{Kind::product, d, 0, {std::move(a), std::move(b)}, std::nullopt}));
}

Expr Expr::connected_sum(std::vector<Expr> summands) {
  if (summands.empty()) throw Error(Errc::invalid_argument, "connected sum of zero summands");
  const int d = summands.front().dim();
  for (const auto& s : summands)
    if (s.dim() != d)
      throw Error(Errc::dimension_mismatch,
                  "connected sum of dimensions " + std::to_string(d) + " and " + std::to_string(s.dim()));
  if (summands.size() > 1 && d < 2) throw Error(Errc::dimension_too_small, "connected sum needs dimension at least 2");
  return Expr(std::make_shared<const Node>(Node{Kind::connected_sum, d, 0, std::move(summands), std::nullopt}));
}

Expr Expr::surger_relators(Expr base, GroupPresentation relators) {
  const int d = base.dim();
  // Embedded loops need codimension at least three to be made disjoint.
  if (d < 5) throw Error(Errc::dimension_too_small, "relator surgery needs dimension at least 5, got " + std::to_string(d));
  return Expr(std::make_shared<const Node>(Node{Kind::surger_relators, d, 0, {std::move(base)}, std::move(relators)}));
}

Expr Expr::spin(Expr base) {
  const int d = base.dim() + 1;
  return Expr(std::make_shared<const Node>(Node{Kind::spin, d, 0, {std::move(base)}, std::nullopt}));
}

std::string to_string(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::sphere: return "S" + std::to_string(e.sphere_dim());
    case Expr::Kind::product: {
      auto wrap = [](const Expr& c) {
        return c.kind() == Expr::Kind::connected_sum && c.children().size() > 1 ? "(" + to_string(c) + ")" : to_string(c);
      };
      return wrap(e.children()[0]) + "x" + wrap(e.children()[1]);
    }
    case Expr::Kind::connected_sum: {
      std::string out;
      for (std::size_t i = 0; i < e.children().size(); ++i) out += (i ? " # " : "") + to_string(e.children()[i]);
      return out;
    }
    case Expr::Kind::surger_relators:
      return "surger(" + to_string(e.children()[0]) + ", " + to_string(e.presentation()) + ")";
    case Expr::Kind::spin: return "spin(" + to_string(e.children()[0]) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Fundamental group bookkeeping

namespace {

GroupPresentation free_product(const GroupPresentation& a, const GroupPresentation& b) {
  if (b.generator_count() == 0 && b.relators.empty()) return a;
  if (a.generator_count() == 0 && a.relators.empty()) return b;
  GroupPresentation out = free_presentation(a.generator_count() + b.generator_count());
  out.relators = a.relators;
  const std::size_t shift = a.generator_count();
  for (Word w : b.relators) {
    for (Letter& l : w) l.generator += shift;
    out.relators.push_back(std::move(w));
  }
  return out;
}

GroupPresentation direct_product(const GroupPresentation& a, const GroupPresentation& b) {
  GroupPresentation out = free_product(a, b);
  const std::size_t shift = a.generator_count();
  for (std::size_t i = 0; i < a.generator_count(); ++i)
    for (std::size_t j = 0; j < b.generator_count(); ++j)
      out.relators.push_back(Word{{i, 1}, {shift + j, 1}, {i, -1}, {shift + j, -1}});
  return out;
}

ManifoldDescriptor stable_sphere_like(BettiTable t) {
  ManifoldDescriptor m;
  m.euler = euler_characteristic(t);
  m.betti = std::move(t);
  m.torsion_free_homology = true;
  m.stably_parallelizable = true;
  m.w2_zero = true;
  m.bockstein_w2_zero = true;
  m.chars.p1_zero = true;
  m.embeds = Embedding{1, EmbeddingEvidence::by_construction};
  return m;
}

std::optional<Embedding> product_embedding(const Expr& a, const ManifoldDescriptor& ma, const Expr& b,
                                           const ManifoldDescriptor& mb) {
  if (!ma.embeds || !mb.embeds) return std::nullopt;
  // N x S^p embeds in R^(n + c + p) whenever N embeds in R^(n + c).
  int codim = ma.embeds->codim + mb.embeds->codim;
  if (b.kind() == Expr::Kind::sphere) codim = std::min(codim, ma.embeds->codim);
  if (a.kind() == Expr::Kind::sphere) codim = std::min(codim, mb.embeds->codim);
  return Embedding{codim, EmbeddingEvidence::by_construction};
}

ManifoldDescriptor product_descriptor(const Expr& a, const ManifoldDescriptor& ma, const Expr& b,
                                      const ManifoldDescriptor& mb) {
  ManifoldDescriptor m;
  m.betti = kunneth_product(ma.betti, mb.betti);
  const auto ea = descriptor_euler(ma);
  const auto eb = descriptor_euler(mb);
  if (ea && eb) m.euler = checked::mul(*ea, *eb);
  if (ma.pi1 && mb.pi1) m.pi1 = direct_product(*ma.pi1, *mb.pi1);
  m.simply_connected = ma.simply_connected && mb.simply_connected;
  m.torsion_free_homology = ma.torsion_free_homology && mb.torsion_free_homology;
  m.stably_parallelizable = ma.stably_parallelizable && mb.stably_parallelizable;
  m.w2_zero = m.stably_parallelizable || (ma.w2_zero && mb.w2_zero && m.torsion_free_homology);
  m.bockstein_w2_zero = m.w2_zero;
  m.chars.p1_zero = m.stably_parallelizable;
  m.embeds = product_embedding(a, ma, b, mb);
  return m;
}

ManifoldDescriptor apply_relator_surgery(const ManifoldDescriptor& base, const GroupPresentation& p) {
  const int d = base.dim();
  if (d < 5) throw Error(Errc::dimension_too_small, "relator surgery needs dimension at least 5, got " + std::to_string(d));
  if (!base.pi1 || base.pi1->generator_count() != p.generator_count() || base.pi1->relator_count() != 0)
    throw Error(Errc::generator_count_mismatch,
                "relator surgery needs a base with free pi1 on " + std::to_string(p.generator_count()) + " generators");
  ManifoldDescriptor m = base;
  m.pi1 = p;
  const std::size_t t = p.relator_count();
  if (t == 0) return m;

  // Each surgery trades S^1 x D^(d-1) (chi 0) for D^2 x S^(d-2) along
  // S^1 x S^(d-2) (chi 0).
  auto chi = *descriptor_euler(base);
  for (std::size_t j = 0; j < t; ++j) {
    chi = euler_of_gluing(chi - 0, 1 + (d % 2 == 0 ? 1 : -1), 0);
  }
  m.euler = chi;

  const auto ab = abelianization(p);
  const auto rank = static_cast<std::int64_t>(ab.free_rank);
  for (int i : {1, 2, d - 2, d - 1}) m.betti.betti_z2[i] = std::nullopt;
  m.betti.betti_z[2] = std::nullopt;
  m.betti.betti_z[d - 2] = std::nullopt;
  m.betti.betti_z[1] = rank;
  m.betti.betti_z[d - 1] = rank;

  m.simply_connected = certifiably_trivial(p);
  m.torsion_free_homology = false;
  m.chars.c1_zero = false;
  m.chars.c_top_pairing.reset();
  m.lai.reset();
  m.embeds = Embedding{1, EmbeddingEvidence::by_construction};
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Descriptor-level operations

ManifoldDescriptor connected_sum(const ManifoldDescriptor& a, const ManifoldDescriptor& b) {
  ManifoldDescriptor m;
  m.betti = connected_sum(a.betti, b.betti);
  const int d = m.dim();
  const auto ea = descriptor_euler(a);
  const auto eb = descriptor_euler(b);
  if (ea && eb) {
    // (A \ D^d) u (B \ D^d) glued along S^(d-1).
    const std::int64_t cell = d % 2 == 0 ? 1 : -1;
    m.euler = euler_of_gluing(checked::sub(*ea, cell), checked::sub(*eb, cell), sphere_euler(d - 1));
  }
  if (d >= 3 && a.pi1 && b.pi1) m.pi1 = free_product(*a.pi1, *b.pi1);
  m.simply_connected = d >= 3 && a.simply_connected && b.simply_connected;
  m.torsion_free_homology = a.torsion_free_homology && b.torsion_free_homology;
  m.stably_parallelizable = a.stably_parallelizable && b.stably_parallelizable;
  m.w2_zero = a.w2_zero && b.w2_zero;
  m.bockstein_w2_zero = a.bockstein_w2_zero && b.bockstein_w2_zero;
  m.chars.p1_zero = a.chars.p1_zero && b.chars.p1_zero;
  if (a.embeds && b.embeds)
    m.embeds = Embedding{std::max(a.embeds->codim, b.embeds->codim), EmbeddingEvidence::by_construction};
  return m;
}

ManifoldDescriptor evaluate(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::sphere: {
      auto m = stable_sphere_like(sphere_table(e.sphere_dim()));
      m.pi1 = free_presentation(e.sphere_dim() == 1 ? 1 : 0);
      m.simply_connected = e.sphere_dim() >= 2;
      return m;
    }
    case Expr::Kind::product: {
      const auto& a = e.children()[0];
      const auto& b = e.children()[1];
      return product_descriptor(a, evaluate(a), b, evaluate(b));
    }
    case Expr::Kind::connected_sum: {
      auto m = evaluate(e.children().front());
      for (std::size_t i = 1; i < e.children().size(); ++i) m = connected_sum(m, evaluate(e.children()[i]));
      return m;
    }
    case Expr::Kind::surger_relators:
      return apply_relator_surgery(evaluate(e.children()[0]), e.presentation());
    case Expr::Kind::spin:
      return spin_construction(evaluate(e.children()[0]));
  }
  throw Error(Errc::invalid_argument, "unknown expression kind");
}

namespace {

// Mayer-Vietoris for (Y° x S^1) u (S^(d-1) x D^2) along S^(d-1) x S^1, with
// y_i = b_i(Y°) = b_i(Y) for i < d and y_d = 0:
//   h_0 = h_(d+1) = 1, h_1 = y_1, h_i = y_i + y_(i-1) for 2 <= i <= d.
BettiSequence spin_betti(const BettiSequence& y) {
  const std::size_t d = y.size() - 1;
  auto punctured = [&](std::size_t i) -> BettiEntry { return i == d ? BettiEntry(0) : y[i]; };
  BettiSequence h(d + 2);
  h[0] = 1;
  h[d + 1] = 1;
  h[1] = punctured(1);
  for (std::size_t i = 2; i <= d; ++i) {
    const auto a = punctured(i);
    const auto b = punctured(i - 1);
    if (a && b) h[i] = checked::add(*a, *b);
  }
  return h;
}

}  // namespace

ManifoldDescriptor spin_construction(const ManifoldDescriptor& x) {
  const int d = x.dim();
  if (d < 3) throw Error(Errc::dimension_too_small, "spin construction needs dimension at least 3");
  if (!x.betti.closed || !x.betti.orientable)
    throw Error(Errc::hypothesis_failure, "spin construction needs a closed orientable manifold");
  ManifoldDescriptor m = x;
  m.betti.dim = d + 1;
  m.betti.betti_z = spin_betti(x.betti.betti_z);
  m.betti.betti_z2 = spin_betti(x.betti.betti_z2);
  // chi(Y x S^1) - chi(D^d x S^1) = 0, glued to S^(d-1) x D^2 along S^(d-1) x S^1.
  m.euler = euler_of_gluing(0 - 0, sphere_euler(d - 1), 0);
  m.chars.c1_zero = false;
  m.chars.c_top_pairing.reset();
  m.lai.reset();
  // Boundary of Y° x D^2 with Y embedded in R^(d+1).
  m.embeds = x.embeds && x.embeds->codim <= 1 ? std::optional<Embedding>(Embedding{2, EmbeddingEvidence::by_construction})
                                              : std::nullopt;
  return m;
}

ManifoldDescriptor kill_euler(const ManifoldDescriptor& x) {
  const int n = x.dim();
  if (n - 3 < 2) throw Error(Errc::dimension_too_small, "euler kill needs dimension at least 5, got " + std::to_string(n));
  auto m = connected_sum(x, evaluate(Expr::product(Expr::sphere(3), Expr::sphere(n - 3))));
  m.lai.reset();
  return m;
}

// ---------------------------------------------------------------------------
// Provenance

std::vector<BettiDelta> betti_deltas(const BettiTable& before, const BettiTable& after) {
  std::vector<BettiDelta> out;
  auto text = [](const BettiSequence& s, std::size_t i) -> std::string {
    if (i >= s.size()) return "-";
    return s[i] ? std::to_string(*s[i]) : "?";
  };
  auto scan = [&](const char* series, const BettiSequence& a, const BettiSequence& b) {
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
      auto x = text(a, i);
      auto y = text(b, i);
      if (x != y) out.push_back(BettiDelta{series, i, x, y});
    }
  };
  scan("z", before.betti_z, after.betti_z);
  scan("z2", before.betti_z2, after.betti_z2);
  return out;
}

std::string ProvenanceLog::format() const {
  auto chi = [](const std::optional<std::int64_t>& c) { return c ? std::to_string(*c) : std::string("?"); };
  std::ostringstream os;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& s = steps[k];
    const std::size_t id = k + 1;
    os << "STEP " << id << ' ' << s.op << ' ' << s.tag << " chi:" << chi(s.chi_before) << "->" << chi(s.chi_after) << '\n';
    for (const auto& d : s.deltas)
      os << "DELTA " << id << ' ' << d.series << '[' << d.degree << "] " << d.before << "->" << d.after << '\n';
    for (const auto& note : s.notes) os << "NOTE " << id << ' ' << note << '\n';
  }
  return os.str();
}

namespace {

ProvenanceStep record(std::string op, std::string tag, const ManifoldDescriptor& before, const ManifoldDescriptor& after) {
  ProvenanceStep s;
  s.op = std::move(op);
  s.tag = std::move(tag);
  s.chi_before = descriptor_euler(before);
  s.chi_after = descriptor_euler(after);
  s.deltas = betti_deltas(before.betti, after.betti);
  return s;
}

ManifoldDescriptor sum_copies(ManifoldDescriptor x, const Expr& summand, std::int64_t copies) {
  const auto block = evaluate(summand);
  for (std::int64_t i = 0; i < copies; ++i) x = connected_sum(x, block);
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------
// The construction

Expr build_X_s(int s, int n) {
  if (s < 0) throw Error(Errc::invalid_argument, "generator count must be non-negative");
  if (n - 1 < 5) throw Error(Errc::dimension_too_small, "X(s) needs n - 1 >= 5, got n = " + std::to_string(n));
  if (s == 0) return Expr::sphere(n - 1);
  std::vector<Expr> copies(static_cast<std::size_t>(s), Expr::product(Expr::sphere(1), Expr::sphere(n - 2)));
  return Expr::connected_sum(std::move(copies));
}

ManifoldDescriptor surger_relators(const Expr& x, const GroupPresentation& p) {
  return evaluate(Expr::surger_relators(x, p));
}

ConstructionResult fixup_parallelizable(const ManifoldDescriptor& x) {
  const int d = x.dim();
  if (d < 5) throw Error(Errc::dimension_too_small, "fixup needs dimension at least 5, got " + std::to_string(d));
  if (!x.stably_parallelizable || !x.betti.closed)
    throw Error(Errc::hypothesis_failure, "fixup needs a closed stably parallelizable manifold");

  ConstructionResult out{x, {}};
  if (d % 2 == 0) {
    const auto chi = descriptor_euler(x);
    if (!chi) {
      std::vector<std::size_t> missing;
      for (std::size_t i = 0; i < x.betti.betti_z.size(); ++i)
        if (!x.betti.betti_z[i]) missing.push_back(i);
      throw IndeterminateError(Errc::unknown_entries, missing, "Euler characteristic is undetermined");
    }
    if (*chi % 2 != 0) throw Error(Errc::parity, "odd Euler characteristic for a stably parallelizable manifold");
    // chi + 2(r1 - 1) - 2(r2 - 1) = 0, minimal r1 + r2 then minimal r1.
    const std::int64_t half = *chi / 2;
    const std::int64_t r1 = half >= 0 ? 1 : 1 - half;
    const std::int64_t r2 = half >= 0 ? 1 + half : 1;
    auto y = sum_copies(x, Expr::product(Expr::sphere(2), Expr::sphere(d - 2)), r1 - 1);
    y = sum_copies(y, Expr::product(Expr::sphere(3), Expr::sphere(d - 3)), r2 - 1);
    auto step = record("fixup_parallelizable", "even-dim-summands", x, y);
    step.notes.push_back("r1=" + std::to_string(r1) + " r2=" + std::to_string(r2) + ": added " + std::to_string(r1 - 1) +
                         " x S2xS" + std::to_string(d - 2) + " and " + std::to_string(r2 - 1) + " x S3xS" +
                         std::to_string(d - 3));
    out.descriptor = std::move(y);
    out.log.steps.push_back(std::move(step));
    return out;
  }

  if (kervaire_group(d) == GroupValue::zero) {
    auto step = record("fixup_parallelizable", "kervaire-1-3-7", x, x);
    step.notes.push_back("K_" + std::to_string(d) + " = 0: stably parallelizable implies parallelizable, no summands needed");
    out.log.steps.push_back(std::move(step));
    return out;
  }

  const auto chi_hat = semi_characteristic(x.betti);
  if (!chi_hat)
    throw IndeterminateError(Errc::indeterminate_semi_characteristic, semi_characteristic_missing(x.betti),
                             "semi-characteristic is undetermined; supply betti_z2 for the missing degrees");
  if (*chi_hat == 0) {
    auto step = record("fixup_parallelizable", "odd-dim-semi-characteristic", x, x);
    step.notes.push_back("semi-characteristic 0: already parallelizable");
    out.log.steps.push_back(std::move(step));
    return out;
  }

  const auto block = Expr::product(Expr::sphere(3), Expr::sphere(d - 3));
  const auto two = sum_copies(x, block, 2);
  const auto one = sum_copies(x, block, 1);
  const auto two_hat = semi_characteristic(two.betti);
  const auto one_hat = semi_characteristic(one.betti);
  const bool pick_one = one_hat == 0;
  auto step = record("fixup_parallelizable", "odd-dim-semi-characteristic", x, pick_one ? one : two);
  auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("?"); };
  step.notes.push_back("semi-characteristic of input is 1");
  step.notes.push_back("candidate x # 2(S3xS" + std::to_string(d - 3) + "): semi-characteristic " + show(two_hat));
  step.notes.push_back("candidate x # (S3xS" + std::to_string(d - 3) + "): semi-characteristic " + show(one_hat));
  if (pick_one && two_hat != 0)
    step.notes.push_back("two summands leave the semi-characteristic unchanged; using the single summand");
  out.descriptor = pick_one ? one : two;
  out.log.steps.push_back(std::move(step));
  return out;
}

ConstructionResult construct_M(const GroupPresentation& p, int dim) {
  if (dim % 2 != 0) throw Error(Errc::odd_dimension, "construct needs an even dimension, got " + std::to_string(dim));
  if (dim < 6) throw Error(Errc::dimension_too_small, "construct needs dimension at least 6, got " + std::to_string(dim));
  const int s = static_cast<int>(p.generator_count());
  ConstructionResult out;

  const auto base_sphere = evaluate(Expr::sphere(dim - 1));
  const auto xs_expr = build_X_s(s, dim);
  const auto xs = evaluate(xs_expr);
  auto step1 = record("build_X_s", "free-group-model", base_sphere, xs);
  step1.notes.push_back(s == 0 ? "s=0: X(0) is the sphere S" + std::to_string(dim - 1)
                               : "X(" + std::to_string(s) + ") = " + to_string(xs_expr));
  out.log.steps.push_back(std::move(step1));

  const auto surgered = surger_relators(xs_expr, p);
  auto step2 = record("surger_relators", "relator-surgery", xs, surgered);
  step2.notes.push_back("t=" + std::to_string(p.relator_count()) + " relator loops, disjoint by general position; tracked invariants do not depend on the choice");
  step2.notes.push_back("H1 = " + to_string(abelianization(p)) + " from the Smith normal form; pi1 is certified at the abelianization level only");
  if (p.relator_count() > 0) step2.notes.push_back("b2 and b_(d-2) depend on the relation module and are left unknown");
  out.log.steps.push_back(std::move(step2));

  const auto spun = spin_construction(surgered);
  auto step3 = record("spin_construction", "spin", surgered, spun);
  out.log.steps.push_back(std::move(step3));

  auto m = kill_euler(spun);
  auto step4 = record("kill_euler", "euler-kill", spun, m);
  step4.notes.push_back("connected sum with S3xS" + std::to_string(dim - 3));
  out.log.steps.push_back(std::move(step4));

  const auto chi = descriptor_euler(m);
  if (!chi || *chi != 0) throw Error(Errc::validation_failure, "construction did not reach chi = 0");
  // chi = 0 and stably parallelizable: parallelizable, so the frame gives an
  // almost-complex structure with vanishing Chern classes.
  m.chars.c1_zero = true;
  m.chars.c_top_pairing = 0;
  m.embeds = Embedding{2, EmbeddingEvidence::by_construction};
  m.lai = trivial_lai_data(dim / 2);
  out.descriptor = std::move(m);
  return out;
}

}  // namespace parembed
