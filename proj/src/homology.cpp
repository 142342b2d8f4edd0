#include "parembed/homology.hpp"

#include <algorithm>
#include <sstream>

#include "parembed/error.hpp"
#include "parembed/integer.hpp"

namespace parembed {

namespace {

bool all_known(const BettiSequence& seq) {
  return std::all_of(seq.begin(), seq.end(), [](const BettiEntry& e) { return e.has_value(); });
}

std::optional<std::int64_t> alternating_sum(const BettiSequence& seq) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!seq[i]) return std::nullopt;
    sum = (i % 2 == 0) ? checked::add(sum, *seq[i]) : checked::sub(sum, *seq[i]);
  }
  return sum;
}

BettiSequence convolve(const BettiSequence& a, const BettiSequence& b) {
  BettiSequence out(a.size() + b.size() - 1, std::int64_t{0});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = checked::add(*out[i + j], checked::mul(*a[i], *b[j]));
  return out;
}

BettiSequence sum_interior(const BettiSequence& a, const BettiSequence& b) {
  const std::size_t d = a.size() - 1;
  BettiSequence out(a.size());
  out[0] = 1;
  out[d] = 1;
  for (std::size_t i = 1; i < d; ++i) {
    if (a[i] && b[i]) out[i] = checked::add(*a[i], *b[i]);
  }
  return out;
}

}  // namespace

bool BettiTable::all_known() const { return parembed::all_known(betti_z) && parembed::all_known(betti_z2); }

BettiTable sphere_table(int p) {
  if (p < 1) throw Error(Errc::invalid_argument, "sphere dimension must be at least 1");
  BettiTable t;
  t.dim = p;
  t.betti_z.assign(p + 1, std::int64_t{0});
  t.betti_z[0] = 1;
  t.betti_z[p] = 1;
  t.betti_z2 = t.betti_z;
  return t;
}

BettiTable unknown_table(int dim) {
  BettiTable t;
  t.dim = dim;
  t.betti_z.assign(dim + 1, std::nullopt);
  t.betti_z2.assign(dim + 1, std::nullopt);
  return t;
}

std::int64_t sphere_euler(int p) { return p % 2 == 0 ? 2 : 0; }

std::optional<std::int64_t> euler_characteristic(const BettiTable& t) {
  if (auto chi = alternating_sum(t.betti_z)) return chi;
  if (t.closed && t.orientable && t.dim % 2 == 1) return 0;
  return std::nullopt;
}

std::optional<std::int64_t> euler_characteristic_mod2_table(const BettiTable& t) {
  return alternating_sum(t.betti_z2);
}

std::vector<std::size_t> semi_characteristic_missing(const BettiTable& t) {
  std::vector<std::size_t> missing;
  const int k = (t.dim - 1) / 2;
  for (int i = 0; i <= k && i < static_cast<int>(t.betti_z2.size()); ++i)
    if (!t.betti_z2[i]) missing.push_back(static_cast<std::size_t>(i));
  return missing;
}

std::optional<int> semi_characteristic(const BettiTable& t) {
  if (t.dim % 2 == 0) throw Error(Errc::even_dimension, "semi-characteristic needs odd dimension, got " + std::to_string(t.dim));
  if (!t.closed) throw Error(Errc::hypothesis_failure, "semi-characteristic needs a closed manifold");
  const int k = (t.dim - 1) / 2;
  std::int64_t parity = 0;
  for (int i = 0; i <= k; ++i) {
    if (!t.betti_z2[i]) return std::nullopt;
    parity ^= *t.betti_z2[i] & 1;
  }
  return static_cast<int>(parity);
}

BettiTable kunneth_product(const BettiTable& a, const BettiTable& b) {
  if (!a.closed || !b.closed) throw Error(Errc::hypothesis_failure, "Kunneth product needs closed factors");
  if (!a.all_known() || !b.all_known()) throw Error(Errc::unknown_entries, "Kunneth product needs fully known Betti tables");
  BettiTable out;
  out.dim = a.dim + b.dim;
  out.betti_z = convolve(a.betti_z, b.betti_z);
  out.betti_z2 = convolve(a.betti_z2, b.betti_z2);
  out.closed = true;
  out.orientable = a.orientable && b.orientable;
  return out;
}

BettiTable connected_sum(const BettiTable& a, const BettiTable& b) {
  if (a.dim != b.dim)
    throw Error(Errc::dimension_mismatch,
                "connected sum of dimensions " + std::to_string(a.dim) + " and " + std::to_string(b.dim));
  if (a.dim < 2) throw Error(Errc::dimension_too_small, "connected sum needs dimension at least 2");
  if (!a.closed || !b.closed || !a.orientable || !b.orientable)
    throw Error(Errc::hypothesis_failure, "connected sum needs closed orientable summands");
  BettiTable out;
  out.dim = a.dim;
  out.betti_z = sum_interior(a.betti_z, b.betti_z);
  out.betti_z2 = sum_interior(a.betti_z2, b.betti_z2);
  return out;
}

std::string format_betti(const BettiSequence& seq) {
  std::ostringstream os;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) os << ',';
    if (seq[i]) os << *seq[i];
    else os << '?';
  }
  return os.str();
}

}  // namespace parembed
