#pragma once

// Random inputs for property tests.

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "parembed/descriptor.hpp"
#include "parembed/presentation.hpp"
#include "parembed/surgery.hpp"

namespace gen {

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

struct Sample {
  parembed::SphereProductExpression expr;
  std::vector<std::int64_t> cells;  // Betti numbers from the cell oracle
};

inline Sample sphere_sample(int p) {
  std::vector<std::int64_t> cells(static_cast<std::size_t>(p) + 1, 0);
  cells[0] += 1;
  cells[static_cast<std::size_t>(p)] += 1;
  return {parembed::SphereProductExpression::sphere(p), cells};
}

// Random closed manifold of dimension `dim` built from spheres by products
// and connected sums.
inline Sample expression(std::mt19937_64& rng, int dim, int depth) {
  const int choice = depth <= 0 ? 0 : uniform(rng, 0, 2);
  if (choice == 0 || dim == 1) return sphere_sample(dim);
  if (choice == 1) {
    const int a = uniform(rng, 1, dim - 1);
    auto left = expression(rng, a, depth - 1);
    auto right = expression(rng, dim - a, depth - 1);
    return {parembed::SphereProductExpression::product(left.expr, right.expr), oracle::product_cells(left.cells, right.cells)};
  }
  const int count = uniform(rng, 2, 3);
  std::vector<parembed::SphereProductExpression> parts;
  std::vector<std::int64_t> cells;
  for (int i = 0; i < count; ++i) {
    auto s = expression(rng, dim, depth - 1);
    cells = i == 0 ? s.cells : oracle::connected_sum_mv(cells, s.cells);
    parts.push_back(s.expr);
  }
  return {parembed::SphereProductExpression::connected_sum(std::move(parts)), cells};
}

inline parembed::GroupPresentation presentation(std::mt19937_64& rng, int max_gens, int max_rels) {
  const int s = uniform(rng, 0, max_gens);
  const int t = s == 0 ? 0 : uniform(rng, 0, max_rels);
  std::string text = "<";
  for (int i = 0; i < s; ++i) text += (i ? ", g" : "g") + std::to_string(i);
  text += " | ";
  for (int j = 0; j < t; ++j) {
    if (j) text += ", ";
    const int len = uniform(rng, 1, 4);
    for (int k = 0; k < len; ++k) {
      int e = uniform(rng, 1, 3) * (coin(rng, 0.5) ? 1 : -1);
      text += (k ? " g" : "g") + std::to_string(uniform(rng, 0, s - 1)) + "^" + std::to_string(e);
    }
  }
  text += ">";
  return parembed::parse_presentation(text);
}

// Random descriptor of even dimension that passes validate().
inline parembed::ManifoldDescriptor even_descriptor(std::mt19937_64& rng) {
  using namespace parembed;
  while (true) {
    ManifoldDescriptor m;
    if (coin(rng, 0.15)) {
      m = construct_M(presentation(rng, 3, 3), 2 * uniform(rng, 3, 5)).descriptor;
    } else {
      m = evaluate(expression(rng, 2 * uniform(rng, 1, 5), 3).expr);
    }
    if (coin(rng, 0.25)) {
      m.stably_parallelizable = false;
      m.chars.p1_zero = false;
      m.w2_zero = coin(rng, 0.5);
      m.bockstein_w2_zero = m.w2_zero || coin(rng, 0.5);
    }
    const int e = uniform(rng, 0, 4);
    if (e == 0) {
      m.embeds.reset();
    } else if (e == 1) {
      m.embeds = Embedding{uniform(rng, 1, 4), EmbeddingEvidence::asserted};
    }
    if (!m.stably_parallelizable && m.embeds && m.embeds->codim <= 2) m.embeds.reset();
    if (coin(rng, 0.15) && m.dim() >= 4) {
      const auto mid = static_cast<std::size_t>(m.dim() / 2);
      m.betti.betti_z[mid] = std::nullopt;
      m.betti.betti_z2[mid] = std::nullopt;
      m.euler.reset();
      m.chars.c_top_pairing.reset();
      m.lai.reset();
    }
    if (validate(m).empty()) return m;
  }
}

}  // namespace gen
