#include "parembed/batch.hpp"

#include <limits>

#include "parembed/error.hpp"
#include "parembed/smith.hpp"

namespace parembed {

namespace {

std::vector<Integer> factors_of(const SmallMatrix& m) {
  if (auto small = invariant_factors_int64(m.rows, m.cols, m.entries))
    return std::vector<Integer>(small->begin(), small->end());
  std::vector<Integer> big(m.entries.begin(), m.entries.end());
  return invariant_factors(IntegerMatrix(m.rows, m.cols, std::move(big)));
}

BatchOutcome decide_one(DecisionKind kind, const ManifoldDescriptor& m) {
  try {
    return BatchOutcome{decide(kind, m), {}};
  } catch (const std::exception& e) {
    return BatchOutcome{std::nullopt, e.what()};
  }
}

}  // namespace

std::vector<std::vector<Integer>> invariant_factors_serial(const std::vector<SmallMatrix>& ms) {
  std::vector<std::vector<Integer>> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(factors_of(m));
  return out;
}

std::vector<std::vector<Integer>> invariant_factors_parallel(const std::vector<SmallMatrix>& ms) {
  std::vector<std::vector<Integer>> out(ms.size());
  const auto n = static_cast<std::int64_t>(ms.size());
  std::vector<std::string> errors(ms.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[i] = factors_of(ms[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw Error(Errc::invalid_argument, e);
  return out;
}

std::vector<BatchOutcome> decide_serial(DecisionKind kind, const std::vector<ManifoldDescriptor>& ms) {
  std::vector<BatchOutcome> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(decide_one(kind, m));
  return out;
}

std::vector<BatchOutcome> decide_parallel(DecisionKind kind, const std::vector<ManifoldDescriptor>& ms) {
  std::vector<BatchOutcome> out(ms.size());
  const auto n = static_cast<std::int64_t>(ms.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) out[i] = decide_one(kind, ms[i]);
  return out;
}

std::uint64_t small_matrix_count(std::size_t rows, std::size_t cols, int lo, int hi) {
  if (hi < lo) return 0;
  const auto base = static_cast<std::uint64_t>(hi - lo + 1);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < rows * cols; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / base) throw Error(Errc::overflow, "matrix enumeration too large");
    total *= base;
  }
  return total;
}

}  // namespace parembed
