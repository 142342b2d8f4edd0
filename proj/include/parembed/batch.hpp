#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "parembed/decision.hpp"
#include "parembed/integer.hpp"

namespace parembed {

// Batch kernels. Each has a serial reference and an OpenMP version that must
// produce identical output.

struct SmallMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> entries;  // row-major
};

std::vector<std::vector<Integer>> invariant_factors_serial(const std::vector<SmallMatrix>& ms);
std::vector<std::vector<Integer>> invariant_factors_parallel(const std::vector<SmallMatrix>& ms);

struct BatchOutcome {
  std::optional<Decision> decision;
  std::string error;  // what() of the exception when decision is empty
};

std::vector<BatchOutcome> decide_serial(DecisionKind kind, const std::vector<ManifoldDescriptor>& ms);
std::vector<BatchOutcome> decide_parallel(DecisionKind kind, const std::vector<ManifoldDescriptor>& ms);

// Number of rows x cols matrices with entries in [lo, hi].
std::uint64_t small_matrix_count(std::size_t rows, std::size_t cols, int lo, int hi);

// Writes the index-th matrix of the enumeration (entry 0 varies fastest).
inline void decode_small_matrix(std::uint64_t index, int lo, int hi, std::span<std::int64_t> out) {
  const auto base = static_cast<std::uint64_t>(hi - lo + 1);
  for (auto& e : out) {
    e = lo + static_cast<std::int64_t>(index % base);
    index /= base;
  }
}

// Calls check(span of entries) on every rows x cols matrix with entries in
// [lo, hi]; returns how many calls returned false. `check` must be safe to
// call concurrently.
template <class Check>
std::uint64_t sweep_small_matrices(std::size_t rows, std::size_t cols, int lo, int hi, Check&& check) {
  const auto total = static_cast<std::int64_t>(small_matrix_count(rows, cols, lo, hi));
  std::uint64_t failures = 0;
#pragma omp parallel reduction(+ : failures)
  {
    std::vector<std::int64_t> buf(rows * cols);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
      decode_small_matrix(static_cast<std::uint64_t>(i), lo, hi, buf);
      if (!check(std::span<const std::int64_t>(buf))) ++failures;
    }
  }
  return failures;
}

template <class Check>
std::uint64_t sweep_small_matrices_serial(std::size_t rows, std::size_t cols, int lo, int hi, Check&& check) {
  const auto total = small_matrix_count(rows, cols, lo, hi);
  std::uint64_t failures = 0;
  std::vector<std::int64_t> buf(rows * cols);
  for (std::uint64_t i = 0; i < total; ++i) {
    decode_small_matrix(i, lo, hi, buf);
    if (!check(std::span<const std::int64_t>(buf))) ++failures;
  }
  return failures;
}

}  // namespace parembed
