#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parembed/matrix.hpp"

namespace parembed {

/// left * m * right == diag(diagonal), left and right unimodular, each
/// diagonal entry non-negative and dividing the next. `diagonal` has
/// min(rows, cols) entries.
struct SmithForm {
  std::vector<Integer> diagonal;
  IntegerMatrix left;
  IntegerMatrix right;
};

struct SmallSmithForm {
  std::vector<std::int64_t> diagonal;
  Matrix<std::int64_t> left;
  Matrix<std::int64_t> right;
};

// Exact for every input: runs on int64 with overflow checks and restarts on
// cpp_int if an intermediate leaves the int64 range. The pivot rule (smallest
// nonzero magnitude, ties to the lowest (row, col)) makes the output
// deterministic and identical on both paths.
SmithForm smith_normal_form(const IntegerMatrix& m);
std::vector<Integer> invariant_factors(const IntegerMatrix& m);

// int64-only path; nullopt if any intermediate would overflow.
std::optional<SmallSmithForm> smith_normal_form_int64(std::size_t rows, std::size_t cols,
                                                      std::span<const std::int64_t> entries);
std::optional<std::vector<std::int64_t>> invariant_factors_int64(std::size_t rows, std::size_t cols,
                                                                 std::span<const std::int64_t> entries);

// Arbitrary-precision path only. Exposed so tests can compare both paths.
SmithForm smith_normal_form_bigint(const IntegerMatrix& m);

// Checks left * m * right == diag(diagonal), |det left| = |det right| = 1,
// non-negativity and the divisibility chain.
bool verify_smith(const IntegerMatrix& m, const SmithForm& form);
bool verify_smith(std::size_t rows, std::size_t cols, std::span<const std::int64_t> entries,
                  const SmallSmithForm& form);

/// Matrix file format: first token pair `rows cols`, then rows*cols integers
/// in row-major order, all whitespace-separated. Errors carry a byte offset.
IntegerMatrix parse_matrix(std::string_view text);

std::string format_matrix(const IntegerMatrix& m);

}  // namespace parembed
