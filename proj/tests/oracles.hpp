#pragma once

// Independent reference computations used only by the tests.

#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <vector>

namespace oracle {

// Determinant by cofactor expansion along the first row; k <= 6.
inline std::int64_t laplace_det(const std::int64_t* a, std::size_t stride, const std::size_t* rows,
                                const std::size_t* cols, std::size_t k) {
  if (k == 1) return a[rows[0] * stride + cols[0]];
  if (k == 2)
    return a[rows[0] * stride + cols[0]] * a[rows[1] * stride + cols[1]] -
           a[rows[0] * stride + cols[1]] * a[rows[1] * stride + cols[0]];
  std::int64_t det = 0;
  std::array<std::size_t, 8> sub{};
  for (std::size_t j = 0; j < k; ++j) {
    const std::int64_t e = a[rows[0] * stride + cols[j]];
    if (e == 0) continue;
    std::size_t w = 0;
    for (std::size_t c = 0; c < k; ++c)
      if (c != j) sub[w++] = cols[c];
    const std::int64_t minor = laplace_det(a, stride, rows + 1, sub.data(), k - 1);
    det += (j % 2 == 0 ? 1 : -1) * e * minor;
  }
  return det;
}

inline std::int64_t det(std::size_t n, std::span<const std::int64_t> entries) {
  if (n == 0) return 1;
  std::array<std::size_t, 8> idx{};
  std::iota(idx.begin(), idx.begin() + n, 0);
  return laplace_det(entries.data(), n, idx.data(), idx.data(), n);
}

// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::array<std::size_t, 8> idx{};
  if (k > n) return;
  std::iota(idx.begin(), idx.begin() + k, 0);
  while (true) {
    f(idx.data());
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Invariant factors via determinantal divisors: D_k = gcd of all k x k
// minors, d_k = D_k / D_(k-1) (0 once D_k = 0). rows, cols <= 6.
inline std::vector<std::int64_t> minor_gcd_factors(std::size_t rows, std::size_t cols, std::span<const std::int64_t> a) {
  const std::size_t r = std::min(rows, cols);
  std::vector<std::int64_t> out(r, 0);
  std::int64_t prev = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    std::int64_t g = 0;
    for_each_subset(rows, k, [&](const std::size_t* rs) {
      for_each_subset(cols, k, [&](const std::size_t* cs) {
        g = std::gcd(g, laplace_det(a.data(), cols, rs, cs, k));
      });
    });
    if (g == 0) break;
    out[k - 1] = g / prev;
    prev = g;
  }
  return out;
}

// Betti numbers of a product of spheres from its minimal cell structure
// (one cell per subset of factors, all differentials zero).
inline std::vector<std::int64_t> sphere_product_cells(const std::vector<int>& dims) {
  int total = 0;
  for (int d : dims) total += d;
  std::vector<std::int64_t> cells(static_cast<std::size_t>(total) + 1, 0);
  const std::size_t n = dims.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int deg = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) deg += dims[i];
    ++cells[static_cast<std::size_t>(deg)];
  }
  return cells;
}

// Cell counts of a product from the cells of the factors, pairing every cell
// of one with every cell of the other.
inline std::vector<std::int64_t> product_cells(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t ca = 0; ca < static_cast<std::size_t>(a[i]); ++ca)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += b[j];
  return out;
}

// Mayer-Vietoris for A # B = (A - D) u (B - D) along S^(d-1), d >= 2:
// removing a disc kills the top class, the gluing identifies the base points
// and creates one new top class.
inline std::vector<std::int64_t> connected_sum_mv(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  const std::size_t d = a.size() - 1;
  std::vector<std::int64_t> out(d + 1, 0);
  for (std::size_t i = 0; i <= d; ++i) out[i] = a[i] + b[i];
  out[d] -= 2;  // punctured pieces
  out[0] -= 1;  // single component
  out[d] += 1;  // fundamental class of the sum
  return out;
}

inline std::int64_t alternating_sum(const std::vector<std::int64_t>& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * b[i];
  return s;
}

inline int semi_characteristic(const std::vector<std::int64_t>& b) {
  const std::size_t k = (b.size() - 2) / 2;
  std::int64_t s = 0;
  for (std::size_t i = 0; i <= k; ++i) s += b[i];
  return static_cast<int>(s % 2);
}

// Row-major product of int64 matrices.
inline std::vector<std::int64_t> matmul(std::size_t n, std::size_t m, std::size_t p, std::span<const std::int64_t> a,
                                        std::span<const std::int64_t> b) {
  std::vector<std::int64_t> c(n * p, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < p; ++j) c[i * p + j] += a[i * m + k] * b[k * p + j];
  return c;
}

}  // namespace oracle
