#pragma once

// Smith normal form elimination, generic over the scalar type so the same
// pivot sequence runs on CheckedInt64 and on cpp_int.

#include <cstddef>
#include <optional>
#include <utility>

#include "parembed/matrix.hpp"

namespace parembed::detail {

template <class T>
T magnitude(const T& x) {
  return x < T(0) ? -x : x;
}

template <class T>
struct Elimination {
  Matrix<T> a;
  Matrix<T>* left = nullptr;   // accumulates row operations
  Matrix<T>* right = nullptr;  // accumulates column operations

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    if (left)
      for (std::size_t c = 0; c < left->cols(); ++c) std::swap((*left)(i, c), (*left)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    if (right)
      for (std::size_t r = 0; r < right->rows(); ++r) std::swap((*right)(r, i), (*right)(r, j));
  }
  // row_dst -= q * row_src
  void row_submul(std::size_t dst, std::size_t src, const T& q) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(src, c) != T(0)) a(dst, c) -= q * a(src, c);
    if (left)
      for (std::size_t c = 0; c < left->cols(); ++c)
        if ((*left)(src, c) != T(0)) (*left)(dst, c) -= q * (*left)(src, c);
  }
  // col_dst -= q * col_src
  void col_submul(std::size_t dst, std::size_t src, const T& q) {
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a(r, src) != T(0)) a(r, dst) -= q * a(r, src);
    if (right)
      for (std::size_t r = 0; r < right->rows(); ++r)
        if ((*right)(r, src) != T(0)) (*right)(r, dst) -= q * (*right)(r, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    if (left)
      for (std::size_t c = 0; c < left->cols(); ++c) (*left)(i, c) = -(*left)(i, c);
  }

  // Smallest nonzero |entry| in the trailing block starting at (k, k); ties
  // go to the lowest (row, col) in row-major order.
  std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t k) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    T best_abs(0);
    for (std::size_t i = k; i < a.rows(); ++i)
      for (std::size_t j = k; j < a.cols(); ++j) {
        if (a(i, j) == T(0)) continue;
        T m = magnitude(a(i, j));
        if (!best || m < best_abs) {
          best = {i, j};
          best_abs = m;
        }
      }
    return best;
  }

  // Diagonalizes `a` in place; returns the number of nonzero invariant factors.
  std::size_t run() {
    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t k = 0; k < n; ++k) {
      for (;;) {
        auto pivot = find_pivot(k);
        if (!pivot) return k;
        swap_rows(k, pivot->first);
        swap_cols(k, pivot->second);

        bool clean = true;
        for (std::size_t i = k + 1; i < a.rows(); ++i) {
          if (a(i, k) == T(0)) continue;
          row_submul(i, k, a(i, k) / a(k, k));
          if (a(i, k) != T(0)) clean = false;
        }
        for (std::size_t j = k + 1; j < a.cols(); ++j) {
          if (a(k, j) == T(0)) continue;
          col_submul(j, k, a(k, j) / a(k, k));
          if (a(k, j) != T(0)) clean = false;
        }
        if (!clean) continue;

        // Enforce divisibility of the trailing block by the pivot.
        bool divisible = true;
        for (std::size_t i = k + 1; i < a.rows() && divisible; ++i)
          for (std::size_t j = k + 1; j < a.cols(); ++j)
            if (a(i, j) % a(k, k) != T(0)) {
              row_submul(k, i, T(-1));
              divisible = false;
              break;
            }
        if (divisible) break;
      }
      if (a(k, k) < T(0)) negate_row(k);
    }
    return n;
  }
};

}  // namespace parembed::detail
