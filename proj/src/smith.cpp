#include "parembed/smith.hpp"

#include <cctype>
#include <sstream>

#include "parembed/detail/smith_core.hpp"
#include "parembed/error.hpp"

namespace parembed {

namespace {

Matrix<CheckedInt64> to_checked(std::size_t rows, std::size_t cols, std::span<const std::int64_t> entries) {
  std::vector<CheckedInt64> v(entries.begin(), entries.end());
  return Matrix<CheckedInt64>(rows, cols, std::move(v));
}

Matrix<std::int64_t> to_int64(const Matrix<CheckedInt64>& m) {
  std::vector<std::int64_t> v;
  v.reserve(m.entries().size());
  for (const auto& x : m.entries()) v.push_back(x.value());
  return Matrix<std::int64_t>(m.rows(), m.cols(), std::move(v));
}

template <class T>
IntegerMatrix to_integer(const Matrix<T>& m) {
  std::vector<Integer> v;
  v.reserve(m.entries().size());
  for (const auto& x : m.entries()) v.emplace_back(x);
  return IntegerMatrix(m.rows(), m.cols(), std::move(v));
}

template <class T>
std::vector<T> diagonal_of(const Matrix<T>& a) {
  const std::size_t n = std::min(a.rows(), a.cols());
  std::vector<T> d;
  d.reserve(n);
  for (std::size_t i = 0; i < n; ++i) d.push_back(a(i, i));
  return d;
}

template <class T>
bool is_chain(const std::vector<T>& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < T(0)) return false;
    if (i + 1 < d.size()) {
      if (d[i] == T(0)) {
        if (d[i + 1] != T(0)) return false;
      } else if (d[i + 1] % d[i] != T(0)) {
        return false;
      }
    }
  }
  return true;
}

template <class T>
bool verify_generic(const Matrix<T>& m, const std::vector<T>& diagonal, const Matrix<T>& left,
                    const Matrix<T>& right) {
  if (left.rows() != m.rows() || left.cols() != m.rows()) return false;
  if (right.rows() != m.cols() || right.cols() != m.cols()) return false;
  if (diagonal.size() != std::min(m.rows(), m.cols())) return false;
  if (!is_chain(diagonal)) return false;
  auto product = multiply(multiply(left, m), right);
  for (std::size_t i = 0; i < product.rows(); ++i)
    for (std::size_t j = 0; j < product.cols(); ++j) {
      T expected = (i == j) ? diagonal[i] : T(0);
      if (product(i, j) != expected) return false;
    }
  auto unit = [](const T& d) { return d == T(1) || d == T(-1); };
  return unit(determinant(left)) && unit(determinant(right));
}

}  // namespace

std::optional<SmallSmithForm> smith_normal_form_int64(std::size_t rows, std::size_t cols,
                                                      std::span<const std::int64_t> entries) {
  try {
    auto left = Matrix<CheckedInt64>::identity(rows);
    auto right = Matrix<CheckedInt64>::identity(cols);
    detail::Elimination<CheckedInt64> e{to_checked(rows, cols, entries), &left, &right};
    e.run();
    SmallSmithForm out;
    for (const auto& x : diagonal_of(e.a)) out.diagonal.push_back(x.value());
    out.left = to_int64(left);
    out.right = to_int64(right);
    return out;
  } catch (const Int64Overflow&) {
    return std::nullopt;
  }
}

std::optional<std::vector<std::int64_t>> invariant_factors_int64(std::size_t rows, std::size_t cols,
                                                                 std::span<const std::int64_t> entries) {
  try {
    detail::Elimination<CheckedInt64> e{to_checked(rows, cols, entries)};
    e.run();
    std::vector<std::int64_t> out;
    for (const auto& x : diagonal_of(e.a)) out.push_back(x.value());
    return out;
  } catch (const Int64Overflow&) {
    return std::nullopt;
  }
}

SmithForm smith_normal_form_bigint(const IntegerMatrix& m) {
  auto left = IntegerMatrix::identity(m.rows());
  auto right = IntegerMatrix::identity(m.cols());
  detail::Elimination<Integer> e{m, &left, &right};
  e.run();
  return SmithForm{diagonal_of(e.a), std::move(left), std::move(right)};
}

namespace {

std::optional<std::vector<std::int64_t>> narrow(const IntegerMatrix& m) {
  std::vector<std::int64_t> v;
  v.reserve(m.entries().size());
  for (const auto& x : m.entries()) {
    if (!fits_int64(x)) return std::nullopt;
    v.push_back(static_cast<std::int64_t>(x));
  }
  return v;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  if (auto small = narrow(m)) {
    if (auto f = smith_normal_form_int64(m.rows(), m.cols(), *small)) {
      std::vector<Integer> d(f->diagonal.begin(), f->diagonal.end());
      return SmithForm{std::move(d), to_integer(f->left), to_integer(f->right)};
    }
  }
  return smith_normal_form_bigint(m);
}

std::vector<Integer> invariant_factors(const IntegerMatrix& m) {
  if (auto small = narrow(m)) {
    if (auto d = invariant_factors_int64(m.rows(), m.cols(), *small)) return {d->begin(), d->end()};
  }
  detail::Elimination<Integer> e{m};
  e.run();
  return diagonal_of(e.a);
}

bool verify_smith(const IntegerMatrix& m, const SmithForm& form) {
  return verify_generic(m, form.diagonal, form.left, form.right);
}

bool verify_smith(std::size_t rows, std::size_t cols, std::span<const std::int64_t> entries,
                  const SmallSmithForm& form) {
  try {
    std::vector<CheckedInt64> d(form.diagonal.begin(), form.diagonal.end());
    auto widen = [](const Matrix<std::int64_t>& x) {
      return Matrix<CheckedInt64>(x.rows(), x.cols(), std::vector<CheckedInt64>(x.entries().begin(), x.entries().end()));
    };
    return verify_generic(to_checked(rows, cols, entries), d, widen(form.left), widen(form.right));
  } catch (const Int64Overflow&) {
    std::vector<Integer> v(entries.begin(), entries.end());
    SmithForm big{std::vector<Integer>(form.diagonal.begin(), form.diagonal.end()), to_integer(form.left),
                  to_integer(form.right)};
    return verify_smith(IntegerMatrix(rows, cols, std::move(v)), big);
  }
}

IntegerMatrix parse_matrix(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto next_integer = [&](const char* what) -> Integer {
    skip_space();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) {
      if (start >= text.size()) throw SyntaxError(start, std::string("unexpected end of input, expected ") + what);
      throw SyntaxError(start, std::string("expected ") + what);
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw SyntaxError(pos, std::string("unexpected character in ") + what);
    std::string token(text.substr(start, pos - start));
    if (token[0] == '+') token.erase(0, 1);
    return Integer(token);
  };
  auto dimension = [&](const char* what) {
    const std::size_t at = pos;
    Integer v = next_integer(what);
    if (v < 0 || v > 1'000'000) throw SyntaxError(at, std::string("invalid ") + what);
    return static_cast<std::size_t>(v);
  };
  const std::size_t rows = dimension("row count");
  const std::size_t cols = dimension("column count");
  std::vector<Integer> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) entries.push_back(next_integer("matrix entry"));
  skip_space();
  if (pos != text.size()) throw SyntaxError(pos, "trailing data after matrix entries");
  return IntegerMatrix(rows, cols, std::move(entries));
}

std::string format_matrix(const IntegerMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace parembed
