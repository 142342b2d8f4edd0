#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "parembed/error.hpp"

namespace parembed {

using Integer = boost::multiprecision::cpp_int;

// Overflow-checked int64 arithmetic. Never wraps; throws Errc::overflow.
namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::overflow, "integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::overflow, "integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::overflow, "integer overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

}  // namespace checked

// Value type for the int64 fast path of the Smith normal form. Any overflow
// throws Int64Overflow so the caller can restart on cpp_int.
struct Int64Overflow {};

class CheckedInt64 {
 public:
  constexpr CheckedInt64() = default;
  constexpr CheckedInt64(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr std::int64_t value() const { return v_; }

  friend CheckedInt64 operator+(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Int64Overflow{};
    return r;
  }
  friend CheckedInt64 operator-(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Int64Overflow{};
    return r;
  }
  friend CheckedInt64 operator*(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Int64Overflow{};
    return r;
  }
  // Truncating division, as for cpp_int.
  friend CheckedInt64 operator/(CheckedInt64 a, CheckedInt64 b) {
    if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1) throw Int64Overflow{};
    return a.v_ / b.v_;
  }
  friend CheckedInt64 operator%(CheckedInt64 a, CheckedInt64 b) {
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  CheckedInt64 operator-() const { return CheckedInt64(0) - *this; }
  CheckedInt64& operator+=(CheckedInt64 b) { return *this = *this + b; }
  CheckedInt64& operator-=(CheckedInt64 b) { return *this = *this - b; }
  CheckedInt64& operator*=(CheckedInt64 b) { return *this = *this * b; }

  friend constexpr auto operator<=>(CheckedInt64, CheckedInt64) = default;

 private:
  std::int64_t v_ = 0;
};

inline CheckedInt64 abs(CheckedInt64 a) { return a < 0 ? -a : a; }

inline bool fits_int64(const Integer& x) {
  return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace parembed
