#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "parembed/batch.hpp"
#include "parembed/error.hpp"
#include "parembed/smith.hpp"

using namespace parembed;

namespace {

IntegerMatrix big(std::size_t r, std::size_t c, const std::vector<std::int64_t>& e) {
  return IntegerMatrix(r, c, std::vector<Integer>(e.begin(), e.end()));
}

std::vector<std::int64_t> small(const std::vector<Integer>& xs) {
  std::vector<std::int64_t> out;
  for (const auto& x : xs) out.push_back(static_cast<std::int64_t>(x));
  return out;
}

std::vector<std::int64_t> flat(const Matrix<std::int64_t>& m) { return m.entries(); }

// Independent certificate check: U A V = diag(d) by direct multiplication and
// det U, det V = +-1 by cofactor expansion.
bool certified(std::size_t r, std::size_t c, const std::vector<std::int64_t>& a, const SmallSmithForm& f) {
  const auto uav = oracle::matmul(r, c, c, oracle::matmul(r, r, c, flat(f.left), a), flat(f.right));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const std::int64_t want = (i == j) ? f.diagonal[i] : 0;
      if (uav[i * c + j] != want) return false;
    }
  const auto du = oracle::det(r, flat(f.left));
  const auto dv = oracle::det(c, flat(f.right));
  return (du == 1 || du == -1) && (dv == 1 || dv == -1);
}

}  // namespace

TEST_CASE("documented small cases") {
  CHECK(small(invariant_factors(big(2, 2, {2, 0, 0, 3}))) == std::vector<std::int64_t>{1, 6});
  CHECK(small(invariant_factors(big(2, 3, {0, 0, 0, 0, 0, 0}))) == std::vector<std::int64_t>{0, 0});
  CHECK(small(invariant_factors(big(1, 2, {2, -3}))) == std::vector<std::int64_t>{1});
  CHECK(invariant_factors(big(0, 3, {})).empty());
}

TEST_CASE("random matrices agree with the minor-gcd oracle and carry certificates") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t r = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    std::vector<std::int64_t> a(r * c);
    for (auto& x : a) x = std::uniform_int_distribution<std::int64_t>(-5, 5)(rng);
    const auto form = smith_normal_form_int64(r, c, a);
    REQUIRE(form.has_value());
    CHECK(form->diagonal == oracle::minor_gcd_factors(r, c, a));
    CHECK(certified(r, c, a, *form));
    CHECK(verify_smith(r, c, a, *form));
    const auto full = smith_normal_form(big(r, c, a));
    CHECK(small(full.diagonal) == form->diagonal);
    CHECK(verify_smith(big(r, c, a), full));
  }
}

TEST_CASE("int64 and bigint paths give identical forms") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t r = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    std::vector<std::int64_t> a(r * c);
    for (auto& x : a) x = std::uniform_int_distribution<std::int64_t>(-30, 30)(rng);
    const auto fast = smith_normal_form(big(r, c, a));
    const auto slow = smith_normal_form_bigint(big(r, c, a));
    CHECK(fast.diagonal == slow.diagonal);
    CHECK(fast.left == slow.left);
    CHECK(fast.right == slow.right);
  }
}

TEST_CASE("entries beyond int64 fall back to arbitrary precision") {
  const Integer huge = Integer(1) << 80;
  IntegerMatrix m(2, 2, {huge, Integer(0), Integer(0), huge * 3});
  const auto f = smith_normal_form(m);
  CHECK(f.diagonal == std::vector<Integer>{huge, huge * 3});
  CHECK(verify_smith(m, f));

  const std::int64_t big64 = std::numeric_limits<std::int64_t>::max() / 2;
  std::vector<std::int64_t> a{big64, big64 - 1, big64 - 2, big64 - 7};
  const auto g = smith_normal_form(big(2, 2, a));
  CHECK(verify_smith(big(2, 2, a), g));
  CHECK(g.diagonal[0] * g.diagonal[1] == abs(Integer(big64) * (big64 - 7) - Integer(big64 - 1) * (big64 - 2)));
}

TEST_CASE("matrix file parsing") {
  const auto m = parse_matrix("2 2\n2 0\n0 3\n");
  CHECK(m == big(2, 2, {2, 0, 0, 3}));
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2 3"), SyntaxError);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2 3 4 5"), SyntaxError);
  CHECK_THROWS_AS(parse_matrix("2 x"), SyntaxError);
  const auto h = parse_matrix("1 1 123456789012345678901234567890");
  CHECK(h(0, 0) == Integer("123456789012345678901234567890"));
}

TEST_CASE("determinant") {
  CHECK(determinant(big(3, 3, {2, 0, 1, 1, 3, 2, 1, 1, 1})) == Integer(oracle::det(3, std::vector<std::int64_t>{2, 0, 1, 1, 3, 2, 1, 1, 1})));
  CHECK(determinant(big(2, 2, {0, 1, 1, 0})) == -1);
}
