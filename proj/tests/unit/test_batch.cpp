#include <catch_amalgamated.hpp>

#include <atomic>
#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "parembed/batch.hpp"

using namespace parembed;

TEST_CASE("parallel invariant factors match the serial reference") {
  std::mt19937_64 rng(31);
  std::vector<SmallMatrix> ms;
  for (int i = 0; i < 2000; ++i) {
    SmallMatrix m{std::uniform_int_distribution<std::size_t>(1, 5)(rng), std::uniform_int_distribution<std::size_t>(1, 5)(rng), {}};
    m.entries.resize(m.rows * m.cols);
    for (auto& x : m.entries) x = std::uniform_int_distribution<std::int64_t>(-20, 20)(rng);
    ms.push_back(std::move(m));
  }
  CHECK(invariant_factors_parallel(ms) == invariant_factors_serial(ms));
}

TEST_CASE("parallel decisions match the serial reference") {
  std::mt19937_64 rng(32);
  std::vector<ManifoldDescriptor> ms;
  for (int i = 0; i < 300; ++i) ms.push_back(gen::even_descriptor(rng));
  for (auto kind : {DecisionKind::parallelizable, DecisionKind::ph, DecisionKind::cr}) {
    const auto a = decide_serial(kind, ms);
    const auto b = decide_parallel(kind, ms);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].error == b[i].error);
      REQUIRE(a[i].decision.has_value() == b[i].decision.has_value());
      if (a[i].decision) {
        CHECK(a[i].decision->verdict == b[i].decision->verdict);
        CHECK(a[i].decision->certificate == b[i].decision->certificate);
      }
    }
  }
}

TEST_CASE("matrix sweep enumerates every matrix once") {
  CHECK(small_matrix_count(2, 2, -1, 1) == 81);
  std::atomic<std::uint64_t> zero_det{0};
  const auto fails = sweep_small_matrices(2, 2, -1, 1, [&](std::span<const std::int64_t> a) {
    if (a[0] * a[3] - a[1] * a[2] == 0) ++zero_det;
    return true;
  });
  CHECK(fails == 0);
  // 2x2 matrices over {-1,0,1} with zero determinant.
  std::uint64_t brute = 0;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        for (int d = -1; d <= 1; ++d) brute += (a * d - b * c == 0);
  CHECK(zero_det == brute);

  auto odd_corner = [](std::span<const std::int64_t> a) { return a[0] % 2 == 0; };
  CHECK(sweep_small_matrices(1, 3, -2, 2, odd_corner) == sweep_small_matrices_serial(1, 3, -2, 2, odd_corner));
}
