#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "parembed/decision.hpp"
#include "parembed/error.hpp"
#include "parembed/surgery.hpp"

using namespace parembed;
using Expr = SphereProductExpression;

namespace {

std::vector<std::int64_t> known(const BettiSequence& s) {
  std::vector<std::int64_t> out;
  for (const auto& e : s) out.push_back(e.value());
  return out;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("X(s) models") {
  const auto x1 = evaluate(build_X_s(1, 7));
  CHECK(known(x1.betti.betti_z) == std::vector<std::int64_t>{1, 1, 0, 0, 0, 1, 1});
  const auto x2 = evaluate(build_X_s(2, 7));
  CHECK(known(x2.betti.betti_z) == std::vector<std::int64_t>{1, 2, 0, 0, 0, 2, 1});
  CHECK(x2.stably_parallelizable);
  CHECK(descriptor_euler(evaluate(build_X_s(3, 9))) == -4);
  CHECK(evaluate(build_X_s(0, 7)).betti == sphere_table(6));
  CHECK(code_of([] { build_X_s(2, 5); }) == Errc::dimension_too_small);

  for (int s = 0; s <= 5; ++s) {
    const auto x = evaluate(build_X_s(s, 8));
    CHECK(x.betti.betti_z[1] == (s == 0 ? 0 : s));
    REQUIRE(x.pi1.has_value());
    CHECK(abelianization(*x.pi1).free_rank == static_cast<std::size_t>(s));
  }
}

TEST_CASE("relator surgery") {
  const auto free2 = parse_presentation("<a, b | >");
  CHECK(surger_relators(build_X_s(2, 7), free2).betti == evaluate(build_X_s(2, 7)).betti);

  const auto p = parse_presentation("<a, b | a^2, b^3, a b>");
  const auto even = surger_relators(build_X_s(2, 7), p);  // dim 6
  CHECK(descriptor_euler(even) == 4);
  CHECK_FALSE(even.betti.betti_z2[1].has_value());
  CHECK_FALSE(even.betti.betti_z2[2].has_value());
  CHECK_FALSE(even.betti.betti_z2[4].has_value());
  CHECK_FALSE(even.betti.betti_z2[5].has_value());
  CHECK(even.betti.betti_z[3] == 0);
  CHECK(even.betti.betti_z[1] == 0);
  CHECK(even.stably_parallelizable);
  CHECK(*even.pi1 == p);

  const auto odd = surger_relators(build_X_s(2, 8), p);  // dim 7
  CHECK(descriptor_euler(odd) == 0);

  CHECK(code_of([&] { surger_relators(build_X_s(3, 7), p); }) == Errc::generator_count_mismatch);
}

TEST_CASE("spin construction") {
  for (int n : {6, 8, 10}) {
    const auto x = surger_relators(build_X_s(1, n), parse_presentation("<a | a^5>"));
    const auto y = spin_construction(x);
    CHECK(y.dim() == n);
    CHECK(descriptor_euler(y) == 2);
    CHECK(abelianization(*y.pi1) == abelianization(*x.pi1));
    CHECK(y.stably_parallelizable);
  }
  for (int n : {7, 9}) {
    const auto y = spin_construction(evaluate(build_X_s(2, n)));
    CHECK(descriptor_euler(y) == 0);
  }
  // Y x S^1 surgered along a circle kills b1 and b5.
  const auto y = spin_construction(evaluate(Expr::product(Expr::sphere(2), Expr::sphere(3))));
  CHECK(known(y.betti.betti_z) == std::vector<std::int64_t>{1, 0, 1, 2, 1, 0, 1});
}

TEST_CASE("euler kill") {
  const auto x6 = spin_construction(evaluate(build_X_s(0, 6)));
  CHECK(descriptor_euler(x6) == 2);
  CHECK(descriptor_euler(kill_euler(x6)) == 0);
  const auto x8 = spin_construction(evaluate(build_X_s(2, 8)));
  CHECK(descriptor_euler(kill_euler(x8)) == 0);
  const auto x7 = spin_construction(evaluate(build_X_s(1, 7)));
  CHECK(descriptor_euler(kill_euler(x7)) == 0);
  CHECK(code_of([] { kill_euler(sphere_descriptor(4)); }) == Errc::dimension_too_small);
}

TEST_CASE("fixup of even-dimensional manifolds") {
  auto x = evaluate(Expr::product(Expr::sphere(2), Expr::sphere(4)));  // chi 4
  const auto r = fixup_parallelizable(x);
  CHECK(descriptor_euler(r.descriptor) == 0);
  REQUIRE(r.log.steps.size() == 1);
  CHECK(r.log.steps[0].notes[0].rfind("r1=1 r2=3", 0) == 0);
  CHECK(decide_parallelizable(r.descriptor).verdict == Verdict::yes);

  auto neg = evaluate(build_X_s(3, 7));  // chi -4
  const auto r2 = fixup_parallelizable(neg);
  CHECK(r2.log.steps[0].notes[0].rfind("r1=3 r2=1", 0) == 0);
  CHECK(descriptor_euler(r2.descriptor) == 0);
}

TEST_CASE("fixup of odd-dimensional manifolds") {
  const auto s2s5 = evaluate(Expr::product(Expr::sphere(2), Expr::sphere(5)));
  CHECK(fixup_parallelizable(s2s5).descriptor == s2s5);

  const auto s9 = evaluate(Expr::sphere(9));  // semi-characteristic 1
  const auto r = fixup_parallelizable(s9);
  CHECK(semi_characteristic(r.descriptor.betti) == 0);
  CHECK(r.descriptor.betti.betti_z[3] == 1);  // a single S3 x S6 summand
  CHECK(decide_parallelizable(r.descriptor).verdict == Verdict::yes);

  const auto s7 = evaluate(Expr::sphere(7));
  CHECK(fixup_parallelizable(s7).descriptor == s7);

  auto unknown = s9;
  unknown.betti.betti_z2[2] = std::nullopt;
  unknown.betti.betti_z2[7] = std::nullopt;
  try {
    fixup_parallelizable(unknown);
    FAIL("expected IndeterminateError");
  } catch (const IndeterminateError& e) {
    CHECK(e.code() == Errc::indeterminate_semi_characteristic);
    CHECK(e.missing_degrees() == std::vector<std::size_t>{2});
  }
}

TEST_CASE("construct_M pipeline") {
  const std::vector<std::string> groups{"< | >", "<a | >", "<a, b | a b a^-1 b^-1>", "<a | a^5>", "<a, b | a^2 b^-3>",
                                        "<a, b | a^2, b^3, a b a b a b a b a b>"};
  for (const auto& g : groups) {
    const auto p = parse_presentation(g);
    for (int dim : {6, 8, 10}) {
      const auto r = construct_M(p, dim);
      CHECK(r.descriptor.dim() == dim);
      CHECK(descriptor_euler(r.descriptor) == 0);
      CHECK(r.descriptor.stably_parallelizable);
      CHECK(validate(r.descriptor).empty());
      CHECK(abelianization(*r.descriptor.pi1) == abelianization(p));
      REQUIRE(r.log.steps.size() == 4);
      CHECK(r.log.steps[0].tag == "free-group-model");
      CHECK(r.log.steps[3].tag == "euler-kill");
      for (std::size_t k = 1; k < r.log.steps.size(); ++k) CHECK(r.log.steps[k].chi_before == r.log.steps[k - 1].chi_after);
      for (const auto& step : r.log.steps)
        if (step.chi_after && (dim - 1) % 2 == 1 && step.op != "spin_construction" && step.op != "kill_euler")
          CHECK(*step.chi_after == 0);
    }
  }
  const auto comm = construct_M(parse_presentation("<a, b | a b a^-1 b^-1>"), 8);
  CHECK(abelianization(*comm.descriptor.pi1).free_rank == 2);
  CHECK(code_of([] { construct_M(parse_presentation("< | >"), 4); }) == Errc::dimension_too_small);
  CHECK(code_of([] { construct_M(parse_presentation("< | >"), 7); }) == Errc::odd_dimension);
}

TEST_CASE("construct_M on random presentations") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = gen::presentation(rng, 6, 6);
    const int dim = 2 * gen::uniform(rng, 3, 5);
    const auto r = construct_M(p, dim);
    CHECK(descriptor_euler(r.descriptor) == 0);
    CHECK(r.descriptor.stably_parallelizable);
    CHECK(decide_parallelizable(r.descriptor).verdict == Verdict::yes);
  }
}

TEST_CASE("provenance log format") {
  const auto r = construct_M(parse_presentation("<a | a^5>"), 6);
  const auto text = r.log.format();
  CHECK(text.rfind("STEP 1 build_X_s free-group-model chi:0->0\n", 0) == 0);
  CHECK(text.find("STEP 3 spin_construction spin chi:0->2\n") != std::string::npos);
  CHECK(text.find("STEP 4 kill_euler euler-kill chi:2->0\n") != std::string::npos);
  CHECK(text.find("DELTA 2 z2[1] 1->?\n") != std::string::npos);
}

TEST_CASE("expression printing and dimension checks") {
  const auto e = Expr::connected_sum({Expr::product(Expr::sphere(1), Expr::sphere(4)), Expr::sphere(5)});
  CHECK(to_string(e) == "S1xS4 # S5");
  CHECK(e.dim() == 5);
  CHECK(Expr::spin(e).dim() == 6);
  CHECK(code_of([] { Expr::connected_sum({Expr::sphere(2), Expr::sphere(3)}); }) == Errc::dimension_mismatch);
  CHECK(code_of([] { Expr::surger_relators(Expr::sphere(4), parse_presentation("< | >")); }) == Errc::dimension_too_small);
}
