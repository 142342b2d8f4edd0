#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "parembed/cli.hpp"
#include "parembed/descriptor_io.hpp"

using namespace parembed;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name, const std::string& text) {
  const auto dir = fs::temp_directory_path() / "parembed-cli-tests";
  fs::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path;
}

std::string sphere(int p) { return format_descriptor(sphere_descriptor(p)); }

}  // namespace

TEST_CASE("decide prints a verdict and exits 0 whatever the answer") {
  const auto s6 = scratch("s6.desc", sphere(6));
  auto r = cli({"decide", "parallelizable", s6.string()});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("VERDICT: NO\n", 0) == 0);

  const auto s7 = scratch("s7.desc", sphere(7));
  r = cli({"decide", "parallelizable", s7.string()});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("VERDICT: YES\n", 0) == 0);

  r = cli({"decide", "equiv", s6.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("EQUIVALENT: yes") != std::string::npos);

  r = cli({"decide", "ph", s7.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("OddDimension") != std::string::npos);
}

TEST_CASE("construct emits a descriptor with zero Euler characteristic") {
  auto r = cli({"construct", "--group", "<a,b|a b a^-1 b^-1>", "--dim", "6"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("dim = 6\n") != std::string::npos);
  CHECK(r.out.find("euler = 0\n") != std::string::npos);
  CHECK(r.out.find("# STEP 1 build_X_s") != std::string::npos);

  const auto out = fs::temp_directory_path() / "parembed-cli-tests" / "m.desc";
  const auto log = fs::temp_directory_path() / "parembed-cli-tests" / "m.log";
  r = cli({"construct", "--group", "<a | a^5>", "--dim", "8", "--out", out.string(), "--log", log.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  const auto m = read_descriptor(out);
  CHECK(descriptor_euler(m) == 0);
  CHECK(read_text_file(log).rfind("STEP 1 ", 0) == 0);
  r = cli({"decide", "cr", out.string()});
  CHECK(r.out.rfind("VERDICT: YES\n", 0) == 0);

  CHECK(cli({"construct", "--group", "<a | b>", "--dim", "6"}).code == 2);
  CHECK(cli({"construct", "--group", "<a | a>", "--dim", "4"}).code == 2);
}

TEST_CASE("snf prints invariant factors") {
  const auto m = scratch("m.txt", "2 2\n2 0\n0 3\n");
  auto r = cli({"snf", m.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "1 6\n");
  r = cli({"snf", "--verbose", m.string()});
  CHECK(r.out.rfind("1 6\nU =\n", 0) == 0);
  CHECK(cli({"snf", scratch("bad.txt", "2 2\n1").string()}).code == 2);
}

TEST_CASE("tables") {
  auto r = cli({"tables", "kn", "--max", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("7  0\n") != std::string::npos);
  r = cli({"tables", "bott", "--n", "4", "--max-k", "9"});
  CHECK(r.out.find("9  unstable\n") != std::string::npos);
}

TEST_CASE("validation and lai") {
  std::string text = sphere(6);
  text.replace(text.find("betti_z = 1,0,0,0,0,0,1"), 23, "betti_z = 1,0,1,0,0,0,1");
  const auto bad = scratch("bad.desc", text);
  auto r = cli({"validate", bad.string()});
  CHECK(r.code == 3);
  CHECK(r.out.find("VIOLATION") != std::string::npos);
  CHECK(cli({"decide", "parallelizable", bad.string()}).code == 3);

  const auto good = scratch("good.desc", sphere(4));
  r = cli({"validate", good.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "OK\n");

  const auto lai = scratch("lai.desc", sphere(2) + "lai.n = 1\nlai.pairings = 0,0\n");
  r = cli({"lai", lai.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "I+ = 1\nI- = 1\ncr_precondition = false\n");
  const auto odd = scratch("odd.desc", sphere(2) + "lai.n = 1\nlai.pairings = 1,0\n");
  CHECK(cli({"lai", odd.string()}).code == 3);

  r = cli({"invariants", good.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("euler = 2\n") != std::string::npos);
}

TEST_CASE("input errors exit 2") {
  const auto dup = scratch("dup.desc", sphere(6) + "dim = 6\n");
  CHECK(cli({"decide", "parallelizable", dup.string()}).code == 2);
  CHECK(cli({"decide", "parallelizable", "/nonexistent/file"}).code == 2);
  CHECK(cli({"decide", "sideways", dup.string()}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const auto a = cli({"construct", "--group", "<a,b|a^2, b^3, a b a b a b a b a b>", "--dim", "10"});
  const auto b = cli({"construct", "--group", "<a,b|a^2, b^3, a b a b a b a b a b>", "--dim", "10"});
  CHECK(a.out == b.out);
}
