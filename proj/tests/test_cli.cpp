#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "fsig/cli/cache.hpp"
#include "fsig/cli/commands.hpp"
#include "fsig/cli/report.hpp"
#include "fsig/cli/ring_spec.hpp"
#include "support.hpp"

using namespace fsig;
using namespace fsig::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "fsig-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string ring_path(const char* name) { return std::string(FSIG_RING_DIR) + "/" + name; }

}  // namespace

TEST_CASE("ring spec parsing") {
  RingSpec spec;
  RingPresentation R = parse_ring_spec("# A1\np = 7\nvars = x, y, z\nrelations = x*y - z^2  # cone\norder = lex\n", &spec);
  CHECK(spec.p == 7);
  CHECK(spec.vars == std::vector<std::string>{"x", "y", "z"});
  CHECK(spec.relations == std::vector<std::string>{"x*y - z^2"});
  CHECK(spec.order == OrderKind::Lex);
  CHECK(R.relations().size() == 1);

  RingPresentation P = parse_ring_spec("p=3\nvars=x,y\nrelations=\n");
  CHECK(P.is_polynomial_ring());
}

TEST_CASE("ring spec diagnostics carry line and column") {
  auto expect = [](const char* text, std::size_t line, std::size_t column) {
    try {
      parse_ring_spec(text);
      FAIL("expected a spec error for: " << text);
    } catch (const SpecError& e) {
      INFO(std::string(text));
      CHECK(e.line() == line);
      CHECK(e.column() == column);
    }
  };
  expect("p = 6\nvars = x\n", 1, 5);
  expect("p = 5\nvars = x, 2y\n", 2, 11);
  expect("p = 5\nvars = x, x\n", 2, 11);
  expect("p = 5\nvars = x, y\nrelations = x*y, x +* y\n", 3, 21);
  expect("p = 5\nvars = x\nrelations = t\n", 3, 13);
  expect("p = 5\nvars = x\nrelations = x + 1\n", 3, 13);
  expect("p = 5\nvars = x\ncolour = red\n", 3, 1);
  expect("p = 5\np = 7\n", 2, 1);
  expect("vars = x\n", 2, 1);
  expect("p = 5\n  vars x\n", 2, 3);
  expect("p = five\nvars = x\n", 1, 5);
  expect("p = 5\nvars = x\norder = revlex\n", 3, 9);
}

TEST_CASE("fingerprint is a function of the normalized ring") {
  RingPresentation a = parse_ring_spec("p = 5\nvars = x, y\nrelations = x*y\n");
  RingPresentation b = parse_ring_spec("# same\np=5\nvars=x,y\nrelations=y*x\norder = grevlex\n");
  RingPresentation c = parse_ring_spec("p = 7\nvars = x, y\nrelations = x*y\n");
  CHECK(fingerprint(a) == fingerprint(b));
  CHECK(fingerprint(a) != fingerprint(c));
  CHECK(fingerprint(a).size() == 16);
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
}

TEST_CASE("numeric formatting") {
  CHECK(rational_json(Rational(3, 4)).dump() == R"({"num":3,"den":4})");
  CHECK(rational_json(Rational(-1, 2)).dump() == R"({"num":-1,"den":2})");
  BigInt big = BigInt(1) << 70;
  CHECK(rational_json(Rational(big, 3)).dump() == R"({"num":"1180591620717411303424","den":3})");
  CHECK(real_json(Rational(1, 3)).get<std::string>() == "0.333333333333");
  CHECK(real_json(Rational(2)).get<std::string>() == "2");
}

TEST_CASE("golden file parsing") {
  GoldenValues g = GoldenValues::parse("# c\na = 3\nb = 4/5 # tail\nc = true\n\n");
  CHECK(g.integer("a") == 3);
  CHECK(g.rational("b") == Rational(4, 5));
  CHECK(g.boolean("c"));
  CHECK_THROWS(g.integer("missing"));
  CHECK_THROWS(GoldenValues::parse("a = 1\na = 2\n"));
  CHECK_THROWS(GoldenValues::parse("oops\n"));
  CHECK(GoldenValues::parse(g.serialize("header")).entries() == g.entries());
}

TEST_CASE("csv output: header from row keys, rationals as num/den") {
  Result r = invoke({"hk", "--ring", ring_path("node.ring"), "--ideal", "x, y", "--emax", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "e,q,length,normalized,normalized_decimal\n1,5,9,9/5,1.8\n2,25,49,49/25,1.96\n");
  Result flat = invoke({"regular", "--ring", ring_path("node.ring"), "--format", "csv"});
  CHECK(flat.code == 0);
  CHECK(flat.out.rfind("regular,length,expected,dimension", 0) == 0);
  CHECK(flat.out.find("\nfalse,9,5,1") != std::string::npos);
}

TEST_CASE("run: exit codes and error records") {
  Result ok = invoke({"regular", "--ring", ring_path("reg2.ring")});
  CHECK(ok.code == 0);
  Json j = Json::parse(ok.out);
  CHECK(j["estimates"]["regular"] == true);
  CHECK(j["command"] == "regular");
  CHECK_FALSE(j.contains("timing"));

  Result usage = invoke({"probe", "--ring", ring_path("node.ring")});
  CHECK(usage.code == 2);
  CHECK(Json::parse(usage.err)["error"] == "usage");

  Result missing = invoke({"regular", "--ring", ring_path("nope.ring")});
  CHECK(missing.code == 1);
  CHECK(Json::parse(missing.err)["error"] == "domain");

  Result notprimary = invoke({"hk", "--ring", ring_path("node.ring"), "--ideal", "x", "--emax", "2"});
  CHECK(notprimary.code == 1);
  CHECK(notprimary.err.find('\n') == notprimary.err.size() - 1);
  Result unit_at_origin = invoke({"hk", "--ring", ring_path("node.ring"), "--ideal", "x - 3", "--emax", "2"});
  CHECK(unit_at_origin.code == 1);
  CHECK(unit_at_origin.err.find("\"domain\"") != std::string::npos);

  Result cap = invoke({"fsig", "--ring", ring_path("node.ring"), "--emax", "5"});
  CHECK(cap.code == 2);
  CHECK(invoke({"nosuch"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);

  Result timed = invoke({"fpure", "--ring", ring_path("node.ring"), "--timing"});
  CHECK(Json::parse(timed.out).contains("timing"));
}

TEST_CASE("run: reports are deterministic and the cache is transparent") {
  auto dir = std::filesystem::temp_directory_path() / ("fsig-cache-test-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::vector<std::string> args{"hk", "--ring", ring_path("node.ring"), "--ideal", "x, y", "--emax", "3"};
  ::unsetenv("FSIG_CACHE_DIR");
  Result plain = invoke(args);
  CHECK(plain.code == 0);
  CHECK(invoke(args).out == plain.out);

  ::setenv("FSIG_CACHE_DIR", dir.c_str(), 1);
  Result cold = invoke(args);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 1);
  Result warm = invoke(args);
  CHECK(cold.out == plain.out);
  CHECK(warm.out == plain.out);

  auto withtiming = args;
  withtiming.push_back("--timing");
  CHECK(Json::parse(invoke(withtiming).out)["timing"]["cache_hit"] == true);
  auto off = withtiming;
  off.push_back("--cache");
  off.push_back("off");
  CHECK(Json::parse(invoke(off).out)["timing"]["cache_hit"] == false);

  // A corrupt entry is a miss, not an error.
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ofstream(entry.path()) << "{not json";
  }
  CHECK(invoke(args).out == plain.out);
  ::unsetenv("FSIG_CACHE_DIR");
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache rejects entries from another version") {
  auto dir = std::filesystem::temp_directory_path() / ("fsig-cache-version-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  ReportCache cache(dir);
  Report r{"hk"};
  r.parameters["emax"] = 2;
  r.rows.push_back(Json::object({{"e", 1}}));
  const std::string key = ReportCache::key("0123456789abcdef", r);
  cache.store(key, r);
  auto hit = cache.load(key, r);
  REQUIRE(hit);
  CHECK(hit->rows == r.rows);
  CHECK_FALSE(cache.load(ReportCache::key("fedcba9876543210", r), r));
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ifstream in(entry.path());
    Json j = Json::parse(in);
    j["tool_version"] = "0.0.0";
    std::ofstream(entry.path()) << j.dump();
  }
  CHECK_FALSE(cache.load(key, r));
  std::filesystem::remove_all(dir);
}

TEST_CASE("oracle-check reproduces every golden value") {
  Result r = invoke({"oracle-check"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["estimates"]["all_match"] == true);
  CHECK(j["estimates"]["checked"].get<int>() >= 30);
}
