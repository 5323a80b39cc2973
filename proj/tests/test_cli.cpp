#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qpi/catalog.hpp"
#include "qpi/cli.hpp"
#include "qpi/errors.hpp"
#include "qpi/report.hpp"

using namespace qpi;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

BigReal num(const json& v) { return BigReal::parse(v.get<std::string>(), 30); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qpi_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_SUITE("cli list") {
  TEST_CASE("q-main family has seven rows") {
    const Run r = run({"list", "--family", "q-main"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == 8);  // header + 7
    CHECK(r.out.find("thm-e") != std::string::npos);
    CHECK(r.out.find("anchor") != std::string::npos);
  }

  TEST_CASE("full registry") {
    const Run r = run({"list"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == default_registry().records().size() + 1);
  }

  TEST_CASE("unknown family is a usage error") {
    const Run r = run({"list", "--family", "nosuch"});
    CHECK(r.code == 2);
    CHECK(r.err.find("nosuch") != std::string::npos);
  }

  TEST_CASE("parser errors and help") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"list", "--bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"verify", "--digits", "abc", "sun"}).code == 2);
  }
}

TEST_SUITE("cli verify") {
  TEST_CASE("single identity as JSON") {
    const Run r = run({"verify", "sun", "--q", "1/2", "--json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["schema_version"] == 1);
    REQUIRE(doc["results"].size() == 1);
    const json& res = doc["results"][0];
    CHECK(res["id"] == "sun");
    CHECK(res["pass"] == true);
    CHECK(res["family"] == "q-main");
    CHECK(res["point_exact"]["q"] == "1/2");
    CHECK(abs(num(res["residual"])) < BigReal::pow10(-50, 30));
    for (const char* key : {"id", "family", "anchor", "point", "lhs", "rhs", "residual", "bound", "digits", "terms",
                            "pass", "wall_ms"})
      CHECK(res.contains(key));
  }

  TEST_CASE("decimal q is accepted") {
    const Run r = run({"verify", "thm-c", "--q", "0.25", "--json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["results"][0]["point_exact"]["q"] == "1/4");
  }

  TEST_CASE("domain and usage errors exit 2") {
    const Run bad_q = run({"verify", "sun", "--q", "2"});
    CHECK(bad_q.code == 2);
    CHECK(bad_q.err.find("outside (0,1)") != std::string::npos);
    CHECK(run({"verify", "sun", "--q", "0"}).code == 2);
    CHECK(run({"verify", "sun", "--q", "x/y"}).code == 2);
    CHECK(run({"verify", "nosuch"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"verify", "sun", "--all"}).code == 2);
    CHECK(run({"verify", "pi-a", "--q", "1/2"}).code == 2);
    CHECK(run({"verify", "sun", "--digits", "30", "--tol", "1e-25"}).code == 2);  // below 1e-(digits-10)
    CHECK(run({"verify", "sun", "--tol", "-1"}).code == 2);
    CHECK(run({"verify", "2phi2-sum", "--set", "zz=1/2"}).code == 2);
    CHECK(run({"verify", "2phi2-sum", "--set", "q=3/2"}).code == 2);
  }

  TEST_CASE("lower digits relax the default tolerance") {
    const Run r = run({"verify", "thm-d", "--digits", "30", "--json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["config"]["digits"] == 30);
    CHECK(num(doc["config"]["tolerance"]) == BigReal::pow10(-20, 30));
  }

  TEST_CASE("parameter overrides") {
    const Run r = run({"verify", "2phi2-sum", "--set", "a=1/5", "--json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["results"].size() == 3);
    for (const json& res : doc["results"]) CHECK(res["point_exact"]["a"] == "1/5");
  }

  TEST_CASE("text output and the flagged record") {
    const Run r = run({"verify", "gr-cubic"});
    CHECK(r.code == 0);
    CHECK(r.out.find("flagged") != std::string::npos);
  }

  TEST_CASE("an uncertifiable tolerance is inconclusive, exit 3") {
    // 16 terms of a p-series-like sum cannot certify the 1e-5 floor.
    const Run r = run({"verify", "wei-a", "--set", "N=16", "--json"});
    CHECK(r.code == 3);
    for (const json& res : json::parse(r.out)["results"]) CHECK(res["status"] == "inconclusive");
  }

  TEST_CASE("environment default digits") {
    ::setenv(cli::kDigitsEnv, "40", 1);
    const Run r = run({"verify", "thm-c", "--q", "1/2", "--json"});
    ::setenv(cli::kDigitsEnv, "forty", 1);
    const Run bad = run({"list"});
    ::unsetenv(cli::kDigitsEnv);
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["config"]["digits"] == 40);
    CHECK(bad.code == 2);
  }
}

TEST_SUITE("cli limit") {
  TEST_CASE("thm-c with the shipped exponent") {
    const Run r = run({"limit", "thm-c"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pi/2") != std::string::npos);
    CHECK(r.out.find("status       ok") != std::string::npos);
  }

  TEST_CASE("JSON output") {
    const Run r = run({"limit", "thm-d", "--exponent", "1", "--json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["status"] == "ok");
    CHECK(doc["samples"].size() == 9);
    CHECK(num(doc["error"]) < BigReal::pow10(-6, 30));
  }

  TEST_CASE("wrong exponents exit 1") {
    CHECK(run({"limit", "thm-c", "--exponent", "3"}).code == 1);
    CHECK(run({"limit", "thm-c", "--exponent", "0"}).code == 1);
    const Run r = run({"limit", "sun", "--exponent", "7", "--levels", "2:10"});
    CHECK(r.code == 1);
    CHECK((r.out.find("unstable") != std::string::npos || r.out.find("zero") != std::string::npos));
  }

  TEST_CASE("usage errors") {
    CHECK(run({"limit"}).code == 2);
    CHECK(run({"limit", "nosuch"}).code == 2);
    CHECK(run({"limit", "8phi7-sum"}).code == 2);
    CHECK(run({"limit", "thm-c", "--levels", "4:8"}).code == 2);
    CHECK(run({"limit", "thm-c", "--levels", "four"}).code == 2);
  }
}

TEST_SUITE("cli report") {
  TEST_CASE("unwritable path exits 2") {
    const Run r = run({"report", "--out", "/nonexistent-dir/sub/report.json"});
    CHECK(r.code == 2);
    CHECK(run({"report"}).code == 2);
  }

  TEST_CASE("reruns are identical apart from timing and the document round-trips") {
    const auto a = temp_file("a.json");
    const auto b = temp_file("b.json");
    const std::vector<std::string> common{"--digits", "30", "--skip-limits", "--out"};
    std::vector<std::string> args_a{"report"};
    args_a.insert(args_a.end(), common.begin(), common.end());
    args_a.push_back(a.string());
    std::vector<std::string> args_b = args_a;
    args_b.back() = b.string();
    REQUIRE(run(args_a).code == 0);
    REQUIRE(run(args_b).code == 0);

    std::ifstream fa(a), fb(b);
    const json da = json::parse(fa);
    const json db = json::parse(fb);
    CHECK(report::without_timing(da) == report::without_timing(db));
    CHECK(report::without_timing(da).dump() == report::without_timing(db).dump());
    CHECK(json::parse(da.dump(2)) == da);
    CHECK(da["schema_version"] == 1);
    CHECK(da["tool_version"] == std::string(report::tool_version()));
    CHECK(da.contains("generated_at"));
    CHECK(da["results"].size() > 80);
    CHECK(da["limits"].empty());
    std::filesystem::remove(a);
    std::filesystem::remove(b);
  }
}

TEST_SUITE("report config") {
  TEST_CASE("tolerance invariant") {
    report::RunConfig c;
    CHECK_NOTHROW(report::validate(c));
    c.tolerance = BigReal::pow10(-51, 60);
    CHECK_THROWS_AS(report::validate(c), DomainError);
    c.tolerance = BigReal::pow10(-50, 60);
    c.q_grid.push_back(Rational(1));
    CHECK_THROWS_AS(report::validate(c), DomainError);
    c.q_grid.pop_back();
    c.format_version = 2;
    CHECK_THROWS_AS(report::validate(c), DomainError);
  }

  TEST_CASE("decimal strings") {
    CHECK(report::decimal(Rational(1, 2), 5) == "5.0000e-01");
    const json p = report::to_json(ParamPoint{{"q", Rational(1, 3)}}, 10);
    CHECK(p["q"] == "3.333333333e-01");
  }
}
