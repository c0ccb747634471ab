#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <radixcode/cli.hpp>
#include <radixcode/number_system.hpp>
#include <radixcode/signed_perm.hpp>

using namespace radixcode;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse_json_line(const std::string& text) {
  return nlohmann::json::parse(text);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("convert encodes integers") {
  Result r = run_cli({"convert", "--system", "hyperoctahedral", "79"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "1:3:3:1\n");

  r = run_cli({"convert", "--system", "hyperoctahedral", "--compact", "79"});
  CHECK(r.out == "1331\n");

  r = run_cli({"convert", "--system", "factorial", "42"});
  CHECK(r.out == "1:3:0:0\n");

  r = run_cli({"convert", "--system", "fixed:10", "-137"});
  CHECK(r.out == "-1:3:7\n");
}

TEST_CASE("convert output reparses to the same value") {
  Result r = run_cli({"convert", "--system", "hyperoctahedral", "79"});
  ParsedNumber p = parse_digits(r.out.substr(0, r.out.size() - 1));
  CHECK(decode_integer(NumberSystem::hyperoctahedral(), p.integer_part) == 79);
}

TEST_CASE("convert decodes and cross-converts digit strings") {
  Result r = run_cli({"convert", "--from", "hyperoctahedral", "1:3:3:1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "79\n");

  r = run_cli({"convert", "--from", "hyperoctahedral", "--to", "factorial", "1331"});
  CHECK(r.out == "3:1:0:1\n");

  r = run_cli({"convert", "--from", "fixed:2", "--to", "fixed:16", "11111111"});
  CHECK(r.out == "15:15\n");
}

TEST_CASE("convert domain errors exit with 2") {
  Result r = run_cli({"convert", "--system", "alpha:1,1", "9"});
  CHECK(r.code == cli::kExitDomainError);
  CHECK(r.out.empty());
  CHECK(r.err.find("error:") == 0);

  r = run_cli({"convert", "79"});
  CHECK(r.code == cli::kExitDomainError);

  r = run_cli({"convert", "--from", "hyperoctahedral", "1:4:1"});
  CHECK(r.code == cli::kExitDomainError);
}

TEST_CASE("frac expands rationals") {
  Result r = run_cli({"frac", "--system", "hyperoctahedral", "13/16"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "0.1:2:3 (terminating)\n");

  r = run_cli({"frac", "--system", "fixed:10", "--max-digits", "4", "1/3"});
  CHECK(r.out == "0.3:3:3:3 (truncated)\n");

  r = run_cli({"frac", "--system", "fixed:10", "--max-digits", "4", "--exact", "1/3"});
  CHECK(r.code == cli::kExitDomainError);
}

TEST_CASE("frac json carries the schema version") {
  Result r = run_cli({"frac", "--system", "hyperoctahedral", "--json", "13/16"});
  auto j = parse_json_line(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "frac");
  CHECK(j["digits"] == "0.1:2:3");
  CHECK(j["status"] == "terminating");
  CHECK(j["terminating_place"] == 3);
}

TEST_CASE("real expands decimal literals") {
  Result r = run_cli({"real", "--system", "factorial", "--max-digits", "10",
                      "2.718281828459045"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("1:0.1:1:1:1:1:1:1:1:1:1") == 0);

  r = run_cli({"real", "--system", "fixed:2", "--max-digits", "9", "0.3"});
  CHECK(r.code == cli::kExitDomainError);
  CHECK(r.err.find("certifies") != std::string::npos);
}

TEST_CASE("rank subcommand") {
  Result r = run_cli({"rank", "--family", "hyp", "--", "-2,-1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "5\n");

  r = run_cli({"rank", "--family", "hyp", "-1,-2,-3"});
  CHECK(r.out == "47\n");

  r = run_cli({"rank", "--family", "sym", "2,4,1,3"});
  CHECK(r.out == "10\n");

  r = run_cli({"rank", "--family", "sym", "--json", "2,4,1,3"});
  auto j = parse_json_line(r.out);
  CHECK(j["rank"] == "10");
  CHECK(j["n"] == 4);

  r = run_cli({"rank", "--family", "nope", "1,2"});
  CHECK(r.code == cli::kExitDomainError);

  r = run_cli({"rank", "--family", "sym", "-2,-1"});
  CHECK(r.code == cli::kExitDomainError);
}

TEST_CASE("unrank subcommand") {
  Result r = run_cli({"unrank", "--family", "hyp", "-n", "2", "5"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "-2,-1\n");
  CHECK(parse_window("-2,-1") ==
        SignedPermutation::from_images({-2, -1}));  // output reparses

  r = run_cli({"unrank", "--family", "sym", "-n", "4", "10"});
  CHECK(r.out == "2,4,1,3\n");

  r = run_cli({"unrank", "--family", "hyp", "-n", "2", "8"});
  CHECK(r.code == cli::kExitDomainError);
}

TEST_CASE("rank and unrank are inverse through the text interface") {
  Result ranked = run_cli({"rank", "--family", "hyp", "--", "-3,1,-2"});
  std::string value = ranked.out.substr(0, ranked.out.size() - 1);
  Result back = run_cli({"unrank", "--family", "hyp", "-n", "3", value});
  CHECK(back.out == "-3,1,-2\n");
}

TEST_CASE("inv subcommand") {
  Result r = run_cli({"inv", "--", "-2,-1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "inv 3\nvector 2,1\n");

  r = run_cli({"inv", "--json", "--", "-1,-2,-3"});
  auto j = parse_json_line(r.out);
  CHECK(j["inv"] == 9);
  CHECK(j["vector"] == nlohmann::json::array({5, 3, 1}));
}

TEST_CASE("table subcommand") {
  Result r = run_cli({"table", "--lo", "24", "--hi", "24"});
  CHECK(r.out == "24\t1000\t300\n");

  r = run_cli({"table", "--lo", "60", "--hi", "60", "--diff"});
  CHECK(r.out.find("2200") != std::string::npos);
  CHECK(r.out.find("known misprint (printed 2300)") != std::string::npos);

  r = run_cli({"table", "--lo", "0", "--hi", "3", "--json"});
  auto j = parse_json_line(r.out);
  CHECK(j["rows"].size() == 4);
  CHECK(j["rows"][2]["factorial"] == "10");
}

TEST_CASE("verify subcommand") {
  Result r = run_cli({"verify", "--suite", "b2-statistics"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("[PASS] b2-statistics") == 0);

  r = run_cli({"verify", "--suite", "rank-bijection", "--n", "2", "--json"});
  auto j = parse_json_line(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["reports"][0]["check"] == "rank-bijection");

  r = run_cli({"verify", "--list"});
  CHECK(r.out.find("conversion-table") != std::string::npos);

  r = run_cli({"verify", "--suite", "bogus"});
  CHECK(r.code == cli::kExitDomainError);
}

TEST_CASE("verify exits with 3 when a check cannot pass") {
  setenv("RADIXCODE_MAX_N", "2", 1);
  Result r = run_cli({"verify", "--suite", "rank-bijection"});
  unsetenv("RADIXCODE_MAX_N");
  CHECK(r.code == cli::kExitVerificationFailed);
  CHECK(r.out.find("[FAIL] rank-bijection") == 0);
}

TEST_CASE("usage errors exit with 1") {
  Result r = run_cli({});
  CHECK(r.code == cli::kExitUsage);

  r = run_cli({"frobnicate"});
  CHECK(r.code == cli::kExitUsage);

  r = run_cli({"frac", "13/16"});  // missing --system
  CHECK(r.code == cli::kExitUsage);

  r = run_cli({"convert", "--no-such-flag", "1"});
  CHECK(r.code == cli::kExitUsage);
}

TEST_CASE("help exits cleanly") {
  Result r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("convert") != std::string::npos);
}

}  // TEST_SUITE
