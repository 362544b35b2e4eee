#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = symkron::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json parse_out(const CliResult& r) { return json::parse(r.out); }

/// Scoped override of SYMKRON_MAX_N, restored on destruction.
class EnvCap {
 public:
  explicit EnvCap(const char* value) {
    const char* old = std::getenv("SYMKRON_MAX_N");
    had_old_ = old != nullptr;
    if (had_old_) old_ = old;
    if (value == nullptr) {
      ::unsetenv("SYMKRON_MAX_N");
    } else {
      ::setenv("SYMKRON_MAX_N", value, 1);
    }
  }
  ~EnvCap() {
    if (had_old_) {
      ::setenv("SYMKRON_MAX_N", old_.c_str(), 1);
    } else {
      ::unsetenv("SYMKRON_MAX_N");
    }
  }

 private:
  bool had_old_;
  std::string old_;
};

}  // namespace

TEST_CASE("cli: kron reports the coefficient and dimensions") {
  const CliResult r = run_cli({"kron", "2,1", "2,1", "2,1"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  const json j = parse_out(r);
  CHECK(j["command"] == "kron");
  CHECK(j["g"] == 1);
  CHECK(j["d_mu"] == 2);
  CHECK(j["d_nu"] == 2);
  CHECK(j["d_lambda"] == 2);
  CHECK(j["g"].is_number_integer());
}

TEST_CASE("cli: chartable of degree one is the single cell 1") {
  const CliResult r = run_cli({"chartable", "1"});
  CHECK(r.code == 0);
  const json j = parse_out(r);
  CHECK(j["classes"] == json::array({"1"}));
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["partition"] == "1");
  CHECK(j["rows"][0]["values"] == json::array({1}));
}

TEST_CASE("cli: chartable csv puts the identity class last") {
  const CliResult r = run_cli({"chartable", "3", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "\"lambda\",\"3\",\"2,1\",\"1,1,1\"\n"
        "\"3\",1,1,1\n"
        "\"2,1\",-1,0,2\n"
        "\"1,1,1\",1,-1,1\n");
}

TEST_CASE("cli: partitions lists shapes largest part first") {
  const CliResult r = run_cli({"partitions", "4"});
  CHECK(r.code == 0);
  const json j = parse_out(r);
  CHECK(j["count"] == 5);
  CHECK(j["partitions"] ==
        json::array({"4", "3,1", "2,2", "2,1,1", "1,1,1,1"}));
}

TEST_CASE("cli: dims squares sum to the group order") {
  const CliResult r = run_cli({"dims", "6"});
  CHECK(r.code == 0);
  const json j = parse_out(r);
  CHECK(j["order"] == 720);
  CHECK(j["sum_dim_squared"] == 720);
  CHECK(j["entries"].size() == 11);
}

TEST_CASE("cli: kron-dist serializes exact rational weights") {
  const CliResult r = run_cli({"kron-dist", "2,1", "2,1"});
  CHECK(r.code == 0);
  const json j = parse_out(r);
  CHECK(j["weights"]["3"] == "1/4");
  CHECK(j["weights"]["2,1"] == "1/2");
  CHECK(j["weights"]["1,1,1"] == "1/4");
}

TEST_CASE("cli: rowsums match the known degree-4 values") {
  const CliResult r = run_cli({"rowsums", "4"});
  CHECK(r.code == 0);
  const json j = parse_out(r);
  const std::vector<std::pair<std::string, int>> expected = {
      {"4", 5}, {"3,1", 2}, {"2,2", 3}, {"2,1,1", 2}, {"1,1,1,1", 1}};
  REQUIRE(j["entries"].size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) {
    CHECK(j["entries"][i]["partition"] == expected[i].first);
    CHECK(j["entries"][i]["row_sum"] == expected[i].second);
  }
}

TEST_CASE("cli: sample output is deterministic for a fixed seed") {
  const CliResult a = run_cli({"sample", "2,1,1", "2,1,1", "--count", "40",
                               "--seed", "5"});
  const CliResult b = run_cli({"sample", "2,1,1", "2,1,1", "--count", "40",
                               "--seed", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const CliResult c = run_cli({"sample", "2,1,1", "2,1,1", "--count", "40",
                               "--seed", "6"});
  CHECK(c.code == 0);
  CHECK(a.out != c.out);
}

TEST_CASE("cli: sample histogram covers every label and sums to count") {
  const CliResult r =
      run_cli({"sample", "2,1", "2,1", "--count", "30", "--seed", "0"});
  CHECK(r.code == 0);
  const json j = parse_out(r);
  CHECK(j["seed"] == 0);
  REQUIRE(j["histogram"].size() == 3);
  int total = 0;
  for (const auto& [label, count] : j["histogram"].items()) {
    total += count.get<int>();
  }
  CHECK(total == 30);
  CHECK(j["samples"].size() == 30);
}

TEST_CASE("cli: verification suites pass at small degrees") {
  for (const std::string cmd :
       {"verify-yor", "verify-qft", "verify-rowsum"}) {
    const CliResult r = run_cli({cmd, "3"});
    CHECK(r.code == 0);
    const json j = parse_out(r);
    CHECK(j["pass"] == true);
    CHECK(j["failed"] == 0);
  }
}

TEST_CASE("cli: verify-trace lists every triple of the degree") {
  const CliResult r = run_cli({"verify-trace", "3"});
  CHECK(r.code == 0);
  const json j = parse_out(r);
  CHECK(j["pass"] == true);
  int trace_checks = 0;
  for (const auto& check : j["checks"]) {
    if (check["identity"].get<std::string>().rfind("projector trace", 0) == 0) {
      ++trace_checks;
      CHECK(check["pass"] == true);
    }
  }
  CHECK(trace_checks == 27);
}

TEST_CASE("cli: verify-trace --algebra-only drops the float checks") {
  const CliResult full = run_cli({"verify-trace", "3"});
  const CliResult algebra = run_cli({"verify-trace", "3", "--algebra-only"});
  CHECK(algebra.code == 0);
  const json jf = parse_out(full);
  const json ja = parse_out(algebra);
  CHECK(ja["total"] == 27);
  CHECK(jf["total"].get<int>() > ja["total"].get<int>());
}

TEST_CASE("cli: verify-all skips suites whose ceiling is exceeded") {
  const CliResult r = run_cli({"verify-all", "5"});
  CHECK(r.code == 0);
  const json j = parse_out(r);
  CHECK(j["pass"] == true);
  bool saw_skip = false;
  for (const auto& suite : j["suites"]) {
    if (suite.value("skipped", false)) {
      saw_skip = true;
      CHECK(suite["suite"] == "trace");
      CHECK(suite.contains("reason"));
    } else {
      CHECK(suite["report"]["pass"] == true);
    }
  }
  CHECK(saw_skip);
}

TEST_CASE("cli: malformed partitions exit with usage code") {
  CHECK(run_cli({"kron", "2,x", "2,1", "2,1"}).code == 2);
  CHECK(run_cli({"kron", "0,1", "2,1", "2,1"}).code == 2);
  CHECK(run_cli({"kron-dist", "3,1", "2,1"}).code == 2);
  const CliResult r = run_cli({"kron", "2,x", "2,1", "2,1"});
  CHECK(r.out.empty());
  CHECK(r.err.find("2,x") != std::string::npos);
}

TEST_CASE("cli: degrees over the session cap exit with usage code") {
  const CliResult r = run_cli({"partitions", "40"});
  CHECK(r.code == 2);
  CHECK(r.err.find("SYMKRON_MAX_N") != std::string::npos);
  CHECK(run_cli({"verify-trace", "5"}).code == 2);
  CHECK(run_cli({"sample", "3,2,1", "3,2,1", "--count", "1"}).code == 2);
}

TEST_CASE("cli: unknown flags and missing arguments exit with usage code") {
  CHECK(run_cli({"kron", "2,1", "2,1"}).code == 2);
  CHECK(run_cli({"kron", "2,1", "2,1", "2,1", "--bogus"}).code == 2);
  CHECK(run_cli({"no-such-command", "3"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"chartable", "3", "--format", "xml"}).code == 2);
}

TEST_CASE("cli: help exits cleanly and names the program") {
  const CliResult r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("symkron") != std::string::npos);
  CHECK(r.out.find("verify-trace") != std::string::npos);
}

TEST_CASE("cli: SYMKRON_MAX_N moves the session cap") {
  {
    const EnvCap cap("4");
    CHECK(run_cli({"partitions", "5"}).code == 2);
    CHECK(run_cli({"partitions", "4"}).code == 0);
  }
  {
    const EnvCap cap("14");
    const CliResult r = run_cli({"partitions", "14"});
    CHECK(r.code == 0);
    CHECK(parse_out(r)["count"] == 135);
  }
  {
    const EnvCap cap("not-a-number");
    const CliResult r = run_cli({"partitions", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("SYMKRON_MAX_N") != std::string::npos);
  }
  {
    const EnvCap cap(nullptr);
    CHECK(run_cli({"partitions", "12"}).code == 0);
    CHECK(run_cli({"partitions", "13"}).code == 2);
  }
}

TEST_CASE("cli: json output is byte-identical across repeat runs") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"chartable", "6"},
        std::vector<std::string>{"verify-qft", "4"},
        std::vector<std::string>{"kron-dist", "3,1", "2,2"}}) {
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli: exact values too wide for int64 serialize as strings") {
  const EnvCap cap("21");
  const CliResult r = run_cli({"dims", "21"});
  CHECK(r.code == 0);
  const json j = parse_out(r);
  CHECK(j["order"].is_string());
  CHECK(j["order"] == "51090942171709440000");
  CHECK(j["sum_dim_squared"] == "51090942171709440000");
  const CliResult small = run_cli({"dims", "20"});
  CHECK(parse_out(small)["order"].is_number_integer());
}
