#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "schroder/cli.hpp"
#include "schroder/partition.hpp"
#include "schroder/path.hpp"

using namespace schroder;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("map") {
  CHECK(run({"map", "sigma", "11232343411"}).out == "HUUUDUUDDHUUDDHDD\n");
  CHECK(run({"map", "sigma", "--direction", "inverse", "HUUDHHUUUDDHDHDUUDD"}).out ==
        "1,1,2,2,2,3,2,3,2,3,1,4,3\n");
  CHECK(run({"map", "phi", "--direction", "inverse", "HUUDHHUUUDDHDHDUUDD"}).out ==
        "1,1,2,2,2,3,1,3,2,3,2,4,3\n");
  CHECK(run({"map", "psi", "UUUDDHUDDUD"}).out == "UHUHUDDDUD\n");
  CHECK(run({"map", "psi", "--direction", "inverse", "UHUHUDDDUD"}).out == "UUUDDHUDDUD\n");
  CHECK(run({"map", "full12312", "1", "12"}).out == "\nUD\n");

  SUBCASE("objects from stdin, one per line") {
    CHECK(run({"map", "sigma"}, "1\n12\n112\n").out == "\nUD\nHUD\n");
    // The empty line is the empty path.
    CHECK(run({"map", "sigma", "--direction", "inverse"}, "\nUD\n").out == "1\n1,2\n");
  }
  SUBCASE("trace") {
    const Result r = run({"map", "sigma", "--direction", "inverse", "--trace", "UD"});
    CHECK(r.out == "0 U 1\n1 D 1\n2 U 2\n3 D 2\n1,2\n");
    CHECK(run({"map", "psi", "--trace", "UD"}).status == cli::kUsage);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"map", "sigma", "12312"}).status == cli::kPrecondition);
  CHECK(run({"map", "sigma", "2,1"}).status == cli::kInvalidInput);
  CHECK(run({"map", "sigma", "--direction", "inverse", "UX"}).status == cli::kInvalidInput);
  CHECK(run({"map", "sigma", "--direction", "inverse", "UHD"}).status == cli::kPrecondition);
  CHECK(run({"map", "nope", "1"}).status == cli::kUsage);
  CHECK(run({}).status == cli::kUsage);
  CHECK(run({"list", "paths", "-n", "13"}).status == cli::kPrecondition);
  CHECK(run({"list", "paths", "-n", "2", "--class", "motzkin"}).status == cli::kInvalidInput);
  CHECK(run({"--help"}).status == cli::kOk);
}

TEST_CASE("list and count") {
  CHECK(run({"count", "partitions", "-n", "3", "--pattern", "12312"}).out == "5\n");
  CHECK(run({"count", "partitions", "-n", "6", "--pattern", "12312"}).out == "188\n");
  CHECK(run({"count", "paths", "-n", "5", "--class", "skew_dyck"}).out == "137\n");
  CHECK(run({"list", "paths", "-n", "2", "--class", "skew_dyck"}).out == "UUDD\nUUDL\nUDUD\n");
  CHECK(run({"list", "partitions", "-n", "2"}).out == "1,1\n1,2\n");

  SUBCASE("limit override from the environment") {
    ::setenv(cli::kLimitEnv, "3", 1);
    CHECK(run({"count", "paths", "-n", "4"}).status == cli::kPrecondition);
    CHECK(run({"count", "paths", "-n", "4", "--limit", "4"}).out == "90\n");
    ::unsetenv(cli::kLimitEnv);
    CHECK(run({"count", "paths", "-n", "4"}).out == "90\n");
  }
}

TEST_CASE("json output parses back through the module parsers") {
  const Result paths = run({"list", "paths", "-n", "3", "--class", "uh_free", "--format", "json"});
  const auto arr = nlohmann::json::parse(paths.out);
  REQUIRE(arr.size() == 15);
  for (const auto& v : arr) {
    const std::string s = v.get<std::string>();
    CHECK(parse_path(s, PathClass::uh_free).to_string() == s);
  }

  const Result parts =
      run({"list", "partitions", "-n", "4", "--pattern", "12321", "--format", "json"});
  const auto parr = nlohmann::json::parse(parts.out);
  CHECK(parr.size() == 15);
  for (const auto& v : parr) {
    const std::string s = v.get<std::string>();
    CHECK(parse_partition(s).to_string() == s);
  }

  const Result check = run({"check", "--format", "json", "11232343411", "UUDD"});
  const auto records = nlohmann::json::parse(check.out);
  CHECK(records[0]["avoids_12312"] == true);
  CHECK(records[0]["avoids_12321"] == false);
  CHECK(records[1]["no_even_peak"] == false);
  CHECK(records[1]["peak_levels"] == nlohmann::json::array({2}));
}

TEST_CASE("check text") {
  CHECK(run({"check", "1,2,1"}).out ==
        "partition=1,2,1 blocks=2 avoids_12312=true avoids_12321=true irreducible=true\n");
  CHECK(run({"check", "UHD"}).out ==
        "path=UHD semilength=2 peak_levels=[] uh_free=false no_even_peak=true "
        "no_level_one_peak=true ends_with_down=true\n");
}

TEST_CASE("render") {
  CHECK(run({"render", "UD"}).out == "/\\\n--\n");
  const Result svg = run({"render", "--style", "svg", "H"});
  CHECK(svg.out.find("<svg") == 0);
  CHECK(svg.out.find("x2=\"50\"") != std::string::npos);
}

TEST_CASE("series") {
  CHECK(run({"series", "f", "--order", "5"}).out == "0 1\n1 2\n2 5\n3 15\n4 51\n5 188\n");
  CHECK(run({"series", "fprime", "--order", "4", "--format", "json"}).out == "[1, 1, 2, 6, 21]\n");
  const Result big = run({"series", "f", "--format", "json"});
  CHECK(nlohmann::json::parse(big.out).size() == 33);
  CHECK(run({"series", "schroder", "--order", "3"}).out == "0 1\n1 2\n2 6\n3 22\n");
}

TEST_CASE("verify") {
  const Result r = run({"verify", "--max-n", "4"});
  CHECK(r.status == cli::kOk);
  CHECK(r.out.find("all ") != std::string::npos);
  const Result j = run({"verify", "--max-n", "3", "--format", "json"});
  CHECK(nlohmann::json::parse(j.out)["ok"] == true);
  CHECK(run({"verify", "--max-n", "4"}).out == r.out);
}

TEST_CASE("--out writes to a file") {
  const std::string path = "cli_out_test.txt";
  CHECK(run({"--out", path, "map", "sigma", "12"}).out.empty());
  std::ifstream file(path);
  std::string content((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  CHECK(content == "UD\n");
  std::remove(path.c_str());
}
