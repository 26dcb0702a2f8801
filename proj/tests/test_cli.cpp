#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <cli.hpp>
#include <deltaorder/equation.hpp>

#include "fixtures.hpp"

using json = nlohmann::json;
using namespace deltaorder;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("deltaorder_test_" + name);
}

}  // namespace

TEST_CASE("analyze the order-1/3 equation") {
  const auto j = run_json({"analyze", fixtures::kOneThird});
  CHECK(j.at("schema_version") == cli::kSchemaVersion);
  CHECK(j.at("newton").at("s") == json::array({3, 0}));
  CHECK(j.at("newton").at("orders") == json::parse(R"([{"rho":"1/3","max_count":1}])"));
  CHECK(j.at("verdict").at("exists_sub1") == true);
}

TEST_CASE("analyze the composed eighth-order equation") {
  const auto j = run_json({"analyze", to_string(fixtures::l8())});
  CHECK(j.at("newton").at("s") == json::array({8, 5, 0}));
  CHECK(j.at("newton").at("orders") ==
        json::parse(R"([{"rho":"1/3","max_count":1},{"rho":"1/5","max_count":1}])"));
  CHECK(j.at("newton").at("total_bound") == 2);
}

TEST_CASE("compose reproduces the eighth-order equation") {
  const auto j = run_json({"compose", fixtures::kL3, fixtures::kL5});
  CHECK(j.at("canonical") == to_string(fixtures::l8()));
}

TEST_CASE("exit codes") {
  CHECK(run({"analyze", "(z) D f(z) + = 0"}).code == cli::kParseError);
  CHECK(run({"analyze", "f(z) - f(z) = 0"}).code == cli::kDegenerate);
  CHECK(run({"construct", "--order", "2/6"}).code == cli::kInvalidOrder);
  CHECK(run({"construct", "--order", "1/1"}).code == cli::kInvalidOrder);
  CHECK(run({"solve", fixtures::kOneThird, "--terms", "4"}).code == cli::kUsage);
  CHECK(run({"solve", "D f(z) - f(z) = 0", "--terms", "20", "--init", "0=1,1=5"}).code == cli::kEmptySpace);
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
}

TEST_CASE("construct reports a passing round trip") {
  const auto j = run_json({"construct", "--order", "3/4"});
  CHECK(j.at("q") == 3);
  CHECK(j.at("p") == 4);
  CHECK(j.at("roundtrip").at("ok") == true);
}

TEST_CASE("solve output feeds eval and verify") {
  const auto r = run({"solve", fixtures::kThreeQuarters, "--terms", "300", "--init", "0=1,1=0,2=0,3=1/24"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  const auto& sol = doc.at("solutions").at(0);
  CHECK(std::abs(sol.at("chi").at("chi_hat").get<double>() - 0.75) < 0.01);
  CHECK(sol.at("coeffs").at(6) == "1/40320");

  const auto path = temp_file("solve.json");
  std::ofstream(path) << r.out;
  const auto at0 = run_json({"eval", "--solution", path.string(), "--at", "0"});
  CHECK(at0.at("value").at("re") == 1.0);
  CHECK(at0.at("value").at("im") == 0.0);

  const auto v = run({"verify", fixtures::kThreeQuarters, "--solution", path.string()});
  CHECK(v.code == 0);

  const auto growth = run_json({"eval", "--solution", path.string(), "--radii", "50,100,200,400,800"});
  const double rho_hat = growth.at("rho_hat").get<double>();
  CHECK(rho_hat > 0.65);
  CHECK(rho_hat < 0.85);
  std::filesystem::remove(path);
}

TEST_CASE("eval at a pole of the offset solution") {
  const auto r = run({"eval", fixtures::kOneThird, "--rho", "1/2", "--terms", "40", "--at", "-2"});
  CHECK(r.code == cli::kEvalFailure);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"analyze", fixtures::kThreeQuarters},
      {"recurrence", fixtures::kOneThird, "--rho", "3/2"},
      {"solve", fixtures::kOneThird, "--terms", "60", "--init", "0=1,1=1,2=1/4"},
      {"analyze", fixtures::kOneThird, "--format", "human"},
  };
  for (const auto& c : commands) {
    const auto a = run(c);
    const auto b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

#ifdef DELTAORDER_CLI_PATH
TEST_CASE("precision from the environment") {
  const auto out = temp_file("precision.json");
  const std::string cmd = std::string("DELTAORDER_PRECISION=300 \"") + DELTAORDER_CLI_PATH +
                          "\" eval \"D f(z) - f(z) = 0\" --terms 40 --at 2 > \"" + out.string() + "\"";
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream in(out);
  const auto j = json::parse(in);
  CHECK(j.at("precision_bits").get<long>() >= 300);
  std::filesystem::remove(out);
}
#endif
