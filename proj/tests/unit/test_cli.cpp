#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sfab/cli.hpp"
#include "sfab/context.hpp"

using sfab::cli::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run sfab_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sfab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = sfab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("sfab_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("vertex count command") {
  const auto r = sfab_cli({"nlambda", "--type", "A", "--rank", "1", "--q", "0=4,1=4", "--lambda", "3"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["status"] == "ok");
  CHECK(j["command"] == "nlambda");
  CHECK(j["result"]["N"] == "80");
  CHECK(j["failures"].empty());
}

TEST_CASE("bad input exits with 2") {
  CHECK(sfab_cli({"nlambda", "--type", "BC", "--rank", "1", "--q", "0=2,1=2", "--lambda", "1"}).code == 2);
  CHECK(sfab_cli({"nlambda", "--type", "A", "--rank", "1", "--lambda", "1"}).code == 2);
  CHECK(sfab_cli({"nlambda", "--type", "A", "--rank", "1", "--q", "0=4,1=4", "--lambda", "x"}).code == 2);
  CHECK(sfab_cli({"nlambda", "--bogus"}).code == 2);
  CHECK(sfab_cli({"frobnicate"}).code == 2);
  const auto cfg = temp_file("unknown.json", R"({"type": "A", "rank": 1, "q": {"0": "4", "1": "4"}, "colour": 1})");
  const auto r = sfab_cli({"info", "--config", cfg});
  CHECK(r.code == 2);
  CHECK(r.err.find("colour") != std::string::npos);
  CHECK(sfab_cli({"info", "--config", temp_file("broken.json", "{")}).code == 2);
  CHECK(sfab_cli({"selftest", "--criteria", "11"}).code == 2);
}

TEST_CASE("config round trip") {
  const json j = json::parse(R"({"type": "C", "rank": 2, "q": {"0": "2", "1": "3", "2": "2"},
                                 "task": {"lambda": "1,1", "mu": "1,0"}, "output": {"format": "csv", "pretty": false}})");
  const auto c = sfab::cli::RunConfig::from_json(j);
  CHECK(c.rank == 2);
  CHECK(c.q.at(1) == 3);
  CHECK(c.task.at("mu") == "1,0");
  const json back = c.to_json();
  CHECK(back == j);
  CHECK(sfab::cli::RunConfig::from_json(back).to_json() == back);
  CHECK_THROWS_AS(sfab::cli::RunConfig::from_json(json::parse(R"({"task": {"lambda2": "1"}})")), sfab::ConfigError);
  CHECK_THROWS_AS(sfab::cli::RunConfig::from_json(json::parse(R"({"output": {"format": "xml"}})")), sfab::ConfigError);
  for (const auto& k : sfab::cli::task_keys()) CHECK(k.find('-') == std::string::npos);
}

TEST_CASE("flags override the config file") {
  const auto cfg = temp_file("a1.json", R"({"type": "A", "rank": 1, "q": {"0": "4", "1": "4"}, "task": {"lambda": "2"}})");
  const auto a = sfab_cli({"nlambda", "--config", cfg});
  REQUIRE(a.code == 0);
  CHECK(json::parse(a.out)["result"]["N"] == "20");
  const auto b = sfab_cli({"nlambda", "--config", cfg, "--lambda", "3"});
  CHECK(json::parse(b.out)["result"]["N"] == "80");
  const auto c = sfab_cli({"nlambda", "--config", cfg, "--q", "0=2,1=2"});
  CHECK(json::parse(c.out)["result"]["N"] == "6");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"structure", "--type", "C", "--rank", "2", "--q", "0=2,1=3,2=2", "--lambda", "1,0",
                                      "--mu", "1,1"};
  const auto a = sfab_cli(args), b = sfab_cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto p = sfab_cli({"plancherel", "--type", "BC", "--rank", "1", "--q", "0=4,1=2", "--max-height", "3"});
  CHECK(p.code == 0);
  CHECK(p.out == sfab_cli({"plancherel", "--type", "BC", "--rank", "1", "--q", "0=4,1=2", "--max-height", "3"}).out);
}

TEST_CASE("csv output") {
  const auto r = sfab_cli({"structure", "--type", "A", "--rank", "1", "--q", "0=4,1=4", "--lambda", "1", "--mu", "1",
                           "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string header, line;
  std::getline(in, header);
  CHECK(header.find("nu") != std::string::npos);
  CHECK(header.find("a_exact") != std::string::npos);
  int rows = 0;
  while (std::getline(in, line)) rows += !line.empty();
  CHECK(rows == 2);
  CHECK(r.out.find("1/5") != std::string::npos);
  CHECK(r.out.find("4/5") != std::string::npos);
}

TEST_CASE("output file") {
  const auto path = (std::filesystem::temp_directory_path() / "sfab_test_out.json").string();
  std::filesystem::remove(path);
  const auto r = sfab_cli({"info", "--type", "BC", "--rank", "2", "--q", "0=2,1=3,2=5", "--out", path, "--pretty"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  const auto j = json::parse(ss.str());
  CHECK(j["status"] == "ok");
  CHECK(ss.str().find("\n  ") != std::string::npos);
}

TEST_CASE("selftest subset") {
  const auto r = sfab_cli({"selftest", "--suite", "quick", "--criteria", "1,9"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j["result"]["criteria"].size() == 2);
  CHECK(j["result"]["criteria"][0]["id"] == 1);
  CHECK(j["result"]["criteria"][1]["pass"] == true);
  CHECK(r.err.find("PASS") != std::string::npos);
}
