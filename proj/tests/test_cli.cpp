#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pmd/cli.hpp"
#include "support.hpp"

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = pmd::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("table1 csv reproduces the fixture") {
  const auto r = run({"table1", "-n", "7", "--format", "csv"});
  CHECK(r.status == 0);
  CHECK(r.out == pmd::testing::read_file(pmd::testing::fixture("table1.csv")));
}

TEST_CASE("count by both methods") {
  const auto r = run({"count", "--family", "IMD", "-n", "4", "-r", "4", "--by", "both", "--no-timing"});
  CHECK(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["results"]["formula"] == "47");
  CHECK(doc["results"]["enumeration"] == 47);
  CHECK(doc["status"] == "pass");
  CHECK_FALSE(doc.contains("seconds"));

  const auto layer = run({"count", "--layer", "Q", "-n", "7", "-m", "3", "--by", "both", "--format", "csv"});
  CHECK(layer.out == "spec,formula,enumeration\nQ(n=7,m=3),160,160\n");
}

TEST_CASE("exit codes") {
  CHECK(run({}).status == pmd::cli::kExitUsage);
  CHECK(run({"enumerate"}).status == pmd::cli::kExitUsage);
  CHECK(run({"enumerate", "--family", "NOPE", "-n", "3"}).status == pmd::cli::kExitUsage);
  CHECK(run({"count", "--family", "PMD", "-n", "3", "--by", "guess"}).status == pmd::cli::kExitUsage);
  CHECK(run({"enumerate", "--family", "PT", "-n", "10"}).status == pmd::cli::kExitBudget);
  CHECK(run({"enumerate", "--family", "PMD", "-n", "6", "--budget", "10"}).status == pmd::cli::kExitBudget);
  CHECK(run({"--help"}).status == pmd::cli::kExitPass);

  const auto refused = run({"verify-rank", "--family", "PMD", "-n", "2"});
  CHECK(refused.status == pmd::cli::kExitUsage);
  CHECK(refused.err.find("n >= 3") != std::string::npos);
}

TEST_CASE("output is deterministic without timing") {
  const std::vector<std::string> args{"greens", "--family", "IMD", "-n", "4", "-r", "3", "--starred", "--no-timing"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  // L* classes keyed by their first member.
  for (const auto& [rep, members] : doc["results"]["L*"].items()) CHECK(members.front() == rep);
}

TEST_CASE("enumerate formats") {
  const auto text = run({"enumerate", "--family", "PRD_STAR", "-n", "3", "--format", "text"});
  CHECK(text.out == "n=3:[2:2,3:1]\n");
  const auto oracle = run({"enumerate", "--family", "PMD", "-n", "4", "-r", "2", "--strategy", "oracle"});
  const auto direct = run({"enumerate", "--family", "PMD", "-n", "4", "-r", "2"});
  CHECK(oracle.out == direct.out);
  const auto layer = run({"enumerate", "--layer", "K_s", "-n", "5", "-r", "2", "-s", "3", "--format", "csv"});
  CHECK(layer.status == 0);
  CHECK(layer.out.rfind("element\n", 0) == 0);
}

TEST_CASE("closure reads generators from a file") {
  const auto path = std::filesystem::temp_directory_path() / "pmd_cli_closure_input.txt";
  {
    std::ofstream f(path);
    f << "# generators of IMD(3,2)\n"
         "n=3:[1:1,2:2]\n"
         "n=3:[1:1,3:3]  # partial identity\n"
         "\n"
         "n=3:[2:2,3:3]\n"
         "n=3:[2:1,3:3]\n"
         "n=3:[1:1,3:2]\n"
         "n=3:[2:2,3:1]\n";
  }
  const auto r = run({"closure", "--input", path.string(), "--family", "IMD", "-r", "2", "--no-timing"});
  CHECK(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["results"]["size"] == 14);

  {
    std::ofstream f(path);
    f << "n=3:[1:1]\nn=3:[1:4]\n";
  }
  const auto bad = run({"closure", "--input", path.string()});
  CHECK(bad.status == pmd::cli::kExitUsage);
  CHECK(bad.err.find(":2:") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("generators and factorization") {
  const auto r = run({"generators", "--family", "PMD", "-n", "5", "-r", "2", "--factor", "n=5:[3:2,4:2,5:1]",
                      "--no-timing"});
  CHECK(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["results"]["size"] == 52);
  CHECK(doc["results"]["factorization"].size() >= 3);
}

TEST_CASE("theorem subcommands pass at small degree") {
  for (const char* cmd : {"verify-rank", "verify-abundance", "verify-regularity", "verify-dstar"}) {
    CHECK(run({cmd, "--family", "PMD", "-n", "4", "-r", "2"}).status == 0);
    CHECK(run({cmd, "--family", "IMD", "-n", "4", "-r", "3"}).status == 0);
  }
  const auto maximal = run({"maximal", "--family", "PMD", "-n", "4", "-r", "2", "--verify", "--no-timing"});
  CHECK(maximal.status == 0);
  CHECK(nlohmann::json::parse(maximal.out)["results"]["count"] == 19);
  CHECK(run({"greens", "--family", "PD", "-n", "3", "-r", "2"}).status == 0);
  CHECK(run({"verify-all", "-n", "3"}).status == 0);
}
