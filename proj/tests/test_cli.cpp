#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hindlab/cli.hpp"

namespace cli = hindlab::cli;
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

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("hindlab_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST(Cli, FsText) {
  const auto r = run({"fs", "--structure", "int-add:20", "--set", "1,2,4", "--lengths", "1,2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "sums (6): 1 2 3 4 5 6\n");
}

TEST(Cli, FsOutOfRange) {
  EXPECT_EQ(run({"fs", "--structure", "int-add:5", "--set", "1,2,4", "--lengths", "2"}).code, cli::kUsage);
  const auto r = run({"fs", "--structure", "int-add:5", "--set", "1,2,4", "--lengths", "2",
                      "--skip-out-of-range", "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["sums"], json({3, 5}));
  EXPECT_EQ(j["omitted"], 1);
}

TEST(Cli, FsUnions) {
  const auto r = run({"fs", "--structure", "fin-unions:4", "--set", "[[0],[1,2]]", "--lengths", "1,2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "sums (3): {0} {0,1,2} {1,2}\nunmeshed: yes\n");
}

TEST(Cli, SearchText) {
  const auto r = run({"search", "--structure", "int-add:20", "--coloring", "parity", "--pattern", "schur",
                      "--size", "2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out,
            "outcome: witness\npattern: schur=1,1\nlengths: 1,2\ncolor: 0\nfamily: 2 4\ncandidates: 23\n");
}

TEST(Cli, SearchNotFoundAndBudget) {
  // Odd numbers share a color no sum can have; equal-colored evens {2,6} and
  // {4,8} fail on the sum.
  auto r = run({"search", "--structure", "int-add:8", "--coloring", "explicit:0,1,0,2,0,1,0,2", "--pattern",
                "schur=1,1", "--size", "2"});
  EXPECT_EQ(r.code, cli::kNegative);
  EXPECT_NE(r.out.find("outcome: not-found"), std::string::npos);
  r = run({"search", "--structure", "int-add:20", "--coloring", "parity", "--pattern", "schur", "--size", "3",
           "--max-candidates", "5"});
  EXPECT_EQ(r.code, cli::kBudget);
  EXPECT_NE(r.out.find("outcome: budget-exhausted"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"search", "--structure", "int-add:20"}).code, cli::kUsage);
  EXPECT_EQ(run({"search", "--structure", "int-ad:20", "--coloring", "parity", "--pattern", "schur", "--size",
                 "2"})
                .code,
            cli::kUsage);
  EXPECT_EQ(run({"reduce", "--points", "6", "--seed", "1", "--constant", "0"}).code, cli::kUsage);
  EXPECT_EQ(run({"large", "check", "--set", "1,2", "--alpha", "w*0"}).code, cli::kUsage);
  EXPECT_EQ(run({"bounds", "normalize", "beth_(x)"}).code, cli::kUsage);
}

TEST(Cli, SearchVerifyRoundTrip) {
  TempDir dir;
  const auto cert = dir.file("cert.json");
  auto r = run({"search", "--structure", "fin-unions:6", "--coloring", "seeded:11:2", "--pattern", "folkman:2",
                "--size", "3", "--block", "--out", cert});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  r = run({"verify", "--certificate", cert});
  EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
  EXPECT_EQ(r.out.substr(0, 6), "valid\n");
}

TEST(Cli, VerifyRejectsTampering) {
  TempDir dir;
  const auto cert = dir.file("cert.json");
  ASSERT_EQ(run({"search", "--structure", "int-add:20", "--coloring", "parity", "--pattern", "schur", "--size",
                 "2", "--out", cert})
                .code,
            cli::kOk);
  auto doc = json::parse(slurp(cert));

  auto bad_color = doc;
  bad_color["witness"]["color"] = 1;
  spit(dir.file("color.json"), bad_color.dump());
  auto r = run({"verify", "--certificate", dir.file("color.json")});
  EXPECT_EQ(r.code, cli::kNegative);
  EXPECT_NE(r.out.find("color mismatch"), std::string::npos) << r.out;

  auto bad_member = doc;
  bad_member["witness"]["family"] = json({2, 3});
  spit(dir.file("member.json"), bad_member.dump());
  EXPECT_EQ(run({"verify", "--certificate", dir.file("member.json")}).code, cli::kNegative);

  auto bad_instance = doc;
  bad_instance["instance"]["structure"]["limit"] = 21;
  spit(dir.file("instance.json"), bad_instance.dump());
  r = run({"verify", "--certificate", dir.file("instance.json")});
  EXPECT_EQ(r.code, cli::kNegative);
  EXPECT_NE(r.out.find("digest"), std::string::npos) << r.out;

  spit(dir.file("garbage.json"), "{ not json");
  EXPECT_EQ(run({"verify", "--certificate", dir.file("garbage.json")}).code, cli::kUsage);
}

TEST(Cli, InstanceFileMatchesFlags) {
  TempDir dir;
  const auto cert = dir.file("cert.json");
  ASSERT_EQ(run({"search", "--structure", "int-add:30", "--coloring", "mod:3", "--pattern", "ap:3", "--size",
                 "3", "--out", cert})
                .code,
            cli::kOk);
  const auto doc = json::parse(slurp(cert));
  spit(dir.file("inst.json"), doc["instance"].dump());
  const auto again = run({"search", "--instance", dir.file("inst.json"), "--format", "json"});
  ASSERT_EQ(again.code, cli::kOk);
  EXPECT_EQ(json::parse(again.out), doc);
  EXPECT_EQ(run({"verify", "--certificate", cert, "--instance", dir.file("inst.json")}).code, cli::kOk);

  auto other = doc["instance"];
  other["size"] = 2;
  spit(dir.file("other.json"), other.dump());
  EXPECT_EQ(run({"verify", "--certificate", cert, "--instance", dir.file("other.json")}).code, cli::kNegative);
}

TEST(Cli, CertificatesIgnoreThreads) {
  std::string first;
  for (const char* t : {"1", "2", "4"}) {
    const auto r = run({"search", "--structure", "int-add:60", "--coloring", "seeded:5:2", "--pattern", "schur",
                        "--size", "3", "--threads", t, "--format", "json"});
    ASSERT_EQ(r.code, cli::kOk);
    if (first.empty()) {
      first = r.out;
    } else {
      EXPECT_EQ(r.out, first);
    }
  }
}

TEST(Cli, ReplayCertificateVerifies) {
  TempDir dir;
  const auto cert = dir.file("replay.json");
  const auto r = run({"replay", "--structure", "int-add:60", "--coloring", "seeded:1:2", "--d", "1", "--size",
                      "2", "--out", cert});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("n: 3\nground: 21 elements\n"), std::string::npos) << r.out;
  const auto doc = json::parse(slurp(cert));
  EXPECT_EQ(doc["command"], "replay");
  EXPECT_EQ(doc["trace"]["n"], 3);
  EXPECT_EQ(run({"verify", "--certificate", cert}).code, cli::kOk);
}

TEST(Cli, Numbers) {
  auto r = run({"numbers", "--pattern", "ap:3", "--colors", "2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "target: ap:3, 2 colors\nvalue: 9\nextremal coloring of [1,8]: 00110011\n");
  r = run({"numbers", "--pattern", "schur", "--size", "2", "--colors", "2", "--confirm"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("value: 9\n"), std::string::npos);
  EXPECT_NE(r.out.find("exhaustive confirmation: agrees"), std::string::npos);
  r = run({"numbers", "--pattern", "ap:3", "--colors", "2", "--cap", "6"});
  EXPECT_EQ(r.code, cli::kBudget);
  r = run({"numbers", "--pattern", "sum-triple", "--colors", "2", "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(json::parse(r.out)["value"], 5);
}

TEST(Cli, Reduce) {
  auto r = run({"reduce", "--points", "6", "--constant", "1", "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["outcome"], "success");
  EXPECT_EQ(j["extraction"]["color"], 1);
  r = run({"reduce", "--points", "10", "--seed", "3"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("outcome: success"), std::string::npos);
}

TEST(Cli, Large) {
  EXPECT_EQ(run({"large", "check", "--set", "2,5,9", "--alpha", "w"}).out, "{2,5,9} is w-large\n");
  EXPECT_EQ(run({"large", "check", "--set", "3", "--alpha", "w"}).code, cli::kNegative);
  EXPECT_EQ(run({"large", "find", "--beta", "1", "--min", "3"}).out, "{3,4,5}\n");
  const auto r = run({"large", "partition", "--set", "1,2,3,4,5,6,7,8", "--pieces", "1,3,5,7;2,4,6,8", "--beta",
                      "1", "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(json::parse(r.out)["piece"], 0);
}

TEST(Cli, Bounds) {
  auto r = run({"bounds", "--theorem", "vdw", "--colors", "2", "--d", "1", "--lambda", "lam"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("n: 3\nbound: beth_2(lam)^+\n"), std::string::npos) << r.out;
  r = run({"bounds", "--theorem", "vdw", "--colors", "2", "--d", "2", "--cap", "8"});
  EXPECT_EQ(r.code, cli::kBudget);
  EXPECT_NE(r.out.find("beth_{W(3;2)-1}(lam)^+"), std::string::npos);
  EXPECT_EQ(run({"bounds", "cmp", "aleph_1", "beth_1(aleph_0)"}).out, "aleph_1 vs beth_1(aleph_0): Unknown\n");
  EXPECT_EQ(run({"bounds", "erdos-rado", "--kappa", "k", "--n", "1"}).out, "beth_1(k)^+ -> (k^+)^2_k\n");
  EXPECT_EQ(run({"bounds", "normalize", "beth_1(beth_2(lam))"}).out, "beth_3(lam)\n");
}
