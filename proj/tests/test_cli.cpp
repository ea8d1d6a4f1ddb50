#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(MIXROOTS_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mixroots_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& contents) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << contents;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SolveRhie3) {
  const CliResult r = run("solve " + file("in.json", R"({"family":"rhie3"})"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "rho=10 beta=2 class=L(4;3,1)\n");
}

TEST_F(Cli, SolveExample) {
  const CliResult r = run("solve " + file("in.json", R"({"family":"example"})"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("rho=12 beta=0", 0), 0u) << r.out;
}

TEST_F(Cli, SingleLensAtOriginIsNonIsolated) {
  const CliResult r = run("solve " + file("in.json", R"({"family":"lens","params":{"masses":[[1,0]],"positions":[[0,0]]}})"));
  EXPECT_EQ(r.code, 2);
}

TEST_F(Cli, MalformedInput) {
  EXPECT_EQ(run("solve " + file("in.json", "{\"terms\": 3}")).code, 3);
  EXPECT_EQ(run("solve " + path("missing.json")).code, 3);
  EXPECT_EQ(run("frobnicate").code, 3);
  EXPECT_EQ(run("verify no-such-suite").code, 3);
}

TEST_F(Cli, DegenerateRootsExitOne) {
  // z^2 has a double root at 0.
  const CliResult r = run("solve " + file("in.json", R"({"terms":[{"zn":2,"zb":0,"re":1}]})"));
  EXPECT_EQ(r.code, 1);
}

TEST_F(Cli, PlotRejectsDegenerateWindow) {
  const std::string in = file("in.json", R"({"family":"example"})");
  EXPECT_EQ(run("plot " + in + " --window 1,1,-1,1 --out " + path("a.svg")).code, 3);
  EXPECT_EQ(run("plot " + in + " --window 1,x --out " + path("a.svg")).code, 3);
  EXPECT_FALSE(fs::exists(path("a.svg")));
}

TEST_F(Cli, PlotIsDeterministic) {
  const std::string in = file("in.json", R"({"family":"rhie3"})");
  ASSERT_EQ(run("plot " + in + " --samples 100 --roots --out " + path("a.svg")).code, 0);
  ASSERT_EQ(run("plot " + in + " --samples 100 --roots --out " + path("b.svg")).code, 0);
  const std::string a = slurp(path("a.svg"));
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(path("b.svg")));
}

TEST_F(Cli, SolveOutputsAreDeterministicAndRoundTrip) {
  const std::string in = file("in.json", R"({"family":"example"})");
  ASSERT_EQ(run("solve " + in + " --json " + path("a.json") + " --csv " + path("a.csv")).code, 0);
  ASSERT_EQ(run("solve " + in + " --json " + path("b.json") + " --csv " + path("b.csv")).code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  const auto j = nlohmann::json::parse(slurp(path("a.json")));
  EXPECT_EQ(j.at("rho"), 12);
  EXPECT_EQ(j.at("roots").size(), 12u);
  EXPECT_EQ(run("verify report --report " + path("a.json")).code, 0);
}

TEST_F(Cli, CorruptedReportFailsVerification) {
  const std::string in = file("in.json", R"({"family":"rhie3"})");
  ASSERT_EQ(run("solve " + in + " --json " + path("r.json")).code, 0);
  auto j = nlohmann::json::parse(slurp(path("r.json")));
  // Flip the sign of the first root.
  auto& sign = j["roots"][0]["sign"];
  sign = sign == "+" ? "-" : "+";
  const std::string bad = file("bad.json", j.dump(2));
  const CliResult r = run("verify report --report " + bad + " --junit " + path("junit.xml"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  const std::string xml = slurp(path("junit.xml"));
  EXPECT_NE(xml.find("<testsuite"), std::string::npos);
  EXPECT_NE(xml.find("<failure"), std::string::npos);
}

TEST_F(Cli, VerifyPaperGoldens) {
  const CliResult r = run("verify paper-goldens --junit " + path("junit.xml"));
  EXPECT_EQ(r.code, 0) << r.out;
  const std::string xml = slurp(path("junit.xml"));
  EXPECT_NE(xml.find("failures=\"0\""), std::string::npos);
}

TEST_F(Cli, VerifyBetaRandom) {
  const CliResult r = run("verify beta-random");
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST_F(Cli, SweepPhiM3) {
  const std::string spec = file("s.json", R"({"family":"phi","params":{"m":3},"sweep":{"start":3e-4,"ratio":0.5,"count":6}})");
  const CliResult r = run("sweep " + spec + " --out " + path("t.csv"));
  ASSERT_EQ(r.code, 0);
  const std::string csv = slurp(path("t.csv"));
  std::istringstream lines(csv);
  std::string line;
  int summaries = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("summary,", 0) != 0) continue;
    ++summaries;
    EXPECT_NE(line.find(",12,0,"), std::string::npos) << line;
  }
  EXPECT_EQ(summaries, 6);
}
