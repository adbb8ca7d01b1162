#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../support/process.hpp"

namespace {

namespace fs = std::filesystem;
using vexil::testing::run_process;

const std::string kBin = VEXIL_BIN;
const fs::path kFlags = VEXIL_FLAGS_DIR;

template <class... Args>
vexil::testing::ProcessResult vexil_cli(const Args&... args) {
  return run_process(kBin, args...);
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("vexil-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, RatioPrintsSixDigits) {
  const auto r = vexil_cli("ratio", "chile-1818");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "1.80171\n");
  EXPECT_EQ(vexil_cli("ratio", "nepal-ratio").out, "0.820338\n");
  EXPECT_EQ(vexil_cli("ratio", (kFlags / "togo.flag").string()).out, "1.61803\n");
}

TEST(Cli, EvalRoundsHalfEven) {
  const auto r = vexil_cli("eval", "sqrt(10-2*sqrt(5))/(1+sqrt(5))", "--digits", "3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "0.727\n");
  EXPECT_EQ(vexil_cli("eval", "1/8", "--digits", "2").out, "0.12\n");
  EXPECT_EQ(vexil_cli("eval", "3/8", "--digits", "2").out, "0.38\n");
}

TEST(Cli, HelpDocumentsRounding) {
  const auto r = vexil_cli("eval", "--help");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("half-to-even"), std::string::npos);
}

TEST(Cli, VerifyCurrentFlag) {
  const auto r = vexil_cli("verify", "chile-current");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("3 checks: 3 passed, 0 failed, 0 undecided"), std::string::npos);
}

TEST(Cli, VerifyIndependenceIncludesAngles) {
  for (const std::string target : {std::string("chile-1818"), (kFlags / "chile-1818.flag").string()}) {
    const auto r = vexil_cli("verify", target);
    EXPECT_EQ(r.exit_code, 0) << target;
    EXPECT_NE(r.out.find("golden triangle"), std::string::npos);
    EXPECT_EQ(r.out.find("Undecided"), std::string::npos);
  }
}

TEST(Cli, ListNamesBuiltins) {
  EXPECT_EQ(vexil_cli("list").out, "chile-1818\nchile-current\ntogo\nnepal-ratio\n");
}

TEST(Cli, BuildSvgAndJson) {
  TempDir tmp;
  const auto svg = tmp / "current.svg";
  auto r = vexil_cli("build", "chile-current", "--out", svg.string(), "--scale", "300");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "wrote " + svg.string() + ": chile-current svg 900 x 600\n");
  EXPECT_NE(slurp(svg).find("viewBox=\"0 0 900 600\""), std::string::npos);

  const auto json = tmp / "togo.json";
  r = vexil_cli("build", (kFlags / "togo.flag").string(), "--out", json.string(), "--format",
                "json", "--digits", "6");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(slurp(json).find("\"width\": \"1.61803\""), std::string::npos);

  const auto physical = tmp / "chile.svg";
  r = vexil_cli("build", "chile-1818", "--out", physical.string(), "--scale", "2.4/canvas_width",
                "--digits", "6", "--unit", "m");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(slurp(physical).find("width=\"2.4m\" height=\"1.33207m\""), std::string::npos);
}

// Exit-code contract, one case per documented failure path.
TEST(Cli, ExitCodes) {
  TempDir tmp;
  EXPECT_EQ(vexil_cli().exit_code, 2);
  EXPECT_EQ(vexil_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(vexil_cli("ratio", "chile-1818", "--bogus").exit_code, 2);
  EXPECT_EQ(vexil_cli("build", "togo", "--out", (tmp / "a.svg").string(), "--digits", "2").exit_code,
            2);
  EXPECT_EQ(vexil_cli("build", "togo", "--out", (tmp / "a.svg").string(), "--format", "png")
                .exit_code,
            2);
  EXPECT_EQ(vexil_cli("build", "togo", "--out", (tmp / "a.svg").string(), "--scale", "0 - 1")
                .exit_code,
            2);
  EXPECT_EQ(vexil_cli("build", "togo", "--out", (tmp / "a.svg").string(), "--background", "blue")
                .exit_code,
            2);

  EXPECT_EQ(vexil_cli("ratio", "usa").exit_code, 1);
  EXPECT_EQ(vexil_cli("verify", "usa").exit_code, 1);
  EXPECT_EQ(vexil_cli("eval", "sqrt(0-1)").exit_code, 1);
  EXPECT_EQ(vexil_cli("eval", "1/(phi*phi-phi-1)").exit_code, 1);
  EXPECT_EQ(vexil_cli("build", "togo", "--out", (tmp / "missing" / "a.svg").string()).exit_code, 1);
  EXPECT_EQ(vexil_cli("verify", (tmp / "absent.flag").string()).exit_code, 1);

  const auto bad = tmp / "bad.flag";
  std::ofstream(bad) << "flag \"bad\" {\n  canvas 3 x 2;\n  region a red rect 0 0 3 ;\n}\n";
  const auto r = vexil_cli("verify", bad.string());
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find(bad.string() + ":3:27: expected expression"), std::string::npos) << r.err;

  const auto overlapping = tmp / "overlap.flag";
  std::ofstream(overlapping) << "flag \"overlap\" { canvas 2 x 1;"
                                " region a red rect 0 0 2 1; region b blue rect 1 0 1 1; }";
  EXPECT_EQ(vexil_cli("verify", overlapping.string()).exit_code, 1);

  // divisor is exactly zero but outside the exact normal form: no certificate
  const auto u = vexil_cli("eval", "1/(sqrt(2) + sqrt(3) - sqrt(5 + 2*sqrt(6)))");
  EXPECT_EQ(u.exit_code, 3);
  EXPECT_NE(u.err.find("undecided"), std::string::npos);
}

}  // namespace
