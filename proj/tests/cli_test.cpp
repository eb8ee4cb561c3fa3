#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "sdlkit/cli.hpp"
#include "sdlkit/io.hpp"

using namespace sdlkit;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) { return std::string(SDLKIT_GOLDEN_DIR) + "/" + name; }
std::string report(const std::string& name) {
  return io::read_file(std::string(SDLKIT_GOLDEN_DIR) + "/../reports/" + name);
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sdlkit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, BuildTwoChainZ2MatchesGolden) {
  const auto r = run({"build", golden("chain2_z2_identity.family")});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out, io::read_file(golden("chain2_z2_identity.semiring")));
  EXPECT_NE(r.out.find("size: 4"), std::string::npos);
}

TEST_F(CliTest, GenFamilyMatchesGolden) {
  const auto r = run({"gen", "family", "--lattice", "boolean:2", "--group", "s3", "--recipe", "twisted"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, io::read_file(golden("boolean2_s3_twisted.family")));
  EXPECT_EQ(run({"gen", "counterexample"}).out, io::read_file(golden("non_strong.semiring")));
}

TEST_F(CliTest, BuildFromSpecEqualsBuildFromFamily) {
  const auto spec = path("x.spec"), fam = path("x.family");
  ASSERT_EQ(run({"gen", "spec", "--lattice", "divisor:12", "--group", "klein", "--recipe", "twisted",
                 "--out", spec}).code, 0);
  ASSERT_EQ(run({"gen", "family", "--lattice", "divisor:12", "--group", "klein", "--recipe",
                 "twisted", "--out", fam}).code, 0);
  const auto a = run({"build", spec}), b = run({"build", fam});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, AnalyzeReports) {
  auto r = run({"analyze", golden("chain2_z2_identity.semiring")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, report("chain2_z2_identity.analyze.txt"));
  r = run({"analyze", golden("non_strong.semiring")});
  EXPECT_EQ(r.code, cli::kCheckFailed);
  EXPECT_EQ(r.out, report("non_strong.analyze.txt"));
}

TEST_F(CliTest, CheckNegativeControls) {
  auto r = run({"check", golden("m3.lattice"), "--format", "kv"});
  EXPECT_EQ(r.code, cli::kCheckFailed);
  EXPECT_EQ(r.out, report("m3.check.kv"));
  r = run({"check", golden("sdl2_violation.family")});
  EXPECT_EQ(r.code, cli::kCheckFailed);
  EXPECT_EQ(r.out, report("sdl2_violation.check.txt"));
  r = run({"check", golden("skew.semigroup")});
  EXPECT_EQ(r.code, cli::kCheckFailed);
  EXPECT_NE(r.out.find("not associative at (b,a,b)"), std::string::npos);
}

TEST_F(CliTest, CheckPassesOnValidFiles) {
  for (const char* f : {"z2.group", "s3.group", "chain3_z4_identity.family", "chain3_z3_twisted.spec",
                        "boolean2_s3_twisted.semiring"})
    EXPECT_EQ(run({"check", golden(f)}).code, cli::kOk) << f;
  EXPECT_NE(run({"check", golden("s3.group")}).out.find("identity: e"), std::string::npos);
}

TEST_F(CliTest, RoundTrip) {
  const auto r = run({"roundtrip", golden("boolean2_s3_twisted.family"), "--format", "kv"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, report("boolean2_s3_twisted.roundtrip.kv"));
  EXPECT_EQ(run({"roundtrip", golden("chain3_z3_twisted.spec"), "--flavor", "right"}).code, cli::kOk);
}

TEST_F(CliTest, CorpusWritesEveryInstance) {
  const auto r = run({"gen", "corpus", "--out", path("corpus")});
  ASSERT_EQ(r.code, cli::kOk);
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(path("corpus"))) {
    ++n;
    (void)e;
  }
  EXPECT_EQ(n, 84u);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"check", golden("z2.group"), "--format", "xml"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "family", "--lattice", "tree:3"}).code, cli::kUsage);
  EXPECT_EQ(run({"check", path("missing.group")}).code, cli::kIoError);

  io::write_file(path("bad.group"), "kind: group\nsize: 2\n");
  const auto parse = run({"check", path("bad.group")});
  EXPECT_EQ(parse.code, cli::kParseError);
  EXPECT_NE(parse.err.find("line 3"), std::string::npos);

  EXPECT_EQ(run({"build", golden("sdl2_violation.family")}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"build", golden("m3.lattice")}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"analyze", golden("z2.group")}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"build", golden("z2.group"), "--out", "/nonexistent/dir/x"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"build", golden("chain2_z2_identity.family"), "--out", "/nonexistent/dir/x"}).code,
            cli::kIoError);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST_F(CliTest, OutFlagWritesFile) {
  const auto out = path("s.semiring");
  const auto r = run({"build", golden("chain2_z2_identity.family"), "--out", out, "--no-self-check"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(io::read_file(out), io::read_file(golden("chain2_z2_identity.semiring")));
}
