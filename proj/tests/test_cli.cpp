#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "cli.hpp"
#include "pairfile.hpp"
#include "support.hpp"

using namespace pauli;
using namespace pauli::cli;
using pauli::testing::Gen;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("pauli_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string worked_pair() const {
    const auto p = path("ex1.json");
    const auto r = invoke({"construct", "sol3", "--r", "2", "--phi", "1.0471975512", "--psi", "2.0943951024",
                           "--theta", "1.0471975512", "--out", p});
    EXPECT_EQ(r.code, kOk) << r.err;
    return p;
  }

  fs::path dir_;
};

bool same_bits(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

}  // namespace

TEST_F(Cli, WorkedPairVerifies) {
  const auto p = worked_pair();
  const auto r = invoke({"verify", "--in", p});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find("overall: PASS"), std::string::npos);
}

TEST_F(Cli, WorkedPairClassify) {
  const auto r = invoke({"classify", "--in", worked_pair()});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "trivial:false mp1:false mp2:false\n");
}

TEST_F(Cli, PerturbedModulusFailsVerify) {
  const auto p = worked_pair();
  const auto pair = pair_from_json(read_text_file(p));
  auto right = pair.steps().right.entries();
  right[2] += 1e-3 * right[2] / std::abs(right[2]);
  write_text_file(p, pair_to_json(FunctionPair(pair.steps().left, StepVector(right), pair.provenance())));
  const auto r = invoke({"verify", "--in", p});
  EXPECT_EQ(r.code, kVerifyFailed);
  EXPECT_NE(r.out.find("overall: FAIL"), std::string::npos);
}

TEST_F(Cli, HandEditedTextFailsVerify) {
  const auto p = worked_pair();
  auto text = read_text_file(p);
  const std::string from = "\"3:0\"", to = "\"3.001:0\"";
  const auto at = text.find(from);
  ASSERT_NE(at, std::string::npos);
  text.replace(at, from.size(), to);
  write_text_file(p, text);
  EXPECT_EQ(invoke({"verify", "--in", p}).code, kVerifyFailed);
}

TEST_F(Cli, BadGrammar) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"verify"}).code, kUsage);
  EXPECT_EQ(invoke({"construct"}).code, kUsage);
  EXPECT_EQ(invoke({"construct", "sol3", "--r", "two", "--phi", "1", "--psi", "2", "--theta", "1", "--out",
                    path("x.json")})
                .code,
            kUsage);
  EXPECT_EQ(invoke({"solve", "--b", "1,abc,2"}).code, kUsage);
  EXPECT_EQ(invoke({"solve", "--b", "1,2"}).code, kUsage);
  EXPECT_EQ(invoke({"construct", "periodic-uzd", "--n", "1", "--out", path("x.json")}).code, kUsage);
  const auto r = invoke({"verify", "--nope"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST_F(Cli, InvalidFamilyParametersAreUsageErrors) {
  const auto r = invoke({"construct", "sol3", "--r", "2", "--phi", "0", "--psi", "1", "--theta", "0", "--out",
                         path("x.json")});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_FALSE(fs::exists(path("x.json")));
}

TEST_F(Cli, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("check-set"), std::string::npos);
}

TEST_F(Cli, IoFailures) {
  EXPECT_EQ(invoke({"verify", "--in", path("missing.json")}).code, kIo);
  EXPECT_EQ(invoke({"check-set", "--in", path("missing.json")}).code, kIo);
  write_text_file(path("bad.json"), "{ not json");
  EXPECT_EQ(invoke({"verify", "--in", path("bad.json")}).code, kIo);
  write_text_file(path("v2.json"), R"({"schema_version": 2, "kind": "step"})");
  EXPECT_EQ(invoke({"classify", "--in", path("v2.json")}).code, kIo);
  write_text_file(path("len.json"),
                  R"({"schema_version": 1, "kind": "step", "construction": "x", "parameters": {},
                      "data": {"left": ["1:0"], "right": ["1:0", "2:0"]}})");
  EXPECT_EQ(invoke({"verify", "--in", path("len.json")}).code, kIo);
  EXPECT_EQ(invoke({"construct", "sol2", "--p", "1", "--phi", "0", "--psi", "0", "--theta", "1", "--out",
                    path("no/such/dir/x.json")})
                .code,
            kIo);
}

TEST_F(Cli, ConstructIsDeterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"construct", "sol2", "--p", "0.7", "--phi", "0.3", "--psi", "-1.1", "--theta", "2.0"},
      {"construct", "periodic-uzd", "--n", "3"},
      {"construct", "interleave", "--m", "2", "--w", "1,1", "--v", "1,0:1", "--ypoints", "101"},
      {"construct", "mp", "--alpha", "2.5", "--power", "3"}};
  for (const auto& base : commands) {
    auto a = base, b = base;
    a.insert(a.end(), {"--out", path("a.json")});
    b.insert(b.end(), {"--out", path("b.json")});
    ASSERT_EQ(invoke(a).code, kOk) << base[1];
    ASSERT_EQ(invoke(b).code, kOk) << base[1];
    EXPECT_EQ(read_text_file(path("a.json")), read_text_file(path("b.json"))) << base[1];
  }
  const auto p = worked_pair();
  EXPECT_EQ(invoke({"verify", "--in", p}).out, invoke({"verify", "--in", p}).out);
}

TEST_F(Cli, PipelineLeavesPairFileUntouched) {
  const auto p = path("il.json");
  ASSERT_EQ(invoke({"construct", "interleave", "--m", "3", "--w", "1,1,1", "--v", "1,-1,0:1", "--out", p}).code,
            kOk);
  const auto before = read_text_file(p);
  EXPECT_EQ(invoke({"verify", "--in", p}).code, kOk);
  EXPECT_EQ(invoke({"sample", "--in", p, "--out", path("c.csv")}).code, kOk);
  EXPECT_EQ(read_text_file(p), before);
}

TEST_F(Cli, PairRoundTripIsExact) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"construct", "sol3", "--r", "-0.4", "--phi", "0.9", "--psi", "2.5", "--theta", "-3"},
           {"construct", "mp", "--points", "64"},
           {"construct", "uzd", "--m", "2", "--state", "0:1", "--ypoints", "51"}}) {
    auto a = args;
    a.insert(a.end(), {"--out", path("p.json")});
    ASSERT_EQ(invoke(a).code, kOk);
    const auto text = read_text_file(path("p.json"));
    EXPECT_EQ(pair_to_json(pair_from_json(text)), text) << args[1];
  }
}

TEST_F(Cli, SetRoundTripIsExact) {
  ASSERT_EQ(invoke({"construct", "periodic-uzd", "--n", "2", "--points", "128", "--out", path("s.json")}).code, kOk);
  const auto text = read_text_file(path("s.json"));
  EXPECT_EQ(set_to_json(set_from_json(text)), text);
  EXPECT_EQ(invoke({"check-set", "--in", path("s.json")}).code, kOk);
}

TEST_F(Cli, SolveAnnotatesFamilies) {
  const auto r = invoke({"solve", "--b", "1,-0.75:1.299038105676658,-1.5:-2.598076211353316,-2", "--out",
                         path("set.json")});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("partners: 3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("family:sol3"), std::string::npos);
  EXPECT_NE(r.out.find("family:sol1"), std::string::npos);
  EXPECT_EQ(r.out.find("family:none"), std::string::npos);
  EXPECT_EQ(invoke({"check-set", "--in", path("set.json")}).code, kOk);
}

TEST_F(Cli, CheckSetRejectsDuplicates) {
  SetFile s;
  s.provenance = {"hand", {}};
  s.steps = {StepVector{1.0, 2.0, 3.0}, StepVector{1.0, 2.0, 3.0}};
  write_text_file(path("dup.json"), set_to_json(s));
  EXPECT_EQ(invoke({"check-set", "--in", path("dup.json")}).code, kVerifyFailed);
}

TEST_F(Cli, UzdSetAndStatePair) {
  ASSERT_EQ(invoke({"construct", "uzd", "--m", "3", "--ypoints", "401", "--out", path("u.json")}).code, kOk);
  EXPECT_EQ(invoke({"check-set", "--in", path("u.json")}).code, kOk);
  ASSERT_EQ(invoke({"construct", "uzd", "--m", "4", "--state", "0.6,0.8", "--ypoints", "401", "--out",
                    path("st.json")})
                .code,
            kOk);
  EXPECT_EQ(invoke({"verify", "--in", path("st.json")}).code, kOk);
  EXPECT_EQ(invoke({"construct", "uzd", "--m", "3", "--state", "1", "--out", path("bad.json")}).code, kUsage);
}

TEST_F(Cli, SampleCsvLayout) {
  const auto p = worked_pair();
  ASSERT_EQ(invoke({"sample", "--in", p, "--out", path("c.csv"), "--points", "10", "--ypoints", "20"}).code, kOk);
  std::ifstream in(path("c.csv"));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,|f|,|g|,y,|f_hat|,|g_hat|");
  int rows = 0, short_rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    if (line.rfind(",,,", 0) == 0) ++short_rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 5);
  }
  EXPECT_EQ(rows, 20);
  EXPECT_EQ(short_rows, 10);
}

TEST_F(Cli, ClassifyRejectsSampledPairs) {
  ASSERT_EQ(invoke({"construct", "mp", "--out", path("mp.json")}).code, kOk);
  EXPECT_EQ(invoke({"classify", "--in", path("mp.json")}).code, kUsage);
}

TEST(ComplexText, Examples) {
  EXPECT_EQ(format_complex({1.0, 0.0}), "1:0");
  EXPECT_EQ(format_complex({0.1, -2.5}), "0.10000000000000001:-2.5");
  EXPECT_EQ(parse_complex("1.5"), complex(1.5, 0.0));
  EXPECT_EQ(parse_complex("-2:+3e-2"), complex(-2.0, 0.03));
  EXPECT_THROW(parse_complex(""), UsageError);
  EXPECT_THROW(parse_complex("1:"), UsageError);
  EXPECT_THROW(parse_complex("1:2:3"), UsageError);
  EXPECT_THROW(parse_complex("1x"), UsageError);
  const auto v = parse_complex_list("1, 0:1 ,-1");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[1], complex(0.0, 1.0));
}

TEST(ComplexTextProperty, RoundTripIsBitExact) {
  Gen gen(71);
  const auto check = [](double re, double im) {
    const complex z = parse_complex(format_complex({re, im}));
    EXPECT_TRUE(same_bits(z.real(), re) && same_bits(z.imag(), im)) << format_complex({re, im});
  };
  for (double x : {0.0, -0.0, 5e-324, -2.2250738585072014e-308, std::numeric_limits<double>::max(), 1.0 / 3.0})
    check(x, -x);
  for (int trial = 0; trial < 20000; ++trial) {
    const double mant = gen.uniform(-1.0, 1.0);
    const int e = gen.integer(-300, 300);
    check(std::ldexp(mant, e), std::ldexp(gen.uniform(-1.0, 1.0), gen.integer(-60, 60)));
  }
}
