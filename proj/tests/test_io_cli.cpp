#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "orliczsm/cli.hpp"
#include "orliczsm/io.hpp"
#include "support.hpp"

using namespace orliczsm;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "orliczsm");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("orliczsm_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Io, FormatDouble) {
  EXPECT_EQ(format_double(5.0), "5.0");
  EXPECT_EQ(format_double(0.0), "0.0");
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1e300), "1.0000000000000001e+300");
  orliczsm::testing::Rng rng(60);
  for (int i = 0; i < 100; ++i) {
    const double x = std::ldexp(orliczsm::testing::uniform(rng, -1.0, 1.0), orliczsm::testing::uniform_int(rng, -60, 60));
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
  EXPECT_EQ(format_double(INFINITY), "null");
}

TEST(Io, RoundTrip) {
  orliczsm::testing::Rng rng(61);
  for (int i = 0; i < 50; ++i) {
    const CoeffSeq f = orliczsm::testing::random_coeffs(rng, 20, 4096);
    std::stringstream buffer;
    write_coefficients(buffer, f);
    EXPECT_EQ(read_coefficients(buffer), f);
  }
}

TEST(Io, WriterAscendingAndReaderDropsZeros) {
  std::stringstream in("{\"k\":3,\"re\":1}\n\n{\"k\":-3,\"re\":0.5,\"im\":0.0}\n{\"k\":0,\"re\":0,\"im\":0}\n");
  const CoeffSeq f = read_coefficients(in);
  EXPECT_EQ(f, (CoeffSeq{{-3, 0.5}, {3, 1.0}}));
  std::ostringstream out;
  write_coefficients(out, f);
  EXPECT_EQ(out.str(), "{\"k\":-3,\"re\":0.5,\"im\":0.0}\n{\"k\":3,\"re\":1.0,\"im\":0.0}\n");
}

TEST(Io, ReaderErrorsNameLines) {
  auto message = [](const std::string& text) {
    std::stringstream in(text);
    try {
      read_coefficients(in);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("{\"k\":1,\"re\":1}\n{\"k\":1,\"re\":2}\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("{\"k\":1,\"re\":1}\n\nnot json\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("{\"k\":1,\"re\":1,\"phase\":0}\n").find("unknown key"), std::string::npos);
  EXPECT_NE(message("{\"k\":1.5,\"re\":1}\n").find("integer"), std::string::npos);
  EXPECT_NE(message("{\"re\":1}\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("[1,2]\n").find("line 1"), std::string::npos);
}

TEST(Io, OrliczSpec) {
  EXPECT_EQ(parse_orlicz(R"({"family":"power","p":2})"), OrliczFunction::power(2.0));
  EXPECT_EQ(parse_orlicz(R"({"family":"exp_minus_one"})"), OrliczFunction::exp_minus_one());
  EXPECT_EQ(parse_orlicz(R"({"family":"power_log","p":1.5})"), OrliczFunction::power_log(1.5));
  EXPECT_THROW(parse_orlicz(R"({"family":"power","p":2,"q":1})"), InputError);
  EXPECT_THROW(parse_orlicz(R"({"family":"exp_minus_one","p":2})"), InputError);
  EXPECT_THROW(parse_orlicz(R"({"family":"power"})"), InputError);
  EXPECT_THROW(parse_orlicz(R"({"family":"power","p":0.5})"), InputError);
  EXPECT_THROW(parse_orlicz(R"({"family":"cosh"})"), InputError);
  for (const auto& phi : orliczsm::testing::builtin_orlicz()) {
    EXPECT_EQ(parse_orlicz(orlicz_to_json(phi)), phi);
  }
}

TEST(Io, ReportSerialization) {
  Report r;
  r.name = "demo";
  r.params = {{"alpha", "1"}, {"note", "a,b"}};
  r.tolerance = 0.05;
  r.samples = {{"n=1", 1.0, 2.0, 0.5}};
  r.empirical_constant = 0.5;
  r.passed = true;
  std::ostringstream json;
  write_report_json(json, r);
  for (const char* key : {"\"name\"", "\"params\"", "\"tolerance\"", "\"samples\"", "\"empirical_constant\"",
                          "\"passed\": true"}) {
    EXPECT_NE(json.str().find(key), std::string::npos) << key;
  }
  std::ostringstream csv;
  write_report_csv(csv, r);
  EXPECT_NE(csv.str().find("input,lhs,rhs,ratio\nn=1,1.0,2.0,0.5\n"), std::string::npos);
  EXPECT_NE(csv.str().find("# note,\"a,b\""), std::string::npos);
}

TEST(Cli, Examples) {
  const auto f = write_temp("f.jsonl", "{\"k\":1,\"re\":3}\n{\"k\":2,\"re\":4}\n");
  auto r = run_cli({"norm", "--orlicz", R"({"family":"power","p":2})", "--input", f});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5.0\n");
  std::string ones;
  for (int k = -3; k <= 3; ++k) ones += "{\"k\":" + std::to_string(k) + ",\"re\":1}\n";
  const auto g = write_temp("ones.jsonl", ones);
  r = run_cli({"en", "--n", "2", "--orlicz", R"({"family":"power","p":2})", "--input", g});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2.0\n");
  r = run_cli({"verify", "direct", "--alpha", "1", "--family", "random-band", "--seed", "7", "--n-max", "64"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"name\": \"direct\""), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"norm", "-i", "x"}).code, 2);
  EXPECT_EQ(run_cli({"norm", "--input", "/nonexistent/file.jsonl"}).code, 2);
  const auto bad = write_temp("bad.jsonl", "{\"k\":1,\"re\":1}\n{\"k\":1,\"re\":1}\n");
  const auto r = run_cli({"norm", "--input", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  const auto f = write_temp("unit.jsonl", "{\"k\":1,\"re\":1}\n");
  EXPECT_EQ(run_cli({"norm", "--orlicz", R"({"family":"power","p":2,"x":1})", "--input", f}).code, 2);
  EXPECT_EQ(run_cli({"verify", "balpha", "--alpha", "1", "--r", "1"}).code, 1);
  EXPECT_EQ(run_cli({"verify", "balpha", "--alpha", "1", "--r", "0.5"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "direct", "--family", "nope"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, OutputFileAndCsv) {
  const auto path = (std::filesystem::temp_directory_path() / "orliczsm_test_report.csv").string();
  const auto r = run_cli({"verify", "balpha", "--alpha", "2", "--r", "1", "--format", "csv", "--output", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "# name,b_alpha");
}

TEST(Cli, KernelAndSigmaEmitCoefficients) {
  auto r = run_cli({"kernel", "--n", "1", "--r", "2"});
  EXPECT_EQ(r.code, 0);
  std::stringstream in(r.out);
  const CoeffSeq k = read_coefficients(in);
  EXPECT_EQ(k.size(), 1u);
  const auto f = write_temp("const.jsonl", "{\"k\":0,\"re\":2}\n");
  r = run_cli({"sigma", "--alpha", "2", "--n", "4", "--input", f});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"k\":0,\"re\":2.0,\"im\":0.0}\n");
  EXPECT_EQ(run_cli({"sigma", "--alpha", "1.5", "--n", "4", "--input", f}).code, 2);
}

TEST(Cli, Deterministic) {
  const auto f = write_temp("det.jsonl", "{\"k\":-2,\"re\":0.3,\"im\":1}\n{\"k\":5,\"re\":-1.25}\n");
  const std::vector<std::vector<std::string>> commands{
      {"onorm", "--orlicz", R"({"family":"exp_minus_one"})", "--input", f},
      {"omega", "--alpha", "1.5", "--delta", "0.7", "--input", f},
      {"kfunc", "--alpha", "0.5", "--delta", "0.1", "--input", f},
      {"verify", "equiv", "--alpha", "1", "--seed", "3", "--band", "16", "--n", "4"},
  };
  for (const auto& c : commands) {
    const auto a = run_cli(c);
    const auto b = run_cli(c);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}
