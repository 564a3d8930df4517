#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "classent/commands.hpp"

using classent::cli::run;

namespace {

struct Ran {
  int code;
  std::string out;
  std::string err;
};

Ran cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("classent_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(cli, reproduce_cases) {
  for (const char* c : {"copy-gate", "cnot", "two-bit-pair", "appendix-pair", "quantum-curve"}) {
    const auto r = cli({"reproduce", "--case", c, "--strict"});
    EXPECT_EQ(r.code, 0) << c << "\n" << r.out << r.err;
    EXPECT_NE(r.out.find("verdict"), std::string::npos);
  }
}

TEST(cli, reproduce_json) {
  const auto r = cli({"reproduce", "--case", "two-bit-pair", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.contains("items"));
}

TEST(cli, usage_errors) {
  EXPECT_EQ(cli({}).code, 1);
  EXPECT_EQ(cli({"reproduce", "--case", "nope"}).code, 1);
  EXPECT_EQ(cli({"omega"}).code, 1);
  EXPECT_EQ(cli({"omega", "--max-len", "0"}).code, 1);
  EXPECT_EQ(cli({"omega", "--max-len", "4", "--format", "xml"}).code, 1);
  EXPECT_EQ(cli({"analyze", "/nonexistent/u.json", "copy"}).code, 1);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(cli, omega_text_and_json) {
  auto r = cli({"omega", "--max-len", "4", "--max-steps", "10", "--workers", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("7/16"), std::string::npos);
  r = cli({"omega", "--max-len", "4", "--max-steps", "10", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["omega_text"], "7/2^4");
  EXPECT_EQ(j["census"].size(), 4u);
}

TEST(cli, omega_checkpoint_resume) {
  const auto cp = scratch("cp.json");
  const auto full = cli({"omega", "--max-len", "12", "--format", "json"}).out;
  auto r = cli({"omega", "--max-len", "12", "--checkpoint", cp.string(), "--stop-after", "5", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(std::filesystem::exists(cp));
  r = cli({"omega", "--max-len", "12", "--checkpoint", cp.string(), "--resume", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, full);
  EXPECT_EQ(cli({"omega", "--max-len", "11", "--checkpoint", cp.string(), "--resume"}).code, 1);
  std::filesystem::remove(cp);
}

TEST(cli, analyze_files_and_builtins) {
  const auto u = scratch("u.json");
  std::ofstream(u) << R"({"register_bits": 2, "read_bits": [0], "write_bits": [1], "program_table": "01"})";
  const auto r = cli({"analyze", u.string(), "copy_pair_V", "--split", "1|1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("ghost"), std::string::npos);
  const auto j = cli({"analyze", "appendix_T1", "appendix_T2", "--format", "json"});
  EXPECT_EQ(j.code, 0) << j.err;
  EXPECT_TRUE(nlohmann::json::accept(j.out));
  EXPECT_EQ(cli({"analyze", "copy", "cnot"}).code, 1);
  std::filesystem::remove(u);
}

TEST(cli, out_file) {
  const auto f = scratch("out.txt");
  EXPECT_EQ(cli({"omega", "--max-len", "2", "--out", f.string()}).code, 0);
  std::ifstream in(f);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("Omega_2"), std::string::npos);
  std::filesystem::remove(f);
}
