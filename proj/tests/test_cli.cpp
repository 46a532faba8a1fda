#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

using nlohmann::json;

namespace {

struct Run {
  int exit_code;
  std::string out;
  json doc() const { return json::parse(out); }
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ORPEPI_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  const int st = pclose(f);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

void expect_schema(const json& j) {
  ASSERT_TRUE(j.contains("command"));
  ASSERT_TRUE(j["command"].is_array());
  ASSERT_TRUE(j.contains("checks"));
  ASSERT_TRUE(j.contains("summary"));
  ASSERT_TRUE(j.contains("elapsed_ms"));
  unsigned pass = 0, fail = 0, error = 0;
  for (const auto& c : j["checks"]) {
    ASSERT_TRUE(c.contains("name"));
    const std::string s = c["status"];
    pass += s == "pass";
    fail += s == "fail";
    error += s == "error";
  }
  EXPECT_EQ(j["summary"]["pass"], pass);
  EXPECT_EQ(j["summary"]["fail"], fail);
  EXPECT_EQ(j["summary"]["error"], error);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("orepi_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, IdentityCheck) {
  auto r = run("identity-check --family Hpq --lemma H.yxn --n-max 8 --params \"p=p,q=q\"");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const json j = r.doc();
  expect_schema(j);
  EXPECT_EQ(j["summary"]["pass"], 8);
  EXPECT_EQ(j["command"][0], "identity-check");
}

TEST(Cli, PiDecideGap) {
  auto r = run("pi-decide --family Bqf --f \"t^8\" --q z3");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const json j = r.doc();
  expect_schema(j);
  EXPECT_EQ(j["result"]["verdict"], "Unknown");
}

TEST(Cli, ConfluenceFromFile) {
  auto b = run("build --family BiQuad3 --params \"q1=2,q2=3,q3=5,lambda=1\"");
  ASSERT_EQ(b.exit_code, 0) << b.out;
  const auto path = temp_file("biquad.json");
  std::ofstream(path) << b.doc()["result"].dump();

  auto c = run("confluence --file " + path.string());
  EXPECT_EQ(c.exit_code, 1);
  const json j = c.doc();
  expect_schema(j);
  EXPECT_FALSE(j["result"]["confluent"].get<bool>());
  EXPECT_GE(j["summary"]["fail"].get<int>(), 1);
  bool residual = false;
  for (const auto& p : j["result"]["pairs"]) residual = residual || (!p["resolved"].get<bool>() && p["residual"] != "0");
  EXPECT_TRUE(residual);

  // Rebuilding from the saved file reproduces the presentation.
  auto again = run("build --file " + path.string());
  ASSERT_EQ(again.exit_code, 0) << again.out;
  EXPECT_EQ(again.doc()["result"], b.doc()["result"]);
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  for (const char* args : {"pi-decide --family Nope", "pi-decide --family Hpq --params \"p=\"",
                           "normalize --family Hpq --element \"x*\"", "identity-check --family Hpq --lemma H.nope",
                           "nonsense"}) {
    auto r = run(args);
    EXPECT_EQ(r.exit_code, 2) << args;
    if (!r.out.empty()) expect_schema(r.doc());
  }
}

TEST(Cli, Deterministic) {
  const std::string args = "central-check --family UqB2 --q z5 --candidates";
  auto a = run(args).doc(), b = run(args).doc();
  expect_schema(a);
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a["summary"]["fail"], 0);
}

TEST(Cli, Help) {
  auto r = run("--help");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("pi-decide"), std::string::npos);
}
