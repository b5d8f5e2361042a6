// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <sys/stat.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "support/generators.hpp"

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int status = -1;
  std::string out;
  std::string err;
};

Outcome vsverify(const std::string& args) {
  const fs::path err = fs::temp_directory_path() / ("vsv-cli-" + std::to_string(::getpid()) + ".err");
  const std::string cmd = std::string(VSV_CLI) + " " + args + " 2>" + err.string();
  Outcome r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = ::pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  r.err = gen::read(err.string());
  fs::remove(err);
  return r;
}

std::string fx(const std::string& name) { return std::string(VSV_FIXTURES) + "/" + name; }

std::string movie_args(const std::string& file) { return fx(file) + " --spec " + fx("flag_reset.json"); }

TEST(CliTest, TranslateMatchesGolden) {
  const Outcome r = vsverify("translate " + movie_args("movie_skip.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, gen::fixture("golden/movie_skip.smv"));
  EXPECT_NE(r.err.find("11 variables (4 input, 5 output, 1 state, 1 script)"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("warning [If5]: output port If5.False is unconnected"), std::string::npos);
}

TEST(CliTest, TranslateOptimizedSummary) {
  const fs::path out = fs::temp_directory_path() / ("vsv-cli-" + std::to_string(::getpid()) + ".smv");
  const Outcome r = vsverify("translate " + movie_args("movie_skip.json") + " --opt nose,encode --out " + out.string());
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("10 variables"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("encode: encoded 1 node(s): MovieClip3"), std::string::npos);
  EXPECT_EQ(gen::read(out.string()), gen::fixture("golden/movie_skip_encoded.smv"));
  fs::remove(out);
}

TEST(CliTest, TranslateSystemInput) {
  const Outcome r = vsverify("translate " + fx("sw.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, gen::fixture("golden/sw.smv"));
}

TEST(CliTest, CheckFailingSpecExitsOne) {
  const Outcome r = vsverify("check " + movie_args("movie_skip.json"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("-- specification AG (EventMode = true -> AF (EventMode = false))  is false"),
            std::string::npos);
  EXPECT_NE(r.out.find("step 8: If5:False (out)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("-- Loop starts here"), std::string::npos);
}

TEST(CliTest, CheckPassingSpecExitsZero) {
  const Outcome r = vsverify("check " + movie_args("movie_skip_fixed.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "-- specification AG (EventMode = true -> AF (EventMode = false))  is true\n");
}

TEST(CliTest, CheckJson) {
  const Outcome r = vsverify("check " + movie_args("movie_skip.json") + " --opt encode --format json");
  EXPECT_EQ(r.status, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j.at("all_hold").get<bool>());
  EXPECT_EQ(j.at("opt"), "encode");
  ASSERT_EQ(j.at("specs").size(), 1u);
  const auto& s = j.at("specs")[0];
  EXPECT_FALSE(s.at("holds").get<bool>());
  EXPECT_NE(s.at("control_flow").at("rendered").get<std::string>().find("MovieClip3:internal:Playing"), std::string::npos);
  EXPECT_GT(s.at("trace").at("loop").size(), 0u);
}

TEST(CliTest, InlineFormulaSpecFile) {
  const fs::path spec = fs::temp_directory_path() / ("vsv-cli-" + std::to_string(::getpid()) + ".ctl");
  std::ofstream(spec) << "-- the switch\n# comment\nEF sw = off\n\nAG sw = on\n";
  const Outcome r = vsverify("check " + fx("sw.json") + " --spec " + spec.string());
  fs::remove(spec);
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("-- specification EF sw = off  is true"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("-- specification AG sw = on  is false"), std::string::npos);
}

TEST(CliTest, InputErrorsExitTwo) {
  EXPECT_EQ(vsverify("check /nonexistent.json --spec " + fx("flag_reset.json")).status, 2);
  EXPECT_EQ(vsverify("check " + fx("movie_skip.json")).status, 2);
  EXPECT_EQ(vsverify("translate " + fx("movie_skip.json") + " --opt fast").status, 2);
  EXPECT_EQ(vsverify("bogus").status, 2);
  const Outcome r = vsverify("translate " + fx("nose_a.json"));
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("unknown node kind Source3"), std::string::npos) << r.err;
}

TEST(CliTest, StateCapExitsThree) {
  const Outcome r = vsverify("check " + movie_args("movie_skip.json") + " --state-cap 5");
  EXPECT_EQ(r.status, 3);
  EXPECT_NE(r.err.find("--engine nusmv"), std::string::npos);
}

TEST(CliTest, NusmvTimeoutExitsThree) {
  const fs::path bin = fs::temp_directory_path() / ("vsv-slow-" + std::to_string(::getpid()));
  std::ofstream(bin) << "#!/bin/sh\nsleep 30\n";
  ::chmod(bin.c_str(), 0755);
  ::setenv("VSVERIFY_NUSMV", bin.c_str(), 1);
  const Outcome r = vsverify("check " + movie_args("movie_skip.json") + " --engine nusmv --timeout 0.2");
  ::unsetenv("VSVERIFY_NUSMV");
  fs::remove(bin);
  EXPECT_EQ(r.status, 3) << r.err;
}

TEST(CliTest, MissingNusmvExitsTwo) {
  ::setenv("VSVERIFY_NUSMV", "/nonexistent/NuSMV", 1);
  const Outcome r = vsverify("check " + movie_args("movie_skip.json") + " --engine nusmv");
  ::unsetenv("VSVERIFY_NUSMV");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("NuSMV binary not found"), std::string::npos) << r.err;
}

TEST(CliTest, StatsCompare) {
  const Outcome r = vsverify("stats " + fx("movie_skip.json") + " --compare");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("none               11           16       2^4.0000"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("nose,encode        10           14       2^3.8074"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("reduction    \xE2\x86\x93 9.1 %   \xE2\x86\x93 12.5 %"), std::string::npos) << r.out;
}

TEST(CliTest, StatsJson) {
  const Outcome r = vsverify("stats " + fx("movie_skip.json") + " --compare --format json");
  EXPECT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.at("rows").size(), 2u);
  EXPECT_EQ(j.at("rows")[0].at("reachable_states"), 16);
  EXPECT_EQ(j.at("rows")[1].at("reachable_states"), 14);
  EXPECT_EQ(j.at("rows")[1].at("reachable_log2"), "2^3.8074");
}

}  // namespace
