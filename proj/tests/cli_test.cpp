#include <gtest/gtest.h>

#include <set>

#include "json.hpp"
#include "support/run_cli.hpp"

using testgen::run_cli;
using testgen::shell_quote;

namespace {

const std::string kFixtures = DILINT_FIXTURES;

std::string dir(const std::string& rel) { return shell_quote(kFixtures + "/" + rel); }

std::set<std::string> rules_in(const std::string& json_text) {
  std::set<std::string> out;
  const auto doc = nlohmann::json::parse(json_text);
  for (const auto& f : doc["findings"]) out.insert(f["rule"].get<std::string>());
  return out;
}

}  // namespace

TEST(Cli, RulesListsTwelve) {
  auto r = run_cli("rules");
  EXPECT_EQ(r.exit_code, 0);
  std::istringstream in(r.out);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 12u);
  EXPECT_EQ(lines[0], "IIJ \xE2\x80\x94 Intransigent injection");
  EXPECT_EQ(lines[11].substr(0, 3), "MFI");
}

TEST(Cli, CleanCorpusExitsZeroWithZeroCounts) {
  auto r = run_cli("analyze " + dir("clean") + " --format json");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["project"], "clean");
  ASSERT_EQ(doc["counts"].size(), 12u);
  for (const auto& [k, v] : doc["counts"].items()) EXPECT_EQ(v, 0) << k;
  EXPECT_TRUE(doc["findings"].empty());
}

TEST(Cli, SeededCorpusExitsOne) {
  auto r = run_cli("analyze " + dir("seeded"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("Occurrences in seeded"), std::string::npos);
  EXPECT_NE(r.out.find("DCC dcc/F.java:14 F getRepository"), std::string::npos);
}

TEST(Cli, RulesFlagRestricts) {
  auto r = run_cli("analyze " + dir("seeded") + " --format json --rules IIJ,USI");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(rules_in(r.out), (std::set<std::string>{"IIJ", "USI"}));
  auto none = run_cli("analyze " + dir("seeded/cpm") + " --rules USI");
  EXPECT_EQ(none.exit_code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("analyze " + dir("clean") + " --bogus").exit_code, 2);
  EXPECT_EQ(run_cli("analyze").exit_code, 2);
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("analyze " + dir("clean") + " --format sarif").exit_code, 2);
  auto missing = run_cli("analyze " + dir("does-not-exist"));
  EXPECT_EQ(missing.exit_code, 2);
  EXPECT_NE(missing.err.find("does-not-exist"), std::string::npos);
  EXPECT_EQ(run_cli("analyze " + dir("clean") + " --rules NOPE").exit_code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run_cli("--help").exit_code, 0); }

TEST(Cli, BadConfigExitsTwo) {
  testgen::TempDir tmp;
  auto cfg = tmp.write("bad.cfg", "cpm_cc_threshold = zero\n");
  auto r = run_cli("analyze " + dir("clean") + " --config " + shell_quote(cfg.string()));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("bad.cfg:1"), std::string::npos);
}

TEST(Cli, ConfigFromEnvironment) {
  testgen::TempDir tmp;
  auto cfg = tmp.write("only-dcc.cfg", "enabled_rules = DCC\n");
  auto r = run_cli("analyze " + dir("seeded") + " --format json", "DILINT_CONFIG=" + shell_quote(cfg.string()));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(rules_in(r.out), (std::set<std::string>{"DCC"}));

  // --config wins over the environment
  auto usi = tmp.write("only-usi.cfg", "enabled_rules = USI\n");
  auto r2 = run_cli("analyze " + dir("seeded") + " --format json --config " + shell_quote(usi.string()),
                    "DILINT_CONFIG=" + shell_quote(cfg.string()));
  EXPECT_EQ(rules_in(r2.out), (std::set<std::string>{"USI"}));
}

TEST(Cli, OutFileAndLabel) {
  testgen::TempDir tmp;
  const auto out = tmp.path() / "report.csv";
  auto r = run_cli("analyze " + dir("seeded/dcc") + " --format csv --label demo --out " + shell_quote(out.string()));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "rule,file,line,class,element,message");

  auto j = run_cli("analyze " + dir("clean") + " --format json --label demo");
  EXPECT_EQ(nlohmann::json::parse(j.out)["project"], "demo");
}

TEST(Cli, ExcludeGlobs) {
  testgen::TempDir tmp;
  tmp.write("src/main/A.java", "class A { @Inject Dep d; }");
  tmp.write("src/test/T.java", "class T { @Inject Dep d; }");
  tmp.write("legacy/L.java", "class L { @Inject Dep d; }");
  auto files = [&](const std::string& extra) {
    std::set<std::string> out;
    auto r = run_cli("analyze " + shell_quote(tmp.path().string()) + " --format json " + extra);
    const auto doc = nlohmann::json::parse(r.out);
    for (const auto& f : doc["findings"]) out.insert(f["file"].get<std::string>());
    return out;
  };
  EXPECT_EQ(files(""), (std::set<std::string>{"legacy/L.java", "src/main/A.java"}));
  EXPECT_EQ(files("--exclude '**/legacy/**'"), (std::set<std::string>{"src/main/A.java"}));
  EXPECT_EQ(files("--no-default-excludes"),
            (std::set<std::string>{"legacy/L.java", "src/main/A.java", "src/test/T.java"}));
}

TEST(Cli, EvaluatePrintsJson) {
  testgen::TempDir tmp;
  auto oracle = tmp.write("o.csv", "file,class,element,rule\ndcc/F.java,F,getRepository,DCC\ndcc/F.java,F,missing,DCC\n");
  auto r = run_cli("evaluate " + dir("seeded") + " --oracle " + shell_quote(oracle.string()));
  EXPECT_EQ(r.exit_code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["oracle_total"], 2);
  EXPECT_EQ(doc["matched"], 1);
  EXPECT_DOUBLE_EQ(doc["relative_recall"].get<double>(), 0.5);
  EXPECT_EQ(doc["per_rule"]["DCC"]["true_positives"], 1);
}

TEST(Cli, EvaluateBadOracleExitsTwo) {
  testgen::TempDir tmp;
  auto oracle = tmp.write("o.csv", "file,class,element,rule\na,B,c,XYZ\n");
  auto r = run_cli("evaluate " + dir("seeded") + " --oracle " + shell_quote(oracle.string()));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("line 2: unknown rule"), std::string::npos);
  EXPECT_EQ(run_cli("evaluate " + dir("seeded")).exit_code, 2);
}

TEST(Cli, ParseWarningsGoToStderr) {
  testgen::TempDir tmp;
  tmp.write("Bad.java", "class Bad { void m() { int x = ; } }");
  auto r = run_cli("analyze " + shell_quote(tmp.path().string()));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.err.find("warning: Bad.java:1:"), std::string::npos);
  auto q = run_cli("analyze " + shell_quote(tmp.path().string()) + " --quiet");
  EXPECT_TRUE(q.err.empty());
}

TEST(Cli, JsonOutputIsByteIdenticalAcrossRuns) {
  auto a = run_cli("analyze " + dir("seeded") + " --format json --jobs 1");
  auto b = run_cli("analyze " + dir("seeded") + " --format json --jobs 8");
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}
