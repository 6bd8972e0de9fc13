#include <gtest/gtest.h>

#include <sstream>

#include "dilint/report.hpp"

using namespace dilint;

namespace {

Finding dcc() {
  return Finding{RuleId::DCC, "dcc/F.java", "F", "getRepository", 14,
                 "direct container call ApplicationContext.getBean()"};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Aggregate, EmptyIsAllZero) {
  auto t = aggregate({}, "p");
  EXPECT_EQ(t.counts.size(), 12u);
  for (const auto& [r, n] : t.counts) EXPECT_EQ(n, 0) << to_string(r);
  EXPECT_EQ(t.total(), 0);
}

TEST(Aggregate, CountsPerRule) {
  auto f = dcc();
  auto g = f;
  g.source_line = 20;
  auto t = aggregate({f, g}, "p", CorpusStats{3, 4});
  EXPECT_EQ(t.counts.at(RuleId::DCC), 2);
  EXPECT_EQ(t.total(), 2);
  EXPECT_EQ(t.total_files, 3);
  EXPECT_EQ(t.total_classes, 4);
}

TEST(Render, JsonZeroFindings) {
  auto doc = nlohmann::json::parse(render({}, aggregate({}, "clean"), Format::Json));
  EXPECT_EQ(doc["schema_version"], "1");
  EXPECT_EQ(doc["project"], "clean");
  ASSERT_EQ(doc["counts"].size(), 12u);
  for (RuleId r : kAllRules) EXPECT_EQ(doc["counts"][std::string(to_string(r))], 0);
  EXPECT_TRUE(doc["findings"].is_array());
  EXPECT_TRUE(doc["findings"].empty());
}

TEST(Render, JsonKeyOrderIsStable) {
  const std::string out = render({dcc()}, aggregate({dcc()}, "p"), Format::Json);
  const auto a = out.find("\"schema_version\"");
  const auto b = out.find("\"project\"");
  const auto c = out.find("\"counts\"");
  const auto d = out.find("\"findings\"");
  EXPECT_TRUE(a < b && b < c && c < d);
  EXPECT_LT(out.find("\"IIJ\""), out.find("\"MFI\""));
  EXPECT_EQ(out.back(), '\n');
}

TEST(Render, JsonRoundTrip) {
  std::vector<Finding> fs{dcc(), Finding{RuleId::MAI, "a b/\"q\".java", "K", "x", 3, "comma, quote \" and\nnewline \xC3\xA9"}};
  auto back = findings_from_json(nlohmann::json::parse(render(fs, aggregate(fs, "p"), Format::Json)));
  EXPECT_EQ(back, fs);
}

TEST(Render, CsvOneFindingTwoLines) {
  const std::string out = render({dcc()}, aggregate({dcc()}, "p"), Format::Csv);
  auto ls = lines(out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], "rule,file,line,class,element,message");
  EXPECT_EQ(ls[1], "DCC,dcc/F.java,14,F,getRepository,direct container call ApplicationContext.getBean()");
}

TEST(Render, CsvQuoting) {
  Finding f{RuleId::IIJ, "a.java", "A", "x", 1, "not used by foo, \"bar\""};
  auto ls = lines(render({f}, aggregate({f}, "p"), Format::Csv));
  EXPECT_EQ(ls[1], "IIJ,a.java,1,A,x,\"not used by foo, \"\"bar\"\"\"");
}

TEST(Render, TextLayout) {
  auto out = render({dcc()}, aggregate({dcc()}, "proj", CorpusStats{1, 1}), Format::Text);
  auto ls = lines(out);
  ASSERT_EQ(ls.size(), 16u);
  EXPECT_EQ(ls[0], "DCC dcc/F.java:14 F getRepository \xE2\x80\x94 direct container call ApplicationContext.getBean()");
  EXPECT_EQ(ls[1], "");
  EXPECT_EQ(ls[2], "Occurrences in proj (1 files, 1 classes)");
  EXPECT_EQ(ls[3], "IIJ 0");
  EXPECT_EQ(ls[9], "DCC 1");
  EXPECT_EQ(ls[14], "MFI 0");
  EXPECT_EQ(ls[15], "Total 1");
}

TEST(Render, PureAndRepeatable) {
  auto t = aggregate({dcc()}, "p");
  for (Format f : {Format::Text, Format::Json, Format::Csv}) EXPECT_EQ(render({dcc()}, t, f), render({dcc()}, t, f));
}

TEST(Format, Parsing) {
  EXPECT_EQ(parse_format("json"), Format::Json);
  EXPECT_EQ(parse_format("csv"), Format::Csv);
  EXPECT_EQ(parse_format("text"), Format::Text);
  EXPECT_THROW(parse_format("sarif"), UsageError);
}
