#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dilint/metrics.hpp"
#include "dilint/parser.hpp"
#include "support/cc_cases.hpp"
#include "support/java_gen.hpp"

using namespace dilint;

namespace {

ClassModel parse_class(const std::string& src) {
  auto u = parse_unit(src, "K.java");
  EXPECT_TRUE(u.parse_diagnostics.empty()) << (u.parse_diagnostics.empty() ? "" : u.parse_diagnostics[0].message);
  EXPECT_FALSE(u.type_decls.empty());
  return u.type_decls.empty() ? ClassModel{} : u.type_decls[0];
}

}  // namespace

TEST(Metrics, HandCountedMethods) {
  for (const auto& c : testgen::hand_counted_methods()) {
    ClassModel cls = parse_class(c.source);
    ASSERT_EQ(cls.methods.size(), 1u) << c.name;
    EXPECT_EQ(cyclomatic_complexity(cls.methods[0]), c.expected_cc) << c.name;
  }
}

TEST(Metrics, BodylessMethodIsRejected) {
  ClassModel cls = parse_class("interface I { void m(); }");
  EXPECT_THROW(cyclomatic_complexity(cls.methods.at(0)), std::invalid_argument);
  EXPECT_EQ(class_complexity_sum(cls), 0);
  EXPECT_TRUE(complexity_records(cls).empty());
}

TEST(Metrics, ClassSums) {
  EXPECT_EQ(class_complexity_sum(parse_class("class K { void a() {} void b() {} }")), 2);
  ClassModel with_ctor = parse_class("class K { K() { if (x) {} } void a() {} }");
  EXPECT_EQ(class_complexity_sum(with_ctor), 3);
  EXPECT_EQ(class_complexity_sum(with_ctor, false), 1);
  EXPECT_EQ(complexity_records(with_ctor).size(), 2u);
}

TEST(Metrics, InterfaceDefaultMethodCounts) {
  ClassModel cls = parse_class("interface I { void a(); default int b(int x) { return x > 0 ? 1 : 0; } }");
  EXPECT_EQ(class_complexity_sum(cls), 2);
}

TEST(Metrics, GeneratedMethodsMatchConstructionCount) {
  for (std::uint32_t seed = 1; seed <= 100; ++seed) {
    testgen::JavaGen gen(seed);
    auto m = gen.method("m");
    ClassModel cls = parse_class(testgen::JavaGen::render_class("G", {m}));
    ASSERT_EQ(cls.methods.size(), 1u);
    EXPECT_EQ(cyclomatic_complexity(cls.methods[0]), m.decisions + 1) << "seed " << seed;
  }
}

TEST(Metrics, AdditivityAndEmptyMethodAddsOne) {
  for (std::uint32_t seed = 1; seed <= 50; ++seed) {
    testgen::JavaGen gen(seed);
    std::vector<testgen::GenMethod> ms;
    const int n = 1 + gen.pick(5);
    int expected = 0;
    for (int i = 0; i < n; ++i) {
      ms.push_back(gen.method("m" + std::to_string(i)));
      expected += ms.back().decisions + 1;
    }
    ClassModel cls = parse_class(testgen::JavaGen::render_class("G", ms));
    int per_method = 0;
    for (const auto& m : cls.methods) per_method += cyclomatic_complexity(m);
    EXPECT_EQ(class_complexity_sum(cls), per_method);
    EXPECT_EQ(class_complexity_sum(cls), expected);

    ms.push_back(testgen::GenMethod{"extra", {}, 0});
    EXPECT_EQ(class_complexity_sum(parse_class(testgen::JavaGen::render_class("G", ms))), expected + 1);
  }
}

TEST(Metrics, OrderIndependence) {
  testgen::JavaGen gen(5);
  std::vector<testgen::GenMethod> ms;
  for (int i = 0; i < 5; ++i) ms.push_back(gen.method("m" + std::to_string(i)));
  auto records = [](const ClassModel& c) {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& r : complexity_records(c)) out.emplace_back(r.method_name, r.cc);
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto base = records(parse_class(testgen::JavaGen::render_class("G", ms)));
  std::mt19937 rng(3);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(ms.begin(), ms.end(), rng);
    EXPECT_EQ(records(parse_class(testgen::JavaGen::render_class("G", ms))), base);
  }
}

TEST(Metrics, InsertingIfAddsExactlyOne) {
  for (std::uint32_t seed = 1; seed <= 100; ++seed) {
    testgen::JavaGen gen(seed);
    auto m = gen.method("m");
    const int before = cyclomatic_complexity(parse_class(testgen::JavaGen::render_class("G", {m})).methods.at(0));
    const auto pos = static_cast<std::size_t>(gen.pick(static_cast<int>(m.statements.size()) + 1));
    m.statements.insert(m.statements.begin() + static_cast<std::ptrdiff_t>(pos), "if (b > 3) { a = b; }");
    const int after = cyclomatic_complexity(parse_class(testgen::JavaGen::render_class("G", {m})).methods.at(0));
    EXPECT_EQ(after, before + 1) << "seed " << seed;
  }
}
