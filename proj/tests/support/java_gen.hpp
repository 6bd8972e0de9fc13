#pragma once

// Random Java source generators for property tests. Every generated method
// records the number of decision points it was built with, counted while
// assembling the text, never by the library under test.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testgen {

struct GenMethod {
  std::string name;
  std::vector<std::string> statements;  // top-level statements of the body
  int decisions = 0;
};

class JavaGen {
 public:
  explicit JavaGen(std::uint32_t seed) : rng_(seed) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool coin() { return pick(2) == 0; }

  // One statement; adds its decision points to `dp`.
  std::string statement(int depth, int& dp) {
    const int kinds = depth >= 3 ? 2 : 22;
    switch (pick(kinds)) {
      case 0: return "a = a + 1;";
      case 1: return "b = a * 2 - b;";
      case 2: dp += 1; return "if (a > b) { " + block(depth, dp) + " }";
      case 3: dp += 2; return "if (flag && a > 0) { " + block(depth, dp) + " } else { " + block(depth, dp) + " }";
      case 4: dp += 1; return "for (int i = 0; i < a; i++) { " + block(depth, dp) + " }";
      case 5: dp += 1; return "for (String s : list) { " + block(depth, dp) + " }";
      case 6: dp += 1; return "while (a < b) { a++; " + block(depth, dp) + " }";
      case 7: dp += 1; return "do { " + block(depth, dp) + " } while (flag);";
      case 8: {
        dp += 3;
        std::string s = "switch (a) { case 1: " + block(depth, dp) + " break; case 2: case 3: ";
        s += block(depth, dp) + " break; default: " + block(depth, dp) + " }";
        return s;
      }
      case 9: {
        dp += 2;
        std::string s = "try { " + block(depth, dp) + " } catch (IllegalStateException e) { ";
        s += block(depth, dp) + " } catch (RuntimeException e) { " + block(depth, dp) + " } finally { ";
        s += block(depth, dp) + " }";
        return s;
      }
      case 10: dp += 1; return "int v" + std::to_string(counter_++) + " = flag ? a : b;";
      case 11: dp += 2; return "boolean t" + std::to_string(counter_++) + " = a > 0 || b > 0 && flag;";
      case 12: return "Runnable r" + std::to_string(counter_++) + " = () -> { " + block(depth, dp) + " };";
      case 13:
        return "Object o" + std::to_string(counter_++) +
               " = new Object() { public String toString() { if (flag) { return \"x\"; } return \"y\"; } };";
      case 14: dp += 1; return "list.forEach(s -> System.out.println(s.isEmpty() ? \"e\" : s));";
      case 15: return "String q" + std::to_string(counter_++) + " = \"if (a && b) || c ? d : e\"; /* while for case && */";
      case 16: {
        dp += 2;
        const std::string label = "outer" + std::to_string(counter_++);
        return label + ": for (;;) { if (flag) break " + label + "; " + block(depth, dp) + " }";
      }
      case 17: dp += 2; return "switch (b) { case 4 -> a++; case 5, 6 -> b++; default -> { " + block(depth, dp) + " } }";
      case 18: dp += 2; return "a = (a > 0) ? (b > 0 ? 1 : 2) : 3;";
      case 19: return "assert a >= 0 : \"negative\";";
      case 20: return "synchronized (this) { " + block(depth, dp) + " }";
      default: dp += 2; return "if (list instanceof java.util.ArrayList<String> al && !al.isEmpty()) { " + block(depth, dp) + " }";
    }
  }

  std::string block(int depth, int& dp) {
    std::string out;
    const int n = pick(3);
    for (int i = 0; i < n; ++i) {
      if (!out.empty()) out += ' ';
      out += statement(depth + 1, dp);
    }
    return out;
  }

  GenMethod method(std::string name, int max_statements = 6) {
    GenMethod m;
    m.name = std::move(name);
    const int n = pick(max_statements + 1);
    for (int i = 0; i < n; ++i) m.statements.push_back(statement(0, m.decisions));
    return m;
  }

  static std::string render(const GenMethod& m) {
    std::string out = "  void " + m.name + "(int a, int b, boolean flag, java.util.List<String> list) {\n";
    for (const auto& s : m.statements) out += "    " + s + "\n";
    out += "  }\n";
    return out;
  }

  static std::string render_class(const std::string& name, const std::vector<GenMethod>& methods) {
    std::string out = "package gen;\n\npublic class " + name + " {\n";
    for (const auto& m : methods) out += render(m);
    out += "}\n";
    return out;
  }

  // A class exercising injection facts: injected and plain fields, reads,
  // shadowing locals and parameters, getters, setters, argument passing,
  // anonymous classes, lambdas and container calls (several per line).
  std::string injection_class(const std::string& name) {
    const int n_fields = 1 + pick(5);
    std::vector<std::string> fields;
    std::string out = "package gen;\n\nimport javax.inject.Inject;\n\npublic class " + name + " {\n";
    for (int i = 0; i < n_fields; ++i) {
      fields.push_back("f" + std::to_string(i));
      const int kind = pick(4);
      if (kind == 0) out += "  @Inject private Service" + std::to_string(i) + " f" + std::to_string(i) + ";\n";
      else if (kind == 1) out += "  @Autowired protected Service" + std::to_string(i) + " f" + std::to_string(i) + ";\n";
      else if (kind == 2) out += "  @Inject\n  Service" + std::to_string(i) + " f" + std::to_string(i) + ";\n";
      else out += "  private Service" + std::to_string(i) + " f" + std::to_string(i) + ";\n";
    }
    out += "  @Inject private ApplicationContext ctx;\n";
    auto field = [&] { return fields[pick(static_cast<int>(fields.size()))]; };

    if (coin()) {
      out += "  @Inject\n  public " + name + "(Service0 p) {\n    this." + fields[0] + " = p;\n";
      if (coin()) out += "    " + field() + ".init();\n";
      out += "  }\n";
    }
    const int n_methods = pick(5);
    for (int m = 0; m < n_methods; ++m) {
      const bool shadow_param = coin() && coin();
      const std::string shadowed = field();
      out += std::string(coin() ? "  public" : "  private") + " Object m" + std::to_string(m) + "(" +
             (shadow_param ? "Service0 " + shadowed : std::string("int x")) + ") {\n";
      const int n_stmts = pick(5);
      for (int s = 0; s < n_stmts; ++s) {
        switch (pick(10)) {
          case 0: out += "    " + field() + ".run();\n"; break;
          case 1: out += "    helper(" + field() + ");\n"; break;
          case 2: out += "    other.accept(" + field() + ");\n"; break;
          case 3: out += "    { Service0 " + field() + " = null; " + field() + ".run(); }\n"; break;
          case 4: out += "    Runnable r" + std::to_string(s) + " = () -> " + field() + ".run();\n"; break;
          case 5:
            out += "    Object o" + std::to_string(s) + " = new Object() { void g() { " + field() + ".run(); } };\n";
            break;
          case 6: out += "    ctx.getBean(\"a\"); ctx.getBean(\"b\");\n"; break;
          case 7: out += "    for (Service0 " + field() + " : list) { " + field() + ".run(); }\n"; break;
          case 8: out += "    this." + field() + " = null;\n"; break;
          default: out += "    if (" + field() + " != null && x > 0) { return " + field() + "; }\n"; break;
        }
      }
      out += "    return null;\n  }\n";
    }
    if (coin()) out += "  public Object get" + std::to_string(pick(9)) + "() { return " + field() + "; }\n";
    if (coin()) {
      const std::string f = field();
      out += "  public void set" + f + "(Service0 v) { this." + f + " = v; }\n";
    }
    out += "}\n";
    return out;
  }

 private:
  std::mt19937 rng_;
  int counter_ = 0;
};

}  // namespace testgen
