// dilint: dependency-injection anti-pattern linter for Java sources.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "dilint/dilint.hpp"

namespace fs = std::filesystem;

namespace {

bool looks_like_url(const std::string& s) {
  return s.starts_with("http://") || s.starts_with("https://") || s.starts_with("ssh://") ||
         s.starts_with("git@") || s.starts_with("git://") || s.ends_with(".git");
}

// Shallow clone through the system git; returns the checkout directory.
fs::path clone_repository(const std::string& url) {
  std::random_device rd;
  fs::path dir = fs::temp_directory_path() / ("dilint-" + std::to_string(rd()) + "-" + std::to_string(rd()));
  const std::string target = dir.string();
  pid_t pid = fork();
  if (pid < 0) throw dilint::IoError("cannot start git");
  if (pid == 0) {
    const char* argv[] = {"git", "clone", "--quiet", "--depth", "1", "--", url.c_str(), target.c_str(), nullptr};
    execvp("git", const_cast<char* const*>(argv));
    _exit(127);
  }
  int status = 0;
  if (waitpid(pid, &status, 0) < 0 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    std::error_code ec;
    fs::remove_all(dir, ec);
    throw dilint::IoError("git clone failed for '" + url + "'");
  }
  return dir;
}

struct Checkout {
  fs::path root;
  bool temporary = false;

  explicit Checkout(const std::string& arg) {
    if (looks_like_url(arg) && !fs::exists(arg)) {
      root = clone_repository(arg);
      temporary = true;
    } else {
      root = arg;
    }
  }
  ~Checkout() {
    if (temporary) {
      std::error_code ec;
      fs::remove_all(root, ec);
    }
  }
  Checkout(const Checkout&) = delete;
  Checkout& operator=(const Checkout&) = delete;
};

dilint::RuleConfig load_effective_config(const std::string& config_path) {
  if (!config_path.empty()) return dilint::load_config(config_path);
  if (const char* env = std::getenv("DILINT_CONFIG"); env && *env) return dilint::load_config(env);
  return {};
}

std::string default_label(const std::string& root_arg) {
  fs::path p = fs::path(root_arg).lexically_normal();
  if (p.filename().empty()) p = p.parent_path();
  std::string name = p.filename().string();
  if (name.ends_with(".git")) name.resize(name.size() - 4);
  return name.empty() ? root_arg : name;
}

void print_diagnostics(const std::vector<std::string>& diagnostics, bool quiet) {
  if (quiet) return;
  for (const auto& d : diagnostics) std::cerr << "warning: " << d << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detects dependency-injection anti-patterns in Java sources"};
  app.require_subcommand(1);

  std::string root, format = "text", config_path, rules, out_path, label, oracle_path;
  std::vector<std::string> excludes;
  bool no_default_excludes = false, quiet = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto* analyze = app.add_subcommand("analyze", "Analyze a source tree or repository URL");
  analyze->add_option("root", root, "Source root directory or repository URL")->required();
  analyze->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  analyze->add_option("--config", config_path, "Configuration file");
  analyze->add_option("--rules", rules, "Comma-separated rule IDs to run");
  analyze->add_option("--exclude", excludes, "Exclude glob (repeatable)");
  analyze->add_flag("--no-default-excludes", no_default_excludes, "Do not exclude **/test/** and **/generated/**");
  analyze->add_option("--out", out_path, "Write the report to FILE");
  analyze->add_option("--label", label, "Project label for the occurrence table");
  analyze->add_option("--jobs", jobs, "Parser threads")->check(CLI::PositiveNumber);
  analyze->add_flag("--quiet", quiet, "Suppress parse warnings");

  auto* evaluate = app.add_subcommand("evaluate", "Compare findings with an oracle CSV");
  evaluate->add_option("root", root, "Source root directory or repository URL")->required();
  evaluate->add_option("--oracle", oracle_path, "Oracle CSV (file,class,element,rule)")->required();
  evaluate->add_option("--config", config_path, "Configuration file");
  evaluate->add_option("--exclude", excludes, "Exclude glob (repeatable)");
  evaluate->add_flag("--no-default-excludes", no_default_excludes, "Do not exclude **/test/** and **/generated/**");
  evaluate->add_flag("--quiet", quiet, "Suppress parse warnings");

  auto* list_rules = app.add_subcommand("rules", "List the rule catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list_rules) {
      for (dilint::RuleId r : dilint::kAllRules)
        std::cout << dilint::to_string(r) << " \xE2\x80\x94 " << dilint::rule_name(r) << '\n';
      return 0;
    }

    dilint::RuleConfig cfg = load_effective_config(config_path);
    if (!rules.empty()) cfg.enabled_rules = dilint::parse_rule_list(rules);
    cfg.validate();
    std::vector<std::string> globs = no_default_excludes ? std::vector<std::string>{} : dilint::default_excludes();
    globs.insert(globs.end(), excludes.begin(), excludes.end());

    Checkout checkout(root);
    const auto result = dilint::analyze_tree(checkout.root, cfg, globs, jobs);
    print_diagnostics(result.diagnostics, quiet);

    if (*evaluate) {
      const auto oracle = dilint::load_oracle(oracle_path);
      std::cout << dilint::to_json(dilint::evaluate(result.findings, oracle)).dump(2) << '\n';
      return 0;
    }

    const auto table =
        dilint::aggregate(result.findings, label.empty() ? default_label(root) : label, result.stats);
    const std::string report = dilint::render(result.findings, table, dilint::parse_format(format));
    if (out_path.empty()) {
      std::cout << report;
      std::cout.flush();
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out || !(out << report)) throw dilint::IoError("cannot write '" + out_path + "'");
    }
    return result.findings.empty() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "dilint: " << e.what() << '\n';
    return 2;
  }
}
