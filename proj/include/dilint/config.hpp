#pragma once

// Detector configuration and its key = value file format.
//
//   # comment
//   cpm_cc_threshold = 8
//   sdp_name_substrings = factory, fabric, locator
//   enabled_rules = IIJ, USI
//
// Keys are the RuleConfig field names. Lists are comma separated, booleans are
// true/false. Absent keys keep their defaults; unknown keys are errors.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dilint/errors.hpp"
#include "dilint/rules.hpp"

namespace dilint {

struct RuleConfig {
  int cpm_cc_threshold = 8;
  int fdc_cc_threshold = 46;
  int fdc_min_injections = 5;
  std::vector<std::string> sdp_name_substrings{"factory", "fabric", "locator"};
  std::vector<std::string> framework_specific_annotations{"Autowired"};
  bool include_constructors_in_fdc = true;
  std::set<RuleId> enabled_rules{kAllRules.begin(), kAllRules.end()};

  // Annotations recognized as injection points besides Inject/Autowired.
  bool recognize_resource_annotation = false;
  // Declared receiver types whose getBean() is a direct container call.
  std::vector<std::string> container_type_names{
      "ApplicationContext",        "ConfigurableApplicationContext",
      "WebApplicationContext",     "GenericApplicationContext",
      "AnnotationConfigApplicationContext", "ClassPathXmlApplicationContext",
      "BeanFactory"};
  // Receivers never treated as static dependence providers (logging facades).
  std::vector<std::string> sdp_ignored_receivers{"LoggerFactory", "LogFactory", "LogManager"};
  // IIJ: an attribute read by a constructor is needed at construction time.
  bool iij_exempt_constructor_reads = false;
  // IIJ: lazily resolved injections are not intransigent.
  std::vector<std::string> lazy_wrapper_types{"Provider", "Lazy", "ObjectFactory", "ObjectProvider"};
  // OWI: also count attributes passed to methods of the same instance.
  bool owi_include_same_class_calls = false;

  bool enabled(RuleId r) const { return enabled_rules.count(r) > 0; }

  void validate() const {
    if (cpm_cc_threshold <= 0) throw ConfigError("cpm_cc_threshold must be positive");
    if (fdc_cc_threshold <= 0) throw ConfigError("fdc_cc_threshold must be positive");
    if (fdc_min_injections <= 0) throw ConfigError("fdc_min_injections must be positive");
    if (enabled(RuleId::SDP) && sdp_name_substrings.empty())
      throw ConfigError("sdp_name_substrings must not be empty while SDP is enabled");
  }
};

namespace detail {

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    if (comma == std::string_view::npos) comma = s.size();
    std::string item = trim(s.substr(start, comma - start));
    if (!item.empty()) out.push_back(std::move(item));
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

// Parses "IIJ,USI" into a rule set. Throws ConfigError on unknown IDs.
inline std::set<RuleId> parse_rule_list(std::string_view text) {
  std::set<RuleId> rules;
  for (const auto& item : detail::split_list(text)) {
    std::string upper = item;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    auto r = parse_rule_id(upper);
    if (!r) throw ConfigError("unknown rule '" + item + "'");
    rules.insert(*r);
  }
  return rules;
}

inline RuleConfig parse_config(std::string_view text, const std::string& origin = "config") {
  RuleConfig cfg;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (line_no == 1 && raw.starts_with("\xEF\xBB\xBF")) raw.erase(0, 3);
    std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    const std::string where = origin + ":" + std::to_string(line_no) + ": ";
    if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));

    auto as_int = [&]() {
      try {
        std::size_t used = 0;
        int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
      } catch (const std::exception&) {
        throw ConfigError(where + "'" + key + "' expects an integer, got '" + value + "'");
      }
    };
    auto as_bool = [&]() {
      if (value == "true") return true;
      if (value == "false") return false;
      throw ConfigError(where + "'" + key + "' expects true or false, got '" + value + "'");
    };
    auto lowered = [](std::vector<std::string> items) {
      for (auto& s : items)
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      return items;
    };

    if (key == "cpm_cc_threshold") cfg.cpm_cc_threshold = as_int();
    else if (key == "fdc_cc_threshold") cfg.fdc_cc_threshold = as_int();
    else if (key == "fdc_min_injections") cfg.fdc_min_injections = as_int();
    else if (key == "sdp_name_substrings") cfg.sdp_name_substrings = lowered(detail::split_list(value));
    else if (key == "framework_specific_annotations") cfg.framework_specific_annotations = detail::split_list(value);
    else if (key == "include_constructors_in_fdc") cfg.include_constructors_in_fdc = as_bool();
    else if (key == "enabled_rules") {
      try {
        cfg.enabled_rules = parse_rule_list(value);
      } catch (const ConfigError& e) {
        throw ConfigError(where + e.what());
      }
    }
    else if (key == "recognize_resource_annotation") cfg.recognize_resource_annotation = as_bool();
    else if (key == "container_type_names") cfg.container_type_names = detail::split_list(value);
    else if (key == "sdp_ignored_receivers") cfg.sdp_ignored_receivers = detail::split_list(value);
    else if (key == "iij_exempt_constructor_reads") cfg.iij_exempt_constructor_reads = as_bool();
    else if (key == "lazy_wrapper_types") cfg.lazy_wrapper_types = detail::split_list(value);
    else if (key == "owi_include_same_class_calls") cfg.owi_include_same_class_calls = as_bool();
    else throw ConfigError(where + "unknown key '" + key + "'");
  }
  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  return cfg;
}

inline RuleConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

}  // namespace dilint
