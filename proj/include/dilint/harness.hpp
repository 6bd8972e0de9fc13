#pragma once

// Source discovery, oracle loading and precision / relative-recall evaluation.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "dilint/errors.hpp"
#include "dilint/rules.hpp"

namespace dilint {

// Glob over '/'-separated paths. `*` and `?` stay within one segment; `**`
// spans any number of segments, zero included ("**/test/**" matches "test/A.java").
inline bool glob_match(std::string_view pattern, std::string_view path) {
  if (pattern.empty()) return path.empty();
  if (pattern.starts_with("**")) {
    std::string_view rest = pattern.substr(2);
    if (rest.empty()) return true;
    if (rest.front() == '/') {
      rest.remove_prefix(1);
      if (glob_match(rest, path)) return true;
      for (std::size_t i = 0; i < path.size(); ++i)
        if (path[i] == '/' && glob_match(rest, path.substr(i + 1))) return true;
      return false;
    }
    for (std::size_t i = 0; i <= path.size(); ++i)
      if (glob_match(rest, path.substr(i))) return true;
    return false;
  }
  const char c = pattern.front();
  if (c == '*') {
    for (std::size_t i = 0; i <= path.size(); ++i) {
      if (glob_match(pattern.substr(1), path.substr(i))) return true;
      if (i < path.size() && path[i] == '/') break;
    }
    return false;
  }
  if (path.empty()) return false;
  if (c == '?') return path.front() != '/' && glob_match(pattern.substr(1), path.substr(1));
  return c == path.front() && glob_match(pattern.substr(1), path.substr(1));
}

inline std::vector<std::string> default_excludes() { return {"**/test/**", "**/generated/**"}; }

// Relative '/'-separated paths of all .java files under root, sorted.
inline std::vector<std::string> collect_sources(const std::filesystem::path& root,
                                                const std::vector<std::string>& exclude_globs =
                                                    default_excludes()) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw IoError("cannot read source root '" + root.string() + "'");
  std::vector<std::string> out;
  fs::recursive_directory_iterator it(root, fs::directory_options::none, ec), end;
  if (ec) throw IoError("cannot read source root '" + root.string() + "': " + ec.message());
  for (; it != end; it.increment(ec)) {
    if (ec) throw IoError("cannot read '" + it->path().string() + "': " + ec.message());
    if (!it->is_regular_file(ec) || it->path().extension() != ".java") continue;
    std::string rel = it->path().lexically_relative(root).generic_string();
    bool excluded = false;
    for (const auto& g : exclude_globs)
      if (glob_match(g, rel)) {
        excluded = true;
        break;
      }
    if (!excluded) out.push_back(std::move(rel));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct OracleEntry {
  std::string file_path;
  std::string class_name;
  std::string element_name;
  RuleId rule_id = RuleId::IIJ;

  auto key() const { return std::tie(file_path, class_name, element_name, rule_id); }
  bool operator==(const OracleEntry&) const = default;
};

namespace detail {

// One RFC 4180 record per line; quoted fields may not span lines here.
inline std::vector<std::string> split_csv_line(std::string_view line, int line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"' && cur.empty() && !was_quoted) {
      quoted = was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
      was_quoted = false;
    } else {
      cur += c;
    }
  }
  if (quoted) throw OracleError("line " + std::to_string(line_no) + ": unterminated quote");
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace detail

inline std::vector<OracleEntry> parse_oracle(std::string_view text) {
  std::vector<OracleEntry> out;
  std::set<std::tuple<std::string, std::string, std::string, RuleId>> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = detail::split_csv_line(line, line_no);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!header_seen) {
      if (fields != std::vector<std::string>{"file", "class", "element", "rule"})
        throw OracleError(where + "expected header 'file,class,element,rule'");
      header_seen = true;
      continue;
    }
    if (fields.size() != 4)
      throw OracleError(where + "expected 4 fields, got " + std::to_string(fields.size()));
    auto rule = parse_rule_id(fields[3]);
    if (!rule) throw OracleError(where + "unknown rule '" + fields[3] + "'");
    OracleEntry e{fields[0], fields[1], fields[2], *rule};
    if (!seen.insert({e.file_path, e.class_name, e.element_name, e.rule_id}).second)
      throw OracleError(where + "duplicate entry");
    out.push_back(std::move(e));
  }
  if (!header_seen) throw OracleError("line 1: expected header 'file,class,element,rule'");
  return out;
}

inline std::vector<OracleEntry> load_oracle(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read oracle file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_oracle(buf.str());
  } catch (const OracleError& e) {
    throw OracleError(path + ": " + e.what());
  }
}

struct RuleEval {
  int true_positives = 0;
  int false_positives = 0;
  int oracle_total = 0;
  int matched = 0;  // oracle entries retrieved

  std::optional<double> precision() const {
    const int reported = true_positives + false_positives;
    if (reported == 0) return std::nullopt;
    return static_cast<double>(true_positives) / reported;
  }
};

struct EvalResult {
  std::map<RuleId, RuleEval> per_rule;  // all twelve keys
  int oracle_total = 0;
  int matched = 0;
  double relative_recall = 1.0;
  std::optional<double> average_precision;  // over rules with >= 1 reported finding
};

// A finding matches an oracle entry with equal (file, class, element, rule);
// lines are ignored and each oracle entry absorbs at most one finding.
// Findings in classes the oracle never mentions are outside precision scope.
inline EvalResult evaluate(const std::vector<Finding>& findings, const std::vector<OracleEntry>& oracle) {
  EvalResult result;
  for (RuleId r : kAllRules) result.per_rule[r];

  using Key = std::tuple<std::string, std::string, std::string, RuleId>;
  std::map<Key, int> open;  // unmatched oracle entries by key
  std::set<std::pair<std::string, std::string>> scope;
  for (const auto& e : oracle) {
    ++open[{e.file_path, e.class_name, e.element_name, e.rule_id}];
    scope.insert({e.file_path, e.class_name});
    ++result.per_rule[e.rule_id].oracle_total;
  }
  result.oracle_total = static_cast<int>(oracle.size());

  for (const auto& f : findings) {
    RuleEval& re = result.per_rule[f.rule_id];
    auto it = open.find({f.file_path, f.class_name, f.element_name, f.rule_id});
    if (it != open.end() && it->second > 0) {
      --it->second;
      ++re.true_positives;
      ++re.matched;
      ++result.matched;
    } else if (scope.count({f.file_path, f.class_name})) {
      ++re.false_positives;
    }
  }

  result.relative_recall =
      oracle.empty() ? 1.0 : static_cast<double>(result.matched) / result.oracle_total;
  double sum = 0;
  int rules = 0;
  for (const auto& [r, re] : result.per_rule)
    if (auto p = re.precision()) {
      sum += *p;
      ++rules;
    }
  if (rules > 0) result.average_precision = sum / rules;
  return result;
}

inline nlohmann::ordered_json to_json(const EvalResult& r) {
  auto opt = [](std::optional<double> v) -> nlohmann::ordered_json {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  nlohmann::ordered_json doc;
  doc["oracle_total"] = r.oracle_total;
  doc["matched"] = r.matched;
  doc["relative_recall"] = r.relative_recall;
  doc["average_precision"] = opt(r.average_precision);
  nlohmann::ordered_json rules = nlohmann::ordered_json::object();
  for (RuleId id : kAllRules) {
    const RuleEval& re = r.per_rule.at(id);
    nlohmann::ordered_json item;
    item["true_positives"] = re.true_positives;
    item["false_positives"] = re.false_positives;
    item["oracle_total"] = re.oracle_total;
    item["matched"] = re.matched;
    item["precision"] = opt(re.precision());
    rules[std::string(to_string(id))] = std::move(item);
  }
  doc["per_rule"] = std::move(rules);
  return doc;
}

}  // namespace dilint
