#pragma once

// Occurrence tables and the TEXT / JSON / CSV report formats.

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dilint/errors.hpp"
#include "dilint/rules.hpp"

namespace dilint {

enum class Format { Text, Json, Csv };

inline Format parse_format(std::string_view s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw UsageError("unknown format '" + std::string(s) + "' (expected text, json or csv)");
}

struct CorpusStats {
  int total_files = 0;
  int total_classes = 0;
};

struct OccurrenceTable {
  std::string project_label;
  std::map<RuleId, int> counts;  // all twelve keys
  int total_files = 0;
  int total_classes = 0;

  int total() const {
    int sum = 0;
    for (const auto& [rule, n] : counts) sum += n;
    return sum;
  }
};

inline OccurrenceTable aggregate(const std::vector<Finding>& findings, std::string project_label,
                                 CorpusStats stats = {}) {
  OccurrenceTable table;
  table.project_label = std::move(project_label);
  for (RuleId r : kAllRules) table.counts[r] = 0;
  for (const auto& f : findings) ++table.counts[f.rule_id];
  table.total_files = stats.total_files;
  table.total_classes = stats.total_classes;
  return table;
}

namespace detail {

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string render_text(const std::vector<Finding>& findings, const OccurrenceTable& table) {
  std::ostringstream out;
  for (const auto& f : findings)
    out << to_string(f.rule_id) << ' ' << f.file_path << ':' << f.source_line << ' ' << f.class_name
        << ' ' << f.element_name << " \xE2\x80\x94 " << f.message << '\n';
  if (!findings.empty()) out << '\n';
  out << "Occurrences";
  if (!table.project_label.empty()) out << " in " << table.project_label;
  out << " (" << table.total_files << " files, " << table.total_classes << " classes)\n";
  for (RuleId r : kAllRules) {
    auto it = table.counts.find(r);
    out << to_string(r) << ' ' << (it == table.counts.end() ? 0 : it->second) << '\n';
  }
  out << "Total " << table.total() << '\n';
  return out.str();
}

inline std::string render_csv(const std::vector<Finding>& findings) {
  std::string out = "rule,file,line,class,element,message\n";
  for (const auto& f : findings) {
    out += std::string(to_string(f.rule_id)) + ',' + csv_field(f.file_path) + ',' +
           std::to_string(f.source_line) + ',' + csv_field(f.class_name) + ',' +
           csv_field(f.element_name) + ',' + csv_field(f.message) + '\n';
  }
  return out;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const std::vector<Finding>& findings, const OccurrenceTable& table) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = "1";
  doc["project"] = table.project_label;
  doc["total_files"] = table.total_files;
  doc["total_classes"] = table.total_classes;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (RuleId r : kAllRules) {
    auto it = table.counts.find(r);
    counts[std::string(to_string(r))] = it == table.counts.end() ? 0 : it->second;
  }
  doc["counts"] = std::move(counts);
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& f : findings) {
    nlohmann::ordered_json item;
    item["rule"] = std::string(to_string(f.rule_id));
    item["file"] = f.file_path;
    item["line"] = f.source_line;
    item["class"] = f.class_name;
    item["element"] = f.element_name;
    item["message"] = f.message;
    list.push_back(std::move(item));
  }
  doc["findings"] = std::move(list);
  return doc;
}

// Inverse of the "findings" array of to_json. Throws Error on malformed input.
inline std::vector<Finding> findings_from_json(const nlohmann::json& doc) {
  std::vector<Finding> out;
  try {
    for (const auto& item : doc.at("findings")) {
      auto rule = parse_rule_id(item.at("rule").get<std::string>());
      if (!rule) throw Error("unknown rule in report");
      out.push_back(Finding{*rule, item.at("file").get<std::string>(),
                            item.at("class").get<std::string>(), item.at("element").get<std::string>(),
                            item.at("line").get<int>(), item.at("message").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
  return out;
}

inline std::string render(const std::vector<Finding>& findings, const OccurrenceTable& table,
                          Format format) {
  switch (format) {
    case Format::Text: return detail::render_text(findings, table);
    case Format::Json: return to_json(findings, table).dump(2) + "\n";
    case Format::Csv: return detail::render_csv(findings);
  }
  throw UsageError("unknown format");
}

}  // namespace dilint
