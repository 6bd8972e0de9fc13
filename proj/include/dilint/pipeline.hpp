#pragma once

// End-to-end analysis of a source tree: read, parse, index, detect.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dilint/config.hpp"
#include "dilint/detectors.hpp"
#include "dilint/errors.hpp"
#include "dilint/harness.hpp"
#include "dilint/parser.hpp"
#include "dilint/report.hpp"
#include "dilint/type_index.hpp"

namespace dilint {

struct AnalysisResult {
  std::vector<SourceUnit> units;  // sorted by file_path
  std::vector<Finding> findings;  // report order
  CorpusStats stats;
  std::vector<std::string> diagnostics;  // "file:line: message"
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<SourceUnit> parse_files(const std::filesystem::path& root,
                                           const std::vector<std::string>& relative_paths,
                                           unsigned threads = 1) {
  std::vector<std::string> texts;
  texts.reserve(relative_paths.size());
  for (const auto& rel : relative_paths) texts.push_back(read_file(root / rel));

  std::vector<SourceUnit> units(relative_paths.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(units.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < units.size(); ++i) units[i] = parse_unit(texts[i], relative_paths[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < units.size(); i = next++)
          units[i] = parse_unit(texts[i], relative_paths[i]);
      });
    for (auto& th : pool) th.join();
  }
  std::sort(units.begin(), units.end(),
            [](const SourceUnit& a, const SourceUnit& b) { return a.file_path < b.file_path; });
  return units;
}

inline AnalysisResult analyze_units(std::vector<SourceUnit> units, const RuleConfig& cfg) {
  AnalysisResult result;
  std::sort(units.begin(), units.end(),
            [](const SourceUnit& a, const SourceUnit& b) { return a.file_path < b.file_path; });
  result.units = std::move(units);
  const TypeIndex index = index_corpus(result.units);
  result.findings = run_all(result.units, index, cfg);
  result.stats.total_files = static_cast<int>(result.units.size());
  for (const auto& u : result.units) {
    result.stats.total_classes += static_cast<int>(u.type_decls.size());
    for (const auto& d : u.parse_diagnostics)
      result.diagnostics.push_back(u.file_path + ":" + std::to_string(d.line) + ": " + d.message);
  }
  for (const auto& d : index.diagnostics()) result.diagnostics.push_back(d);
  return result;
}

inline AnalysisResult analyze_files(const std::filesystem::path& root,
                                    const std::vector<std::string>& relative_paths,
                                    const RuleConfig& cfg = {}, unsigned threads = 1) {
  return analyze_units(parse_files(root, relative_paths, threads), cfg);
}

inline AnalysisResult analyze_tree(const std::filesystem::path& root, const RuleConfig& cfg = {},
                                   const std::vector<std::string>& exclude_globs = default_excludes(),
                                   unsigned threads = 1) {
  return analyze_files(root, collect_sources(root, exclude_globs), cfg, threads);
}

}  // namespace dilint
