#pragma once

// McCabe cyclomatic complexity over the body model.
//
// Decision points: if, for, for-each, while, do, each `case` (default excluded),
// each catch clause, each ?: and each && / || operator. Lambda bodies count
// toward the enclosing method; anonymous class bodies belong to their own class.

#include <stdexcept>
#include <string>
#include <vector>

#include "dilint/model.hpp"

namespace dilint {

struct ComplexityRecord {
  std::string owner_class;
  std::string method_name;
  int cc = 1;
};

inline bool is_decision_point(NodeKind k) {
  switch (k) {
    case NodeKind::If:
    case NodeKind::For:
    case NodeKind::ForEach:
    case NodeKind::While:
    case NodeKind::Do:
    case NodeKind::Case:
    case NodeKind::Catch:
    case NodeKind::Ternary:
    case NodeKind::And:
    case NodeKind::Or:
      return true;
    default:
      return false;
  }
}

inline int count_decision_points(const Node& n) {
  if (n.kind == NodeKind::ClassBody) return 0;
  int count = is_decision_point(n.kind) ? 1 : 0;
  for (const auto& c : n.children) count += count_decision_points(c);
  return count;
}

inline int cyclomatic_complexity(const Node& body) { return 1 + count_decision_points(body); }

inline int cyclomatic_complexity(const MethodModel& m) {
  if (!m.body_statements)
    throw std::invalid_argument("method '" + m.name + "' has no body");
  return cyclomatic_complexity(*m.body_statements);
}

inline int class_complexity_sum(const ClassModel& cls, bool include_constructors = true) {
  int sum = 0;
  for (const auto& m : cls.methods)
    if (m.has_body()) sum += cyclomatic_complexity(m);
  if (include_constructors)
    for (const auto& c : cls.constructors)
      if (c.has_body()) sum += cyclomatic_complexity(c);
  return sum;
}

inline std::vector<ComplexityRecord> complexity_records(const ClassModel& cls) {
  std::vector<ComplexityRecord> out;
  for (const auto& c : cls.constructors)
    if (c.has_body()) out.push_back({cls.qualified_name, c.name, cyclomatic_complexity(c)});
  for (const auto& m : cls.methods)
    if (m.has_body()) out.push_back({cls.qualified_name, m.name, cyclomatic_complexity(m)});
  return out;
}

}  // namespace dilint
