#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dilint/model.hpp"

namespace dilint {

enum class TypeKind { Interface, Abstract, Concrete, Unknown };

inline const char* to_string(TypeKind k) {
  switch (k) {
    case TypeKind::Interface: return "INTERFACE";
    case TypeKind::Abstract: return "ABSTRACT";
    case TypeKind::Concrete: return "CONCRETE";
    case TypeKind::Unknown: return "UNKNOWN";
  }
  return "?";
}

// Lookup tables over every declared type of a corpus. Holds pointers into the
// SourceUnits it was built from; those must outlive the index.
class TypeIndex {
 public:
  void add(const ClassModel& cls, const std::string& file_path) {
    auto [it, inserted] = by_qualified_.emplace(cls.qualified_name, &cls);
    if (!inserted) {
      diagnostics_.push_back(file_path + ": duplicate type " + cls.qualified_name +
                             " (first declaration kept)");
      return;
    }
    // anonymous classes cannot be named by user code
    if (cls.name.find('$') != std::string::npos) return;
    auto& bucket = by_simple_[simple_type_name(cls.qualified_name)];
    bucket.push_back(&cls);
    if (bucket.size() > 1) ambiguous_.insert(simple_type_name(cls.qualified_name));
  }

  const ClassModel* find_qualified(std::string_view qualified_name) const {
    auto it = by_qualified_.find(std::string(qualified_name));
    return it == by_qualified_.end() ? nullptr : it->second;
  }

  // Simple-name lookup; nullptr when absent or ambiguous.
  const ClassModel* find_simple(std::string_view simple_name) const {
    auto it = by_simple_.find(std::string(simple_name));
    if (it == by_simple_.end() || it->second.size() != 1) return nullptr;
    return it->second.front();
  }

  // Resolves a name as written in source: qualified, partially qualified
  // ("Outer.Inner") or simple. Generic arguments and array brackets are ignored.
  const ClassModel* resolve(std::string_view type_name) const {
    const std::string erased = erase_type_arguments(type_name);
    if (erased.empty()) return nullptr;
    if (const ClassModel* hit = find_qualified(erased)) return hit;
    const std::string simple = simple_type_name(erased);
    if (simple == erased) return find_simple(simple);
    auto it = by_simple_.find(simple);
    if (it == by_simple_.end()) return nullptr;
    const ClassModel* match = nullptr;
    for (const ClassModel* cls : it->second) {
      const std::string& q = cls->qualified_name;
      if (q.size() > erased.size() && q.ends_with(erased) && q[q.size() - erased.size() - 1] == '.') {
        if (match) return nullptr;
        match = cls;
      }
    }
    return match;
  }

  bool is_ambiguous(std::string_view simple_name) const {
    return ambiguous_.count(std::string(simple_name)) > 0;
  }

  const std::set<std::string>& ambiguous_names() const { return ambiguous_; }
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }
  std::size_t size() const { return by_qualified_.size(); }
  bool empty() const { return by_qualified_.empty(); }

 private:
  std::map<std::string, const ClassModel*> by_qualified_;
  std::map<std::string, std::vector<const ClassModel*>> by_simple_;
  std::set<std::string> ambiguous_;
  std::vector<std::string> diagnostics_;
};

inline TypeIndex index_corpus(const std::vector<SourceUnit>& units) {
  TypeIndex index;
  for (const auto& unit : units)
    for (const auto& cls : unit.type_decls) index.add(cls, unit.file_path);
  return index;
}

inline TypeKind resolve_type_kind(std::string_view type_name, const TypeIndex& index) {
  const ClassModel* cls = index.resolve(type_name);
  if (!cls) return TypeKind::Unknown;
  switch (cls->kind) {
    case ClassKind::Interface:
    case ClassKind::AnnotationDecl: return TypeKind::Interface;
    case ClassKind::AbstractClass: return TypeKind::Abstract;
    case ClassKind::Class:
    case ClassKind::Enum: return TypeKind::Concrete;
  }
  return TypeKind::Unknown;
}

}  // namespace dilint
