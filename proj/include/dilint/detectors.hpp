#pragma once

// The twelve rule implementations. Each detector is a pure function of one
// class, its precomputed facts, the corpus type index and the configuration.

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dilint/config.hpp"
#include "dilint/injection.hpp"
#include "dilint/metrics.hpp"
#include "dilint/model.hpp"
#include "dilint/rules.hpp"
#include "dilint/type_index.hpp"

namespace dilint {

struct ClassFacts {
  const ClassModel* cls = nullptr;
  std::string file_path;
  std::vector<InjectionPoint> injection_points;
  std::vector<ProducerMethod> producers;
  std::vector<ContainerCall> container_calls;
  std::map<std::string, ReferenceSet> references;  // by attribute name

  const ReferenceSet& refs(const std::string& attribute) const { return references.at(attribute); }
};

inline ClassFacts compute_facts(const ClassModel& cls, const std::string& file_path,
                                const RuleConfig& cfg = {}) {
  ClassFacts facts;
  facts.cls = &cls;
  facts.file_path = file_path;
  facts.injection_points = find_injection_points(cls, cfg.recognize_resource_annotation);
  facts.producers = find_producer_methods(cls);
  facts.container_calls = find_container_calls(cls, cfg.container_type_names);
  for (const auto& ip : facts.injection_points)
    if (!facts.references.count(ip.attribute_name))
      facts.references.emplace(ip.attribute_name,
                               analyze_references(cls, ip.attribute_name,
                                                  cfg.owi_include_same_class_calls));
  return facts;
}

namespace detail {

inline Finding make_finding(RuleId rule, const ClassFacts& f, std::string element, int line,
                            std::string message) {
  return Finding{rule, f.file_path, f.cls->name, std::move(element), line, std::move(message)};
}

inline std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

inline bool contains_any(const std::string& text, const std::vector<std::string>& needles) {
  const std::string lower = lowercase(text);
  for (const auto& n : needles)
    if (!n.empty() && lower.find(lowercase(n)) != std::string::npos) return true;
  return false;
}

inline std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

}  // namespace detail

inline std::vector<Finding> detect_IIJ(const ClassFacts& f, const TypeIndex&, const RuleConfig& cfg) {
  std::vector<Finding> out;
  std::vector<const MethodModel*> body_methods;
  for (const auto& c : f.cls->constructors)
    if (c.has_body()) body_methods.push_back(&c);
  for (const auto& m : f.cls->methods)
    if (m.has_body()) body_methods.push_back(&m);

  for (const auto& ip : f.injection_points) {
    if (ip.form != InjectionForm::Field) continue;
    const ReferenceSet& refs = f.refs(ip.attribute_name);
    if (refs.using_members.empty()) continue;  // USI territory
    if (cfg.iij_exempt_constructor_reads && refs.read_in_constructor) continue;
    const std::string wrapper = simple_type_name(ip.declared_type_name);
    if (std::find(cfg.lazy_wrapper_types.begin(), cfg.lazy_wrapper_types.end(), wrapper) !=
        cfg.lazy_wrapper_types.end())
      continue;
    std::vector<std::string> missing;
    for (const MethodModel* m : body_methods)
      if (!refs.using_members.count(m)) missing.push_back(m->name);
    if (missing.empty()) continue;
    out.push_back(detail::make_finding(
        RuleId::IIJ, f, ip.attribute_name, ip.source_line,
        "injected '" + ip.attribute_name + "' is not used by " + detail::join(missing)));
  }
  return out;
}

inline std::vector<Finding> detect_CCI(const ClassFacts& f, const TypeIndex& index, const RuleConfig&) {
  std::vector<Finding> out;
  for (const auto& ip : f.injection_points) {
    if (resolve_type_kind(ip.declared_type_name, index) != TypeKind::Concrete) continue;
    out.push_back(detail::make_finding(
        RuleId::CCI, f, ip.attribute_name, ip.source_line,
        "'" + ip.attribute_name + "' is injected as concrete class " + ip.declared_type_name));
  }
  return out;
}

inline std::vector<Finding> detect_CPM(const ClassFacts& f, const TypeIndex&, const RuleConfig& cfg) {
  std::vector<Finding> out;
  for (const auto& p : f.producers) {
    if (!p.method->has_body()) continue;
    const int cc = cyclomatic_complexity(*p.method);
    if (cc <= cfg.cpm_cc_threshold) continue;
    out.push_back(detail::make_finding(
        RuleId::CPM, f, p.method->name, p.method->name_line,
        "@" + p.annotation_name + " method has cyclomatic complexity " + std::to_string(cc) +
            " (> " + std::to_string(cfg.cpm_cc_threshold) + ")"));
  }
  return out;
}

inline std::vector<Finding> detect_FDC(const ClassFacts& f, const TypeIndex&, const RuleConfig& cfg) {
  std::set<std::string> injected;
  for (const auto& ip : f.injection_points) injected.insert(ip.attribute_name);
  const int n = static_cast<int>(injected.size());
  if (n < cfg.fdc_min_injections) return {};
  const int sum = class_complexity_sum(*f.cls, cfg.include_constructors_in_fdc);
  if (sum <= cfg.fdc_cc_threshold) return {};
  return {detail::make_finding(RuleId::FDC, f, f.cls->name, f.cls->name_line,
                               "complexity sum " + std::to_string(sum) + " (> " +
                                   std::to_string(cfg.fdc_cc_threshold) + ") with " +
                                   std::to_string(n) + " injected attributes")};
}

inline std::vector<Finding> detect_USI(const ClassFacts& f, const TypeIndex&, const RuleConfig&) {
  std::vector<Finding> out;
  for (const auto& ip : f.injection_points) {
    if (ip.form != InjectionForm::Field) continue;
    if (!f.refs(ip.attribute_name).entirely_empty()) continue;
    out.push_back(detail::make_finding(RuleId::USI, f, ip.attribute_name, ip.source_line,
                                       "injected '" + ip.attribute_name + "' is never used"));
  }
  return out;
}

namespace detail {

struct SdpHit {
  int line;
  std::string evidence;
};

// Looks for a provider call at the root of an assigned or returned value.
inline std::optional<SdpHit> sdp_match(const Node& value, const ClassModel& cls, const WalkState& st,
                                       const RuleConfig& cfg) {
  const Node* cur = &strip_casts(value);
  if (cur->kind != NodeKind::Invoke) return std::nullopt;
  std::optional<SdpHit> hit;
  while (cur->kind == NodeKind::Invoke && !cur->children.empty()) {
    const Node& receiver = cur->children.front();
    const Node& bare = strip_casts(receiver);
    std::string type;
    if (bare.kind != NodeKind::Empty && bare.kind != NodeKind::This && bare.kind != NodeKind::Super)
      type = receiver_type_name(receiver, cls, st);
    const std::string name = bare.kind == NodeKind::Name ? bare.text : std::string();
    for (const auto& ignored : cfg.sdp_ignored_receivers)
      if (ignored == type || ignored == name) return std::nullopt;
    if (!hit) {
      if (contains_any(cur->text, cfg.sdp_name_substrings))
        hit = SdpHit{cur->line, cur->text + "()"};
      else if (!type.empty() && contains_any(type, cfg.sdp_name_substrings))
        hit = SdpHit{cur->line, type + "." + cur->text + "()"};
      else if (!name.empty() && contains_any(name, cfg.sdp_name_substrings))
        hit = SdpHit{cur->line, name + "." + cur->text + "()"};
    }
    cur = &bare;
  }
  return hit;
}

}  // namespace detail

inline std::vector<Finding> detect_SDP(const ClassFacts& f, const TypeIndex&, const RuleConfig& cfg) {
  std::vector<Finding> out;
  const ClassModel& cls = *f.cls;
  auto scan = [&](const Node& body, const std::vector<Param>& params, const std::string& element) {
    walk_body(body, params, [&](const Node& n, const WalkState& st) {
      const Node* value = nullptr;
      if (n.kind == NodeKind::Assign && n.children.size() == 2) value = &n.children[1];
      else if ((n.kind == NodeKind::LocalVar || n.kind == NodeKind::Return) && !n.children.empty())
        value = &n.children.front();
      if (!value) return;
      if (auto hit = detail::sdp_match(*value, cls, st, cfg))
        out.push_back(detail::make_finding(RuleId::SDP, f, element, hit->line,
                                           "dependency obtained from static provider " + hit->evidence));
    });
  };
  for (const auto& b : bodies_of(cls)) scan(*b.method->body_statements, b.method->parameters, b.method->name);
  for (const auto& field : cls.fields) {
    if (!field.initializer) continue;
    WalkState st;
    if (auto hit = detail::sdp_match(*field.initializer, cls, st, cfg))
      out.push_back(detail::make_finding(RuleId::SDP, f, field.name, hit->line,
                                         "dependency obtained from static provider " + hit->evidence));
  }
  return out;
}

inline std::vector<Finding> detect_DCC(const ClassFacts& f, const TypeIndex&, const RuleConfig&) {
  std::vector<Finding> out;
  for (const auto& c : f.container_calls) {
    const char* call = c.call_kind == ContainerCallKind::SpringGetBean ? "getBean" : "getInstance";
    out.push_back(detail::make_finding(RuleId::DCC, f, c.method, c.source_line,
                                       std::string("direct container call ") + c.receiver_type_name +
                                           "." + call + "()"));
  }
  return out;
}

inline std::vector<Finding> detect_OWI(const ClassFacts& f, const TypeIndex&, const RuleConfig&) {
  std::vector<Finding> out;
  for (const auto& ip : f.injection_points) {
    if (ip.form != InjectionForm::Field) continue;
    const ReferenceSet& refs = f.refs(ip.attribute_name);
    for (const auto& s : refs.passed_as_argument_sites)
      out.push_back(detail::make_finding(RuleId::OWI, f, ip.attribute_name, s.line,
                                         "injected '" + ip.attribute_name + "' passed as argument in " +
                                             s.method));
    for (const auto& s : refs.returned_by_getter_sites)
      out.push_back(detail::make_finding(RuleId::OWI, f, ip.attribute_name, s.line,
                                         "injected '" + ip.attribute_name + "' returned by " + s.method));
  }
  return out;
}

inline std::vector<Finding> detect_FCO(const ClassFacts& f, const TypeIndex&, const RuleConfig& cfg) {
  std::vector<Finding> out;
  const auto& list = cfg.framework_specific_annotations;
  for (const auto& ip : f.injection_points) {
    if (std::find(list.begin(), list.end(), ip.annotation_name) == list.end()) continue;
    out.push_back(detail::make_finding(RuleId::FCO, f, ip.attribute_name, ip.source_line,
                                       "'" + ip.attribute_name + "' injected with framework-specific @" +
                                           ip.annotation_name));
  }
  return out;
}

inline std::vector<Finding> detect_ODI(const ClassFacts& f, const TypeIndex&, const RuleConfig&) {
  std::vector<Finding> out;
  std::set<std::string> injection_setters;  // "attribute/method"
  for (const auto& ip : f.injection_points)
    if (ip.form == InjectionForm::Setter && ip.member)
      injection_setters.insert(ip.attribute_name + "/" + ip.member->name);

  for (const auto& ip : f.injection_points) {
    if (ip.form != InjectionForm::Field) continue;
    const ReferenceSet& refs = f.refs(ip.attribute_name);
    for (const auto& s : refs.setter_assignment_sites) {
      if (injection_setters.count(ip.attribute_name + "/" + s.method)) continue;
      out.push_back(detail::make_finding(RuleId::ODI, f, ip.attribute_name, s.line,
                                         "injected '" + ip.attribute_name + "' can be replaced through " +
                                             s.method));
    }
    if (refs.externally_visible)
      out.push_back(detail::make_finding(RuleId::ODI, f, ip.attribute_name, ip.source_line,
                                         "injected '" + ip.attribute_name + "' is not private"));
  }
  return out;
}

inline std::vector<Finding> detect_MAI(const ClassFacts& f, const TypeIndex&, const RuleConfig&) {
  std::vector<Finding> out;
  std::set<std::string> reported;
  for (const auto& ip : f.injection_points) {
    std::set<std::string> targets{ip.attribute_name};
    const ReferenceSet& refs = f.refs(ip.attribute_name);
    targets.insert(refs.aliased_targets.begin(), refs.aliased_targets.end());
    std::string key = ip.attribute_name;
    if (ip.member) {
      for (auto& t : detail::fields_assigned_from_parameter(*ip.member, ip.parameter_name))
        targets.insert(std::move(t));
      // one value assigned to several fields by one member is one finding
      key = ip.member->name + "#" + std::to_string(ip.member->source_span.first) + "/" +
            ip.parameter_name;
    }
    if (targets.size() < 2 || !reported.insert(key).second) continue;
    out.push_back(detail::make_finding(
        RuleId::MAI, f, ip.attribute_name, ip.source_line,
        "injected instance assigned to " +
            detail::join(std::vector<std::string>(targets.begin(), targets.end()))));
  }
  return out;
}

inline std::vector<Finding> detect_MFI(const ClassFacts& f, const TypeIndex&, const RuleConfig&) {
  std::map<std::string, std::set<InjectionForm>> forms;
  std::map<std::string, int> first_line;
  for (const auto& ip : f.injection_points) {
    forms[ip.attribute_name].insert(ip.form);
    auto [it, fresh] = first_line.emplace(ip.attribute_name, ip.source_line);
    if (!fresh) it->second = std::min(it->second, ip.source_line);
  }
  std::vector<Finding> out;
  for (const auto& [attr, set] : forms) {
    if (set.size() < 2) continue;
    std::vector<std::string> names;
    for (InjectionForm form : set) names.push_back(to_string(form));
    out.push_back(detail::make_finding(RuleId::MFI, f, attr, first_line[attr],
                                       "'" + attr + "' injected by " + detail::join(names, " + ")));
  }
  return out;
}

using Detector = std::vector<Finding> (*)(const ClassFacts&, const TypeIndex&, const RuleConfig&);

inline Detector detector_for(RuleId r) {
  switch (r) {
    case RuleId::IIJ: return detect_IIJ;
    case RuleId::CCI: return detect_CCI;
    case RuleId::CPM: return detect_CPM;
    case RuleId::FDC: return detect_FDC;
    case RuleId::USI: return detect_USI;
    case RuleId::SDP: return detect_SDP;
    case RuleId::DCC: return detect_DCC;
    case RuleId::OWI: return detect_OWI;
    case RuleId::FCO: return detect_FCO;
    case RuleId::ODI: return detect_ODI;
    case RuleId::MAI: return detect_MAI;
    case RuleId::MFI: return detect_MFI;
  }
  return nullptr;
}

// Enabled detectors over one class.
inline std::vector<Finding> analyze_class(const ClassModel& cls, const std::string& file_path,
                                          const TypeIndex& index, const RuleConfig& cfg) {
  const ClassFacts facts = compute_facts(cls, file_path, cfg);
  std::vector<Finding> out;
  for (RuleId r : kAllRules) {
    if (!cfg.enabled(r)) continue;
    auto found = detector_for(r)(facts, index, cfg);
    out.insert(out.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
  }
  return out;
}

// Sorts into report order and drops repeated identities.
inline void normalize_findings(std::vector<Finding>& findings) {
  std::sort(findings.begin(), findings.end(), report_order);
  findings.erase(std::unique(findings.begin(), findings.end(),
                             [](const Finding& a, const Finding& b) { return a.key() == b.key(); }),
                 findings.end());
}

inline std::vector<Finding> run_all(const std::vector<SourceUnit>& corpus, const TypeIndex& index,
                                    const RuleConfig& cfg) {
  std::vector<Finding> out;
  for (const auto& unit : corpus)
    for (const auto& cls : unit.type_decls) {
      auto found = analyze_class(cls, unit.file_path, index, cfg);
      out.insert(out.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
    }
  normalize_findings(out);
  return out;
}

inline std::vector<Finding> run_all(const std::vector<SourceUnit>& corpus, const RuleConfig& cfg = {}) {
  return run_all(corpus, index_corpus(corpus), cfg);
}

}  // namespace dilint
