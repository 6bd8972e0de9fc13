#pragma once

// Facts shared by all detectors: injection points, producer methods,
// container calls and per-attribute reference patterns.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dilint/model.hpp"
#include "dilint/tree_walk.hpp"

namespace dilint {

enum class InjectionForm { Field, Constructor, Setter };

enum class InjectionAnnotation { Jsr330Inject, SpringAutowired, GuiceInjectAlias, Jsr250Resource };

inline const char* to_string(InjectionForm f) {
  switch (f) {
    case InjectionForm::Field: return "FIELD";
    case InjectionForm::Constructor: return "CONSTRUCTOR";
    case InjectionForm::Setter: return "SETTER";
  }
  return "?";
}

struct InjectionPoint {
  const ClassModel* owner = nullptr;
  std::string attribute_name;
  std::string declared_type_name;
  InjectionForm form = InjectionForm::Field;
  InjectionAnnotation annotation = InjectionAnnotation::Jsr330Inject;
  std::string annotation_name;            // simple name as written
  int source_line = 0;
  const MethodModel* member = nullptr;    // annotated constructor or setter
  std::string parameter_name;             // constructor/setter parameter
};

struct ProducerMethod {
  const ClassModel* owner = nullptr;
  const MethodModel* method = nullptr;
  std::string annotation_name;  // Produces, Bean or Provides
};

struct Site {
  std::string method;
  int line = 0;
  bool operator==(const Site&) const = default;
};

struct ReferenceSet {
  std::string attribute_name;
  std::set<std::string> reading_methods;
  std::vector<Site> passed_as_argument_sites;
  std::vector<Site> returned_by_getter_sites;
  bool externally_visible = false;
  std::vector<Site> setter_assignment_sites;
  std::vector<std::string> aliased_targets;

  // Every body (constructors, methods, initializers) that reads the attribute,
  // trivial getters included.
  std::set<const MethodModel*> using_members;
  bool read_in_constructor = false;

  bool entirely_empty() const {
    return reading_methods.empty() && passed_as_argument_sites.empty() &&
           returned_by_getter_sites.empty() && setter_assignment_sites.empty() &&
           aliased_targets.empty() && using_members.empty();
  }
};

enum class ContainerCallKind { SpringGetBean, GuiceGetInstance };

struct ContainerCall {
  const ClassModel* owner = nullptr;
  std::string method;
  std::string receiver_type_name;
  ContainerCallKind call_kind = ContainerCallKind::SpringGetBean;
  int source_line = 0;
};

namespace detail {

inline std::optional<InjectionAnnotation> classify_injection_annotation(const AnnotationUse& a,
                                                                        bool recognize_resource) {
  if (a.simple_name == "Inject") {
    const std::string* q = a.argument("__qualifier");
    if (q && q->find("google") != std::string::npos) return InjectionAnnotation::GuiceInjectAlias;
    return InjectionAnnotation::Jsr330Inject;
  }
  if (a.simple_name == "Autowired") return InjectionAnnotation::SpringAutowired;
  if (recognize_resource && a.simple_name == "Resource") return InjectionAnnotation::Jsr250Resource;
  return std::nullopt;
}

inline const AnnotationUse* injection_annotation(const std::vector<AnnotationUse>& annotations,
                                                 bool recognize_resource) {
  for (const auto& a : annotations)
    if (classify_injection_annotation(a, recognize_resource)) return &a;
  return nullptr;
}

// Fields assigned directly from parameter `param` inside `m`, in source order.
inline std::vector<std::string> fields_assigned_from_parameter(const MethodModel& m,
                                                               std::string_view param) {
  std::vector<std::string> targets;
  if (!m.body_statements) return targets;
  walk_body(*m.body_statements, m.parameters, [&](const Node& n, const WalkState& st) {
    if (n.kind != NodeKind::Assign || n.text != "=" || n.children.size() != 2) return;
    const Node& value = strip_casts(n.children[1]);
    if (value.kind != NodeKind::Name || value.text != param) return;
    const LocalName* local = st.scopes.lookup(param);
    if (!local || !local->is_parameter) return;
    std::string field = assigned_field(n.children[0], st);
    if (!field.empty() && std::find(targets.begin(), targets.end(), field) == targets.end())
      targets.push_back(std::move(field));
  });
  return targets;
}

}  // namespace detail

inline std::vector<InjectionPoint> find_injection_points(const ClassModel& cls,
                                                         bool recognize_resource = false) {
  std::vector<InjectionPoint> points;
  for (const auto& f : cls.fields) {
    const AnnotationUse* a = detail::injection_annotation(f.annotations, recognize_resource);
    if (!a) continue;
    InjectionPoint ip;
    ip.owner = &cls;
    ip.attribute_name = f.name;
    ip.declared_type_name = f.declared_type_name;
    ip.form = InjectionForm::Field;
    ip.annotation = *detail::classify_injection_annotation(*a, recognize_resource);
    ip.annotation_name = a->simple_name;
    ip.source_line = f.source_line;
    points.push_back(std::move(ip));
  }
  for (const auto& ctor : cls.constructors) {
    const AnnotationUse* a = detail::injection_annotation(ctor.annotations, recognize_resource);
    if (!a) continue;
    for (const auto& p : ctor.parameters) {
      for (const auto& target : detail::fields_assigned_from_parameter(ctor, p.name)) {
        InjectionPoint ip;
        ip.owner = &cls;
        ip.attribute_name = target;
        ip.declared_type_name = p.type_name;
        ip.form = InjectionForm::Constructor;
        ip.annotation = *detail::classify_injection_annotation(*a, recognize_resource);
        ip.annotation_name = a->simple_name;
        ip.source_line = ctor.name_line;
        ip.member = &ctor;
        ip.parameter_name = p.name;
        points.push_back(std::move(ip));
      }
    }
  }
  for (const auto& m : cls.methods) {
    if (m.parameters.size() != 1 || !m.has_body()) continue;
    const AnnotationUse* a = detail::injection_annotation(m.annotations, recognize_resource);
    if (!a) continue;
    const Param& p = m.parameters.front();
    auto targets = detail::fields_assigned_from_parameter(m, p.name);
    if (targets.empty()) continue;
    // the attribute is the declared field the setter feeds, preferring the
    // parameter's namesake; other targets are aliases (see MAI)
    std::string attribute;
    if (cls.field(p.name) && std::find(targets.begin(), targets.end(), p.name) != targets.end()) {
      attribute = p.name;
    } else {
      for (const auto& t : targets)
        if (cls.field(t)) {
          attribute = t;
          break;
        }
      if (attribute.empty()) attribute = targets.front();
    }
    InjectionPoint ip;
    ip.owner = &cls;
    ip.attribute_name = attribute;
    ip.declared_type_name = p.type_name;
    ip.form = InjectionForm::Setter;
    ip.annotation = *detail::classify_injection_annotation(*a, recognize_resource);
    ip.annotation_name = a->simple_name;
    ip.source_line = m.name_line;
    ip.member = &m;
    ip.parameter_name = p.name;
    points.push_back(std::move(ip));
  }
  return points;
}

inline std::vector<ProducerMethod> find_producer_methods(const ClassModel& cls) {
  std::vector<ProducerMethod> out;
  for (const auto& m : cls.methods) {
    if (m.return_type_name.empty() || m.return_type_name == "void") continue;
    for (const char* name : {"Produces", "Bean", "Provides"}) {
      if (has_annotation(m.annotations, name)) {
        out.push_back({&cls, &m, name});
        break;
      }
    }
  }
  return out;
}

// Declared type of a call receiver as far as the class model tells, else "".
inline std::string receiver_type_name(const Node& receiver, const ClassModel& cls,
                                      const WalkState& st) {
  const Node& r = strip_casts(receiver);
  if (receiver.kind == NodeKind::Cast) return simple_type_name(receiver.type);
  switch (r.kind) {
    case NodeKind::Name: {
      if (const LocalName* local = st.scopes.lookup(r.text))
        return simple_type_name(local->type_name);
      if (const FieldModel* f = cls.field(r.text)) return simple_type_name(f->declared_type_name);
      // a capitalized unresolved name is a static reference to a type
      if (!r.text.empty() && std::isupper(static_cast<unsigned char>(r.text[0]))) return r.text;
      return {};
    }
    case NodeKind::FieldAccess:
      if (!r.children.empty() && r.children.front().kind == NodeKind::This) {
        if (const FieldModel* f = cls.field(r.text)) return simple_type_name(f->declared_type_name);
      }
      return {};
    case NodeKind::Invoke:
      if (!r.children.empty() && (r.children.front().kind == NodeKind::Empty ||
                                  r.children.front().kind == NodeKind::This)) {
        for (const auto& m : cls.methods)
          if (m.name == r.text && m.parameters.size() + 1 == r.children.size())
            return simple_type_name(m.return_type_name);
      }
      return {};
    case NodeKind::New:
      return simple_type_name(r.type);
    default:
      return {};
  }
}

inline std::vector<ContainerCall> find_container_calls(
    const ClassModel& cls,
    const std::vector<std::string>& container_types = {"ApplicationContext"}) {
  std::vector<ContainerCall> calls;
  std::set<int> seen_lines;
  auto scan = [&](const Node& body, const std::vector<Param>& params, const std::string& where) {
    walk_body(body, params, [&](const Node& n, const WalkState& st) {
      if (n.kind != NodeKind::Invoke || n.children.empty()) return;
      const Node& receiver = n.children.front();
      if (receiver.kind == NodeKind::Empty) return;
      std::optional<ContainerCallKind> kind;
      std::string type;
      if (n.text == "getBean") {
        type = receiver_type_name(receiver, cls, st);
        if (std::find(container_types.begin(), container_types.end(), type) != container_types.end())
          kind = ContainerCallKind::SpringGetBean;
      } else if (n.text == "getInstance") {
        type = receiver_type_name(receiver, cls, st);
        if (type == "Injector") kind = ContainerCallKind::GuiceGetInstance;
      }
      if (!kind || !seen_lines.insert(n.line).second) return;
      calls.push_back({&cls, where, type, *kind, n.line});
    });
  };
  for (const auto& body : bodies_of(cls))
    scan(*body.method->body_statements, body.method->parameters, body.method->name);
  for (const auto& f : cls.fields)
    if (f.initializer) scan(*f.initializer, {}, f.name);
  std::sort(calls.begin(), calls.end(),
            [](const ContainerCall& a, const ContainerCall& b) { return a.source_line < b.source_line; });
  return calls;
}

namespace detail {

inline bool is_trivial_accessor_body(const Node& body) {
  if (body.kind != NodeKind::Block || body.children.size() != 1) return false;
  const Node& s = body.children.front();
  if (s.kind == NodeKind::Return) return true;
  return s.kind == NodeKind::ExprStmt && !s.children.empty() &&
         s.children.front().kind == NodeKind::Assign;
}

}  // namespace detail

// Where `attribute_name` is read, passed, returned, reassigned and aliased in
// `cls`. Locals and parameters shadow the field within their scope.
inline ReferenceSet analyze_references(const ClassModel& cls, const std::string& attribute_name,
                                       bool include_same_class_calls = false) {
  ReferenceSet refs;
  refs.attribute_name = attribute_name;
  if (const FieldModel* f = cls.field(attribute_name))
    refs.externally_visible = externally_visible(f->visibility);

  std::set<std::string> aliases;
  for (const auto& body_ref : bodies_of(cls)) {
    const MethodModel& m = *body_ref.method;
    const bool trivial = detail::is_trivial_accessor_body(*m.body_statements);
    const bool getter_visible = !body_ref.is_constructor && !body_ref.is_initializer &&
                                m.visibility != Visibility::Private;
    const bool setter_visible = !body_ref.is_constructor && !body_ref.is_initializer &&
                                externally_visible(m.visibility);
    // parameter -> fields assigned from it in this body
    std::map<std::string, std::set<std::string>> assigned_from_param;

    walk_body(*m.body_statements, m.parameters, [&](const Node& n, const WalkState& st) {
      if (n.kind == NodeKind::Assign && n.text == "=" && n.children.size() == 2) {
        const Node& value = strip_casts(n.children[1]);
        std::string target = assigned_field(n.children[0], st);
        if (!target.empty() && value.kind == NodeKind::Name) {
          const LocalName* local = st.scopes.lookup(value.text);
          if (local && local->is_parameter) {
            assigned_from_param[value.text].insert(target);
            if (target == attribute_name && setter_visible && st.anonymous_depth == 0)
              refs.setter_assignment_sites.push_back({m.name, n.line});
          }
        }
        return;
      }
      if (!refers_to_field(n, attribute_name, st)) return;

      const Node* parent = st.parent();
      const Node* child = &n;
      // plain assignment target: a write, not a read
      if (parent && parent->kind == NodeKind::Assign && parent->text == "=" &&
          &parent->children[0] == child)
        return;
      // look through casts
      std::size_t depth = st.ancestors.size();
      while (parent && parent->kind == NodeKind::Cast && depth > 1) {
        child = parent;
        --depth;
        parent = st.ancestors[depth - 1];
      }

      bool getter_site = false;
      if (parent) {
        if (parent->kind == NodeKind::Invoke && child != &parent->children.front()) {
          const Node& receiver = parent->children.front();
          const bool same_instance = receiver.kind == NodeKind::Empty ||
                                     receiver.kind == NodeKind::This ||
                                     receiver.kind == NodeKind::Super;
          if (!same_instance || include_same_class_calls)
            refs.passed_as_argument_sites.push_back({m.name, n.line});
        } else if (parent->kind == NodeKind::New) {
          // constructor arguments; a ClassBody child is never the attribute itself
          refs.passed_as_argument_sites.push_back({m.name, n.line});
        }
        if (parent->kind == NodeKind::Return && getter_visible && st.anonymous_depth == 0) {
          refs.returned_by_getter_sites.push_back({m.name, n.line});
          getter_site = true;
        }
        if (parent->kind == NodeKind::Assign && parent->text == "=" &&
            child == &parent->children[1]) {
          std::string target = assigned_field(parent->children[0], st);
          if (!target.empty() && target != attribute_name) aliases.insert(target);
        }
      }
      refs.using_members.insert(&m);
      if (body_ref.is_constructor) refs.read_in_constructor = true;
      if (!(trivial && getter_site)) refs.reading_methods.insert(m.name);
    });

    for (const auto& [param, targets] : assigned_from_param) {
      if (!targets.count(attribute_name)) continue;
      for (const auto& t : targets)
        if (t != attribute_name) aliases.insert(t);
    }
  }
  refs.aliased_targets.assign(aliases.begin(), aliases.end());
  return refs;
}

}  // namespace dilint
