#pragma once

// Scope-aware traversal of method bodies. Visitors see every node in source
// order together with its ancestors and the local names in scope, so field
// references can be told apart from shadowing locals and parameters.

#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "dilint/model.hpp"

namespace dilint {

struct LocalName {
  std::string name;
  std::string type_name;
  bool is_parameter = false;
};

class LocalScopes {
 public:
  void push() { frames_.emplace_back(); }
  void pop() { frames_.pop_back(); }

  void declare(std::string name, std::string type_name, bool is_parameter = false) {
    if (frames_.empty()) push();
    frames_.back().push_back({std::move(name), std::move(type_name), is_parameter});
  }

  // Innermost declaration of `name`, or nullptr when it is not a local.
  const LocalName* lookup(std::string_view name) const {
    for (auto f = frames_.rbegin(); f != frames_.rend(); ++f)
      for (auto l = f->rbegin(); l != f->rend(); ++l)
        if (l->name == name) return &*l;
    return nullptr;
  }

  bool is_local(std::string_view name) const { return lookup(name) != nullptr; }

 private:
  std::vector<std::vector<LocalName>> frames_;
};

struct WalkState {
  std::vector<const Node*> ancestors;  // outermost first; excludes the visited node
  LocalScopes scopes;
  int anonymous_depth = 0;  // > 0 while inside an anonymous class body

  const Node* parent() const { return ancestors.empty() ? nullptr : ancestors.back(); }
};

namespace detail {

template <typename Visitor>
class BodyWalker {
 public:
  explicit BodyWalker(Visitor& visit) : visit_(visit) {}

  void run(const Node& body, const std::vector<Param>& params) {
    state_.scopes.push();
    for (const auto& p : params) state_.scopes.declare(p.name, p.type_name, true);
    walk(body);
    state_.scopes.pop();
  }

 private:
  void walk_children(const Node& n, std::size_t from = 0) {
    state_.ancestors.push_back(&n);
    for (std::size_t i = from; i < n.children.size(); ++i) walk(n.children[i]);
    state_.ancestors.pop_back();
  }

  void walk_child(const Node& parent, const Node& child) {
    state_.ancestors.push_back(&parent);
    walk(child);
    state_.ancestors.pop_back();
  }

  void walk(const Node& n) {
    visit_(n, static_cast<const WalkState&>(state_));
    switch (n.kind) {
      case NodeKind::Block:
      case NodeKind::Switch:
        state_.scopes.push();
        walk_children(n);
        state_.scopes.pop();
        break;
      case NodeKind::LocalVar:
        walk_children(n);
        state_.scopes.declare(n.text, n.type);
        break;
      case NodeKind::For: {
        state_.scopes.push();
        state_.ancestors.push_back(&n);
        // the init block shares the loop scope
        if (!n.children.empty()) {
          const Node& init = n.children[0];
          state_.ancestors.push_back(&init);
          for (const auto& c : init.children) walk(c);
          state_.ancestors.pop_back();
        }
        for (std::size_t i = 1; i < n.children.size(); ++i) walk(n.children[i]);
        state_.ancestors.pop_back();
        state_.scopes.pop();
        break;
      }
      case NodeKind::ForEach:
        if (!n.children.empty()) walk_child(n, n.children[0]);
        state_.scopes.push();
        state_.scopes.declare(n.text, n.type);
        if (n.children.size() > 1) walk_children(n, 1);
        state_.scopes.pop();
        break;
      case NodeKind::Try: {
        state_.scopes.push();
        state_.ancestors.push_back(&n);
        if (!n.children.empty()) {
          const Node& resources = n.children[0];
          state_.ancestors.push_back(&resources);
          for (const auto& c : resources.children) walk(c);
          state_.ancestors.pop_back();
        }
        if (n.children.size() > 1) walk(n.children[1]);
        state_.ancestors.pop_back();
        state_.scopes.pop();
        walk_children(n, 2);
        break;
      }
      case NodeKind::Catch:
        state_.scopes.push();
        state_.scopes.declare(n.text, n.type);
        walk_children(n);
        state_.scopes.pop();
        break;
      case NodeKind::Lambda:
      case NodeKind::MethodDecl:
        state_.scopes.push();
        for (const auto& p : n.params) state_.scopes.declare(p.name, p.type_name, true);
        walk_children(n);
        state_.scopes.pop();
        break;
      case NodeKind::InstanceOf:
        walk_children(n);
        if (!n.text.empty()) state_.scopes.declare(n.text, n.type);
        break;
      case NodeKind::ClassBody:
        ++state_.anonymous_depth;
        walk_children(n);
        --state_.anonymous_depth;
        break;
      default:
        walk_children(n);
        break;
    }
  }

  Visitor& visit_;
  WalkState state_;
};

}  // namespace detail

// Calls visit(node, state) for every node of `body` in pre-order.
template <typename Visitor>
void walk_body(const Node& body, const std::vector<Param>& params, Visitor&& visit) {
  detail::BodyWalker<std::remove_reference_t<Visitor>> walker(visit);
  walker.run(body, params);
}

// Strips casts: `(T) x` -> x
inline const Node& strip_casts(const Node& n) {
  const Node* cur = &n;
  while (cur->kind == NodeKind::Cast && !cur->children.empty()) cur = &cur->children.front();
  return *cur;
}

// True when `n` denotes the field `field` of the class whose body is walked:
// an unshadowed simple name, or `this.field` outside anonymous classes.
inline bool refers_to_field(const Node& n, std::string_view field, const WalkState& state) {
  if (n.text != field) return false;
  if (n.kind == NodeKind::Name) return !state.scopes.is_local(field);
  if (n.kind == NodeKind::FieldAccess && !n.children.empty())
    return n.children.front().kind == NodeKind::This && state.anonymous_depth == 0;
  return false;
}

// Name of the field an assignment target denotes, or empty. Names not declared
// locally are taken as fields (possibly inherited).
inline std::string assigned_field(const Node& target, const WalkState& state) {
  if (target.kind == NodeKind::Name && !state.scopes.is_local(target.text)) return target.text;
  if (target.kind == NodeKind::FieldAccess && !target.children.empty() &&
      target.children.front().kind == NodeKind::This && state.anonymous_depth == 0)
    return target.text;
  return {};
}

// All bodies of a class worth scanning, with the name they are reported under.
struct BodyRef {
  const MethodModel* method;
  bool is_constructor;
  bool is_initializer;
};

inline std::vector<BodyRef> bodies_of(const ClassModel& cls) {
  std::vector<BodyRef> out;
  for (const auto& c : cls.constructors)
    if (c.has_body()) out.push_back({&c, true, false});
  for (const auto& m : cls.methods)
    if (m.has_body()) out.push_back({&m, false, false});
  for (const auto& i : cls.initializers)
    if (i.has_body()) out.push_back({&i, false, true});
  return out;
}

}  // namespace dilint
