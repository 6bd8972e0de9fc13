#pragma once

// Structural model of Java sources: the data every detector consumes.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dilint {

enum class ClassKind { Class, Interface, AbstractClass, Enum, AnnotationDecl };

enum class Visibility { Public, Protected, Package, Private };

inline const char* to_string(ClassKind k) {
  switch (k) {
    case ClassKind::Class: return "CLASS";
    case ClassKind::Interface: return "INTERFACE";
    case ClassKind::AbstractClass: return "ABSTRACT_CLASS";
    case ClassKind::Enum: return "ENUM";
    case ClassKind::AnnotationDecl: return "ANNOTATION_DECL";
  }
  return "?";
}

inline bool externally_visible(Visibility v) {
  return v == Visibility::Public || v == Visibility::Protected;
}

struct AnnotationUse {
  std::string simple_name;
  // Textual key/value pairs. A single unnamed argument is stored under "value";
  // a package qualifier, when written, under "__qualifier".
  std::vector<std::pair<std::string, std::string>> arguments;
  int source_line = 0;

  const std::string* argument(std::string_view key) const {
    for (const auto& [k, v] : arguments)
      if (k == key) return &v;
    return nullptr;
  }

  bool operator==(const AnnotationUse&) const = default;
};

enum class NodeKind {
  // statements
  Block,
  LocalVar,    // text = variable name, type = declared type; children: [initializer]
  LocalClass,  // text = qualified name of the separately modeled class
  If,          // cond, then, [else]
  For,         // init (Block), cond (or Empty), update (Block), body
  ForEach,     // text = variable, type = declared type; children: iterable, body
  While,       // cond, body
  Do,          // body, cond
  Switch,      // selector, then Case/Default nodes (also used for switch expressions)
  Case,        // one per `case` keyword; children: Labels, Block body
  Default,     // children: Block body
  Labels,      // case label expressions
  Try,         // resources (Block), body (Block), Catch..., [Finally]
  Catch,       // text = parameter name, type = caught types joined by '|'; children: body
  Finally,     // children: body
  Return,      // [expr]
  Throw,       // expr
  ExprStmt,    // expr
  Break,
  Continue,
  Yield,       // expr
  Synchronized,  // lock, body
  Assert,      // cond, [message]
  Labeled,     // text = label; children: stmt
  Empty,
  // expressions
  Assign,      // text = operator; children: target, value
  Ternary,     // cond, then, else
  And,         // lhs, rhs  (&&)
  Or,          // lhs, rhs  (||)
  Binary,      // text = operator
  Unary,       // text = operator ("x++"/"x--" for postfix)
  Cast,        // type = target type; children: operand
  InstanceOf,  // type = tested type, text = binding variable (may be empty); children: operand
  Invoke,      // text = method name; children: receiver (Empty when implicit), args...
  New,         // type = created type, text = anonymous class name when a body exists;
               // children: args..., [ClassBody]
  NewArray,    // type = element type; children: dimension exprs and/or ArrayInit
  ArrayInit,   // children: elements
  Name,        // text = identifier
  FieldAccess, // text = member name; children: target
  This,
  Super,
  Literal,     // text = literal token
  ArrayAccess, // array, index
  Lambda,      // params; children: body (Block or expression)
  MethodRef,   // text = member name; children: target (or Empty for Type::new style)
  ClassLit,    // type = class name
  ClassBody,   // anonymous class body; children: MethodDecl nodes
  MethodDecl,  // text = method name; params; children: body
};

struct Param {
  std::string name;
  std::string type_name;
  bool operator==(const Param&) const = default;
};

// A node of a method body. Every node carries its source line.
struct Node {
  NodeKind kind = NodeKind::Empty;
  int line = 0;
  std::string text;
  std::string type;
  std::vector<Param> params;
  std::vector<Node> children;

  Node() = default;
  Node(NodeKind k, int l) : kind(k), line(l) {}
  Node(NodeKind k, int l, std::string t) : kind(k), line(l), text(std::move(t)) {}

  bool operator==(const Node&) const = default;
};

struct FieldModel {
  std::string name;
  std::string declared_type_name;
  std::vector<AnnotationUse> annotations;
  Visibility visibility = Visibility::Package;
  bool is_static = false;
  bool is_final = false;
  int source_line = 0;
  std::optional<Node> initializer;

  bool operator==(const FieldModel&) const = default;
};

struct MethodModel {
  std::string name;
  std::string return_type_name;  // empty for constructors and initializer blocks
  std::vector<Param> parameters;
  std::vector<AnnotationUse> annotations;
  Visibility visibility = Visibility::Package;
  bool is_static = false;
  bool is_abstract = false;
  std::optional<Node> body_statements;  // absent for abstract and interface methods
  std::pair<int, int> source_span{0, 0};  // annotations included
  int name_line = 0;

  bool has_body() const { return body_statements.has_value(); }
  bool operator==(const MethodModel&) const = default;
};

struct ClassModel {
  std::string qualified_name;
  std::string name;  // name within its file: "Outer", "Outer.Inner", "Outer$anon1"
  ClassKind kind = ClassKind::Class;
  std::optional<std::string> superclass_name;
  std::vector<std::string> interface_names;
  std::vector<AnnotationUse> annotations;
  std::vector<FieldModel> fields;
  std::vector<MethodModel> methods;
  std::vector<MethodModel> constructors;
  std::vector<MethodModel> initializers;  // instance and static initializer blocks
  std::pair<int, int> source_span{0, 0};  // annotations included
  int name_line = 0;

  const FieldModel* field(std::string_view field_name) const {
    for (const auto& f : fields)
      if (f.name == field_name) return &f;
    return nullptr;
  }

  bool operator==(const ClassModel&) const = default;
};

struct Diagnostic {
  int line = 0;
  std::string message;
  bool operator==(const Diagnostic&) const = default;
};

struct SourceUnit {
  std::string file_path;
  std::string package_name;
  std::vector<ClassModel> type_decls;
  std::vector<Diagnostic> parse_diagnostics;

  bool operator==(const SourceUnit&) const = default;
};

inline bool has_annotation(const std::vector<AnnotationUse>& annotations,
                           std::string_view simple_name) {
  for (const auto& a : annotations)
    if (a.simple_name == simple_name) return true;
  return false;
}

// "java.util.List<String>[]" -> "java.util.List"
inline std::string erase_type_arguments(std::string_view type_name) {
  std::string out;
  int depth = 0;
  for (char c : type_name) {
    if (c == '<') {
      ++depth;
    } else if (c == '>') {
      if (depth > 0) --depth;
    } else if (depth == 0 && c != '[' && c != ']' && c != ' ') {
      out.push_back(c);
    }
  }
  // varargs
  while (out.size() >= 3 && out.ends_with("...")) out.resize(out.size() - 3);
  return out;
}

// "java.util.List<String>[]" -> "List"
inline std::string simple_type_name(std::string_view type_name) {
  std::string erased = erase_type_arguments(type_name);
  auto dot = erased.rfind('.');
  return dot == std::string::npos ? erased : erased.substr(dot + 1);
}

}  // namespace dilint
