#pragma once

// Recursive-descent parser for the Java subset the detectors need: type
// declarations, members, annotations, and method bodies down to expressions.
// Generic arguments are kept as opaque text. Errors inside a member skip that
// member; errors in a type header skip to the next type declaration.

#include <algorithm>
#include <array>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dilint/lexer.hpp"
#include "dilint/model.hpp"

namespace dilint {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int l, const std::string& message) : std::runtime_error(message), line(l) {}
};

namespace detail {

inline bool is_primitive_keyword(std::string_view w) {
  static constexpr std::array<std::string_view, 9> kPrims = {
      "boolean", "byte", "char", "short", "int", "long", "float", "double", "void"};
  return std::find(kPrims.begin(), kPrims.end(), w) != kPrims.end();
}

inline bool is_modifier_keyword(std::string_view w) {
  static constexpr std::array<std::string_view, 11> kMods = {
      "public", "protected", "private",   "static",   "abstract", "final",
      "native", "transient", "volatile",  "strictfp", "synchronized"};
  return std::find(kMods.begin(), kMods.end(), w) != kMods.end();
}

inline bool is_assignment_op(std::string_view op) {
  static constexpr std::array<std::string_view, 11> kOps = {
      "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>="};
  return std::find(kOps.begin(), kOps.end(), op) != kOps.end() || op == ">>>=";
}

struct Modifiers {
  std::vector<AnnotationUse> annotations;
  Visibility visibility = Visibility::Package;
  bool is_static = false;
  bool is_abstract = false;
  bool is_final = false;
  bool is_default = false;
  bool any = false;
  int line = 0;
};

class JavaParser {
 public:
  JavaParser(std::vector<Token> tokens, SourceUnit& unit)
      : toks_(std::move(tokens)), unit_(unit) {}

  void parse_compilation_unit() {
    parse_package_and_imports();
    bool recovering = false;
    while (!at_end()) {
      if (at_op(";")) {
        advance();
        continue;
      }
      const std::size_t start = pos_;
      const std::size_t types_before = unit_.type_decls.size();
      try {
        Modifiers mods = parse_modifiers();
        if (!at_type_decl_keyword()) throw error("expected class, interface, enum or record");
        parse_type_decl(mods, /*outer=*/nullptr);
        recovering = false;
      } catch (const ParseError& e) {
        unit_.type_decls.resize(types_before);
        if (!recovering) unit_.parse_diagnostics.push_back({e.line, std::string("skipped declaration: ") + e.what()});
        recovering = true;
        pos_ = start;
        skip_to_next_type_decl();
      }
    }
  }

 private:
  static constexpr int kMaxDepth = 200;

  struct Scope {
    std::string name;            // name within file
    std::string qualified_name;
    int anon_count = 0;
  };

  struct DepthGuard {
    JavaParser& p;
    explicit DepthGuard(JavaParser& parser) : p(parser) {
      if (++p.depth_ > kMaxDepth) {
        --p.depth_;
        throw p.error("nesting too deep");
      }
    }
    ~DepthGuard() { --p.depth_; }
    DepthGuard(const DepthGuard&) = delete;
    DepthGuard& operator=(const DepthGuard&) = delete;
  };

  // ---- token helpers ------------------------------------------------------

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  const Token& tok_at(std::size_t p) const { return toks_[std::min(p, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == TokenKind::End; }
  bool at_op(std::string_view op) const { return peek().is_op(op); }
  bool at_kw(std::string_view kw) const { return peek().is_kw(kw); }
  bool at_ident() const { return peek().kind == TokenKind::Identifier; }
  bool at_ident(std::string_view w) const { return peek().is(TokenKind::Identifier, w); }

  const Token& advance() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }

  ParseError error(const std::string& message) const {
    const Token& t = peek();
    std::string where = t.kind == TokenKind::End ? "end of file" : "'" + t.text + "'";
    return ParseError(t.line, message + " near " + where);
  }

  void expect_op(std::string_view op) {
    if (!at_op(op)) throw error("expected '" + std::string(op) + "'");
    advance();
  }

  std::string expect_ident() {
    if (!at_ident()) throw error("expected identifier");
    return advance().text;
  }

  // True when token p+1 starts right where token p ends (for '>' '>' etc).
  bool adjacent(std::size_t p) const {
    const Token& a = tok_at(p);
    const Token& b = tok_at(p + 1);
    return b.kind == TokenKind::Operator && b.offset == a.offset + a.text.size();
  }

  // ---- package / imports --------------------------------------------------

  void parse_package_and_imports() {
    std::size_t save = pos_;
    try {
      // annotations may precede the package declaration (package-info.java)
      while (at_op("@") && !peek(1).is_kw("interface")) parse_annotation();
      if (at_kw("package")) {
        advance();
        unit_.package_name = parse_qualified_name();
        expect_op(";");
      } else {
        pos_ = save;
      }
    } catch (const ParseError& e) {
      unit_.parse_diagnostics.push_back({e.line, std::string("malformed package declaration: ") + e.what()});
      pos_ = save;
      skip_past_semicolon();
    }
    while (at_kw("import") || at_op(";")) {
      if (at_op(";")) {
        advance();
        continue;
      }
      const int line = peek().line;
      advance();
      bool ok = true;
      while (!at_end() && !at_op(";")) {
        if (!(at_ident() || at_op(".") || at_op("*") || at_kw("static"))) ok = false;
        advance();
      }
      if (!ok) unit_.parse_diagnostics.push_back({line, "malformed import"});
      if (at_op(";")) advance();
    }
  }

  void skip_past_semicolon() {
    while (!at_end() && !at_op(";")) advance();
    if (at_op(";")) advance();
  }

  std::string parse_qualified_name() {
    std::string name = expect_ident();
    while (at_op(".") && peek(1).kind == TokenKind::Identifier) {
      advance();
      name += "." + advance().text;
    }
    return name;
  }

  // ---- recovery -----------------------------------------------------------

  bool at_type_decl_keyword() const {
    if (at_kw("class") || at_kw("interface") || at_kw("enum")) return true;
    if (at_op("@") && peek(1).is_kw("interface")) return true;
    return at_ident("record") && peek(1).kind == TokenKind::Identifier &&
           (peek(2).is_op("(") || peek(2).is_op("<"));
  }

  bool at_possible_type_decl_start() const {
    const Token& t = peek();
    if (t.kind == TokenKind::Keyword)
      return is_modifier_keyword(t.text) || t.text == "class" || t.text == "interface" ||
             t.text == "enum";
    if (t.is_op("@")) return true;
    return at_type_decl_keyword();
  }

  void skip_to_next_type_decl() {
    bool moved = false;
    while (!at_end()) {
      if (moved && at_possible_type_decl_start()) return;
      if (at_op("{")) {
        skip_balanced("{", "}");
      } else {
        advance();
      }
      moved = true;
    }
  }

  void skip_balanced(std::string_view open, std::string_view close) {
    int depth = 0;
    while (!at_end()) {
      if (at_op(open)) ++depth;
      if (at_op(close)) {
        --depth;
        if (depth <= 0) {
          advance();
          return;
        }
      }
      advance();
    }
  }

  // Skips the remainder of a class member: through the next ';' at depth 0 or
  // through a balanced brace block. Stops before a '}' that closes the class.
  void skip_member() {
    int depth = 0;
    bool moved = false;
    while (!at_end()) {
      if (at_op("}")) {
        if (depth == 0) {
          if (!moved) advance();
          return;
        }
        --depth;
        advance();
        if (depth == 0) {
          // a trailing ';' after an initializer block or array initializer
          if (at_op(";")) advance();
          return;
        }
        moved = true;
        continue;
      }
      if (at_op("{")) ++depth;
      if (at_op(";") && depth == 0) {
        advance();
        return;
      }
      advance();
      moved = true;
    }
  }

  // ---- annotations & modifiers -------------------------------------------

  static bool word_like(const Token& t) {
    return t.kind == TokenKind::Identifier || t.kind == TokenKind::Keyword ||
           t.kind == TokenKind::Literal;
  }

  std::string join_tokens(std::size_t from, std::size_t to) const {
    std::string out;
    for (std::size_t p = from; p < to; ++p) {
      const Token& t = tok_at(p);
      if (p > from) {
        const Token& prev = tok_at(p - 1);
        if ((word_like(prev) && word_like(t)) || prev.is_op(",") || prev.is_op("&") ||
            t.is_op("&"))
          out.push_back(' ');
      }
      out += t.text;
    }
    return out;
  }

  // Consumes tokens of an annotation element value up to ',' or ')' at depth 0.
  std::string parse_element_value_text() {
    const std::size_t from = pos_;
    int depth = 0;
    while (!at_end()) {
      if (at_op("(") || at_op("{") || at_op("[")) ++depth;
      if (at_op(")") || at_op("}") || at_op("]")) {
        if (depth == 0) break;
        --depth;
      }
      if (depth == 0 && at_op(",")) break;
      advance();
    }
    return join_tokens(from, pos_);
  }

  AnnotationUse parse_annotation() {
    DepthGuard guard(*this);
    AnnotationUse a;
    a.source_line = peek().line;
    expect_op("@");
    std::string name = parse_qualified_name();
    auto dot = name.rfind('.');
    if (dot != std::string::npos) {
      a.arguments.emplace_back("__qualifier", name.substr(0, dot));
      a.simple_name = name.substr(dot + 1);
    } else {
      a.simple_name = name;
    }
    if (at_op("(")) {
      advance();
      while (!at_op(")")) {
        if (at_end()) throw error("unterminated annotation arguments");
        if (at_ident() && peek(1).is_op("=")) {
          std::string key = advance().text;
          advance();
          a.arguments.emplace_back(key, parse_element_value_text());
        } else {
          a.arguments.emplace_back("value", parse_element_value_text());
        }
        if (at_op(",")) advance();
        else if (!at_op(")")) throw error("malformed annotation argument");
      }
      advance();
    }
    return a;
  }

  Modifiers parse_modifiers() {
    Modifiers m;
    m.line = peek().line;
    while (true) {
      if (at_op("@") && !peek(1).is_kw("interface")) {
        m.annotations.push_back(parse_annotation());
        m.any = true;
        continue;
      }
      const Token& t = peek();
      if (t.kind == TokenKind::Keyword && is_modifier_keyword(t.text)) {
        if (t.text == "synchronized" && peek(1).is_op("(")) break;
        if (t.text == "public") m.visibility = Visibility::Public;
        else if (t.text == "protected") m.visibility = Visibility::Protected;
        else if (t.text == "private") m.visibility = Visibility::Private;
        else if (t.text == "static") m.is_static = true;
        else if (t.text == "abstract") m.is_abstract = true;
        else if (t.text == "final") m.is_final = true;
        advance();
        m.any = true;
        continue;
      }
      if (t.is_kw("default") && !peek(1).is_op(":") && !peek(1).is_op("->")) {
        m.is_default = true;
        m.any = true;
        advance();
        continue;
      }
      if (t.kind == TokenKind::Identifier && t.text == "sealed" &&
          (peek(1).kind == TokenKind::Keyword || peek(1).kind == TokenKind::Identifier) &&
          !peek(1).is_op("=")) {
        if (peek(1).kind == TokenKind::Keyword || peek(1).text == "record") {
          advance();
          continue;
        }
      }
      if (t.kind == TokenKind::Identifier && t.text == "non" && peek(1).is_op("-") &&
          peek(2).is(TokenKind::Identifier, "sealed")) {
        advance();
        advance();
        advance();
        continue;
      }
      break;
    }
    return m;
  }

  // ---- types --------------------------------------------------------------

  // Non-throwing scan of a type starting at p; returns the position after it.
  std::optional<std::size_t> scan_type(std::size_t p) const {
    while (tok_at(p).is_op("@")) {
      auto q = scan_annotation(p);
      if (!q) return std::nullopt;
      p = *q;
    }
    const Token& t = tok_at(p);
    if (t.kind == TokenKind::Keyword && is_primitive_keyword(t.text)) {
      ++p;
    } else if (t.kind == TokenKind::Identifier) {
      ++p;
      if (tok_at(p).is_op("<")) {
        auto q = scan_type_args(p);
        if (!q) return std::nullopt;
        p = *q;
      }
      while (tok_at(p).is_op(".") && tok_at(p + 1).kind == TokenKind::Identifier) {
        p += 2;
        if (tok_at(p).is_op("<")) {
          auto q = scan_type_args(p);
          if (!q) return std::nullopt;
          p = *q;
        }
      }
    } else {
      return std::nullopt;
    }
    while (true) {
      while (tok_at(p).is_op("@")) {
        auto q = scan_annotation(p);
        if (!q) return std::nullopt;
        p = *q;
      }
      if (tok_at(p).is_op("[") && tok_at(p + 1).is_op("]")) {
        p += 2;
        continue;
      }
      break;
    }
    if (tok_at(p).is_op("...")) ++p;
    return p;
  }

  std::optional<std::size_t> scan_annotation(std::size_t p) const {
    if (!tok_at(p).is_op("@") || tok_at(p + 1).kind != TokenKind::Identifier) return std::nullopt;
    p += 2;
    while (tok_at(p).is_op(".") && tok_at(p + 1).kind == TokenKind::Identifier) p += 2;
    if (tok_at(p).is_op("(")) {
      int depth = 0;
      while (tok_at(p).kind != TokenKind::End) {
        if (tok_at(p).is_op("(")) ++depth;
        if (tok_at(p).is_op(")") && --depth == 0) return p + 1;
        ++p;
      }
      return std::nullopt;
    }
    return p;
  }

  std::optional<std::size_t> scan_type_args(std::size_t p) const {
    int depth = 0;
    while (true) {
      const Token& t = tok_at(p);
      if (t.kind == TokenKind::End) return std::nullopt;
      if (t.is_op("<")) {
        ++depth;
      } else if (t.is_op(">")) {
        if (--depth == 0) return p + 1;
      } else if (t.is_op("<<")) {
        depth += 2;
      } else if (!(t.kind == TokenKind::Identifier || t.is_op(",") || t.is_op(".") ||
                   t.is_op("?") || t.is_op("[") || t.is_op("]") || t.is_op("&") ||
                   t.is_op("@") || t.is_kw("extends") || t.is_kw("super") ||
                   (t.kind == TokenKind::Keyword && is_primitive_keyword(t.text)))) {
        return std::nullopt;
      }
      ++p;
    }
  }

  std::string parse_type() {
    auto end = scan_type(pos_);
    if (!end) throw error("expected type");
    const std::size_t from = pos_;
    // drop leading type annotations from the text
    std::size_t text_from = from;
    while (tok_at(text_from).is_op("@")) text_from = *scan_annotation(text_from);
    pos_ = *end;
    return join_tokens(text_from, *end);
  }

  std::vector<std::string> parse_type_list() {
    std::vector<std::string> types{parse_type()};
    while (at_op(",")) {
      advance();
      types.push_back(parse_type());
    }
    return types;
  }

  void skip_type_parameters() {
    if (!at_op("<")) return;
    auto end = scan_type_args(pos_);
    if (!end) throw error("malformed type parameters");
    pos_ = *end;
  }

  // ---- type declarations --------------------------------------------------

  // Parses a class/interface/enum/record/annotation declaration whose modifiers
  // have been consumed. Returns the index of the new ClassModel in the unit.
  std::size_t parse_type_decl(const Modifiers& mods, const Scope* outer) {
    DepthGuard guard(*this);
    ClassModel cls;
    cls.annotations = mods.annotations;
    const int start_line = mods.any ? mods.line : peek().line;
    bool is_record = false;
    if (at_kw("class")) {
      cls.kind = mods.is_abstract ? ClassKind::AbstractClass : ClassKind::Class;
    } else if (at_kw("interface")) {
      cls.kind = ClassKind::Interface;
    } else if (at_kw("enum")) {
      cls.kind = ClassKind::Enum;
    } else if (at_op("@")) {
      advance();
      cls.kind = ClassKind::AnnotationDecl;
    } else if (at_ident("record")) {
      cls.kind = ClassKind::Class;
      is_record = true;
    } else {
      throw error("expected type declaration");
    }
    advance();
    cls.name_line = peek().line;
    const std::string simple = expect_ident();
    name_class(cls, simple, outer);
    skip_type_parameters();

    const std::size_t index = unit_.type_decls.size();
    unit_.type_decls.emplace_back();

    if (is_record) {
      expect_op("(");
      while (!at_op(")")) {
        Modifiers pm = parse_modifiers();
        FieldModel f;
        f.declared_type_name = parse_type();
        f.source_line = peek().line;
        f.name = expect_ident();
        f.annotations = pm.annotations;
        f.visibility = Visibility::Private;
        f.is_final = true;
        cls.fields.push_back(std::move(f));
        if (at_op(",")) advance();
        else if (!at_op(")")) throw error("malformed record header");
      }
      advance();
    }
    if (at_kw("extends")) {
      advance();
      auto supers = parse_type_list();
      if (cls.kind == ClassKind::Interface) {
        cls.interface_names = std::move(supers);
      } else {
        cls.superclass_name = supers.front();
      }
    }
    if (at_kw("implements")) {
      advance();
      for (auto& t : parse_type_list()) cls.interface_names.push_back(std::move(t));
    }
    if (at_ident("permits")) {
      advance();
      parse_type_list();
    }
    parse_class_body(cls, simple);
    cls.source_span = {start_line, tok_at(pos_ == 0 ? 0 : pos_ - 1).line};
    unit_.type_decls[index] = std::move(cls);
    return index;
  }

  void name_class(ClassModel& cls, const std::string& simple, const Scope* outer) {
    if (outer) {
      cls.name = outer->name + "." + simple;
      cls.qualified_name = outer->qualified_name + "." + simple;
    } else {
      cls.name = simple;
      cls.qualified_name = unit_.package_name.empty() ? simple : unit_.package_name + "." + simple;
    }
  }

  struct ScopeGuard {
    JavaParser& p;
    ScopeGuard(JavaParser& parser, const ClassModel& cls) : p(parser) {
      p.scopes_.push_back(Scope{cls.name, cls.qualified_name, 0});
    }
    ~ScopeGuard() { p.scopes_.pop_back(); }
    ScopeGuard(const ScopeGuard&) = delete;
    ScopeGuard& operator=(const ScopeGuard&) = delete;
  };

  void parse_class_body(ClassModel& cls, const std::string& simple_name) {
    ScopeGuard scope_guard(*this, cls);
    expect_op("{");
    if (cls.kind == ClassKind::Enum) parse_enum_constants(cls);
    while (!at_op("}")) {
      if (at_end()) {
        unit_.parse_diagnostics.push_back({peek().line, "unexpected end of file in body of " + cls.name});
        return;
      }
      if (at_op(";")) {
        advance();
        continue;
      }
      const std::size_t start = pos_;
      const std::size_t types_before = unit_.type_decls.size();
      const std::size_t fields_before = cls.fields.size();
      try {
        parse_member(cls, simple_name);
      } catch (const ParseError& e) {
        unit_.type_decls.resize(types_before);
        cls.fields.resize(fields_before);
        unit_.parse_diagnostics.push_back({e.line, std::string("skipped member: ") + e.what()});
        pos_ = start;
        skip_member();
      }
    }
    advance();
  }

  void parse_enum_constants(ClassModel& cls) {
    while (!at_end()) {
      if (at_op(";")) {
        advance();
        return;
      }
      if (at_op("}")) return;
      Modifiers m = parse_modifiers();
      FieldModel f;
      f.source_line = peek().line;
      f.name = expect_ident();
      f.declared_type_name = cls.name;
      f.annotations = m.annotations;
      f.visibility = Visibility::Public;
      f.is_static = true;
      f.is_final = true;
      if (at_op("(")) {
        Node init(NodeKind::New, f.source_line);
        init.type = cls.name;
        parse_arguments(init);
        f.initializer = std::move(init);
      }
      if (at_op("{")) {
        Node body = parse_anonymous_class(cls.name, f.source_line);
        if (!f.initializer) {
          f.initializer = Node(NodeKind::New, f.source_line);
          f.initializer->type = cls.name;
        }
        f.initializer->text = body.text;
        f.initializer->children.push_back(std::move(body));
      }
      add_field(cls, std::move(f));
      if (at_op(",")) {
        advance();
        continue;
      }
      if (at_op(";")) {
        advance();
        return;
      }
      if (at_op("}")) return;
      throw error("malformed enum constant");
    }
  }

  void add_field(ClassModel& cls, FieldModel f) {
    if (cls.field(f.name)) {
      unit_.parse_diagnostics.push_back({f.source_line, "duplicate field '" + f.name + "' in " + cls.name});
      return;
    }
    cls.fields.push_back(std::move(f));
  }

  void parse_member(ClassModel& cls, const std::string& simple_name) {
    DepthGuard guard(*this);
    const int start_line = peek().line;
    if (at_op("{") || (at_kw("static") && peek(1).is_op("{"))) {
      MethodModel init;
      init.is_static = at_kw("static");
      if (init.is_static) advance();
      init.name = init.is_static ? "<clinit>" : "<init>";
      init.visibility = Visibility::Private;
      init.body_statements = parse_block();
      init.source_span = {start_line, last_line()};
      init.name_line = start_line;
      cls.initializers.push_back(std::move(init));
      return;
    }
    Modifiers mods = parse_modifiers();
    if (at_type_decl_keyword()) {
      parse_type_decl(mods, &scopes_.back());
      return;
    }
    skip_type_parameters();
    const int decl_line = mods.any ? mods.line : peek().line;

    // constructor (also a record's compact constructor)
    if (at_ident() && (peek(1).is_op("(") || (peek(1).is_op("{") && peek().text == simple_name))) {
      MethodModel ctor;
      ctor.name_line = peek().line;
      ctor.name = advance().text;
      ctor.annotations = mods.annotations;
      ctor.visibility = mods.visibility;
      if (at_op("(")) ctor.parameters = parse_formal_parameters();
      skip_throws();
      ctor.body_statements = parse_block();
      ctor.source_span = {decl_line, last_line()};
      if (cls.kind == ClassKind::Interface || cls.kind == ClassKind::AnnotationDecl) {
        unit_.parse_diagnostics.push_back({decl_line, "constructor in interface " + cls.name + " ignored"});
        return;
      }
      cls.constructors.push_back(std::move(ctor));
      return;
    }

    std::string type = parse_type();
    const int name_line = peek().line;
    std::string name = expect_ident();

    if (at_op("(")) {
      MethodModel m;
      m.name_line = name_line;
      m.name = std::move(name);
      m.return_type_name = std::move(type);
      m.annotations = mods.annotations;
      m.is_static = mods.is_static;
      const bool in_interface =
          cls.kind == ClassKind::Interface || cls.kind == ClassKind::AnnotationDecl;
      m.visibility = in_interface && mods.visibility == Visibility::Package ? Visibility::Public
                                                                            : mods.visibility;
      m.parameters = parse_formal_parameters();
      while (at_op("[") && peek(1).is_op("]")) {
        advance();
        advance();
        m.return_type_name += "[]";
      }
      skip_throws();
      if (at_kw("default")) {
        advance();
        while (!at_end() && !at_op(";")) {
          if (at_op("{")) skip_balanced("{", "}");
          else if (at_op("(")) skip_balanced("(", ")");
          else advance();
        }
      }
      if (at_op("{")) {
        m.body_statements = parse_block();
      } else {
        expect_op(";");
        m.is_abstract = true;
      }
      m.is_abstract = m.is_abstract || mods.is_abstract;
      m.source_span = {decl_line, last_line()};
      cls.methods.push_back(std::move(m));
      return;
    }

    // field declarators
    const bool in_interface =
        cls.kind == ClassKind::Interface || cls.kind == ClassKind::AnnotationDecl;
    int line = name_line;
    while (true) {
      FieldModel f;
      f.name = std::move(name);
      f.declared_type_name = type;
      while (at_op("[") && peek(1).is_op("]")) {
        advance();
        advance();
        f.declared_type_name += "[]";
      }
      f.annotations = mods.annotations;
      f.visibility = in_interface ? Visibility::Public : mods.visibility;
      f.is_static = mods.is_static || in_interface;
      f.is_final = mods.is_final || in_interface;
      f.source_line = line;
      if (at_op("=")) {
        advance();
        f.initializer = parse_variable_initializer();
      }
      add_field(cls, std::move(f));
      if (at_op(",")) {
        advance();
        line = peek().line;
        name = expect_ident();
        continue;
      }
      expect_op(";");
      break;
    }
  }

  int last_line() const { return tok_at(pos_ == 0 ? 0 : pos_ - 1).line; }

  void skip_throws() {
    if (!at_kw("throws")) return;
    advance();
    parse_type_list();
  }

  std::vector<Param> parse_formal_parameters() {
    expect_op("(");
    std::vector<Param> params;
    while (!at_op(")")) {
      parse_modifiers();
      Param p;
      p.type_name = parse_type();
      if (at_kw("this")) {  // receiver parameter
        advance();
      } else {
        p.name = expect_ident();
        while (at_op("[") && peek(1).is_op("]")) {
          advance();
          advance();
          p.type_name += "[]";
        }
        params.push_back(std::move(p));
      }
      if (at_op(",")) advance();
      else if (!at_op(")")) throw error("malformed parameter list");
    }
    advance();
    return params;
  }

  // anonymous class body at '{'; returns a ClassBody node mirroring its members
  Node parse_anonymous_class(const std::string& super_type, int line) {
    DepthGuard guard(*this);
    if (scopes_.empty()) throw error("anonymous class outside a type");
    Scope& outer = scopes_.back();
    ClassModel cls;
    cls.kind = ClassKind::Class;
    cls.superclass_name = super_type;
    const std::string suffix = "$anon" + std::to_string(++outer.anon_count);
    cls.name = outer.name + suffix;
    cls.qualified_name = outer.qualified_name + suffix;
    const std::size_t index = unit_.type_decls.size();
    unit_.type_decls.emplace_back();
    parse_class_body(cls, "");
    cls.source_span = {line, last_line()};
    cls.name_line = line;

    Node body(NodeKind::ClassBody, line, cls.name);
    auto mirror = [&](const MethodModel& m) {
      if (!m.body_statements) return;
      Node decl(NodeKind::MethodDecl, m.source_span.first, m.name);
      decl.params = m.parameters;
      decl.children.push_back(*m.body_statements);
      body.children.push_back(std::move(decl));
    };
    for (const auto& m : cls.methods) mirror(m);
    for (const auto& m : cls.initializers) mirror(m);
    unit_.type_decls[index] = std::move(cls);
    return body;
  }

  // ---- statements ---------------------------------------------------------

  Node parse_block() {
    DepthGuard guard(*this);
    Node block(NodeKind::Block, peek().line);
    expect_op("{");
    while (!at_op("}")) {
      if (at_end()) throw error("unterminated block");
      parse_block_statement(block.children);
    }
    advance();
    return block;
  }

  bool at_local_class_decl() const {
    std::size_t p = pos_;
    while (true) {
      const Token& t = tok_at(p);
      if (t.is_kw("final") || t.is_kw("abstract") || t.is_kw("static") || t.is_kw("strictfp")) {
        ++p;
        continue;
      }
      if (t.is_op("@") && !tok_at(p + 1).is_kw("interface")) {
        auto q = scan_annotation(p);
        if (!q) return false;
        p = *q;
        continue;
      }
      break;
    }
    const Token& t = tok_at(p);
    if (t.is_kw("class") || t.is_kw("interface") || t.is_kw("enum")) return true;
    return t.is(TokenKind::Identifier, "record") && tok_at(p + 1).kind == TokenKind::Identifier &&
           (tok_at(p + 2).is_op("(") || tok_at(p + 2).is_op("<"));
  }

  // Local variable declaration lookahead: [final|@Ann]* Type Ident (= ; , [ :)
  bool looks_like_local_var_decl(std::size_t p) const {
    while (true) {
      if (tok_at(p).is_kw("final")) {
        ++p;
        continue;
      }
      if (tok_at(p).is_op("@")) {
        auto q = scan_annotation(p);
        if (!q) return false;
        p = *q;
        continue;
      }
      break;
    }
    auto end = scan_type(p);
    if (!end) return false;
    if (tok_at(*end).kind != TokenKind::Identifier) return false;
    const Token& after = tok_at(*end + 1);
    return after.is_op("=") || after.is_op(";") || after.is_op(",") || after.is_op("[") ||
           after.is_op(":");
  }

  bool at_yield_statement() const {
    if (!at_ident("yield")) return false;
    const Token& n = peek(1);
    if (n.kind == TokenKind::Operator) {
      if (n.is_op("=") || n.is_op(".") || n.is_op("[") || n.is_op("++") || n.is_op("--") ||
          is_assignment_op(n.text) || n.is_op(";"))
        return false;
    }
    return true;
  }

  void parse_local_var_decl(std::vector<Node>& out) {
    parse_modifiers();
    std::string type = parse_type();
    while (true) {
      Node var(NodeKind::LocalVar, peek().line, expect_ident());
      var.type = type;
      while (at_op("[") && peek(1).is_op("]")) {
        advance();
        advance();
        var.type += "[]";
      }
      if (at_op("=")) {
        advance();
        var.children.push_back(parse_variable_initializer());
      }
      out.push_back(std::move(var));
      if (!at_op(",")) break;
      advance();
    }
  }

  void parse_block_statement(std::vector<Node>& out) {
    DepthGuard guard(*this);
    if (at_local_class_decl()) {
      const int line = peek().line;
      Modifiers mods = parse_modifiers();
      std::size_t index = parse_type_decl(mods, scopes_.empty() ? nullptr : &scopes_.back());
      out.emplace_back(NodeKind::LocalClass, line, unit_.type_decls[index].qualified_name);
      return;
    }
    if (!at_yield_statement() && looks_like_local_var_decl(pos_)) {
      parse_local_var_decl(out);
      expect_op(";");
      return;
    }
    out.push_back(parse_statement());
  }

  Node parse_statement() {
    DepthGuard guard(*this);
    const int line = peek().line;
    if (at_op("{")) return parse_block();
    if (at_op(";")) {
      advance();
      return Node(NodeKind::Empty, line);
    }
    if (at_kw("if")) {
      advance();
      Node n(NodeKind::If, line);
      n.children.push_back(parse_par_expression());
      n.children.push_back(parse_statement());
      if (at_kw("else")) {
        advance();
        n.children.push_back(parse_statement());
      }
      return n;
    }
    if (at_kw("for")) return parse_for();
    if (at_kw("while")) {
      advance();
      Node n(NodeKind::While, line);
      n.children.push_back(parse_par_expression());
      n.children.push_back(parse_statement());
      return n;
    }
    if (at_kw("do")) {
      advance();
      Node n(NodeKind::Do, line);
      n.children.push_back(parse_statement());
      if (!at_kw("while")) throw error("expected 'while'");
      advance();
      n.children.push_back(parse_par_expression());
      expect_op(";");
      return n;
    }
    if (at_kw("switch")) {
      Node n = parse_switch();
      if (at_op(";")) advance();
      return n;
    }
    if (at_kw("try")) return parse_try();
    if (at_kw("return")) {
      advance();
      Node n(NodeKind::Return, line);
      if (!at_op(";")) n.children.push_back(parse_expression());
      expect_op(";");
      return n;
    }
    if (at_kw("throw")) {
      advance();
      Node n(NodeKind::Throw, line);
      n.children.push_back(parse_expression());
      expect_op(";");
      return n;
    }
    if (at_kw("break") || at_kw("continue")) {
      Node n(at_kw("break") ? NodeKind::Break : NodeKind::Continue, line);
      advance();
      if (at_ident()) n.text = advance().text;
      expect_op(";");
      return n;
    }
    if (at_yield_statement()) {
      advance();
      Node n(NodeKind::Yield, line);
      n.children.push_back(parse_expression());
      expect_op(";");
      return n;
    }
    if (at_kw("synchronized")) {
      advance();
      Node n(NodeKind::Synchronized, line);
      n.children.push_back(parse_par_expression());
      n.children.push_back(parse_block());
      return n;
    }
    if (at_kw("assert")) {
      advance();
      Node n(NodeKind::Assert, line);
      n.children.push_back(parse_expression());
      if (at_op(":")) {
        advance();
        n.children.push_back(parse_expression());
      }
      expect_op(";");
      return n;
    }
    if (at_ident() && peek(1).is_op(":")) {
      Node n(NodeKind::Labeled, line, advance().text);
      advance();
      n.children.push_back(parse_statement());
      return n;
    }
    Node n(NodeKind::ExprStmt, line);
    n.children.push_back(parse_expression());
    expect_op(";");
    return n;
  }

  Node parse_par_expression() {
    expect_op("(");
    Node e = parse_expression();
    expect_op(")");
    return e;
  }

  Node parse_for() {
    const int line = peek().line;
    advance();
    expect_op("(");
    // for-each: [final] Type name :
    {
      std::size_t p = pos_;
      bool is_foreach = false;
      if (looks_like_local_var_decl(p)) {
        std::size_t q = p;
        while (tok_at(q).is_kw("final") || tok_at(q).is_op("@")) {
          if (tok_at(q).is_op("@")) q = scan_annotation(q).value_or(q + 1);
          else ++q;
        }
        auto end = scan_type(q);
        is_foreach = end && tok_at(*end + 1).is_op(":");
      }
      if (is_foreach) {
        parse_modifiers();
        Node n(NodeKind::ForEach, line);
        n.type = parse_type();
        n.text = expect_ident();
        expect_op(":");
        n.children.push_back(parse_expression());
        expect_op(")");
        n.children.push_back(parse_statement());
        return n;
      }
    }
    Node n(NodeKind::For, line);
    Node init(NodeKind::Block, peek().line);
    if (!at_op(";")) {
      if (looks_like_local_var_decl(pos_)) {
        parse_local_var_decl(init.children);
      } else {
        while (true) {
          Node s(NodeKind::ExprStmt, peek().line);
          s.children.push_back(parse_expression());
          init.children.push_back(std::move(s));
          if (!at_op(",")) break;
          advance();
        }
      }
    }
    expect_op(";");
    n.children.push_back(std::move(init));
    if (at_op(";")) n.children.emplace_back(NodeKind::Empty, peek().line);
    else n.children.push_back(parse_expression());
    expect_op(";");
    Node update(NodeKind::Block, peek().line);
    while (!at_op(")")) {
      Node s(NodeKind::ExprStmt, peek().line);
      s.children.push_back(parse_expression());
      update.children.push_back(std::move(s));
      if (at_op(",")) advance();
      else if (!at_op(")")) throw error("malformed for update");
    }
    advance();
    n.children.push_back(std::move(update));
    n.children.push_back(parse_statement());
    return n;
  }

  Node parse_try() {
    const int line = peek().line;
    advance();
    Node n(NodeKind::Try, line);
    Node resources(NodeKind::Block, line);
    if (at_op("(")) {
      advance();
      while (!at_op(")")) {
        if (looks_like_local_var_decl(pos_)) {
          parse_local_var_decl(resources.children);
        } else {
          Node s(NodeKind::ExprStmt, peek().line);
          s.children.push_back(parse_expression());
          resources.children.push_back(std::move(s));
        }
        if (at_op(";")) advance();
        else if (!at_op(")")) throw error("malformed try resources");
      }
      advance();
    }
    n.children.push_back(std::move(resources));
    n.children.push_back(parse_block());
    while (at_kw("catch")) {
      Node c(NodeKind::Catch, peek().line);
      advance();
      expect_op("(");
      parse_modifiers();
      std::string types = parse_type();
      while (at_op("|")) {
        advance();
        types += "|" + parse_type();
      }
      c.type = types;
      c.text = expect_ident();
      expect_op(")");
      c.children.push_back(parse_block());
      n.children.push_back(std::move(c));
    }
    if (at_kw("finally")) {
      Node f(NodeKind::Finally, peek().line);
      advance();
      f.children.push_back(parse_block());
      n.children.push_back(std::move(f));
    }
    if (n.children.size() == 2 && resources.children.empty())
      throw ParseError(line, "try without catch or finally");
    return n;
  }

  Node parse_switch() {
    DepthGuard guard(*this);
    Node n(NodeKind::Switch, peek().line);
    advance();
    n.children.push_back(parse_par_expression());
    expect_op("{");
    while (!at_op("}")) {
      if (at_end()) throw error("unterminated switch");
      const int line = peek().line;
      Node body(NodeKind::Block, line);
      Node group;
      if (at_kw("case")) {
        advance();
        group = Node(NodeKind::Case, line);
        Node labels(NodeKind::Labels, line);
        while (true) {
          labels.children.push_back(parse_case_label());
          if (!at_op(",")) break;
          advance();
        }
        group.children.push_back(std::move(labels));
      } else if (at_kw("default")) {
        advance();
        group = Node(NodeKind::Default, line);
      } else {
        throw error("expected 'case' or 'default'");
      }
      if (at_op("->")) {
        advance();
        if (at_op("{")) {
          body.children.push_back(parse_block());
        } else if (at_kw("throw")) {
          body.children.push_back(parse_statement());
        } else {
          Node s(NodeKind::ExprStmt, peek().line);
          s.children.push_back(parse_expression());
          expect_op(";");
          body.children.push_back(std::move(s));
        }
      } else {
        if (!at_op(":")) throw error("expected ':' or '->' after case label");
        advance();
        while (!at_kw("case") && !at_kw("default") && !at_op("}")) {
          if (at_end()) throw error("unterminated switch");
          // `default` as an interface-method modifier never appears here
          parse_block_statement(body.children);
        }
      }
      group.children.push_back(std::move(body));
      n.children.push_back(std::move(group));
    }
    advance();
    return n;
  }

  Node parse_case_label() {
    const int line = peek().line;
    if (at_kw("default")) {  // `case null, default`
      advance();
      return Node(NodeKind::Name, line, "default");
    }
    // type pattern: Type ident [when expr]
    if (auto end = scan_type(pos_); end && tok_at(*end).kind == TokenKind::Identifier &&
                                   !tok_at(*end).is(TokenKind::Identifier, "when")) {
      Node pat(NodeKind::InstanceOf, line);
      pat.type = parse_type();
      pat.text = expect_ident();
      if (at_ident("when")) {
        advance();
        pat.children.push_back(parse_ternary_no_lambda());
      }
      return pat;
    }
    Node label = parse_ternary_no_lambda();
    if (at_ident("when")) {
      advance();
      label.children.push_back(parse_ternary_no_lambda());
    }
    return label;
  }

  Node parse_ternary_no_lambda() {
    const bool saved = no_lambda_;
    no_lambda_ = true;
    Node n = parse_ternary();
    no_lambda_ = saved;
    return n;
  }

  // ---- expressions --------------------------------------------------------

  Node parse_variable_initializer() {
    if (at_op("{")) return parse_array_init();
    return parse_expression();
  }

  Node parse_array_init() {
    DepthGuard guard(*this);
    Node n(NodeKind::ArrayInit, peek().line);
    expect_op("{");
    while (!at_op("}")) {
      n.children.push_back(parse_variable_initializer());
      if (at_op(",")) advance();
      else if (!at_op("}")) throw error("malformed array initializer");
    }
    advance();
    return n;
  }

  // Assignment operator at the cursor, including '>' '>' '=' forms. Returns the
  // operator text and the number of tokens it spans.
  std::optional<std::pair<std::string, int>> assignment_op_at() const {
    const Token& t = peek();
    if (t.kind != TokenKind::Operator) return std::nullopt;
    if (t.text == ">" && adjacent(pos_)) {
      if (peek(1).is_op(">") && adjacent(pos_ + 1)) {
        if (peek(2).is_op(">") && adjacent(pos_ + 2) && peek(3).is_op("="))
          return std::pair<std::string, int>{">>>=", 4};
        if (peek(2).is_op("=")) return std::pair<std::string, int>{">>=", 3};
      }
      return std::nullopt;
    }
    if (is_assignment_op(t.text)) return std::pair<std::string, int>{t.text, 1};
    return std::nullopt;
  }

  Node parse_expression() {
    DepthGuard guard(*this);
    const int line = peek().line;
    Node lhs = parse_ternary();
    if (auto op = assignment_op_at()) {
      for (int i = 0; i < op->second; ++i) advance();
      Node n(NodeKind::Assign, line, op->first);
      n.children.push_back(std::move(lhs));
      n.children.push_back(parse_expression());
      return n;
    }
    return lhs;
  }

  Node parse_ternary() {
    DepthGuard guard(*this);
    const int line = peek().line;
    Node cond = parse_binary(1);
    if (!at_op("?")) return cond;
    advance();
    Node n(NodeKind::Ternary, line);
    n.children.push_back(std::move(cond));
    const bool saved = no_lambda_;
    no_lambda_ = false;
    n.children.push_back(parse_ternary());
    no_lambda_ = saved;
    expect_op(":");
    n.children.push_back(at_lambda_start() ? parse_expression() : parse_ternary());
    return n;
  }

  // Binary operator at the cursor: (text, precedence, token count).
  std::optional<std::tuple<std::string, int, int>> binary_op_at() const {
    const Token& t = peek();
    if (t.is_kw("instanceof")) return std::tuple<std::string, int, int>{"instanceof", 7, 1};
    if (t.kind != TokenKind::Operator) return std::nullopt;
    if (t.text == ">") {
      if (adjacent(pos_) && peek(1).is_op(">")) {
        if (adjacent(pos_ + 1) && peek(2).is_op(">")) {
          if (adjacent(pos_ + 2) && peek(3).is_op("=")) return std::nullopt;
          return std::tuple<std::string, int, int>{">>>", 8, 3};
        }
        if (adjacent(pos_ + 1) && peek(2).is_op("=")) return std::nullopt;
        return std::tuple<std::string, int, int>{">>", 8, 2};
      }
      if (adjacent(pos_) && peek(1).is_op("=")) return std::tuple<std::string, int, int>{">=", 7, 2};
      return std::tuple<std::string, int, int>{">", 7, 1};
    }
    static const std::array<std::pair<std::string_view, int>, 16> kOps = {{
        {"||", 1}, {"&&", 2}, {"|", 3}, {"^", 4}, {"&", 5}, {"==", 6}, {"!=", 6}, {"<", 7},
        {"<=", 7}, {"<<", 8}, {"+", 9}, {"-", 9}, {"*", 10}, {"/", 10}, {"%", 10}, {"", 0}}};
    for (const auto& [op, prec] : kOps)
      if (prec > 0 && t.text == op) return std::tuple<std::string, int, int>{std::string(op), prec, 1};
    return std::nullopt;
  }

  Node parse_binary(int min_prec) {
    DepthGuard guard(*this);
    Node lhs = parse_unary();
    while (true) {
      auto op = binary_op_at();
      if (!op) break;
      auto [text, prec, count] = *op;
      if (prec < min_prec) break;
      const int line = peek().line;
      for (int i = 0; i < count; ++i) advance();
      if (text == "instanceof") {
        Node n(NodeKind::InstanceOf, line);
        if (at_kw("final")) advance();
        n.type = parse_type();
        if (at_ident() && !at_ident("when")) n.text = advance().text;
        n.children.push_back(std::move(lhs));
        lhs = std::move(n);
        continue;
      }
      Node rhs = parse_binary(prec + 1);
      NodeKind kind = text == "&&" ? NodeKind::And : text == "||" ? NodeKind::Or : NodeKind::Binary;
      Node n(kind, line, kind == NodeKind::Binary ? text : std::string());
      n.children.push_back(std::move(lhs));
      n.children.push_back(std::move(rhs));
      lhs = std::move(n);
    }
    return lhs;
  }

  bool looks_like_cast() const {
    if (!at_op("(")) return false;
    auto end = scan_type(pos_ + 1);
    if (!end) return false;
    std::size_t p = *end;
    while (tok_at(p).is_op("&")) {  // intersection cast
      auto next = scan_type(p + 1);
      if (!next) return false;
      p = *next;
    }
    if (!tok_at(p).is_op(")")) return false;
    const Token& first = tok_at(pos_ + 1);
    const bool primitive = first.kind == TokenKind::Keyword && is_primitive_keyword(first.text);
    const Token& next = tok_at(p + 1);
    if (primitive) {
      // (int) -x is a cast; (int) + y too
      return next.kind != TokenKind::End && !next.is_op(")") && !next.is_op(";") &&
             !next.is_op(",") && !next.is_op(".");
    }
    if (next.kind == TokenKind::Identifier || next.kind == TokenKind::Literal) return true;
    if (next.is_op("(") || next.is_op("!") || next.is_op("~")) return true;
    if (next.is_kw("this") || next.is_kw("new") || next.is_kw("super") || next.is_kw("switch"))
      return true;
    if (next.kind == TokenKind::Keyword && is_primitive_keyword(next.text)) return true;
    return false;
  }

  Node parse_unary() {
    DepthGuard guard(*this);
    const int line = peek().line;
    const Token& t = peek();
    if (t.is_op("+") || t.is_op("-") || t.is_op("++") || t.is_op("--") || t.is_op("!") ||
        t.is_op("~")) {
      Node n(NodeKind::Unary, line, advance().text);
      n.children.push_back(parse_unary());
      return n;
    }
    if (looks_like_cast()) {
      advance();
      Node n(NodeKind::Cast, line);
      n.type = parse_type();
      while (at_op("&")) {
        advance();
        n.type += " & " + parse_type();
      }
      expect_op(")");
      n.children.push_back(at_lambda_start() ? parse_lambda() : parse_unary());
      return n;
    }
    return parse_postfix(parse_primary());
  }

  std::size_t matching_paren(std::size_t p) const {
    int depth = 0;
    while (tok_at(p).kind != TokenKind::End) {
      if (tok_at(p).is_op("(")) ++depth;
      if (tok_at(p).is_op(")") && --depth == 0) return p;
      ++p;
    }
    return p;
  }

  bool at_lambda_start() const {
    if (no_lambda_) return false;
    if (at_ident() && peek(1).is_op("->")) return true;
    if (at_op("(")) {
      std::size_t close = matching_paren(pos_);
      return tok_at(close + 1).is_op("->");
    }
    return false;
  }

  Node parse_lambda() {
    DepthGuard guard(*this);
    Node n(NodeKind::Lambda, peek().line);
    if (at_ident()) {
      n.params.push_back({advance().text, ""});
    } else {
      expect_op("(");
      while (!at_op(")")) {
        parse_modifiers();
        if (at_ident() && (peek(1).is_op(",") || peek(1).is_op(")"))) {
          n.params.push_back({advance().text, ""});
        } else {
          Param p;
          p.type_name = parse_type();
          p.name = expect_ident();
          n.params.push_back(std::move(p));
        }
        if (at_op(",")) advance();
        else if (!at_op(")")) throw error("malformed lambda parameters");
      }
      advance();
    }
    expect_op("->");
    const bool saved = no_lambda_;
    no_lambda_ = false;
    if (at_op("{")) n.children.push_back(parse_block());
    else n.children.push_back(parse_expression());
    no_lambda_ = saved;
    return n;
  }

  void parse_arguments(Node& call) {
    expect_op("(");
    const bool saved = no_lambda_;
    no_lambda_ = false;
    while (!at_op(")")) {
      call.children.push_back(parse_expression());
      if (at_op(",")) advance();
      else if (!at_op(")")) throw error("expected ',' or ')' in arguments");
    }
    no_lambda_ = saved;
    advance();
  }

  Node parse_primary() {
    DepthGuard guard(*this);
    const int line = peek().line;
    const Token& t = peek();
    if (at_lambda_start()) return parse_lambda();
    if (t.kind == TokenKind::Literal) return Node(NodeKind::Literal, line, advance().text);
    if (t.is_kw("this")) {
      advance();
      if (at_op("(")) {
        Node call(NodeKind::Invoke, line, "this");
        call.children.emplace_back(NodeKind::Empty, line);
        parse_arguments(call);
        return call;
      }
      return Node(NodeKind::This, line);
    }
    if (t.is_kw("super")) {
      advance();
      if (at_op("(")) {
        Node call(NodeKind::Invoke, line, "super");
        call.children.emplace_back(NodeKind::Empty, line);
        parse_arguments(call);
        return call;
      }
      return Node(NodeKind::Super, line);
    }
    if (t.is_kw("new")) return parse_creator();
    if (t.is_kw("switch")) return parse_switch();
    if (t.is_op("(")) {
      advance();
      const bool saved = no_lambda_;
      no_lambda_ = false;
      Node inner = parse_expression();
      no_lambda_ = saved;
      expect_op(")");
      return inner;
    }
    if (t.kind == TokenKind::Keyword && is_primitive_keyword(t.text)) {
      Node n(NodeKind::ClassLit, line);
      n.type = parse_type();
      if (at_op("::")) return n;  // int[]::new, handled by postfix
      expect_op(".");
      if (!at_kw("class")) throw error("expected 'class'");
      advance();
      return n;
    }
    if (t.kind == TokenKind::Identifier) {
      std::string name = advance().text;
      if (at_op("(")) {
        Node call(NodeKind::Invoke, line, std::move(name));
        call.children.emplace_back(NodeKind::Empty, line);
        parse_arguments(call);
        return call;
      }
      // generic type used as method-reference target: List<String>::new
      if (at_op("<")) {
        if (auto end = scan_type_args(pos_); end && tok_at(*end).is_op("::")) {
          pos_ = *end;
          return Node(NodeKind::Name, line, std::move(name));
        }
      }
      return Node(NodeKind::Name, line, std::move(name));
    }
    if (t.is_op("@")) {  // annotated expression-level type, e.g. in casts
      parse_annotation();
      return parse_primary();
    }
    throw error("unexpected token in expression");
  }

  Node parse_creator() {
    DepthGuard guard(*this);
    const int line = peek().line;
    advance();  // new
    if (at_op("<")) skip_type_parameters();
    while (at_op("@")) parse_annotation();
    // created type without array dims
    std::string type;
    const std::size_t from = pos_;
    if (peek().kind == TokenKind::Keyword && is_primitive_keyword(peek().text)) {
      advance();
    } else {
      expect_ident();
      if (at_op("<")) {
        auto end = scan_type_args(pos_);
        if (!end) throw error("malformed type arguments");
        pos_ = *end;
      }
      while (at_op(".") && peek(1).kind == TokenKind::Identifier) {
        advance();
        advance();
        if (at_op("<")) {
          auto end = scan_type_args(pos_);
          if (!end) throw error("malformed type arguments");
          pos_ = *end;
        }
      }
    }
    type = join_tokens(from, pos_);
    if (at_op("[")) {
      Node n(NodeKind::NewArray, line);
      n.type = type;
      while (at_op("[")) {
        advance();
        if (at_op("]")) {
          advance();
          continue;
        }
        n.children.push_back(parse_expression());
        expect_op("]");
      }
      if (at_op("{")) n.children.push_back(parse_array_init());
      return n;
    }
    Node n(NodeKind::New, line);
    n.type = type;
    parse_arguments(n);
    if (at_op("{")) {
      Node body = parse_anonymous_class(type, line);
      n.text = body.text;
      n.children.push_back(std::move(body));
    }
    return n;
  }

  Node parse_postfix(Node expr) {
    while (true) {
      const int line = peek().line;
      if (at_op(".")) {
        advance();
        if (at_op("<")) skip_type_parameters();
        if (at_kw("class")) {
          advance();
          Node n(NodeKind::ClassLit, line);
          n.type = expr_type_text(expr);
          expr = std::move(n);
          continue;
        }
        if (at_kw("this")) {
          advance();
          expr = Node(NodeKind::This, line);
          continue;
        }
        if (at_kw("new")) {
          Node created = parse_creator();
          created.children.insert(created.children.begin(), std::move(expr));
          expr = std::move(created);
          continue;
        }
        if (at_kw("super")) {
          advance();
          expr = Node(NodeKind::Super, line);
          continue;
        }
        std::string name = expect_ident();
        if (at_op("(")) {
          Node call(NodeKind::Invoke, line, std::move(name));
          call.children.push_back(std::move(expr));
          parse_arguments(call);
          expr = std::move(call);
        } else {
          Node access(NodeKind::FieldAccess, line, std::move(name));
          access.children.push_back(std::move(expr));
          expr = std::move(access);
        }
        continue;
      }
      if (at_op("[")) {
        if (peek(1).is_op("]")) {  // Type[].class or Type[]::new
          std::string type = expr_type_text(expr);
          while (at_op("[") && peek(1).is_op("]")) {
            advance();
            advance();
            type += "[]";
          }
          Node n(NodeKind::ClassLit, line);
          n.type = type;
          if (at_op(".") && peek(1).is_kw("class")) {
            advance();
            advance();
          }
          expr = std::move(n);
          continue;
        }
        advance();
        Node n(NodeKind::ArrayAccess, line);
        n.children.push_back(std::move(expr));
        n.children.push_back(parse_expression());
        expect_op("]");
        expr = std::move(n);
        continue;
      }
      if (at_op("++") || at_op("--")) {
        Node n(NodeKind::Unary, line, "x" + advance().text);
        n.children.push_back(std::move(expr));
        expr = std::move(n);
        continue;
      }
      if (at_op("::")) {
        advance();
        if (at_op("<")) skip_type_parameters();
        Node n(NodeKind::MethodRef, line);
        if (at_kw("new")) {
          advance();
          n.text = "new";
        } else {
          n.text = expect_ident();
        }
        n.children.push_back(std::move(expr));
        expr = std::move(n);
        continue;
      }
      return expr;
    }
  }

  static std::string expr_type_text(const Node& n) {
    if (n.kind == NodeKind::Name) return n.text;
    if (n.kind == NodeKind::FieldAccess && !n.children.empty())
      return expr_type_text(n.children.front()) + "." + n.text;
    if (n.kind == NodeKind::ClassLit) return n.type;
    return n.text;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SourceUnit& unit_;
  int depth_ = 0;
  bool no_lambda_ = false;
  // innermost class last; a deque keeps references stable while nesting
  std::deque<Scope> scopes_;
};

}  // namespace detail

// Parses one Java compilation unit. Never throws; problems are reported in
// parse_diagnostics and whatever declarations could be recovered are kept.
inline SourceUnit parse_unit(std::string_view source_text, std::string file_path) {
  SourceUnit unit;
  unit.file_path = std::move(file_path);
  if (source_text.starts_with("\xEF\xBB\xBF")) source_text.remove_prefix(3);
  try {
    auto tokens = tokenize(source_text, unit.parse_diagnostics);
    detail::JavaParser parser(std::move(tokens), unit);
    parser.parse_compilation_unit();
  } catch (const std::exception& e) {
    unit.type_decls.clear();
    unit.parse_diagnostics.push_back({0, std::string("internal parser failure: ") + e.what()});
  }
  return unit;
}

}  // namespace dilint
