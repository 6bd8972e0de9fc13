#pragma once

#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "dilint/model.hpp"

namespace dilint {

enum class TokenKind { Identifier, Keyword, Literal, Operator, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int line = 0;
  std::size_t offset = 0;  // byte offset of the first character

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_op(std::string_view t) const { return is(TokenKind::Operator, t); }
  bool is_kw(std::string_view t) const { return is(TokenKind::Keyword, t); }
};

namespace detail {

inline bool is_java_keyword(std::string_view word) {
  static constexpr std::array<std::string_view, 50> kKeywords = {
      "abstract", "assert",     "boolean",   "break",     "byte",      "case",
      "catch",    "char",       "class",     "const",     "continue",  "default",
      "do",       "double",     "else",      "enum",      "extends",   "final",
      "finally",  "float",      "for",       "goto",      "if",        "implements",
      "import",   "instanceof", "int",       "interface", "long",      "native",
      "new",      "package",    "private",   "protected", "public",    "return",
      "short",    "static",     "strictfp",  "super",     "switch",    "synchronized",
      "this",     "throw",      "throws",    "transient", "try",       "void",
      "volatile", "while"};
  for (auto k : kKeywords)
    if (k == word) return true;
  return false;
}

inline bool ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

inline bool ident_part(unsigned char c) { return ident_start(c) || std::isdigit(c); }

}  // namespace detail

// Tokenizes Java source. Never throws: malformed input produces diagnostics and
// the scanner resynchronizes on the next character. '>' is always emitted as a
// single-character token so the parser can close nested type arguments; shift
// and relational operators are reassembled from adjacent tokens.
inline std::vector<Token> tokenize(std::string_view src, std::vector<Diagnostic>& diagnostics) {
  static constexpr std::array<std::string_view, 27> kOperators = {
      "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", "+=", "-=", "*=",
      "/=",  "%=",  "&=", "|=", "^=", "<<", "(",  ")",  "{",  "}",  "[",  "]",  ";"};
  static constexpr std::string_view kSingles = ",.@=<>!~?:+-*/&|^%";

  std::vector<Token> tokens;
  int line = 1;
  std::size_t i = 0;
  const std::size_t n = src.size();

  auto push = [&](TokenKind kind, std::size_t start, std::size_t end, int start_line) {
    tokens.push_back(Token{kind, std::string(src.substr(start, end - start)), start_line, start});
  };

  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(c) || c == '\f') {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      const int start_line = line;
      i += 2;
      bool closed = false;
      while (i < n) {
        if (src[i] == '*' && i + 1 < n && src[i + 1] == '/') {
          i += 2;
          closed = true;
          break;
        }
        if (src[i] == '\n') ++line;
        ++i;
      }
      if (!closed) diagnostics.push_back({start_line, "unterminated block comment"});
      continue;
    }
    if (detail::ident_start(c)) {
      const std::size_t start = i;
      while (i < n && detail::ident_part(static_cast<unsigned char>(src[i]))) ++i;
      std::string_view word = src.substr(start, i - start);
      TokenKind kind = TokenKind::Identifier;
      if (word == "true" || word == "false" || word == "null")
        kind = TokenKind::Literal;
      else if (detail::is_java_keyword(word))
        kind = TokenKind::Keyword;
      push(kind, start, i, line);
      continue;
    }
    if (std::isdigit(c) || (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      const std::size_t start = i;
      const bool hex = src.substr(i, 2) == "0x" || src.substr(i, 2) == "0X";
      while (i < n) {
        const unsigned char d = static_cast<unsigned char>(src[i]);
        if (std::isalnum(d) || d == '_' || d == '.') {
          const bool exponent = hex ? (d == 'p' || d == 'P') : (d == 'e' || d == 'E');
          if (exponent && i + 1 < n && (src[i + 1] == '+' || src[i + 1] == '-')) {
            i += 2;
            continue;
          }
          // "1..2" never appears in Java; stop at a '.' that starts "..."
          if (d == '.' && i + 1 < n && src[i + 1] == '.') break;
          ++i;
        } else {
          break;
        }
      }
      push(TokenKind::Literal, start, i, line);
      continue;
    }
    if (c == '"' && src.substr(i, 3) == "\"\"\"") {
      const std::size_t start = i;
      const int start_line = line;
      i += 3;
      bool closed = false;
      while (i < n) {
        if (src[i] == '\\' && i + 1 < n) {
          if (src[i + 1] == '\n') ++line;
          i += 2;
          continue;
        }
        if (src.substr(i, 3) == "\"\"\"") {
          i += 3;
          closed = true;
          break;
        }
        if (src[i] == '\n') ++line;
        ++i;
      }
      if (!closed) diagnostics.push_back({start_line, "unterminated text block"});
      push(TokenKind::Literal, start, i, start_line);
      continue;
    }
    if (c == '"' || c == '\'') {
      const std::size_t start = i;
      const char quote = static_cast<char>(c);
      ++i;
      bool closed = false;
      while (i < n && src[i] != '\n') {
        if (src[i] == '\\' && i + 1 < n && src[i + 1] != '\n') {
          i += 2;
          continue;
        }
        if (src[i] == quote) {
          ++i;
          closed = true;
          break;
        }
        ++i;
      }
      if (!closed)
        diagnostics.push_back({line, quote == '"' ? "unterminated string literal"
                                                  : "unterminated character literal"});
      push(TokenKind::Literal, start, i, line);
      continue;
    }
    bool matched = false;
    for (auto op : kOperators) {
      if (src.substr(i, op.size()) == op) {
        push(TokenKind::Operator, i, i + op.size(), line);
        i += op.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (kSingles.find(static_cast<char>(c)) != std::string_view::npos) {
      push(TokenKind::Operator, i, i + 1, line);
      ++i;
      continue;
    }
    diagnostics.push_back({line, "unexpected character"});
    ++i;
  }
  tokens.push_back(Token{TokenKind::End, "", line, n});
  return tokens;
}

}  // namespace dilint
