#pragma once

// Tokenizer shared by the theory-level parser and the type/expression
// parsers that run over the contents of quoted strings.

#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isatype/diagnostics.hpp"

namespace isatype {

enum class TokenKind { Ident, TypeVar, Number, String, Symbol, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;  // symbols are normalized: `⇒` -> `=>`, `λ`/`%` -> `\<lambda>`, `×` -> `*`
  SourceLocation begin;
  SourceLocation end;
  // For strings: location of the first character inside the quotes.
  SourceLocation content_begin;

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_symbol(std::string_view t) const { return is(TokenKind::Symbol, t); }
  bool is_ident(std::string_view t) const { return is(TokenKind::Ident, t); }
};

class Lexer {
 public:
  explicit Lexer(std::string_view text, SourceLocation start = {1, 1}) : text_(text), loc_(start) {}

  std::vector<Token> tokenize() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      Token tok = next();
      bool done = tok.kind == TokenKind::End;
      out.push_back(std::move(tok));
      if (done) return out;
    }
  }

 private:
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 26> kSymbols{{
      {"\\<Rightarrow>", "=>"},
      {"\\<lambda>", "\\<lambda>"},
      {"\\<times>", "*"},
      {"\xE2\x87\x92", "=>"},  // ⇒
      {"\xCE\xBB", "\\<lambda>"}, // λ
      {"\xC3\x97", "*"},        // ×
      {"::", "::"},
      {"=>", "=>"},
      {"%", "\\<lambda>"},
      {"=", "="},
      {"<", "<"},
      {"+", "+"},
      {"-", "-"},
      {"*", "*"},
      {"#", "#"},
      {"!", "!"},
      {"(", "("},
      {")", ")"},
      {"[", "["},
      {"]", "]"},
      {"{", "{"},
      {"}", "}"},
      {",", ","},
      {"|", "|"},
      {".", "."},
      {";", ";"},
  }};

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(text_[pos_++]);
      if (c == '\n') {
        ++loc_.line;
        loc_.column = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++loc_.column;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(loc_.line, loc_.column, msg); }

  void skip_space_and_comments() {
    for (;;) {
      while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
      if (peek() == '(' && peek(1) == '*') {
        SourceLocation start = loc_;
        int depth = 0;
        do {
          if (at_end()) throw ParseError(start.line, start.column, "unterminated comment");
          if (peek() == '(' && peek(1) == '*') {
            ++depth;
            advance(2);
          } else if (peek() == '*' && peek(1) == ')') {
            --depth;
            advance(2);
          } else {
            advance();
          }
        } while (depth > 0);
        continue;
      }
      return;
    }
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  Token next() {
    Token tok;
    tok.begin = loc_;
    if (at_end()) {
      tok.end = loc_;
      return tok;
    }
    char c = peek();
    std::size_t start = pos_;
    if (c == '"') {
      advance();
      tok.kind = TokenKind::String;
      tok.content_begin = loc_;
      std::size_t content = pos_;
      while (!at_end() && peek() != '"') advance();
      if (at_end()) throw ParseError(tok.begin.line, tok.begin.column, "unterminated string");
      tok.text = std::string(text_.substr(content, pos_ - content));
      advance();
    } else if (c == '\'' && ident_start(peek(1))) {
      advance();
      while (ident_char(peek()) && peek() != '\'') advance();
      if (peek() == '@' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        advance();
        while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      }
      if (peek() == '#' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        advance();
        while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      }
      tok.kind = TokenKind::TypeVar;
      tok.text = std::string(text_.substr(start, pos_ - start));
    } else if (ident_start(c)) {
      while (ident_char(peek())) advance();
      tok.kind = TokenKind::Ident;
      tok.text = std::string(text_.substr(start, pos_ - start));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      tok.kind = TokenKind::Number;
      tok.text = std::string(text_.substr(start, pos_ - start));
    } else {
      std::string_view rest = text_.substr(pos_);
      bool matched = false;
      for (const auto& [spelling, normalized] : kSymbols) {
        if (rest.starts_with(spelling)) {
          advance(spelling.size());
          tok.kind = TokenKind::Symbol;
          tok.text = std::string(normalized);
          matched = true;
          break;
        }
      }
      if (!matched) fail(std::string("unexpected character '") + c + "'");
    }
    tok.end = loc_;
    return tok;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  SourceLocation loc_;
};

}  // namespace isatype
