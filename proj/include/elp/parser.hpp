// SPDX-License-Identifier: Apache-2.0
//
// Recursive-descent parser for the .elp surface syntax:
//
//   program := {rule}
//   rule    := head [","] [":-" body] "." | ":-" body "."
//   head    := lit {"|" lit} | "false"
//   body    := ext {"," ext} | "true"
//   ext     := ["not"] ( lit | "K" lit | "M" lit )
//   lit     := ["-"] IDENT
//
// "%" starts a line comment. IDENT matches [a-z][A-Za-z0-9_]*.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "elp/syntax.hpp"

namespace elp {

struct SourceLocation {
  int line = 1;
  int column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLocation where, const std::string& message)
      : std::runtime_error(std::to_string(where.line) + ":" +
                           std::to_string(where.column) + ": " + message),
        where_(where) {}

  SourceLocation where() const { return where_; }

 private:
  SourceLocation where_;
};

struct ParseOptions {
  bool strict = false;  // promote duplicate-literal warnings to errors
};

namespace detail {

struct Token {
  enum class Kind {
    Ident,
    Not,
    True,
    False,
    OpK,
    OpM,
    Pipe,
    Comma,
    If,  // ":-"
    Dot,
    Minus,
    End,
  };
  Kind kind = Kind::End;
  std::string text;
  SourceLocation loc;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_trivia();
    Token tok;
    tok.loc = loc_;
    if (pos_ >= text_.size()) {
      tok.kind = Token::Kind::End;
      return tok;
    }
    const char c = text_[pos_];
    switch (c) {
      case '|': advance(); tok.kind = Token::Kind::Pipe; return tok;
      case ',': advance(); tok.kind = Token::Kind::Comma; return tok;
      case '.': advance(); tok.kind = Token::Kind::Dot; return tok;
      case '-': advance(); tok.kind = Token::Kind::Minus; return tok;
      case ':':
        advance();
        if (pos_ >= text_.size() || text_[pos_] != '-')
          throw ParseError(tok.loc, "expected '-' after ':'");
        advance();
        tok.kind = Token::Kind::If;
        return tok;
      default:
        break;
    }
    if (is_ident_start(c)) {
      tok.text = scan_word();
      if (tok.text == "not") tok.kind = Token::Kind::Not;
      else if (tok.text == "true") tok.kind = Token::Kind::True;
      else if (tok.text == "false") tok.kind = Token::Kind::False;
      else tok.kind = Token::Kind::Ident;
      return tok;
    }
    if (c >= 'A' && c <= 'Z') {
      tok.text = scan_word();
      if (tok.text == "K") { tok.kind = Token::Kind::OpK; return tok; }
      if (tok.text == "M") { tok.kind = Token::Kind::OpM; return tok; }
      throw ParseError(tok.loc, "identifiers must start with a lowercase "
                                "letter (got '" + tok.text + "')");
    }
    throw ParseError(tok.loc, std::string("unexpected character '") + c + "'");
  }

 private:
  static bool is_ident_start(char c) { return c >= 'a' && c <= 'z'; }
  static bool is_ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++loc_.line;
      loc_.column = 1;
    } else {
      ++loc_.column;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  std::string scan_word() {
    std::string word;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
      word += text_[pos_];
      advance();
    }
    return word;
  }

  std::string_view text_;
  size_t pos_ = 0;
  SourceLocation loc_;
};

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& opts,
         std::vector<std::string>* warnings)
      : lexer_(text), opts_(opts), warnings_(warnings) {
    tok_ = lexer_.next();
  }

  Program parse() {
    Program p;
    while (tok_.kind != Token::Kind::End) p.rules.push_back(rule(p));
    return p;
  }

 private:
  using Kind = Token::Kind;

  bool at(Kind k) const { return tok_.kind == k; }

  bool accept(Kind k) {
    if (!at(k)) return false;
    tok_ = lexer_.next();
    return true;
  }

  Token expect(Kind k, const char* what) {
    if (!at(k)) throw ParseError(tok_.loc, std::string("expected ") + what);
    Token t = tok_;
    tok_ = lexer_.next();
    return t;
  }

  Rule rule(Program& p) {
    Rule r;
    if (accept(Kind::If)) {
      r.body = body(p);
    } else if (accept(Kind::False)) {
      if (accept(Kind::If)) r.body = body(p);
    } else {
      r.head = head(p);
      accept(Kind::Comma);  // the grammar tolerates one comma after the head
      if (accept(Kind::If)) r.body = body(p);
    }
    expect(Kind::Dot, "'.' at end of rule");
    return r;
  }

  std::vector<ObjectLiteral> head(Program& p) {
    std::vector<ObjectLiteral> lits;
    do {
      const SourceLocation loc = tok_.loc;
      ObjectLiteral l = object_literal(p);
      if (std::find(lits.begin(), lits.end(), l) != lits.end())
        duplicate(loc, render(l, p.symbols), "head");
      else
        lits.push_back(l);
    } while (accept(Kind::Pipe));
    return lits;
  }

  std::vector<ExtendedLiteral> body(Program& p) {
    std::vector<ExtendedLiteral> lits;
    if (at(Kind::True)) {
      const SourceLocation loc = tok_.loc;
      accept(Kind::True);
      if (!at(Kind::Dot))
        throw ParseError(loc, "'true' must be the whole body");
      return lits;
    }
    do {
      const SourceLocation loc = tok_.loc;
      ExtendedLiteral e = extended_literal(p);
      if (std::find(lits.begin(), lits.end(), e) != lits.end())
        duplicate(loc, render(e, p.symbols), "body");
      else
        lits.push_back(std::move(e));
    } while (accept(Kind::Comma));
    return lits;
  }

  ExtendedLiteral extended_literal(Program& p) {
    const bool neg = accept(Kind::Not);
    if (neg && at(Kind::Not))
      throw ParseError(tok_.loc, "double default negation is not allowed");
    if (at(Kind::OpK) || at(Kind::OpM)) {
      const ModalOp op = at(Kind::OpK) ? ModalOp::K : ModalOp::M;
      tok_ = lexer_.next();
      if (at(Kind::OpK) || at(Kind::OpM))
        throw ParseError(tok_.loc, "modal operators cannot be nested");
      return ModalLiteral{op, object_literal(p), neg};
    }
    ObjectLiteral l = object_literal(p);
    if (neg) return DefaultNegated{l};
    return l;
  }

  ObjectLiteral object_literal(Program& p) {
    const bool strong = accept(Kind::Minus);
    if (at(Kind::True) || at(Kind::False))
      throw ParseError(tok_.loc, "reserved word '" + tok_.text +
                                     "' cannot be used as an atom");
    if (at(Kind::Not))
      throw ParseError(tok_.loc, "reserved word 'not' cannot be used as an "
                                 "atom");
    Token t = expect(Kind::Ident, "an atom");
    return ObjectLiteral{p.symbols.intern(t.text), strong};
  }

  void duplicate(SourceLocation loc, const std::string& lit,
                 const char* where) {
    const std::string msg =
        "duplicate literal '" + lit + "' in rule " + where;
    if (opts_.strict) throw ParseError(loc, msg);
    if (warnings_)
      warnings_->push_back(std::to_string(loc.line) + ":" +
                           std::to_string(loc.column) + ": " + msg +
                           " (dropped)");
  }

  Lexer lexer_;
  Token tok_;
  ParseOptions opts_;
  std::vector<std::string>* warnings_;
};

}  // namespace detail

inline Program parse_program(std::string_view text,
                             const ParseOptions& opts = {},
                             std::vector<std::string>* warnings = nullptr) {
  return detail::Parser(text, opts, warnings).parse();
}

}  // namespace elp
