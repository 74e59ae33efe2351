#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "cobz/errors.hpp"
#include "cobz/term.hpp"

namespace cobz {

namespace detail {

/**
 * Recursive-descent parser for the term grammar:
 *
 *   term  := par (";" par)*            -- ';' lowest, left-associative
 *   par   := atom ("*" atom)*          -- '*' tighter, left-associative
 *   atom  := "id" "(" obj ")" | "swap" "(" obj "," obj ")"
 *          | "ev" | "coev" | "a" "^" int | "(" term ")"
 *   obj   := oatom ("*" oatom)*
 *   oatom := "1" | "+" | "-" | "(" obj ")"
 *   int   := ["-"] digit+              -- contiguous, arbitrary precision
 *
 * Whitespace may appear between any two tokens. Errors carry the 1-based
 * character position and the set of tokens that would have been accepted.
 */
class TermParser {
 public:
  explicit TermParser(std::string_view in) : in_(in) {}

  Term parse_all() {
    Term t = parse_seq();
    skip_ws();
    if (pos_ != in_.size()) fail({";", "*", "end of input"});
    return t;
  }

 private:
  Term parse_seq() {
    Term t = parse_par();
    while (try_consume(';')) t = Term::seq(t, parse_par());
    return t;
  }

  Term parse_par() {
    Term t = parse_atom();
    while (try_consume('*')) t = Term::par(t, parse_atom());
    return t;
  }

  Term parse_atom() {
    skip_ws();
    if (try_consume('(')) {
      Term t = parse_seq();
      expect(')');
      return t;
    }
    const std::size_t word_start = pos_;
    const std::string word = read_word();
    if (word == "ev") return Term::ev();
    if (word == "coev") return Term::coev();
    if (word == "id") {
      expect('(');
      ObjExpr x = parse_obj();
      expect(')');
      return Term::id(std::move(x));
    }
    if (word == "swap") {
      expect('(');
      ObjExpr a = parse_obj();
      expect(',');
      ObjExpr b = parse_obj();
      expect(')');
      return Term::swap(std::move(a), std::move(b));
    }
    if (word == "a") {
      expect('^');
      return Term::alpha(parse_int());
    }
    pos_ = word_start;
    fail({"id", "swap", "ev", "coev", "a^", "("});
  }

  ObjExpr parse_obj() {
    ObjExpr t = parse_obj_atom();
    while (true) {
      skip_ws();
      // Inside swap(...) a '*' continues the tensor; ',' and ')' end it.
      if (!try_consume('*')) return t;
      t = ObjExpr::tensor(t, parse_obj_atom());
    }
  }

  ObjExpr parse_obj_atom() {
    skip_ws();
    if (try_consume('1')) return ObjExpr::unit();
    if (try_consume('+')) return ObjExpr::plus_pt();
    if (try_consume('-')) return ObjExpr::minus_pt();
    if (try_consume('(')) {
      ObjExpr x = parse_obj();
      expect(')');
      return x;
    }
    fail({"1", "+", "-", "("});
  }

  // A contiguous decimal literal, optionally negative.
  Int parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < in_.size() && in_[pos_] == '-') ++pos_;
    const std::size_t digits_start = pos_;
    while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    if (pos_ == digits_start) {
      pos_ = digits_start;
      fail({"integer"});
    }
    return Int(std::string(in_.substr(start, pos_ - start)));
  }

  std::string read_word() {
    std::size_t end = pos_;
    while (end < in_.size() && std::isalpha(static_cast<unsigned char>(in_[end]))) ++end;
    std::string word(in_.substr(pos_, end - pos_));
    pos_ = end;
    return word;
  }

  void skip_ws() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < in_.size() && in_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c)) fail({std::string(1, c)});
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string what = "syntax error at position " + std::to_string(pos_ + 1) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) what += expected.size() == 2 ? " " : ", ";
      if (i > 0 && i + 1 == expected.size()) what += "or ";
      what += "'" + expected[i] + "'";
    }
    throw SyntaxError(pos_ + 1, std::move(expected), what);
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses a complete term; throws SyntaxError with position and expected set.
inline Term parse_term(std::string_view text) { return detail::TermParser(text).parse_all(); }

}  // namespace cobz
