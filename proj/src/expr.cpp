// Recursive-descent parser for the expression grammar.

#include "braidcat/expr.hpp"

#include <cctype>
#include <string>

namespace braidcat {

namespace {

struct Token {
  enum Kind { Int, Variable, Plus, Minus, Star, Slash, Caret, LParen,
              RParen, End } kind;
  std::size_t offset;
  Rational int_value;
  Var var;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    current_.offset = pos_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::End;
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '+': current_.kind = Token::Plus; ++pos_; return;
      case '-': current_.kind = Token::Minus; ++pos_; return;
      case '*': current_.kind = Token::Star; ++pos_; return;
      case '/': current_.kind = Token::Slash; ++pos_; return;
      case '^': current_.kind = Token::Caret; ++pos_; return;
      case '(': current_.kind = Token::LParen; ++pos_; return;
      case ')': current_.kind = Token::RParen; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      current_.kind = Token::Int;
      current_.int_value =
          Rational(std::string(text_.substr(start, pos_ - start)));
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      std::string name(1, c);
      ++pos_;
      if (c == 'z') {
        if (pos_ < text_.size() && text_[pos_] >= '1' && text_[pos_] <= '9') {
          name += text_[pos_];
          ++pos_;
        } else {
          throw ParseError("unknown variable name 'z'", start);
        }
      }
      auto v = var_by_name(name);
      if (!v) throw ParseError("unknown variable name '" + name + "'", start);
      current_.kind = Token::Variable;
      current_.var = *v;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
public:
  explicit Parser(std::string_view text) : lex_(text) {}

  RatFunc parse() {
    RatFunc r = expr();
    if (lex_.peek().kind != Token::End)
      throw ParseError("expected operator or end of input",
                       lex_.peek().offset);
    return r;
  }

private:
  RatFunc expr() {
    RatFunc r = term();
    while (true) {
      Token::Kind k = lex_.peek().kind;
      if (k == Token::Plus) {
        lex_.take();
        r = r + term();
      } else if (k == Token::Minus) {
        lex_.take();
        r = r - term();
      } else {
        return r;
      }
    }
  }

  RatFunc term() {
    RatFunc r = unary();
    while (true) {
      Token::Kind k = lex_.peek().kind;
      if (k == Token::Star) {
        lex_.take();
        r = r * unary();
      } else if (k == Token::Slash) {
        Token t = lex_.take();
        RatFunc d = unary();
        if (d.is_zero())
          throw ArithmeticError("division by zero at offset " +
                                std::to_string(t.offset));
        r = r / d;
      } else {
        return r;
      }
    }
  }

  RatFunc unary() {
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      return -unary();
    }
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (lex_.peek().kind == Token::Caret) {
      lex_.take();
      Token e = lex_.take();
      if (e.kind != Token::Int)
        throw ParseError("exponent must be a non-negative integer literal",
                         e.offset);
      if (!e.int_value.get_num().fits_slong_p())
        throw ParseError("exponent too large", e.offset);
      base = base.pow(e.int_value.get_num().get_si());
    }
    return base;
  }

  RatFunc atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Int:
        return RatFunc(t.int_value);
      case Token::Variable:
        return RatFunc::variable(t.var);
      case Token::LParen: {
        RatFunc r = expr();
        Token close = lex_.take();
        if (close.kind != Token::RParen)
          throw ParseError("expected ')'", close.offset);
        return r;
      }
      default:
        throw ParseError("expected integer, variable or '('", t.offset);
    }
  }

  Lexer lex_;
};

}  // namespace

RatFunc parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace braidcat
