#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gacalc/errors.hpp"
#include "gacalc/multivector.hpp"
#include "gacalc/scalar.hpp"
#include "gacalc/structure.hpp"

namespace gacalc {

// Abstract syntax of the calculator language. Precedence, high to low:
// function calls, unary minus, the product tier (* ^ x, left-associative,
// deliberately one level), then + and -.
struct Expr {
  enum class Kind {
    kNumber,     // literal (rational "p/q" text, or decimal in float mode)
    kBlade,      // e0, e13, e1_11
    kNeg,
    kAdd,
    kSub,
    kMul,        // geometric product
    kWedge,      // exterior product
    kCommutator, // infix x or cmt(a, b)
    kInv,
    kGradeInv,   // gi(a)
    kGradePart,  // grade(a, k)
  };

  Kind kind;
  std::size_t offset = 0;
  std::string literal;               // kNumber
  std::vector<std::size_t> indices;  // kBlade
  std::size_t grade_k = 0;           // kGradePart
  std::shared_ptr<const Expr> a, b;
};

using ExprPtr = std::shared_ptr<const Expr>;

struct ParseOptions {
  std::size_t dim = 4;          // blade indices must be < dim
  bool float_literals = false;  // accept decimals and exponents
};

namespace detail {

struct Token {
  enum class Type { kNumber, kBlade, kIdent, kPlus, kMinus, kStar, kCaret, kCross,
                    kLParen, kRParen, kComma, kEnd };
  Type type;
  std::size_t offset;
  std::string text;
  std::vector<std::size_t> indices;  // kBlade
};

class Lexer {
 public:
  Lexer(std::string_view src, const ParseOptions& opt) : src_(src), opt_(opt) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      if (pos_ >= src_.size()) {
        out.push_back({Token::Type::kEnd, pos_, "", {}});
        return out;
      }
      const char c = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back(number());
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        out.push_back(word());
      } else {
        out.push_back(symbol());
      }
    }
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool digit_at(std::size_t i) const {
    return i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]));
  }

  Token number() {
    const std::size_t start = pos_;
    while (digit_at(pos_)) ++pos_;
    if (opt_.float_literals) {
      if (pos_ < src_.size() && src_[pos_] == '.' && digit_at(pos_ + 1)) {
        ++pos_;
        while (digit_at(pos_)) ++pos_;
      }
      // 'e' starts an exponent only when digits follow; otherwise it is a
      // blade literal after this number.
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        std::size_t j = pos_ + 1;
        if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
        if (digit_at(j)) {
          pos_ = j;
          while (digit_at(pos_)) ++pos_;
        }
      }
    } else if (pos_ < src_.size() && src_[pos_] == '/' && digit_at(pos_ + 1)) {
      ++pos_;
      while (digit_at(pos_)) ++pos_;
    }
    return {Token::Type::kNumber, start, std::string(src_.substr(start, pos_ - start)), {}};
  }

  Token word() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    const std::string text(src_.substr(start, pos_ - start));
    if (text == "x") return {Token::Type::kCross, start, text, {}};
    if (text.size() > 1 && text[0] == 'e' && blade_body(text.substr(1))) {
      Token t{Token::Type::kBlade, start, text, {}};
      t.indices = blade_indices(text.substr(1), start);
      return t;
    }
    return {Token::Type::kIdent, start, text, {}};
  }

  static bool blade_body(std::string_view body) {
    for (char c : body)
      if (!std::isdigit(static_cast<unsigned char>(c)) && c != '_') return false;
    return !body.empty();
  }

  std::vector<std::size_t> blade_indices(std::string_view body, std::size_t offset) const {
    std::vector<std::size_t> idx;
    if (body.find('_') != std::string_view::npos) {
      std::size_t i = 0;
      while (i <= body.size()) {
        const std::size_t j = body.find('_', i);
        const std::string_view part = body.substr(i, j == std::string_view::npos ? body.size() - i
                                                                                 : j - i);
        if (part.empty()) throw SyntaxError("malformed blade literal", offset);
        idx.push_back(std::stoul(std::string(part)));
        if (j == std::string_view::npos) break;
        i = j + 1;
      }
    } else {
      for (char c : body) idx.push_back(static_cast<std::size_t>(c - '0'));
    }
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k > 0 && idx[k] <= idx[k - 1])
        throw SyntaxError("blade indices must be strictly ascending", offset);
      if (idx[k] >= opt_.dim)
        throw UnknownBlade("blade index " + std::to_string(idx[k]) +
                           " outside algebra of dimension " + std::to_string(opt_.dim));
    }
    return idx;
  }

  Token symbol() {
    const std::size_t at = pos_;
    const char c = src_[pos_++];
    switch (c) {
      case '+': return {Token::Type::kPlus, at, "+", {}};
      case '-': return {Token::Type::kMinus, at, "-", {}};
      case '*': return {Token::Type::kStar, at, "*", {}};
      case '^': return {Token::Type::kCaret, at, "^", {}};
      case '(': return {Token::Type::kLParen, at, "(", {}};
      case ')': return {Token::Type::kRParen, at, ")", {}};
      case ',': return {Token::Type::kComma, at, ",", {}};
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", at);
    }
  }

  std::string_view src_;
  ParseOptions opt_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ExprPtr run() {
    ExprPtr e = sum();
    expect(Token::Type::kEnd, "end of input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& advance() { return toks_[i_++]; }

  bool accept(Token::Type t) {
    if (peek().type != t) return false;
    ++i_;
    return true;
  }

  void expect(Token::Type t, const std::string& what) {
    if (!accept(t))
      throw SyntaxError("expected " + what, peek().offset, {what});
  }

  ExprPtr sum() {
    ExprPtr lhs = product();
    while (true) {
      if (accept(Token::Type::kPlus)) {
        lhs = binary(Expr::Kind::kAdd, lhs, product());
      } else if (accept(Token::Type::kMinus)) {
        lhs = binary(Expr::Kind::kSub, lhs, product());
      } else {
        return lhs;
      }
    }
  }

  // One tier for all three products; parenthesize to mix intents.
  ExprPtr product() {
    ExprPtr lhs = unary();
    while (true) {
      if (accept(Token::Type::kStar)) {
        lhs = binary(Expr::Kind::kMul, lhs, unary());
      } else if (accept(Token::Type::kCaret)) {
        lhs = binary(Expr::Kind::kWedge, lhs, unary());
      } else if (accept(Token::Type::kCross)) {
        lhs = binary(Expr::Kind::kCommutator, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (peek().type == Token::Type::kMinus) {
      const std::size_t at = advance().offset;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::kNeg;
      e->offset = at;
      e->a = unary();
      return e;
    }
    return primary();
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.type) {
      case Token::Type::kNumber: {
        advance();
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::kNumber;
        e->offset = t.offset;
        e->literal = t.text;
        return e;
      }
      case Token::Type::kBlade: {
        advance();
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::kBlade;
        e->offset = t.offset;
        e->indices = t.indices;
        return e;
      }
      case Token::Type::kLParen: {
        advance();
        ExprPtr e = sum();
        expect(Token::Type::kRParen, ")");
        return e;
      }
      case Token::Type::kIdent:
        return call();
      default:
        throw SyntaxError("expected a value", t.offset,
                          {"number", "blade", "(", "-", "function"});
    }
  }

  ExprPtr call() {
    const Token name = advance();
    expect(Token::Type::kLParen, "(");
    auto e = std::make_shared<Expr>();
    e->offset = name.offset;
    if (name.text == "inv" || name.text == "gi") {
      e->kind = name.text == "inv" ? Expr::Kind::kInv : Expr::Kind::kGradeInv;
      e->a = sum();
    } else if (name.text == "cmt") {
      e->kind = Expr::Kind::kCommutator;
      e->a = sum();
      expect(Token::Type::kComma, ",");
      e->b = sum();
    } else if (name.text == "grade") {
      e->kind = Expr::Kind::kGradePart;
      e->a = sum();
      expect(Token::Type::kComma, ",");
      const Token& k = peek();
      if (k.type != Token::Type::kNumber || k.text.find_first_not_of("0123456789") !=
                                                std::string::npos)
        throw SyntaxError("expected an integer grade", k.offset, {"integer"});
      advance();
      e->grade_k = std::stoul(k.text);
    } else {
      throw SyntaxError("unknown function '" + name.text + "'", name.offset,
                        {"inv", "gi", "grade", "cmt"});
    }
    expect(Token::Type::kRParen, ")");
    return e;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;

  static ExprPtr binary(Expr::Kind kind, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->offset = a->offset;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
  }
};

}  // namespace detail

inline ExprPtr parse(std::string_view src, const ParseOptions& opt) {
  return detail::Parser(detail::Lexer(src, opt).run()).run();
}

template <ScalarField S>
Multivector<S> eval(const Expr& e, const typename Algebra<S>::Ptr& alg) {
  switch (e.kind) {
    case Expr::Kind::kNumber: {
      auto v = scalar_traits<S>::parse(e.literal);
      if (!v) throw SyntaxError("bad numeric literal '" + e.literal + "'", e.offset);
      return Multivector<S>::scalar(alg, *v);
    }
    case Expr::Kind::kBlade: {
      BladeMask mask = 0;
      for (std::size_t i : e.indices) {
        if (i >= alg->dim())
          throw UnknownBlade("blade index " + std::to_string(i) +
                             " outside algebra of dimension " + std::to_string(alg->dim()));
        mask |= BladeMask{1} << i;
      }
      return Multivector<S>::blade(alg, mask);
    }
    case Expr::Kind::kNeg: return -eval<S>(*e.a, alg);
    case Expr::Kind::kAdd: return eval<S>(*e.a, alg) + eval<S>(*e.b, alg);
    case Expr::Kind::kSub: return eval<S>(*e.a, alg) - eval<S>(*e.b, alg);
    case Expr::Kind::kMul: return eval<S>(*e.a, alg) * eval<S>(*e.b, alg);
    case Expr::Kind::kWedge: return eval<S>(*e.a, alg) ^ eval<S>(*e.b, alg);
    case Expr::Kind::kCommutator: return commutator(eval<S>(*e.a, alg), eval<S>(*e.b, alg));
    case Expr::Kind::kInv: return inverse(eval<S>(*e.a, alg));
    case Expr::Kind::kGradeInv: return eval<S>(*e.a, alg).grade_involution();
    case Expr::Kind::kGradePart: return eval<S>(*e.a, alg).grade_part(e.grade_k);
  }
  throw Error("unreachable expression kind");
}

// Parse with the algebra's dimension and evaluate in one step.
template <ScalarField S>
Multivector<S> eval_expression(std::string_view src, const typename Algebra<S>::Ptr& alg) {
  ParseOptions opt;
  opt.dim = alg->dim();
  opt.float_literals = !scalar_traits<S>::exact;
  return eval<S>(*parse(src, opt), alg);
}

}  // namespace gacalc
