#pragma once

#include <cctype>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "weyl/normal_order.hpp"

namespace weyl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct RationalLit {
  Rational value;
};
struct CSym {};
struct IdentitySym {};
struct GenSym {
  Gen gen;
};
struct NegNode {
  ExprPtr inner;
};
struct PowNode {
  ExprPtr base;
  int exponent;
};
struct MulNode {
  ExprPtr lhs;
  ExprPtr rhs;
};
struct AddNode {
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Expr {
  std::variant<RationalLit, CSym, IdentitySym, GenSym, NegNode, PowNode,
               MulNode, AddNode>
      node;
};

namespace detail {

enum class Tok {
  gen_p,
  gen_q,
  c_sym,
  ident,
  integer,
  plus,
  minus,
  star,
  caret,
  slash,
  lparen,
  rparen,
  end
};

struct Token {
  Tok kind;
  std::size_t pos;
  int index = 0;   // generator index
  BigInt value;    // integer literal
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digits = [&](std::size_t start) -> std::pair<BigInt, std::size_t> {
    std::size_t j = start;
    while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
      ++j;
    if (j == start) throw parse_error("expected digits", start);
    return {BigInt(std::string(src.substr(start, j - start))), j};
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    switch (ch) {
      case '+': out.push_back({Tok::plus, i++}); continue;
      case '-': out.push_back({Tok::minus, i++}); continue;
      case '*': out.push_back({Tok::star, i++}); continue;
      case '^': out.push_back({Tok::caret, i++}); continue;
      case '/': out.push_back({Tok::slash, i++}); continue;
      case '(': out.push_back({Tok::lparen, i++}); continue;
      case ')': out.push_back({Tok::rparen, i++}); continue;
      default: break;
    }
    if (ch == 'p' || ch == 'q') {
      auto [value, next] = digits(i + 1);
      if (value < 1 || value > std::numeric_limits<int>::max()) {
        throw parse_error("generator index out of range", i);
      }
      Token t{ch == 'p' ? Tok::gen_p : Tok::gen_q, i};
      t.index = static_cast<int>(value);
      out.push_back(t);
      i = next;
      continue;
    }
    if (ch == 'c') {
      out.push_back({Tok::c_sym, i++});
      continue;
    }
    if (ch == 'I') {
      out.push_back({Tok::ident, i++});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      auto [value, next] = digits(i);
      if (next < src.size() && src[next] == '.') {
        throw parse_error("decimal literals are not supported", next);
      }
      Token t{Tok::integer, i};
      t.value = value;
      out.push_back(t);
      i = next;
      continue;
    }
    throw parse_error(std::string("unexpected character '") + ch + "'", i);
  }
  out.push_back({Tok::end, src.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  ExprPtr run() {
    ExprPtr e = expr();
    expect(Tok::end, "unexpected trailing input");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  void expect(Tok kind, const char* msg) {
    if (peek().kind != kind) throw parse_error(msg, peek().pos);
    ++pos_;
  }

  static ExprPtr make(Expr e) { return std::make_shared<Expr>(std::move(e)); }

  static bool atom_start(Tok kind) {
    switch (kind) {
      case Tok::gen_p:
      case Tok::gen_q:
      case Tok::c_sym:
      case Tok::ident:
      case Tok::integer:
      case Tok::lparen:
        return true;
      default:
        return false;
    }
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = take().kind == Tok::minus;
      ExprPtr rhs = term();
      if (minus) rhs = make(Expr{NegNode{std::move(rhs)}});
      lhs = make(Expr{AddNode{std::move(lhs), std::move(rhs)}});
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (true) {
      if (peek().kind == Tok::star) {
        take();
      } else if (!atom_start(peek().kind)) {
        break;  // juxtaposition only begins at an atom
      }
      ExprPtr rhs = factor();
      lhs = make(Expr{MulNode{std::move(lhs), std::move(rhs)}});
    }
    return lhs;
  }

  ExprPtr factor() {
    if (peek().kind == Tok::minus) {
      take();
      ExprPtr inner = factor();
      return make(Expr{NegNode{std::move(inner)}});
    }
    auto [atom_expr, may_pow] = atom();
    if (peek().kind == Tok::caret) {
      const std::size_t caret_pos = take().pos;
      if (!may_pow) {
        throw parse_error("exponent requires a generator, c, or a "
                          "parenthesized expression",
                          caret_pos);
      }
      return make(Expr{PowNode{std::move(atom_expr), exponent_literal()}});
    }
    return atom_expr;
  }

  int exponent_literal() {
    bool neg = false;
    if (peek().kind == Tok::minus) {
      take();
      neg = true;
    }
    if (peek().kind != Tok::integer) {
      throw parse_error("expected integer exponent", peek().pos);
    }
    const Token t = take();
    if (t.value > std::numeric_limits<int>::max()) {
      throw parse_error("exponent too large", t.pos);
    }
    const int e = static_cast<int>(t.value);
    return neg ? -e : e;
  }

  // returns (expression, may carry an exponent)
  std::pair<ExprPtr, bool> atom() {
    const Token t = take();
    switch (t.kind) {
      case Tok::gen_p:
        return {make(Expr{GenSym{p_gen(t.index)}}), true};
      case Tok::gen_q:
        return {make(Expr{GenSym{q_gen(t.index)}}), true};
      case Tok::c_sym:
        return {make(Expr{CSym{}}), true};
      case Tok::ident:
        return {make(Expr{IdentitySym{}}), false};
      case Tok::integer: {
        BigInt num = t.value;
        BigInt den = 1;
        if (peek().kind == Tok::slash) {
          const std::size_t slash_pos = take().pos;
          if (peek().kind != Tok::integer) {
            throw parse_error("expected denominator digits", peek().pos);
          }
          den = take().value;
          if (den == 0) throw parse_error("zero denominator", slash_pos);
        }
        return {make(Expr{RationalLit{Rational(num, den)}}), false};
      }
      case Tok::lparen: {
        ExprPtr inner = expr();
        expect(Tok::rparen, "expected ')'");
        return {inner, true};
      }
      default:
        throw parse_error("expected an operand", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

inline void collect_max_index(const Expr& e, int& best) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, GenSym>) {
          best = std::max(best, node.gen.index);
        } else if constexpr (std::is_same_v<T, NegNode>) {
          collect_max_index(*node.inner, best);
        } else if constexpr (std::is_same_v<T, PowNode>) {
          collect_max_index(*node.base, best);
        } else if constexpr (std::is_same_v<T, MulNode> ||
                             std::is_same_v<T, AddNode>) {
          collect_max_index(*node.lhs, best);
          collect_max_index(*node.rhs, best);
        }
      },
      e.node);
}

}  // namespace detail

// Parse without binding to a context (indices only need to be >= 1).
inline ExprPtr parse_expression(std::string_view src) {
  return detail::Parser(src).run();
}

inline int max_gen_index(const Expr& e) {
  int best = 0;
  detail::collect_max_index(e, best);
  return best;
}

// Parse and check generator indices against the context.
inline ExprPtr parse(std::string_view src, const Context& ctx) {
  ExprPtr e = parse_expression(src);
  const int top = max_gen_index(*e);
  if (top > ctx.n_pairs) {
    throw invalid_generator("generator index " + std::to_string(top) +
                            " outside 1.." + std::to_string(ctx.n_pairs));
  }
  return e;
}

// Evaluate the syntax tree in the algebra; products keep their source
// order and are normal-ordered as they are multiplied out.
inline Element lower(const Expr& e, const Context& ctx) {
  return std::visit(
      [&](const auto& node) -> Element {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, RationalLit>) {
          return Element::from_monomial(NormalMonomial::identity(),
                                        ctx.cs_constant(node.value), ctx);
        } else if constexpr (std::is_same_v<T, CSym>) {
          return Element::from_monomial(NormalMonomial::identity(),
                                        ctx.cs_c_power(1, 1), ctx);
        } else if constexpr (std::is_same_v<T, IdentitySym>) {
          return Element::identity(ctx);
        } else if constexpr (std::is_same_v<T, GenSym>) {
          Word w;
          w.append(node.gen, 1);
          return normal_order(w, ctx);
        } else if constexpr (std::is_same_v<T, NegNode>) {
          return -lower(*node.inner, ctx);
        } else if constexpr (std::is_same_v<T, PowNode>) {
          if (const auto* gen = std::get_if<GenSym>(&node.base->node)) {
            Word w;
            w.append(gen->gen, node.exponent);
            return normal_order(w, ctx);
          }
          if (std::holds_alternative<CSym>(node.base->node)) {
            if (node.exponent < 0) {
              throw negative_exponent("c has no inverse");
            }
            return Element::from_monomial(NormalMonomial::identity(),
                                          ctx.cs_c_power(node.exponent, 1),
                                          ctx);
          }
          if (node.exponent < 0) {
            throw negative_exponent(
                "negative exponents require a generator base");
          }
          Element base = lower(*node.base, ctx);
          Element out = Element::identity(ctx);
          for (int t = 0; t < node.exponent; ++t) out = out * base;
          return out;
        } else if constexpr (std::is_same_v<T, MulNode>) {
          return lower(*node.lhs, ctx) * lower(*node.rhs, ctx);
        } else {
          return lower(*node.lhs, ctx) + lower(*node.rhs, ctx);
        }
      },
      e.node);
}

inline Element parse_element(std::string_view src, const Context& ctx) {
  return lower(*parse(src, ctx), ctx);
}

}  // namespace weyl
