/*
   Copyright 2026 The skewtor authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "skewtor/expr.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace skewtor {
namespace {

struct Token {
  enum class Type { Number, Name, Op, End } type;
  std::string text;
  std::size_t pos;
};

[[noreturn]] void syntax(std::size_t pos, const std::string& msg) {
  fail(ErrorKind::SyntaxError, "column " + std::to_string(pos + 1) + ": " + msg);
}

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = s[i];
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Type::Number, s.substr(i, j - i), i});
      i = j;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Token::Type::Name, s.substr(i, j - i), i});
      i = j;
    } else if (std::string("+-*/^()").find(char(c)) != std::string::npos) {
      out.push_back({Token::Type::Op, std::string(1, char(c)), i});
      ++i;
    } else {
      syntax(i, std::string("unexpected character '") + char(c) + "'");
    }
  }
  out.push_back({Token::Type::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : toks_(tokenize(s)) {}

  Expr parse() {
    if (peek().type == Token::Type::End) syntax(peek().pos, "empty expression");
    Expr e = expr();
    if (peek().type != Token::Type::End) syntax(peek().pos, "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  bool is_op(const char* op) const {
    return peek().type == Token::Type::Op && peek().text == op;
  }
  Token take() { return toks_[i_++]; }

  static Expr node(ExprNode::Kind k, std::size_t pos, Expr l = nullptr, Expr r = nullptr) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->pos = pos;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
  }

  Expr expr() {
    Expr e;
    if (is_op("-") || is_op("+")) {
      Token t = take();
      Expr first = term();
      e = t.text == "-" ? node(ExprNode::Kind::Neg, t.pos, first) : first;
    } else {
      e = term();
    }
    while (is_op("+") || is_op("-")) {
      Token t = take();
      Expr r = term();
      e = node(t.text == "+" ? ExprNode::Kind::Add : ExprNode::Kind::Sub, t.pos, e, r);
    }
    return e;
  }

  Expr term() {
    Expr e = factor();
    while (true) {
      if (is_op("*") || is_op("/")) {
        Token t = take();
        Expr r = factor();
        e = node(t.text == "*" ? ExprNode::Kind::Mul : ExprNode::Kind::Div, t.pos, e, r);
      } else if (peek().type == Token::Type::Name || peek().type == Token::Type::Number ||
                 is_op("(")) {
        syntax(peek().pos, "missing '*' before '" + peek().text + "'");
      } else {
        return e;
      }
    }
  }

  Expr factor() {
    Expr a = atom();
    if (!is_op("^")) return a;
    Token caret = take();
    bool neg = false;
    if (is_op("-") || is_op("+")) neg = take().text == "-";
    if (peek().type != Token::Type::Number) syntax(peek().pos, "expected integer exponent after '^'");
    Token num = take();
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Pow;
    n->pos = caret.pos;
    n->lhs = a;
    try {
      n->power = std::stoll(num.text);
    } catch (...) {
      syntax(num.pos, "exponent out of range");
    }
    if (neg) n->power = -n->power;
    if (is_op("^")) syntax(peek().pos, "chained exponents are not allowed");
    return n;
  }

  Expr atom() {
    const Token& t = peek();
    if (t.type == Token::Type::Number) {
      Token n = take();
      auto e = std::make_shared<ExprNode>();
      e->kind = ExprNode::Kind::Number;
      e->number = Rational(mpz_class(n.text));
      e->pos = n.pos;
      return e;
    }
    if (t.type == Token::Type::Name) {
      Token n = take();
      auto e = std::make_shared<ExprNode>();
      e->kind = ExprNode::Kind::Symbol;
      e->name = n.text;
      e->pos = n.pos;
      return e;
    }
    if (is_op("(")) {
      take();
      if (is_op(")")) syntax(peek().pos, "empty parentheses");
      Expr e = expr();
      if (!is_op(")")) syntax(peek().pos, "expected ')'");
      take();
      return e;
    }
    if (t.type == Token::Type::End) syntax(t.pos, "unexpected end of expression");
    syntax(t.pos, "unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

[[noreturn]] void unknown(const ExprNode& n) {
  fail(ErrorKind::UnknownIdentifier,
       "column " + std::to_string(n.pos + 1) + ": unknown identifier '" + n.name + "'");
}

template <class Algebra>
typename Algebra::Value eval(const ExprNode& n, const Algebra& A) {
  using K = ExprNode::Kind;
  switch (n.kind) {
    case K::Number: return A.number(n.number);
    case K::Symbol: return A.symbol(n);
    case K::Neg: return A.neg(eval(*n.lhs, A));
    case K::Add: return A.add(eval(*n.lhs, A), eval(*n.rhs, A));
    case K::Sub: return A.add(eval(*n.lhs, A), A.neg(eval(*n.rhs, A)));
    case K::Mul: return A.mul(eval(*n.lhs, A), eval(*n.rhs, A));
    case K::Div: return A.mul(eval(*n.lhs, A), A.inverse(eval(*n.rhs, A), n));
    case K::Pow: {
      auto base = eval(*n.lhs, A);
      if (n.power < 0) base = A.inverse(base, n);
      std::int64_t k = n.power < 0 ? -n.power : n.power;
      auto r = A.number(Rational(1));
      for (std::int64_t i = 0; i < k; ++i) r = A.mul(r, base);
      return r;
    }
  }
  fail(ErrorKind::SyntaxError, "bad expression node");
}

struct ScalarAlgebra {
  using Value = FieldElement;
  const ParameterContext& ctx;
  Value number(const Rational& r) const { return r; }
  Value symbol(const ExprNode& n) const {
    auto i = ctx.index_of(n.name);
    if (!i) unknown(n);
    return FieldElement(UnitMonomial::parameter(*i));
  }
  Value neg(const Value& a) const { return -a; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value inverse(const Value& a, const ExprNode& n) const {
    if (a.is_zero())
      fail(ErrorKind::DivisionByZero, "column " + std::to_string(n.pos + 1) + ": division by zero");
    return a.inverse();
  }
};

std::unordered_map<std::string, std::size_t> index_names(const std::vector<std::string>& v) {
  std::unordered_map<std::string, std::size_t> m;
  for (std::size_t i = 0; i < v.size(); ++i) m.emplace(v[i], i);
  return m;
}

struct TorusAlgebra {
  using Value = TorusElement;
  const ParameterContext& ctx;
  std::unordered_map<std::string, std::size_t> gens;
  const CommutationMatrix& Q;
  std::size_t n() const { return Q.size(); }
  Value number(const Rational& r) const { return TorusElement::constant(n(), r); }
  Value symbol(const ExprNode& s) const {
    if (auto i = ctx.index_of(s.name))
      return TorusElement::constant(n(), FieldElement(UnitMonomial::parameter(*i)));
    auto it = gens.find(s.name);
    if (it == gens.end()) unknown(s);
    return TorusElement::generator(n(), it->second);
  }
  Value neg(const Value& a) const { return -a; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return elem_mul(Q, a, b); }
  Value inverse(const Value& a, const ExprNode& node) const {
    if (a.size() != 1)
      fail(ErrorKind::InputError, "column " + std::to_string(node.pos + 1) +
                                      ": only single-term elements can be inverted");
    return elem_inverse(Q, a);
  }
};

struct FreeAlgebra {
  using Value = FreePoly;
  const ParameterContext& ctx;
  std::unordered_map<std::string, std::size_t> gens;
  Value number(const Rational& r) const {
    FreePoly p;
    if (r != 0) p.terms.push_back({FieldElement(r), Word{}});
    return p;
  }
  Value symbol(const ExprNode& s) const {
    FreePoly p;
    if (auto i = ctx.index_of(s.name)) {
      p.terms.push_back({FieldElement(UnitMonomial::parameter(*i)), Word{}});
      return p;
    }
    auto it = gens.find(s.name);
    if (it == gens.end()) unknown(s);
    p.terms.push_back({FieldElement(1), Word{{{it->second, 1}}}});
    return p;
  }
  Value neg(Value a) const {
    for (auto& t : a.terms) t.first = -t.first;
    return a;
  }
  Value add(Value a, const Value& b) const {
    a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
    return a;
  }
  Value mul(const Value& a, const Value& b) const {
    FreePoly r;
    for (const auto& [ca, wa] : a.terms)
      for (const auto& [cb, wb] : b.terms) {
        Word w = wa;
        for (const auto& l : wb.letters) {
          if (!w.letters.empty() && w.letters.back().first == l.first) {
            w.letters.back().second += l.second;
            if (w.letters.back().second == 0) w.letters.pop_back();
          } else {
            w.letters.push_back(l);
          }
        }
        FieldElement c = ca * cb;
        if (!c.is_zero()) r.terms.push_back({c, std::move(w)});
      }
    return r;
  }
  Value inverse(const Value& a, const ExprNode& node) const {
    if (a.terms.size() != 1 || a.terms[0].first.is_zero())
      fail(ErrorKind::InputError, "column " + std::to_string(node.pos + 1) +
                                      ": only single-term elements can be inverted");
    const auto& [c, w] = a.terms[0];
    Word inv;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
      inv.letters.push_back({it->first, -it->second});
    FreePoly r;
    r.terms.push_back({c.inverse(), inv});
    return r;
  }
};

}  // namespace

Expr parse_expression(const std::string& text) { return Parser(text).parse(); }

FieldElement eval_scalar(const Expr& e, const ParameterContext& ctx) {
  return eval(*e, ScalarAlgebra{ctx});
}

UnitMonomial eval_unit(const Expr& e, const ParameterContext& ctx) {
  FieldElement f = eval_scalar(e, ctx);
  auto u = f.as_unit_monomial();
  if (!u)
    fail(ErrorKind::InputError, "expected a unit monomial (rational times parameter powers), got " +
                                    to_string(f, ctx));
  return *u;
}

TorusElement eval_torus(const Expr& e, const ParameterContext& ctx,
                        const std::vector<std::string>& generators,
                        const CommutationMatrix& Q) {
  return eval(*e, TorusAlgebra{ctx, index_names(generators), Q});
}

FreePoly eval_free(const Expr& e, const ParameterContext& ctx,
                   const std::vector<std::string>& generators) {
  FreePoly raw = eval(*e, FreeAlgebra{ctx, index_names(generators)});
  // Collect like words, keeping first-occurrence order.
  FreePoly out;
  for (const auto& [c, w] : raw.terms) {
    auto it = std::find_if(out.terms.begin(), out.terms.end(),
                           [&](const auto& t) { return t.second.letters == w.letters; });
    if (it == out.terms.end())
      out.terms.push_back({c, w});
    else
      it->first += c;
  }
  std::erase_if(out.terms, [](const auto& t) { return t.first.is_zero(); });
  return out;
}

std::string to_string(const FreePoly& f, const ParameterContext& ctx,
                      const std::vector<std::string>& generators) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [c, w] : f.terms) {
    std::string word;
    for (const auto& [k, p] : w.letters) {
      if (!word.empty()) word += "*";
      word += generators.at(k);
      if (p != 1) word += "^" + std::to_string(p);
    }
    std::string coeff = to_string(c, ctx);
    if (needs_parens(c)) coeff = "(" + coeff + ")";
    bool neg = coeff[0] == '-';
    if (neg) coeff.erase(0, 1);
    std::string body = word.empty() ? coeff : coeff == "1" ? word : coeff + "*" + word;
    if (out.empty())
      out = neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

FieldElement parse_scalar(const std::string& text, const ParameterContext& ctx) {
  return eval_scalar(parse_expression(text), ctx);
}

UnitMonomial parse_unit(const std::string& text, const ParameterContext& ctx) {
  return eval_unit(parse_expression(text), ctx);
}

TorusElement parse_torus(const std::string& text, const ParameterContext& ctx,
                         const std::vector<std::string>& generators,
                         const CommutationMatrix& Q) {
  return eval_torus(parse_expression(text), ctx, generators, Q);
}

}  // namespace skewtor
