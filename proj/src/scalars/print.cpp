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

#include <sstream>

#include "skewtor/scalars.hpp"

namespace skewtor {
namespace {

std::string param_name(const ParameterContext& ctx, std::size_t i) {
  if (i < ctx.size()) return ctx.names()[i];
  return "p" + std::to_string(i + 1);
}

std::string power_product(const Exponents& e, const ParameterContext& ctx) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += param_name(ctx, i);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

// Unsigned rendering of |c| * x^e.
std::string term_body(const Rational& c, const Exponents& e,
                      const ParameterContext& ctx) {
  Rational a = abs(c);
  std::string mono = power_product(e, ctx);
  if (mono.empty()) return to_string(a);
  if (a == 1) return mono;
  return to_string(a) + "*" + mono;
}

}  // namespace

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const LaurentPoly& p, const ParameterContext& ctx) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool neg = c < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += term_body(c, e, ctx);
    first = false;
  }
  return out;
}

std::string to_string(const UnitMonomial& u, const ParameterContext& ctx) {
  std::string body = term_body(u.coeff(), u.exps(), ctx);
  return u.coeff() < 0 ? "-" + body : body;
}

std::string to_string(const FieldElement& f, const ParameterContext& ctx) {
  std::string n = to_string(f.num(), ctx);
  if (f.den().is_one()) return n;
  if (f.num().term_count() > 1) n = "(" + n + ")";
  return n + "/(" + to_string(f.den(), ctx) + ")";
}

bool needs_parens(const FieldElement& f) {
  return f.den().is_one() && f.num().term_count() > 1;
}

}  // namespace skewtor
