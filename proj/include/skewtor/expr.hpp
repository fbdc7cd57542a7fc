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

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "skewtor/orechain.hpp"

namespace skewtor {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := atom ('^' INT)?
// atom   := RATIONAL | NAME | '(' expr ')'
struct ExprNode {
  enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind = Kind::Number;
  Rational number;
  std::string name;
  std::int64_t power = 0;
  std::shared_ptr<const ExprNode> lhs, rhs;
  std::size_t pos = 0;  // zero-based column of the node's first token
};
using Expr = std::shared_ptr<const ExprNode>;

// Throws SyntaxError naming the 1-based column.
Expr parse_expression(const std::string& text);

FieldElement eval_scalar(const Expr& e, const ParameterContext& ctx);
// Result must be a nonzero rational times parameter powers.
UnitMonomial eval_unit(const Expr& e, const ParameterContext& ctx);
TorusElement eval_torus(const Expr& e, const ParameterContext& ctx,
                        const std::vector<std::string>& generators,
                        const CommutationMatrix& Q);
FreePoly eval_free(const Expr& e, const ParameterContext& ctx,
                   const std::vector<std::string>& generators);

std::string to_string(const FreePoly& f, const ParameterContext& ctx,
                      const std::vector<std::string>& generators);

// Convenience wrappers: parse then evaluate.
FieldElement parse_scalar(const std::string& text, const ParameterContext& ctx);
UnitMonomial parse_unit(const std::string& text, const ParameterContext& ctx);
TorusElement parse_torus(const std::string& text, const ParameterContext& ctx,
                         const std::vector<std::string>& generators,
                         const CommutationMatrix& Q);

}  // namespace skewtor
