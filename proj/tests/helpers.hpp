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

#include <string>
#include <vector>

#include "skewtor/expr.hpp"
#include "skewtor/presentation.hpp"

namespace skewtor::test {

inline std::string data_path(const std::string& name) {
  return std::string(SKEWTOR_SOURCE_DIR) + "/presentations/" + name;
}

inline PresentationFile load(const std::string& name) { return load_presentation(data_path(name)); }

// Parsing shorthands within a fixed context.
struct Ctx {
  ParameterContext params;
  std::vector<std::string> gens;
  CommutationMatrix Q;

  FieldElement s(const std::string& e) const { return parse_scalar(e, params); }
  UnitMonomial u(const std::string& e) const { return parse_unit(e, params); }
  TorusElement t(const std::string& e) const { return parse_torus(e, params, gens, Q); }
  std::string str(const TorusElement& e) const { return to_string(e, params, gens); }
  std::vector<UnitMonomial> us(const std::vector<std::string>& v) const {
    std::vector<UnitMonomial> out;
    for (const auto& e : v) out.push_back(u(e));
    return out;
  }
  std::vector<TorusElement> ts(const std::vector<std::string>& v) const {
    std::vector<TorusElement> out;
    for (const auto& e : v) out.push_back(t(e));
    return out;
  }
};

// x y = q y x on generators named x, y (or the given names).
inline Ctx quantum_plane(std::vector<std::string> gens = {"x", "y"},
                         std::vector<std::string> params = {"q"}) {
  Ctx c{ParameterContext(params), gens, {}};
  c.Q = CommutationMatrix::from_upper(2, {c.u("q")});
  return c;
}

// The 3-generator matrix with q_12 = q, q_13 = p, q_23 = r.
inline Ctx pqr_space(std::vector<std::string> params = {"q", "p", "r", "l1"}) {
  Ctx c{ParameterContext(params), {"x1", "x2", "x3"}, {}};
  c.Q = CommutationMatrix::from_upper(3, {c.u("q"), c.u("p"), c.u("r")});
  return c;
}

}  // namespace skewtor::test
