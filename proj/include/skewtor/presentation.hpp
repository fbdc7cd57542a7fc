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

#include <optional>
#include <string>
#include <vector>

#include "skewtor/expr.hpp"
#include "skewtor/orechain.hpp"

namespace skewtor {

// Standalone torus data for the classify and eval commands.
struct TorusBlock {
  std::vector<std::string> generators;
  CommutationMatrix Q;
  std::vector<bool> inverted;
  std::optional<ToricAutomorphism> lambda;
  std::optional<std::vector<TorusElement>> images;

  SelectiveSpace space() const { return SelectiveSpace(Q, inverted); }
};

struct PresentationFile {
  ParameterContext params;
  std::vector<StageSpec> stages;
  std::optional<TorusBlock> torus;
};

// Parses the JSON presentation format. Errors carry the JSON path of the
// offending field, e.g. "stages[3].sigma[1]: ...".
PresentationFile parse_presentation(const std::string& text);
PresentationFile load_presentation(const std::string& path);

// Inverse of parse_presentation up to whitespace.
std::string write_presentation(const PresentationFile& file);

}  // namespace skewtor
