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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "skewtor/orechain.hpp"

namespace skewtor {

// Rendered, printer-independent view of an Outcome. Every algebraic value
// is stored in its printed normal form so reports compare as plain data.
struct ComponentEntry {
  std::vector<std::int64_t> weight;
  std::string kind;  // zero | inner | locally_inner | outer
  std::optional<std::string> exceptional;  // generator name for locally_inner
  std::string inducer;
  std::vector<std::string> coeffs;
  bool operator==(const ComponentEntry&) const = default;
};

struct StageEntry {
  std::size_t stage = 0;  // one-based, as in the presentation
  std::string adjoined;
  std::vector<std::string> lambda;
  std::vector<std::string> delta;  // images in canonical generators
  std::vector<ComponentEntry> components;
  std::vector<std::string> J;
  std::string t;
  std::string generator;
  std::vector<std::string> q_row;
  std::vector<std::string> normal_table;
  bool operator==(const StageEntry&) const = default;
};

struct WeylCertificate {
  std::size_t stage = 0;
  std::string adjoined;
  std::vector<std::int64_t> weight;
  std::string p;
  std::string shift;
  std::string divisor;
  std::string u;
  bool cleared = false;
  std::vector<std::string> unprocessed;
  bool operator==(const WeylCertificate&) const = default;
};

struct Report {
  std::string outcome;                  // torus_embedding | weyl_witness | input_error
  std::vector<std::string> parameters;
  std::vector<std::string> generators;  // with ^±1 markers on inverted ones
  std::vector<std::vector<std::string>> matrix;
  std::vector<std::string> inverted;
  std::vector<std::string> provenance;
  std::optional<WeylCertificate> witness;
  std::vector<StageEntry> trace;
  std::string diagnostic;
  bool operator==(const Report&) const = default;
};

Report make_report(const Outcome& outcome, const ParameterContext& ctx,
                   const std::vector<StageSpec>& stages, bool with_trace);

nlohmann::ordered_json to_json(const Report& r);
Report report_from_json(const nlohmann::ordered_json& j);

// Prose rendering: one paragraph per stage, then the final space.
std::string render_text(const Report& r);

std::string classification_kind(const Classification& c);
ComponentEntry component_entry(const ComponentReport& c, const ParameterContext& ctx,
                               const std::vector<std::string>& names);

}  // namespace skewtor
