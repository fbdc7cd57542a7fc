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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skewtor/ore.hpp"
#include "skewtor/skewder.hpp"

namespace skewtor {

// Noncommutative polynomial in the original generators, kept unexpanded:
// each term is a coefficient times a word of (generator, power) letters.
struct Word {
  std::vector<std::pair<std::size_t, std::int64_t>> letters;
};
struct FreePoly {
  std::vector<std::pair<FieldElement, Word>> terms;
  bool is_zero() const { return terms.empty(); }
};

struct StageSpec {
  std::string name;
  std::optional<std::string> rename;
  std::vector<UnitMonomial> sigma;  // sigma_i(x_k) = sigma[k] x_k
  std::vector<FreePoly> delta;      // delta_i(x_k); missing entries are zero
};

struct OriginalProvenance {
  std::size_t original;
};
// The generator y x_original - t with y the ascending product over J.
struct DerivedProvenance {
  std::vector<std::size_t> J;
  std::size_t original;
  TorusElement t;
};
using Provenance = std::variant<OriginalProvenance, DerivedProvenance>;

struct AlgebraState {
  CommutationMatrix Q;
  std::vector<bool> inverted;
  std::vector<Provenance> provenance;
  std::vector<std::string> names;           // canonical generators
  std::vector<std::string> original_names;  // one per processed stage
  std::vector<TorusElement> orig_expr;      // originals in canonical terms

  std::size_t size() const { return Q.size(); }
  SelectiveSpace space() const { return SelectiveSpace(Q, inverted); }
};

struct ComponentReport {
  HomogeneousComponent component;
  Classification classification;
};

struct StageReport {
  std::size_t stage = 0;
  std::string original_name;
  std::size_t ambient = 0;  // canonical generators before the stage
  std::vector<UnitMonomial> lambda;
  std::vector<TorusElement> images;
  std::vector<ComponentReport> components;
  std::vector<std::size_t> J;
  TorusElement t;
  std::string new_name;
  std::vector<UnitMonomial> q_row;
  std::vector<UnitMonomial> normal_table;  // generators, then z
};

struct WeylWitness {
  std::size_t stage = 0;
  ExponentVec weight;
  std::size_t p = 0;      // u p - p u = 1 with p = x_p
  TorusElement shift;     // z' = z - shift
  TorusElement divisor;   // u = divisor^{-1} z'
  OrePoly u;
  bool cleared = false;   // divisor is not a monomial: cleared identities checked
};

struct StageResult {
  AlgebraState state;
  StageReport report;
  std::optional<WeylWitness> witness;
};

struct TorusEmbedding {
  AlgebraState state;
  std::vector<StageReport> trace;
};
struct WeylOutcome {
  WeylWitness witness;
  AlgebraState state;  // S_{i-1} of the stage that produced the witness
  std::vector<StageReport> trace;
  std::vector<std::string> unprocessed;
};
struct InputErrorOutcome {
  std::string diagnostic;
};
using Outcome = std::variant<TorusEmbedding, WeylOutcome, InputErrorOutcome>;

// Eigenvalues on all canonical generators of the automorphism acting on
// originals by taueigs; each derived generator is re-verified on its t.
std::vector<UnitMonomial> canonical_eigenvalues(
    const AlgebraState& state, const std::vector<UnitMonomial>& taueigs);
UnitMonomial eigenvalue_of_generator(const AlgebraState& state,
                                     const std::vector<UnitMonomial>& taueigs,
                                     std::size_t g);

TorusElement substitute(const AlgebraState& state, const FreePoly& f);
TorusElement ordered_product(std::size_t n, const std::vector<std::size_t>& J);

SkewDerivation translate_derivation(const AlgebraState& state,
                                    const StageSpec& stage);

AlgebraState initial_state(const StageSpec& first);
StageResult run_stage(const AlgebraState& state, const StageSpec& stage);

WeylWitness weyl_witness(const AlgebraState& state, const SkewDerivation& d,
                         const std::vector<ComponentReport>& components,
                         const ExponentVec& weight);

// Scalars c_g with v g = c_g g v for the canonical generators and z.
std::vector<UnitMonomial> verify_normal(const OreExtension& ext,
                                        const OrePoly& v);

Outcome run_all(const ParameterContext& params,
                const std::vector<StageSpec>& stages);

// y = x11*x22 - q*x12*x21 style rendering of a canonical generator.
std::string provenance_equation(const AlgebraState& state, std::size_t g,
                                const ParameterContext& ctx);

}  // namespace skewtor
