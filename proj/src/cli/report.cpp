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

#include "skewtor/report.hpp"

#include <sstream>

namespace skewtor {
namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> prefix(const std::vector<std::string>& v, std::size_t n) {
  return {v.begin(), v.begin() + std::min(n, v.size())};
}

std::vector<std::string> units(const std::vector<UnitMonomial>& v, const ParameterContext& ctx) {
  std::vector<std::string> out;
  for (const auto& u : v) out.push_back(to_string(u, ctx));
  return out;
}

void fill_space(Report& r, const AlgebraState& s, const ParameterContext& ctx) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    r.generators.push_back(s.names[i] + (s.inverted[i] ? "^±1" : ""));
    if (s.inverted[i]) r.inverted.push_back(s.names[i]);
    std::vector<std::string> row;
    for (std::size_t j = 0; j < s.size(); ++j) row.push_back(to_string(s.Q(i, j), ctx));
    r.matrix.push_back(row);
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    if (std::holds_alternative<DerivedProvenance>(s.provenance[i]))
      r.provenance.push_back(provenance_equation(s, i, ctx));
}

StageEntry stage_entry(const StageReport& s, const ParameterContext& ctx,
                       const std::vector<std::string>& names) {
  auto n = prefix(names, s.ambient);
  StageEntry e;
  e.stage = s.stage + 1;
  e.adjoined = s.original_name;
  e.lambda = units(s.lambda, ctx);
  for (const auto& im : s.images) e.delta.push_back(to_string(im, ctx, n));
  for (const auto& c : s.components) e.components.push_back(component_entry(c, ctx, n));
  for (std::size_t j : s.J) e.J.push_back(n[j]);
  e.t = to_string(s.t, ctx, n);
  e.generator = s.new_name;
  e.q_row = units(s.q_row, ctx);
  e.normal_table = units(s.normal_table, ctx);
  return e;
}

std::vector<std::int64_t> weight_of(const ExponentVec& d) { return d.raw(); }

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string weight_string(const std::vector<std::int64_t>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + ")";
}

}  // namespace

std::string classification_kind(const Classification& c) {
  switch (c.index()) {
    case 0: return "zero";
    case 1: return "inner";
    case 2: return "locally_inner";
    default: return "outer";
  }
}

ComponentEntry component_entry(const ComponentReport& c, const ParameterContext& ctx,
                               const std::vector<std::string>& names) {
  ComponentEntry e;
  e.weight = weight_of(c.component.weight);
  e.kind = classification_kind(c.classification);
  for (const auto& f : c.component.coeffs) e.coeffs.push_back(to_string(f, ctx));
  if (auto* in = std::get_if<InnerComponent>(&c.classification))
    e.inducer = to_string(in->inducer, ctx, names);
  if (auto* li = std::get_if<LocallyInnerComponent>(&c.classification)) {
    e.inducer = to_string(li->inducer, ctx, names);
    e.exceptional = names.at(li->j);
  }
  return e;
}

Report make_report(const Outcome& outcome, const ParameterContext& ctx,
                   const std::vector<StageSpec>& stages, bool with_trace) {
  Report r;
  r.parameters = ctx.names();
  auto trace = [&](const std::vector<StageReport>& t, const AlgebraState& s) {
    if (!with_trace) return;
    for (const auto& e : t) {
      // Names at a stage are those of the state it started from.
      r.trace.push_back(stage_entry(e, ctx, s.names));
    }
  };
  if (auto* te = std::get_if<TorusEmbedding>(&outcome)) {
    r.outcome = "torus_embedding";
    fill_space(r, te->state, ctx);
    trace(te->trace, te->state);
  } else if (auto* wo = std::get_if<WeylOutcome>(&outcome)) {
    r.outcome = "weyl_witness";
    fill_space(r, wo->state, ctx);
    trace(wo->trace, wo->state);
    const auto& w = wo->witness;
    std::vector<std::string> n = wo->state.names;
    WeylCertificate c;
    c.stage = w.stage + 1;
    c.adjoined = w.stage < stages.size() ? stages[w.stage].name : "";
    c.weight = weight_of(w.weight);
    c.p = n.at(w.p);
    c.shift = to_string(w.shift, ctx, n);
    c.divisor = to_string(w.divisor, ctx, n);
    c.u = to_string(w.u, ctx, n, c.adjoined);
    c.cleared = w.cleared;
    c.unprocessed = wo->unprocessed;
    r.witness = c;
  } else {
    r.outcome = "input_error";
    r.diagnostic = std::get<InputErrorOutcome>(outcome).diagnostic;
  }
  return r;
}

json to_json(const Report& r) {
  json j;
  j["outcome"] = r.outcome;
  if (r.outcome == "input_error") {
    j["diagnostic"] = r.diagnostic;
    return j;
  }
  j["parameters"] = r.parameters;
  j["generators"] = r.generators;
  j["matrix"] = r.matrix;
  j["inverted"] = r.inverted;
  j["provenance"] = r.provenance;
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = json{{"stage", w.stage},   {"adjoined", w.adjoined}, {"weight", w.weight},
                        {"p", w.p},           {"shift", w.shift},       {"divisor", w.divisor},
                        {"u", w.u},           {"cleared", w.cleared},   {"unprocessed", w.unprocessed}};
  }
  if (!r.trace.empty()) {
    json t = json::array();
    for (const auto& s : r.trace) {
      json comps = json::array();
      for (const auto& c : s.components) {
        json jc{{"weight", c.weight}, {"kind", c.kind}};
        if (c.exceptional) jc["exceptional"] = *c.exceptional;
        if (!c.inducer.empty()) jc["inducer"] = c.inducer;
        jc["coeffs"] = c.coeffs;
        comps.push_back(jc);
      }
      t.push_back(json{{"stage", s.stage},         {"adjoined", s.adjoined},
                       {"lambda", s.lambda},       {"delta", s.delta},
                       {"components", comps},      {"J", s.J},
                       {"t", s.t},                 {"generator", s.generator},
                       {"q_row", s.q_row},         {"normal_table", s.normal_table}});
    }
    j["trace"] = t;
  }
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.outcome = j.at("outcome").get<std::string>();
  r.diagnostic = get_or<std::string>(j, "diagnostic", "");
  using Strings = std::vector<std::string>;
  r.parameters = get_or<Strings>(j, "parameters", {});
  r.generators = get_or<Strings>(j, "generators", {});
  r.matrix = get_or<std::vector<Strings>>(j, "matrix", {});
  r.inverted = get_or<Strings>(j, "inverted", {});
  r.provenance = get_or<Strings>(j, "provenance", {});
  if (j.contains("witness")) {
    const json& w = j.at("witness");
    WeylCertificate c;
    c.stage = w.at("stage").get<std::size_t>();
    c.adjoined = w.at("adjoined").get<std::string>();
    c.weight = w.at("weight").get<std::vector<std::int64_t>>();
    c.p = w.at("p").get<std::string>();
    c.shift = w.at("shift").get<std::string>();
    c.divisor = w.at("divisor").get<std::string>();
    c.u = w.at("u").get<std::string>();
    c.cleared = w.at("cleared").get<bool>();
    c.unprocessed = w.at("unprocessed").get<Strings>();
    r.witness = c;
  }
  if (j.contains("trace"))
    for (const json& s : j.at("trace")) {
      StageEntry e;
      e.stage = s.at("stage").get<std::size_t>();
      e.adjoined = s.at("adjoined").get<std::string>();
      e.lambda = s.at("lambda").get<Strings>();
      e.delta = s.at("delta").get<Strings>();
      for (const json& c : s.at("components")) {
        ComponentEntry ce;
        ce.weight = c.at("weight").get<std::vector<std::int64_t>>();
        ce.kind = c.at("kind").get<std::string>();
        if (c.contains("exceptional")) ce.exceptional = c.at("exceptional").get<std::string>();
        ce.inducer = get_or<std::string>(c, "inducer", "");
        ce.coeffs = c.at("coeffs").get<Strings>();
        e.components.push_back(ce);
      }
      e.J = s.at("J").get<Strings>();
      e.t = s.at("t").get<std::string>();
      e.generator = s.at("generator").get<std::string>();
      e.q_row = s.at("q_row").get<Strings>();
      e.normal_table = s.at("normal_table").get<Strings>();
      r.trace.push_back(e);
    }
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  if (r.outcome == "input_error") {
    out << "error: " << r.diagnostic << "\n";
    return out.str();
  }
  for (const auto& s : r.trace) {
    out << "Stage " << s.stage << " (adjoin " << s.adjoined << ")\n";
    out << "  At Step(a), Lambda = (" << join(s.lambda, ", ") << ").\n";
    bool zero = true;
    for (const auto& d : s.delta) zero = zero && d == "0";
    if (zero) {
      out << "  The skew derivation is 0.\n";
    } else {
      out << "  At Step(b), " << s.components.size() << " homogeneous component"
          << (s.components.size() == 1 ? "" : "s") << ":\n";
      for (const auto& c : s.components) {
        out << "    degree " << weight_string(c.weight) << ": ";
        if (c.kind == "inner") out << "inner, induced by " << c.inducer;
        else if (c.kind == "locally_inner")
          out << *c.exceptional << "-locally inner, induced by " << c.inducer;
        else if (c.kind == "outer") out << "outer";
        else out << "zero";
        out << "\n";
      }
      if (!s.generator.empty()) {
        out << "  At Step(c), t = " << s.t;
        if (!s.J.empty()) out << " with y = " << join(s.J, "*");
        out << ".\n";
      }
    }
    if (!s.generator.empty())
      out << "  New generator " << s.generator << ", row (" << join(s.q_row, ", ") << ").\n";
  }
  if (r.witness) {
    const auto& w = *r.witness;
    out << "Stage " << w.stage << " (adjoin " << w.adjoined << ") has an outer component of degree "
        << weight_string(w.weight) << ".\n";
    out << "The quotient division algebra contains a copy of the first Weyl algebra:\n";
    if (w.cleared)
      out << "  u = (" << w.divisor << ")^-1 * (" << w.u << ")";
    else
      out << "  u = " << w.u;
    out << ", p = " << w.p << ", u*p - p*u = 1\n";
    if (!w.unprocessed.empty()) out << "Unprocessed stages: " << join(w.unprocessed, ", ") << "\n";
    out << "Space before this stage:\n";
  } else {
    out << "Torus embedding:\n";
  }
  out << "  generators: " << join(r.generators, ", ") << "\n";
  out << "  inverted: {" << join(r.inverted, ", ") << "}\n";
  out << "  matrix:\n";
  std::size_t width = 0;
  for (const auto& row : r.matrix)
    for (const auto& e : row) width = std::max(width, e.size());
  for (const auto& row : r.matrix) {
    out << "   ";
    for (const auto& e : row) out << " " << std::string(width - e.size(), ' ') << e;
    out << "\n";
  }
  for (const auto& p : r.provenance) out << "  " << p << "\n";
  return out.str();
}

}  // namespace skewtor
