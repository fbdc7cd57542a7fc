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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "skewtor/presentation.hpp"
#include "skewtor/report.hpp"

using namespace skewtor;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kWeyl = 10;
constexpr int kInput = 1;
constexpr int kInternal = 2;

const TorusBlock& need_torus(const PresentationFile& f) {
  if (!f.torus) fail(ErrorKind::InputError, "this command needs a 'torus' block");
  return *f.torus;
}

std::string pair_message(const TorusBlock& b, const Violation& v) {
  return "Leibniz rule fails on the relation between " + b.generators[v.i] + " and " +
         b.generators[v.j];
}

SkewDerivation block_derivation(const TorusBlock& b) {
  if (!b.lambda) fail(ErrorKind::InputError, "torus: missing 'lambda'");
  if (!b.images) fail(ErrorKind::InputError, "torus: missing 'images'");
  SkewDerivation d(b.Q, *b.lambda, *b.images);
  auto rep = validate_derivation(d);
  if (rep.violation) fail(ErrorKind::NotADerivation, pair_message(b, *rep.violation));
  SelectiveSpace space = b.space();
  for (std::size_t g = 0; g < b.generators.size(); ++g)
    if (!membership(space, (*b.images)[g]))
      fail(ErrorKind::MembershipViolation, "image of " + b.generators[g] + " leaves the space");
  return validated(std::move(d));
}

int cmd_run(const PresentationFile& f, const std::string& format, bool trace) {
  if (f.stages.empty()) fail(ErrorKind::InputError, "presentation has no stages");
  Outcome out = run_all(f.params, f.stages);
  Report r = make_report(out, f.params, f.stages, trace);
  if (r.outcome == "input_error") {
    std::cerr << "error: " << r.diagnostic << "\n";
    return kInput;
  }
  if (format == "text") std::cout << render_text(r);
  else std::cout << to_json(r).dump(2) << "\n";
  return r.outcome == "weyl_witness" ? kWeyl : kOk;
}

int cmd_classify(const PresentationFile& f) {
  const TorusBlock& b = need_torus(f);
  SkewDerivation d = block_derivation(b);
  SelectiveSpace space = b.space();
  json j;
  json comps = json::array();
  bool outer = false;
  for (auto& c : decompose_homogeneous(d)) {
    Classification cl = classify_component(c, d.sigma(), space);
    outer = outer || std::holds_alternative<OuterComponent>(cl);
    ComponentEntry e = component_entry({c, cl}, f.params, b.generators);
    json jc{{"weight", e.weight}, {"kind", e.kind}};
    if (e.exceptional) jc["exceptional"] = *e.exceptional;
    if (!e.inducer.empty()) jc["inducer"] = e.inducer;
    jc["coeffs"] = e.coeffs;
    comps.push_back(jc);
  }
  j["components"] = comps;
  if (space.inverted_count() == space.size()) {
    ExtensionType ext = classify_extension(d.sigma(), d, b.Q);
    if (auto* a = std::get_if<AutomorphismType>(&ext)) {
      j["extension"] = json{{"type", "automorphism"},
                            {"inducer", to_string(a->inducer, f.params, b.generators)}};
    } else {
      const auto& dt = std::get<DerivationType>(ext);
      json z = json::array();
      for (const auto& e : dt.z) z.push_back(to_string(e, f.params, b.generators));
      j["extension"] = json{{"type", "derivation"},
                            {"witness", dt.witness.raw()},
                            {"inner_shift", to_string(dt.inner_shift, f.params, b.generators)},
                            {"z", z}};
    }
  }
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_eval(const PresentationFile& f, const std::string& expr, const std::string& apply) {
  const TorusBlock& b = need_torus(f);
  TorusElement u = parse_torus(expr, f.params, b.generators, b.Q);
  if (apply == "sigma") {
    if (!b.lambda) fail(ErrorKind::InputError, "torus: missing 'lambda'");
    u = apply_auto(*b.lambda, u);
  } else if (apply == "delta") {
    u = extend_derivation(block_derivation(b), u);
  }
  std::cout << to_string(u, f.params, b.generators) << "\n";
  return kOk;
}

int cmd_check(const PresentationFile& f) {
  if (f.torus && f.torus->images) block_derivation(*f.torus);
  if (!f.stages.empty()) {
    Outcome out = run_all(f.params, f.stages);
    if (auto* e = std::get_if<InputErrorOutcome>(&out)) {
      std::cerr << "error: " << e->diagnostic << "\n";
      return kInput;
    }
    if (auto* w = std::get_if<WeylOutcome>(&out)) {
      std::cout << "ok: stages 1-" << w->witness.stage + 1
                << " validated; later stages not reached\n";
      return kOk;
    }
  }
  std::cout << "ok\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skewtor: quantum tori, skew derivations and iterated Ore extensions"};
  app.require_subcommand(1);

  std::string file, format = "json", expr, apply;
  bool trace = false;

  auto* run = app.add_subcommand("run", "Run the embedding algorithm on a presentation");
  run->add_option("FILE", file, "Presentation file")->required();
  run->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  run->add_flag("--trace", trace, "Include the per-stage trace");

  auto* classify = app.add_subcommand("classify", "Classify the components of a torus-block derivation");
  classify->add_option("FILE", file, "Presentation file")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate an element in the torus block");
  eval->add_option("FILE", file, "Presentation file")->required();
  eval->add_option("--expr", expr, "Element expression")->required();
  eval->add_option("--apply", apply, "Map to apply")->check(CLI::IsMember({"sigma", "delta"}));

  auto* check = app.add_subcommand("check", "Validate a presentation");
  check->add_option("FILE", file, "Presentation file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    PresentationFile f = load_presentation(file);
    if (run->parsed()) return cmd_run(f, format, trace);
    if (classify->parsed()) return cmd_classify(f);
    if (eval->parsed()) return cmd_eval(f, expr, apply);
    return cmd_check(f);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_input_error() ? kInput : kInternal;
  }
}
