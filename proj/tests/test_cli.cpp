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

#include <cstdio>
#include <functional>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "skewtor/report.hpp"

using namespace skewtor;
using namespace skewtor::test;

namespace {

ErrorKind kind_of(const std::function<void()>& f, std::string* message = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::LimitExceeded;
}

const char* kTwoStages = R"({"parameters": ["q"], "stages": [{"name": "x"}, {"name": "y", "sigma": [%s]%s}]})";

std::string two_stages(const std::string& sigma, const std::string& extra = "") {
  char buf[512];
  std::snprintf(buf, sizeof buf, kTwoStages, sigma.c_str(), extra.c_str());
  return buf;
}

}  // namespace

TEST_CASE("expressions parse into normal form") {
  auto c = quantum_plane({"x1", "x2"});
  CHECK(c.str(c.t("x2*x1")) == "q^-1*x1*x2");
  CHECK(c.t("(q - q)*x1").is_zero());
  CHECK(c.str(c.t("x1^2*x1^-2")) == "1");
  CHECK(c.t("x1/q") == c.t("q^-1*x1"));
  CHECK(c.t("(x1 + x2)^2") == c.t("x1^2 + (1 + q^-1)*x1*x2 + x2^2"));
  CHECK(c.t("-x1 + 2/3") == c.t("2/3 - x1"));
}

TEST_CASE("the fourth-stage determinant element") {
  Ctx c{ParameterContext({"q"}), {"x11", "x12", "x21", "x22"}, {}};
  c.Q = CommutationMatrix::from_upper(4, c.us({"q", "q", "1", "1", "q", "q"}));
  TorusElement y = c.t("x11*x22 - q*x12*x21");
  CHECK(c.str(y) == "-q*x12*x21 + x11*x22");
  CHECK(c.t(c.str(y)) == y);
}

TEST_CASE("expression errors") {
  auto c = quantum_plane({"x1", "x2"});
  std::string msg;
  CHECK(kind_of([&] { c.s("q^"); }, &msg) == ErrorKind::SyntaxError);
  CHECK(msg.find("column 3") != std::string::npos);
  CHECK(kind_of([&] { c.s("q q"); }, &msg) == ErrorKind::SyntaxError);
  CHECK(msg.find("column 3") != std::string::npos);
  CHECK(kind_of([&] { c.s("(q + 1"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([&] { c.s("q^1.5"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([&] { c.t("x3"); }, &msg) == ErrorKind::UnknownIdentifier);
  CHECK(msg.find("x3") != std::string::npos);
  CHECK(kind_of([&] { c.s("x1"); }) == ErrorKind::UnknownIdentifier);
  CHECK(kind_of([&] { c.s("1/(q - q)"); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([&] { c.u("q + 1"); }) == ErrorKind::InputError);
}

TEST_CASE("print and parse are a fixed point on scalars and elements") {
  Ctx c{ParameterContext({"q", "p"}), {"a", "b", "c"}, {}};
  c.Q = CommutationMatrix::from_upper(3, c.us({"q", "p^-1", "-2*q*p"}));
  for (std::string e : {"a^-1*b - 3/4*c^2", "(q - p)/(q + 1)*a*b*c", "b*a + c*b*a^-2",
                        "(1 + q)^-2*c^3 - p^-1", "0", "7"}) {
    TorusElement u = c.t(e);
    CHECK(c.t(c.str(u)) == u);
    CHECK(c.str(c.t(c.str(u))) == c.str(u));
  }
  for (std::string e : {"q/(-1 + q^2)", "-1/2*q^2*p^-3", "(q + p)^3/(q*p - 1)"}) {
    FieldElement s = c.s(e);
    CHECK(c.s(to_string(s, c.params)) == s);
  }
}

TEST_CASE("free polynomials keep the word order") {
  ParameterContext params({"q"});
  std::vector<std::string> gens{"x", "y"};
  FreePoly f = eval_free(parse_expression("y*x - q*x*y"), params, gens);
  REQUIRE(f.terms.size() == 2);
  CHECK(f.terms[0].second.letters.front().first == 1);
  CHECK(to_string(f, params, gens) == "y*x - q*x*y");
}

TEST_CASE("parse_presentation: shipped files") {
  PresentationFile f = load("qmat3.json");
  CHECK(f.stages.size() == 9);
  CHECK(f.params.names() == std::vector<std::string>{"q"});
  CHECK(f.stages[3].rename == std::optional<std::string>("y22"));
  CHECK(f.stages[8].sigma.size() == 8);
  PresentationFile a = load("qmat2x2_caseA.json");
  CHECK(a.stages[3].rename == std::optional<std::string>("d"));
  CHECK(a.stages[3].delta.size() == 1);
  PresentationFile u = load("uqsl2.json");
  CHECK(u.stages.empty());
  REQUIRE(u.torus.has_value());
  CHECK(u.torus->inverted == std::vector<bool>{true, false});
}

TEST_CASE("parse_presentation: errors carry their location") {
  std::string msg;
  CHECK(kind_of([] { parse_presentation(R"({"parameters": ["q"], "stages": []})"); }, &msg) ==
        ErrorKind::InputError);
  CHECK(kind_of([&] { parse_presentation(two_stages("\"q^\"")); }, &msg) == ErrorKind::SyntaxError);
  CHECK(msg.find("stages[1].sigma[0]") != std::string::npos);
  CHECK(msg.find("column 3") != std::string::npos);
  CHECK(kind_of([&] { parse_presentation(two_stages("\"q\", \"q\"")); }, &msg) == ErrorKind::ArityMismatch);
  CHECK(msg.find("stages[1].sigma") != std::string::npos);
  CHECK(kind_of([&] { parse_presentation(two_stages("\"s\"")); }, &msg) == ErrorKind::UnknownIdentifier);
  CHECK(kind_of([&] { parse_presentation(two_stages("\"q\"", R"(, "delta": ["y"])")); }) ==
        ErrorKind::UnknownIdentifier);
  CHECK(kind_of([&] { parse_presentation(two_stages("\"q\"", R"(, "delta": ["x", "x"])")); }) ==
        ErrorKind::ArityMismatch);
  CHECK(kind_of([&] { parse_presentation(two_stages("\"q\"", R"(, "colour": 1)")); }, &msg) ==
        ErrorKind::InputError);
  CHECK(msg.find("colour") != std::string::npos);
  CHECK(kind_of([] {
          parse_presentation(R"({"parameters": ["q"], "stages": [{"name": "q"}]})");
        }) == ErrorKind::InputError);
  CHECK(kind_of([] {
          parse_presentation(R"({"parameters": ["q"], "stages": [{"name": "x"}, {"name": "x", "sigma": ["1"]}]})");
        }) == ErrorKind::InputError);
  CHECK(kind_of([] { parse_presentation("{\"parameters\": [\"q\"], "); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_presentation(R"({"parameters": ["q"]})"); }) == ErrorKind::InputError);
  CHECK(kind_of([] { load_presentation("/nonexistent/file.json"); }) == ErrorKind::InputError);
}

TEST_CASE("parse_presentation: delta keyed by generator name") {
  PresentationFile f = parse_presentation(
      R"({"parameters": ["q"], "stages": [{"name": "x"}, {"name": "w", "sigma": ["q"]},
          {"name": "z", "sigma": ["1", "q"], "delta": {"w": "x^2"}}]})");
  REQUIRE(f.stages[1].sigma.size() == 1);
  CHECK(f.stages[1].delta.empty());
  REQUIRE(f.stages[2].delta.size() == 2);
  CHECK(f.stages[2].delta[0].is_zero());
  CHECK_FALSE(f.stages[2].delta[1].is_zero());
}

TEST_CASE("presentation files round-trip") {
  for (std::string name : {"qmat3.json", "qmat2x2_caseA.json", "qmat2x2_caseB.json", "uqsl2.json",
                           "qdisc.json", "leibniz_violation.json"}) {
    PresentationFile f = load(name);
    std::string once = write_presentation(f);
    PresentationFile g = parse_presentation(once);
    CHECK(write_presentation(g) == once);
    REQUIRE(g.stages.size() == f.stages.size());
    for (std::size_t k = 0; k < f.stages.size(); ++k) {
      CHECK(g.stages[k].name == f.stages[k].name);
      CHECK(g.stages[k].rename == f.stages[k].rename);
      CHECK(g.stages[k].sigma == f.stages[k].sigma);
    }
  }
}

TEST_CASE("reports round-trip through JSON") {
  for (std::string name : {"qmat3.json", "qmat2x2_caseA.json", "qmat2x2_caseB.json"}) {
    PresentationFile f = load(name);
    Outcome o = run_all(f.params, f.stages);
    for (bool trace : {false, true}) {
      Report r = make_report(o, f.params, f.stages, trace);
      CHECK(report_from_json(to_json(r)) == r);
      CHECK(to_json(report_from_json(to_json(r))).dump() == to_json(r).dump());
      CHECK(r.trace.empty() != trace);
    }
  }
}

TEST_CASE("report contents") {
  PresentationFile f = load("qmat3.json");
  Report r = make_report(run_all(f.params, f.stages), f.params, f.stages, true);
  CHECK(r.outcome == "torus_embedding");
  CHECK(r.generators.front() == "x11^±1");
  CHECK(r.generators.back() == "y33");
  CHECK(r.inverted == std::vector<std::string>{"x11", "x12", "x21", "y22"});
  REQUIRE(r.provenance.size() == 4);
  CHECK(r.provenance[0] == "y22 = x11*x22 - q*x12*x21");
  CHECK(r.matrix[1][0] == "q^-1");
  CHECK(r.trace.front().stage == 2);
  CHECK(r.trace[2].components.front().kind == "locally_inner");
  CHECK(r.trace[2].components.front().exceptional == std::optional<std::string>("x11"));
  std::string text = render_text(r);
  CHECK(text.find("Stage 4 (adjoin x22)") != std::string::npos);
  CHECK(text.find("At Step(c), t = q*x12*x21 with y = x11.") != std::string::npos);

  PresentationFile b = load("qmat2x2_caseB.json");
  Report w = make_report(run_all(b.params, b.stages), b.params, b.stages, false);
  CHECK(w.outcome == "weyl_witness");
  REQUIRE(w.witness.has_value());
  CHECK(w.witness->stage == 4);
  CHECK(w.witness->adjoined == "x4");
  CHECK(w.witness->p == "x1");
  CHECK(w.witness->u == "r^-1*x2^-1*x3^-1*x4");
}
