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

#include "skewtor/presentation.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace skewtor {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void at(const std::string& path, ErrorKind kind, const std::string& msg) {
  throw Error(kind, path + ": " + msg);
}

// Re-raises evaluation errors with the JSON path prefixed.
template <class F>
auto located(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::string expect_string(const json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  at(path, ErrorKind::InputError, "expected a string");
}

std::vector<std::string> name_list(const json& j, const std::string& path) {
  if (!j.is_array()) at(path, ErrorKind::InputError, "expected an array of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string p = path + "[" + std::to_string(i) + "]";
    std::string s = expect_string(j[i], p);
    if (!is_identifier(s)) at(p, ErrorKind::SyntaxError, "'" + s + "' is not an identifier");
    out.push_back(s);
  }
  return out;
}

void check_keys(const json& j, const std::string& path, std::set<std::string> allowed) {
  if (!j.is_object()) at(path, ErrorKind::InputError, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) at(path, ErrorKind::InputError, "unknown field '" + it.key() + "'");
}

// Array of expressions, or an object keyed by generator names.
template <class T, class F>
std::vector<T> keyed_list(const json& j, const std::string& path,
                          const std::vector<std::string>& names, std::size_t max,
                          bool exact, T zero, F&& parse) {
  std::vector<T> out;
  if (j.is_array()) {
    if (j.size() > max || (exact && j.size() != max))
      at(path, ErrorKind::ArityMismatch, "expected " + std::string(exact ? "" : "at most ") +
                                             std::to_string(max) + " entries, got " +
                                             std::to_string(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
      std::string p = path + "[" + std::to_string(i) + "]";
      std::string s = expect_string(j[i], p);
      out.push_back(located(p, [&] { return parse(s); }));
    }
    return out;
  }
  if (!j.is_object()) at(path, ErrorKind::InputError, "expected an array or an object");
  out.assign(max, zero);
  std::vector<bool> seen(max, false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string p = path + "." + it.key();
    auto pos = std::find(names.begin(), names.begin() + max, it.key());
    if (pos == names.begin() + max)
      at(p, ErrorKind::UnknownIdentifier, "'" + it.key() + "' is not an earlier generator");
    std::size_t k = pos - names.begin();
    std::string s = expect_string(it.value(), p);
    out[k] = located(p, [&] { return parse(s); });
    seen[k] = true;
  }
  if (exact)
    for (std::size_t k = 0; k < max; ++k)
      if (!seen[k]) at(path, ErrorKind::ArityMismatch, "missing entry for " + names[k]);
  return out;
}

TorusBlock parse_torus_block(const json& j, const ParameterContext& params) {
  const std::string path = "torus";
  check_keys(j, path, {"generators", "matrix", "upper", "inverted", "lambda", "images"});
  TorusBlock b;
  if (!j.contains("generators")) at(path, ErrorKind::InputError, "missing 'generators'");
  b.generators = name_list(j["generators"], path + ".generators");
  std::size_t n = b.generators.size();
  std::set<std::string> seen;
  for (const auto& g : b.generators) {
    if (params.index_of(g)) at(path + ".generators", ErrorKind::InputError, "'" + g + "' is a parameter");
    if (!seen.insert(g).second) at(path + ".generators", ErrorKind::InputError, "duplicate '" + g + "'");
  }
  auto unit = [&](const std::string& s) { return parse_unit(s, params); };
  if (j.contains("matrix") && j.contains("upper"))
    at(path, ErrorKind::InputError, "give either 'matrix' or 'upper', not both");
  if (j.contains("matrix")) {
    const json& m = j["matrix"];
    if (!m.is_array() || m.size() != n)
      at(path + ".matrix", ErrorKind::ArityMismatch, "expected " + std::to_string(n) + " rows");
    std::vector<UnitMonomial> e;
    for (std::size_t r = 0; r < n; ++r) {
      std::string rp = path + ".matrix[" + std::to_string(r) + "]";
      if (!m[r].is_array() || m[r].size() != n)
        at(rp, ErrorKind::ArityMismatch, "expected " + std::to_string(n) + " entries");
      for (std::size_t c = 0; c < n; ++c) {
        std::string p = rp + "[" + std::to_string(c) + "]";
        std::string s = expect_string(m[r][c], p);
        e.push_back(located(p, [&] { return unit(s); }));
      }
    }
    b.Q = located(path + ".matrix", [&] { return CommutationMatrix(n, e); });
  } else if (j.contains("upper")) {
    const json& u = j["upper"];
    std::size_t want = n * (n - 1) / 2;
    if (!u.is_array() || u.size() != want)
      at(path + ".upper", ErrorKind::ArityMismatch, "expected " + std::to_string(want) + " entries");
    std::vector<UnitMonomial> e;
    for (std::size_t i = 0; i < want; ++i) {
      std::string p = path + ".upper[" + std::to_string(i) + "]";
      std::string s = expect_string(u[i], p);
      e.push_back(located(p, [&] { return unit(s); }));
    }
    b.Q = CommutationMatrix::from_upper(n, e);
  } else {
    b.Q = CommutationMatrix(n);
  }
  b.inverted.assign(n, false);
  if (j.contains("inverted")) {
    for (const auto& g : name_list(j["inverted"], path + ".inverted")) {
      auto it = std::find(b.generators.begin(), b.generators.end(), g);
      if (it == b.generators.end())
        at(path + ".inverted", ErrorKind::UnknownIdentifier, "unknown generator '" + g + "'");
      b.inverted[it - b.generators.begin()] = true;
    }
  }
  if (j.contains("lambda")) {
    auto lam = keyed_list<UnitMonomial>(j["lambda"], path + ".lambda", b.generators, n, true,
                                        UnitMonomial(), unit);
    b.lambda = ToricAutomorphism(lam);
  }
  if (j.contains("images")) {
    auto im = keyed_list<TorusElement>(
        j["images"], path + ".images", b.generators, n, false, TorusElement(n),
        [&](const std::string& s) { return parse_torus(s, params, b.generators, b.Q); });
    im.resize(n, TorusElement(n));
    b.images = im;
  }
  return b;
}

PresentationFile from_json(const json& root) {
  check_keys(root, "root", {"parameters", "stages", "torus"});
  PresentationFile f;
  std::vector<std::string> pnames;
  if (root.contains("parameters")) pnames = name_list(root["parameters"], "parameters");
  try {
    f.params = ParameterContext(pnames);
  } catch (const Error& e) {
    at("parameters", ErrorKind::InputError, e.what());
  }
  if (root.contains("torus")) f.torus = parse_torus_block(root["torus"], f.params);
  if (!root.contains("stages")) {
    if (!f.torus) at("root", ErrorKind::InputError, "presentation needs 'stages' or 'torus'");
    return f;
  }
  const json& st = root["stages"];
  if (!st.is_array()) at("stages", ErrorKind::InputError, "expected an array");
  if (st.empty()) at("stages", ErrorKind::InputError, "no stages given");

  std::set<std::string> taken(pnames.begin(), pnames.end());
  std::vector<std::string> originals;
  for (std::size_t k = 0; k < st.size(); ++k) {
    std::string path = "stages[" + std::to_string(k) + "]";
    const json& s = st[k];
    check_keys(s, path, {"name", "rename", "sigma", "delta"});
    StageSpec spec;
    if (!s.contains("name")) at(path, ErrorKind::InputError, "missing 'name'");
    spec.name = expect_string(s["name"], path + ".name");
    if (!is_identifier(spec.name)) at(path + ".name", ErrorKind::SyntaxError, "not an identifier");
    if (!taken.insert(spec.name).second)
      at(path + ".name", ErrorKind::InputError, "name '" + spec.name + "' is already used");
    if (s.contains("rename")) {
      spec.rename = expect_string(s["rename"], path + ".rename");
      if (!is_identifier(*spec.rename)) at(path + ".rename", ErrorKind::SyntaxError, "not an identifier");
      if (*spec.rename != spec.name && !taken.insert(*spec.rename).second)
        at(path + ".rename", ErrorKind::InputError, "name '" + *spec.rename + "' is already used");
    }
    if (k > 0 && !s.contains("sigma"))
      at(path, ErrorKind::ArityMismatch, "missing 'sigma' (" + std::to_string(k) + " entries)");
    if (s.contains("sigma"))
      spec.sigma = keyed_list<UnitMonomial>(
          s["sigma"], path + ".sigma", originals, k, true, UnitMonomial(),
          [&](const std::string& e) { return parse_unit(e, f.params); });
    if (s.contains("delta")) {
      spec.delta = keyed_list<FreePoly>(
          s["delta"], path + ".delta", originals, k, false, FreePoly{},
          [&](const std::string& e) { return eval_free(parse_expression(e), f.params, originals); });
      while (!spec.delta.empty() && spec.delta.back().is_zero()) spec.delta.pop_back();
    }
    originals.push_back(spec.name);
    f.stages.push_back(std::move(spec));
  }
  // Default names of derived generators must not collide.
  for (std::size_t k = 0; k < f.stages.size(); ++k)
    if (!f.stages[k].rename) {
      std::string w = "w" + std::to_string(k + 1);
      if (taken.count(w))
        at("stages[" + std::to_string(k) + "]", ErrorKind::InputError,
           "default generator name '" + w + "' collides; add a 'rename'");
    }
  return f;
}

}  // namespace

PresentationFile parse_presentation(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::SyntaxError, std::string("invalid JSON: ") + e.what());
  }
  return from_json(root);
}

PresentationFile load_presentation(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InputError, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string write_presentation(const PresentationFile& file) {
  const auto& ctx = file.params;
  json root;
  root["parameters"] = ctx.names();
  if (!file.stages.empty()) {
    json stages = json::array();
    std::vector<std::string> originals;
    for (const auto& s : file.stages) {
      json js;
      js["name"] = s.name;
      if (s.rename) js["rename"] = *s.rename;
      if (!originals.empty()) {
        json sig = json::array();
        for (const auto& u : s.sigma) sig.push_back(to_string(u, ctx));
        js["sigma"] = sig;
      }
      if (!s.delta.empty()) {
        json del = json::array();
        for (const auto& d : s.delta) del.push_back(to_string(d, ctx, originals));
        js["delta"] = del;
      }
      stages.push_back(js);
      originals.push_back(s.name);
    }
    root["stages"] = stages;
  }
  if (file.torus) {
    const auto& b = *file.torus;
    json t;
    t["generators"] = b.generators;
    json m = json::array();
    for (std::size_t i = 0; i < b.Q.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < b.Q.size(); ++j) row.push_back(to_string(b.Q(i, j), ctx));
      m.push_back(row);
    }
    t["matrix"] = m;
    json inv = json::array();
    for (std::size_t i = 0; i < b.inverted.size(); ++i)
      if (b.inverted[i]) inv.push_back(b.generators[i]);
    t["inverted"] = inv;
    if (b.lambda) {
      json lam = json::array();
      for (const auto& u : b.lambda->lambda()) lam.push_back(to_string(u, ctx));
      t["lambda"] = lam;
    }
    if (b.images) {
      json im = json::array();
      for (const auto& e : *b.images) im.push_back(to_string(e, ctx, b.generators));
      t["images"] = im;
    }
    root["torus"] = t;
  }
  return root.dump(2) + "\n";
}

}  // namespace skewtor
