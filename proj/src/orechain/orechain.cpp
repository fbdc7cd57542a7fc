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

#include "skewtor/orechain.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace skewtor {
namespace {

OrePoly scaled(const OrePoly& p, const FieldElement& c) {
  OrePoly r(p.ambient());
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) r.add_term(k, p.coeffs()[k].scaled(c));
  return r;
}

std::optional<UnitMonomial> ratio(const TorusElement& a, const TorusElement& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  const auto& [e, c] = *a.terms().begin();
  FieldElement other = b.coefficient(e);
  if (other.is_zero()) return std::nullopt;
  return (c / other).as_unit_monomial();
}

std::string stage_label(std::size_t i, const std::string& name) {
  return "stage " + std::to_string(i + 1) + " (" + name + ")";
}

}  // namespace

std::vector<UnitMonomial> canonical_eigenvalues(
    const AlgebraState& state, const std::vector<UnitMonomial>& taueigs) {
  std::size_t m = state.size();
  std::vector<UnitMonomial> ev;
  for (std::size_t g = 0; g < m; ++g) {
    const Provenance& p = state.provenance[g];
    if (auto* o = std::get_if<OriginalProvenance>(&p)) {
      if (o->original >= taueigs.size())
        fail(ErrorKind::ArityMismatch, "missing eigenvalue for " + state.names[g]);
      ev.push_back(taueigs[o->original]);
      continue;
    }
    const auto& dp = std::get<DerivedProvenance>(p);
    if (dp.original >= taueigs.size())
      fail(ErrorKind::ArityMismatch, "missing eigenvalue for " + state.names[g]);
    UnitMonomial rho = taueigs[dp.original];
    for (std::size_t j : dp.J) rho *= ev[j];
    ToricAutomorphism partial(ev);
    if (!(apply_auto(partial, dp.t) == dp.t.scaled(FieldElement(rho))))
      fail(ErrorKind::NonEigenvector,
           "shift of " + state.names[g] + " is not an eigenvector of sigma");
    ev.push_back(rho);
  }
  return ev;
}

UnitMonomial eigenvalue_of_generator(const AlgebraState& state,
                                     const std::vector<UnitMonomial>& taueigs,
                                     std::size_t g) {
  if (g >= state.size()) fail(ErrorKind::IndexOutOfRange, "generator index");
  return canonical_eigenvalues(state, taueigs)[g];
}

TorusElement ordered_product(std::size_t n, const std::vector<std::size_t>& J) {
  ExponentVec e(n);
  for (std::size_t j : J) e[j] += 1;
  return TorusElement::monomial(n, e);
}

TorusElement substitute(const AlgebraState& state, const FreePoly& f) {
  std::size_t m = state.size();
  TorusElement r(m);
  for (const auto& [c, w] : f.terms) {
    TorusElement prod = TorusElement::constant(m, c);
    for (const auto& [k, p] : w.letters) {
      if (k >= state.orig_expr.size())
        fail(ErrorKind::UnknownIdentifier, "generator not yet adjoined");
      prod = elem_mul(state.Q, prod, elem_pow(state.Q, state.orig_expr[k], p));
    }
    r += prod;
  }
  return r;
}

SkewDerivation translate_derivation(const AlgebraState& state,
                                    const StageSpec& stage) {
  std::size_t m = state.size();
  std::size_t originals = state.original_names.size();
  if (stage.sigma.size() != originals)
    fail(ErrorKind::ArityMismatch, "expected " + std::to_string(originals) +
                                       " sigma entries, got " +
                                       std::to_string(stage.sigma.size()));
  if (stage.delta.size() > originals)
    fail(ErrorKind::ArityMismatch, "too many delta entries");
  ToricAutomorphism sig(canonical_eigenvalues(state, stage.sigma));

  std::vector<TorusElement> D(originals, TorusElement(m));
  for (std::size_t k = 0; k < stage.delta.size(); ++k) D[k] = substitute(state, stage.delta[k]);

  std::vector<TorusElement> images(m, TorusElement(m));
  for (std::size_t g = 0; g < m; ++g) {
    const Provenance& p = state.provenance[g];
    if (auto* o = std::get_if<OriginalProvenance>(&p)) {
      images[g] = D[o->original];
      continue;
    }
    const auto& dp = std::get<DerivedProvenance>(p);
    TorusElement y = ordered_product(m, dp.J);
    TorusElement t = dp.t.embedded(m);
    images[g] = elem_mul(state.Q, apply_auto(sig, y), D[dp.original]) +
                elem_mul(state.Q, detail::leibniz_extend(state.Q, sig, images, y),
                         state.orig_expr[dp.original]) -
                detail::leibniz_extend(state.Q, sig, images, t);
  }
  SelectiveSpace space = state.space();
  for (std::size_t g = 0; g < m; ++g)
    if (!membership(space, images[g]))
      fail(ErrorKind::MembershipViolation,
           "image of " + state.names[g] + " leaves the localized space");
  SkewDerivation d(state.Q, sig, std::move(images));
  auto report = validate_derivation(d);
  if (report.violation)
    fail(ErrorKind::NotADerivation, "Leibniz rule fails on the relation between " +
                                        state.names[report.violation->i] + " and " +
                                        state.names[report.violation->j]);
  return validated(std::move(d));
}

AlgebraState initial_state(const StageSpec& first) {
  if (!first.sigma.empty() || !first.delta.empty())
    fail(ErrorKind::ArityMismatch, "the first stage takes no sigma or delta data");
  AlgebraState s;
  s.Q = CommutationMatrix(1);
  s.inverted = {false};
  s.provenance = {OriginalProvenance{0}};
  s.names = {first.rename.value_or(first.name)};
  s.original_names = {first.name};
  s.orig_expr = {TorusElement::generator(1, 0)};
  return s;
}

std::vector<UnitMonomial> verify_normal(const OreExtension& ext,
                                        const OrePoly& v) {
  std::size_t m = ext.ambient();
  std::vector<UnitMonomial> table;
  for (std::size_t g = 0; g <= m; ++g) {
    OrePoly G = g < m ? OrePoly::constant(TorusElement::generator(m, g))
                      : OrePoly::variable(m);
    OrePoly lhs = ext.mul(v, G), rhs = ext.mul(G, v);
    std::string what = g < m ? "generator " + std::to_string(g + 1) : "the adjoined variable";
    auto c = ratio(lhs.coeff(lhs.degree()), rhs.coeff(rhs.degree()));
    if (!c || lhs.degree() != rhs.degree())
      fail(ErrorKind::NotNormal, "no unit scalar relates v and " + what);
    OrePoly residual = lhs - scaled(rhs, FieldElement(*c));
    if (!residual.is_zero())
      fail(ErrorKind::NotNormal, "v fails to normalize " + what + "; residual has " +
                                     std::to_string(residual.coeffs().size()) + " z-degrees");
    table.push_back(*c);
  }
  return table;
}

WeylWitness weyl_witness(const AlgebraState& state, const SkewDerivation& d,
                         const std::vector<ComponentReport>& components,
                         const ExponentVec& weight) {
  std::size_t m = state.size();
  const auto& Q = state.Q;
  WeylWitness w;
  w.weight = weight;
  w.shift = TorusElement(m);
  std::vector<TorusElement> outer_images(m, TorusElement(m));
  const ComponentReport* target = nullptr;
  for (const auto& c : components) {
    if (auto* in = std::get_if<InnerComponent>(&c.classification)) w.shift += in->inducer;
    if (auto* li = std::get_if<LocallyInnerComponent>(&c.classification)) w.shift += li->inducer;
    if (std::holds_alternative<OuterComponent>(c.classification)) {
      auto im = component_images(m, c.component);
      for (std::size_t l = 0; l < m; ++l) outer_images[l] += im[l];
      if (c.component.weight == weight) target = &c;
    }
  }
  if (!target) fail(ErrorKind::Inconsistent, "no outer component at the requested weight");

  // Prefer a generator whose shifted image is a single monomial.
  std::optional<std::size_t> pick, fallback;
  for (std::size_t l = 0; l < m; ++l) {
    if (target->component.coeffs[l].is_zero()) continue;
    if (!fallback) fallback = l;
    if (outer_images[l].size() == 1 && !pick) pick = l;
  }
  if (!fallback) fail(ErrorKind::Inconsistent, "outer component is zero");
  w.p = pick.value_or(*fallback);
  w.cleared = !pick;
  w.divisor = outer_images[w.p];

  OreExtension ext(d);
  OrePoly zp = OrePoly::variable(m) - OrePoly::constant(w.shift);
  OrePoly xp = OrePoly::constant(TorusElement::generator(m, w.p));
  const UnitMonomial& lam = d.sigma()[w.p];
  if (!w.cleared) {
    w.u = ext.left_mul(elem_inverse(Q, w.divisor), zp);
    OrePoly one = OrePoly::constant(TorusElement::constant(m, 1));
    if (!(ext.commutator(w.u, xp) == one))
      fail(ErrorKind::Inconsistent, "Weyl certificate u p - p u = 1 fails");
  } else {
    // u = M^{-1} z' in the division ring: check z' p - lam p z' = M and
    // M p = lam p M, which together give u p - p u = 1.
    OrePoly M = OrePoly::constant(w.divisor);
    OrePoly lhs = ext.mul(zp, xp) - scaled(ext.mul(xp, zp), FieldElement(lam));
    if (!(lhs == M) ||
        !(ext.mul(M, xp) == scaled(ext.mul(xp, M), FieldElement(lam))))
      fail(ErrorKind::Inconsistent, "cleared Weyl certificate fails");
    w.u = zp;
  }
  return w;
}

StageResult run_stage(const AlgebraState& state, const StageSpec& stage) {
  std::size_t m = state.size();
  std::size_t i = state.original_names.size();
  SkewDerivation d = translate_derivation(state, stage);
  const auto& Q = state.Q;
  const ToricAutomorphism& sig = d.sigma();

  StageReport rep;
  rep.stage = i;
  rep.original_name = stage.name;
  rep.ambient = m;
  rep.lambda = sig.lambda();
  rep.images = d.images();
  rep.t = TorusElement(m);

  SelectiveSpace space = state.space();
  TorusElement a(m);
  std::set<std::size_t> J;
  std::vector<TorusElement> local;
  for (auto& comp : decompose_homogeneous(d)) {
    Classification cl = classify_component(comp, sig, space);
    if (auto* in = std::get_if<InnerComponent>(&cl)) a += in->inducer;
    if (auto* li = std::get_if<LocallyInnerComponent>(&cl)) {
      J.insert(li->j);
      local.push_back(li->inducer);
    }
    rep.components.push_back({std::move(comp), std::move(cl)});
  }
  for (const auto& c : rep.components)
    if (std::holds_alternative<OuterComponent>(c.classification)) {
      WeylWitness w = weyl_witness(state, d, rep.components, c.component.weight);
      w.stage = i;
      return {state, std::move(rep), std::move(w)};
    }

  rep.J.assign(J.begin(), J.end());
  TorusElement y = ordered_product(m, rep.J);
  TorusElement t = elem_mul(Q, y, a);
  for (const auto& s : local) t += elem_mul(Q, y, s);
  if (!membership(space, t))
    fail(ErrorKind::Inconsistent, "shift t leaves the localized space");

  // phi_y(x_l) = prod_{j in J} q_lj x_l normalizes y: r y = y phi_y(r).
  std::vector<UnitMonomial> phi(m), row(m);
  for (std::size_t l = 0; l < m; ++l) {
    row[l] = sig[l];
    for (std::size_t j : rep.J) {
      phi[l] *= Q(l, j);
      row[l] *= Q(j, l);
    }
  }
  if (!(apply_auto(ToricAutomorphism(phi), t) == apply_auto(sig, t)))
    fail(ErrorKind::Inconsistent, "phi_y(t) differs from sigma(t)");

  OreExtension ext(d);
  OrePoly v = OrePoly::constant(-t) + ext.left_mul(y, OrePoly::variable(m));
  rep.normal_table = verify_normal(ext, v);
  for (std::size_t l = 0; l < m; ++l)
    if (!(rep.normal_table[l] == row[l]))
      fail(ErrorKind::NotNormal, "normalizing scalar at generator " + state.names[l] +
                                     " differs from the appended row");

  AlgebraState next;
  next.Q = Q.extended(row);
  next.inverted = state.inverted;
  for (std::size_t j : rep.J) next.inverted[j] = true;
  next.inverted.push_back(false);
  next.provenance = state.provenance;
  next.names = state.names;
  bool original = rep.J.empty() && t.is_zero();
  if (original)
    next.provenance.push_back(OriginalProvenance{i});
  else
    next.provenance.push_back(DerivedProvenance{rep.J, i, t});
  rep.new_name = stage.rename.value_or(original ? stage.name : "w" + std::to_string(i + 1));
  next.names.push_back(rep.new_name);
  next.original_names = state.original_names;
  next.original_names.push_back(stage.name);
  for (const auto& e : state.orig_expr) next.orig_expr.push_back(e.embedded(m + 1));
  TorusElement vgen = TorusElement::generator(m + 1, m);
  next.orig_expr.push_back(
      elem_mul(next.Q, elem_inverse(next.Q, y.embedded(m + 1)), vgen + t.embedded(m + 1)));
  rep.t = t;
  rep.q_row = row;
  return {std::move(next), std::move(rep), std::nullopt};
}

Outcome run_all(const ParameterContext& params,
                const std::vector<StageSpec>& stages) {
  (void)params;
  if (stages.empty()) return InputErrorOutcome{"presentation has no stages"};
  AlgebraState state;
  try {
    state = initial_state(stages[0]);
  } catch (const Error& e) {
    if (!e.is_input_error()) throw;
    return InputErrorOutcome{stage_label(0, stages[0].name) + ": " + e.what()};
  }
  std::vector<StageReport> trace;
  for (std::size_t i = 1; i < stages.size(); ++i) {
    StageResult r;
    try {
      r = run_stage(state, stages[i]);
    } catch (const Error& e) {
      std::string msg = stage_label(i, stages[i].name) + ": " + e.what();
      if (e.is_input_error()) return InputErrorOutcome{msg};
      throw Error(e.kind(), msg);
    }
    trace.push_back(std::move(r.report));
    if (r.witness) {
      WeylOutcome w{std::move(*r.witness), std::move(r.state), std::move(trace), {}};
      for (std::size_t k = i + 1; k < stages.size(); ++k) w.unprocessed.push_back(stages[k].name);
      return w;
    }
    state = std::move(r.state);
  }
  return TorusEmbedding{std::move(state), std::move(trace)};
}

std::string provenance_equation(const AlgebraState& state, std::size_t g,
                                const ParameterContext& ctx) {
  const Provenance& p = state.provenance.at(g);
  if (auto* o = std::get_if<OriginalProvenance>(&p))
    return state.names[g] + " = " + state.original_names[o->original];
  const auto& dp = std::get<DerivedProvenance>(p);
  std::string lhs;
  for (std::size_t j : dp.J) lhs += state.names[j] + "*";
  lhs += state.original_names[dp.original];
  std::vector<std::string> names(state.names.begin(), state.names.begin() + dp.t.ambient());
  std::string out = state.names[g] + " = " + lhs;
  if (dp.t.is_zero()) return out;
  std::string ts = to_string(dp.t, ctx, names);
  if (dp.t.size() > 1) return out + " - (" + ts + ")";
  if (ts[0] == '-') return out + " + " + ts.substr(1);
  return out + " - " + ts;
}

}  // namespace skewtor
