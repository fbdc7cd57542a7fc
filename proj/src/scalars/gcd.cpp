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

#include <algorithm>
#include <set>

#include "skewtor/scalars.hpp"

namespace skewtor {
namespace {

// Recursive primitive-PRS gcd on genuine polynomials (all exponents >= 0).

std::set<std::size_t> variables(const LaurentPoly& f) {
  std::set<std::size_t> v;
  for (const auto& [e, c] : f.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) v.insert(i);
  return v;
}

std::int64_t degree_in(const LaurentPoly& f, std::size_t v) {
  std::int64_t d = 0;
  for (const auto& [e, c] : f.terms()) d = std::max(d, e[v]);
  return d;
}

Exponents strip(const Exponents& e, std::size_t v) {
  std::vector<std::int64_t> r = e.raw();
  if (v < r.size()) r[v] = 0;
  return Exponents(std::move(r));
}

std::map<std::int64_t, LaurentPoly> split(const LaurentPoly& f,
                                          std::size_t v) {
  std::map<std::int64_t, LaurentPoly> out;
  for (const auto& [e, c] : f.terms()) out[e[v]].add_term(strip(e, v), c);
  return out;
}

LaurentPoly coeff_in(const LaurentPoly& f, std::size_t v, std::int64_t k) {
  LaurentPoly r;
  for (const auto& [e, c] : f.terms())
    if (e[v] == k) r.add_term(strip(e, v), c);
  return r;
}

LaurentPoly exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) fail(ErrorKind::Inconsistent, "gcd: inexact division");
  return *q;
}

LaurentPoly normalize_unit(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  Rational c = f.content();
  if (f.leading().second < 0) c = -c;
  return f.scaled(1 / c);
}

LaurentPoly gcd_rec(const LaurentPoly& f, const LaurentPoly& g);

LaurentPoly content_in(const LaurentPoly& f, std::size_t v) {
  LaurentPoly acc;
  for (auto& [k, c] : split(f, v)) {
    acc = acc.is_zero() ? normalize_unit(c) : gcd_rec(acc, c);
    if (acc.is_constant()) return LaurentPoly(1);
  }
  return acc;
}

LaurentPoly prem(LaurentPoly a, const LaurentPoly& b, std::size_t v) {
  std::int64_t n = degree_in(b, v);
  LaurentPoly lcb = coeff_in(b, v, n);
  while (!a.is_zero()) {
    std::int64_t m = degree_in(a, v);
    if (m < n) break;
    LaurentPoly lca = coeff_in(a, v, m);
    a = a * lcb - (lca * b).shifted(Exponents::unit(v, m - n));
  }
  return a;
}

LaurentPoly gcd_rec(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero()) return normalize_unit(g);
  if (g.is_zero()) return normalize_unit(f);
  if (f.is_constant() || g.is_constant()) return LaurentPoly(1);
  auto vf = variables(f), vg = variables(g);
  std::size_t v = std::min(*vf.begin(), *vg.begin());
  if (!vf.count(v)) return gcd_rec(f, content_in(g, v));
  if (!vg.count(v)) return gcd_rec(content_in(f, v), g);

  LaurentPoly cf = content_in(f, v), cg = content_in(g, v);
  LaurentPoly c = gcd_rec(cf, cg);
  LaurentPoly a = exact(f, cf), b = exact(g, cg);
  if (degree_in(a, v) < degree_in(b, v)) std::swap(a, b);
  while (true) {
    LaurentPoly r = prem(a, b, v);
    if (r.is_zero()) break;
    if (degree_in(r, v) == 0) {
      b = LaurentPoly(1);
      break;
    }
    a = std::move(b);
    b = exact(r, content_in(r, v));
  }
  if (!b.is_constant()) b = exact(b, content_in(b, v));
  return normalize_unit(c * b);
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly f = a.is_zero() ? a : a.shifted(-a.min_exponents());
  LaurentPoly g = b.is_zero() ? b : b.shifted(-b.min_exponents());
  if (f.is_zero() && g.is_zero()) return LaurentPoly(1);
  return gcd_rec(f, g);
}

}  // namespace skewtor
