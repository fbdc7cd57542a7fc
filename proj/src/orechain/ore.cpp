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

#include "skewtor/ore.hpp"

namespace skewtor {

OrePoly OrePoly::constant(const TorusElement& c) {
  OrePoly p(c.ambient());
  p.add_term(0, c);
  return p;
}

OrePoly OrePoly::variable(std::size_t n) {
  OrePoly p(n);
  p.add_term(1, TorusElement::constant(n, 1));
  return p;
}

TorusElement OrePoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : TorusElement(n_);
}

void OrePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void OrePoly::add_term(std::size_t k, const TorusElement& c) {
  if (c.is_zero()) return;
  if (coeffs_.size() <= k) coeffs_.resize(k + 1, TorusElement(n_));
  coeffs_[k] += c;
  trim();
}

OrePoly OrePoly::operator+(const OrePoly& o) const {
  OrePoly r = *this;
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) r.add_term(k, o.coeffs_[k]);
  return r;
}

OrePoly OrePoly::operator-() const {
  OrePoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

OrePoly OrePoly::operator-(const OrePoly& o) const { return *this + (-o); }

OreExtension::OreExtension(SkewDerivation delta) : delta_(std::move(delta)) {
  if (!delta_.is_validated())
    fail(ErrorKind::NotValidated, "Ore extension needs a validated derivation");
}

OrePoly OreExtension::z_times(const OrePoly& p) const {
  OrePoly r(ambient());
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const auto& c = p.coeffs()[k];
    r.add_term(k + 1, apply_auto(delta_.sigma(), c));
    r.add_term(k, extend_derivation(delta_, c));
  }
  return r;
}

OrePoly OreExtension::left_mul(const TorusElement& c, const OrePoly& p) const {
  OrePoly r(ambient());
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    r.add_term(k, elem_mul(delta_.matrix(), c, p.coeffs()[k]));
  return r;
}

OrePoly OreExtension::mul(const OrePoly& a, const OrePoly& b) const {
  OrePoly r(ambient());
  for (std::size_t l = 0; l < b.coeffs().size(); ++l) {
    if (b.coeffs()[l].is_zero()) continue;
    // z^k b_l for increasing k, then times a_k on the left and z^l on the right.
    OrePoly zk = OrePoly::constant(b.coeffs()[l]);
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
      if (k > 0) zk = z_times(zk);
      OrePoly term = left_mul(a.coeffs()[k], zk);
      for (std::size_t j = 0; j < term.coeffs().size(); ++j)
        r.add_term(j + l, term.coeffs()[j]);
    }
  }
  return r;
}

OrePoly OreExtension::commutator(const OrePoly& a, const OrePoly& b) const {
  return mul(a, b) - mul(b, a);
}

std::string to_string(const OrePoly& p, const ParameterContext& ctx,
                      const std::vector<std::string>& names,
                      const std::string& z_name) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const auto& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    std::string zpart = k == 0 ? "" : k == 1 ? z_name : z_name + "^" + std::to_string(k);
    std::string s = to_string(c, ctx, names);
    std::string term;
    if (zpart.empty())
      term = s;
    else if (s == "1")
      term = zpart;
    else if (s == "-1")
      term = "-" + zpart;
    else if (c.size() == 1 && c.terms().begin()->second.is_polynomial() &&
             c.terms().begin()->second.num().term_count() == 1)
      term = s + "*" + zpart;
    else
      term = "(" + s + ")*" + zpart;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

}  // namespace skewtor
