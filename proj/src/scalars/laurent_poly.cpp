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

#include <numeric>

#include "skewtor/scalars.hpp"

namespace skewtor {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) add_term(Exponents{}, c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, const Exponents& e) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::parameter(std::size_t index, std::int64_t power) {
  return monomial(Rational(1), Exponents::unit(index, power));
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_zero() &&
         terms_.begin()->second == 1;
}

const std::pair<const Exponents, Rational>& LaurentPoly::leading() const {
  if (terms_.empty()) fail(ErrorKind::InputError, "leading term of zero");
  return *terms_.rbegin();
}

const std::pair<const Exponents, Rational>& LaurentPoly::trailing() const {
  if (terms_.empty()) fail(ErrorKind::InputError, "trailing term of zero");
  return *terms_.begin();
}

Exponents LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {};
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) m = Exponents::meet(m, e);
  return m;
}

Rational LaurentPoly::content() const {
  mpz_class g = 0, l = 1;
  for (const auto& [e, c] : terms_) {
    mpz_class n = abs(c.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  if (g == 0) return Rational(1);
  Rational r(g, l);
  r.canonicalize();
  return r;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  Rational r(c);
  r.canonicalize();
  auto [it, inserted] = terms_.try_emplace(e, r);
  if (!inserted) {
    it->second += r;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  LaurentPoly r = *this;
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponents& s) const {
  if (s.is_zero()) return *this;
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + s, c);
  return r;
}

LaurentPoly LaurentPoly::times_term(const Rational& c,
                                    const Exponents& s) const {
  if (c == 0) return {};
  LaurentPoly r;
  for (const auto& [e, x] : terms_)
    r.terms_.emplace_hint(r.terms_.end(), e + s, x * c);
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(
    const LaurentPoly& divisor) const {
  if (divisor.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division");
  if (is_zero()) return LaurentPoly{};
  if (divisor.term_count() == 1) {
    const auto& [e, c] = *divisor.terms_.begin();
    return times_term(1 / c, -e);
  }
  // Both sides shifted to polynomials without monomial factors; then the
  // quotient, if any, is a genuine polynomial and lex division terminates.
  Exponents mf = min_exponents(), mg = divisor.min_exponents();
  LaurentPoly rem = shifted(-mf);
  LaurentPoly g = divisor.shifted(-mg);
  const auto& [eg, cg] = g.leading();
  LaurentPoly quot;
  while (!rem.is_zero()) {
    const auto& [er, cr] = rem.leading();
    if (!er.dominates(eg)) return std::nullopt;
    Exponents te = er - eg;
    Rational tc = cr / cg;
    quot.add_term(te, tc);
    rem -= g.times_term(tc, te);
  }
  return quot.shifted(mf - mg);
}

}  // namespace skewtor
