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

#include "skewtor/scalars.hpp"

namespace skewtor {

UnitMonomial::UnitMonomial(const Rational& coeff, Exponents exps)
    : coeff_(coeff), exps_(std::move(exps)) {
  coeff_.canonicalize();
  if (coeff_ == 0) fail(ErrorKind::InputError, "unit monomial with zero coefficient");
}

UnitMonomial UnitMonomial::parameter(std::size_t index, std::int64_t power) {
  return UnitMonomial(Rational(1), Exponents::unit(index, power));
}

UnitMonomial UnitMonomial::operator*(const UnitMonomial& o) const {
  UnitMonomial r = *this;
  r *= o;
  return r;
}

UnitMonomial& UnitMonomial::operator*=(const UnitMonomial& o) {
  coeff_ *= o.coeff_;
  exps_ = exps_ + o.exps_;
  return *this;
}

UnitMonomial UnitMonomial::operator/(const UnitMonomial& o) const {
  return *this * o.inverse();
}

UnitMonomial UnitMonomial::inverse() const {
  return UnitMonomial(Rational(1) / coeff_, -exps_);
}

UnitMonomial UnitMonomial::pow(std::int64_t k) const {
  if (k == 0) return {};
  Rational base = k > 0 ? coeff_ : Rational(1) / coeff_;
  std::uint64_t m = k > 0 ? std::uint64_t(k) : std::uint64_t(-k);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), m);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), m);
  return UnitMonomial(Rational(num, den), exps_.scaled(k));
}

UnitMonomial um_pow(const UnitMonomial& u, std::int64_t k) { return u.pow(k); }

bool um_eq(const UnitMonomial& u, const UnitMonomial& v) { return u == v; }

FieldElement::FieldElement(const Rational& c) : num_(c), den_(1) {}

FieldElement::FieldElement(long c) : num_(Rational(c)), den_(1) {}

FieldElement::FieldElement(const LaurentPoly& p) : num_(p), den_(1) {}

FieldElement::FieldElement(const UnitMonomial& u)
    : num_(LaurentPoly::monomial(u.coeff(), u.exps())), den_(1) {}

FieldElement::FieldElement(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void FieldElement::normalize() {
  if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.term_count() == 1) {
    const auto& [e, c] = *den_.terms().begin();
    num_ = num_.times_term(1 / c, -e);
    den_ = LaurentPoly(1);
    return;
  }
  Exponents mn = num_.min_exponents(), md = den_.min_exponents();
  LaurentPoly n = num_.shifted(-mn), d = den_.shifted(-md);
  LaurentPoly g = poly_gcd(n, d);
  if (!g.is_one()) {
    n = *n.divide_exact(g);
    d = *d.divide_exact(g);
  }
  Rational c;
  if (d.term_count() == 1) {
    c = d.terms().begin()->second;
    d = LaurentPoly(1);
  } else {
    c = d.content();
    if (d.leading().second < 0) c = -c;
    d = d.scaled(1 / c);
  }
  num_ = n.times_term(1 / c, mn - md);
  den_ = std::move(d);
}

std::optional<UnitMonomial> FieldElement::as_unit_monomial() const {
  if (num_.term_count() != 1 || den_.term_count() != 1) return std::nullopt;
  const auto& [en, cn] = *num_.terms().begin();
  const auto& [ed, cd] = *den_.terms().begin();
  return UnitMonomial(cn / cd, en - ed);
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (den_.is_one() && o.den_.is_one()) return FieldElement(Raw{}, num_ + o.num_, den_);
  if (den_ == o.den_) return FieldElement(num_ + o.num_, den_);
  return FieldElement(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return *this + (-o);
}

FieldElement FieldElement::operator-() const {
  return FieldElement(Raw{}, -num_, den_);
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  *this = *this + o;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  *this = *this - o;
  return *this;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (den_.is_one() && o.den_.is_one()) return FieldElement(Raw{}, num_ * o.num_, den_);
  return FieldElement(num_ * o.num_, den_ * o.den_);
}

FieldElement FieldElement::operator*(const UnitMonomial& u) const {
  return FieldElement(Raw{}, num_.times_term(u.coeff(), u.exps()), den_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero scalar");
  return FieldElement(num_ * o.den_, den_ * o.num_);
}

FieldElement FieldElement::inverse() const { return FieldElement(1) / *this; }

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.den_.is_one() && b.den_.is_one()) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b,
                         FieldOp op) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Div: return a / b;
  }
  return {};
}

}  // namespace skewtor
