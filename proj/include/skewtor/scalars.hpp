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

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "skewtor/error.hpp"

namespace skewtor {

using Rational = mpq_class;

// Parameter exponent vector. Trailing zeros are trimmed, so vectors of
// different stored length compare as if padded with zeros.
class Exponents {
 public:
  Exponents() = default;
  explicit Exponents(std::vector<std::int64_t> e);
  static Exponents unit(std::size_t index, std::int64_t power = 1);

  std::int64_t operator[](std::size_t i) const {
    return i < e_.size() ? e_[i] : 0;
  }
  std::size_t size() const { return e_.size(); }
  bool is_zero() const { return e_.empty(); }
  const std::vector<std::int64_t>& raw() const { return e_; }

  Exponents operator+(const Exponents& o) const;
  Exponents operator-(const Exponents& o) const;
  Exponents operator-() const;
  Exponents scaled(std::int64_t k) const;
  // Componentwise minimum / maximum.
  static Exponents meet(const Exponents& a, const Exponents& b);
  bool dominates(const Exponents& o) const;  // this >= o componentwise

  friend bool operator==(const Exponents& a, const Exponents& b) {
    return a.e_ == b.e_;
  }
  friend std::strong_ordering operator<=>(const Exponents& a,
                                          const Exponents& b);

 private:
  void trim();
  std::vector<std::int64_t> e_;
};

class ParameterContext {
 public:
  ParameterContext() = default;
  explicit ParameterContext(std::vector<std::string> names);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: constants convert implicitly
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT
  static LaurentPoly monomial(const Rational& c, const Exponents& e);
  static LaurentPoly parameter(std::size_t index, std::int64_t power = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }

  // Lexicographically largest / smallest term.
  const std::pair<const Exponents, Rational>& leading() const;
  const std::pair<const Exponents, Rational>& trailing() const;
  Exponents min_exponents() const;
  // gcd of numerators over lcm of denominators; positive.
  Rational content() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(const Exponents& e) const;
  LaurentPoly times_term(const Rational& c, const Exponents& e) const;

  // Exact quotient in the Laurent ring, if the divisor divides this.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  void add_term(const Exponents& e, const Rational& c);

 private:
  TermMap terms_;
};

// Greatest common divisor up to a unit of the Laurent ring. The result is
// a genuine polynomial with no monomial factor, integer coefficients of
// content one and a positive leading coefficient.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

class UnitMonomial {
 public:
  UnitMonomial() : coeff_(1) {}
  UnitMonomial(const Rational& coeff, Exponents exps);
  static UnitMonomial parameter(std::size_t index, std::int64_t power = 1);

  const Rational& coeff() const { return coeff_; }
  const Exponents& exps() const { return exps_; }
  bool is_one() const { return coeff_ == 1 && exps_.is_zero(); }

  UnitMonomial operator*(const UnitMonomial& o) const;
  UnitMonomial operator/(const UnitMonomial& o) const;
  UnitMonomial& operator*=(const UnitMonomial& o);
  UnitMonomial inverse() const;
  UnitMonomial pow(std::int64_t k) const;

  friend bool operator==(const UnitMonomial& a, const UnitMonomial& b) {
    return a.coeff_ == b.coeff_ && a.exps_ == b.exps_;
  }

 private:
  Rational coeff_;
  Exponents exps_;
};

UnitMonomial um_pow(const UnitMonomial& u, std::int64_t k);
bool um_eq(const UnitMonomial& u, const UnitMonomial& v);

class FieldElement {
 public:
  FieldElement() : den_(1) {}
  FieldElement(const Rational& c);     // NOLINT
  FieldElement(long c);                // NOLINT
  FieldElement(const LaurentPoly& p);  // NOLINT
  FieldElement(const UnitMonomial& u); // NOLINT
  // Normalizes; throws DivisionByZero when den is zero.
  FieldElement(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  std::optional<UnitMonomial> as_unit_monomial() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement operator*(const UnitMonomial& u) const;
  FieldElement inverse() const;

  // Cross-product test a*d == c*b.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  struct Raw {};
  FieldElement(Raw, LaurentPoly num, LaurentPoly den)
      : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

enum class FieldOp { Add, Sub, Mul, Div };
FieldElement field_arith(const FieldElement& a, const FieldElement& b,
                         FieldOp op);

std::string to_string(const Rational& r);
std::string to_string(const LaurentPoly& p, const ParameterContext& ctx);
std::string to_string(const UnitMonomial& u, const ParameterContext& ctx);
std::string to_string(const FieldElement& f, const ParameterContext& ctx);

// True when the printed form is a sum of several terms and needs
// parentheses as a factor.
bool needs_parens(const FieldElement& f);

}  // namespace skewtor
