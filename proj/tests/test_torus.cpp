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

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace skewtor;
using namespace skewtor::test;

TEST_CASE("monomial_mul: single relation") {
  auto c = quantum_plane({"x1", "x2"});
  auto [s, e] = monomial_mul(c.Q, ExponentVec{0, 1}, ExponentVec{1, 0});
  CHECK(s == c.u("q^-1"));
  CHECK(e == ExponentVec{1, 1});
}

TEST_CASE("monomial_mul: commutative matrix") {
  CommutationMatrix Q(3);
  ExponentVec a{2, -1, 3}, b{-1, 0, 2};
  auto [s, e] = monomial_mul(Q, a, b);
  CHECK(s.is_one());
  CHECK(e == a + b);
}

TEST_CASE("monomial_mul: three generators against the word oracle") {
  auto c = pqr_space();
  ExponentVec a{-1, 1, 1}, b = ExponentVec::unit(3, 0);
  auto got = monomial_mul(c.Q, a, b);
  auto want = word_oracle(c.Q, a, b);
  CHECK(got.first == want.first);
  CHECK(got.second == want.second);
  CHECK(got.first == c.u("(p*q)^-1"));
  // x_1 x^a needs no reordering.
  CHECK(monomial_mul(c.Q, b, a).first.is_one());
  CHECK(qrs(c.Q, a, 0).r == got.first);
  CHECK(qrs(c.Q, a, 0).s.is_one());
}

TEST_CASE("elem_mul: monomial inverses") {
  auto c = pqr_space();
  ExponentVec d{2, -1, 3};
  TorusElement u = TorusElement::monomial(3, d), v = TorusElement::monomial(3, -d);
  TorusElement uv = elem_mul(c.Q, u, v), vu = elem_mul(c.Q, v, u);
  REQUIRE(uv.size() == 1);
  REQUIRE(vu.size() == 1);
  CHECK(uv.terms().begin()->first.is_zero());
  FieldElement a = uv.terms().begin()->second, b = vu.terms().begin()->second;
  CHECK(a.as_unit_monomial().has_value());
  auto [s, e] = monomial_mul(c.Q, d, -d);
  CHECK(a == FieldElement(s));
  CHECK(a == b);  // x^{-d} = a (x^d)^{-1} on either side
  CHECK(elem_mul(c.Q, elem_inverse(c.Q, u), u) == TorusElement::constant(3, 1));
}

TEST_CASE("elem_mul: hand expansion in the quantum plane") {
  auto c = quantum_plane({"x1", "x2"});
  TorusElement got = elem_mul(c.Q, c.t("x1 + x2"), c.t("x1 - x2"));
  // x1^2 - x1 x2 + x2 x1 - x2^2 with x1 x2 = q x2 x1.
  CHECK(got == c.t("x1^2 + (1 - q)*x2*x1 - x2^2"));
  CHECK(got == c.t("x1^2 + (q^-1 - 1)*x1*x2 - x2^2"));
}

TEST_CASE("elem_add with the negative is zero") {
  auto c = pqr_space();
  TorusElement u = c.t("3*x1^-1*x2 + q*x3^2 - 1/2");
  TorusElement z = elem_add(u, elem_scale(FieldElement(-1), u));
  CHECK(z.is_zero());
  CHECK(z.terms().empty());
}

TEST_CASE("qrs on the three-generator matrix") {
  auto c = pqr_space();
  ExponentVec d{-1, 1, 1};
  CHECK(qrs(c.Q, d, 0).q == c.u("(p*q)^-1"));
  CHECK(qrs(c.Q, d, 1).q == c.u("(q*r)^-1"));
  CHECK(qrs(c.Q, d, 2).q == c.u("r*p^-1"));
}

TEST_CASE("qrs in single-parameter quantum affine space") {
  for (std::size_t n = 2; n <= 6; ++n) {
    ParameterContext ctx({"q"});
    std::vector<UnitMonomial> up(n * (n - 1) / 2, UnitMonomial::parameter(0));
    CommutationMatrix Q = CommutationMatrix::from_upper(n, up);
    ExponentVec d(n);
    d[0] = -1;
    for (std::size_t i = 1; i < n; ++i) d[i] = 1;
    CHECK(qrs(Q, d, 0).q == UnitMonomial::parameter(0, 1 - std::int64_t(n)));
    for (std::size_t i = 1; i < n; ++i) {
      std::int64_t one_based = i + 1;
      CHECK(qrs(Q, d, i).q == UnitMonomial::parameter(0, 2 * one_based - 3 - std::int64_t(n)));
    }
  }
}

TEST_CASE("qrs of the zero weight") {
  auto c = pqr_space();
  for (std::size_t j = 0; j < 3; ++j) {
    auto r = qrs(c.Q, ExponentVec(3), j);
    CHECK(r.q.is_one());
    CHECK(r.r.is_one());
    CHECK(r.s.is_one());
  }
}

TEST_CASE("membership in a selectively localized plane") {
  auto c = quantum_plane({"x1", "x2"});
  SelectiveSpace s(c.Q, {true, false});
  CHECK(membership(s, c.t("x1^-1*x2")));
  CHECK_FALSE(membership(s, c.t("x2^-1")));
  CHECK(membership(s, c.t("0")));
  CHECK(membership(SelectiveSpace::torus(c.Q), c.t("x2^-1")));
  CHECK_FALSE(membership(SelectiveSpace::affine(c.Q), c.t("x1^-1")));
}

TEST_CASE("membership of the locally inner inducer at the sixth stage") {
  // Q_5 on x11, x12, x21, y22, x13.
  Ctx c{ParameterContext({"q"}), {"x11", "x12", "x21", "y22", "x13"}, {}};
  c.Q = CommutationMatrix::from_upper(
      5, c.us({"q", "q", "1", "q", "1", "1", "q", "1", "1", "q"}));
  TorusElement t = c.t("q*x11^-1*(y22 + q*x12*x21)*x13");
  TorusElement inducer = elem_mul(c.Q, c.t("x12^-1"), t);
  SelectiveSpace s5(c.Q, {true, false, false, false, false});
  SelectiveSpace s5_loc(c.Q, {true, true, false, false, false});
  CHECK_FALSE(membership(s5, inducer));
  CHECK(membership(s5_loc, inducer));
  CHECK(inducer.coefficient(ExponentVec{-1, -1, 0, 1, 1}) == FieldElement(c.s("1")));
  CHECK(inducer.coefficient(ExponentVec{-1, 0, 1, 0, 1}) == FieldElement(c.s("q")));
}

TEST_CASE("membership is closed under products and sums") {
  auto c = pqr_space();
  SelectiveSpace s(c.Q, {false, true, false});
  TorusElement a = c.t("x1*x2^-3 + x3"), b = c.t("x2^2*x3^4 - q*x1");
  CHECK(membership(s, elem_mul(c.Q, a, b)));
  CHECK(membership(s, a + b));
}

TEST_CASE("is_exceptional") {
  CHECK(is_exceptional(ExponentVec{-1, 1, 1}, 0, std::size_t(0)));
  CHECK_FALSE(is_exceptional(ExponentVec{-1, -1, 0}, 0, std::size_t(0)));
  // The inverted first index is ignored; d_3 = -1 and d_2 >= 0.
  CHECK(is_exceptional(ExponentVec{-2, 1, -1}, 2, std::size_t(1)));
  CHECK_FALSE(is_exceptional(ExponentVec{-2, 1, -2}, 2, std::size_t(1)));
  CHECK_THROWS_AS(is_exceptional(ExponentVec{-1, 1, 1}, 0, std::size_t(1)), Error);
  CHECK(is_exceptional(ExponentVec{3, -1}, 1, std::vector<bool>{true, false}));
  CHECK_FALSE(is_exceptional(ExponentVec{-1, -1}, 1, std::vector<bool>{false, false}));
}

TEST_CASE("is_central") {
  auto c = quantum_plane({"x1", "x2"});
  SelectiveSpace s = SelectiveSpace::affine(c.Q);
  CHECK(is_central(s, c.t("1")));
  CHECK_FALSE(is_central(s, c.t("x1")));
  CHECK(is_central(s, c.t("0")));
  Ctx comm{ParameterContext({"q"}), {"a", "b"}, CommutationMatrix(2)};
  CHECK(is_central(SelectiveSpace::affine(comm.Q), comm.t("a*b^2 + q*a")));
}

TEST_CASE("commutation matrices are validated") {
  ParameterContext ctx({"q"});
  auto q = UnitMonomial::parameter(0);
  CHECK_NOTHROW(CommutationMatrix(2, {UnitMonomial(), q, q.inverse(), UnitMonomial()}));
  CHECK_THROWS_AS(CommutationMatrix(2, {q, q, q.inverse(), UnitMonomial()}), Error);
  CHECK_THROWS_AS(CommutationMatrix(2, {UnitMonomial(), q, q, UnitMonomial()}), Error);
  CHECK_THROWS_AS(CommutationMatrix(2, {UnitMonomial()}), Error);
  auto Q = CommutationMatrix::from_upper(2, {q});
  CHECK(Q(1, 0) == q.inverse());
  auto E = Q.extended({q, q.pow(2)});
  CHECK(E.size() == 3);
  CHECK(E(0, 2) == q.inverse());
  CHECK(E(2, 1) == q.pow(2));
}

TEST_CASE("elem_inverse requires a single term") {
  auto c = quantum_plane({"x1", "x2"});
  CHECK_THROWS_AS(elem_inverse(c.Q, c.t("x1 + x2")), Error);
  CHECK_THROWS_AS(elem_inverse(c.Q, c.t("0")), Error);
  TorusElement u = c.t("2*q*x1*x2^-1");
  CHECK(elem_mul(c.Q, u, elem_inverse(c.Q, u)) == c.t("1"));
  CHECK(elem_pow(c.Q, u, -2) == elem_mul(c.Q, elem_inverse(c.Q, u), elem_inverse(c.Q, u)));
  CHECK(elem_pow(c.Q, c.t("x1 + x2"), 2) == elem_mul(c.Q, c.t("x1 + x2"), c.t("x1 + x2")));
}

TEST_CASE("torus elements print in normal form") {
  auto c = quantum_plane({"x1", "x2"});
  CHECK(c.str(c.t("x2*x1")) == "q^-1*x1*x2");
  CHECK(c.str(c.t("(q - q)*x1")) == "0");
  CHECK(c.str(c.t("x1^-1 - 2")) == "x1^-1 - 2");
  CHECK(monomial_string(ExponentVec{2, -1}, c.gens) == "x1^2*x2^-1");
  CHECK(monomial_string(ExponentVec{0, 0}, c.gens).empty());
}
