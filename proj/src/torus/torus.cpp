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

#include <cstdlib>
#include <string>

#include "skewtor/torus.hpp"

namespace skewtor {

ExponentVec ExponentVec::unit(std::size_t n, std::size_t j, std::int64_t k) {
  if (j >= n) fail(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(j));
  ExponentVec e(n);
  e.v_[j] = k;
  return e;
}

bool ExponentVec::is_zero() const {
  for (auto x : v_)
    if (x != 0) return false;
  return true;
}

ExponentVec ExponentVec::operator+(const ExponentVec& o) const {
  ExponentVec r = *this;
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] += o.v_[i];
  return r;
}

ExponentVec ExponentVec::operator-(const ExponentVec& o) const {
  ExponentVec r = *this;
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] -= o.v_[i];
  return r;
}

ExponentVec ExponentVec::operator-() const {
  ExponentVec r = *this;
  for (auto& x : r.v_) x = -x;
  return r;
}

ExponentVec ExponentVec::embedded(std::size_t n) const {
  ExponentVec r = *this;
  r.v_.resize(n, 0);
  return r;
}

CommutationMatrix::CommutationMatrix(std::size_t n) : n_(n), e_(n * n) {}

CommutationMatrix::CommutationMatrix(std::size_t n,
                                     std::vector<UnitMonomial> entries)
    : n_(n), e_(std::move(entries)) {
  if (e_.size() != n * n)
    fail(ErrorKind::InvalidMatrix, "expected " + std::to_string(n * n) + " entries");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(*this)(i, i).is_one())
      fail(ErrorKind::InvalidMatrix, "diagonal entry " + std::to_string(i + 1) + " is not 1");
    for (std::size_t j = i + 1; j < n; ++j)
      if (!((*this)(i, j) * (*this)(j, i)).is_one())
        fail(ErrorKind::InvalidMatrix, "entries (" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + ") are not mutually inverse");
  }
}

CommutationMatrix CommutationMatrix::from_upper(
    std::size_t n, const std::vector<UnitMonomial>& upper) {
  if (upper.size() != n * (n - 1) / 2)
    fail(ErrorKind::InvalidMatrix, "wrong number of upper entries");
  std::vector<UnitMonomial> e(n * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      e[i * n + j] = upper[k];
      e[j * n + i] = upper[k].inverse();
      ++k;
    }
  return CommutationMatrix(n, std::move(e));
}

bool CommutationMatrix::all_ones() const {
  for (const auto& u : e_)
    if (!u.is_one()) return false;
  return true;
}

CommutationMatrix CommutationMatrix::extended(
    const std::vector<UnitMonomial>& row) const {
  if (row.size() != n_) fail(ErrorKind::InvalidMatrix, "extension row has wrong length");
  std::size_t m = n_ + 1;
  std::vector<UnitMonomial> e(m * m);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) e[i * m + j] = (*this)(i, j);
  for (std::size_t l = 0; l < n_; ++l) {
    e[n_ * m + l] = row[l];
    e[l * m + n_] = row[l].inverse();
  }
  return CommutationMatrix(m, std::move(e));
}

std::size_t support_limit() {
  static const std::size_t limit = [] {
    if (const char* s = std::getenv("SKEWTOR_MAX_DEGREE")) {
      try {
        long long v = std::stoll(s);
        if (v > 0) return std::size_t(v);
      } catch (...) {
      }
    }
    return std::size_t(100000);
  }();
  return limit;
}

TorusElement TorusElement::monomial(std::size_t n, const ExponentVec& d,
                                    const FieldElement& c) {
  if (d.size() != n) fail(ErrorKind::IndexOutOfRange, "exponent vector length mismatch");
  TorusElement u(n);
  if (!c.is_zero()) u.terms_.emplace(d, c);
  return u;
}

TorusElement TorusElement::constant(std::size_t n, const FieldElement& c) {
  return monomial(n, ExponentVec(n), c);
}

TorusElement TorusElement::generator(std::size_t n, std::size_t j,
                                     std::int64_t power) {
  return monomial(n, ExponentVec::unit(n, j, power));
}

FieldElement TorusElement::coefficient(const ExponentVec& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? FieldElement() : it->second;
}

std::optional<std::pair<ExponentVec, FieldElement>> TorusElement::as_monomial()
    const {
  if (terms_.size() != 1) return std::nullopt;
  return *terms_.begin();
}

void TorusElement::add_term(const ExponentVec& d, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
  TorusElement r = *this;
  r += o;
  return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const {
  TorusElement r = *this;
  r -= o;
  return r;
}

TorusElement TorusElement::operator-() const {
  TorusElement r = *this;
  for (auto& [d, c] : r.terms_) c = -c;
  return r;
}

TorusElement TorusElement::scaled(const FieldElement& c) const {
  TorusElement r(n_);
  if (c.is_zero()) return r;
  for (const auto& [d, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), d, x * c);
  return r;
}

TorusElement TorusElement::scaled(const UnitMonomial& c) const {
  TorusElement r(n_);
  for (const auto& [d, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), d, x * c);
  return r;
}

TorusElement TorusElement::embedded(std::size_t n) const {
  if (n < n_) fail(ErrorKind::IndexOutOfRange, "cannot shrink ambient torus");
  TorusElement r(n);
  for (const auto& [d, c] : terms_) r.terms_.emplace(d.embedded(n), c);
  return r;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
  return a.terms_ == b.terms_;
}

namespace {

// prod_{k>l} q_kl^{a_k b_l}
UnitMonomial reorder_scalar(const CommutationMatrix& Q, const ExponentVec& a,
                            const ExponentVec& b) {
  UnitMonomial s;
  std::size_t n = Q.size();
  for (std::size_t k = 1; k < n; ++k) {
    if (a[k] == 0) continue;
    for (std::size_t l = 0; l < k; ++l) {
      std::int64_t e = a[k] * b[l];
      if (e != 0) s *= Q(k, l).pow(e);
    }
  }
  return s;
}

}  // namespace

std::pair<UnitMonomial, ExponentVec> monomial_mul(const CommutationMatrix& Q,
                                                  const ExponentVec& a,
                                                  const ExponentVec& b) {
  if (a.size() != Q.size() || b.size() != Q.size())
    fail(ErrorKind::IndexOutOfRange, "exponent vector length mismatch");
  return {reorder_scalar(Q, a, b), a + b};
}

TorusElement elem_mul(const CommutationMatrix& Q, const TorusElement& u,
                      const TorusElement& v) {
  TorusElement r(Q.size());
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) {
      auto [s, d] = monomial_mul(Q, a, b);
      r.add_term(d, (ca * cb) * s);
    }
  if (r.size() > support_limit())
    fail(ErrorKind::LimitExceeded, "support size " + std::to_string(r.size()) +
                                       " exceeds SKEWTOR_MAX_DEGREE");
  return r;
}

TorusElement elem_add(const TorusElement& u, const TorusElement& v) { return u + v; }

TorusElement elem_scale(const FieldElement& c, const TorusElement& u) {
  return u.scaled(c);
}

TorusElement elem_inverse(const CommutationMatrix& Q, const TorusElement& u) {
  auto m = u.as_monomial();
  if (!m) fail(ErrorKind::InputError, "only single-term elements are invertible");
  const auto& [d, c] = *m;
  // x^d x^{-d} = s * 1, so (c x^d)^{-1} = (c s)^{-1} x^{-d}.
  auto [s, z] = monomial_mul(Q, d, -d);
  return TorusElement::monomial(Q.size(), -d, (c * FieldElement(s)).inverse());
}

TorusElement elem_pow(const CommutationMatrix& Q, const TorusElement& u,
                      std::int64_t k) {
  if (k < 0) return elem_pow(Q, elem_inverse(Q, u), -k);
  TorusElement r = TorusElement::constant(Q.size(), 1);
  TorusElement base = u;
  while (k > 0) {
    if (k & 1) r = elem_mul(Q, r, base);
    k >>= 1;
    if (k) base = elem_mul(Q, base, base);
  }
  return r;
}

Cocycles qrs(const CommutationMatrix& Q, const ExponentVec& d, std::size_t j) {
  std::size_t n = Q.size();
  if (j >= n) fail(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(j + 1));
  Cocycles c;
  for (std::size_t k = j + 1; k < n; ++k)
    if (d[k] != 0) c.r *= Q(k, j).pow(d[k]);
  for (std::size_t l = 0; l < j; ++l)
    if (d[l] != 0) c.s *= Q(j, l).pow(d[l]);
  c.q = c.r / c.s;
  return c;
}

SelectiveSpace::SelectiveSpace(CommutationMatrix q, std::vector<bool> inv)
    : Q(std::move(q)), inverted(std::move(inv)) {
  if (inverted.size() != Q.size())
    fail(ErrorKind::IndexOutOfRange, "inverted set does not match generator count");
}

SelectiveSpace SelectiveSpace::affine(CommutationMatrix q) {
  std::size_t n = q.size();
  return SelectiveSpace(std::move(q), std::vector<bool>(n, false));
}

SelectiveSpace SelectiveSpace::torus(CommutationMatrix q) {
  std::size_t n = q.size();
  return SelectiveSpace(std::move(q), std::vector<bool>(n, true));
}

std::size_t SelectiveSpace::inverted_count() const {
  std::size_t k = 0;
  for (bool b : inverted) k += b;
  return k;
}

bool membership(const SelectiveSpace& space, const TorusElement& u) {
  for (const auto& [d, c] : u.terms())
    for (std::size_t i = 0; i < d.size(); ++i)
      if (!space.inverted[i] && d[i] < 0) return false;
  return true;
}

bool is_exceptional(const ExponentVec& d, std::size_t j,
                    const std::vector<bool>& inverted) {
  if (j >= d.size() || inverted.size() != d.size())
    fail(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(j + 1));
  if (inverted[j])
    fail(ErrorKind::IndexOutOfRange, "generator " + std::to_string(j + 1) + " is inverted");
  if (d[j] != -1) return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (i != j && !inverted[i] && d[i] < 0) return false;
  return true;
}

bool is_exceptional(const ExponentVec& d, std::size_t j, std::size_t k) {
  if (k > d.size()) fail(ErrorKind::IndexOutOfRange, "localized count too large");
  std::vector<bool> inv(d.size(), false);
  for (std::size_t i = 0; i < k; ++i) inv[i] = true;
  return is_exceptional(d, j, inv);
}

bool is_central(const SelectiveSpace& space, const TorusElement& u) {
  std::size_t n = space.size();
  for (std::size_t j = 0; j < n; ++j) {
    TorusElement x = TorusElement::generator(n, j);
    if (!(elem_mul(space.Q, u, x) == elem_mul(space.Q, x, u))) return false;
  }
  return true;
}

std::string monomial_string(const ExponentVec& d,
                            const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (d[i] != 1) out += "^" + std::to_string(d[i]);
  }
  return out;
}

std::string to_string(const TorusElement& u, const ParameterContext& ctx,
                      const std::vector<std::string>& names) {
  if (u.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : u.terms()) {
    std::string mono = monomial_string(d, names);
    std::string coeff = to_string(c, ctx);
    if (needs_parens(c)) coeff = "(" + coeff + ")";
    bool neg = coeff[0] == '-';
    if (neg) coeff.erase(0, 1);
    std::string body;
    if (mono.empty())
      body = coeff;
    else if (coeff == "1")
      body = mono;
    else
      body = coeff + "*" + mono;
    if (first)
      out += neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace skewtor
