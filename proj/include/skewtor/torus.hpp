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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewtor/scalars.hpp"

namespace skewtor {

class ExponentVec {
 public:
  ExponentVec() = default;
  explicit ExponentVec(std::size_t n) : v_(n, 0) {}
  explicit ExponentVec(std::vector<std::int64_t> v) : v_(std::move(v)) {}
  ExponentVec(std::initializer_list<std::int64_t> v) : v_(v) {}
  static ExponentVec unit(std::size_t n, std::size_t j, std::int64_t k = 1);

  std::size_t size() const { return v_.size(); }
  std::int64_t operator[](std::size_t i) const { return v_[i]; }
  std::int64_t& operator[](std::size_t i) { return v_[i]; }
  const std::vector<std::int64_t>& raw() const { return v_; }
  bool is_zero() const;

  ExponentVec operator+(const ExponentVec& o) const;
  ExponentVec operator-(const ExponentVec& o) const;
  ExponentVec operator-() const;
  // Zero-padded to length n >= size().
  ExponentVec embedded(std::size_t n) const;

  friend bool operator==(const ExponentVec&, const ExponentVec&) = default;
  friend auto operator<=>(const ExponentVec& a, const ExponentVec& b) {
    return a.v_ <=> b.v_;
  }

 private:
  std::vector<std::int64_t> v_;
};

class CommutationMatrix {
 public:
  CommutationMatrix() = default;
  explicit CommutationMatrix(std::size_t n);
  // Row-major n*n entries; throws InvalidMatrix unless q_ii = 1 and
  // q_ji = q_ij^{-1}.
  CommutationMatrix(std::size_t n, std::vector<UnitMonomial> entries);
  // Entries above the diagonal, row by row: q_12, q_13, ..., q_{n-1,n}.
  static CommutationMatrix from_upper(std::size_t n,
                                      const std::vector<UnitMonomial>& upper);

  std::size_t size() const { return n_; }
  const UnitMonomial& operator()(std::size_t i, std::size_t j) const {
    return e_[i * n_ + j];
  }
  bool all_ones() const;
  // Appends a generator whose row is q_{n,l} = row[l].
  CommutationMatrix extended(const std::vector<UnitMonomial>& row) const;

  friend bool operator==(const CommutationMatrix&,
                         const CommutationMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<UnitMonomial> e_;
};

class TorusElement {
 public:
  using TermMap = std::map<ExponentVec, FieldElement>;

  TorusElement() = default;
  explicit TorusElement(std::size_t n) : n_(n) {}
  static TorusElement monomial(std::size_t n, const ExponentVec& d,
                               const FieldElement& c = FieldElement(1));
  static TorusElement constant(std::size_t n, const FieldElement& c);
  static TorusElement generator(std::size_t n, std::size_t j,
                                std::int64_t power = 1);

  std::size_t ambient() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  FieldElement coefficient(const ExponentVec& d) const;
  std::optional<std::pair<ExponentVec, FieldElement>> as_monomial() const;

  void add_term(const ExponentVec& d, const FieldElement& c);
  TorusElement operator+(const TorusElement& o) const;
  TorusElement operator-(const TorusElement& o) const;
  TorusElement operator-() const;
  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  TorusElement scaled(const FieldElement& c) const;
  TorusElement scaled(const UnitMonomial& c) const;
  TorusElement embedded(std::size_t n) const;

  friend bool operator==(const TorusElement& a, const TorusElement& b);

 private:
  std::size_t n_ = 0;
  TermMap terms_;
};

// Runaway guard: maximum support size of any product, read once from
// SKEWTOR_MAX_DEGREE (default 100000).
std::size_t support_limit();

std::pair<UnitMonomial, ExponentVec> monomial_mul(const CommutationMatrix& Q,
                                                  const ExponentVec& a,
                                                  const ExponentVec& b);
TorusElement elem_mul(const CommutationMatrix& Q, const TorusElement& u,
                      const TorusElement& v);
TorusElement elem_add(const TorusElement& u, const TorusElement& v);
TorusElement elem_scale(const FieldElement& c, const TorusElement& u);
// Inverse of a single-term element; throws InputError otherwise.
TorusElement elem_inverse(const CommutationMatrix& Q, const TorusElement& u);
TorusElement elem_pow(const CommutationMatrix& Q, const TorusElement& u,
                      std::int64_t k);

struct Cocycles {
  UnitMonomial q, r, s;
};
// q_j(d) = prod_k q_kj^{d_k}, r_j(d) = prod_{k>j} q_kj^{d_k},
// s_j(d) = prod_{l<j} q_jl^{d_l}. Indices are zero-based.
Cocycles qrs(const CommutationMatrix& Q, const ExponentVec& d, std::size_t j);

struct SelectiveSpace {
  CommutationMatrix Q;
  std::vector<bool> inverted;

  SelectiveSpace() = default;
  SelectiveSpace(CommutationMatrix q, std::vector<bool> inv);
  static SelectiveSpace affine(CommutationMatrix q);
  static SelectiveSpace torus(CommutationMatrix q);
  std::size_t size() const { return Q.size(); }
  bool is_inverted(std::size_t i) const { return inverted[i]; }
  std::size_t inverted_count() const;
};

bool membership(const SelectiveSpace& space, const TorusElement& u);
bool is_exceptional(const ExponentVec& d, std::size_t j,
                    const std::vector<bool>& inverted);
// Variant in which the first k generators are the inverted ones.
bool is_exceptional(const ExponentVec& d, std::size_t j, std::size_t k);
bool is_central(const SelectiveSpace& space, const TorusElement& u);

std::string to_string(const TorusElement& u, const ParameterContext& ctx,
                      const std::vector<std::string>& names);
std::string monomial_string(const ExponentVec& d,
                            const std::vector<std::string>& names);

}  // namespace skewtor
