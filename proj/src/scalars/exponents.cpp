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

#include "skewtor/scalars.hpp"

namespace skewtor {

Exponents::Exponents(std::vector<std::int64_t> e) : e_(std::move(e)) {
  trim();
}

Exponents Exponents::unit(std::size_t index, std::int64_t power) {
  std::vector<std::int64_t> e(index + 1, 0);
  e[index] = power;
  return Exponents(std::move(e));
}

void Exponents::trim() {
  while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

Exponents Exponents::operator+(const Exponents& o) const {
  std::vector<std::int64_t> r(std::max(e_.size(), o.e_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] + o[i];
  return Exponents(std::move(r));
}

Exponents Exponents::operator-(const Exponents& o) const {
  std::vector<std::int64_t> r(std::max(e_.size(), o.e_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] - o[i];
  return Exponents(std::move(r));
}

Exponents Exponents::operator-() const {
  Exponents r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

Exponents Exponents::scaled(std::int64_t k) const {
  if (k == 0) return {};
  Exponents r = *this;
  for (auto& x : r.e_) x *= k;
  return r;
}

Exponents Exponents::meet(const Exponents& a, const Exponents& b) {
  std::vector<std::int64_t> r(std::max(a.e_.size(), b.e_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(a[i], b[i]);
  return Exponents(std::move(r));
}

bool Exponents::dominates(const Exponents& o) const {
  std::size_t n = std::max(e_.size(), o.e_.size());
  for (std::size_t i = 0; i < n; ++i)
    if ((*this)[i] < o[i]) return false;
  return true;
}

std::strong_ordering operator<=>(const Exponents& a, const Exponents& b) {
  std::size_t n = std::max(a.e_.size(), b.e_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

ParameterContext::ParameterContext(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second)
      fail(ErrorKind::InputError, "duplicate parameter '" + names_[i] + "'");
  }
}

std::optional<std::size_t> ParameterContext::index_of(
    const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace skewtor
