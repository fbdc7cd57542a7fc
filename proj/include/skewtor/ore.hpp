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

#include <cstddef>
#include <string>
#include <vector>

#include "skewtor/skewder.hpp"

namespace skewtor {

// Element sum_k c_k z^k of T[z; sigma, delta] with left torus coefficients.
class OrePoly {
 public:
  OrePoly() = default;
  explicit OrePoly(std::size_t n) : n_(n) {}
  static OrePoly constant(const TorusElement& c);
  static OrePoly variable(std::size_t n);  // z

  std::size_t ambient() const { return n_; }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<TorusElement>& coeffs() const { return coeffs_; }
  TorusElement coeff(std::size_t k) const;

  void add_term(std::size_t k, const TorusElement& c);
  OrePoly operator+(const OrePoly& o) const;
  OrePoly operator-(const OrePoly& o) const;
  OrePoly operator-() const;
  friend bool operator==(const OrePoly& a, const OrePoly& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::size_t n_ = 0;
  std::vector<TorusElement> coeffs_;
};

// The Ore extension T[z; sigma, delta] of the full torus with the mixed
// relation z c = sigma(c) z + delta(c).
class OreExtension {
 public:
  explicit OreExtension(SkewDerivation delta);

  const SkewDerivation& derivation() const { return delta_; }
  std::size_t ambient() const { return delta_.size(); }
  OrePoly mul(const OrePoly& a, const OrePoly& b) const;
  OrePoly left_mul(const TorusElement& c, const OrePoly& p) const;
  OrePoly z_times(const OrePoly& p) const;
  OrePoly commutator(const OrePoly& a, const OrePoly& b) const;  // ab - ba

 private:
  SkewDerivation delta_;
};

std::string to_string(const OrePoly& p, const ParameterContext& ctx,
                      const std::vector<std::string>& names,
                      const std::string& z_name);

}  // namespace skewtor
