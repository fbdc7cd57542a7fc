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
#include <optional>
#include <variant>
#include <vector>

#include "skewtor/torus.hpp"

namespace skewtor {

class ToricAutomorphism {
 public:
  ToricAutomorphism() = default;
  explicit ToricAutomorphism(std::vector<UnitMonomial> lambda)
      : lambda_(std::move(lambda)) {}
  static ToricAutomorphism identity(std::size_t n);

  std::size_t size() const { return lambda_.size(); }
  const std::vector<UnitMonomial>& lambda() const { return lambda_; }
  const UnitMonomial& operator[](std::size_t i) const { return lambda_[i]; }
  // The scalar prod_i lambda_i^{d_i} by which x^d is multiplied.
  UnitMonomial scalar(const ExponentVec& d) const;

  friend bool operator==(const ToricAutomorphism&,
                         const ToricAutomorphism&) = default;

 private:
  std::vector<UnitMonomial> lambda_;
};

TorusElement apply_auto(const ToricAutomorphism& sig, const TorusElement& u);

class SkewDerivation {
 public:
  SkewDerivation(CommutationMatrix Q, ToricAutomorphism sigma,
                 std::vector<TorusElement> images);

  const CommutationMatrix& matrix() const { return Q_; }
  const ToricAutomorphism& sigma() const { return sigma_; }
  const std::vector<TorusElement>& images() const { return images_; }
  std::size_t size() const { return Q_.size(); }
  bool is_validated() const { return validated_; }
  bool is_zero() const;

 private:
  friend SkewDerivation validated(SkewDerivation d);
  friend SkewDerivation inner_derivation(const CommutationMatrix& Q,
                                         const ToricAutomorphism& sig,
                                         const TorusElement& a);

  CommutationMatrix Q_;
  ToricAutomorphism sigma_;
  std::vector<TorusElement> images_;
  bool validated_ = false;
};

struct Violation {
  std::size_t i = 0, j = 0;  // zero-based generator pair, i < j
  TorusElement lhs, rhs;
};

struct ValidationReport {
  std::optional<Violation> violation;
  bool ok() const { return !violation; }
};

// Checks sigma(x_i) d(x_j) + d(x_i) x_j = q_ij (sigma(x_j) d(x_i) + d(x_j) x_i)
// for every i < j and reports the first failing pair.
ValidationReport validate_derivation(const SkewDerivation& d);
// Returns d marked as validated; throws NotADerivation on failure.
SkewDerivation validated(SkewDerivation d);

SkewDerivation inner_derivation(const CommutationMatrix& Q,
                                const ToricAutomorphism& sig,
                                const TorusElement& a);

TorusElement extend_derivation(const SkewDerivation& d, const TorusElement& u);

namespace detail {
// Leibniz extension from raw generator images, without the validation gate.
TorusElement leibniz_extend(const CommutationMatrix& Q,
                            const ToricAutomorphism& sig,
                            const std::vector<TorusElement>& images,
                            const TorusElement& u);
}  // namespace detail

bool is_q_skew(const SkewDerivation& d, const UnitMonomial& mu);

struct HomogeneousComponent {
  ExponentVec weight;
  std::vector<FieldElement> coeffs;  // d(x_j) = coeffs[j] x^{weight + e_j}
};

std::vector<HomogeneousComponent> decompose_homogeneous(const SkewDerivation& d);
std::vector<TorusElement> component_images(std::size_t n,
                                           const HomogeneousComponent& c);

struct InnerComponent {
  TorusElement inducer;
};
struct LocallyInnerComponent {
  std::size_t j;  // zero-based exceptional index
  TorusElement inducer;
};
struct OuterComponent {
  std::vector<FieldElement> coeffs;
};
struct ZeroComponent {};
using Classification = std::variant<ZeroComponent, InnerComponent,
                                    LocallyInnerComponent, OuterComponent>;

Classification classify_component(const HomogeneousComponent& c,
                                  const ToricAutomorphism& sig,
                                  const SelectiveSpace& space);

// Some d with q_j(d) = lambda_j for all j, i.e. sigma is the inner
// automorphism t -> x^d t x^{-d}. Minimal max-norm, then lexicographic.
std::optional<ExponentVec> sigma_inner_witness(const ToricAutomorphism& sig,
                                               const CommutationMatrix& Q);

struct AutomorphismType {
  TorusElement inducer;  // new generator is z - inducer
};
struct DerivationType {
  ExponentVec witness;             // sigma(t) = x^w t x^{-w}
  TorusElement inner_shift;        // new generator is x^{-w} z - inner_shift
  std::vector<TorusElement> z;     // central multipliers of the partials
};
using ExtensionType = std::variant<AutomorphismType, DerivationType>;

ExtensionType classify_extension(const ToricAutomorphism& sig,
                                 const SkewDerivation& d,
                                 const CommutationMatrix& Q);

}  // namespace skewtor
