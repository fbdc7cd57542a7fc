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

#include "skewtor/skewder.hpp"

#include <map>
#include <set>
#include <string>

#include "skewtor/lattice.hpp"

namespace skewtor {

ToricAutomorphism ToricAutomorphism::identity(std::size_t n) {
  return ToricAutomorphism(std::vector<UnitMonomial>(n));
}

UnitMonomial ToricAutomorphism::scalar(const ExponentVec& d) const {
  if (d.size() != lambda_.size())
    fail(ErrorKind::IndexOutOfRange, "automorphism size mismatch");
  UnitMonomial s;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) s *= lambda_[i].pow(d[i]);
  return s;
}

TorusElement apply_auto(const ToricAutomorphism& sig, const TorusElement& u) {
  TorusElement r(u.ambient());
  for (const auto& [d, c] : u.terms()) r.add_term(d, c * sig.scalar(d));
  return r;
}

SkewDerivation::SkewDerivation(CommutationMatrix Q, ToricAutomorphism sigma,
                               std::vector<TorusElement> images)
    : Q_(std::move(Q)), sigma_(std::move(sigma)), images_(std::move(images)) {
  std::size_t n = Q_.size();
  if (sigma_.size() != n || images_.size() != n)
    fail(ErrorKind::ArityMismatch, "derivation data does not match generator count " +
                                       std::to_string(n));
  for (auto& im : images_) {
    if (im.ambient() == 0 && im.is_zero()) im = TorusElement(n);
    if (im.ambient() != n) fail(ErrorKind::ArityMismatch, "image lives in the wrong torus");
  }
}

bool SkewDerivation::is_zero() const {
  for (const auto& im : images_)
    if (!im.is_zero()) return false;
  return true;
}

namespace detail {
namespace {

class Extender {
 public:
  Extender(const CommutationMatrix& Q, const ToricAutomorphism& sig,
           const std::vector<TorusElement>& images)
      : Q_(Q), sig_(sig), images_(images), n_(Q.size()) {}

  TorusElement apply(const TorusElement& u) {
    TorusElement r(n_);
    for (const auto& [a, c] : u.terms()) {
      if (a.is_zero()) continue;
      r += of_monomial(a).scaled(c);
    }
    return r;
  }

 private:
  // d(x^a) with x^a = P * x_m^k, m the highest index with a_m != 0:
  // d(x^a) = sigma(P) d(x_m^k) + d(P) x_m^k.
  const TorusElement& of_monomial(const ExponentVec& a) {
    auto it = memo_.find(a);
    if (it != memo_.end()) return it->second;
    std::size_t m = n_;
    while (m > 0 && a[m - 1] == 0) --m;
    --m;
    std::int64_t k = a[m];
    ExponentVec prefix = a;
    prefix[m] = 0;
    TorusElement result = power(m, k);
    if (!prefix.is_zero()) {
      TorusElement p = TorusElement::monomial(n_, prefix);
      TorusElement g = TorusElement::monomial(n_, ExponentVec::unit(n_, m, k));
      result = elem_mul(Q_, apply_auto(sig_, p), result) +
               elem_mul(Q_, of_monomial(prefix), g);
    }
    return memo_.emplace(a, std::move(result)).first->second;
  }

  // d(x_m^k) by d(g g^{k-1}) = sigma(g) d(g^{k-1}) + d(g) g^{k-1} and
  // d(g^{-1}) = -sigma(g)^{-1} d(g) g^{-1}.
  TorusElement power(std::size_t m, std::int64_t k) {
    auto key = std::make_pair(m, k);
    auto it = powers_.find(key);
    if (it != powers_.end()) return it->second;
    TorusElement r;
    if (k == 1) {
      r = images_[m];
    } else if (k == -1) {
      TorusElement inv = TorusElement::generator(n_, m, -1);
      r = -elem_mul(Q_, elem_mul(Q_, inv, images_[m]), inv)
               .scaled(FieldElement(sig_[m].inverse()));
    } else {
      std::int64_t step = k > 0 ? 1 : -1;
      TorusElement g = TorusElement::generator(n_, m, step);
      TorusElement rest = TorusElement::generator(n_, m, k - step);
      r = elem_mul(Q_, apply_auto(sig_, g), power(m, k - step)) +
          elem_mul(Q_, power(m, step), rest);
    }
    powers_.emplace(key, r);
    return r;
  }

  const CommutationMatrix& Q_;
  const ToricAutomorphism& sig_;
  const std::vector<TorusElement>& images_;
  std::size_t n_;
  std::map<ExponentVec, TorusElement> memo_;
  std::map<std::pair<std::size_t, std::int64_t>, TorusElement> powers_;
};

}  // namespace

TorusElement leibniz_extend(const CommutationMatrix& Q,
                            const ToricAutomorphism& sig,
                            const std::vector<TorusElement>& images,
                            const TorusElement& u) {
  if (u.ambient() != Q.size())
    fail(ErrorKind::ArityMismatch, "element lives in the wrong torus");
  Extender ext(Q, sig, images);
  return ext.apply(u);
}

}  // namespace detail

ValidationReport validate_derivation(const SkewDerivation& d) {
  const auto& Q = d.matrix();
  const auto& sig = d.sigma();
  const auto& im = d.images();
  std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      TorusElement xi = TorusElement::generator(n, i);
      TorusElement xj = TorusElement::generator(n, j);
      TorusElement lhs = elem_mul(Q, xi, im[j]).scaled(FieldElement(sig[i])) +
                         elem_mul(Q, im[i], xj);
      TorusElement rhs = (elem_mul(Q, xj, im[i]).scaled(FieldElement(sig[j])) +
                          elem_mul(Q, im[j], xi))
                             .scaled(FieldElement(Q(i, j)));
      if (!(lhs == rhs)) return {Violation{i, j, lhs, rhs}};
    }
  return {};
}

SkewDerivation validated(SkewDerivation d) {
  auto report = validate_derivation(d);
  if (!report.ok())
    fail(ErrorKind::NotADerivation,
         "Leibniz rule fails on the relation between generators " +
             std::to_string(report.violation->i + 1) + " and " +
             std::to_string(report.violation->j + 1));
  d.validated_ = true;
  return d;
}

SkewDerivation inner_derivation(const CommutationMatrix& Q,
                                const ToricAutomorphism& sig,
                                const TorusElement& a) {
  std::size_t n = Q.size();
  std::vector<TorusElement> images;
  for (std::size_t j = 0; j < n; ++j) {
    TorusElement x = TorusElement::generator(n, j);
    images.push_back(elem_mul(Q, a, x) -
                     elem_mul(Q, x, a).scaled(FieldElement(sig[j])));
  }
  SkewDerivation d(Q, sig, std::move(images));
  d.validated_ = true;
  return d;
}

TorusElement extend_derivation(const SkewDerivation& d, const TorusElement& u) {
  if (!d.is_validated())
    fail(ErrorKind::NotValidated, "derivation must pass validation before extension");
  return detail::leibniz_extend(d.matrix(), d.sigma(), d.images(), u);
}

bool is_q_skew(const SkewDerivation& d, const UnitMonomial& mu) {
  for (std::size_t j = 0; j < d.size(); ++j) {
    const auto& im = d.images()[j];
    TorusElement ds = im.scaled(FieldElement(d.sigma()[j]));
    TorusElement sd = apply_auto(d.sigma(), im).scaled(FieldElement(mu));
    if (!(ds == sd)) return false;
  }
  return true;
}

std::vector<HomogeneousComponent> decompose_homogeneous(const SkewDerivation& d) {
  std::size_t n = d.size();
  std::map<ExponentVec, std::vector<FieldElement>> by_weight;
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [e, c] : d.images()[j].terms()) {
      ExponentVec w = e - ExponentVec::unit(n, j);
      auto [it, fresh] = by_weight.try_emplace(w, std::vector<FieldElement>(n));
      it->second[j] = c;
    }
  std::vector<HomogeneousComponent> out;
  for (auto& [w, c] : by_weight) out.push_back({w, std::move(c)});
  return out;
}

std::vector<TorusElement> component_images(std::size_t n,
                                           const HomogeneousComponent& c) {
  std::vector<TorusElement> images;
  for (std::size_t j = 0; j < n; ++j)
    images.push_back(
        TorusElement::monomial(n, c.weight + ExponentVec::unit(n, j), c.coeffs[j]));
  return images;
}

Classification classify_component(const HomogeneousComponent& c,
                                  const ToricAutomorphism& sig,
                                  const SelectiveSpace& space) {
  std::size_t n = space.size();
  const ExponentVec& d = c.weight;
  if (d.size() != n || c.coeffs.size() != n || sig.size() != n)
    fail(ErrorKind::IndexOutOfRange, "component size mismatch");
  bool nonzero = false;
  for (std::size_t l = 0; l < n; ++l) {
    if (c.coeffs[l].is_zero()) continue;
    nonzero = true;
    if (!membership(space, TorusElement::monomial(n, d + ExponentVec::unit(n, l))))
      fail(ErrorKind::Inconsistent, "component image of generator " +
                                        std::to_string(l + 1) + " leaves the space");
  }
  if (!nonzero) return ZeroComponent{};

  std::vector<Cocycles> cs;
  std::optional<std::size_t> pivot;
  for (std::size_t l = 0; l < n; ++l) {
    cs.push_back(qrs(space.Q, d, l));
    if (!pivot && !(cs[l].q == sig[l])) pivot = l;
  }
  if (!pivot) return OuterComponent{c.coeffs};

  auto factor = [&](std::size_t l) {
    return FieldElement(cs[l].r) - FieldElement(sig[l] * cs[l].s);
  };
  FieldElement b = c.coeffs[*pivot] / factor(*pivot);
  for (std::size_t i = 0; i < n; ++i)
    if (!(c.coeffs[i] == b * factor(i)))
      fail(ErrorKind::Inconsistent, "coefficients of weight component violate the "
                                    "compatibility identity at generator " +
                                        std::to_string(i + 1));
  TorusElement inducer = TorusElement::monomial(n, d, b);

  std::optional<std::size_t> j;
  for (std::size_t i = 0; i < n; ++i)
    if (!space.is_inverted(i) && d[i] < 0) {
      if (j || d[i] != -1 || !is_exceptional(d, i, space.inverted))
        fail(ErrorKind::Inconsistent, "weight is neither admissible nor exceptional");
      j = i;
    }
  if (!j) return InnerComponent{inducer};
  return LocallyInnerComponent{*j, inducer};
}

std::optional<ExponentVec> sigma_inner_witness(const ToricAutomorphism& sig,
                                               const CommutationMatrix& Q) {
  using lattice::Mat;
  using lattice::Vec;
  std::size_t n = Q.size();
  if (sig.size() != n) fail(ErrorKind::IndexOutOfRange, "automorphism size mismatch");

  std::size_t params = 0;
  Vec magnitudes;
  auto note = [&](const UnitMonomial& u) {
    params = std::max(params, u.exps().size());
    magnitudes.push_back(abs(u.coeff().get_num()));
    magnitudes.push_back(u.coeff().get_den());
  };
  for (std::size_t j = 0; j < n; ++j) {
    note(sig[j]);
    for (std::size_t k = 0; k < n; ++k) note(Q(k, j));
  }
  Vec base = lattice::coprime_base(magnitudes);
  auto val = [&](const Rational& c, const mpz_class& p) {
    return lattice::valuation(c.get_num(), p) - lattice::valuation(c.get_den(), p);
  };

  // Unknowns: d_1..d_n then one parity unknown per generator.
  std::size_t cols = 2 * n;
  Mat A;
  Vec b;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t p = 0; p < params; ++p) {
      Vec row(cols, 0);
      for (std::size_t k = 0; k < n; ++k) row[k] = Q(k, j).exps()[p];
      A.push_back(row);
      b.push_back(sig[j].exps()[p]);
    }
    for (const auto& prime : base) {
      Vec row(cols, 0);
      for (std::size_t k = 0; k < n; ++k) row[k] = val(Q(k, j).coeff(), prime);
      A.push_back(row);
      b.push_back(val(sig[j].coeff(), prime));
    }
    Vec row(cols, 0);
    for (std::size_t k = 0; k < n; ++k) row[k] = Q(k, j).coeff() < 0 ? 1 : 0;
    row[n + j] = -2;
    A.push_back(row);
    b.push_back(sig[j].coeff() < 0 ? 1 : 0);
  }

  auto sol = lattice::solve(A, b, cols);
  if (!sol) return std::nullopt;
  Vec x0(sol->particular.begin(), sol->particular.begin() + n);
  Mat gens;
  for (const auto& k : sol->kernel) gens.emplace_back(k.begin(), k.begin() + n);
  Mat basis = lattice::lll_reduce(lattice::lattice_basis(gens, n));
  auto best = lattice::closest_to_origin(x0, basis);
  Vec chosen = best ? *best : x0;

  ExponentVec d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = chosen[i].get_si();
  for (std::size_t j = 0; j < n; ++j)
    if (!(qrs(Q, d, j).q == sig[j]))
      fail(ErrorKind::Inconsistent, "lattice solution fails the cocycle check");
  return d;
}

ExtensionType classify_extension(const ToricAutomorphism& sig,
                                 const SkewDerivation& d,
                                 const CommutationMatrix& Q) {
  std::size_t n = Q.size();
  SelectiveSpace torus = SelectiveSpace::torus(Q);
  auto witness = sigma_inner_witness(sig, Q);
  if (!witness) {
    TorusElement a(n);
    for (const auto& comp : decompose_homogeneous(d)) {
      Classification cl = classify_component(comp, sig, torus);
      if (auto* in = std::get_if<InnerComponent>(&cl))
        a += in->inducer;
      else if (!std::holds_alternative<ZeroComponent>(cl))
        fail(ErrorKind::Inconsistent, "outer component although sigma is outer");
    }
    return AutomorphismType{a};
  }
  // sigma(r) = x^w r x^{-w}, so x^{-w} z commutes past r up to x^{-w} d(r).
  const ExponentVec& w = *witness;
  TorusElement shift = TorusElement::monomial(n, -w);
  std::vector<TorusElement> images;
  for (const auto& im : d.images()) images.push_back(elem_mul(Q, shift, im));
  ToricAutomorphism id = ToricAutomorphism::identity(n);
  SkewDerivation dp = validated(SkewDerivation(Q, id, images));

  DerivationType out{w, TorusElement(n), std::vector<TorusElement>(n, TorusElement(n))};
  for (const auto& comp : decompose_homogeneous(dp)) {
    Classification cl = classify_component(comp, id, torus);
    if (auto* in = std::get_if<InnerComponent>(&cl)) {
      out.inner_shift += in->inducer;
    } else if (auto* outer = std::get_if<OuterComponent>(&cl)) {
      for (std::size_t i = 0; i < n; ++i) {
        TorusElement m = TorusElement::monomial(
            n, comp.weight + ExponentVec::unit(n, i), outer->coeffs[i]);
        out.z[i] += elem_mul(Q, m, TorusElement::generator(n, i, -1));
      }
    }
  }
  return out;
}

}  // namespace skewtor
