// Copyright 2026 The rsdl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rsdl/field.hpp"

#include <stdexcept>
#include <string>

namespace rsdl {

ExtensionField::ExtensionField(PrimeField base, DensePoly modulus)
    : base_(base), modulus_(std::move(modulus)), degree_(0) {
  if (modulus_.degree() < 1 || modulus_.lead() != 1) {
    throw std::invalid_argument("modulus must be monic of degree >= 1");
  }
  degree_ = static_cast<unsigned>(modulus_.degree());
  const DensePoly xq = powmod(base_, DensePoly::x(), base_.order(), modulus_);
  DensePoly acc = DensePoly::constant(1);
  frobenius_images_.reserve(degree_);
  for (unsigned i = 0; i < degree_; ++i) {
    frobenius_images_.push_back(from_poly(acc));
    acc = mulmod(base_, acc, xq, modulus_);
  }
}

QuotientElem ExtensionField::one() const { return constant(1); }

QuotientElem ExtensionField::constant(u64 c) const {
  QuotientElem r = zero();
  r.coeffs[0] = c % base_.order();
  return r;
}

QuotientElem ExtensionField::x() const {
  if (degree_ == 1) return constant(base_.neg(modulus_.coeffs[0]));
  QuotientElem r = zero();
  r.coeffs[1] = 1;
  return r;
}

bool ExtensionField::is_zero(const QuotientElem& a) const {
  for (u64 c : a.coeffs) {
    if (c) return false;
  }
  return true;
}

bool ExtensionField::in_base_field(const QuotientElem& a) const {
  for (std::size_t i = 1; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i]) return false;
  }
  return true;
}

QuotientElem ExtensionField::from_poly(const DensePoly& p) const {
  std::vector<u64> wide = p.coeffs;
  for (auto& c : wide) c %= base_.order();
  reduce_into(wide);
  return QuotientElem{std::move(wide)};
}

void ExtensionField::reduce_into(std::vector<u64>& wide) const {
  const auto& m = modulus_.coeffs;
  for (std::size_t i = wide.size(); i-- > degree_;) {
    const u64 c = wide[i];
    if (c == 0) continue;
    for (unsigned j = 0; j < degree_; ++j) {
      wide[i - degree_ + j] = base_.sub(wide[i - degree_ + j], base_.mul(c, m[j]));
    }
  }
  wide.resize(degree_, 0);
}

QuotientElem ExtensionField::add(const QuotientElem& a, const QuotientElem& b) const {
  QuotientElem r = a;
  for (unsigned i = 0; i < degree_; ++i) r.coeffs[i] = base_.add(a.coeffs[i], b.coeffs[i]);
  return r;
}

QuotientElem ExtensionField::sub(const QuotientElem& a, const QuotientElem& b) const {
  QuotientElem r = a;
  for (unsigned i = 0; i < degree_; ++i) r.coeffs[i] = base_.sub(a.coeffs[i], b.coeffs[i]);
  return r;
}

QuotientElem ExtensionField::neg(const QuotientElem& a) const {
  QuotientElem r = a;
  for (auto& c : r.coeffs) c = base_.neg(c);
  return r;
}

QuotientElem ExtensionField::mul(const QuotientElem& a, const QuotientElem& b) const {
  const u64 q = base_.order();
  std::vector<u64> wide(2 * degree_ - 1, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < degree_; ++j) {
      wide[i + j] = (wide[i + j] + a.coeffs[i] * b.coeffs[j]) % q;
    }
  }
  reduce_into(wide);
  return QuotientElem{std::move(wide)};
}

QuotientElem ExtensionField::mul_x(const QuotientElem& a) const {
  std::vector<u64> wide(degree_ + 1, 0);
  for (unsigned i = 0; i < degree_; ++i) wide[i + 1] = a.coeffs[i];
  reduce_into(wide);
  return QuotientElem{std::move(wide)};
}

QuotientElem ExtensionField::pow(const QuotientElem& a, u64 e) const {
  QuotientElem result = one();
  QuotientElem b = a;
  while (e) {
    if (e & 1) result = mul(result, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return result;
}

QuotientElem ExtensionField::inv(const QuotientElem& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  auto r = inverse_mod(base_, to_poly(a), modulus_);
  if (!r) throw std::domain_error("element is not invertible modulo the defining polynomial");
  return from_poly(*r);
}

QuotientElem ExtensionField::frobenius(const QuotientElem& a) const {
  QuotientElem r = zero();
  for (unsigned i = 0; i < degree_; ++i) {
    const u64 c = a.coeffs[i];
    if (c == 0) continue;
    const auto& img = frobenius_images_[i].coeffs;
    for (unsigned j = 0; j < degree_; ++j) r.coeffs[j] = base_.add(r.coeffs[j], base_.mul(c, img[j]));
  }
  return r;
}

u64 ExtensionField::serialize(const QuotientElem& a) const {
  u64 v = 0;
  for (std::size_t i = a.coeffs.size(); i-- > 0;) v = v * base_.order() + a.coeffs[i];
  return v;
}

QuotientElem ExtensionField::deserialize(u64 v) const {
  QuotientElem r = zero();
  for (unsigned i = 0; i < degree_; ++i) {
    r.coeffs[i] = v % base_.order();
    v /= base_.order();
  }
  if (v != 0) throw std::out_of_range("serialized element exceeds the field size");
  return r;
}

std::optional<unsigned> irreducibility_witness(const PrimeField& F, const DensePoly& D) {
  if (D.degree() < 1) throw std::invalid_argument("irreducibility of a constant");
  const DensePoly Dm = make_monic(F, D);
  DensePoly frob = rem(F, DensePoly::x(), Dm);
  for (int i = 1; 2 * i <= Dm.degree(); ++i) {
    frob = powmod(F, frob, F.order(), Dm);
    if (gcd(F, Dm, sub(F, frob, DensePoly::x())).degree() > 0) return static_cast<unsigned>(i);
  }
  return std::nullopt;
}

bool is_irreducible(const PrimeField& F, const DensePoly& D) {
  return !irreducibility_witness(F, D).has_value();
}

DensePoly random_irreducible(const PrimeField& F, unsigned degree, Rng& rng) {
  if (degree == 0) throw std::invalid_argument("degree must be positive");
  std::uniform_int_distribution<u64> dist(0, F.order() - 1);
  for (;;) {
    std::vector<u64> c(degree + 1);
    for (unsigned i = 0; i < degree; ++i) c[i] = dist(rng);
    c[degree] = 1;
    DensePoly D(std::move(c));
    if (is_irreducible(F, D)) return D;
  }
}

DensePoly smallest_irreducible(const PrimeField& F, unsigned degree) {
  if (degree == 0) throw std::invalid_argument("degree must be positive");
  const u64 q = F.order();
  const u64 count = checked_power(q, degree);
  for (u64 idx = 0; idx < count; ++idx) {
    std::vector<u64> c(degree + 1);
    u64 v = idx;
    for (unsigned i = 0; i < degree; ++i) {
      c[i] = v % q;
      v /= q;
    }
    c[degree] = 1;
    DensePoly D(std::move(c));
    if (is_irreducible(F, D)) return D;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::optional<u64> primitivity_witness(const ExtensionField& K, const QuotientElem& g,
                                       const GroupOrderFactorization& fact) {
  if (K.is_zero(g)) throw std::invalid_argument("zero is not a group element");
  const QuotientElem one = K.one();
  if (fact.order > 1 && g == one) return fact.factors.front().prime;
  for (const auto& pp : fact.factors) {
    if (K.pow(g, fact.order / pp.prime) == one) return pp.prime;
  }
  return std::nullopt;
}

bool is_primitive(const ExtensionField& K, const QuotientElem& g,
                  const GroupOrderFactorization& fact) {
  return !primitivity_witness(K, g, fact).has_value();
}

namespace {

void check_defining_polynomial(const PrimeField& F, unsigned h, const DensePoly& Q) {
  if (h == 0) throw std::invalid_argument("extension degree must be positive");
  if (Q.degree() != static_cast<int>(h)) {
    throw std::invalid_argument("Q must have degree " + std::to_string(h));
  }
  if (Q.lead() != 1) throw std::invalid_argument("Q must be monic");
  if (auto w = irreducibility_witness(F, Q)) {
    throw std::invalid_argument("Q = " + to_string(Q) + " is reducible: it has a factor of degree " +
                                std::to_string(*w));
  }
}

}  // namespace

FieldTower::FieldTower(u64 q, unsigned h, DensePoly Q, const FactorOptions& fopts)
    : field_(PrimeField(q), (check_defining_polynomial(PrimeField(q), h, Q), Q)),
      fact_(factor_group_order(q, h, fopts)) {
  if (auto w = primitivity_witness(field_, field_.x(), fact_)) {
    throw std::invalid_argument("Q = " + to_string(Q) + " is not primitive: X^(" +
                                std::to_string(fact_.order) + "/" + std::to_string(*w) +
                                ") = 1");
  }
}

FieldTower FieldTower::random_primitive(u64 q, unsigned h, Rng& rng) {
  const PrimeField F(q);
  const auto fact = factor_group_order(q, h);
  for (;;) {
    DensePoly Q = random_irreducible(F, h, rng);
    ExtensionField K(F, Q);
    if (is_primitive(K, K.x(), fact)) return FieldTower(std::move(K), fact);
  }
}

FrobeniusOrbit frobenius_orbit(const ExtensionField& K, const QuotientElem& a) {
  FrobeniusOrbit res;
  QuotientElem b = a;
  do {
    res.orbit.push_back(b);
    b = K.frobenius(b);
  } while (b != a);
  // Product of (X - b) with coefficients in K, least-degree-first.
  std::vector<QuotientElem> prod{K.one()};
  for (const auto& root : res.orbit) {
    std::vector<QuotientElem> next(prod.size() + 1, K.zero());
    const QuotientElem minus_root = K.neg(root);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] = K.add(next[i + 1], prod[i]);
      next[i] = K.add(next[i], K.mul(prod[i], minus_root));
    }
    prod = std::move(next);
  }
  std::vector<u64> coeffs;
  coeffs.reserve(prod.size());
  for (const auto& c : prod) {
    if (!K.in_base_field(c)) throw std::logic_error("orbit polynomial left the base field");
    coeffs.push_back(c.coeffs[0]);
  }
  res.minpoly = DensePoly(std::move(coeffs));
  return res;
}

}  // namespace rsdl
