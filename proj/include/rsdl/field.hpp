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

#ifndef RSDL_FIELD_HPP
#define RSDL_FIELD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rsdl/numtheory.hpp"
#include "rsdl/poly.hpp"
#include "rsdl/prime_field.hpp"

namespace rsdl {

// Residue f(X) mod D(X): exactly deg D coefficients, least-degree-first.
struct QuotientElem {
  std::vector<u64> coeffs;

  bool operator==(const QuotientElem&) const = default;
};

// GF(q)[X]/(D(X)) for a monic D. A field when D is irreducible.
class ExtensionField {
 public:
  ExtensionField(PrimeField base, DensePoly modulus);

  const PrimeField& base() const { return base_; }
  const DensePoly& modulus() const { return modulus_; }
  unsigned degree() const { return degree_; }
  // q^degree; throws std::overflow_error beyond 63 bits.
  u64 size() const { return checked_power(base_.order(), degree_); }

  QuotientElem zero() const { return QuotientElem{std::vector<u64>(degree_, 0)}; }
  QuotientElem one() const;
  QuotientElem x() const;  // the class of X
  QuotientElem constant(u64 c) const;

  bool is_zero(const QuotientElem& a) const;
  bool in_base_field(const QuotientElem& a) const;

  QuotientElem from_poly(const DensePoly& p) const;
  DensePoly to_poly(const QuotientElem& a) const { return DensePoly(a.coeffs); }

  QuotientElem add(const QuotientElem& a, const QuotientElem& b) const;
  QuotientElem sub(const QuotientElem& a, const QuotientElem& b) const;
  QuotientElem neg(const QuotientElem& a) const;
  QuotientElem mul(const QuotientElem& a, const QuotientElem& b) const;
  QuotientElem mul_x(const QuotientElem& a) const;
  // a^0 = 1 for every a, including zero.
  QuotientElem pow(const QuotientElem& a, u64 e) const;
  QuotientElem inv(const QuotientElem& a) const;  // throws std::domain_error on 0
  QuotientElem frobenius(const QuotientElem& a) const;

  // sum c_i q^i
  u64 serialize(const QuotientElem& a) const;
  QuotientElem deserialize(u64 v) const;

 private:
  void reduce_into(std::vector<u64>& wide) const;

  PrimeField base_;
  DensePoly modulus_;
  unsigned degree_;
  std::vector<QuotientElem> frobenius_images_;  // X^{iq} mod D for i < degree
};

// Degree i of the first factor found by gcd(X^{q^i} - X, D), or nullopt when
// D is irreducible.
std::optional<unsigned> irreducibility_witness(const PrimeField& F, const DensePoly& D);
bool is_irreducible(const PrimeField& F, const DensePoly& D);

DensePoly random_irreducible(const PrimeField& F, unsigned degree, Rng& rng);
// First monic irreducible in base-q serialization order of the lower
// coefficients.
DensePoly smallest_irreducible(const PrimeField& F, unsigned degree);

// The prime l with g^{N/l} = 1, or nullopt when g generates the group.
// Throws std::invalid_argument when g = 0.
std::optional<u64> primitivity_witness(const ExtensionField& K, const QuotientElem& g,
                                       const GroupOrderFactorization& fact);
bool is_primitive(const ExtensionField& K, const QuotientElem& g,
                  const GroupOrderFactorization& fact);

// GF(q^h) = GF(q)[X]/(Q) with Q monic irreducible and X primitive. The
// generator omega is always the class of X.
class FieldTower {
 public:
  // Validates Q; throws std::invalid_argument naming the failing witness.
  FieldTower(u64 q, unsigned h, DensePoly Q, const FactorOptions& fopts = {});

  static FieldTower random_primitive(u64 q, unsigned h, Rng& rng);

  u64 q() const { return field_.base().order(); }
  unsigned h() const { return field_.degree(); }
  const PrimeField& base() const { return field_.base(); }
  const DensePoly& Q() const { return field_.modulus(); }
  const ExtensionField& field() const { return field_; }
  const GroupOrderFactorization& factorization() const { return fact_; }
  u64 group_order() const { return fact_.order; }
  QuotientElem generator() const { return field_.x(); }

 private:
  FieldTower(ExtensionField field, GroupOrderFactorization fact)
      : field_(std::move(field)), fact_(std::move(fact)) {}

  ExtensionField field_;
  GroupOrderFactorization fact_;
};

struct FrobeniusOrbit {
  std::vector<QuotientElem> orbit;  // a, a^q, a^{q^2}, ...
  DensePoly minpoly;                // over GF(q), monic
};

// Throws std::logic_error if the orbit product leaves the base field.
FrobeniusOrbit frobenius_orbit(const ExtensionField& K, const QuotientElem& a);

}  // namespace rsdl

#endif  // RSDL_FIELD_HPP
