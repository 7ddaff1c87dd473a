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

#ifndef RSDL_ORBIT_BASIS_HPP
#define RSDL_ORBIT_BASIS_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rsdl/field.hpp"
#include "rsdl/poly.hpp"

namespace rsdl {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct Orbit {
  u64 representative = 0;  // smallest serialization in the orbit
  unsigned size = 0;
  DensePoly minpoly;
};

// Frobenius orbits of GF(q^e). The helper field is built on the first monic
// irreducible of degree e in serialization order, so representatives are
// reproducible from (q, e) alone.
struct OrbitBasis {
  u64 q = 0;
  unsigned e = 0;
  DensePoly helper_modulus;
  std::vector<Orbit> orbits;  // ascending by representative
  std::vector<u64> counts;    // counts[i-1] = n_i, number of orbits of size i
  u64 n = 0;                  // sum of i * n_i = q^e

  ExtensionField helper_field() const { return ExtensionField(PrimeField(q), helper_modulus); }
};

inline constexpr u64 kOrbitBasisSizeCap = u64{1} << 22;

int mobius(u64 n);

// n_i = (1/i) sum_{j | i} mu(j) q^{i/j} when i | e, zero otherwise.
u64 orbit_count_formula(u64 q, unsigned i, unsigned e);

// Throws std::invalid_argument when q^e exceeds size_cap.
OrbitBasis build_orbit_basis(u64 q, unsigned e, u64 size_cap = kOrbitBasisSizeCap);

// (h_1, ..., h_e) with sum i*h_i = m. parts[i-1] = h_i.
struct RestrictedPartition {
  std::vector<unsigned> parts;

  unsigned total() const;
  bool operator==(const RestrictedPartition&) const = default;
};

// All restricted partitions of m with parts at most e, in descending
// lexicographic order of (h_1, ..., h_e).
std::vector<RestrictedPartition> enumerate_partitions(unsigned m, unsigned e);

BigInt binomial(u64 n, u64 k);

// N_e(m) = sum over restricted partitions (m_1..m_e) of prod C(n_i, m_i).
BigInt count_relations(std::span<const u64> counts, unsigned m);
BigInt count_relations(const OrbitBasis& basis, unsigned m);

// c_e(h) = sum over partitions of h into parts i | e of prod 1/(i^{h_i} h_i!).
BigRational asymptotic_constant(unsigned e, unsigned h);

// x rounded half-up to `digits` significant decimal digits, as
// (mantissa, exponent) with x ~ mantissa * 10^exponent and
// 10^{digits-1} <= mantissa < 10^digits. x must be positive.
std::pair<u64, int> round_significant(const BigRational& x, int digits);
std::string format_significant(const BigRational& x, int digits);
double to_double(const BigRational& x);

}  // namespace rsdl

#endif  // RSDL_ORBIT_BASIS_HPP
