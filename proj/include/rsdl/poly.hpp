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

#ifndef RSDL_POLY_HPP
#define RSDL_POLY_HPP

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rsdl/prime_field.hpp"

namespace rsdl {

using Rng = std::mt19937_64;

// Dense polynomial over GF(q), least-degree-first. The zero polynomial is the
// empty vector; otherwise the leading coefficient is nonzero.
struct DensePoly {
  std::vector<u64> coeffs;

  DensePoly() = default;
  explicit DensePoly(std::vector<u64> c) : coeffs(std::move(c)) { trim(); }
  DensePoly(std::initializer_list<u64> c) : coeffs(c) { trim(); }

  static DensePoly constant(u64 c) { return DensePoly(std::vector<u64>{c}); }
  static DensePoly monomial(u64 c, std::size_t degree);
  static DensePoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  u64 lead() const { return coeffs.empty() ? 0 : coeffs.back(); }
  u64 coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }
  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  bool operator==(const DensePoly&) const = default;
};

// Coefficients of s0*u + s1*v = g, where g is the first remainder of the
// Euclidean sequence with degree below the stopping bound.
struct BezoutTriple {
  DensePoly u;
  DensePoly v;
  DensePoly g;
};

std::string to_string(const DensePoly& p, char var = 'X');

DensePoly add(const PrimeField& F, const DensePoly& a, const DensePoly& b);
DensePoly sub(const PrimeField& F, const DensePoly& a, const DensePoly& b);
DensePoly neg(const PrimeField& F, const DensePoly& a);
DensePoly scale(const PrimeField& F, const DensePoly& a, u64 c);
DensePoly make_monic(const PrimeField& F, const DensePoly& a);

inline constexpr std::size_t kKaratsubaThreshold = 32;

DensePoly mul_schoolbook(const PrimeField& F, const DensePoly& a, const DensePoly& b);
// Schoolbook below kKaratsubaThreshold coefficients, Karatsuba above.
DensePoly mul(const PrimeField& F, const DensePoly& a, const DensePoly& b);

// a * X^k and a div X^k (coefficient slice).
DensePoly shift_up(const DensePoly& a, std::size_t k);
DensePoly quotient_by_xk(const DensePoly& a, std::size_t k);

// a = q*b + r with deg r < deg b. Throws std::domain_error when b = 0.
std::pair<DensePoly, DensePoly> divrem(const PrimeField& F, const DensePoly& a,
                                       const DensePoly& b);
DensePoly rem(const PrimeField& F, const DensePoly& a, const DensePoly& b);

u64 eval(const PrimeField& F, const DensePoly& p, u64 x);
DensePoly derivative(const PrimeField& F, const DensePoly& p);

// Monic gcd (zero when both inputs are zero).
DensePoly gcd(const PrimeField& F, DensePoly a, DensePoly b);

// Inverse of a modulo m, or nullopt when they share a factor.
std::optional<DensePoly> inverse_mod(const PrimeField& F, const DensePoly& a,
                                     const DensePoly& m);

DensePoly mulmod(const PrimeField& F, const DensePoly& a, const DensePoly& b,
                 const DensePoly& m);
DensePoly powmod(const PrimeField& F, const DensePoly& base, u64 exp, const DensePoly& m);

// Euclidean algorithm on (s0, s1) stopped at the first remainder of degree
// < bound. v is returned as produced, without normalization.
BezoutTriple partial_eea(const PrimeField& F, const DensePoly& s0, const DensePoly& s1,
                         int bound);

// Product of (X - x_i) over a balanced product tree. The full field GF(q)
// short-circuits to X^q - X. Throws std::invalid_argument on duplicates.
DensePoly product_tree(const PrimeField& F, std::span<const u64> points);

// Lagrange interpolation through (x_i, y_i); deg < n.
DensePoly interpolate(const PrimeField& F, std::span<const std::pair<u64, u64>> points);

// X^{field_size} mod v by repeated squaring. v must be nonconstant.
DensePoly x_power_mod(const PrimeField& F, u64 field_size, const DensePoly& v);

inline constexpr u64 kExhaustiveRootThreshold = u64{1} << 16;

// Distinct roots of v in GF(q) when v splits into distinct linear factors,
// nullopt (not splitting) otherwise. Exhaustive evaluation for q <= threshold,
// Frobenius test plus Cantor-Zassenhaus above.
std::optional<std::vector<u64>> roots_with_splitting_check(
    const PrimeField& F, const DensePoly& v, Rng& rng,
    u64 exhaustive_threshold = kExhaustiveRootThreshold);

// Equal-degree splitting: g is monic, squarefree, and a product of irreducible
// factors of degree exactly d. Returns them monic and sorted.
std::vector<DensePoly> equal_degree_split(const PrimeField& F, const DensePoly& g,
                                          int d, Rng& rng);

// Monic irreducible factors of v when v divides X^{q^e} - X (i.e. v is
// squarefree with all factor degrees dividing e), nullopt otherwise.
std::optional<std::vector<DensePoly>> split_over_extension(const PrimeField& F,
                                                           const DensePoly& v,
                                                           unsigned e, Rng& rng);

}  // namespace rsdl

#endif  // RSDL_POLY_HPP
