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

#ifndef RSDL_NUMTHEORY_HPP
#define RSDL_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rsdl {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
std::optional<u64> inv_mod(u64 a, u64 m);

u64 gcd_u64(u64 a, u64 b);

// Deterministic Miller-Rabin: the first twelve prime witnesses are exact for
// every 64-bit input.
bool is_prime(u64 n);

// q^h, throwing std::overflow_error when it does not fit in 63 bits.
u64 checked_power(u64 q, unsigned h);

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  u64 value() const;
  bool operator==(const PrimePower&) const = default;
};

struct GroupOrderFactorization {
  u64 order = 1;
  std::vector<PrimePower> factors;  // ascending by prime

  u64 recombine() const;
  std::string to_string() const;  // "2196 = 2^2 * 3^2 * 61"
};

struct FactorOptions {
  u64 trial_bound = 1u << 16;
  u64 rho_iterations = 1u << 24;  // per cofactor, across restarts
};

// Trial division up to trial_bound, then Pollard rho (Brent); every reported
// factor is certified by is_prime. Throws rsdl::BudgetExceededError when a
// composite cofactor survives the rho budget.
GroupOrderFactorization factor_integer(u64 n, const FactorOptions& opts = {});

GroupOrderFactorization factor_group_order(u64 q, unsigned h,
                                           const FactorOptions& opts = {});

}  // namespace rsdl

#endif  // RSDL_NUMTHEORY_HPP
