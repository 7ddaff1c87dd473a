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

#include "rsdl/numtheory.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rsdl/error.hpp"

namespace rsdl {

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::optional<u64> inv_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  // Signed extended Euclid on 128-bit to avoid overflow for m near 2^63.
  __int128 old_r = a % m, r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  __int128 res = old_s % static_cast<__int128>(m);
  if (res < 0) res += m;
  return static_cast<u64>(res);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnesses) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 checked_power(u64 q, unsigned h) {
  u128 acc = 1;
  for (unsigned i = 0; i < h; ++i) {
    acc *= q;
    if (acc >> 63) throw std::overflow_error("q^h exceeds 63 bits");
  }
  return static_cast<u64>(acc);
}

u64 PrimePower::value() const { return checked_power(prime, exponent); }

u64 GroupOrderFactorization::recombine() const {
  u64 acc = 1;
  for (const auto& f : factors) acc *= f.value();
  return acc;
}

std::string GroupOrderFactorization::to_string() const {
  std::ostringstream os;
  os << order << " = ";
  if (factors.empty()) {
    os << "1";
    return os.str();
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << " * ";
    os << factors[i].prime;
    if (factors[i].exponent > 1) os << '^' << factors[i].exponent;
  }
  return os.str();
}

namespace {

// Brent's variant; returns a nontrivial factor or 0 when the budget runs out.
u64 pollard_brent(u64 n, u64& budget) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1; budget > 0; ++c) {
    auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 m = 128;
    while (g == 1 && budget > 0) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        u64 lim = std::min(m, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        k += lim;
        budget = budget > lim ? budget - lim : 0;
      }
      r <<= 1;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

void split(u64 n, std::map<u64, unsigned>& out, u64& budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_brent(n, budget);
  if (d == 0) {
    throw BudgetExceededError("Pollard rho budget exhausted on cofactor " +
                              std::to_string(n));
  }
  split(d, out, budget);
  split(n / d, out, budget);
}

}  // namespace

GroupOrderFactorization factor_integer(u64 n, const FactorOptions& opts) {
  if (n == 0) throw std::invalid_argument("cannot factor 0");
  GroupOrderFactorization res;
  res.order = n;
  std::map<u64, unsigned> primes;
  u64 rest = n;
  for (u64 p = 2; p <= opts.trial_bound && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      ++primes[p];
      rest /= p;
    }
  }
  u64 budget = opts.rho_iterations;
  split(rest, primes, budget);
  for (auto [p, k] : primes) res.factors.push_back({p, k});
  return res;
}

GroupOrderFactorization factor_group_order(u64 q, unsigned h,
                                           const FactorOptions& opts) {
  return factor_integer(checked_power(q, h) - 1, opts);
}

}  // namespace rsdl
