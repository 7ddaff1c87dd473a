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

#include "rsdl/orbit_basis.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rsdl {

int mobius(u64 n) {
  if (n == 0) throw std::invalid_argument("mobius(0)");
  int result = 1;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

u64 orbit_count_formula(u64 q, unsigned i, unsigned e) {
  if (i == 0 || e % i != 0) return 0;
  __int128 acc = 0;
  for (unsigned j = 1; j <= i; ++j) {
    if (i % j) continue;
    acc += static_cast<__int128>(mobius(j)) * checked_power(q, i / j);
  }
  return static_cast<u64>(acc / i);
}

OrbitBasis build_orbit_basis(u64 q, unsigned e, u64 size_cap) {
  if (e == 0) throw std::invalid_argument("helper degree must be positive");
  const PrimeField F(q);
  const u64 size = checked_power(q, e);
  if (size > size_cap) {
    throw std::invalid_argument("GF(" + std::to_string(q) + "^" + std::to_string(e) +
                                ") exceeds the orbit-basis size cap");
  }
  OrbitBasis basis;
  basis.q = q;
  basis.e = e;
  basis.helper_modulus = smallest_irreducible(F, e);
  basis.counts.assign(e, 0);
  basis.n = size;
  const ExtensionField K(F, basis.helper_modulus);
  std::vector<bool> seen(size, false);
  for (u64 s = 0; s < size; ++s) {
    if (seen[s]) continue;
    auto fo = frobenius_orbit(K, K.deserialize(s));
    for (const auto& b : fo.orbit) seen[K.serialize(b)] = true;
    const auto sz = static_cast<unsigned>(fo.orbit.size());
    if (e % sz != 0) throw std::logic_error("orbit size does not divide e");
    ++basis.counts[sz - 1];
    basis.orbits.push_back(Orbit{s, sz, std::move(fo.minpoly)});
  }
  u64 total = 0;
  for (unsigned i = 1; i <= e; ++i) {
    if (basis.counts[i - 1] != orbit_count_formula(q, i, e)) {
      throw std::logic_error("orbit census disagrees with the Mobius count at size " +
                             std::to_string(i));
    }
    total += i * basis.counts[i - 1];
  }
  if (total != size) throw std::logic_error("orbit sizes do not sum to q^e");
  return basis;
}

unsigned RestrictedPartition::total() const {
  unsigned t = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) t += static_cast<unsigned>(i + 1) * parts[i];
  return t;
}

std::vector<RestrictedPartition> enumerate_partitions(unsigned m, unsigned e) {
  if (e == 0) throw std::invalid_argument("partition parts bound must be positive");
  std::vector<RestrictedPartition> out;
  std::vector<unsigned> parts(e, 0);
  // Fill from the largest part down; h_1 absorbs the remainder.
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned rest) {
    if (i == 1) {
      parts[0] = rest;
      out.push_back(RestrictedPartition{parts});
      return;
    }
    for (unsigned c = 0; c * i <= rest; ++c) {
      parts[i - 1] = c;
      rec(i - 1, rest - c * i);
    }
    parts[i - 1] = 0;
  };
  rec(e, m);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(b.parts.begin(), b.parts.end(), a.parts.begin(),
                                        a.parts.end());
  });
  return out;
}

BigInt binomial(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (u64 j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

BigInt count_relations(std::span<const u64> counts, unsigned m) {
  // Coefficient of t^m in prod_i sum_j C(n_i, j) t^{ij}: the partition sum
  // grouped by the number of parts of each size.
  std::vector<BigInt> dp(m + 1, 0);
  dp[0] = 1;
  for (std::size_t idx = 0; idx < counts.size(); ++idx) {
    const unsigned i = static_cast<unsigned>(idx + 1);
    const u64 ni = counts[idx];
    std::vector<BigInt> next(m + 1, 0);
    for (unsigned s = 0; s <= m; ++s) {
      if (dp[s] == 0) continue;
      BigInt c = 1;
      for (u64 j = 0; s + i * j <= m && j <= ni; ++j) {
        if (j > 0) c = c * (ni - j + 1) / j;
        next[s + i * j] += dp[s] * c;
      }
    }
    dp = std::move(next);
  }
  return dp[m];
}

BigInt count_relations(const OrbitBasis& basis, unsigned m) {
  if (m > basis.n) throw std::invalid_argument("relation size exceeds the support");
  return count_relations(basis.counts, m);
}

BigRational asymptotic_constant(unsigned e, unsigned h) {
  if (e == 0 || h == 0) throw std::invalid_argument("asymptotic_constant needs e, h >= 1");
  std::vector<BigRational> dp(h + 1, 0);
  dp[0] = 1;
  for (unsigned i = 1; i <= e; ++i) {
    if (e % i) continue;
    std::vector<BigRational> next(h + 1, 0);
    for (unsigned s = 0; s <= h; ++s) {
      if (dp[s] == 0) continue;
      BigInt denom = 1;  // i^j * j!
      for (unsigned j = 0; s + i * j <= h; ++j) {
        if (j > 0) denom *= BigInt(i) * j;
        next[s + i * j] += dp[s] / BigRational(denom);
      }
    }
    dp = std::move(next);
  }
  return dp[h];
}

namespace {

BigInt pow10(int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= 10;
  return r;
}

}  // namespace

std::pair<u64, int> round_significant(const BigRational& x, int digits) {
  if (x <= 0) throw std::invalid_argument("round_significant needs a positive value");
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  // Find exponent E with 10^{digits-1} <= x / 10^E < 10^digits.
  int exponent = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size()) -
                 (digits - 1);
  for (;;) {
    BigRational scaled = exponent >= 0 ? x / BigRational(pow10(exponent))
                                       : x * BigRational(pow10(-exponent));
    if (scaled < BigRational(pow10(digits - 1))) {
      --exponent;
      continue;
    }
    if (scaled >= BigRational(pow10(digits))) {
      ++exponent;
      continue;
    }
    const BigInt sn = boost::multiprecision::numerator(scaled);
    const BigInt sd = boost::multiprecision::denominator(scaled);
    BigInt mant = (2 * sn + sd) / (2 * sd);
    if (mant == pow10(digits)) {
      mant = pow10(digits - 1);
      ++exponent;
    }
    return {mant.convert_to<u64>(), exponent};
  }
}

std::string format_significant(const BigRational& x, int digits) {
  if (x == 0) return "0";
  auto [mant, exponent] = round_significant(x, digits);
  std::string m = std::to_string(mant);
  std::ostringstream os;
  const int sci = exponent + digits - 1;  // exponent of the leading digit
  if (sci >= -4 && sci < digits) {
    if (exponent >= 0) {
      os << m << std::string(static_cast<std::size_t>(exponent), '0');
    } else {
      const int int_digits = digits + exponent;
      if (int_digits > 0) {
        os << m.substr(0, static_cast<std::size_t>(int_digits)) << '.'
           << m.substr(static_cast<std::size_t>(int_digits));
      } else {
        os << "0." << std::string(static_cast<std::size_t>(-int_digits), '0') << m;
      }
    }
  } else {
    os << m[0];
    if (digits > 1) os << '.' << m.substr(1);
    os << 'e' << sci;
  }
  return os.str();
}

double to_double(const BigRational& x) { return x.convert_to<double>(); }

}  // namespace rsdl
