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

// Independent reference computations used by the tests. Nothing here calls
// into the library; everything is the slowest obvious method.

#ifndef RSDL_TESTS_ORACLES_HPP
#define RSDL_TESTS_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // least-degree first, may carry trailing zeros

inline u64 mulm(u64 a, u64 b, u64 q) { return static_cast<u64>((unsigned __int128)a * b % q); }

inline u64 powm(u64 a, u64 e, u64 q) {
  u64 r = 1 % q;
  for (u64 i = 0; i < e; ++i) r = mulm(r, a, q);
  return r;
}

inline u64 invm(u64 a, u64 q) {
  for (u64 x = 1; x < q; ++x) {
    if (mulm(a, x, q) == 1) return x;
  }
  return 0;
}

inline Poly strip(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline Poly mul(const Poly& a, const Poly& b, u64 q) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulm(a[i], b[j], q)) % q;
  }
  return strip(r);
}

// Remainder by a monic or non-monic divisor via long division.
inline Poly mod(Poly a, const Poly& m, u64 q) {
  Poly b = strip(m);
  a = strip(a);
  const u64 inv = invm(b.back(), q);
  while (a.size() >= b.size()) {
    const u64 c = mulm(a.back(), inv, q);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + q - mulm(c, b[i], q)) % q;
    a = strip(a);
  }
  return a;
}

inline u64 eval(const Poly& p, u64 x, u64 q) {
  u64 r = 0, xp = 1;
  for (u64 c : p) {
    r = (r + mulm(c, xp, q)) % q;
    xp = mulm(xp, x, q);
  }
  return r;
}

inline u64 serialize(const Poly& p, u64 q) {
  u64 s = 0, w = 1;
  for (u64 c : p) {
    s += c * w;
    w *= q;
  }
  return s;
}

// X^u mod Q by u single multiplications by X.
inline Poly x_power(u64 u, const Poly& Q, u64 q) {
  Poly r{1};
  for (u64 i = 0; i < u; ++i) r = mod(mul(r, Poly{0, 1}, q), Q, q);
  return r;
}

// serialization of X^i -> i for every i in [0, q^h - 1).
inline std::unordered_map<u64, u64> discrete_log_table(const Poly& Q, u64 q) {
  const std::size_t h = Q.size() - 1;
  u64 N = 1;
  for (std::size_t i = 0; i < h; ++i) N *= q;
  --N;
  std::unordered_map<u64, u64> logs;
  Poly cur{1};
  for (u64 i = 0; i < N; ++i) {
    logs.emplace(serialize(cur, q), i);
    cur = mod(mul(cur, Poly{0, 1}, q), Q, q);
  }
  return logs;
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// serialization of prod_{a in A} (X - a) mod Q -> A, over all |A| = mu.
inline std::map<u64, std::vector<u64>> decodable_residues(const std::vector<u64>& support,
                                                          const Poly& Q, u64 q, std::size_t mu) {
  std::map<u64, std::vector<u64>> out;
  for_each_subset(support.size(), mu, [&](const std::vector<std::size_t>& idx) {
    Poly f{1};
    std::vector<u64> A;
    for (std::size_t i : idx) {
      f = mod(mul(f, Poly{(q - support[i]) % q, 1}, q), Q, q);
      A.push_back(support[i]);
    }
    out.emplace(serialize(f, q), A);
  });
  return out;
}

// All x in (Z/p)^c with A x + b = 0 mod p, by enumeration.
inline std::set<std::vector<u64>> solutions(const std::vector<std::vector<u64>>& A,
                                            const std::vector<u64>& b, u64 p, std::size_t c) {
  std::set<std::vector<u64>> out;
  std::vector<u64> x(c, 0);
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < A.size() && ok; ++r) {
      u64 s = b[r] % p;
      for (std::size_t j = 0; j < c; ++j) s = (s + A[r][j] * x[j]) % p;
      ok = s == 0;
    }
    if (ok) out.insert(x);
    std::size_t j = 0;
    while (j < c && ++x[j] == p) x[j++] = 0;
    if (j == c) break;
  }
  return out;
}

// Elements of GF(q)[Y]/(m) as coefficient vectors of length deg m.
inline std::vector<Poly> all_elements(u64 q, std::size_t e) {
  std::vector<Poly> out;
  u64 total = 1;
  for (std::size_t i = 0; i < e; ++i) total *= q;
  for (u64 s = 0; s < total; ++s) {
    Poly p(e);
    u64 t = s;
    for (std::size_t i = 0; i < e; ++i) {
      p[i] = t % q;
      t /= q;
    }
    out.push_back(p);
  }
  return out;
}

// Number of Frobenius-closed subsets of GF(q)[Y]/(m) of size k.
inline u64 stable_subsets(u64 q, const Poly& m, std::size_t k) {
  const std::size_t e = m.size() - 1;
  auto elems = all_elements(q, e);
  std::vector<std::size_t> frob(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    Poly r{1};
    for (u64 j = 0; j < q; ++j) r = mod(mul(r, elems[i], q), m, q);
    r.resize(e, 0);
    frob[i] = serialize(r, q);
  }
  u64 count = 0;
  for_each_subset(elems.size(), k, [&](const std::vector<std::size_t>& idx) {
    std::set<std::size_t> s(idx.begin(), idx.end());
    for (std::size_t i : idx) {
      if (!s.count(frob[i])) return;
    }
    ++count;
  });
  return count;
}

}  // namespace oracle

#endif  // RSDL_TESTS_ORACLES_HPP
