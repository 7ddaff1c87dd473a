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

#include "rsdl/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rsdl {

DensePoly DensePoly::monomial(u64 c, std::size_t degree) {
  std::vector<u64> v(degree + 1, 0);
  v[degree] = c;
  return DensePoly(std::move(v));
}

std::string to_string(const DensePoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    u64 c = p.coeffs[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

DensePoly add(const PrimeField& F, const DensePoly& a, const DensePoly& b) {
  std::vector<u64> out(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a.coeff(i), b.coeff(i));
  return DensePoly(std::move(out));
}

DensePoly sub(const PrimeField& F, const DensePoly& a, const DensePoly& b) {
  std::vector<u64> out(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a.coeff(i), b.coeff(i));
  return DensePoly(std::move(out));
}

DensePoly neg(const PrimeField& F, const DensePoly& a) {
  std::vector<u64> out(a.coeffs.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.neg(a.coeffs[i]);
  return DensePoly(std::move(out));
}

DensePoly scale(const PrimeField& F, const DensePoly& a, u64 c) {
  std::vector<u64> out(a.coeffs.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.mul(a.coeffs[i], c);
  return DensePoly(std::move(out));
}

DensePoly make_monic(const PrimeField& F, const DensePoly& a) {
  if (a.is_zero() || a.lead() == 1) return a;
  return scale(F, a, F.inv(a.lead()));
}

namespace {

void schoolbook_into(const PrimeField& F, std::span<const u64> a, std::span<const u64> b,
                     std::span<u64> out) {
  const u64 q = F.order();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % q;
    }
  }
}

// a and b have equal length n; returns the 2n-1 product coefficients.
std::vector<u64> karatsuba(const PrimeField& F, std::span<const u64> a,
                           std::span<const u64> b) {
  const std::size_t n = a.size();
  std::vector<u64> out(2 * n - 1, 0);
  if (n < kKaratsubaThreshold) {
    schoolbook_into(F, a, b, out);
    return out;
  }
  const std::size_t m = n / 2;
  auto z0 = karatsuba(F, a.first(m), b.first(m));
  auto z2 = karatsuba(F, a.subspan(m), b.subspan(m));
  std::vector<u64> as(a.begin() + m, a.end()), bs(b.begin() + m, b.end());
  for (std::size_t i = 0; i < m; ++i) {
    as[i] = F.add(as[i], a[i]);
    bs[i] = F.add(bs[i], b[i]);
  }
  auto z1 = karatsuba(F, as, bs);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = F.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = F.sub(z1[i], z2[i]);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = F.add(out[i], z0[i]);
  for (std::size_t i = 0; i < z1.size(); ++i) out[i + m] = F.add(out[i + m], z1[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * m] = F.add(out[i + 2 * m], z2[i]);
  return out;
}

}  // namespace

DensePoly mul_schoolbook(const PrimeField& F, const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<u64> out(a.coeffs.size() + b.coeffs.size() - 1, 0);
  schoolbook_into(F, a.coeffs, b.coeffs, out);
  return DensePoly(std::move(out));
}

DensePoly mul(const PrimeField& F, const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (std::min(a.coeffs.size(), b.coeffs.size()) < kKaratsubaThreshold) {
    return mul_schoolbook(F, a, b);
  }
  const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  std::vector<u64> pa(a.coeffs), pb(b.coeffs);
  pa.resize(n, 0);
  pb.resize(n, 0);
  auto prod = karatsuba(F, pa, pb);
  prod.resize(a.coeffs.size() + b.coeffs.size() - 1);
  return DensePoly(std::move(prod));
}

DensePoly shift_up(const DensePoly& a, std::size_t k) {
  if (a.is_zero()) return {};
  std::vector<u64> out(k, 0);
  out.insert(out.end(), a.coeffs.begin(), a.coeffs.end());
  return DensePoly(std::move(out));
}

DensePoly quotient_by_xk(const DensePoly& a, std::size_t k) {
  if (a.coeffs.size() <= k) return {};
  return DensePoly(std::vector<u64>(a.coeffs.begin() + static_cast<std::ptrdiff_t>(k),
                                    a.coeffs.end()));
}

std::pair<DensePoly, DensePoly> divrem(const PrimeField& F, const DensePoly& a,
                                       const DensePoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {DensePoly{}, a};
  std::vector<u64> r = a.coeffs;
  const std::size_t db = b.coeffs.size() - 1;
  std::vector<u64> quot(r.size() - db, 0);
  const u64 inv_lead = F.inv(b.lead());
  for (std::size_t i = r.size(); i-- > db;) {
    u64 c = r[i];
    if (c == 0) continue;
    c = F.mul(c, inv_lead);
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b.coeffs[j]));
    }
  }
  r.resize(db);
  return {DensePoly(std::move(quot)), DensePoly(std::move(r))};
}

DensePoly rem(const PrimeField& F, const DensePoly& a, const DensePoly& b) {
  return divrem(F, a, b).second;
}

u64 eval(const PrimeField& F, const DensePoly& p, u64 x) {
  u64 acc = 0;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = F.add(F.mul(acc, x), p.coeffs[i]);
  return acc;
}

DensePoly derivative(const PrimeField& F, const DensePoly& p) {
  if (p.coeffs.size() <= 1) return {};
  std::vector<u64> out(p.coeffs.size() - 1);
  for (std::size_t i = 1; i < p.coeffs.size(); ++i) {
    out[i - 1] = F.mul(p.coeffs[i], i % F.order());
  }
  return DensePoly(std::move(out));
}

DensePoly gcd(const PrimeField& F, DensePoly a, DensePoly b) {
  while (!b.is_zero()) {
    DensePoly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, a);
}

std::optional<DensePoly> inverse_mod(const PrimeField& F, const DensePoly& a,
                                     const DensePoly& m) {
  DensePoly r0 = m, r1 = rem(F, a, m);
  DensePoly t0, t1 = DensePoly::constant(1);
  while (!r1.is_zero()) {
    auto [qq, r] = divrem(F, r0, r1);
    DensePoly t = sub(F, t0, mul(F, qq, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.degree() != 0) return std::nullopt;
  return rem(F, scale(F, t0, F.inv(r0.lead())), m);
}

DensePoly mulmod(const PrimeField& F, const DensePoly& a, const DensePoly& b,
                 const DensePoly& m) {
  return rem(F, mul(F, a, b), m);
}

DensePoly powmod(const PrimeField& F, const DensePoly& base, u64 exp, const DensePoly& m) {
  DensePoly result = rem(F, DensePoly::constant(1), m);
  DensePoly b = rem(F, base, m);
  while (exp) {
    if (exp & 1) result = mulmod(F, result, b, m);
    exp >>= 1;
    if (exp) b = mulmod(F, b, b, m);
  }
  return result;
}

BezoutTriple partial_eea(const PrimeField& F, const DensePoly& s0, const DensePoly& s1,
                         int bound) {
  if (s1.degree() < bound) return {DensePoly{}, DensePoly::constant(1), s1};
  DensePoly r0 = s0, r1 = s1;
  DensePoly u0 = DensePoly::constant(1), u1;
  DensePoly v0, v1 = DensePoly::constant(1);
  while (r1.degree() >= bound) {
    auto [qq, r] = divrem(F, r0, r1);
    DensePoly u2 = sub(F, u0, mul(F, qq, u1));
    DensePoly v2 = sub(F, v0, mul(F, qq, v1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  return {std::move(u1), std::move(v1), std::move(r1)};
}

DensePoly product_tree(const PrimeField& F, std::span<const u64> points) {
  std::vector<u64> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("product_tree: duplicate points");
  }
  const u64 q = F.order();
  if (!sorted.empty() && sorted.back() >= q) {
    throw std::invalid_argument("product_tree: point outside GF(q)");
  }
  if (sorted.size() == q) {
    std::vector<u64> c(q + 1, 0);
    c[q] = 1;
    c[1] = F.neg(1);
    return DensePoly(std::move(c));
  }
  std::vector<DensePoly> level;
  level.reserve(points.size());
  for (u64 x : points) level.push_back(DensePoly{F.neg(x), 1});
  if (level.empty()) return DensePoly::constant(1);
  while (level.size() > 1) {
    std::vector<DensePoly> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      next.push_back(mul(F, level[i], level[i + 1]));
    }
    if (level.size() % 2) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  return std::move(level.front());
}

DensePoly interpolate(const PrimeField& F, std::span<const std::pair<u64, u64>> points) {
  std::vector<u64> xs;
  xs.reserve(points.size());
  for (const auto& [x, y] : points) xs.push_back(x);
  const DensePoly G = product_tree(F, xs);
  const DensePoly dG = derivative(F, G);
  std::vector<u64> acc(points.size(), 0);
  for (const auto& [x, y] : points) {
    if (y == 0) continue;
    const u64 w = F.mul(y, F.inv(eval(F, dG, x)));
    // Synthetic division of G by (X - x).
    u64 carry = 0;
    for (std::size_t i = G.coeffs.size() - 1; i-- > 0;) {
      carry = F.add(G.coeffs[i + 1], F.mul(carry, x));
      acc[i] = F.add(acc[i], F.mul(w, carry));
    }
  }
  return DensePoly(std::move(acc));
}

DensePoly x_power_mod(const PrimeField& F, u64 field_size, const DensePoly& v) {
  if (v.degree() < 1) throw std::invalid_argument("x_power_mod: constant modulus");
  return powmod(F, DensePoly::x(), field_size, v);
}

namespace {

DensePoly random_below(const PrimeField& F, int degree, Rng& rng) {
  std::uniform_int_distribution<u64> dist(0, F.order() - 1);
  std::vector<u64> c(static_cast<std::size_t>(degree));
  for (auto& x : c) x = dist(rng);
  return DensePoly(std::move(c));
}

bool poly_less(const DensePoly& a, const DensePoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs.rbegin(), a.coeffs.rend(), b.coeffs.rbegin(),
                                      b.coeffs.rend());
}

void edf_recurse(const PrimeField& F, const DensePoly& g, int d, Rng& rng,
                 std::vector<DensePoly>& out) {
  if (g.degree() <= d) {
    out.push_back(g);
    return;
  }
  const u64 q = F.order();
  for (;;) {
    DensePoly a = random_below(F, g.degree(), rng);
    if (a.degree() < 1) continue;
    DensePoly b;
    if (q == 2) {
      DensePoly t = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        t = mulmod(F, t, t, g);
        b = add(F, b, t);
      }
    } else {
      const u64 exp = (checked_power(q, static_cast<unsigned>(d)) - 1) / 2;
      b = sub(F, powmod(F, a, exp, g), DensePoly::constant(1));
    }
    DensePoly h = gcd(F, g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      edf_recurse(F, h, d, rng, out);
      edf_recurse(F, divrem(F, g, h).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<DensePoly> equal_degree_split(const PrimeField& F, const DensePoly& g, int d,
                                          Rng& rng) {
  std::vector<DensePoly> out;
  if (g.degree() < 1) return out;
  edf_recurse(F, make_monic(F, g), d, rng, out);
  for (auto& f : out) f = make_monic(F, f);
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::optional<std::vector<u64>> roots_with_splitting_check(const PrimeField& F,
                                                           const DensePoly& v, Rng& rng,
                                                           u64 exhaustive_threshold) {
  if (v.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  if (v.degree() == 0) return std::vector<u64>{};
  const u64 q = F.order();
  if (static_cast<u64>(v.degree()) > q) return std::nullopt;
  if (q <= exhaustive_threshold) {
    std::vector<u64> roots;
    for (u64 a = 0; a < q; ++a) {
      if (eval(F, v, a) == 0) roots.push_back(a);
    }
    if (roots.size() != static_cast<std::size_t>(v.degree())) return std::nullopt;
    return roots;
  }
  const DensePoly vm = make_monic(F, v);
  if (x_power_mod(F, q, vm) != rem(F, DensePoly::x(), vm)) return std::nullopt;
  std::vector<u64> roots;
  for (const auto& f : equal_degree_split(F, vm, 1, rng)) roots.push_back(F.neg(f.coeff(0)));
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<std::vector<DensePoly>> split_over_extension(const PrimeField& F,
                                                           const DensePoly& v, unsigned e,
                                                           Rng& rng) {
  if (v.is_zero()) throw std::invalid_argument("split of the zero polynomial");
  if (v.degree() == 0) return std::vector<DensePoly>{};
  const DensePoly vm = make_monic(F, v);
  const DensePoly x_mod = rem(F, DensePoly::x(), vm);
  std::vector<DensePoly> frob(e + 1);
  frob[0] = x_mod;
  for (unsigned i = 1; i <= e; ++i) frob[i] = powmod(F, frob[i - 1], F.order(), vm);
  if (frob[e] != x_mod) return std::nullopt;
  std::vector<DensePoly> factors;
  DensePoly rest = vm;
  for (unsigned i = 1; i <= e && rest.degree() > 0; ++i) {
    DensePoly g = gcd(F, rest, rem(F, sub(F, frob[i], DensePoly::x()), rest));
    if (g.degree() <= 0) continue;
    auto part = equal_degree_split(F, g, static_cast<int>(i), rng);
    factors.insert(factors.end(), part.begin(), part.end());
    rest = divrem(F, rest, g).first;
  }
  if (rest.degree() > 0) return std::nullopt;
  std::sort(factors.begin(), factors.end(), poly_less);
  return factors;
}

}  // namespace rsdl
