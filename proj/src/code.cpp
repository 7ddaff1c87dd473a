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

#include "rsdl/code.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace rsdl {

std::string to_string(Mode m) { return m == Mode::fq ? "fq" : "hf"; }

Mode parse_mode(const std::string& s) {
  if (s == "fq") return Mode::fq;
  if (s == "hf") return Mode::hf;
  throw std::invalid_argument("unknown mode '" + s + "' (expected fq or hf)");
}

std::optional<std::size_t> CodeSpec::index_of_representative(u64 rep) const {
  auto it = by_representative.find(rep);
  if (it == by_representative.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> CodeSpec::index_of_minpoly(const DensePoly& monic) const {
  auto it = by_minpoly.find(monic.coeffs);
  if (it == by_minpoly.end()) return std::nullopt;
  return it->second;
}

namespace {

void finish_code(CodeSpec& code) {
  const std::size_t h = code.h;
  if (code.n <= 2 * h) {
    throw std::invalid_argument("support size " + std::to_string(code.n) +
                                " leaves no unique-decoding slack: need n > 2h = " +
                                std::to_string(2 * h));
  }
  code.k = code.n - 2 * h;
  code.mu = code.n - h;
  code.tau = h;
  code.d = code.n - code.k + 1;
  code.s0 = quotient_by_xk(code.G, code.k);
  auto inv = inverse_mod(code.F, neg(code.F, code.Q), code.G);
  if (!inv) throw std::invalid_argument("the support contains a root of Q");
  code.Qtilde = std::move(*inv);
  code.G_mod_Q = rem(code.F, code.G, code.Q);
  std::sort(code.base.begin(), code.base.end(),
            [](const auto& a, const auto& b) { return a.representative < b.representative; });
  for (std::size_t i = 0; i < code.base.size(); ++i) {
    code.by_representative.emplace(code.base[i].representative, i);
    code.by_minpoly.emplace(code.base[i].minpoly.coeffs, i);
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

CodeSpec build_code(const FieldTower& tower, std::span<const u64> support) {
  CodeSpec code;
  code.F = tower.base();
  code.Q = tower.Q();
  code.h = tower.h();
  code.mode = Mode::fq;
  code.e = 1;
  code.points.assign(support.begin(), support.end());
  for (u64 a : code.points) {
    if (a >= code.F.order()) throw std::invalid_argument("support point outside GF(q)");
    if (eval(code.F, code.Q, a) == 0) {
      throw std::invalid_argument("support contains " + std::to_string(a) + ", a root of Q");
    }
    code.base.push_back({a, DensePoly{code.F.neg(a), 1}});
  }
  code.G = product_tree(code.F, code.points);  // rejects duplicates
  code.n = code.points.size();
  code.full_field = code.n == code.F.order();
  finish_code(code);
  return code;
}

CodeSpec build_code(const FieldTower& tower) {
  std::vector<u64> support;
  for (u64 a = 0; a < tower.q(); ++a) {
    if (eval(tower.base(), tower.Q(), a) != 0) support.push_back(a);
  }
  return build_code(tower, support);
}

CodeSpec build_code_hf(const FieldTower& tower, const OrbitBasis& basis,
                       std::optional<std::vector<std::size_t>> orbit_subset) {
  if (basis.q != tower.q()) throw std::invalid_argument("orbit basis over a different GF(q)");
  CodeSpec code;
  code.F = tower.base();
  code.Q = tower.Q();
  code.h = tower.h();
  code.mode = Mode::hf;
  code.e = basis.e;
  if (!orbit_subset) {
    code.n = basis.n;
    code.full_field = true;
    std::vector<u64> g(basis.n + 1, 0);
    g[basis.n] = 1;
    g[1] = code.F.neg(1);
    code.G = DensePoly(std::move(g));
    for (const auto& o : basis.orbits) code.base.push_back({o.representative, o.minpoly});
  } else {
    std::vector<std::size_t> idx = *orbit_subset;
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
      throw std::invalid_argument("duplicate orbit in support");
    }
    code.G = DensePoly::constant(1);
    for (std::size_t i : idx) {
      const Orbit& o = basis.orbits.at(i);
      code.G = mul(code.F, code.G, o.minpoly);
      code.n += o.size;
      code.base.push_back({o.representative, o.minpoly});
    }
    code.full_field = code.n == basis.n;
  }
  finish_code(code);
  return code;
}

DensePoly reduce_mod_G(const CodeSpec& code, const DensePoly& p) {
  if (!code.full_field) return rem(code.F, p, code.G);
  if (p.coeffs.size() <= code.n) return p;
  std::vector<u64> c = p.coeffs;
  const std::size_t n = code.n;
  for (std::size_t j = c.size() - 1; j >= n; --j) {
    if (c[j] == 0) continue;
    c[j - n + 1] = code.F.add(c[j - n + 1], c[j]);
    c[j] = 0;
  }
  c.resize(n);
  return DensePoly(std::move(c));
}

DecodeWorkspace interp_shortcut(const CodeSpec& code, const QuotientElem& f) {
  DecodeWorkspace ws;
  DensePoly prod = mul(code.F, DensePoly(f.coeffs), code.Qtilde);
  ws.I = sub(code.F, reduce_mod_G(code, prod), DensePoly::monomial(1, code.k));
  ws.s1 = quotient_by_xk(ws.I, code.k);
  return ws;
}

std::vector<u64> received_word(const CodeSpec& code, const DecodeWorkspace& ws) {
  if (code.mode != Mode::fq) throw std::invalid_argument("received_word is FQ-only");
  std::vector<u64> y;
  y.reserve(code.points.size());
  for (u64 a : code.points) y.push_back(eval(code.F, ws.I, a));
  return y;
}

DecodeOutcome decode(const CodeSpec& code, const QuotientElem& f, Rng& rng,
                     DecodeTimers* timers) {
  return decode_workspace(code, interp_shortcut(code, f).s1, f, rng, timers);
}

DecodeOutcome decode_workspace(const CodeSpec& code, const DensePoly& s1,
                               const QuotientElem& f, Rng& rng, DecodeTimers* timers) {
  using clock = std::chrono::steady_clock;
  const PrimeField& F = code.F;
  DecodeOutcome out;

  auto t0 = clock::now();
  BezoutTriple bt = partial_eea(F, code.s0, s1, static_cast<int>(code.h));
  if (timers) timers->eea += seconds_since(t0);
  out.v = std::move(bt.v);
  if (out.v.degree() < 1 || out.v.degree() > static_cast<int>(code.h)) return out;
  const DensePoly vm = make_monic(F, out.v);

  std::vector<std::size_t> errors;
  if (code.mode == Mode::fq) {
    std::optional<std::vector<u64>> roots;
    if (code.full_field && F.order() > kExhaustiveRootThreshold) {
      t0 = clock::now();
      const bool splits = x_power_mod(F, F.order(), vm) == rem(F, DensePoly::x(), vm);
      if (timers) timers->frobenius += seconds_since(t0);
      if (!splits) return out;
      t0 = clock::now();
      std::vector<u64> r;
      for (const auto& lin : equal_degree_split(F, vm, 1, rng)) r.push_back(F.neg(lin.coeff(0)));
      roots = std::move(r);
      if (timers) timers->roots += seconds_since(t0);
    } else {
      if (!code.full_field) {
        t0 = clock::now();
        const bool divides = rem(F, code.G, vm).is_zero();
        if (timers) timers->frobenius += seconds_since(t0);
        if (!divides) return out;
      }
      t0 = clock::now();
      roots = roots_with_splitting_check(F, vm, rng);
      if (timers) timers->roots += seconds_since(t0);
    }
    if (!roots) return out;
    for (u64 a : *roots) {
      auto idx = code.index_of_representative(a);
      if (!idx) return out;
      errors.push_back(*idx);
    }
  } else {
    t0 = clock::now();
    const u64 support_field = checked_power(F.order(), code.e);
    const bool splits = x_power_mod(F, support_field, vm) == rem(F, DensePoly::x(), vm);
    if (timers) timers->frobenius += seconds_since(t0);
    if (!splits) return out;
    t0 = clock::now();
    auto factors = split_over_extension(F, vm, code.e, rng);
    if (timers) timers->roots += seconds_since(t0);
    if (!factors) return out;
    for (const auto& g : *factors) {
      auto idx = code.index_of_minpoly(g);
      if (!idx) return out;
      errors.push_back(*idx);
    }
  }

  if (rem(F, mul(F, DensePoly(f.coeffs), vm), code.Q) != code.G_mod_Q) {
    if (timers) ++timers->spurious;
    return out;
  }
  std::sort(errors.begin(), errors.end());
  out.errors = std::move(errors);
  out.success = true;
  return out;
}

std::vector<u64> encode(const CodeSpec& code, const DensePoly& r) {
  if (code.mode != Mode::fq) throw std::invalid_argument("encode is FQ-only");
  if (r.degree() >= static_cast<int>(code.k)) {
    throw std::invalid_argument("message polynomial degree must be below k");
  }
  std::vector<u64> y;
  y.reserve(code.points.size());
  for (u64 a : code.points) y.push_back(eval(code.F, r, a));
  return y;
}

std::size_t hamming_distance(std::span<const u64> y, std::span<const u64> z) {
  if (y.size() != z.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < y.size(); ++i) d += y[i] != z[i];
  return d;
}

}  // namespace rsdl
