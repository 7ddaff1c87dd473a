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

#ifndef RSDL_CODE_HPP
#define RSDL_CODE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "rsdl/field.hpp"
#include "rsdl/orbit_basis.hpp"
#include "rsdl/poly.hpp"

namespace rsdl {

enum class Mode { fq, hf };

std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

// One factor-base polynomial: X - a in FQ mode, an orbit's minimal
// polynomial in HF mode.
struct FactorBaseEntry {
  u64 representative = 0;
  DensePoly minpoly;
};

// Reed-Solomon instance over the support S with the unique-decoding
// parameters tau = h, mu = n - h, k = n - 2h, d = 2h + 1 and the
// precomputed G = prod (X - s), s0 = G div X^k, Qtilde = (-Q)^{-1} mod G.
struct CodeSpec {
  PrimeField F{2};
  DensePoly Q;
  unsigned h = 0;
  Mode mode = Mode::fq;
  unsigned e = 1;

  std::vector<FactorBaseEntry> base;  // ascending by representative
  std::vector<u64> points;            // FQ mode: the support as elements of GF(q)

  std::size_t n = 0, k = 0, mu = 0, tau = 0, d = 0;
  DensePoly G, s0, Qtilde;
  DensePoly G_mod_Q;
  bool full_field = false;  // G = X^n - X

  std::optional<std::size_t> index_of_representative(u64 rep) const;
  std::optional<std::size_t> index_of_minpoly(const DensePoly& monic) const;

  std::unordered_map<u64, std::size_t> by_representative;
  std::map<std::vector<u64>, std::size_t> by_minpoly;
};

// FQ mode. Throws std::invalid_argument when S has duplicates, contains a
// root of Q, or n <= 2h.
CodeSpec build_code(const FieldTower& tower, std::span<const u64> support);
// FQ mode on every a in GF(q) with Q(a) != 0.
CodeSpec build_code(const FieldTower& tower);
// HF mode on a union of Frobenius orbits of GF(q^e); all orbits by default.
CodeSpec build_code_hf(const FieldTower& tower, const OrbitBasis& basis,
                       std::optional<std::vector<std::size_t>> orbit_subset = std::nullopt);

// p mod G; O(deg p) when G = X^n - X.
DensePoly reduce_mod_G(const CodeSpec& code, const DensePoly& p);

struct DecodeWorkspace {
  DensePoly I;   // I(s) = -f(s)/Q(s) - s^k on S
  DensePoly s1;  // I div X^k
};

// I = (f * Qtilde mod G) - X^k without touching the support points.
DecodeWorkspace interp_shortcut(const CodeSpec& code, const QuotientElem& f);

// FQ mode: y = ev_S(I).
std::vector<u64> received_word(const CodeSpec& code, const DecodeWorkspace& ws);

struct DecodeOutcome {
  bool success = false;
  DensePoly v;                      // locator as produced by the EEA
  std::vector<std::size_t> errors;  // factor-base indices of the factors of v
};

struct DecodeTimers {
  double eea = 0;
  double frobenius = 0;  // X^{q^e} mod v
  double roots = 0;
  u64 spurious = 0;  // v | G but the relation check failed
};

// Locator from the partial EEA with D = h; SUCCESS iff v | G with every
// factor in the factor base and f * v = G mod Q.
DecodeOutcome decode(const CodeSpec& code, const QuotientElem& f, Rng& rng,
                     DecodeTimers* timers = nullptr);
DecodeOutcome decode_workspace(const CodeSpec& code, const DensePoly& s1,
                               const QuotientElem& f, Rng& rng,
                               DecodeTimers* timers = nullptr);

// FQ mode testing oracles.
std::vector<u64> encode(const CodeSpec& code, const DensePoly& r);
std::size_t hamming_distance(std::span<const u64> y, std::span<const u64> z);

}  // namespace rsdl

#endif  // RSDL_CODE_HPP
