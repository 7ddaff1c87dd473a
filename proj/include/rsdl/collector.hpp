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

#ifndef RSDL_COLLECTOR_HPP
#define RSDL_COLLECTOR_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsdl/code.hpp"
#include "rsdl/field.hpp"
#include "rsdl/orbit_basis.hpp"
#include "rsdl/relation.hpp"

namespace rsdl {

// f_u = X^u f0 mod Q together with I_u = interp_shortcut(f_u), advanced in
// O(n) per step by I <- X I + X^{k+1} - X^k + c_{h-1} mod G.
class CollectorState {
 public:
  CollectorState(const CodeSpec& code, const ExtensionField& target, u64 u_start,
                 const QuotientElem& f0);

  u64 u() const { return u_; }
  const QuotientElem& f() const { return f_; }
  // Top coefficient of f, the constant fed into the next update.
  u64 c() const { return f_.coeffs[code_->h - 1]; }
  DensePoly interpolation() const { return DensePoly(I_); }
  DensePoly s1() const;

  void advance();

 private:
  const CodeSpec* code_;
  const ExtensionField* target_;
  u64 u_;
  QuotientElem f_;
  std::vector<u64> I_;  // exactly n coefficients
};

struct ScanStats {
  u64 steps = 0;
  u64 successes = 0;
  u64 rejected = 0;  // decoded but failed verify_relation
  double update = 0;
  DecodeTimers decode;

  void merge(const ScanStats& o);
  double success_rate() const { return steps ? static_cast<double>(successes) / steps : 0.0; }
};

// Serial reference: scan u in [u_start, u_end] from f0 * X^{u_start}.
RelationSet scan_incremental_reference(const CodeSpec& code, const FieldTower& tower,
                                       u64 u_start, u64 u_end, ScanStats* stats = nullptr,
                                       std::optional<QuotientElem> f0 = std::nullopt);

struct ScanOptions {
  int workers = 1;
  u64 chunk = 4096;  // exponents per work item
  u64 seed = 0;
};

// OpenMP kernel over disjoint exponent chunks; each chunk seeds its own
// CollectorState with one pow. Output is independent of the worker count.
RelationSet scan_incremental(const CodeSpec& code, const FieldTower& tower, u64 u_start,
                             u64 u_end, const ScanOptions& opts = {},
                             ScanStats* stats = nullptr);

// Uniform u in [1, q^h - 2] until `count` distinct relations are held. Throws
// BudgetExceededError after `budget` attempts.
RelationSet collect_random(const CodeSpec& code, const FieldTower& tower, std::size_t count,
                           u64 seed, u64 budget = 10'000'000, ScanStats* stats = nullptr);

// f0 * X^u * prod minpoly(r) = G mod Q, recomputed from scratch.
bool verify_relation(const Relation& rel, const CodeSpec& code, const FieldTower& tower,
                     const std::optional<QuotientElem>& f0 = std::nullopt);

// Smallest u >= 0 such that f * X^u mod Q decodes, with its relation
// f X^u v = G mod Q. Throws BudgetExceededError after `budget` steps.
Relation individual_log_relation(const CodeSpec& code, const FieldTower& tower,
                                 const QuotientElem& f, u64 seed, u64 budget = 10'000'000);

struct ProbabilityEstimate {
  BigRational exact;        // C(n,h)/q^h or N_e(h)/q^h
  BigRational asymptotic;   // n^h/(h! q^h) or c_e(h)
  BigInt relation_count;    // C(n,h) or N_e(h)
};

ProbabilityEstimate estimate_probability_fq(u64 n, unsigned h, u64 q);
ProbabilityEstimate estimate_probability_hf(const OrbitBasis& basis, unsigned h);

}  // namespace rsdl

#endif  // RSDL_COLLECTOR_HPP
