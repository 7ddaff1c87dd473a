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

#include "rsdl/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "rsdl/error.hpp"

namespace rsdl {

void validate_params(const FieldParams& params) {
  if (params.p < 2 || !is_prime(params.p)) {
    throw std::invalid_argument("p = " + std::to_string(params.p) + " is not prime");
  }
  if (params.h == 0) throw std::invalid_argument("h must be positive");
  if (params.mode == Mode::hf && params.e < 2) {
    throw std::invalid_argument("helper-field mode needs e >= 2");
  }
  if (params.mode == Mode::fq && params.e != 1) {
    throw std::invalid_argument("e applies to helper-field mode only");
  }
  if (!params.Q.empty()) {
    if (params.Q.size() != params.h + 1) {
      throw std::invalid_argument("Q must have h + 1 = " + std::to_string(params.h + 1) +
                                  " coefficients");
    }
    for (u64 c : params.Q) {
      if (c >= params.p) throw std::invalid_argument("Q coefficient " + std::to_string(c) +
                                                     " is not reduced mod p");
    }
    if (params.Q.back() != 1) throw std::invalid_argument("Q must be monic");
  }
}

FieldParams with_random_modulus(FieldParams params) {
  validate_params(params);
  Rng rng(params.seed);
  FieldTower t = FieldTower::random_primitive(params.p, params.h, rng);
  params.Q = t.Q().coeffs;
  return params;
}

Instance make_instance(const FieldParams& params) {
  validate_params(params);
  if (params.Q.empty()) throw std::invalid_argument("Q is not set");
  FieldTower tower(params.p, params.h, DensePoly(params.Q));
  if (params.mode == Mode::fq) {
    CodeSpec code = build_code(tower);
    return Instance{params, std::move(tower), std::nullopt, std::move(code)};
  }
  OrbitBasis basis = build_orbit_basis(params.p, params.e);
  CodeSpec code = build_code_hf(tower, basis);
  return Instance{params, std::move(tower), std::move(basis), std::move(code)};
}

LogTable solve_collecting_more(RelationSet& rels, const Instance& inst,
                               const PipelineOptions& opts, SolveStats* solve_stats,
                               ScanStats* scan_stats) {
  const u64 last = inst.tower.group_order() - 1;  // largest exponent worth scanning
  for (unsigned round = 0;; ++round) {
    try {
      return derive_log_table(rels, inst.code, inst.tower, opts.solve, solve_stats);
    } catch (const RankDeficiencyError&) {
      if (round >= opts.max_rounds || rels.cursor > last) throw;
    } catch (const VerificationError&) {
      if (round >= opts.max_rounds || rels.cursor > last) throw;
    }
    // Enough exponents for roughly the base size again, assuming a modest
    // success rate.
    const u64 span = std::max<u64>(64, 8 * static_cast<u64>(inst.code.base.size()));
    const u64 begin = rels.cursor;
    const u64 end = std::min<u64>(last, begin + span - 1);
    if (begin > end) throw RankDeficiencyError("exponent range exhausted");
    RelationSet more = scan_incremental(inst.code, inst.tower, begin, end, opts.scan, scan_stats);
    for (auto& [u, r] : more.relations) rels.insert(r);
    rels.cursor = end + 1;
  }
}

}  // namespace rsdl
