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

#ifndef RSDL_PIPELINE_HPP
#define RSDL_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "rsdl/code.hpp"
#include "rsdl/collector.hpp"
#include "rsdl/field.hpp"
#include "rsdl/orbit_basis.hpp"
#include "rsdl/relation.hpp"
#include "rsdl/solver.hpp"

namespace rsdl {

// Everything needed to rebuild a field and its code.
struct FieldParams {
  u64 p = 0;
  unsigned h = 0;
  std::vector<u64> Q;  // least-degree first, monic, length h + 1
  Mode mode = Mode::fq;
  unsigned e = 1;
  u64 seed = 0;

  bool operator==(const FieldParams&) const = default;
};

// Throws std::invalid_argument on a malformed combination.
void validate_params(const FieldParams& params);

struct Instance {
  FieldParams params;
  FieldTower tower;
  std::optional<OrbitBasis> basis;  // HF mode only
  CodeSpec code;
};

Instance make_instance(const FieldParams& params);

// Picks a random primitive Q from params.seed and fills params.Q.
FieldParams with_random_modulus(FieldParams params);

struct PipelineOptions {
  ScanOptions scan;
  SolveOptions solve;
  unsigned max_rounds = 4;  // extra collection rounds on rank deficiency
};

// Solves, and on rank deficiency or a failed verification extends the
// incremental scan past rels.cursor and tries again.
LogTable solve_collecting_more(RelationSet& rels, const Instance& inst,
                               const PipelineOptions& opts, SolveStats* solve_stats = nullptr,
                               ScanStats* scan_stats = nullptr);

}  // namespace rsdl

#endif  // RSDL_PIPELINE_HPP
