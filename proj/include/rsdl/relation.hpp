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

#ifndef RSDL_RELATION_HPP
#define RSDL_RELATION_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "rsdl/code.hpp"

namespace rsdl {

// X^u * prod minpoly(r) = G mod Q, stored as u plus the factor-base
// representatives of the locator's factors (ascending).
struct Relation {
  u64 u = 0;
  std::vector<u64> roots;

  bool operator==(const Relation&) const = default;
};

struct RelationSet {
  Mode mode = Mode::fq;
  unsigned e = 1;
  u64 seed = 0;
  u64 scan_begin = 0;
  u64 cursor = 0;  // next exponent an incremental scan would visit
  std::size_t target = 0;
  std::map<u64, Relation> relations;  // keyed by u

  // False (and no change) when u is already present.
  bool insert(Relation r);
  std::size_t size() const { return relations.size(); }
  bool operator==(const RelationSet&) const = default;
};

Relation relation_from_outcome(const CodeSpec& code, u64 u, const DecodeOutcome& out);

}  // namespace rsdl

#endif  // RSDL_RELATION_HPP
