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

#ifndef RSDL_GALOIS_HPP
#define RSDL_GALOIS_HPP

#include <optional>

#include "rsdl/code.hpp"
#include "rsdl/field.hpp"
#include "rsdl/orbit_basis.hpp"
#include "rsdl/relation.hpp"

namespace rsdl {

// Decode f over a support of whole Frobenius orbits and return the relation
// in orbit-representative form, or nullopt on decoding failure. A successful
// locator that is not a product of basis minimal polynomials contradicts the
// Galois-stability theorem and throws std::logic_error.
std::optional<Relation> decode_hf(const CodeSpec& code, const FieldTower& tower,
                                  const QuotientElem& f, u64 u, Rng& rng);

// Roots of v in the helper field by exhaustive evaluation (testing aid and
// stability check); v must have coefficients in GF(q).
std::vector<u64> roots_in_helper_field(const OrbitBasis& basis, const DensePoly& v);

}  // namespace rsdl

#endif  // RSDL_GALOIS_HPP
