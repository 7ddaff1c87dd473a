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

#include "rsdl/galois.hpp"

#include <stdexcept>

namespace rsdl {

std::optional<Relation> decode_hf(const CodeSpec& code, const FieldTower& tower,
                                  const QuotientElem& f, u64 u, Rng& rng) {
  if (code.mode != Mode::hf) throw std::invalid_argument("decode_hf needs an HF code");
  const ExtensionField& K = tower.field();
  if (K.pow(K.x(), u) != f) throw std::invalid_argument("f is not X^u mod Q");
  DecodeOutcome out = decode(code, f, rng);
  if (!out.success) return std::nullopt;
  DensePoly prod = DensePoly::constant(1);
  std::size_t degree = 0;
  for (std::size_t idx : out.errors) {
    prod = mul(code.F, prod, code.base[idx].minpoly);
    degree += static_cast<std::size_t>(code.base[idx].minpoly.degree());
  }
  if (prod != make_monic(code.F, out.v) || degree > code.h) {
    throw std::logic_error("decoded locator is not a union of Frobenius orbits");
  }
  return relation_from_outcome(code, u, out);
}

std::vector<u64> roots_in_helper_field(const OrbitBasis& basis, const DensePoly& v) {
  const ExtensionField K = basis.helper_field();
  std::vector<u64> roots;
  for (u64 s = 0; s < basis.n; ++s) {
    const QuotientElem a = K.deserialize(s);
    QuotientElem acc = K.zero();
    for (std::size_t i = v.coeffs.size(); i-- > 0;) {
      acc = K.add(K.mul(acc, a), K.constant(v.coeffs[i]));
    }
    if (K.is_zero(acc)) roots.push_back(s);
  }
  return roots;
}

}  // namespace rsdl
