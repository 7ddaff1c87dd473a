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

#ifndef RSDL_PRIME_FIELD_HPP
#define RSDL_PRIME_FIELD_HPP

#include <cstdint>

#include "rsdl/numtheory.hpp"

namespace rsdl {

// GF(q) for prime q < 2^32; elements are residues in [0, q).
class PrimeField {
 public:
  explicit PrimeField(u64 q);

  u64 order() const { return q_; }

  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + q_ - b; }
  u64 neg(u64 a) const { return a ? q_ - a : 0; }
  u64 mul(u64 a, u64 b) const { return a * b % q_; }
  u64 pow(u64 a, u64 e) const { return pow_mod(a, e, q_); }
  u64 inv(u64 a) const;  // throws std::domain_error on 0
  u64 from_signed(long long v) const;

  bool operator==(const PrimeField& o) const { return q_ == o.q_; }

 private:
  u64 q_;
};

}  // namespace rsdl

#endif  // RSDL_PRIME_FIELD_HPP
