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

#include "rsdl/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace rsdl {

PrimeField::PrimeField(u64 q) : q_(q) {
  if (q >= (u64{1} << 32)) throw std::invalid_argument("base field order must be < 2^32");
  if (!is_prime(q)) throw std::invalid_argument(std::to_string(q) + " is not prime");
}

u64 PrimeField::inv(u64 a) const {
  if (a % q_ == 0) throw std::domain_error("inverse of zero in GF(q)");
  return pow_mod(a, q_ - 2, q_);
}

u64 PrimeField::from_signed(long long v) const {
  long long r = v % static_cast<long long>(q_);
  if (r < 0) r += static_cast<long long>(q_);
  return static_cast<u64>(r);
}

}  // namespace rsdl
