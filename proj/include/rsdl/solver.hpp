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

#ifndef RSDL_SOLVER_HPP
#define RSDL_SOLVER_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rsdl/code.hpp"
#include "rsdl/field.hpp"
#include "rsdl/relation.hpp"

namespace rsdl {

struct MatrixRow {
  u64 constant = 0;
  std::vector<std::pair<std::size_t, u64>> entries;  // (column, coefficient), ascending
};

// Rows encode u + sum log(minpoly) - log G = 0 mod m. Unknown columns are
// the factor-base entries whose log is not known a priori, followed by one
// column holding -log G. The factor X (log 1, since omega = X) folds into
// the constant.
struct RelationMatrix {
  u64 modulus = 0;
  std::size_t unknowns = 0;                 // base columns + 1
  std::vector<std::size_t> column_to_base;  // size unknowns - 1
  std::vector<MatrixRow> rows;

  std::size_t row_weight(std::size_t i) const;
};

RelationMatrix build_system(const RelationSet& rels, const CodeSpec& code, u64 modulus);

// Kernel basis of a dense matrix mod prime p (reduced row echelon, one vector
// per free column, free coordinate 1).
std::vector<std::vector<u64>> kernel_mod_prime(std::vector<std::vector<u64>> rows, u64 p);

// (1, x_1, ..., x_unknowns) with constant + sum a_j x_j = 0 mod l^k for every
// row: the kernel of [constant | entries] normalized to first coordinate 1.
// Singleton columns are peeled off first, the remainder is eliminated mod l
// and Hensel-lifted to l^k. Throws RankDeficiencyError when the solution is
// not unique.
std::vector<u64> solve_mod_prime_power(const RelationMatrix& matrix, u64 prime,
                                       unsigned exponent);

// Pohlig-Hellman digits with baby-step giant-step in the order-l subgroup:
// log_X(t) mod l^k for every target.
std::vector<u64> small_order_logs(const FieldTower& tower, std::span<const QuotientElem> targets,
                                  u64 prime, unsigned exponent);

// Unique representative mod the product of pairwise-coprime moduli.
// Returns (value, product).
std::pair<u64, u64> crt_combine(std::span<const std::pair<u64, u64>> residues);

struct LogTable {
  u64 order = 0;             // q^h - 1
  std::map<u64, u64> logs;   // factor-base representative -> log_X
  u64 log_G = 0;
};

struct SolveOptions {
  u64 small_threshold = u64{1} << 20;  // prime powers at or below use Pohlig-Hellman
  int workers = 1;
};

struct SolveStats {
  double linear_algebra = 0;
  double small_logs = 0;
  std::vector<std::string> routes;  // per prime power: "2^2:ph", "61:la"
};

// Every entry is verified by exponentiation; failures throw
// VerificationError, underdetermined systems RankDeficiencyError.
LogTable derive_log_table(const RelationSet& rels, const CodeSpec& code,
                          const FieldTower& tower, const SolveOptions& opts = {},
                          SolveStats* stats = nullptr);

// Representatives whose table entry fails X^log = value (plus "G" for log G).
std::vector<std::string> verify_log_table(const LogTable& table, const CodeSpec& code,
                                          const FieldTower& tower);

// log_X f mod q^h - 1 via one search-phase relation; verified before return.
u64 individual_log(const LogTable& table, const CodeSpec& code, const FieldTower& tower,
                   const QuotientElem& f, u64 seed = 0, u64 budget = 10'000'000);

}  // namespace rsdl

#endif  // RSDL_SOLVER_HPP
