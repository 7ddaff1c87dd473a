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

#include "rsdl/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <unordered_map>

#include <omp.h>

#include "rsdl/collector.hpp"
#include "rsdl/error.hpp"

namespace rsdl {

namespace {

bool is_x(const DensePoly& p) { return p == DensePoly::x(); }

u64 add_mod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) + b) % m); }
u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : static_cast<u64>(static_cast<u128>(a) + m - b); }

using DenseRows = std::vector<std::vector<u64>>;

// Unique solution of A y = rhs mod p, A with full column rank.
std::vector<u64> solve_unique_mod_prime(DenseRows a, std::vector<u64> rhs, std::size_t cols,
                                        u64 p) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_row_of(cols, rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(rhs[piv], rhs[r]);
    const u64 inv = *inv_mod(a[r][c], p);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = mul_mod(a[r][j], inv, p);
    rhs[r] = mul_mod(rhs[r], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const u64 factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = sub_mod(a[i][j], mul_mod(factor, a[r][j], p), p);
      rhs[i] = sub_mod(rhs[i], mul_mod(factor, rhs[r], p), p);
    }
    pivot_row_of[c] = r;
    ++r;
  }
  if (r < cols) {
    throw RankDeficiencyError("relation matrix has rank " + std::to_string(r) + " < " +
                              std::to_string(cols) + " unknowns modulo " + std::to_string(p) +
                              "; collect more relations");
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (rhs[i] != 0) throw VerificationError("inconsistent relation system modulo " + std::to_string(p));
  }
  std::vector<u64> y(cols);
  for (std::size_t c = 0; c < cols; ++c) y[c] = rhs[pivot_row_of[c]];
  return y;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::size_t RelationMatrix::row_weight(std::size_t i) const {
  return rows[i].entries.size() + (rows[i].constant != 0 ? 1 : 0);
}

RelationMatrix build_system(const RelationSet& rels, const CodeSpec& code, u64 modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  RelationMatrix m;
  m.modulus = modulus;
  std::vector<std::optional<std::size_t>> column_of(code.base.size());
  for (std::size_t i = 0; i < code.base.size(); ++i) {
    if (is_x(code.base[i].minpoly)) continue;
    column_of[i] = m.column_to_base.size();
    m.column_to_base.push_back(i);
  }
  m.unknowns = m.column_to_base.size() + 1;
  const std::size_t g_col = m.unknowns - 1;
  for (const auto& [key, rel] : rels.relations) {
    const u64 u = rel.u;
    MatrixRow row;
    u64 constant = u % modulus;
    for (u64 rep : rel.roots) {
      auto idx = code.index_of_representative(rep);
      if (!idx) throw std::invalid_argument("relation u=" + std::to_string(u) +
                                            " uses unknown factor-base element " + std::to_string(rep));
      if (!column_of[*idx]) {
        constant = add_mod(constant, 1, modulus);
      } else {
        row.entries.emplace_back(*column_of[*idx], 1 % modulus);
      }
    }
    row.entries.emplace_back(g_col, 1 % modulus);
    std::sort(row.entries.begin(), row.entries.end());
    row.constant = constant;
    m.rows.push_back(std::move(row));
  }
  return m;
}

std::vector<std::vector<u64>> kernel_mod_prime(std::vector<std::vector<u64>> a, u64 p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (auto& row : a) {
    for (auto& x : row) x %= p;
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const u64 inv = *inv_mod(a[r][c], p);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = mul_mod(a[r][j], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const u64 factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = sub_mod(a[i][j], mul_mod(factor, a[r][j], p), p);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = (p - a[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<u64> solve_mod_prime_power(const RelationMatrix& matrix, u64 prime,
                                       unsigned exponent) {
  if (!is_prime(prime) || exponent == 0) throw std::invalid_argument("need a prime power");
  const u64 mod = checked_power(prime, exponent);
  const std::size_t ncols = matrix.unknowns;
  const std::size_t nrows = matrix.rows.size();

  // Row entries reduced mod l^k.
  std::vector<MatrixRow> rows = matrix.rows;
  for (auto& row : rows) {
    row.constant %= mod;
    for (auto& [c, v] : row.entries) v %= mod;
  }

  // Every row touching a column, including non-unit coefficients: a column
  // is only peeled when no other row refers to it at all.
  std::vector<std::vector<std::size_t>> rows_of_col(ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    for (const auto& [c, v] : rows[r].entries) {
      if (v != 0) rows_of_col[c].push_back(r);
    }
  }
  for (std::size_t c = 0; c < ncols; ++c) {
    if (rows_of_col[c].empty()) {
      throw RankDeficiencyError("unknown column " + std::to_string(c) +
                                " appears in no relation; collect more relations");
    }
  }

  // Structured pre-pass: a column met by exactly one live row, with a unit
  // coefficient, is solved from that row after everything else.
  std::vector<bool> row_alive(nrows, true), col_alive(ncols, true);
  std::vector<std::size_t> live_count(ncols);
  for (std::size_t c = 0; c < ncols; ++c) live_count[c] = rows_of_col[c].size();
  std::vector<std::pair<std::size_t, std::size_t>> peeled;  // (row, col)
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (!col_alive[c] || live_count[c] != 1) continue;
      std::size_t row = nrows;
      for (std::size_t r : rows_of_col[c]) {
        if (row_alive[r]) row = r;
      }
      u64 coef = 0;
      for (const auto& [cc, v] : rows[row].entries) {
        if (cc == c) coef = v;
      }
      if (coef % prime == 0) continue;
      peeled.emplace_back(row, c);
      row_alive[row] = false;
      col_alive[c] = false;
      for (const auto& [cc, v] : rows[row].entries) {
        if (v != 0 && col_alive[cc]) --live_count[cc];
      }
      changed = true;
    }
  }

  std::vector<std::size_t> dense_cols, dense_rows;
  std::vector<std::size_t> dense_index(ncols, ncols);
  for (std::size_t c = 0; c < ncols; ++c) {
    if (!col_alive[c]) continue;
    dense_index[c] = dense_cols.size();
    dense_cols.push_back(c);
  }
  for (std::size_t r = 0; r < nrows; ++r) {
    if (row_alive[r]) dense_rows.push_back(r);
  }

  std::vector<u64> x(ncols, 0);
  if (!dense_cols.empty()) {
    DenseRows a(dense_rows.size(), std::vector<u64>(dense_cols.size(), 0));
    for (std::size_t i = 0; i < dense_rows.size(); ++i) {
      for (const auto& [c, v] : rows[dense_rows[i]].entries) {
        if (col_alive[c]) a[i][dense_index[c]] = v;
      }
    }
    DenseRows a_mod_p = a;
    for (auto& row : a_mod_p) {
      for (auto& v : row) v %= prime;
    }
    u64 scale = 1;  // l^j
    for (unsigned j = 0; j < exponent; ++j) {
      std::vector<u64> rhs(dense_rows.size());
      for (std::size_t i = 0; i < dense_rows.size(); ++i) {
        u64 res = sub_mod(0, rows[dense_rows[i]].constant, mod);
        for (std::size_t jj = 0; jj < dense_cols.size(); ++jj) {
          res = sub_mod(res, mul_mod(a[i][jj], x[dense_cols[jj]], mod), mod);
        }
        if (res % scale != 0) throw VerificationError("Hensel lift lost divisibility");
        rhs[i] = (res / scale) % prime;
      }
      const std::vector<u64> y = solve_unique_mod_prime(a_mod_p, std::move(rhs), dense_cols.size(), prime);
      for (std::size_t jj = 0; jj < dense_cols.size(); ++jj) {
        x[dense_cols[jj]] = add_mod(x[dense_cols[jj]], mul_mod(y[jj], scale, mod), mod);
      }
      if (j + 1 < exponent) scale *= prime;
    }
  }

  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    const auto [r, c] = *it;
    u64 acc = rows[r].constant;
    u64 coef = 0;
    for (const auto& [cc, v] : rows[r].entries) {
      if (cc == c) {
        coef = v;
      } else {
        acc = add_mod(acc, mul_mod(v, x[cc], mod), mod);
      }
    }
    const auto inv = inv_mod(coef, mod);
    if (!inv) throw RankDeficiencyError("non-invertible singleton pivot");
    x[c] = mul_mod(sub_mod(0, acc, mod), *inv, mod);
  }

  for (std::size_t r = 0; r < nrows; ++r) {
    u64 acc = rows[r].constant;
    for (const auto& [c, v] : rows[r].entries) acc = add_mod(acc, mul_mod(v, x[c], mod), mod);
    if (acc != 0) throw VerificationError("relation row " + std::to_string(r) +
                                          " is inconsistent modulo " + std::to_string(mod));
  }

  std::vector<u64> out;
  out.reserve(ncols + 1);
  out.push_back(1);
  out.insert(out.end(), x.begin(), x.end());
  return out;
}

std::vector<u64> small_order_logs(const FieldTower& tower, std::span<const QuotientElem> targets,
                                  u64 prime, unsigned exponent) {
  const ExtensionField& K = tower.field();
  const u64 N = tower.group_order();
  const u64 mod = checked_power(prime, exponent);
  if (N % mod != 0) throw std::invalid_argument("l^k does not divide the group order");
  const QuotientElem g = K.x();
  const QuotientElem gamma = K.pow(g, N / prime);
  const u64 m = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(prime))));
  std::unordered_map<u64, u64> baby;
  baby.reserve(m);
  QuotientElem cur = K.one();
  for (u64 j = 0; j < m; ++j) {
    baby.emplace(K.serialize(cur), j);
    cur = K.mul(cur, gamma);
  }
  const QuotientElem giant = K.pow(gamma, prime - (m % prime));  // gamma^{-m}

  std::vector<u64> out;
  out.reserve(targets.size());
  for (const auto& t : targets) {
    if (K.is_zero(t)) throw std::invalid_argument("the zero element has no logarithm");
    u64 x = 0;
    u64 lj = 1;  // l^j
    for (unsigned j = 0; j < exponent; ++j) {
      const QuotientElem shifted = K.mul(t, K.pow(g, (N - x % N) % N));
      QuotientElem h = K.pow(shifted, N / (lj * prime));
      std::optional<u64> digit;
      for (u64 i = 0; i <= m && !digit; ++i) {
        auto it = baby.find(K.serialize(h));
        if (it != baby.end()) digit = (i * m + it->second) % prime;
        h = K.mul(h, giant);
      }
      if (!digit) throw std::logic_error("baby-step giant-step found no digit");
      x += *digit * lj;
      lj *= prime;
    }
    out.push_back(x % mod);
  }
  return out;
}

std::pair<u64, u64> crt_combine(std::span<const std::pair<u64, u64>> residues) {
  std::map<u64, u64> by_modulus;
  for (const auto& [value, modulus] : residues) {
    if (modulus == 0) throw std::invalid_argument("zero modulus");
    auto [it, fresh] = by_modulus.emplace(modulus, value % modulus);
    if (!fresh && it->second != value % modulus) {
      throw std::invalid_argument("inconsistent residues for modulus " + std::to_string(modulus));
    }
  }
  u64 x = 0, M = 1;
  for (const auto& [modulus, value] : by_modulus) {
    if (gcd_u64(M, modulus) != 1) throw std::invalid_argument("moduli are not pairwise coprime");
    const u64 inv = *inv_mod(M % modulus, modulus);
    const u64 t = mul_mod(sub_mod(value, x % modulus, modulus), inv, modulus);
    const u128 next = static_cast<u128>(x) + static_cast<u128>(M) * t;
    M *= modulus;
    x = static_cast<u64>(next % M);
  }
  return {x, M};
}

LogTable derive_log_table(const RelationSet& rels, const CodeSpec& code, const FieldTower& tower,
                          const SolveOptions& opts, SolveStats* stats) {
  const ExtensionField& K = tower.field();
  const auto& fact = tower.factorization();
  const std::size_t nb = code.base.size();
  std::vector<QuotientElem> targets;
  targets.reserve(nb + 1);
  for (const auto& entry : code.base) targets.push_back(K.from_poly(entry.minpoly));
  targets.push_back(K.from_poly(code.G_mod_Q));
  for (const auto& t : targets) {
    if (K.is_zero(t)) throw std::invalid_argument("factor-base element vanishes modulo Q");
  }

  const std::size_t nf = fact.factors.size();
  std::vector<std::vector<u64>> residues(nf);  // per factor: nb + 1 values
  std::vector<double> la_time(nf, 0), ph_time(nf, 0);
  std::vector<std::string> routes(nf);
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(opts.workers, 1))
  for (std::size_t fi = 0; fi < nf; ++fi) {
    try {
      const PrimePower pp = fact.factors[fi];
      const u64 mod = pp.value();
      const auto t0 = std::chrono::steady_clock::now();
      std::vector<u64> res(nb + 1, 0);
      std::string tag = std::to_string(pp.prime);
      if (pp.exponent > 1) tag += "^" + std::to_string(pp.exponent);
      if (mod <= opts.small_threshold) {
        res = small_order_logs(tower, targets, pp.prime, pp.exponent);
        ph_time[fi] = seconds_since(t0);
        routes[fi] = tag + ":ph";
      } else {
        const RelationMatrix m = build_system(rels, code, mod);
        const std::vector<u64> sol = solve_mod_prime_power(m, pp.prime, pp.exponent);
        for (std::size_t b = 0; b < nb; ++b) {
          if (is_x(code.base[b].minpoly)) res[b] = 1 % mod;
        }
        for (std::size_t c = 0; c + 1 < m.unknowns; ++c) res[m.column_to_base[c]] = sol[1 + c];
        res[nb] = sub_mod(0, sol[m.unknowns], mod);
        la_time[fi] = seconds_since(t0);
        routes[fi] = tag + ":la";
      }
      residues[fi] = std::move(res);
    } catch (...) {
#pragma omp critical(rsdl_solve_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  LogTable table;
  table.order = fact.order;
  auto combine = [&](std::size_t slot) {
    std::vector<std::pair<u64, u64>> parts;
    for (std::size_t fi = 0; fi < nf; ++fi) parts.emplace_back(residues[fi][slot], fact.factors[fi].value());
    return nf ? crt_combine(parts).first : 0;
  };
  for (std::size_t b = 0; b < nb; ++b) table.logs[code.base[b].representative] = combine(b);
  table.log_G = combine(nb);

  if (stats) {
    for (std::size_t fi = 0; fi < nf; ++fi) {
      stats->linear_algebra += la_time[fi];
      stats->small_logs += ph_time[fi];
      stats->routes.push_back(routes[fi]);
    }
  }
  auto bad = verify_log_table(table, code, tower);
  if (!bad.empty()) {
    std::string msg = "log table verification failed for";
    for (const auto& b : bad) msg += " " + b;
    throw VerificationError(msg);
  }
  return table;
}

std::vector<std::string> verify_log_table(const LogTable& table, const CodeSpec& code,
                                          const FieldTower& tower) {
  const ExtensionField& K = tower.field();
  std::vector<std::string> bad;
  for (const auto& [rep, lg] : table.logs) {
    auto idx = code.index_of_representative(rep);
    if (!idx || K.pow(K.x(), lg) != K.from_poly(code.base[*idx].minpoly)) {
      bad.push_back(std::to_string(rep));
    }
  }
  if (K.pow(K.x(), table.log_G) != K.from_poly(code.G_mod_Q)) bad.emplace_back("G");
  return bad;
}

u64 individual_log(const LogTable& table, const CodeSpec& code, const FieldTower& tower,
                   const QuotientElem& f, u64 seed, u64 budget) {
  const ExtensionField& K = tower.field();
  if (K.is_zero(f)) throw std::invalid_argument("the zero element has no logarithm");
  const u64 N = tower.group_order();
  u64 result = 0;
  bool known = false;
  if (f == K.x()) {
    result = 1 % N;
    known = true;
  }
  for (std::size_t b = 0; b < code.base.size() && !known; ++b) {
    if (K.from_poly(code.base[b].minpoly) == f) {
      result = table.logs.at(code.base[b].representative);
      known = true;
    }
  }
  if (!known) {
    const Relation rel = individual_log_relation(code, tower, f, seed, budget);
    result = sub_mod(table.log_G, rel.u % N, N);
    for (u64 rep : rel.roots) {
      auto it = table.logs.find(rep);
      if (it == table.logs.end()) {
        throw VerificationError("log table has no entry for " + std::to_string(rep));
      }
      result = sub_mod(result, it->second, N);
    }
  }
  if (K.pow(K.x(), result) != f) {
    throw VerificationError("X^" + std::to_string(result) + " does not match the target");
  }
  return result;
}

}  // namespace rsdl
