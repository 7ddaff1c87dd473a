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

#include "rsdl/collector.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <random>
#include <stdexcept>

#include <omp.h>

#include "rsdl/error.hpp"

namespace rsdl {

bool RelationSet::insert(Relation r) {
  const u64 u = r.u;
  return relations.emplace(u, std::move(r)).second;
}

Relation relation_from_outcome(const CodeSpec& code, u64 u, const DecodeOutcome& out) {
  Relation rel{u, {}};
  for (std::size_t idx : out.errors) rel.roots.push_back(code.base[idx].representative);
  std::sort(rel.roots.begin(), rel.roots.end());
  return rel;
}

CollectorState::CollectorState(const CodeSpec& code, const ExtensionField& target, u64 u_start,
                               const QuotientElem& f0)
    : code_(&code), target_(&target), u_(u_start) {
  f_ = target.mul(f0, target.pow(target.x(), u_start));
  I_ = interp_shortcut(code, f_).I.coeffs;
  I_.resize(code.n, 0);
}

DensePoly CollectorState::s1() const {
  return DensePoly(std::vector<u64>(I_.begin() + static_cast<std::ptrdiff_t>(code_->k), I_.end()));
}

void CollectorState::advance() {
  const CodeSpec& code = *code_;
  const PrimeField& F = code.F;
  const std::size_t n = code.n;
  const u64 c = this->c();
  const u64 top = I_[n - 1];
  for (std::size_t j = n - 1; j > 0; --j) I_[j] = I_[j - 1];
  I_[0] = 0;
  if (top != 0) {
    if (code.full_field) {
      I_[1] = F.add(I_[1], top);  // X^n = X mod X^n - X
    } else {
      for (std::size_t j = 0; j < n; ++j) I_[j] = F.sub(I_[j], F.mul(top, code.G.coeffs[j]));
    }
  }
  I_[code.k + 1] = F.add(I_[code.k + 1], 1);
  I_[code.k] = F.sub(I_[code.k], 1);
  I_[0] = F.add(I_[0], c);
  f_ = target_->mul_x(f_);
  ++u_;
}

void ScanStats::merge(const ScanStats& o) {
  steps += o.steps;
  successes += o.successes;
  rejected += o.rejected;
  update += o.update;
  decode.eea += o.decode.eea;
  decode.frobenius += o.decode.frobenius;
  decode.roots += o.decode.roots;
  decode.spurious += o.decode.spurious;
}

bool verify_relation(const Relation& rel, const CodeSpec& code, const FieldTower& tower,
                     const std::optional<QuotientElem>& f0) {
  const PrimeField& F = code.F;
  DensePoly v = DensePoly::constant(1);
  for (std::size_t i = 0; i < rel.roots.size(); ++i) {
    if (i > 0 && rel.roots[i] == rel.roots[i - 1]) return false;
    auto idx = code.index_of_representative(rel.roots[i]);
    if (!idx) return false;
    v = mul(F, v, code.base[*idx].minpoly);
  }
  if (v.degree() < 1 || v.degree() > static_cast<int>(code.h)) return false;
  const ExtensionField& K = tower.field();
  QuotientElem lhs = K.mul(K.pow(K.x(), rel.u), K.from_poly(v));
  if (f0) lhs = K.mul(lhs, *f0);
  return lhs == K.from_poly(code.G_mod_Q);
}

namespace {

using clock_type = std::chrono::steady_clock;

void scan_range(const CodeSpec& code, const FieldTower& tower, u64 u_start, u64 u_end,
                const QuotientElem& f0, Rng& rng, std::vector<Relation>& out,
                ScanStats& stats) {
  CollectorState state(code, tower.field(), u_start, f0);
  const bool plain = f0 == tower.field().one();
  for (;;) {
    DecodeOutcome res = decode_workspace(code, state.s1(), state.f(), rng, &stats.decode);
    ++stats.steps;
    if (res.success) {
      Relation rel = relation_from_outcome(code, state.u(), res);
      if (verify_relation(rel, code, tower, plain ? std::nullopt : std::optional(f0))) {
        ++stats.successes;
        out.push_back(std::move(rel));
      } else {
        ++stats.rejected;
      }
    }
    if (state.u() == u_end) break;
    const auto t0 = clock_type::now();
    state.advance();
    stats.update += std::chrono::duration<double>(clock_type::now() - t0).count();
  }
}

void check_range(const FieldTower& tower, u64 u_start, u64 u_end) {
  if (u_start > u_end || u_end > tower.group_order() - 1) {
    throw std::invalid_argument("scan range must satisfy 0 <= start <= end <= q^h - 2");
  }
}

}  // namespace

RelationSet scan_incremental_reference(const CodeSpec& code, const FieldTower& tower,
                                       u64 u_start, u64 u_end, ScanStats* stats,
                                       std::optional<QuotientElem> f0) {
  check_range(tower, u_start, u_end);
  RelationSet set;
  set.mode = code.mode;
  set.e = code.e;
  set.scan_begin = u_start;
  set.cursor = u_end + 1;
  Rng rng(0);
  std::vector<Relation> rels;
  ScanStats local;
  scan_range(code, tower, u_start, u_end, f0.value_or(tower.field().one()), rng, rels, local);
  for (auto& r : rels) set.insert(std::move(r));
  if (stats) stats->merge(local);
  return set;
}

RelationSet scan_incremental(const CodeSpec& code, const FieldTower& tower, u64 u_start,
                             u64 u_end, const ScanOptions& opts, ScanStats* stats) {
  check_range(tower, u_start, u_end);
  const u64 chunk = std::max<u64>(opts.chunk, 1);
  const u64 total = u_end - u_start + 1;
  const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
  std::vector<std::vector<Relation>> found(static_cast<std::size_t>(chunks));
  std::vector<ScanStats> chunk_stats(static_cast<std::size_t>(chunks));
  std::exception_ptr failure;
  const QuotientElem one = tower.field().one();

#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(opts.workers, 1))
  for (std::int64_t c = 0; c < chunks; ++c) {
    try {
      const u64 a = u_start + static_cast<u64>(c) * chunk;
      const u64 b = std::min(u_end, a + chunk - 1);
      Rng rng(opts.seed ^ (a * 0x9e3779b97f4a7c15ULL));
      scan_range(code, tower, a, b, one, rng, found[static_cast<std::size_t>(c)],
                 chunk_stats[static_cast<std::size_t>(c)]);
    } catch (...) {
#pragma omp critical(rsdl_scan_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  RelationSet set;
  set.mode = code.mode;
  set.e = code.e;
  set.seed = opts.seed;
  set.scan_begin = u_start;
  set.cursor = u_end + 1;
  for (auto& part : found) {
    for (auto& r : part) set.insert(std::move(r));
  }
  if (stats) {
    for (const auto& s : chunk_stats) stats->merge(s);
  }
  return set;
}

RelationSet collect_random(const CodeSpec& code, const FieldTower& tower, std::size_t count,
                           u64 seed, u64 budget, ScanStats* stats) {
  RelationSet set;
  set.mode = code.mode;
  set.e = code.e;
  set.seed = seed;
  set.target = count;
  if (count == 0) return set;
  const u64 N = tower.group_order();
  if (N < 3) throw std::invalid_argument("group too small for random collection");
  Rng rng(seed);
  std::uniform_int_distribution<u64> dist(1, N - 1);
  const ExtensionField& K = tower.field();
  ScanStats local;
  while (set.size() < count) {
    if (local.steps >= budget) {
      if (stats) stats->merge(local);
      throw BudgetExceededError("random collection: " + std::to_string(set.size()) + "/" +
                                std::to_string(count) + " relations after " +
                                std::to_string(local.steps) + " attempts (empirical rate " +
                                std::to_string(local.success_rate()) + ")");
    }
    const u64 u = dist(rng);
    ++local.steps;
    const auto t0 = clock_type::now();
    const QuotientElem f = K.pow(K.x(), u);
    DecodeWorkspace ws = interp_shortcut(code, f);
    local.update += std::chrono::duration<double>(clock_type::now() - t0).count();
    DecodeOutcome res = decode_workspace(code, ws.s1, f, rng, &local.decode);
    if (!res.success) continue;
    Relation rel = relation_from_outcome(code, u, res);
    if (!verify_relation(rel, code, tower)) {
      ++local.rejected;
      continue;
    }
    ++local.successes;
    set.insert(std::move(rel));
  }
  if (stats) stats->merge(local);
  return set;
}

Relation individual_log_relation(const CodeSpec& code, const FieldTower& tower,
                                 const QuotientElem& f, u64 seed, u64 budget) {
  const ExtensionField& K = tower.field();
  if (K.is_zero(f)) throw std::invalid_argument("the zero element has no logarithm");
  Rng rng(seed);
  CollectorState state(code, K, 0, f);
  for (u64 step = 0; step < budget; ++step) {
    DecodeOutcome res = decode_workspace(code, state.s1(), state.f(), rng);
    if (res.success) {
      Relation rel = relation_from_outcome(code, state.u(), res);
      if (verify_relation(rel, code, tower, f)) return rel;
    }
    if (state.u() + 1 >= tower.group_order()) break;
    state.advance();
  }
  throw BudgetExceededError("no decodable f*X^u found within " + std::to_string(budget) +
                            " steps");
}

ProbabilityEstimate estimate_probability_fq(u64 n, unsigned h, u64 q) {
  ProbabilityEstimate est;
  const BigInt qh = boost::multiprecision::pow(BigInt(q), h);
  est.relation_count = binomial(n, h);
  est.exact = BigRational(est.relation_count) / BigRational(qh);
  BigInt hfact = 1;
  for (unsigned i = 2; i <= h; ++i) hfact *= i;
  est.asymptotic =
      BigRational(boost::multiprecision::pow(BigInt(n), h)) / BigRational(hfact * qh);
  return est;
}

ProbabilityEstimate estimate_probability_hf(const OrbitBasis& basis, unsigned h) {
  ProbabilityEstimate est;
  est.relation_count = count_relations(basis, h);
  est.exact = BigRational(est.relation_count) /
              BigRational(boost::multiprecision::pow(BigInt(basis.q), h));
  est.asymptotic = asymptotic_constant(basis.e, h);
  return est;
}

}  // namespace rsdl
