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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rsdl/collector.hpp"
#include "rsdl/error.hpp"

using namespace rsdl;

namespace {

const FieldTower& tower13() {
  static const FieldTower t(13, 3, DensePoly{11, 2, 0, 1});
  return t;
}

void check_incremental(const CodeSpec& code, const FieldTower& t, u64 u0, u64 steps) {
  CollectorState st(code, t.field(), u0, t.field().one());
  for (u64 i = 0; i < steps; ++i) {
    const auto f = t.field().pow(t.field().x(), st.u());
    REQUIRE(st.f() == f);
    auto ws = interp_shortcut(code, f);
    REQUIRE(st.interpolation() == ws.I);
    REQUIRE(st.s1() == ws.s1);
    st.advance();
  }
}

}  // namespace

TEST_CASE("incremental interpolation tracks the fresh computation") {
  const auto& t = tower13();
  check_incremental(build_code(t), t, 0, 2195);
  check_incremental(build_code(t, std::vector<u64>{1, 2, 3, 5, 8, 9, 10, 11}), t, 100, 500);
  Rng rng(1);
  auto t2 = FieldTower::random_primitive(101, 4, rng);
  check_incremental(build_code(t2), t2, 123456, 400);
  FieldTower t3(7, 5, DensePoly{4, 1, 0, 0, 0, 1});
  check_incremental(build_code_hf(t3, build_orbit_basis(7, 2)), t3, 7, 400);
}

TEST_CASE("full scan of GF(13^3) finds the 286 relations") {
  const auto& t = tower13();
  auto code = build_code(t);
  ScanStats stats;
  auto rels = scan_incremental_reference(code, t, 1, 2195, &stats);
  CHECK(rels.size() == 286);
  CHECK(stats.steps == 2195);
  CHECK(stats.successes == 286);
  CHECK(stats.rejected == 0);
  REQUIRE(rels.relations.count(15));
  CHECK(rels.relations.at(15).roots == std::vector<u64>{3, 8, 12});
  // same set as decoding each power independently
  Rng rng(2);
  for (u64 u = 1; u <= 2195; ++u) {
    const bool ok = decode(code, t.field().pow(t.field().x(), u), rng).success;
    CHECK(ok == (rels.relations.count(u) == 1));
  }
  for (const auto& [u, r] : rels.relations) CHECK(verify_relation(r, code, t));
}

TEST_CASE("parallel scan is worker and chunk invariant") {
  const auto& t = tower13();
  auto code = build_code(t);
  auto ref = scan_incremental_reference(code, t, 0, 2195);
  for (int workers : {1, 2, 4}) {
    for (u64 chunk : {u64{1}, u64{37}, u64{4096}}) {
      ScanOptions opts;
      opts.workers = workers;
      opts.chunk = chunk;
      auto got = scan_incremental(code, t, 0, 2195, opts);
      CHECK(got.relations == ref.relations);
      CHECK(got.cursor == 2196);
    }
  }
  auto single = scan_incremental(code, t, 15, 15);
  CHECK(single.size() == 1);
  CHECK(scan_incremental(code, t, 16, 16).size() <= 1);
  CHECK_THROWS_AS(scan_incremental(code, t, 10, 9), std::invalid_argument);
  CHECK_THROWS_AS(scan_incremental(code, t, 0, 2196), std::invalid_argument);
}

TEST_CASE("random collection") {
  const auto& t = tower13();
  auto code = build_code(t);
  ScanStats s1, s2;
  auto a = collect_random(code, t, 40, 99, 10'000'000, &s1);
  auto b = collect_random(code, t, 40, 99, 10'000'000, &s2);
  CHECK(a == b);
  CHECK(a.size() == 40);
  for (const auto& [u, r] : a.relations) {
    CHECK(verify_relation(r, code, t));
    CHECK(u >= 1);
    CHECK(u <= 2194);
  }
  // roughly 2197 / 286 attempts per relation
  auto many = collect_random(code, t, 200, 5, 10'000'000, &s1);
  const double attempts = static_cast<double>(s1.steps) / (40 + 200);
  CHECK(attempts > 4.0);
  CHECK(attempts < 14.0);

  ScanStats none;
  auto empty = collect_random(code, t, 0, 1, 10, &none);
  CHECK(empty.size() == 0);
  CHECK(none.steps == 0);
  try {
    collect_random(code, t, 1000, 1, 50);
    FAIL("expected budget exhaustion");
  } catch (const BudgetExceededError& e) {
    CHECK(std::string(e.what()).find("rate") != std::string::npos);
  }
}

TEST_CASE("relation verification") {
  const auto& t = tower13();
  auto code = build_code(t);
  CHECK(verify_relation(Relation{15, {3, 8, 12}}, code, t));
  CHECK_FALSE(verify_relation(Relation{15, {3, 8, 11}}, code, t));
  CHECK_FALSE(verify_relation(Relation{16, {3, 8, 12}}, code, t));
  CHECK_FALSE(verify_relation(Relation{15, {3, 3, 8}}, code, t));
  CHECK_FALSE(verify_relation(Relation{15, {3, 8, 99}}, code, t));

  FieldTower t7(7, 5, DensePoly{4, 1, 0, 0, 0, 1});
  auto basis = build_orbit_basis(7, 2);
  auto hf = build_code_hf(t7, basis);
  auto idx = hf.index_of_minpoly(DensePoly{4, 1, 1});
  REQUIRE(idx);
  CHECK(verify_relation(Relation{20, {2, 3, 4, hf.base[*idx].representative}}, hf, t7));
  CHECK_FALSE(verify_relation(Relation{20, {2, 3, 4}}, hf, t7));
}

TEST_CASE("search relation for an individual target") {
  const auto& t = tower13();
  auto code = build_code(t);
  const auto f = t.field().from_poly(DensePoly{1, 0, 1});
  auto rel = individual_log_relation(code, t, f, 0);
  CHECK(rel.u == 1);
  CHECK(rel.roots == std::vector<u64>{0, 2, 8});
  CHECK(verify_relation(rel, code, t, f));
  CHECK_THROWS_AS(individual_log_relation(code, t, t.field().zero(), 0), std::invalid_argument);
}

TEST_CASE("success probability estimates") {
  auto e = estimate_probability_fq(13, 3, 13);
  CHECK(e.exact == BigRational(286, 2197));
  CHECK(e.relation_count == 286);
  CHECK(e.asymptotic == BigRational(2197, 6 * 2197));
  CHECK(estimate_probability_fq(3, 3, 13).exact == BigRational(1, 2197));
  auto hf = estimate_probability_hf(build_orbit_basis(7, 2), 5);
  CHECK(hf.relation_count == 2226);
  CHECK(hf.exact == BigRational(2226, 16807));
  CHECK(hf.asymptotic == BigRational(13, 60));
}
