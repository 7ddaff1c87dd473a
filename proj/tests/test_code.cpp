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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "rsdl/code.hpp"

using namespace rsdl;

namespace {

const FieldTower& tower13() {
  static const FieldTower t(13, 3, DensePoly{11, 2, 0, 1});
  return t;
}

std::vector<u64> roots_of(const CodeSpec& code, const DecodeOutcome& out) {
  std::vector<u64> r;
  for (auto i : out.errors) r.push_back(code.base[i].representative);
  std::sort(r.begin(), r.end());
  return r;
}

// f_A = prod_{a in A} (X - a) mod Q
QuotientElem f_of(const ExtensionField& K, const std::vector<u64>& A) {
  QuotientElem f = K.one();
  for (u64 a : A) f = K.sub(K.mul_x(f), K.mul(f, K.constant(a)));
  return f;
}

}  // namespace

TEST_CASE("code parameters for the GF(13^3) example") {
  auto code = build_code(tower13());
  CHECK(code.n == 13);
  CHECK(code.k == 7);
  CHECK(code.mu == 10);
  CHECK(code.tau == 3);
  CHECK(code.d == 7);
  CHECK(code.full_field);
  std::vector<u64> g(14, 0);
  g[13] = 1;
  g[1] = 12;
  CHECK(code.G == DensePoly(g));
  CHECK(code.s0 == DensePoly::monomial(1, 6));
  // (-Q) * Qtilde = 1 mod G
  auto prod = rem(code.F, mul(code.F, neg(code.F, code.Q), code.Qtilde), code.G);
  CHECK(prod == DensePoly{1});
}

TEST_CASE("code construction rejects bad supports") {
  const auto& t = tower13();
  CHECK_THROWS_AS(build_code(t, std::vector<u64>{0, 1, 2, 3, 4, 5}), std::invalid_argument);
  CHECK_THROWS_AS(build_code(t, std::vector<u64>{0, 1, 2, 3, 4, 5, 6, 6}), std::invalid_argument);
  // for h = 1 the modulus X - 3 has a root in GF(7)
  FieldTower t1(7, 1, DensePoly{4, 1});
  CHECK_THROWS_AS(build_code(t1, std::vector<u64>{0, 1, 2, 3}), std::invalid_argument);
  auto c1 = build_code(t1);
  CHECK(c1.n == 6);
  CHECK(std::find(c1.points.begin(), c1.points.end(), 3u) == c1.points.end());
}

TEST_CASE("interpolation shortcut on the worked example") {
  const auto& t = tower13();
  auto code = build_code(t);
  const auto f = t.field().pow(t.field().x(), 15);
  auto ws = interp_shortcut(code, f);
  CHECK(received_word(code, ws) == std::vector<u64>{7, 1, 1, 0, 1, 3, 6, 8, 9, 12, 4, 11, 10});
  CHECK(ws.s1 == quotient_by_xk(ws.I, code.k));
}

TEST_CASE("interpolation shortcut matches its defining values and Lagrange") {
  Rng rng(21);
  const auto& t = tower13();
  const auto& K = t.field();
  const PrimeField& F = t.base();
  std::vector<u64> partial{0, 2, 3, 5, 7, 8, 9, 11, 12};
  for (const auto& code : {build_code(t), build_code(t, partial)}) {
    for (int i = 0; i < 100; ++i) {
      const auto f = K.deserialize(rng() % 2197);
      auto ws = interp_shortcut(code, f);
      std::vector<std::pair<u64, u64>> pts;
      for (u64 a : code.points) {
        const u64 fa = eval(F, DensePoly(f.coeffs), a);
        const u64 qa = eval(F, code.Q, a);
        const u64 y = F.sub(F.neg(F.mul(fa, F.inv(qa))), F.pow(a, code.k));
        CHECK(eval(F, ws.I, a) == y);
        pts.emplace_back(a, y);
      }
      CHECK(interpolate(F, pts) == ws.I);
    }
  }
}

TEST_CASE("decoding the worked example") {
  const auto& t = tower13();
  auto code = build_code(t);
  Rng rng(1);
  auto out = decode(code, t.field().pow(t.field().x(), 15), rng);
  REQUIRE(out.success);
  CHECK(roots_of(code, out) == std::vector<u64>{3, 8, 12});
  CHECK(make_monic(code.F, out.v) == make_monic(code.F, DensePoly{3, 0, 2, 5}));
  CHECK(rem(code.F, code.G, out.v).is_zero());
}

TEST_CASE("exhaustive decoding equals the subset enumeration") {
  const auto& t = tower13();
  const auto& K = t.field();
  Rng rng(2);
  std::vector<u64> partial{0, 1, 2, 4, 5, 6, 8, 9, 10, 12};
  for (const auto& code : {build_code(t), build_code(t, partial)}) {
    auto expected = oracle::decodable_residues(code.points, {11, 2, 0, 1}, 13, code.mu);
    std::size_t successes = 0;
    for (u64 s = 0; s < 2197; ++s) {
      auto out = decode(code, K.deserialize(s), rng);
      auto it = expected.find(s);
      REQUIRE(out.success == (it != expected.end()));
      if (!out.success) continue;
      ++successes;
      CHECK(out.v.degree() <= 3);
      CHECK(rem(code.F, code.G, out.v).is_zero());
      std::vector<u64> E;
      std::set_difference(code.points.begin(), code.points.end(), it->second.begin(),
                          it->second.end(), std::back_inserter(E));
      CHECK(roots_of(code, out) == E);
    }
    CHECK(successes == expected.size());
    if (code.n == 13) CHECK(successes == 286);
  }
}

TEST_CASE("round trip through f_A for random subsets") {
  Rng rng(3);
  for (auto [q, h] : {std::pair<u64, unsigned>{7, 2}, {13, 4}, {101, 3}, {101, 9}}) {
    auto t = FieldTower::random_primitive(q, h, rng);
    auto code = build_code(t);
    for (int i = 0; i < 50; ++i) {
      std::vector<u64> pts = code.points;
      std::shuffle(pts.begin(), pts.end(), rng);
      std::vector<u64> A(pts.begin(), pts.begin() + static_cast<long>(code.mu));
      std::vector<u64> E(pts.begin() + static_cast<long>(code.mu), pts.end());
      std::sort(E.begin(), E.end());
      auto out = decode(code, f_of(t.field(), A), rng);
      REQUIRE(out.success);
      CHECK(roots_of(code, out) == E);
    }
  }
}

TEST_CASE("failures are sound on GF(7^3)") {
  FieldTower t(7, 3, DensePoly{2, 3, 0, 1});
  auto code = build_code(t);
  auto expected = oracle::decodable_residues(code.points, {2, 3, 0, 1}, 7, code.mu);
  Rng rng(4);
  std::size_t successes = 0;
  for (u64 s = 0; s < 343; ++s) {
    const bool ok = decode(code, t.field().deserialize(s), rng).success;
    CHECK(ok == (expected.count(s) == 1));
    successes += ok;
  }
  CHECK(successes == 35);  // C(7, 4)
}

TEST_CASE("encode and hamming distance") {
  const auto& t = tower13();
  auto code = build_code(t);
  CHECK(encode(code, DensePoly{}) == std::vector<u64>(13, 0));
  CHECK(encode(code, DensePoly{5}) == std::vector<u64>(13, 5));
  CHECK_THROWS_AS(encode(code, DensePoly::monomial(1, 7)), std::invalid_argument);
  const std::vector<u64> y{7, 1, 1, 0, 1, 3, 6, 8, 9, 12, 4, 11, 10};
  CHECK(hamming_distance(y, y) == 0);
  auto z = y;
  z[4] = 2;
  CHECK(hamming_distance(y, z) == 1);
  CHECK_THROWS_AS(hamming_distance(y, std::vector<u64>{1}), std::invalid_argument);
  // the codeword nearest to y agrees with it outside {3, 8, 12}
  std::vector<std::pair<u64, u64>> pts;
  for (u64 i = 0; i < 13; ++i) {
    if (i != 3 && i != 8 && i != 12) pts.emplace_back(i, y[i]);
  }
  auto r = interpolate(code.F, pts);
  CHECK(r.degree() < 7);
  CHECK(hamming_distance(y, encode(code, r)) == code.n - code.mu);
}
