/*
   Copyright 2026 the intersective-polynomials authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>

#include "intersective/residues.hpp"

using namespace intersective::residues;
using intersective::arith::is_prime;
using intersective::arith::mod_pow;
using intersective::arith::u64;

namespace {

std::set<u64> naive_powers(u64 n, u64 m) {
  std::set<u64> out;
  for (u64 x = 0; x < m; ++x) out.insert(mod_pow(static_cast<intersective::arith::i64>(x), n, m));
  return out;
}

}  // namespace

TEST_CASE("power_residues matches naive enumeration") {
  for (u64 n = 2; n <= 9; ++n) {
    for (u64 m = 1; m <= 120; ++m) {
      const auto set = power_residues(n, m);
      const auto naive = naive_powers(n, m);
      CHECK(set.size() == naive.size());
      for (u64 r = 0; r < m; ++r) {
        CHECK(set.contains(r) == (naive.count(r) > 0));
        if (set.contains(r)) {
          const auto w = set.witness(r);
          REQUIRE(w.has_value());
          CHECK(mod_pow(static_cast<intersective::arith::i64>(*w), n, m) == r);
          // least witness
          for (u64 x = 0; x < *w; ++x) {
            CHECK(mod_pow(static_cast<intersective::arith::i64>(x), n, m) != r);
          }
        } else {
          CHECK_FALSE(set.witness(r).has_value());
        }
      }
    }
  }
}

TEST_CASE("frozen residue sets") {
  CHECK(power_residues(3, 7).members_sorted() == std::vector<u64>{0, 1, 6});
  CHECK(power_residues(3, 9).members_sorted() == std::vector<u64>{0, 1, 8});
  CHECK(power_residues(4, 5).members_sorted() == std::vector<u64>{0, 1});
  CHECK(power_residues(4, 16).members_sorted() == std::vector<u64>{0, 1});
  CHECK(power_residues(5, 25).members_sorted() == std::vector<u64>{0, 1, 7, 18, 24});
  CHECK(power_residues(5, 11).members_sorted() == std::vector<u64>{0, 1, 10});
  CHECK(power_residues(6, 13).members_sorted() == std::vector<u64>{0, 1, 12});
  CHECK(power_residues(7, 49).members_sorted() == std::vector<u64>{0, 1, 18, 19, 30, 31, 48});
}

TEST_CASE("unit flags at prime powers") {
  const auto set = power_residues(3, 9);
  REQUIRE(set.unit_flags_populated());
  CHECK(set.unit_prime() == 3);
  CHECK(set.unit_flag(1));
  CHECK(set.unit_flag(8));
  CHECK_FALSE(set.unit_flag(0));  // only multiples of 3 cube to 0 mod 9
  CHECK(set.unit_witness(8) == 2);
  CHECK_FALSE(set.unit_witness(0).has_value());

  const auto composite = power_residues(3, 45);
  CHECK_FALSE(composite.unit_flags_populated());
  CHECK(composite.unit_prime() == 0);

  // 0 is a unit fourth power mod 4 (but not mod 8): 2^2 || 4... indeed
  // there is no unit x with x^4 = 0, ever.
  const auto p16 = power_residues(4, 16);
  CHECK_FALSE(p16.unit_flag(0));
  CHECK(p16.unit_flag(1));
}

TEST_CASE("unit_power_residues") {
  const auto set = unit_power_residues(7, 7, 2);
  CHECK(set.members_sorted() == std::vector<u64>{1, 18, 19, 30, 31, 48});
  for (u64 r : set.members_sorted()) {
    CHECK(set.unit_flag(r));
    const auto w = set.unit_witness(r);
    REQUIRE(w.has_value());
    CHECK(*w % 7 != 0);
    CHECK(mod_pow(static_cast<intersective::arith::i64>(*w), 7, 49) == r);
  }
  CHECK_FALSE(set.contains(0));
}

TEST_CASE("exponent reduction collapses to gcd(n, p-1)") {
  for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull, 31ull, 61ull, 97ull, 101ull}) {
    for (u64 n = 1; n <= 50; ++n) {
      const u64 d = exponent_reduction(n, p);
      CHECK(d == std::gcd(n, p - 1));
      CHECK(power_residues(n, p).members_sorted() == power_residues(d, p).members_sorted());
    }
  }
}

TEST_CASE("residue_count is (p-1)/d + 1") {
  for (u64 p = 3; p <= 199; p += 2) {
    if (!is_prime(p)) continue;
    for (u64 d = 1; d <= p - 1; ++d) {
      if ((p - 1) % d != 0) continue;
      CHECK(residue_count(p, d) == (p - 1) / d + 1);
      CHECK(power_residues(d, p).size() == (p - 1) / d + 1);
    }
    CHECK_THROWS_AS(residue_count(p, p + 1), std::domain_error);
  }
}

TEST_CASE("modulus 1 edge case") {
  const auto set = power_residues(3, 1);
  CHECK(set.size() == 1);
  CHECK(set.contains(0));
  CHECK(set.witness(0) == 0);
}
