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

#include <set>

#include "intersective/lifting.hpp"
#include "intersective/solver.hpp"

using namespace intersective;
using namespace intersective::lifting;
using intersective::arith::i64;
using intersective::arith::mod_pow;
using intersective::arith::u64;

namespace {

LiftState state_from_witness(const solver::Witness& w, u64 p, unsigned j, DiagonalFormSpec form) {
  LiftState state;
  state.p = p;
  state.j = j;
  state.coords = w.coords;
  state.unit_index = w.unit_index;
  state.form = form;
  return state;
}

bool solvable_exhaustive(u64 n, u64 l, i64 k, u64 m) {
  std::set<u64> powers;
  for (u64 x = 0; x < m; ++x) powers.insert(mod_pow(static_cast<i64>(x), n, m));
  std::vector<char> cur(m, 0);
  cur[0] = 1;
  for (u64 t = 0; t < l; ++t) {
    std::vector<char> next(m, 0);
    for (u64 r : powers) {
      for (u64 s = 0; s < m; ++s) {
        if (cur[s]) next[(s + r) % m] = 1;
      }
    }
    cur = std::move(next);
  }
  i64 kr = k % static_cast<i64>(m);
  if (kr < 0) kr += static_cast<i64>(m);
  return cur[static_cast<u64>(kr)] != 0;
}

}  // namespace

TEST_CASE("hensel_step climbs prime powers for p not dividing n") {
  // x^3 = 13 has the solution 4 mod 7 (64 = 1 + 63); lift it ten times.
  const DiagonalFormSpec form{3, 2, 13};
  const auto w = solver::solvable_mod(form, 7);
  REQUIRE(w.has_value());
  REQUIRE(w->unit_index.has_value());
  LiftState state = state_from_witness(*w, 7, 1, form);
  REQUIRE(state.valid());
  for (int step = 0; step < 10; ++step) {
    const LiftState next = hensel_step(state);
    CHECK(next.j == state.j + 1);
    CHECK(next.valid());
    // coordinates only change above the old precision
    for (std::size_t i = 0; i < next.coords.size(); ++i) {
      CHECK(next.coords[i] % state.prime_power() == state.coords[i]);
    }
    state = next;
  }
  CHECK(state.j == 11);
}

TEST_CASE("hensel_step preconditions") {
  const DiagonalFormSpec form{3, 2, 2};
  LiftState s;
  s.p = 7;
  s.j = 1;
  s.coords = {1, 1};
  s.unit_index = 0;
  s.form = form;
  REQUIRE(s.valid());

  SUBCASE("p dividing n is rejected") {
    LiftState t = s;
    t.p = 3;
    t.coords = {1, 1};  // 1 + 1 = 2 mod 3
    REQUIRE(t.valid());
    CHECK_THROWS_AS(hensel_step(t), std::domain_error);
  }
  SUBCASE("a unit coordinate is required") {
    LiftState t = s;
    t.unit_index.reset();
    CHECK_THROWS_AS(hensel_step(t), std::domain_error);
  }
  SUBCASE("invalid states are rejected") {
    LiftState t = s;
    t.coords = {1, 3};  // 1 + 27 = 0 mod 7, not the target 2
    CHECK_FALSE(t.valid());
    CHECK_THROWS_AS(hensel_step(t), std::domain_error);
  }
}

TEST_CASE("constructive_lift for p = 2, n = 4 from the threshold power") {
  // 2^2 || 4, so lifting starts at j = 4 (modulus 16).
  for (i64 k : {1, 2, 3, 17, 18, 19, 33, 50}) {
    const DiagonalFormSpec form{4, 3, k};
    const auto w = solver::solvable_mod_unit(form, 2, 4);
    if (!w) continue;
    LiftState state = state_from_witness(*w, 2, 4, form);
    REQUIRE(state.valid());
    for (int step = 0; step < 10; ++step) {
      const LiftState next = constructive_lift(state);
      CHECK(next.valid());
      CHECK(next.j == state.j + 1);
      state = next;
    }
  }
}

TEST_CASE("constructive_lift rejects powers below the threshold") {
  // A valid solution of x^4 + ... = 2 mod 8 sits below 2^(a+2) = 16.
  const DiagonalFormSpec form{4, 3, 2};
  LiftState s;
  s.p = 2;
  s.j = 3;
  s.coords = {1, 1, 0};
  s.unit_index = 0;
  s.form = form;
  REQUIRE(s.valid());
  CHECK_THROWS_AS(constructive_lift(s), std::domain_error);

  // For odd p the threshold is a + 1: n = 9, p = 3 lifts from j = 3.
  const DiagonalFormSpec f9{9, 5, 2};
  LiftState t;
  t.p = 3;
  t.j = 2;
  t.coords = {1, 1, 0, 0, 0};
  t.unit_index = 0;
  t.form = f9;
  REQUIRE(t.valid());
  CHECK_THROWS_AS(constructive_lift(t), std::domain_error);
}

TEST_CASE("constructive_lift repairs an all-divisible state for odd n, odd p") {
  // 1 + 0^3 has no unit coordinate flagged: k = 9 = 0 mod 9 via (3, 0).
  const DiagonalFormSpec form{3, 2, 9};
  LiftState s;
  s.p = 3;
  s.j = 2;
  s.coords = {3, 0};
  s.form = form;
  REQUIRE(s.valid());
  LiftState next = constructive_lift(s);
  CHECK(next.valid());
  CHECK(next.j == 3);
  REQUIRE(next.unit_index.has_value());
  CHECK(next.coords[*next.unit_index] % 3 != 0);
  for (int step = 0; step < 8; ++step) {
    next = constructive_lift(next);
    CHECK(next.valid());
  }
}

TEST_CASE("threshold sharpness: solvable mod 8 does not imply solvable mod 16") {
  // Fourth powers mod 8 and mod 16 are both {0, 1}: three of them reach
  // 0..3 at either modulus, so k = 11 works mod 8 (11 = 3) but not mod 16.
  CHECK(solver::solvable_mod({4, 3, 11}, 8).has_value());
  CHECK_FALSE(solver::solvable_mod({4, 3, 11}, 16).has_value());
  for (i64 k : {9, 10, 11}) {
    CHECK_FALSE(lift_criterion(4, k, 2, 3).liftable);
  }
}

TEST_CASE("lift_criterion branches") {
  SUBCASE("exact representation") {
    const auto r = lift_criterion(4, 16, 2, 3);  // 16 = 2^4
    CHECK(r.liftable);
    CHECK(r.branch == CriterionBranch::exact_representation);
    CHECK(to_string(r.branch) == "exact-representation");
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->valid());
  }
  SUBCASE("odd prime, odd exponent") {
    const auto r = lift_criterion(3, 2, 3, 2);
    CHECK(r.liftable);
    CHECK(r.branch == CriterionBranch::odd_odd);
    CHECK(r.searched_modulus == 9);
    CHECK(to_string(r.branch) == "odd-prime-odd-exponent");
  }
  SUBCASE("odd prime, even exponent") {
    const auto r = lift_criterion(6, 13, 3, 4);
    CHECK(r.branch == CriterionBranch::odd_even);
    CHECK(r.searched_modulus == 9);
    CHECK(to_string(r.branch) == "odd-prime-even-exponent");
  }
  SUBCASE("two-adic") {
    const auto r = lift_criterion(6, -3, 2, 4);
    CHECK(r.branch == CriterionBranch::two_adic);
    CHECK(r.searched_modulus == 8);
    CHECK(to_string(r.branch) == "two-adic");
  }
  SUBCASE("failure carries the reachable classes") {
    const auto r = lift_criterion(4, 11, 2, 3);
    CHECK_FALSE(r.liftable);
    CHECK(r.searched_modulus == 16);
    CHECK(r.target_residue == 11);
    // sums with a unit coordinate: three fourth powers reach 1..3 modulo 16
    CHECK(r.reachable == std::vector<u64>{1, 2, 3});
  }
  SUBCASE("p must divide n") {
    CHECK_THROWS_AS(lift_criterion(4, 1, 3, 3), std::domain_error);
    CHECK_THROWS_AS(lift_criterion(4, 1, 6, 3), std::domain_error);
  }
}

TEST_CASE("lift_criterion agrees with exhaustive checks at small prime powers") {
  struct Sweep {
    u64 n, p, l;
    unsigned max_j;
  };
  for (const auto& s : {Sweep{3, 3, 2, 5}, Sweep{4, 2, 3, 8}, Sweep{6, 2, 4, 8},
                        Sweep{6, 3, 4, 5}, Sweep{5, 5, 3, 4}}) {
    for (i64 k = -40; k <= 40; ++k) {
      const bool liftable = lift_criterion(s.n, k, s.p, s.l).liftable;
      bool all = true;
      for (unsigned j = 1; j <= s.max_j; ++j) {
        if (!solvable_exhaustive(s.n, s.l, k, arith::checked_pow(s.p, j))) {
          all = false;
          break;
        }
      }
      CHECK(liftable == all);
    }
  }
}
