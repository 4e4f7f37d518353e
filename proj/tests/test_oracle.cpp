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

#include "intersective/oracle.hpp"
#include "intersective/solver.hpp"

using namespace intersective;
using namespace intersective::oracle;
using intersective::arith::i64;
using intersective::arith::u64;

TEST_CASE("exhaustive_check finds the least failing modulus") {
  const auto r = exhaustive_check({3, 2, 4}, 100);
  CHECK(r.complete);
  // two cubes reach {0, 1, 2, 5, 6} modulo 7, so 4 already fails there
  CHECK(r.failing_modulus == 7);
  CHECK_FALSE(r.pass());
}

TEST_CASE("exhaustive_check passes known intersective forms") {
  // four cubes reach everything
  for (i64 k : {-97, -10, 3, 4, 42, 100}) {
    const auto r = exhaustive_check({3, 4, k}, 1000);
    CHECK(r.pass());
    CHECK(r.checked_up_to == 1000);
  }
  // exact representation: 7 = 4 + 1 + 1 + 1
  CHECK(exhaustive_check({2, 4, 7}, 1000).pass());
}

TEST_CASE("exhaustive_check agrees with the solver modulus by modulus") {
  for (i64 k = -30; k <= 30; ++k) {
    const auto r = exhaustive_check({3, 2, k}, 200);
    u64 least = 0;
    for (u64 m = 1; m <= 200 && least == 0; ++m) {
      if (!solver::solvable_mod({3, 2, k}, m)) least = m;
    }
    if (least == 0) {
      CHECK(r.pass());
    } else {
      CHECK(r.failing_modulus == least);
    }
  }
}

TEST_CASE("a zero budget yields a partial result") {
  const auto r = exhaustive_check({3, 2, 4}, 100, 0.0);
  CHECK_FALSE(r.complete);
  CHECK(r.checked_up_to < 100);
  CHECK_FALSE(r.failing_modulus.has_value());
}

TEST_CASE("ExhaustiveOracle matches exhaustive_check over a k sweep") {
  const ExhaustiveOracle oracle(3, 2, 150);
  for (i64 k = -40; k <= 40; ++k) {
    const auto direct = exhaustive_check({3, 2, k}, 150);
    CHECK(oracle.first_failure(k) == direct.failing_modulus);
  }
}

TEST_CASE("ExhaustiveOracle reachability lookup") {
  const ExhaustiveOracle oracle(3, 2, 50);
  CHECK(oracle.reachable(9, 2));       // 1 + 1
  CHECK_FALSE(oracle.reachable(9, 4));
  CHECK(oracle.reachable(1, 0));
  CHECK_THROWS_AS(oracle.reachable(51, 0), std::domain_error);
}

TEST_CASE("compare: agreement on both verdicts") {
  SUBCASE("intersective instances") {
    for (const auto& form : {DiagonalFormSpec{5, 3, 13}, DiagonalFormSpec{6, 4, 1}}) {
      const auto report = compare(form, 2000);
      CHECK(report.agree);
      CHECK(report.decision.intersective);
      CHECK_FALSE(report.oracle.failing_modulus.has_value());
    }
    // three fourth powers cannot reach 31: both sides see the failure at 16
    const auto report31 = compare({4, 3, 31}, 2000);
    CHECK(report31.agree);
    CHECK_FALSE(report31.decision.intersective);
  }
  SUBCASE("non-intersective instances") {
    const auto report = compare({3, 2, 4}, 2000);
    CHECK(report.agree);
    CHECK_FALSE(report.decision.intersective);
    CHECK(report.oracle.failing_modulus == 7);
  }
  SUBCASE("report serializes as a JSON line") {
    const auto report = compare({3, 2, 4}, 100);
    const nlohmann::json j = report;
    CHECK(j.at("n") == 3);
    CHECK(j.at("l") == 2);
    CHECK(j.at("k") == 4);
    CHECK(j.at("agree") == true);
    CHECK(j.contains("detail"));
    CHECK(j.at("decision").at("intersective") == false);
    CHECK(j.at("oracle").at("failing_modulus") == 7);
  }
}

TEST_CASE("oracle result JSON round-trips") {
  auto r = exhaustive_check({3, 2, 4}, 100);
  const nlohmann::json j = r;
  const auto back = j.get<OracleResult>();
  CHECK(back.bound == r.bound);
  CHECK(back.checked_up_to == r.checked_up_to);
  CHECK(back.complete == r.complete);
  CHECK(back.failing_modulus == r.failing_modulus);
}
