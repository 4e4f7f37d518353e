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

#ifndef INTERSECTIVE_LIFTING_HPP
#define INTERSECTIVE_LIFTING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intersective/arith.hpp"
#include "intersective/form.hpp"

namespace intersective::lifting {

using arith::i64;
using arith::u64;

/// A solution of the diagonal form modulo p^j, ready to be pushed one power
/// higher.
struct LiftState {
  u64 p = 2;
  unsigned j = 1;
  std::vector<u64> coords;  // values in [0, p^j)
  std::optional<std::size_t> unit_index;
  DiagonalFormSpec form{2, 1, 0};

  u64 prime_power() const { return arith::checked_pow(p, j); }

  /// Checks the congruence sum coords[i]^n = k (mod p^j) and, when
  /// unit_index is set, the coprimality of that coordinate.
  bool valid() const;
};

/// One Hensel step for p not dividing n: returns a state at power j + 1
/// whose coordinates are congruent to the input's modulo p^j. Requires a
/// unit coordinate.
LiftState hensel_step(const LiftState& state);

/// The explicit lift for p^a || n with a >= 1: adjusts the unit coordinate
/// by c * p^(j-a) so the congruence holds modulo p^(j+1). Requires
/// j >= a + 1 for odd p, j >= a + 2 for p = 2. A state whose congruence
/// already holds at p^(j+1) is passed through with j bumped. For odd n and
/// odd p a state with no unit coordinate at the base power j = a + 1 is
/// first repaired to (1, p^(a+1) - 1, 0, ..., 0).
LiftState constructive_lift(const LiftState& state);

enum class CriterionBranch {
  exact_representation,  // k is a sum of l integer n-th powers
  odd_odd,               // odd p, odd n: plain solution mod p^(a+1)
  odd_even,              // odd p, even n: unit-coordinate solution mod p^(a+1)
  two_adic,              // p = 2: odd-coordinate solution mod 2^(a+2)
};

std::string to_string(CriterionBranch branch);

struct CriterionResult {
  bool liftable = false;
  CriterionBranch branch = CriterionBranch::odd_odd;
  std::optional<LiftState> witness;
  u64 searched_modulus = 0;
  u64 target_residue = 0;
  /// On failure, the classes actually reachable at the searched modulus
  /// (unit-restricted where the branch demands it); the target is absent.
  std::vector<u64> reachable;
};

/// Decides solvability of the form modulo p^i for every i >= 1, for a
/// prime p dividing n, by exhaustive search at the threshold modulus
/// (p^(a+1), with a unit coordinate for even n, or 2^(a+2) with an odd
/// coordinate). For odd n the arity must be at least 2.
CriterionResult lift_criterion(u64 n, i64 k, u64 p, u64 l);

}  // namespace intersective::lifting

#endif
