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

#ifndef INTERSECTIVE_RESIDUES_HPP
#define INTERSECTIVE_RESIDUES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "intersective/arith.hpp"
#include "intersective/bitset.hpp"

namespace intersective::residues {

using arith::i64;
using arith::u64;

/// The set { x^n mod m } with one witness base per member. At prime-power
/// moduli each member additionally carries a unit flag: true iff some base
/// coprime to the prime attains it (together with the least such base).
/// For other composite moduli the unit data is left unpopulated; callers
/// only consult it at prime powers.
class ResidueSet {
 public:
  u64 modulus() const { return modulus_; }
  u64 exponent() const { return exponent_; }

  bool contains(u64 r) const { return members_.test(r); }
  u64 size() const { return members_.count(); }
  const DenseBitset& bits() const { return members_; }
  std::vector<u64> members_sorted() const { return members_.to_sorted_vector(); }

  /// Least x with x^exponent = r (mod modulus), if r is a member.
  std::optional<u64> witness(u64 r) const;

  bool unit_flags_populated() const { return unit_populated_; }
  /// True iff r is attained by a base coprime to the modulus' prime.
  bool unit_flag(u64 r) const;
  /// Least coprime base attaining r, when the unit flag is set.
  std::optional<u64> unit_witness(u64 r) const;

  /// The prime underlying a prime-power modulus (0 otherwise).
  u64 unit_prime() const { return unit_prime_; }

 private:
  friend ResidueSet power_residues(u64 n, u64 m);
  friend ResidueSet unit_power_residues(u64 n, u64 p, unsigned j);
  ResidueSet() = default;

  u64 modulus_ = 1;
  u64 exponent_ = 1;
  u64 unit_prime_ = 0;
  bool unit_populated_ = false;
  DenseBitset members_;
  std::vector<i64> witness_;       // -1 where absent
  std::vector<i64> unit_witness_;  // -1 where absent
};

/// All n-th power residues modulo m, witnesses included.
ResidueSet power_residues(u64 n, u64 m);

/// { x^n mod p^j : gcd(x, p) = 1 }. Every member is unit-flagged; 0 is not
/// a member (a unit base has a unit power).
ResidueSet unit_power_residues(u64 n, u64 p, unsigned j);

/// gcd(n, p - 1): the n-th and d-th power residues agree modulo an odd
/// prime p for d = gcd(n, p - 1).
u64 exponent_reduction(u64 n, u64 p);

/// Number of d-th power residues modulo an odd prime p = ds + 1, namely
/// s + 1. d must divide p - 1.
u64 residue_count(u64 p, u64 d);

}  // namespace intersective::residues

#endif
