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

#include "intersective/residues.hpp"

#include <numeric>
#include <stdexcept>

namespace intersective::residues {

std::optional<u64> ResidueSet::witness(u64 r) const {
  if (r >= modulus_ || witness_[r] < 0) return std::nullopt;
  return static_cast<u64>(witness_[r]);
}

bool ResidueSet::unit_flag(u64 r) const {
  return unit_populated_ && r < modulus_ && unit_witness_[r] >= 0;
}

std::optional<u64> ResidueSet::unit_witness(u64 r) const {
  if (!unit_flag(r)) return std::nullopt;
  return static_cast<u64>(unit_witness_[r]);
}

ResidueSet power_residues(u64 n, u64 m) {
  if (m == 0) throw std::domain_error("power_residues: modulus must be positive");
  if (n == 0) throw std::domain_error("power_residues: exponent must be positive");

  ResidueSet set;
  set.modulus_ = m;
  set.exponent_ = n;
  set.members_ = DenseBitset(m);
  set.witness_.assign(m, -1);
  set.unit_witness_.assign(m, -1);

  auto factorization = arith::factorize(m);
  if (factorization.factors.size() == 1) {
    set.unit_populated_ = true;
    set.unit_prime_ = factorization.factors.front().prime;
  }

  for (u64 x = 0; x < m; ++x) {
    u64 r = arith::mod_pow(static_cast<i64>(x), n, m);
    set.members_.set(r);
    if (set.witness_[r] < 0) set.witness_[r] = static_cast<i64>(x);
    if (set.unit_populated_ && x % set.unit_prime_ != 0 && set.unit_witness_[r] < 0) {
      set.unit_witness_[r] = static_cast<i64>(x);
    }
  }
  if (m == 1) {
    // Z/1 is the zero ring; the unit convention is vacuous there.
    set.unit_populated_ = false;
    set.unit_prime_ = 0;
  }
  return set;
}

ResidueSet unit_power_residues(u64 n, u64 p, unsigned j) {
  if (!arith::is_prime(p)) throw std::domain_error("unit_power_residues: p must be prime");
  if (j < 1) throw std::domain_error("unit_power_residues: power must be at least 1");
  u64 m = arith::checked_pow(p, j);

  ResidueSet set;
  set.modulus_ = m;
  set.exponent_ = n;
  set.unit_prime_ = p;
  set.unit_populated_ = true;
  set.members_ = DenseBitset(m);
  set.witness_.assign(m, -1);
  set.unit_witness_.assign(m, -1);

  for (u64 x = 0; x < m; ++x) {
    if (x % p == 0) continue;
    u64 r = arith::mod_pow(static_cast<i64>(x), n, m);
    set.members_.set(r);
    if (set.witness_[r] < 0) set.witness_[r] = static_cast<i64>(x);
    if (set.unit_witness_[r] < 0) set.unit_witness_[r] = static_cast<i64>(x);
  }
  return set;
}

u64 exponent_reduction(u64 n, u64 p) {
  if (p < 3 || !arith::is_prime(p)) {
    throw std::domain_error("exponent_reduction: p must be an odd prime");
  }
  return std::gcd(n, p - 1);
}

u64 residue_count(u64 p, u64 d) {
  if (p < 3 || !arith::is_prime(p)) {
    throw std::domain_error("residue_count: p must be an odd prime");
  }
  if (d == 0 || (p - 1) % d != 0) {
    throw std::domain_error("residue_count: d must divide p - 1");
  }
  return (p - 1) / d + 1;
}

}  // namespace intersective::residues
