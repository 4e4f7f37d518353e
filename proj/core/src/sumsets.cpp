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

#include "intersective/sumsets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace intersective::sumsets {

SumsetAccumulator::SumsetAccumulator(const ResidueSet& addends, u64 arity)
    : modulus_(addends.modulus()), arity_(arity), addends_(addends) {
  if (arity < 1) throw std::domain_error("iterated_sumset: arity must be at least 1");
  members_ = addends.members_sorted();
  if (members_.empty()) throw std::domain_error("iterated_sumset: addend set is empty");

  levels_.reserve(arity);
  levels_.push_back(addends.bits());
  const bool track_units = addends.unit_flags_populated();
  if (track_units) {
    DenseBitset units(modulus_);
    for (u64 a : members_) {
      if (addends.unit_flag(a)) units.set(a);
    }
    unit_levels_.push_back(std::move(units));
  }

  for (u64 t = 2; t <= arity; ++t) {
    DenseBitset next(modulus_);
    for (u64 a : members_) next.or_rotated(levels_.back(), a);
    if (track_units) {
      DenseBitset next_units(modulus_);
      for (u64 a : members_) {
        next_units.or_rotated(unit_levels_.back(), a);
        if (addends.unit_flag(a)) next_units.or_rotated(levels_.back(), a);
      }
      unit_levels_.push_back(std::move(next_units));
    }
    levels_.push_back(std::move(next));
  }
}

std::vector<u64> SumsetAccumulator::unit_reachable_sorted() const {
  if (!unit_tracked()) return {};
  return unit_levels_.back().to_sorted_vector();
}

std::optional<std::vector<u64>> SumsetAccumulator::witness(u64 r, bool require_unit) const {
  r %= modulus_;
  if (require_unit && !unit_reachable(r)) return std::nullopt;
  if (!require_unit && !reachable(r)) return std::nullopt;

  std::vector<u64> coords;
  coords.reserve(arity_);
  bool need_unit = require_unit;
  u64 rest = r;
  for (u64 t = arity_; t >= 2; --t) {
    const DenseBitset& prev = levels_[t - 2];
    bool stepped = false;
    if (need_unit) {
      // First try to keep the unit addend in the earlier prefix.
      const DenseBitset& prev_units = unit_levels_[t - 2];
      for (u64 a : members_) {
        u64 before = (rest + modulus_ - a) % modulus_;
        if (prev_units.test(before)) {
          coords.push_back(*addends_.witness(a));
          rest = before;
          stepped = true;
          break;
        }
      }
      if (!stepped) {
        for (u64 a : members_) {
          if (!addends_.unit_flag(a)) continue;
          u64 before = (rest + modulus_ - a) % modulus_;
          if (prev.test(before)) {
            coords.push_back(*addends_.unit_witness(a));
            rest = before;
            need_unit = false;
            stepped = true;
            break;
          }
        }
      }
    } else {
      for (u64 a : members_) {
        u64 before = (rest + modulus_ - a) % modulus_;
        if (prev.test(before)) {
          coords.push_back(*addends_.witness(a));
          rest = before;
          stepped = true;
          break;
        }
      }
    }
    if (!stepped) throw std::logic_error("sumset witness: no decomposition found");
  }
  coords.push_back(need_unit ? *addends_.unit_witness(rest) : *addends_.witness(rest));
  std::reverse(coords.begin(), coords.end());
  return coords;
}

SumsetAccumulator iterated_sumset(const ResidueSet& addends, u64 arity) {
  return SumsetAccumulator(addends, arity);
}

u64 cauchy_davenport_bound(u64 h, u64 setsize, u64 p) {
  if (h < 2) throw std::domain_error("cauchy_davenport_bound: arity must be at least 2");
  if (setsize < 1 || setsize > p) {
    throw std::domain_error("cauchy_davenport_bound: set size out of [1, p]");
  }
  return std::min(p, h * setsize - h + 1);
}

std::optional<u64> range_bound(u64 l, u64 n, u64 p, bool unit_restricted) {
  if (l < 1 || n < 1) throw std::domain_error("range_bound: l and n must be positive");
  if (p <= 3 || !arith::is_prime(p)) return std::nullopt;
  const u64 d = std::gcd(n, p - 1);
  if (d <= 1 || 2 * d >= p - 1) return std::nullopt;
  const u64 s = (p - 1) / d;
  // The unit-restricted range can genuinely miss 0 (e.g. three fourth powers
  // modulo 29), so only p - 1 elements are ever guaranteed.
  if (unit_restricted) return std::min(p - 1, (2 * l - 1) * s);
  return std::min(p, (2 * l - 1) * s + 1);
}

u64 covering_arity(u64 n, u64 p, bool unit_restricted) {
  if (p < 3 || !arith::is_prime(p)) {
    throw std::domain_error("covering_arity: p must be an odd prime");
  }
  if (n % p == 0) {
    throw std::domain_error("covering_arity: p divides n; no covering guarantee applies");
  }
  const u64 d = std::gcd(n, p - 1);
  const u64 s = (p - 1) / d;

  if (unit_restricted) {
    if (d == 1) return 2;  // the power map is a bijection on units
    if (s == 1) return p;  // unit residues reduce to {1}; p ones are needed
    // Only plain Cauchy-Davenport on the s unit residues guarantees that 0 is
    // reached; range-based shortcuts can leave 0 uncovered (e.g. three fourth
    // powers modulo 29 reach every unit class but not 0).
    return (d * s + s - 2) / (s - 1);  // ceil(ds / (s-1))
  }

  if (d == 1) return 1;
  // 0 and 1 are always n-th powers, so p - 1 addends suffice regardless.
  u64 best = p - 1;
  if (s >= 2) best = std::min(best, d);
  if (p > 2 * d + 1) best = std::min(best, (d + 2) / 2);  // ceil((d+1)/2)
  if (n % 2 == 1) best = std::min(best, (p - 1) / 2);
  return best;
}

}  // namespace intersective::sumsets
