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

#ifndef INTERSECTIVE_SUMSETS_HPP
#define INTERSECTIVE_SUMSETS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "intersective/residues.hpp"

namespace intersective::sumsets {

using arith::u64;
using residues::ResidueSet;

/// h-fold sumset of a residue set with witness reconstruction.
///
/// Level t is the exact t-fold sumset tA; alongside it, when the source set
/// carries unit flags, the subset of classes reachable with at least one
/// unit addend is tracked. Witness tuples are recovered by walking levels
/// backwards (per class, scan addends in increasing order), which keeps the
/// construction at one bitset rotate-or per addend and level.
class SumsetAccumulator {
 public:
  SumsetAccumulator(const ResidueSet& addends, u64 arity);

  u64 modulus() const { return modulus_; }
  u64 arity() const { return arity_; }

  bool reachable(u64 r) const { return levels_.back().test(r); }
  u64 size() const { return levels_.back().count(); }
  bool covers_all() const { return levels_.back().all(); }
  const DenseBitset& reachable_set() const { return levels_.back(); }
  std::vector<u64> reachable_sorted() const { return levels_.back().to_sorted_vector(); }

  bool unit_tracked() const { return !unit_levels_.empty(); }
  bool unit_reachable(u64 r) const { return unit_tracked() && unit_levels_.back().test(r); }
  bool unit_covers_all() const { return unit_tracked() && unit_levels_.back().all(); }
  std::vector<u64> unit_reachable_sorted() const;

  /// Bases (x_1, ..., x_h) with sum of x_i^n = r (mod m). With
  /// require_unit, at least one base is coprime to the set's prime.
  /// nullopt when r is not (unit-)reachable.
  std::optional<std::vector<u64>> witness(u64 r, bool require_unit = false) const;

 private:
  u64 modulus_;
  u64 arity_;
  const ResidueSet addends_;
  std::vector<u64> members_;            // sorted addend residues
  std::vector<DenseBitset> levels_;      // levels_[t-1] = t-fold sumset
  std::vector<DenseBitset> unit_levels_;
};

/// hA for the set of n-th power residues; reachable = { a_1 + ... + a_h }.
SumsetAccumulator iterated_sumset(const ResidueSet& addends, u64 arity);

/// min(p, h|A| - h + 1): lower bound on |hA| in Z/p.
u64 cauchy_davenport_bound(u64 h, u64 setsize, u64 p);

/// Lower bound on the range size of an l-fold diagonal form of exponent n
/// in Z/p: min(p, (2l-1)(p-1)/d + 1) for d = gcd(n, p-1), or the
/// unit-restricted variant min(p, (2l-1)s) with s = (p-1)/d.
/// Applicable only for p > 3 and 1 < d < (p-1)/2; nullopt otherwise.
std::optional<u64> range_bound(u64 l, u64 n, u64 p, bool unit_restricted = false);

/// Least arity h, among the guarantees available for p not dividing n,
/// such that the h-fold sumset of n-th powers (unit-restricted: with at
/// least one unit addend) covers Z/p.
u64 covering_arity(u64 n, u64 p, bool unit_restricted);

}  // namespace intersective::sumsets

#endif
