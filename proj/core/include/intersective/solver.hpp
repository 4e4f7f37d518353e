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

#ifndef INTERSECTIVE_SOLVER_HPP
#define INTERSECTIVE_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "intersective/arith.hpp"
#include "intersective/form.hpp"

namespace intersective::solver {

using arith::i64;
using arith::u64;

/// A verified tuple: sum of coords[i]^n = k (mod modulus). At prime-power
/// moduli, unit_index points at a coordinate coprime to the prime when one
/// exists.
struct Witness {
  u64 modulus = 1;
  std::vector<u64> coords;
  std::optional<std::size_t> unit_index;

  friend bool operator==(const Witness&, const Witness&) = default;
};

void to_json(nlohmann::json& j, const Witness& w);
void from_json(const nlohmann::json& j, Witness& w);

/// Exhaustive decision of sum x_i^n = k (mod m): a verified witness, or
/// nullopt meaning no solution exists.
std::optional<Witness> solvable_mod(const DiagonalFormSpec& form, u64 m);

/// Same, restricted to solutions with at least one coordinate coprime to p,
/// at the prime-power modulus p^j.
std::optional<Witness> solvable_mod_unit(const DiagonalFormSpec& form, u64 p, unsigned j);

struct NicelyEntry {
  u64 prime;
  unsigned exponent_in_n;  // multiplicity of prime in the form's exponent
  u64 modulus;             // p^(a+1), or 2^(a+2) for p = 2
  bool ok;
  std::optional<Witness> witness;
};

struct NicelyReport {
  std::vector<NicelyEntry> entries;
  bool overall = true;
};

/// The per-prime "nicely solvable" predicate: for every odd prime p with
/// p^a || n, a solution modulo p^(a+1) with a coordinate coprime to p; for
/// 2^a || n (a >= 1), a solution modulo 2^(a+2) with an odd coordinate.
NicelyReport nicely_solvable(const DiagonalFormSpec& form,
                             const arith::PrimePowerFactorization& n_factorization);

/// Exact integer representation k = sum x_i^n for even n (finite search:
/// even powers are nonnegative). Returns a nonincreasing nonnegative tuple
/// or nullopt (always nullopt for k < 0).
std::optional<std::vector<i64>> representation_search(const DiagonalFormSpec& form);

}  // namespace intersective::solver

#endif
