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

#ifndef INTERSECTIVE_CHARACTERIZE_HPP
#define INTERSECTIVE_CHARACTERIZE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "intersective/arith.hpp"
#include "intersective/solver.hpp"

namespace intersective::characterize {

using arith::i64;
using arith::u64;

/// Default arity for exponent n: ceil((n+1)/2) for odd n,
/// max(ceil(2n/3), ceil((n+2)/2)) for even n. The characterizations are
/// proved at this arity; larger arities only enlarge the sumsets.
u64 default_arity(u64 n);

/// The finite moduli whose solvability conditions decide intersectivity.
/// N collects p^(a+1) over odd primes p^a || n, times 2^(a+2) when n is
/// even; extra_primes are the members of {n+1, 2n+1} (even n) or {2n+1}
/// (odd n) that are prime.
struct CriticalModuli {
  u64 n = 0;
  u64 N = 1;
  std::vector<u64> extra_primes;

  u64 combined() const;
  /// The coprime prime-power pieces: p^(a+1) (2^(a+2) for p = 2) for each
  /// prime dividing n, followed by the extra primes.
  std::vector<u64> components() const;
};

CriticalModuli critical_moduli(u64 n);

struct FailEvidence {
  u64 modulus = 0;
  u64 residue = 0;              // k mod modulus, not reachable
  bool unit_restricted = false;  // whether the search demanded a unit coordinate
  std::vector<u64> reachable;    // the classes that are reachable
};

struct Decision {
  u64 n = 0;
  i64 k = 0;
  u64 arity = 0;
  bool intersective = false;
  std::string branch;
  std::vector<solver::Witness> certificates;
  std::vector<u64> checked_moduli;
  std::optional<FailEvidence> failure;
  std::optional<std::vector<i64>> representation;
};

void to_json(nlohmann::json& j, const Decision& d);
void from_json(const nlohmann::json& j, Decision& d);

/// Decides whether x_1^n + ... + x_arity^n - k has roots modulo every
/// positive integer. The arity defaults to default_arity(n) and may only be
/// raised above it.
Decision decide(u64 n, i64 k, std::optional<u64> arity = std::nullopt);

struct TableRow {
  u64 arity = 0;
  u64 condition_modulus = 1;  // 1 on the "always intersective" row
  bool nicely = false;
  bool always_intersective = false;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

void to_json(nlohmann::json& j, const TableRow& r);
void from_json(const nlohmann::json& j, TableRow& r);

struct Table {
  u64 n = 0;
  u64 default_arity = 0;
  bool tabulated = false;  // true for the tabulated exponents 3..7
  std::vector<TableRow> rows;
};

void to_json(nlohmann::json& j, const Table& t);
void from_json(const nlohmann::json& j, Table& t);

/// Per-arity solvability conditions from the default arity up to the first
/// arity at which every k is intersective. The condition modulus of a row
/// is the product of the critical components whose coverage is not yet
/// automatic at that arity.
Table make_table(u64 n);

}  // namespace intersective::characterize

#endif
