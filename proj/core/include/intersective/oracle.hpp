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

#ifndef INTERSECTIVE_ORACLE_HPP
#define INTERSECTIVE_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "intersective/arith.hpp"
#include "intersective/characterize.hpp"
#include "intersective/form.hpp"

namespace intersective::oracle {

using arith::i64;
using arith::u64;

struct OracleResult {
  u64 bound = 0;
  u64 checked_up_to = 0;  // largest modulus actually verified
  bool complete = false;  // checked_up_to == bound
  std::optional<u64> failing_modulus;  // least m with no solution, if any

  bool pass() const { return complete && !failing_modulus; }
};

/// Checks solvability of the form modulo every m in [1, bound] by direct
/// enumeration of residues, independent of the solver/characterize path.
/// The least failing modulus, if reported, has been re-verified by a second
/// enumeration. With a time budget the result may be partial: complete is
/// false and checked_up_to is the last modulus verified.
OracleResult exhaustive_check(const DiagonalFormSpec& form, u64 bound,
                              std::optional<double> budget_seconds = std::nullopt);

/// Reusable oracle for sweeps over k at fixed (n, l): the reachable value
/// sets modulo each m <= bound are computed once, so a single k costs one
/// table lookup per modulus. Construction cross-checks the tables for CRT
/// consistency on every m <= 1000.
class ExhaustiveOracle {
 public:
  ExhaustiveOracle(u64 n, u64 l, u64 bound);

  u64 n() const { return n_; }
  u64 arity() const { return l_; }
  u64 bound() const { return bound_; }

  /// Least m <= bound with no solution, or nullopt. A failure is
  /// re-verified by an independently coded enumeration before being
  /// returned.
  std::optional<u64> first_failure(i64 k) const;

  bool reachable(u64 m, u64 residue) const;

 private:
  u64 n_;
  u64 l_;
  u64 bound_;
  std::vector<std::vector<std::uint64_t>> reachable_;  // [m] -> bit per residue
  std::vector<bool> full_;                             // [m] -> every residue reachable
};

struct AgreementReport {
  u64 n = 0;
  u64 l = 0;
  i64 k = 0;
  u64 bound = 0;
  bool agree = false;
  std::string detail;
  characterize::Decision decision;
  OracleResult oracle;
};

void to_json(nlohmann::json& j, const OracleResult& r);
void from_json(const nlohmann::json& j, OracleResult& r);
void to_json(nlohmann::json& j, const AgreementReport& r);

/// Runs decide and exhaustive_check on the same instance and reports
/// whether they agree; on disagreement the report carries both sides'
/// evidence. Disagreement is a report outcome, not an error.
AgreementReport compare(const DiagonalFormSpec& form, u64 bound);

}  // namespace intersective::oracle

#endif
