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

#include "intersective/solver.hpp"

#include <stdexcept>

#include "intersective/residues.hpp"
#include "intersective/sumsets.hpp"

namespace intersective::solver {

namespace {

u64 reduce(i64 k, u64 m) {
  i64 r = k % static_cast<i64>(m);
  if (r < 0) r += static_cast<i64>(m);
  return static_cast<u64>(r);
}

std::optional<std::size_t> find_unit_index(const std::vector<u64>& coords, u64 p) {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] % p != 0) return i;
  }
  return std::nullopt;
}

Witness make_witness(u64 m, std::vector<u64> coords, u64 unit_prime) {
  Witness w;
  w.modulus = m;
  w.coords = std::move(coords);
  if (unit_prime != 0) w.unit_index = find_unit_index(w.coords, unit_prime);
  return w;
}

// Verification guard: every witness leaving this module recomputes its
// congruence exactly.
void verify(const Witness& w, const DiagonalFormSpec& form) {
  u64 sum = 0;
  for (u64 x : w.coords) sum = arith::add_mod(sum, arith::mod_pow(static_cast<i64>(x), form.n, w.modulus), w.modulus);
  if (sum != reduce(form.k, w.modulus)) throw std::logic_error("solver: witness failed verification");
}

}  // namespace

void to_json(nlohmann::json& j, const Witness& w) {
  j = nlohmann::json{{"modulus", w.modulus}, {"coords", w.coords}};
  if (w.unit_index) {
    j["unit_index"] = *w.unit_index;
  } else {
    j["unit_index"] = nullptr;
  }
}

void from_json(const nlohmann::json& j, Witness& w) {
  j.at("modulus").get_to(w.modulus);
  j.at("coords").get_to(w.coords);
  if (j.contains("unit_index") && !j.at("unit_index").is_null()) {
    w.unit_index = j.at("unit_index").get<std::size_t>();
  } else {
    w.unit_index = std::nullopt;
  }
}

std::optional<Witness> solvable_mod(const DiagonalFormSpec& form, u64 m) {
  form.validate();
  if (m == 0) throw std::domain_error("solvable_mod: modulus must be positive");
  auto residue_set = residues::power_residues(form.n, m);
  auto acc = sumsets::iterated_sumset(residue_set, form.l);
  auto coords = acc.witness(reduce(form.k, m));
  if (!coords) return std::nullopt;
  Witness w = make_witness(m, std::move(*coords), residue_set.unit_prime());
  verify(w, form);
  return w;
}

std::optional<Witness> solvable_mod_unit(const DiagonalFormSpec& form, u64 p, unsigned j) {
  form.validate();
  if (!arith::is_prime(p)) throw std::domain_error("solvable_mod_unit: p must be prime");
  if (j < 1) throw std::domain_error("solvable_mod_unit: power must be at least 1");
  const u64 m = arith::checked_pow(p, j);
  auto residue_set = residues::power_residues(form.n, m);
  auto acc = sumsets::iterated_sumset(residue_set, form.l);
  auto coords = acc.witness(reduce(form.k, m), /*require_unit=*/true);
  if (!coords) return std::nullopt;
  Witness w = make_witness(m, std::move(*coords), p);
  verify(w, form);
  return w;
}

NicelyReport nicely_solvable(const DiagonalFormSpec& form,
                             const arith::PrimePowerFactorization& n_factorization) {
  form.validate();
  if (n_factorization.value != form.n) {
    throw std::domain_error("nicely_solvable: factorization does not match the exponent");
  }
  NicelyReport report;
  for (const auto& pp : n_factorization.factors) {
    NicelyEntry entry;
    entry.prime = pp.prime;
    entry.exponent_in_n = pp.exponent;
    const unsigned j = pp.prime == 2 ? pp.exponent + 2 : pp.exponent + 1;
    entry.modulus = arith::checked_pow(pp.prime, j);
    entry.witness = solvable_mod_unit(form, pp.prime, j);
    entry.ok = entry.witness.has_value();
    report.overall = report.overall && entry.ok;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::optional<std::vector<i64>> representation_search(const DiagonalFormSpec& form) {
  form.validate();
  if (form.n % 2 != 0) {
    throw std::domain_error("representation_search: exponent must be even (finite search)");
  }
  if (form.k < 0) return std::nullopt;

  const u64 target = static_cast<u64>(form.k);
  // Largest base with base^n <= target.
  u64 max_base = 0;
  for (u64 next = 1;; ++next) {
    u64 power = 1;
    bool fits = true;
    for (u64 i = 0; i < form.n; ++i) {
      if (power > target / next) {
        fits = false;
        break;
      }
      power *= next;
    }
    if (!fits) break;
    max_base = next;
  }

  std::vector<u64> powers(max_base + 1, 0);
  for (u64 b = 1; b <= max_base; ++b) {
    u64 power = 1;
    for (u64 i = 0; i < form.n; ++i) power *= b;
    powers[b] = power;
  }

  std::vector<i64> tuple(form.l, 0);
  // Nonincreasing tuples only; symmetry is the only thing discarded.
  auto search = [&](auto&& self, std::size_t idx, u64 remaining, u64 cap) -> bool {
    if (idx == form.l) return remaining == 0;
    for (u64 b = cap; ; --b) {
      if (powers[b] <= remaining) {
        tuple[idx] = static_cast<i64>(b);
        if (self(self, idx + 1, remaining - powers[b], b)) return true;
      }
      if (b == 0) break;
    }
    return false;
  };
  if (!search(search, 0, target, max_base)) return std::nullopt;
  return tuple;
}

}  // namespace intersective::solver
