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

#include "intersective/characterize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "intersective/residues.hpp"
#include "intersective/sumsets.hpp"

namespace intersective::characterize {

namespace {

u64 reduce(i64 k, u64 m) {
  i64 r = k % static_cast<i64>(m);
  if (r < 0) r += static_cast<i64>(m);
  return static_cast<u64>(r);
}

struct Component {
  u64 prime;
  unsigned power;      // the j of p^j
  u64 modulus;         // p^j
  bool unit_required;  // solution must have a coordinate coprime to prime
};

std::vector<Component> critical_components(u64 n) {
  std::vector<Component> comps;
  const bool even = n % 2 == 0;
  for (const auto& pp : arith::factorize(n).factors) {
    const unsigned j = pp.prime == 2 ? pp.exponent + 2 : pp.exponent + 1;
    comps.push_back({pp.prime, j, arith::checked_pow(pp.prime, j), even});
  }
  if (even && arith::is_prime(n + 1)) comps.push_back({n + 1, 1, n + 1, true});
  if (arith::is_prime(2 * n + 1)) comps.push_back({2 * n + 1, 1, 2 * n + 1, even});
  return comps;
}

FailEvidence make_evidence(const DiagonalFormSpec& form, const Component& comp) {
  auto residue_set = residues::power_residues(form.n, comp.modulus);
  auto acc = sumsets::iterated_sumset(residue_set, form.l);
  FailEvidence ev;
  ev.modulus = comp.modulus;
  ev.residue = reduce(form.k, comp.modulus);
  ev.unit_restricted = comp.unit_required;
  ev.reachable = comp.unit_required ? acc.unit_reachable_sorted() : acc.reachable_sorted();
  return ev;
}

solver::Witness zero_witness(u64 modulus, u64 arity) {
  solver::Witness w;
  w.modulus = modulus;
  w.coords.assign(arity, 0);
  return w;
}

// Primes p not dividing n whose l-fold sums of n-th powers (unit-restricted
// for even n) must be examined individually. Above the returned bound,
// coverage of the nonzero classes follows from the sumset range bound
// (available once p > 2d + 1 >= 2*gcd(n, p-1) + 1), and for even n a
// Weil-type solution count p^(l-1) - (n-1)^l * p^(l/2) >= 2 guarantees a
// solution of x_1^n + ... + x_l^n = 0 with a coordinate coprime to p.
u64 exceptional_search_bound(u64 n, u64 l) {
  double bound = static_cast<double>(2 * n + 1);
  if (n % 2 == 0 && l >= 3) {
    const double zero_case =
        std::pow(std::pow(static_cast<double>(n - 1), static_cast<double>(l)) + 2.0,
                 2.0 / static_cast<double>(l - 2));
    bound = std::max(bound, zero_case);
  }
  return static_cast<u64>(bound) + 2;
}

std::vector<u64> exceptional_primes(u64 n, u64 l) {
  static std::map<std::pair<u64, u64>, std::vector<u64>> cache;
  static std::mutex cache_mutex;
  const std::pair<u64, u64> key{n, l};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  std::vector<u64> out;
  const u64 bound = exceptional_search_bound(n, l);
  for (u64 p = 2; p <= bound; ++p) {
    if (!arith::is_prime(p) || n % p == 0) continue;
    const u64 d = std::gcd(n, p - 1);
    if (d == 1) continue;
    // Cauchy-Davenport: l addend sets of (p-1)/d units each already cover.
    if (l * (p - 1) >= p * d) continue;
    auto residue_set = residues::power_residues(n, p);
    auto acc = sumsets::iterated_sumset(residue_set, l);
    const bool covered = n % 2 == 0 ? acc.unit_covers_all() : acc.covers_all();
    if (!covered) out.push_back(p);
  }

  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(key, std::move(out)).first->second;
}

// Largest power of comp.prime certified by scaling a unit witness found at
// level t (coordinates multiplied by p^t certify modulo p^(n t) * p^power,
// capped at what fits in 64 bits; the congruence holds a fortiori at any
// divisor).
u64 scaled_modulus(u64 p, unsigned levels, u64 base) {
  u64 m = base;
  for (unsigned i = 0; i < levels; ++i) {
    if (m > std::numeric_limits<u64>::max() / p) return m;
    m *= p;
  }
  return m;
}

// Solvability of the form modulo every power of comp.prime when a coordinate
// coprime to the prime is needed (even exponents). k may be divisible by a
// power of p: dividing out p^n corresponds to dividing every coordinate by p,
// so the form is solvable at all powers if and only if some quotient
// k / p^(n t) admits a unit-coordinate solution modulo p^power.
std::optional<solver::Witness> check_unit_component(const DiagonalFormSpec& form,
                                                    const Component& comp) {
  const u64 p = comp.prime;
  i64 kt = form.k;
  unsigned t = 0;
  for (;;) {
    if (auto w = solver::solvable_mod_unit({form.n, form.l, kt}, p, comp.power)) {
      if (t == 0) return w;
      solver::Witness scaled;
      scaled.modulus = scaled_modulus(p, t * static_cast<unsigned>(form.n), comp.modulus);
      const u64 factor = arith::checked_pow(p, t) % scaled.modulus;
      for (u64 y : w->coords) {
        scaled.coords.push_back(arith::mul_mod(factor, y, scaled.modulus));
      }
      return scaled;
    }
    u64 pn = 1;
    bool fits = true;
    for (u64 i = 0; i < form.n; ++i) {
      if (pn > static_cast<u64>(std::numeric_limits<i64>::max()) / p) {
        fits = false;
        break;
      }
      pn *= p;
    }
    if (!fits || kt % static_cast<i64>(pn) != 0) return std::nullopt;
    kt /= static_cast<i64>(pn);
    ++t;
  }
}

FailEvidence make_unit_evidence(const DiagonalFormSpec& form, const Component& comp) {
  const unsigned v = form.k == 0 ? 0 : arith::valuation(comp.prime, form.k);
  FailEvidence ev;
  const u64 refuted = scaled_modulus(comp.prime, v, comp.modulus);
  if (arith::checked_pow(comp.prime, v) <= std::numeric_limits<u64>::max() / comp.modulus ||
      v == 0) {
    // p^(v + power) fits: the form is plainly unsolvable at that power.
    ev.modulus = refuted;
    ev.residue = reduce(form.k, ev.modulus);
    ev.unit_restricted = false;
    if (ev.modulus <= 4096) {
      auto acc = sumsets::iterated_sumset(residues::power_residues(form.n, ev.modulus), form.l);
      ev.reachable = acc.reachable_sorted();
    }
  } else {
    // Fall back to the base-power statement: no unit-coordinate solution.
    ev.modulus = comp.modulus;
    ev.residue = reduce(form.k, ev.modulus);
    ev.unit_restricted = true;
    auto acc = sumsets::iterated_sumset(residues::power_residues(form.n, ev.modulus), form.l);
    ev.reachable = acc.unit_reachable_sorted();
  }
  return ev;
}

}  // namespace

u64 default_arity(u64 n) {
  if (n < 2) throw std::domain_error("default_arity: exponent must be at least 2");
  if (n % 2 == 1) return (n + 2) / 2;            // ceil((n+1)/2)
  return std::max((2 * n + 2) / 3, (n + 3) / 2);  // max(ceil(2n/3), ceil((n+2)/2))
}

u64 CriticalModuli::combined() const {
  u64 result = N;
  for (u64 q : extra_primes) result = arith::checked_mul(result, q);
  return result;
}

std::vector<u64> CriticalModuli::components() const {
  std::vector<u64> out;
  for (const auto& comp : critical_components(n)) out.push_back(comp.modulus);
  return out;
}

CriticalModuli critical_moduli(u64 n) {
  if (n < 2) throw std::domain_error("critical_moduli: exponent must be at least 2");
  CriticalModuli cm;
  cm.n = n;
  for (const auto& comp : critical_components(n)) {
    if (n % comp.prime == 0) {
      // a prime dividing n contributes p^(a+1) (or 2^(a+2)) to N
      cm.N = arith::checked_mul(cm.N, comp.modulus);
    } else {
      cm.extra_primes.push_back(comp.prime);
    }
  }
  return cm;
}

void to_json(nlohmann::json& j, const Decision& d) {
  j = nlohmann::json{{"n", d.n},
                     {"k", d.k},
                     {"arity", d.arity},
                     {"intersective", d.intersective},
                     {"branch", d.branch},
                     {"certificates", d.certificates},
                     {"checked_moduli", d.checked_moduli}};
  if (d.failure) {
    j["failure"] = nlohmann::json{{"modulus", d.failure->modulus},
                                  {"residue", d.failure->residue},
                                  {"unit_restricted", d.failure->unit_restricted},
                                  {"reachable", d.failure->reachable}};
  }
  if (d.representation) j["representation"] = *d.representation;
}

void from_json(const nlohmann::json& j, Decision& d) {
  j.at("n").get_to(d.n);
  j.at("k").get_to(d.k);
  j.at("arity").get_to(d.arity);
  j.at("intersective").get_to(d.intersective);
  j.at("branch").get_to(d.branch);
  j.at("certificates").get_to(d.certificates);
  j.at("checked_moduli").get_to(d.checked_moduli);
  d.failure.reset();
  if (j.contains("failure")) {
    FailEvidence ev;
    j.at("failure").at("modulus").get_to(ev.modulus);
    j.at("failure").at("residue").get_to(ev.residue);
    j.at("failure").at("unit_restricted").get_to(ev.unit_restricted);
    j.at("failure").at("reachable").get_to(ev.reachable);
    d.failure = std::move(ev);
  }
  d.representation.reset();
  if (j.contains("representation")) {
    d.representation = j.at("representation").get<std::vector<i64>>();
  }
}

Decision decide(u64 n, i64 k, std::optional<u64> arity) {
  const u64 l0 = default_arity(n);
  const u64 l = arity.value_or(l0);
  if (l < l0) {
    throw std::invalid_argument(
        "decide: arity below the default is not supported; the characterization "
        "is only established from the default arity upward");
  }

  Decision d;
  d.n = n;
  d.k = k;
  d.arity = l;
  const DiagonalFormSpec form{n, l, k};

  // The critical components cover the primes dividing n plus the extra primes
  // tied to the default arity; higher arities can still fail at small primes
  // whose l-fold power sums do not cover all classes, so those are appended.
  // For two squares the set of such primes is unbounded (every q = 3 mod 4),
  // but only divisors of k can obstruct, so those are appended from k itself.
  std::vector<Component> comps = critical_components(n);
  auto has_prime = [&comps](u64 p) {
    return std::any_of(comps.begin(), comps.end(),
                       [p](const Component& c) { return c.prime == p; });
  };
  const bool even = n % 2 == 0;
  for (u64 p : exceptional_primes(n, l)) {
    if (!has_prime(p)) comps.push_back({p, 1, p, even});
  }
  if (n == 2 && l == 2 && k != 0) {
    const u64 bound = exceptional_search_bound(n, l);
    const u64 rest = k < 0 ? u64{0} - static_cast<u64>(k) : static_cast<u64>(k);
    for (const auto& pp : arith::factorize(rest).factors) {
      if (pp.prime > bound && pp.prime % 4 == 3 && !has_prime(pp.prime)) {
        comps.push_back({pp.prime, 1, pp.prime, true});
      }
    }
  }

  if (k == 0) {
    // The all-zero tuple solves the congruence at every modulus.
    d.intersective = true;
    d.branch = "zero-representation";
    d.representation = std::vector<i64>(l, 0);
    for (const auto& comp : comps) {
      d.checked_moduli.push_back(comp.modulus);
      d.certificates.push_back(zero_witness(comp.modulus, l));
    }
    return d;
  }

  if (n % 2 == 0) {
    if (auto rep = solver::representation_search(form)) {
      d.intersective = true;
      d.branch = "exact-representation";
      d.representation = rep;
      for (const auto& comp : comps) {
        solver::Witness w;
        w.modulus = comp.modulus;
        for (i64 x : *rep) w.coords.push_back(reduce(x, comp.modulus));
        for (std::size_t i = 0; i < w.coords.size(); ++i) {
          if (w.coords[i] % comp.prime != 0) {
            w.unit_index = i;
            break;
          }
        }
        d.checked_moduli.push_back(comp.modulus);
        d.certificates.push_back(std::move(w));
      }
      return d;
    }
    d.branch = "even-characterization";
  } else {
    d.branch = "odd-characterization";
  }

  for (const auto& comp : comps) {
    if (comp.unit_required) {
      // k may be divisible by comp.prime; solvability at all powers of the
      // prime holds exactly when some quotient k / p^(n t) has a solution
      // with a coordinate coprime to p modulo p^power.
      auto witness = check_unit_component(form, comp);
      if (!witness) {
        d.intersective = false;
        d.failure = make_unit_evidence(form, comp);
        d.checked_moduli.push_back(d.failure->modulus);
        d.certificates.clear();
        return d;
      }
      d.checked_moduli.push_back(witness->modulus);
      d.certificates.push_back(std::move(*witness));
      continue;
    }
    d.checked_moduli.push_back(comp.modulus);
    auto witness = solver::solvable_mod(form, comp.modulus);
    if (!witness) {
      d.intersective = false;
      d.failure = make_evidence(form, comp);
      d.certificates.clear();
      return d;
    }
    d.certificates.push_back(std::move(*witness));
  }
  d.intersective = true;
  return d;
}

void to_json(nlohmann::json& j, const TableRow& r) {
  j = nlohmann::json{{"arity", r.arity},
                     {"condition_modulus", r.condition_modulus},
                     {"nicely", r.nicely},
                     {"always_intersective", r.always_intersective}};
}

void from_json(const nlohmann::json& j, TableRow& r) {
  j.at("arity").get_to(r.arity);
  j.at("condition_modulus").get_to(r.condition_modulus);
  j.at("nicely").get_to(r.nicely);
  j.at("always_intersective").get_to(r.always_intersective);
}

void to_json(nlohmann::json& j, const Table& t) {
  j = nlohmann::json{{"n", t.n},
                     {"default_arity", t.default_arity},
                     {"tabulated", t.tabulated},
                     {"rows", t.rows}};
}

void from_json(const nlohmann::json& j, Table& t) {
  j.at("n").get_to(t.n);
  j.at("default_arity").get_to(t.default_arity);
  j.at("tabulated").get_to(t.tabulated);
  j.at("rows").get_to(t.rows);
}

Table make_table(u64 n) {
  Table table;
  table.n = n;
  table.default_arity = default_arity(n);
  table.tabulated = n >= 3 && n <= 7;

  const auto comps = critical_components(n);
  u64 cap = table.default_arity + 1;
  for (const auto& comp : comps) cap = std::max(cap, comp.modulus + 1);

  for (u64 m = table.default_arity; m <= cap; ++m) {
    u64 condition = 1;
    for (const auto& comp : comps) {
      auto residue_set = residues::power_residues(n, comp.modulus);
      auto acc = sumsets::iterated_sumset(residue_set, m);
      const bool covered = comp.unit_required ? acc.unit_covers_all() : acc.covers_all();
      if (!covered) condition = arith::checked_mul(condition, comp.modulus);
    }
    // The entry row states the full critical modulus whenever any component
    // is still a live condition; coverage-based reduction of individual
    // components is applied from the next arity on. (A condition modulus is
    // not unique — dropping an automatically satisfied component keeps the
    // equivalence — and this matches the usual presentation.)
    if (m == table.default_arity && condition != 1) {
      condition = 1;
      for (const auto& comp : comps) condition = arith::checked_mul(condition, comp.modulus);
    }
    TableRow row;
    row.arity = m;
    row.condition_modulus = condition;
    row.always_intersective = condition == 1;
    row.nicely = n % 2 == 0 && condition > 1;
    table.rows.push_back(row);
    if (row.always_intersective) return table;
  }
  throw std::logic_error("make_table: no covering arity found below the cap");
}

}  // namespace intersective::characterize
