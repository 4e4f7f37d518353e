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

#include "intersective/lifting.hpp"

#include <stdexcept>

#include "intersective/residues.hpp"
#include "intersective/solver.hpp"
#include "intersective/sumsets.hpp"

namespace intersective::lifting {

namespace {

u64 reduce(i64 k, u64 m) {
  i64 r = k % static_cast<i64>(m);
  if (r < 0) r += static_cast<i64>(m);
  return static_cast<u64>(r);
}

u64 form_sum_mod(const std::vector<u64>& coords, u64 n, u64 m) {
  u64 sum = 0;
  for (u64 x : coords) {
    sum = arith::add_mod(sum, arith::mod_pow(static_cast<i64>(x), n, m), m);
  }
  return sum;
}

std::optional<std::size_t> find_unit_index(const std::vector<u64>& coords, u64 p) {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] % p != 0) return i;
  }
  return std::nullopt;
}

LiftState verified(LiftState state) {
  if (!state.valid()) throw std::logic_error("lifting: produced an invalid state");
  return state;
}

}  // namespace

bool LiftState::valid() const {
  if (coords.size() != form.l) return false;
  const u64 m = prime_power();
  for (u64 x : coords) {
    if (x >= m) return false;
  }
  if (unit_index && (*unit_index >= coords.size() || coords[*unit_index] % p == 0)) return false;
  return form_sum_mod(coords, form.n, m) == reduce(form.k, m);
}

LiftState hensel_step(const LiftState& state) {
  if (!state.valid()) throw std::domain_error("hensel_step: invalid state");
  if (state.form.n % state.p == 0) {
    throw std::domain_error("hensel_step: p divides the exponent; use constructive_lift");
  }
  if (!state.unit_index) {
    throw std::domain_error("hensel_step: a unit coordinate is required");
  }

  const u64 p = state.p;
  const u64 m = state.prime_power();
  const u64 big = arith::checked_mul(m, p);

  LiftState next = state;
  next.j = state.j + 1;

  const u64 sum = form_sum_mod(state.coords, state.form.n, big);
  const u64 diff = (sum + big - reduce(state.form.k, big)) % big;
  const u64 alpha = (diff / m) % p;
  if (alpha == 0) return verified(next);

  const u64 x = state.coords[*state.unit_index];
  // n * x^(n-1) is a unit mod p; move the residual onto the unit coordinate.
  const u64 deriv = arith::mul_mod(state.form.n % p, arith::mod_pow(static_cast<i64>(x), state.form.n - 1, p), p);
  const u64 c = arith::mul_mod(p - alpha, arith::inverse_mod_prime(deriv, p), p);
  next.coords[*state.unit_index] = (x + arith::mul_mod(c % big, m % big, big)) % big;
  return verified(next);
}

LiftState constructive_lift(const LiftState& state) {
  if (!state.valid()) throw std::domain_error("constructive_lift: invalid state");
  const u64 p = state.p;
  const u64 n = state.form.n;
  if (n % p != 0) {
    throw std::domain_error("constructive_lift: p does not divide the exponent; use hensel_step");
  }
  const unsigned a = arith::valuation(p, static_cast<i64>(n));
  const unsigned threshold = p == 2 ? a + 2 : a + 1;
  if (state.j < threshold) {
    throw std::domain_error("constructive_lift: power below the lifting threshold");
  }

  const u64 m = state.prime_power();
  const u64 big = arith::checked_mul(m, p);

  LiftState next = state;
  next.j = state.j + 1;

  u64 sum = form_sum_mod(next.coords, n, big);
  u64 diff = (sum + big - reduce(state.form.k, big)) % big;
  u64 alpha = (diff / m) % p;
  if (alpha == 0) return verified(next);

  if (!next.unit_index) next.unit_index = find_unit_index(next.coords, p);
  if (!next.unit_index) {
    if (n % 2 == 0) {
      // Even exponents admit all-divisible states only when k is an exact sum
      // of n-th powers (the coordinates were a reduced representation); swap
      // the reduced coordinates for the representation at the new modulus.
      if (auto rep = solver::representation_search(state.form)) {
        for (std::size_t i = 0; i < next.coords.size(); ++i) {
          next.coords[i] = reduce((*rep)[i], big);
        }
        next.unit_index = find_unit_index(next.coords, p);
        return verified(next);
      }
      throw std::domain_error("constructive_lift: no unit coordinate available");
    }
    if (state.form.l < 2) {
      throw std::domain_error("constructive_lift: no unit coordinate available");
    }
    // Every solvable target has a unit-coordinate witness at the threshold
    // power: either a searched witness has one, or all of its coordinates
    // are divisible by p, which forces p^(a+1) | k, and then the tuple
    // (1, p^(a+1) - 1, 0, ..., 0) serves (n is odd here). A unit-coordinate
    // state lifts to any level by derivative steps, so restart from there.
    const u64 base = arith::checked_pow(p, threshold);
    LiftState inner;
    inner.p = p;
    inner.j = threshold;
    inner.form = state.form;
    if (auto w = solver::solvable_mod(state.form, base)) {
      inner.coords = w->coords;
      inner.unit_index = find_unit_index(inner.coords, p);
    }
    if (!inner.unit_index) {
      if (reduce(state.form.k, base) != 0) {
        throw std::logic_error("constructive_lift: expected p^(a+1) to divide k");
      }
      inner.coords.assign(state.form.l, 0);
      inner.coords[0] = 1;
      inner.coords[1] = base - 1;
      inner.unit_index = 0;
    }
    inner = verified(std::move(inner));
    while (inner.j < next.j) inner = constructive_lift(inner);
    return inner;
  }

  const u64 x = next.coords[*next.unit_index];
  const u64 c0 = (n / arith::checked_pow(p, a)) % p;
  const u64 denom = arith::mul_mod(c0, arith::mod_pow(static_cast<i64>(x), n - 1, p), p);
  const u64 c = arith::mul_mod(p - alpha, arith::inverse_mod_prime(denom, p), p);
  const u64 step = arith::checked_pow(p, state.j - a);  // c * p^(j-a)
  next.coords[*next.unit_index] = (x + arith::mul_mod(c % big, step % big, big)) % big;
  return verified(next);
}

std::string to_string(CriterionBranch branch) {
  switch (branch) {
    case CriterionBranch::exact_representation:
      return "exact-representation";
    case CriterionBranch::odd_odd:
      return "odd-prime-odd-exponent";
    case CriterionBranch::odd_even:
      return "odd-prime-even-exponent";
    case CriterionBranch::two_adic:
      return "two-adic";
  }
  return "unknown";
}

CriterionResult lift_criterion(u64 n, i64 k, u64 p, u64 l) {
  if (n < 2) throw std::domain_error("lift_criterion: exponent must be at least 2");
  if (l < 1) throw std::domain_error("lift_criterion: arity must be at least 1");
  if (!arith::is_prime(p) || n % p != 0) {
    throw std::domain_error("lift_criterion: p must be a prime dividing n");
  }
  const unsigned a = arith::valuation(p, static_cast<i64>(n));
  const DiagonalFormSpec form{n, l, k};

  CriterionResult result;
  if (n % 2 == 1 && l < 2) {
    throw std::domain_error("lift_criterion: odd exponents require arity at least 2");
  }

  if (n % 2 == 0) {
    if (auto rep = solver::representation_search(form)) {
      const unsigned j = p == 2 ? a + 2 : a + 1;
      const u64 m = arith::checked_pow(p, j);
      LiftState state;
      state.p = p;
      state.j = j;
      state.form = form;
      for (i64 x : *rep) state.coords.push_back(reduce(x, m));
      state.unit_index = find_unit_index(state.coords, p);
      result.liftable = true;
      result.branch = CriterionBranch::exact_representation;
      result.searched_modulus = m;
      result.target_residue = reduce(k, m);
      result.witness = verified(std::move(state));
      return result;
    }
  }

  const bool need_unit = n % 2 == 0;
  const unsigned j = p == 2 ? a + 2 : a + 1;
  const u64 m = arith::checked_pow(p, j);
  result.branch = p == 2                ? CriterionBranch::two_adic
                  : n % 2 == 0          ? CriterionBranch::odd_even
                                        : CriterionBranch::odd_odd;
  result.searched_modulus = m;
  result.target_residue = reduce(k, m);

  auto residue_set = residues::power_residues(n, m);
  auto acc = sumsets::iterated_sumset(residue_set, l);
  auto coords = acc.witness(result.target_residue, need_unit);
  if (!coords) {
    result.liftable = false;
    result.reachable = need_unit ? acc.unit_reachable_sorted() : acc.reachable_sorted();
    return result;
  }

  LiftState state;
  state.p = p;
  state.j = j;
  state.form = form;
  state.coords = std::move(*coords);
  state.unit_index = find_unit_index(state.coords, p);
  result.liftable = true;
  result.witness = verified(std::move(state));
  return result;
}

}  // namespace intersective::lifting
