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

#ifndef INTERSECTIVE_ARITH_HPP
#define INTERSECTIVE_ARITH_HPP

#include <cstdint>
#include <vector>

namespace intersective::arith {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// All moduli and intermediate values are bounded by 2^63 - 1. Operations
/// that would exceed the ceiling throw std::overflow_error instead of
/// wrapping.
inline constexpr u64 kValueCeiling = (u64{1} << 63) - 1;

u64 add_mod(u64 a, u64 b, u64 m);

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

/// base^exp mod m, with the usual conventions: mod_pow(x, 0, m) = 1 mod m.
/// Negative bases are reduced into [0, m) first. m = 0 is a domain error.
u64 mod_pow(i64 base, u64 exp, u64 m);

/// Modular inverse modulo a prime p.
u64 inverse_mod_prime(u64 a, u64 p);

/// a * b, throwing std::overflow_error past kValueCeiling.
u64 checked_mul(u64 a, u64 b);

/// p^e with the same overflow policy.
u64 checked_pow(u64 p, unsigned e);

/// Deterministic Miller-Rabin, valid for all inputs below 2^64.
bool is_prime(u64 n);

struct PrimePower {
  u64 prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Factorization into prime powers, primes strictly increasing.
/// The empty list represents 1.
struct PrimePowerFactorization {
  u64 value = 1;
  std::vector<PrimePower> factors;

  /// Multiplicity of p in value (0 if p does not divide it).
  unsigned exponent_of(u64 p) const;
};

/// Trial division below 10^6, Pollard rho beyond. value = 0 or value above
/// the ceiling is a domain error.
PrimePowerFactorization factorize(u64 value);

/// Exponent of the largest power of p dividing value. value = 0 is a
/// domain error (the valuation would be infinite).
unsigned valuation(u64 p, i64 value);

/// Valuation of i! at p, by Legendre's formula.
u64 factorial_valuation(u64 p, u64 i);

/// Exact valuation of C(n, i) at p, computed from factorial valuations.
/// Independent of binomial_valuation's closed form.
u64 exact_binomial_valuation(u64 n, u64 i, u64 p);

/// Valuation of the binomial coefficient C(n, i) at p. When p^a || n with
/// a >= 1 and p^b || i with b <= a, returns the closed form a - b; outside
/// that hypothesis the exact valuation is computed directly.
///
/// Caution: the closed form is not always the exact valuation. Smallest
/// counterexample: n = 12, i = 6, p = 2 gives a - b = 1 while
/// C(12,6) = 924 = 2^2 * 231. The inequality v_p(C(n,i)) >= a - b does
/// hold throughout the hypothesis, and is all the lifting code relies on.
unsigned binomial_valuation(u64 n, u64 i, u64 p);

}  // namespace intersective::arith

#endif
