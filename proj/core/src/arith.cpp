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

#include "intersective/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace intersective::arith {

namespace {

constexpr u64 kTrialDivisionLimit = 1'000'000;

u64 pollard_rho(u64 n) {
  // Brent's variant; n must be composite, odd, and > kTrialDivisionLimit^...
  // free of factors below the trial division limit.
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 saved_x = x;
    int power = 1, lam = 1;
    while (d == 1) {
      if (lam == power) {
        saved_x = x;
        power *= 2;
        lam = 0;
      }
      x = add_mod(mul_mod(x, x, n), c, n);
      ++lam;
      u64 diff = x > saved_x ? x - saved_x : saved_x - x;
      if (diff == 0) break;  // cycle without factor; retry with new c
      d = std::gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

}  // namespace

u64 add_mod(u64 a, u64 b, u64 m) {
  a %= m;
  b %= m;
  u64 s = a + b;  // both < m <= 2^63, no wrap
  return s >= m ? s - m : s;
}

u64 mod_pow(i64 base, u64 exp, u64 m) {
  if (m == 0) throw std::domain_error("mod_pow: modulus must be positive");
  if (m > kValueCeiling) throw std::overflow_error("mod_pow: modulus exceeds ceiling");
  u64 b = static_cast<u64>(((base % static_cast<i64>(m)) + static_cast<i64>(m))) % m;
  u64 result = 1 % m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, b, m);
    b = mul_mod(b, b, m);
    exp >>= 1;
  }
  return result;
}

u64 inverse_mod_prime(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse_mod_prime: zero is not invertible");
  return mod_pow(static_cast<i64>(a), p - 2, p);
}

u64 checked_mul(u64 a, u64 b) {
  u128 prod = u128{a} * b;
  if (prod > kValueCeiling) throw std::overflow_error("checked_mul: product exceeds 2^63 - 1");
  return static_cast<u64>(prod);
}

u64 checked_pow(u64 p, unsigned e) {
  u64 result = 1;
  for (unsigned i = 0; i < e; ++i) result = checked_mul(result, p);
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These bases are a known deterministic set for n < 2^64.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = 1;
    {
      u64 base = a % n, e = d;
      while (e > 0) {
        if (e & 1) x = mul_mod(x, base, n);
        base = mul_mod(base, base, n);
        e >>= 1;
      }
    }
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i + 1 < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

unsigned PrimePowerFactorization::exponent_of(u64 p) const {
  for (const auto& f : factors) {
    if (f.prime == p) return f.exponent;
  }
  return 0;
}

PrimePowerFactorization factorize(u64 value) {
  if (value == 0) throw std::domain_error("factorize: value must be positive");
  if (value > kValueCeiling) throw std::domain_error("factorize: value exceeds 2^63 - 1");
  PrimePowerFactorization result;
  result.value = value;

  u64 rest = value;
  auto push = [&](u64 p, unsigned e) { result.factors.push_back({p, e}); };

  for (u64 p = 2; p <= kTrialDivisionLimit && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    push(p, e);
  }
  if (rest > 1) {
    // Whatever survives trial division is either prime or a product of
    // primes above the limit; Pollard rho splits the latter.
    std::vector<u64> stack{rest};
    std::vector<u64> large_primes;
    while (!stack.empty()) {
      u64 v = stack.back();
      stack.pop_back();
      if (is_prime(v)) {
        large_primes.push_back(v);
        continue;
      }
      u64 d = pollard_rho(v);
      stack.push_back(d);
      stack.push_back(v / d);
    }
    std::sort(large_primes.begin(), large_primes.end());
    for (std::size_t i = 0; i < large_primes.size();) {
      std::size_t j = i;
      while (j < large_primes.size() && large_primes[j] == large_primes[i]) ++j;
      push(large_primes[i], static_cast<unsigned>(j - i));
      i = j;
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return result;
}

unsigned valuation(u64 p, i64 value) {
  if (value == 0) throw std::domain_error("valuation: undefined at zero");
  if (p < 2) throw std::domain_error("valuation: p must be at least 2");
  u64 v = value < 0 ? static_cast<u64>(-(value + 1)) + 1 : static_cast<u64>(value);
  unsigned e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

u64 factorial_valuation(u64 p, u64 i) {
  u64 total = 0;
  for (u64 q = p; q <= i; ) {
    total += i / q;
    if (q > i / p) break;  // q * p would overflow past i anyway
    q *= p;
  }
  return total;
}

u64 exact_binomial_valuation(u64 n, u64 i, u64 p) {
  return factorial_valuation(p, n) - factorial_valuation(p, i) - factorial_valuation(p, n - i);
}

unsigned binomial_valuation(u64 n, u64 i, u64 p) {
  if (n == 0) throw std::domain_error("binomial_valuation: n must be positive");
  if (i < 1 || i > n) throw std::domain_error("binomial_valuation: i out of [1, n]");
  unsigned a = valuation(p, static_cast<i64>(n));
  unsigned b = valuation(p, static_cast<i64>(i));
  if (a >= 1 && b <= a) return a - b;
  return static_cast<unsigned>(exact_binomial_valuation(n, i, p));
}

}  // namespace intersective::arith
