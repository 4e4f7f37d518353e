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

#include "intersective/oracle.hpp"

#include <chrono>
#include <set>
#include <stdexcept>

namespace intersective::oracle {

namespace {

using Words = std::vector<std::uint64_t>;

u64 reduce(i64 k, u64 m) {
  i64 r = k % static_cast<i64>(m);
  if (r < 0) r += static_cast<i64>(m);
  return static_cast<u64>(r);
}

// Deliberately not the library's mod_pow: plain repeated multiplication,
// so the oracle's power tables are derived through a separate code path.
u64 naive_pow_mod(u64 x, u64 n, u64 m) {
  u64 r = 0 % m;  // m == 1 gives 0
  if (m > 1) {
    r = 1;
    for (u64 i = 0; i < n; ++i) {
      r = static_cast<u64>((static_cast<unsigned __int128>(r) * x) % m);
    }
  }
  return r;
}

std::size_t word_count(u64 bits) { return static_cast<std::size_t>((bits + 63) / 64); }

bool test_bit(const Words& w, u64 i) { return (w[i / 64] >> (i % 64)) & 1; }

void set_bit(Words& w, u64 i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }

bool all_bits(const Words& w, u64 m) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] != ~std::uint64_t{0}) return false;
  }
  const u64 tail = m % 64;
  const std::uint64_t mask = tail ? (std::uint64_t{1} << tail) - 1 : ~std::uint64_t{0};
  return (w.back() & mask) == mask;
}

// dst[0, count) |= src bits [offset, offset + count).
void or_window(Words& dst, const Words& src, u64 offset, u64 count) {
  const u64 q = offset / 64;
  const unsigned b = static_cast<unsigned>(offset % 64);
  const std::size_t words = word_count(count);
  for (std::size_t i = 0; i < words; ++i) {
    std::uint64_t w = src[q + i] >> b;
    if (b != 0 && q + i + 1 < src.size()) w |= src[q + i + 1] << (64 - b);
    if (i + 1 == words && count % 64 != 0) w &= (std::uint64_t{1} << (count % 64)) - 1;
    dst[i] |= w;
  }
}

// dst |= (src rotated left by s), both over m bits.
void or_rotated(Words& dst, const Words& src, u64 s, u64 m, Words& scratch) {
  if (s == 0) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
    return;
  }
  // Shift into a wide scratch buffer, then fold the overflow [m, m+s) back
  // onto [0, s).
  scratch.assign(word_count(m + s) + 1, 0);
  const u64 q = s / 64;
  const unsigned b = static_cast<unsigned>(s % 64);
  for (std::size_t i = 0; i < src.size(); ++i) {
    scratch[i + q] |= b ? src[i] << b : src[i];
    if (b != 0) scratch[i + q + 1] |= src[i] >> (64 - b);
  }
  or_window(dst, scratch, 0, m);
  or_window(dst, scratch, m, s);
}

// Exact l-fold sums of n-th powers modulo m, as a bit per residue class.
// Because 0 is always an n-th power the levels are nested, so a full level
// short-circuits the rest.
Words reachable_classes(u64 n, u64 l, u64 m, bool* full) {
  const std::size_t W = word_count(m);
  Words powers(W, 0);
  for (u64 x = 0; x < m; ++x) set_bit(powers, naive_pow_mod(x, n, m));

  std::vector<u64> shifts;
  for (u64 r = 0; r < m; ++r) {
    if (test_bit(powers, r)) shifts.push_back(r);
  }

  Words cur = powers;
  Words scratch;
  for (u64 t = 2; t <= l && !all_bits(cur, m); ++t) {
    Words next(W, 0);
    for (u64 s : shifts) or_rotated(next, cur, s, m, scratch);
    cur = std::move(next);
  }
  if (full != nullptr) *full = all_bits(cur, m);
  return cur;
}

// Second, independently coded enumeration used to confirm a failure: a
// set-valued dynamic program over addend count. Only ever run on moduli the
// bit kernel reports unsolvable, where the sets involved are small.
bool solvable_by_set_dp(u64 n, u64 l, u64 m, u64 target) {
  std::set<u64> powers;
  for (u64 x = 0; x < m; ++x) {
    u64 p = 0;
    if (m > 1) {
      p = 1;
      for (u64 i = 0; i < n; ++i) p = p * x % m;
    }
    powers.insert(p);
  }
  std::set<u64> sums = {0};
  for (u64 t = 0; t < l; ++t) {
    std::set<u64> next;
    for (u64 s : sums) {
      for (u64 p : powers) next.insert((s + p) % m);
    }
    sums = std::move(next);
  }
  return sums.count(target) > 0;
}

u64 confirm_failure(u64 n, u64 l, u64 m, u64 target) {
  if (solvable_by_set_dp(n, l, m, target)) {
    throw std::logic_error("oracle: bit kernel and set enumeration disagree");
  }
  return m;
}

}  // namespace

ExhaustiveOracle::ExhaustiveOracle(u64 n, u64 l, u64 bound) : n_(n), l_(l), bound_(bound) {
  if (n < 2) throw std::domain_error("oracle: exponent must be at least 2");
  if (l < 1) throw std::domain_error("oracle: arity must be at least 1");
  if (bound < 1) throw std::domain_error("oracle: bound must be at least 1");

  reachable_.resize(bound + 1);
  full_.assign(bound + 1, false);
  for (u64 m = 1; m <= bound; ++m) {
    bool full = false;
    reachable_[m] = reachable_classes(n, l, m, &full);
    full_[m] = full;
  }

  // CRT self-check: on composite m with a coprime split m = a * b the table
  // must factor through the tables at a and b.
  for (u64 m = 2; m <= std::min<u64>(bound, 1000); ++m) {
    u64 p = 2;
    while (m % p != 0) ++p;
    u64 a = 1;
    u64 rest = m;
    while (rest % p == 0) {
      a *= p;
      rest /= p;
    }
    if (rest == 1) continue;  // prime power, nothing to split
    const u64 b = rest;
    for (u64 r = 0; r < m; ++r) {
      const bool joint = test_bit(reachable_[m], r);
      const bool split = test_bit(reachable_[a], r % a) && test_bit(reachable_[b], r % b);
      if (joint != split) {
        throw std::logic_error("oracle: reachable tables are not CRT-consistent");
      }
    }
  }
}

bool ExhaustiveOracle::reachable(u64 m, u64 residue) const {
  if (m < 1 || m > bound_) throw std::domain_error("oracle: modulus out of range");
  return test_bit(reachable_[m], residue % m);
}

std::optional<u64> ExhaustiveOracle::first_failure(i64 k) const {
  for (u64 m = 1; m <= bound_; ++m) {
    if (full_[m]) continue;
    if (!test_bit(reachable_[m], reduce(k, m))) {
      return confirm_failure(n_, l_, m, reduce(k, m));
    }
  }
  return std::nullopt;
}

OracleResult exhaustive_check(const DiagonalFormSpec& form, u64 bound,
                              std::optional<double> budget_seconds) {
  form.validate();
  if (bound < 1) throw std::domain_error("exhaustive_check: bound must be at least 1");

  const auto start = std::chrono::steady_clock::now();
  OracleResult result;
  result.bound = bound;
  for (u64 m = 1; m <= bound; ++m) {
    if (budget_seconds) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      if (elapsed.count() > *budget_seconds) return result;  // partial
    }
    bool full = false;
    Words classes = reachable_classes(form.n, form.l, m, &full);
    if (!full && !test_bit(classes, reduce(form.k, m))) {
      result.failing_modulus = confirm_failure(form.n, form.l, m, reduce(form.k, m));
      result.checked_up_to = m;
      result.complete = true;  // the least failure decides the question
      return result;
    }
    result.checked_up_to = m;
  }
  result.complete = true;
  return result;
}

void to_json(nlohmann::json& j, const OracleResult& r) {
  j = nlohmann::json{{"bound", r.bound},
                     {"checked_up_to", r.checked_up_to},
                     {"complete", r.complete}};
  if (r.failing_modulus) {
    j["failing_modulus"] = *r.failing_modulus;
  } else {
    j["failing_modulus"] = nullptr;
  }
}

void from_json(const nlohmann::json& j, OracleResult& r) {
  j.at("bound").get_to(r.bound);
  j.at("checked_up_to").get_to(r.checked_up_to);
  j.at("complete").get_to(r.complete);
  if (j.contains("failing_modulus") && !j.at("failing_modulus").is_null()) {
    r.failing_modulus = j.at("failing_modulus").get<u64>();
  } else {
    r.failing_modulus = std::nullopt;
  }
}

void to_json(nlohmann::json& j, const AgreementReport& r) {
  j = nlohmann::json{{"n", r.n},     {"l", r.l},         {"k", r.k},
                     {"bound", r.bound}, {"agree", r.agree}, {"detail", r.detail}};
  j["decision"] = r.decision;
  j["oracle"] = r.oracle;
}

AgreementReport compare(const DiagonalFormSpec& form, u64 bound) {
  AgreementReport report;
  report.n = form.n;
  report.l = form.l;
  report.k = form.k;
  report.bound = bound;
  report.decision = characterize::decide(form.n, form.k, form.l);
  report.oracle = exhaustive_check(form, bound);

  if (report.decision.intersective) {
    if (report.oracle.failing_modulus) {
      report.agree = false;
      report.detail = "decide claims intersective but the oracle found an unsolvable modulus";
    } else {
      report.agree = true;
      report.detail = report.oracle.complete ? "both sides find every modulus solvable"
                                             : "no counterexample up to the verified bound";
    }
  } else {
    const u64 claimed = report.decision.failure ? report.decision.failure->modulus : 0;
    if (report.oracle.failing_modulus) {
      report.agree = true;
      report.detail = "both sides report an unsolvable modulus";
    } else if (claimed != 0 && claimed > report.oracle.checked_up_to) {
      report.agree = true;
      report.detail = "claimed failing modulus lies beyond the oracle bound";
    } else {
      report.agree = false;
      report.detail = "decide claims a failing modulus the oracle finds solvable";
    }
  }
  return report;
}

}  // namespace intersective::oracle
