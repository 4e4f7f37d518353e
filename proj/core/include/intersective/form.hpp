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

#ifndef INTERSECTIVE_FORM_HPP
#define INTERSECTIVE_FORM_HPP

#include <cstdint>
#include <stdexcept>

namespace intersective {

/// The diagonal form x_1^n + ... + x_l^n - k.
struct DiagonalFormSpec {
  std::uint64_t n;  // exponent, >= 2
  std::uint64_t l;  // arity, >= 1
  std::int64_t k;   // target

  void validate() const {
    if (n < 2) throw std::domain_error("DiagonalFormSpec: exponent must be at least 2");
    if (l < 1) throw std::domain_error("DiagonalFormSpec: arity must be at least 1");
  }

  friend bool operator==(const DiagonalFormSpec&, const DiagonalFormSpec&) = default;
};

}  // namespace intersective

#endif
