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

#ifndef INTERSECTIVE_BITSET_HPP
#define INTERSECTIVE_BITSET_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace intersective {

/// Dense bit-indexed subset of Z/m. The residue kernels iterate sumsets over
/// these, so the representation favors word-level operations.
class DenseBitset {
 public:
  DenseBitset() = default;

  explicit DenseBitset(std::uint64_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {
    if (nbits == 0) throw std::domain_error("DenseBitset: size must be positive");
    if (nbits > (std::uint64_t{1} << 31))
      throw std::domain_error("DenseBitset: modulus too large for a dense set");
  }

  std::uint64_t size() const { return nbits_; }

  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  bool test(std::uint64_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool all() const { return count() == nbits_; }
  bool any() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return true;
    }
    return false;
  }

  void or_with(const DenseBitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  }

  /// dst |= src cyclically rotated left by shift (bit i of src lands on
  /// (i + shift) mod size()). src must have the same size.
  void or_rotated(const DenseBitset& src, std::uint64_t shift) {
    shift %= nbits_;
    if (shift == 0) {
      or_with(src);
      return;
    }
    or_shifted_left(src, shift);
    or_shifted_right(src, nbits_ - shift);
    mask_tail();
  }

  std::vector<std::uint64_t> to_sorted_vector() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < nbits_; ++i) {
      if (test(i)) out.push_back(i);
    }
    return out;
  }

  friend bool operator==(const DenseBitset&, const DenseBitset&) = default;

 private:
  // dst |= (src << s), discarding bits at positions >= nbits_.
  void or_shifted_left(const DenseBitset& src, std::uint64_t s) {
    const std::uint64_t word_off = s >> 6;
    const unsigned bit_off = static_cast<unsigned>(s & 63);
    const std::size_t n = words_.size();
    for (std::size_t i = 0; i + word_off < n; ++i) {
      std::uint64_t v = src.words_[i];
      if (v == 0) continue;
      words_[i + word_off] |= v << bit_off;
      if (bit_off != 0 && i + word_off + 1 < n) {
        words_[i + word_off + 1] |= v >> (64 - bit_off);
      }
    }
  }

  // dst |= (src >> s), i.e. bit i of src lands on i - s.
  void or_shifted_right(const DenseBitset& src, std::uint64_t s) {
    const std::uint64_t word_off = s >> 6;
    const unsigned bit_off = static_cast<unsigned>(s & 63);
    const std::size_t n = words_.size();
    for (std::size_t i = 0; i + word_off < n; ++i) {
      std::uint64_t v = src.words_[i + word_off] >> bit_off;
      if (bit_off != 0 && i + word_off + 1 < n) {
        v |= src.words_[i + word_off + 1] << (64 - bit_off);
      }
      words_[i] |= v;
    }
  }

  void mask_tail() {
    const unsigned tail = static_cast<unsigned>(nbits_ & 63);
    if (tail != 0) words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  std::uint64_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace intersective

#endif
