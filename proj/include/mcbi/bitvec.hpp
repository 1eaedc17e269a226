// Copyright 2026 The mcbi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace mcbi {

/// Fixed-length bit vector packed into 64-bit words. Bits past size() are
/// always zero, so word-wise comparison and hashing are exact.
class BitVec {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + word_bits - 1) / word_bits, 0) {}

  std::size_t size() const noexcept { return nbits_; }

  bool test(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
  void set(std::size_t i) { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
  void reset(std::size_t i) { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }
  void flip(std::size_t i) { words_[i / word_bits] ^= word_type{1} << (i % word_bits); }

  /// Grows (never shrinks) the vector; new bits are zero.
  void resize(std::size_t nbits) {
    if (nbits <= nbits_) return;
    nbits_ = nbits;
    words_.resize((nbits + word_bits - 1) / word_bits, 0);
  }

  BitVec& operator^=(const BitVec& other) {
    check_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  BitVec& operator&=(const BitVec& other) {
    check_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }
  BitVec& operator|=(const BitVec& other) {
    check_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  /// XOR where the shorter operand is implicitly zero-extended.
  void xor_grow(const BitVec& other) {
    resize(other.nbits_);
    for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] ^= other.words_[w];
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (word_type w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
  }
  bool none() const noexcept { return !any(); }

  /// True when every set bit of *this is also set in other.
  bool is_subset_of(const BitVec& other) const {
    check_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  std::size_t find_first() const noexcept { return find_next_from(0); }

  std::size_t find_next(std::size_t i) const noexcept { return find_next_from(i + 1); }

  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = find_first(); i != npos; i = find_next(i)) out.push_back(i);
    return out;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) = default;

  /// Orders equal-length vectors by their sorted lists of set positions:
  /// at the first differing position, the vector holding the bit is smaller.
  friend bool lex_less(const BitVec& a, const BitVec& b) {
    const std::size_t nw = std::min(a.words_.size(), b.words_.size());
    for (std::size_t w = 0; w < nw; ++w) {
      const word_type diff = a.words_[w] ^ b.words_[w];
      if (diff != 0) {
        const word_type low = diff & (~diff + 1);
        return (a.words_[w] & low) != 0;
      }
    }
    return a.words_.size() > b.words_.size();
  }

  std::size_t hash() const noexcept {
    std::size_t h = nbits_;
    for (word_type w : words_) h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  const std::vector<word_type>& words() const noexcept { return words_; }

 private:
  void check_size(const BitVec& other) const {
    if (other.nbits_ != nbits_) throw std::invalid_argument("BitVec: size mismatch");
  }

  std::size_t find_next_from(std::size_t i) const noexcept {
    if (i >= nbits_) return npos;
    std::size_t w = i / word_bits;
    word_type cur = words_[w] & (~word_type{0} << (i % word_bits));
    while (true) {
      if (cur != 0) return w * word_bits + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w == words_.size()) return npos;
      cur = words_[w];
    }
  }

  std::size_t nbits_ = 0;
  std::vector<word_type> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const noexcept { return v.hash(); }
};

}  // namespace mcbi
