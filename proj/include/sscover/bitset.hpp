// Copyright 2026 The sscover Authors
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

#ifndef SSCOVER_BITSET_HPP_
#define SSCOVER_BITSET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace sscover {

// Unbounded set of non-negative indices stored as 64-bit words. Trailing zero
// words are always trimmed, so equal sets have identical storage and the
// ordering is the numeric order of the bit patterns.
class BitSet {
 public:
  BitSet() = default;
  BitSet(std::initializer_list<std::size_t> indices);
  explicit BitSet(std::span<const std::size_t> indices);

  // {0, ..., n-1}.
  static BitSet Full(std::size_t n);

  bool contains(std::size_t i) const {
    const std::size_t w = i / 64;
    return w < words_.size() && ((words_[w] >> (i % 64)) & 1U) != 0;
  }
  void insert(std::size_t i);
  void erase(std::size_t i);

  bool empty() const { return words_.empty(); }
  std::size_t count() const;
  // One past the largest member; 0 for the empty set.
  std::size_t bit_width() const;

  bool is_subset_of(const BitSet& other) const;
  bool intersects(const BitSet& other) const;

  BitSet& operator|=(const BitSet& other);
  BitSet& operator&=(const BitSet& other);
  // Set difference.
  BitSet& operator-=(const BitSet& other);
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }

  // Members in ascending order.
  std::vector<std::size_t> to_vector() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  std::size_t hash() const;

  friend bool operator==(const BitSet& a, const BitSet& b) = default;
  friend std::strong_ordering operator<=>(const BitSet& a, const BitSet& b);

 private:
  void Trim();

  std::vector<std::uint64_t> words_;
};

// The revealed state of an item, or any other subset of the ground set.
using ElementSubset = BitSet;
using ItemSet = BitSet;

struct BitSetHash {
  std::size_t operator()(const BitSet& s) const { return s.hash(); }
};

}  // namespace sscover

#endif  // SSCOVER_BITSET_HPP_
