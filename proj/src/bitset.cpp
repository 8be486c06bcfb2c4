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

#include "sscover/bitset.hpp"

#include <algorithm>

namespace sscover {

BitSet::BitSet(std::initializer_list<std::size_t> indices) {
  for (std::size_t i : indices) insert(i);
}

BitSet::BitSet(std::span<const std::size_t> indices) {
  for (std::size_t i : indices) insert(i);
}

BitSet BitSet::Full(std::size_t n) {
  BitSet s;
  s.words_.assign((n + 63) / 64, ~std::uint64_t{0});
  if (n % 64 != 0) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

void BitSet::insert(std::size_t i) {
  const std::size_t w = i / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (i % 64);
}

void BitSet::erase(std::size_t i) {
  const std::size_t w = i / 64;
  if (w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (i % 64));
  Trim();
}

std::size_t BitSet::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t BitSet::bit_width() const {
  if (words_.empty()) return 0;
  return (words_.size() - 1) * 64 +
         static_cast<std::size_t>(std::bit_width(words_.back()));
}

bool BitSet::is_subset_of(const BitSet& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool BitSet::intersects(const BitSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

BitSet& BitSet::operator|=(const BitSet& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t w = 0; w < other.words_.size(); ++w) {
    words_[w] |= other.words_[w];
  }
  return *this;
}

BitSet& BitSet::operator&=(const BitSet& other) {
  if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  Trim();
  return *this;
}

BitSet& BitSet::operator-=(const BitSet& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) words_[w] &= ~other.words_[w];
  Trim();
  return *this;
}

std::vector<std::size_t> BitSet::to_vector() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t BitSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const BitSet& a, const BitSet& b) {
  if (a.words_.size() != b.words_.size()) {
    return a.words_.size() <=> b.words_.size();
  }
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
  }
  return std::strong_ordering::equal;
}

void BitSet::Trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

}  // namespace sscover
