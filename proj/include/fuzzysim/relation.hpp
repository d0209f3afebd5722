// Copyright 2026 The fuzzysim Authors
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
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuzzysim/graph.hpp"

namespace fuzzysim {

using VertexPair = std::pair<VertexId, VertexId>;

// A crisp relation Z ⊆ V × V' as a dense row-major bit table.
class Relation {
 public:
  Relation() = default;
  Relation(std::size_t left_size, std::size_t right_size)
      : left_(left_size), right_(right_size), bits_((left_size * right_size + 63) / 64, 0) {}

  static Relation full(std::size_t left_size, std::size_t right_size) {
    Relation z(left_size, right_size);
    for (std::size_t x = 0; x < left_size; ++x)
      for (std::size_t y = 0; y < right_size; ++y) z.insert(x, y);
    return z;
  }

  static Relation identity(std::size_t size) {
    Relation z(size, size);
    for (std::size_t v = 0; v < size; ++v) z.insert(v, v);
    return z;
  }

  static Relation from_pairs(std::size_t left_size, std::size_t right_size,
                             std::span<const VertexPair> pairs) {
    Relation z(left_size, right_size);
    for (auto [x, y] : pairs) z.insert(x, y);
    return z;
  }

  std::size_t left_size() const { return left_; }
  std::size_t right_size() const { return right_; }

  bool contains(std::size_t x, std::size_t y) const {
    std::size_t i = x * right_ + y;
    return (bits_[i / 64] >> (i % 64)) & 1;
  }
  void set(std::size_t x, std::size_t y, bool value) {
    std::size_t i = x * right_ + y;
    std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value)
      bits_[i / 64] |= mask;
    else
      bits_[i / 64] &= ~mask;
  }
  void insert(std::size_t x, std::size_t y) { set(x, y, true); }
  void erase(std::size_t x, std::size_t y) { set(x, y, false); }

  std::size_t size() const {
    std::size_t n = 0;
    for (std::uint64_t w : bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const { return size() == 0; }

  // Member pairs in row-major index order.
  std::vector<VertexPair> pairs() const {
    std::vector<VertexPair> out;
    for (std::size_t x = 0; x < left_; ++x)
      for (std::size_t y = 0; y < right_; ++y)
        if (contains(x, y))
          out.emplace_back(static_cast<VertexId>(x), static_cast<VertexId>(y));
    return out;
  }

  bool is_subset_of(const Relation& other) const {
    if (left_ != other.left_ || right_ != other.right_) return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~other.bits_[i]) return false;
    return true;
  }

  // Walks 64 × 64 tiles so both bit matrices are read and written locally.
  Relation transposed() const {
    Relation t(right_, left_);
    constexpr std::size_t kTile = 64;
    for (std::size_t x0 = 0; x0 < left_; x0 += kTile)
      for (std::size_t y0 = 0; y0 < right_; y0 += kTile)
        for (std::size_t x = x0; x < std::min(x0 + kTile, left_); ++x)
          for (std::size_t y = y0; y < std::min(y0 + kTile, right_); ++y)
            if (contains(x, y)) t.insert(y, x);
    return t;
  }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Z1 ∘ Z2 = {<x,z> | ∃y (Z1(x,y) ∧ Z2(y,z))}.
inline Relation compose(const Relation& first, const Relation& second) {
  Relation out(first.left_size(), second.right_size());
  for (std::size_t x = 0; x < first.left_size(); ++x)
    for (std::size_t y = 0; y < first.right_size(); ++y) {
      if (!first.contains(x, y)) continue;
      for (std::size_t z = 0; z < second.right_size(); ++z)
        if (second.contains(y, z)) out.insert(x, z);
    }
  return out;
}

inline bool is_reflexive(const Relation& z) {
  if (z.left_size() != z.right_size()) return false;
  for (std::size_t v = 0; v < z.left_size(); ++v)
    if (!z.contains(v, v)) return false;
  return true;
}

inline bool is_transitive(const Relation& z) {
  return z.left_size() == z.right_size() && compose(z, z).is_subset_of(z);
}

inline bool is_preorder(const Relation& z) {
  return is_reflexive(z) && is_transitive(z);
}

// One "x x'" line per member pair, sorted by (name, name') bytewise.
inline std::string format_relation(const Relation& z,
                                   std::span<const std::string> left_names,
                                   std::span<const std::string> right_names) {
  std::vector<std::pair<std::string_view, std::string_view>> rows;
  for (auto [x, y] : z.pairs()) rows.emplace_back(left_names[x], right_names[y]);
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (auto [l, r] : rows) {
    out.append(l);
    out.push_back(' ');
    out.append(r);
    out.push_back('\n');
  }
  return out;
}

inline std::string format_relation(const Relation& z, const FuzzyGraph& left,
                                   const FuzzyGraph& right) {
  return format_relation(z, left.vertex_names(), right.vertex_names());
}

}  // namespace fuzzysim
