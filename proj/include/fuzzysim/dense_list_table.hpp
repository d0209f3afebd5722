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

#include <cstdint>
#include <limits>
#include <type_traits>
#include <vector>

#include "fuzzysim/huge_page_allocator.hpp"

namespace fuzzysim {

// Many doubly linked lists whose nodes live in one dense rows × columns
// table. Node (row, column) belongs to at most one list at a time, and every
// list only ever holds nodes of a single row whose columns lie in one window
// [base, base + span). The table slot doubles as the "element reference" of
// the node: erasing by (row, column) is O(1) with no search.
//
// Links are stored relative to the window base, so they take 8, 16 or 32
// bits depending on the widest window; the per-list aux word takes 16 or 32
// bits depending on its largest value.
class DenseListTable {
 public:
  static constexpr std::int32_t kNil = -1;

 private:
  // Links hold column - base + 2: 0 marks a node outside every list, 1 is nil.
  static constexpr std::uint32_t kUnlinked = 0;
  static constexpr std::uint32_t kNilCode = 1;

  template <class L, class A>
  struct Storage {
    using Link = L;
    struct Node {
      Link prev = kUnlinked;
      Link next = kNilCode;
    };
    struct Head {
      Link front = kNilCode;
      Link back = kNilCode;
      A aux = 0;
    };
    HugePageVector<Node> nodes;
    HugePageVector<Head> heads;
  };

  enum class Width : std::uint8_t { k8, k16, k32 };

  template <class F>
  decltype(auto) visit(F&& f) {
    if (width_ == Width::k8) return f(storage8_);
    if (width_ == Width::k16) return f(storage16_);
    return f(storage32_);
  }
  template <class F>
  decltype(auto) visit(F&& f) const {
    if (width_ == Width::k8) return f(storage8_);
    if (width_ == Width::k16) return f(storage16_);
    return f(storage32_);
  }

  static std::int32_t unpack(std::uint32_t code, std::uint32_t base) {
    return code == kNilCode ? kNil : static_cast<std::int32_t>(code - 2 + base);
  }
  template <class Link>
  static Link pack(std::int32_t column, std::uint32_t base) {
    return static_cast<Link>(static_cast<std::uint32_t>(column) - base + 2);
  }

  std::size_t slot(std::size_t row, std::int32_t column) const {
    return row * columns_ + static_cast<std::size_t>(column);
  }

 public:
  DenseListTable() = default;
  DenseListTable(std::size_t rows, std::size_t columns, std::size_t lists,
                 std::size_t max_span, std::size_t max_aux)
      : columns_(columns) {
    constexpr std::size_t k16 = std::numeric_limits<std::uint16_t>::max();
    if (max_aux > k16)
      width_ = Width::k32;
    else if (max_span + 2 <= std::numeric_limits<std::uint8_t>::max())
      width_ = Width::k8;
    else if (max_span + 2 <= k16)
      width_ = Width::k16;
    else
      width_ = Width::k32;
    visit([&](auto& s) {
      s.nodes.resize(rows * columns);
      s.heads.resize(lists);
    });
  }

  bool linked(std::size_t row, std::int32_t column) const {
    return visit([&](const auto& s) { return s.nodes[slot(row, column)].prev != kUnlinked; });
  }

  bool empty(std::size_t list) const {
    return visit([&](const auto& s) { return s.heads[list].back == kNilCode; });
  }
  std::int32_t front(std::size_t list, std::uint32_t base) const {
    return visit([&](const auto& s) { return unpack(s.heads[list].front, base); });
  }
  std::int32_t back(std::size_t list, std::uint32_t base) const {
    return visit([&](const auto& s) { return unpack(s.heads[list].back, base); });
  }

  // One spare word per list for the owner, stored next to the list head.
  std::uint32_t aux(std::size_t list) const {
    return visit([&](const auto& s) { return static_cast<std::uint32_t>(s.heads[list].aux); });
  }
  void set_aux(std::size_t list, std::uint32_t value) {
    visit([&](auto& s) {
      s.heads[list].aux = static_cast<decltype(s.heads[list].aux)>(value);
    });
  }

  std::int32_t next(std::size_t row, std::uint32_t base, std::int32_t column) const {
    return visit([&](const auto& s) { return unpack(s.nodes[slot(row, column)].next, base); });
  }
  std::int32_t prev(std::size_t row, std::uint32_t base, std::int32_t column) const {
    return visit([&](const auto& s) { return unpack(s.nodes[slot(row, column)].prev, base); });
  }

  // Hints that (row, column) and the head of `list` will be touched soon.
  void prefetch(std::size_t list, std::size_t row, std::int32_t column) const {
    visit([&](const auto& s) {
      __builtin_prefetch(&s.nodes[slot(row, column)]);
      __builtin_prefetch(&s.heads[list]);
    });
  }

  void push_back(std::size_t list, std::size_t row, std::uint32_t base, std::int32_t column) {
    visit([&](auto& s) {
      using Link = typename std::remove_reference_t<decltype(s)>::Link;
      auto& n = s.nodes[slot(row, column)];
      auto& h = s.heads[list];
      n.prev = h.back;
      n.next = kNilCode;
      if (h.back == kNilCode)
        h.front = pack<Link>(column, base);
      else
        s.nodes[slot(row, unpack(h.back, base))].next = pack<Link>(column, base);
      h.back = pack<Link>(column, base);
    });
  }

  // Returns whether the erased node was the back of its list.
  bool erase(std::size_t list, std::size_t row, std::uint32_t base, std::int32_t column) {
    return visit([&](auto& s) {
      auto& n = s.nodes[slot(row, column)];
      auto& h = s.heads[list];
      if (n.prev == kNilCode)
        h.front = n.next;
      else
        s.nodes[slot(row, unpack(n.prev, base))].next = n.next;
      bool was_back = n.next == kNilCode;
      if (was_back)
        h.back = n.prev;
      else
        s.nodes[slot(row, unpack(n.next, base))].prev = n.prev;
      n.prev = kUnlinked;
      n.next = kNilCode;
      return was_back;
    });
  }

 private:
  std::size_t columns_ = 0;
  Width width_ = Width::k8;
  Storage<std::uint8_t, std::uint16_t> storage8_;
  Storage<std::uint16_t, std::uint16_t> storage16_;
  Storage<std::uint32_t, std::uint32_t> storage32_;
};

}  // namespace fuzzysim
