/*
Copyright 2026 The Restpark Authors

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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "restpark/error.hpp"
#include "restpark/term.hpp"

namespace restpark {

inline constexpr std::uint64_t kDefaultPageSize = 100;
inline constexpr std::uint64_t kMaxPageSize = 10000;

class PageError : public Error {
 public:
  using Error::Error;
};

/// A 1-based page number and a page size in [1, kMaxPageSize].
class PageRequest {
 public:
  PageRequest() = default;
  PageRequest(std::uint64_t page, std::uint64_t page_size);

  std::uint64_t page() const { return page_; }
  std::uint64_t page_size() const { return page_size_; }
  bool is_default() const {
    return page_ == 1 && page_size_ == kDefaultPageSize;
  }

  friend bool operator==(const PageRequest&, const PageRequest&) = default;

 private:
  std::uint64_t page_ = 1;
  std::uint64_t page_size_ = kDefaultPageSize;
};

struct PageResult {
  std::vector<Triple> triples;
  std::uint64_t total_count = 0;
  std::uint64_t page = 1;
  std::uint64_t page_size = kDefaultPageSize;
  bool has_next = false;

  friend bool operator==(const PageResult&, const PageResult&) = default;
};

// page * page_size < total, without overflow.
bool page_has_next(std::uint64_t page, std::uint64_t page_size,
                   std::uint64_t total);

/// Immutable, deduplicated triple collection with SPO, POS and OSP indexes.
///
/// Every one of the eight bound/unbound pattern shapes is answered by a
/// prefix range on one index:
///
///   s, sp, spo, none -> SPO     p, po -> POS     o, so -> OSP
///
/// Results are always returned in SPO order. The store is safe to share
/// between threads once built.
class TripleStore {
 public:
  enum class Order : std::uint8_t { spo, pos, osp };

  TripleStore() = default;
  explicit TripleStore(std::vector<Triple> triples);

  std::size_t size() const { return spo_.size(); }
  bool empty() const { return spo_.empty(); }

  /// All triples in SPO order.
  std::span<const Triple> triples() const { return spo_; }

  std::vector<Triple> match(const TriplePattern& pattern) const;
  PageResult match_page(const TriplePattern& pattern,
                        const PageRequest& request) const;
  std::size_t count(const TriplePattern& pattern) const;

  /// Enumerates the store in the order of the given index.
  std::vector<Triple> enumerate(Order order) const;

 private:
  struct Range {
    Order order;
    std::size_t begin;
    std::size_t end;
  };
  Range lookup(const TriplePattern& pattern) const;
  // SPO positions of the range, sorted.
  std::vector<std::uint32_t> spo_positions(const Range& range) const;

  std::vector<Triple> spo_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> osp_;
};

}  // namespace restpark
