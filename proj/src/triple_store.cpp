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

#include "restpark/triple_store.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

namespace restpark {

namespace {

using Order = TripleStore::Order;

const Term& component(const Triple& t, Order order, int i) {
  static constexpr int kSlots[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  switch (kSlots[static_cast<int>(order)][i]) {
    case 0: return t.subject();
    case 1: return t.predicate();
    default: return t.object();
  }
}

// Compares the first `key.size()` components of `t` (in index order) with
// `key`.
std::strong_ordering compare_prefix(const Triple& t, Order order,
                                    std::span<const Term* const> key) {
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (auto c = compare_terms(component(t, order, static_cast<int>(i)),
                               *key[i]);
        c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_in_order(const Triple& a, const Triple& b,
                                      Order order) {
  for (int i = 0; i < 3; ++i) {
    if (auto c = compare_terms(component(a, order, i), component(b, order, i));
        c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace

PageRequest::PageRequest(std::uint64_t page, std::uint64_t page_size)
    : page_(page), page_size_(page_size) {
  if (page < 1) throw PageError("page must be >= 1");
  if (page_size < 1 || page_size > kMaxPageSize) {
    throw PageError("page_size must be between 1 and " +
                    std::to_string(kMaxPageSize));
  }
}

bool page_has_next(std::uint64_t page, std::uint64_t page_size,
                   std::uint64_t total) {
  if (page > total / page_size) return false;
  return page * page_size < total;
}

TripleStore::TripleStore(std::vector<Triple> triples) : spo_(std::move(triples)) {
  std::sort(spo_.begin(), spo_.end());
  spo_.erase(std::unique(spo_.begin(), spo_.end()), spo_.end());
  if (spo_.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error("too many triples for one store");
  }

  pos_.resize(spo_.size());
  std::iota(pos_.begin(), pos_.end(), 0u);
  osp_ = pos_;
  const auto by = [this](Order order) {
    return [this, order](std::uint32_t a, std::uint32_t b) {
      return compare_in_order(spo_[a], spo_[b], order) < 0;
    };
  };
  std::sort(pos_.begin(), pos_.end(), by(Order::pos));
  std::sort(osp_.begin(), osp_.end(), by(Order::osp));
}

TripleStore::Range TripleStore::lookup(const TriplePattern& p) const {
  std::array<const Term*, 3> key{};
  std::size_t key_len = 0;
  Order order = Order::spo;

  if (p.subject) {
    if (p.predicate) {
      key = {&*p.subject, &*p.predicate, p.object ? &*p.object : nullptr};
      key_len = p.object ? 3 : 2;
    } else if (p.object) {
      order = Order::osp;
      key = {&*p.object, &*p.subject, nullptr};
      key_len = 2;
    } else {
      key = {&*p.subject, nullptr, nullptr};
      key_len = 1;
    }
  } else if (p.predicate) {
    order = Order::pos;
    key = {&*p.predicate, p.object ? &*p.object : nullptr, nullptr};
    key_len = p.object ? 2 : 1;
  } else if (p.object) {
    order = Order::osp;
    key = {&*p.object, nullptr, nullptr};
    key_len = 1;
  }

  const std::span<const Term* const> prefix(key.data(), key_len);
  if (order == Order::spo) {
    const auto [lo, hi] = std::equal_range(
        spo_.begin(), spo_.end(), prefix,
        [](const auto& a, const auto& b) {
          if constexpr (std::is_same_v<std::decay_t<decltype(a)>, Triple>) {
            return compare_prefix(a, Order::spo, b) < 0;
          } else {
            return compare_prefix(b, Order::spo, a) > 0;
          }
        });
    return {order, static_cast<std::size_t>(lo - spo_.begin()),
            static_cast<std::size_t>(hi - spo_.begin())};
  }

  const auto& index = order == Order::pos ? pos_ : osp_;
  const auto lo = std::partition_point(
      index.begin(), index.end(), [&](std::uint32_t i) {
        return compare_prefix(spo_[i], order, prefix) < 0;
      });
  const auto hi = std::partition_point(lo, index.end(), [&](std::uint32_t i) {
    return compare_prefix(spo_[i], order, prefix) == 0;
  });
  return {order, static_cast<std::size_t>(lo - index.begin()),
          static_cast<std::size_t>(hi - index.begin())};
}

std::vector<std::uint32_t> TripleStore::spo_positions(const Range& r) const {
  std::vector<std::uint32_t> out(r.end - r.begin);
  if (r.order == Order::spo) {
    std::iota(out.begin(), out.end(), static_cast<std::uint32_t>(r.begin));
    return out;
  }
  const auto& index = r.order == Order::pos ? pos_ : osp_;
  std::copy(index.begin() + static_cast<std::ptrdiff_t>(r.begin),
            index.begin() + static_cast<std::ptrdiff_t>(r.end), out.begin());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triple> TripleStore::match(const TriplePattern& pattern) const {
  const Range r = lookup(pattern);
  if (r.order == Order::spo) {
    return {spo_.begin() + static_cast<std::ptrdiff_t>(r.begin),
            spo_.begin() + static_cast<std::ptrdiff_t>(r.end)};
  }
  std::vector<Triple> out;
  out.reserve(r.end - r.begin);
  for (auto i : spo_positions(r)) out.push_back(spo_[i]);
  return out;
}

PageResult TripleStore::match_page(const TriplePattern& pattern,
                                   const PageRequest& request) const {
  const Range r = lookup(pattern);
  PageResult result;
  result.total_count = r.end - r.begin;
  result.page = request.page();
  result.page_size = request.page_size();
  result.has_next =
      page_has_next(request.page(), request.page_size(), result.total_count);

  const std::uint64_t skip_pages = request.page() - 1;
  if (skip_pages >= (result.total_count + request.page_size() - 1) /
                        request.page_size()) {
    return result;
  }
  const std::size_t first = skip_pages * request.page_size();
  const std::size_t last = std::min<std::uint64_t>(
      result.total_count, first + request.page_size());

  if (r.order == Order::spo) {
    result.triples.assign(
        spo_.begin() + static_cast<std::ptrdiff_t>(r.begin + first),
        spo_.begin() + static_cast<std::ptrdiff_t>(r.begin + last));
    return result;
  }
  const auto positions = spo_positions(r);
  result.triples.reserve(last - first);
  for (std::size_t i = first; i < last; ++i) {
    result.triples.push_back(spo_[positions[i]]);
  }
  return result;
}

std::size_t TripleStore::count(const TriplePattern& pattern) const {
  const Range r = lookup(pattern);
  return r.end - r.begin;
}

std::vector<Triple> TripleStore::enumerate(Order order) const {
  if (order == Order::spo) return spo_;
  const auto& index = order == Order::pos ? pos_ : osp_;
  std::vector<Triple> out;
  out.reserve(index.size());
  for (auto i : index) out.push_back(spo_[i]);
  return out;
}

}  // namespace restpark
