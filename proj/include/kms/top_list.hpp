#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kms/value.hpp"

namespace kms {

// A capacity-k list of candidate sums in non-increasing order; the currency
// of the combine phase. Shorter than k only when the candidate pool itself
// has fewer than k members.
class TopList {
public:
  TopList() = default;

  // Takes a vector already sorted non-increasing.
  static TopList from_sorted(std::vector<Value> v) {
    if (!is_non_increasing(v))
      throw std::invalid_argument("TopList::from_sorted: input not non-increasing");
    return TopList(std::move(v));
  }

  // Sorts and truncates an arbitrary pool to its k largest values.
  static TopList top_k_of(std::vector<Value> pool, std::size_t k) {
    std::sort(pool.begin(), pool.end(), std::greater<>());
    if (pool.size() > k) pool.resize(k);
    return TopList(std::move(pool));
  }

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  Value operator[](std::size_t i) const { return values_[i]; }
  Value front() const { return values_.front(); }
  Value back() const { return values_.back(); }

  const std::vector<Value>& values() const { return values_; }
  std::span<const Value> span() const { return values_; }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const TopList&, const TopList&) = default;

private:
  explicit TopList(std::vector<Value> v) : values_(std::move(v)) {}
  std::vector<Value> values_;
};

}  // namespace kms
