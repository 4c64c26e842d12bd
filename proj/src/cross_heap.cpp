#include "kms/cross_heap.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace kms {

std::vector<Value> merge_top_k(std::span<const Value> a, std::span<const Value> b,
                               std::size_t k, OpCounters* counters) {
  assert(is_non_increasing(a));
  assert(is_non_increasing(b));
  std::vector<Value> out;
  out.reserve(std::min(k, a.size() + b.size()));
  std::size_t i = 0, j = 0;
  std::uint64_t cmps = 0;
  while (out.size() < k && i < a.size() && j < b.size()) {
    ++cmps;
    if (a[i] >= b[j])
      out.push_back(a[i++]);
    else
      out.push_back(b[j++]);
  }
  while (out.size() < k && i < a.size()) out.push_back(a[i++]);
  while (out.size() < k && j < b.size()) out.push_back(b[j++]);
  if (counters) counters->comparisons += cmps;
  return out;
}

std::vector<Value> merge_top_k(std::initializer_list<std::span<const Value>> lists,
                               std::size_t k, OpCounters* counters) {
  if (lists.size() < 2)
    throw std::invalid_argument("merge_top_k: need at least two lists");
  auto it = lists.begin();
  std::vector<Value> acc = merge_top_k(*it, *(it + 1), k, counters);
  for (it += 2; it != lists.end(); ++it) acc = merge_top_k(acc, *it, k, counters);
  return acc;
}

std::vector<Value> add_scalar_top_k(Value a, std::span<const Value> list) {
  std::vector<Value> out;
  out.reserve(list.size());
  for (Value v : list) out.push_back(checked_add(a, v));
  return out;
}

namespace {

void insertion_sort_desc(std::vector<Value>& v, std::size_t lo, std::size_t hi,
                         std::uint64_t& cmps) {
  for (std::size_t i = lo + 1; i < hi; ++i) {
    Value x = v[i];
    std::size_t j = i;
    while (j > lo && (++cmps, v[j - 1] < x)) {
      v[j] = v[j - 1];
      --j;
    }
    v[j] = x;
  }
}

// Dutch-flag partition of v[lo..hi) into > pivot | == pivot | < pivot.
// Returns the boundaries (first ==, first <).
std::pair<std::size_t, std::size_t> partition3_desc(std::vector<Value>& v,
                                                    std::size_t lo, std::size_t hi,
                                                    Value pivot, std::uint64_t& cmps) {
  std::size_t a = lo, b = lo, c = hi;
  while (b < c) {
    ++cmps;
    if (v[b] > pivot) {
      std::swap(v[a], v[b]);
      ++a;
      ++b;
    } else {
      ++cmps;
      if (v[b] == pivot) {
        ++b;
      } else {
        --c;
        std::swap(v[b], v[c]);
      }
    }
  }
  return {a, b};
}

// Quickselect with median-of-medians pivots (groups of 5): worst-case
// linear. Afterwards every element left of the answer's final position is
// >= it and everything right is <= it, so the top-(rank+1) prefix is a
// correct multiset.
Value select_rank_desc(std::vector<Value>& v, std::size_t lo, std::size_t hi,
                       std::size_t rank, std::uint64_t& cmps) {
  for (;;) {
    std::size_t n = hi - lo;
    assert(rank < n);
    if (n <= 10) {
      insertion_sort_desc(v, lo, hi, cmps);
      return v[lo + rank];
    }
    // Median of each group of 5 gathered at the front, then the median of
    // those medians becomes the pivot.
    std::size_t m = lo;
    for (std::size_t g = lo; g < hi; g += 5) {
      std::size_t ge = std::min(g + 5, hi);
      insertion_sort_desc(v, g, ge, cmps);
      std::swap(v[m], v[g + (ge - g - 1) / 2]);
      ++m;
    }
    Value pivot = select_rank_desc(v, lo, m, (m - lo - 1) / 2, cmps);

    auto [eq, lt] = partition3_desc(v, lo, hi, pivot, cmps);
    if (lo + rank < eq) {
      hi = eq;
    } else if (lo + rank < lt) {
      return pivot;
    } else {
      rank -= lt - lo;
      lo = lt;
    }
  }
}

}  // namespace

void top_k_unsorted(std::vector<Value>& pool, std::size_t k, OpCounters* counters) {
  if (k == 0) throw std::invalid_argument("top_k_unsorted: k must be positive");
  if (pool.size() <= k) return;
  std::uint64_t cmps = 0;
  select_rank_desc(pool, 0, pool.size(), k - 1, cmps);
  pool.resize(k);
  if (counters) counters->comparisons += cmps;
}

TopList select_top_k(std::vector<Value> pool, std::size_t k, OpCounters* counters) {
  top_k_unsorted(pool, k, counters);
  std::sort(pool.begin(), pool.end(), std::greater<>());
  return TopList::from_sorted(std::move(pool));
}

namespace {

struct FrontierEntry {
  Value sum;
  std::uint32_t i, j;
};

struct FrontierLess {
  std::uint64_t* cmps;
  bool operator()(const FrontierEntry& x, const FrontierEntry& y) const {
    ++*cmps;
    return x.sum < y.sum;
  }
};

}  // namespace

std::vector<Value> max_sum_cross_heap(std::span<const Value> a,
                                      std::span<const Value> b, std::size_t k,
                                      OpCounters* counters) {
  if (k == 0) throw std::invalid_argument("max_sum_cross_heap: k must be positive");
  assert(is_non_increasing(a));
  assert(is_non_increasing(b));
  if (a.empty() || b.empty()) return {};
  if (a.size() >= UINT32_MAX || b.size() >= UINT32_MAX)
    throw std::invalid_argument("max_sum_cross_heap: input too large");

  const std::size_t limit = std::min(k, a.size() * b.size());
  std::vector<Value> out;
  out.reserve(limit);

  std::uint64_t cmps = 0, pops = 0;
  std::priority_queue<FrontierEntry, std::vector<FrontierEntry>, FrontierLess> queue{
      FrontierLess{&cmps}};
  std::unordered_set<std::uint64_t> seen;  // guards against duplicate (i, j)
  seen.reserve(2 * limit + 4);
  auto key = [](std::uint32_t i, std::uint32_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | j;
  };

  queue.push({checked_add(a[0], b[0]), 0, 0});
  seen.insert(key(0, 0));

  while (out.size() < limit) {
    FrontierEntry e = queue.top();
    queue.pop();
    ++pops;
    out.push_back(e.sum);
    if (e.i + 1 < a.size() && seen.insert(key(e.i + 1, e.j)).second)
      queue.push({checked_add(a[e.i + 1], b[e.j]), e.i + 1, e.j});
    if (e.j + 1 < b.size() && seen.insert(key(e.i, e.j + 1)).second)
      queue.push({checked_add(a[e.i], b[e.j + 1]), e.i, e.j + 1});
  }

  if (counters) {
    counters->comparisons += cmps;
    counters->heap_pops += pops;
  }
  return out;
}

}  // namespace kms
