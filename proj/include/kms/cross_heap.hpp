#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "kms/counters.hpp"
#include "kms/top_list.hpp"
#include "kms/value.hpp"

namespace kms {

// The k largest values of the concatenation of two non-increasing lists,
// sorted non-increasing, truncated at k. O(k) per pairwise merge.
std::vector<Value> merge_top_k(std::span<const Value> a, std::span<const Value> b,
                               std::size_t k, OpCounters* counters = nullptr);

// Pairwise-folds more than two lists.
std::vector<Value> merge_top_k(std::initializer_list<std::span<const Value>> lists,
                               std::size_t k, OpCounters* counters = nullptr);

// Adds a to every entry; order preserved, overflow checked.
std::vector<Value> add_scalar_top_k(Value a, std::span<const Value> list);

// Rearranges pool so its first min(k, size) entries are the k largest values
// as a multiset (arbitrary order) and truncates. Worst-case linear via
// median-of-medians pivoting. The unsorted core behind select_top_k; the
// staircase combine uses it directly to stay O(k) per combine.
void top_k_unsorted(std::vector<Value>& pool, std::size_t k,
                    OpCounters* counters = nullptr);

// The k largest values of an arbitrary pool, sorted non-increasing.
// Selection itself is worst-case linear; only the <= k survivors get sorted.
TopList select_top_k(std::vector<Value> pool, std::size_t k,
                     OpCounters* counters = nullptr);

// The k largest pairwise sums of two non-increasing lists (all of them if
// |a|*|b| < k), sorted non-increasing. Max-priority-queue frontier expanding
// from (0,0), with a hash set over index pairs suppressing duplicates;
// O(k log k).
std::vector<Value> max_sum_cross_heap(std::span<const Value> a,
                                      std::span<const Value> b, std::size_t k,
                                      OpCounters* counters = nullptr);

}  // namespace kms
