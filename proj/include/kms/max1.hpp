#pragma once

#include <cstddef>
#include <span>

#include "kms/counters.hpp"
#include "kms/value.hpp"

namespace kms {

// Result of the k = 1 divide-and-conquer. Witness indices are 0-based
// inclusive; ties resolve to the leftmost then longest subarray (smallest
// start, then largest end). Subarrays are non-empty throughout.
struct Max1Summary {
  Value max_left;   // best sum of a prefix (subarray anchored at index 0)
  Value max_right;  // best sum of a suffix (anchored at the last index)
  Value sum;        // total of the whole array
  Value max_sub;    // best sum over all contiguous subarrays
  std::size_t start = 0;  // witness subarray for max_sub
  std::size_t end = 0;

  friend bool operator==(const Max1Summary&, const Max1Summary&) = default;
};

// Divide-and-conquer with an O(1) combine: each call returns the quadruple
// (max_left, max_right, sum, max_sub) so the parent never rescans. O(n)
// total; counters (if given) record the n-1 combine steps.
Max1Summary maximum_subarray(std::span<const Value> a, OpCounters* counters = nullptr);

// Same result, computed as an OpenMP block reduction: per-block summaries
// in parallel, then a left fold with the identical combine. The combine is
// associative (each field is a function of the segment alone, including
// witnesses), so the result matches maximum_subarray exactly. Falls back to
// the serial scan when OpenMP is unavailable or the input is small.
Max1Summary maximum_subarray_parallel(std::span<const Value> a);

}  // namespace kms
