#pragma once

#include <span>

#include "kms/top_list.hpp"
#include "kms/value.hpp"

// Brute-force reference implementations. These use only elementary
// enumeration plus a full sort and deliberately share no code with the
// optimized algorithm paths; every optimized result is checked against
// them in the test suites.
namespace kms::oracle {

// Maximum non-empty-subarray sum by the standard running-maximum scan.
Value kadane(std::span<const Value> a);

// All n(n+1)/2 contiguous-subarray sums via prefix sums, sorted, truncated.
TopList brute_top_k_subarrays(std::span<const Value> a, std::size_t k);

// All |x|*|y| pairwise sums, sorted, truncated.
TopList brute_xy_top_k(std::span<const Value> x, std::span<const Value> y,
                       std::size_t k);

}  // namespace kms::oracle
