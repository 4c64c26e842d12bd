#include "kms/max1.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kms {

namespace {

// Recursion node: the four values plus the witness indices needed to keep
// tie-breaking exact. left_end: inclusive end of the best prefix;
// right_start: inclusive start of the best suffix.
struct Node {
  Value max_left, max_right, sum, max_sub;
  std::size_t left_end, right_start, sub_start, sub_end;
};

Node singleton(Value v, std::size_t i) { return {v, v, v, v, i, i, i, i}; }

// l covers the segment immediately left of r. Ties: prefixes prefer the
// longer candidate, suffixes the earlier start, max_sub the lexicographic
// (start asc, end desc) winner.
Node combine(const Node& l, const Node& r) {
  Node out{};
  out.sum = checked_add(l.sum, r.sum);

  Value spanning_left = checked_add(l.sum, r.max_left);
  if (spanning_left >= l.max_left) {
    out.max_left = spanning_left;
    out.left_end = r.left_end;
  } else {
    out.max_left = l.max_left;
    out.left_end = l.left_end;
  }

  Value spanning_right = checked_add(r.sum, l.max_right);
  if (spanning_right >= r.max_right) {
    out.max_right = spanning_right;
    out.right_start = l.right_start;
  } else {
    out.max_right = r.max_right;
    out.right_start = r.right_start;
  }

  Value cross = checked_add(l.max_right, r.max_left);
  out.max_sub = l.max_sub;
  out.sub_start = l.sub_start;
  out.sub_end = l.sub_end;
  auto consider = [&](Value v, std::size_t s, std::size_t e) {
    if (v > out.max_sub ||
        (v == out.max_sub && (s < out.sub_start || (s == out.sub_start && e > out.sub_end)))) {
      out.max_sub = v;
      out.sub_start = s;
      out.sub_end = e;
    }
  };
  consider(cross, l.right_start, r.left_end);
  consider(r.max_sub, r.sub_start, r.sub_end);
  return out;
}

Node solve(std::span<const Value> a, std::size_t lo, std::size_t hi,
           std::uint64_t& combines) {
  if (hi - lo == 1) return singleton(a[lo], lo);
  std::size_t mid = lo + (hi - lo + 1) / 2;  // split at floor((low+high)/2) inclusive
  Node l = solve(a, lo, mid, combines);
  Node r = solve(a, mid, hi, combines);
  ++combines;
  return combine(l, r);
}

Node fold_block(std::span<const Value> a, std::size_t lo, std::size_t hi) {
  Node acc = singleton(a[lo], lo);
  for (std::size_t i = lo + 1; i < hi; ++i) acc = combine(acc, singleton(a[i], i));
  return acc;
}

Max1Summary to_summary(const Node& n) {
  return {n.max_left, n.max_right, n.sum, n.max_sub, n.sub_start, n.sub_end};
}

}  // namespace

Max1Summary maximum_subarray(std::span<const Value> a, OpCounters* counters) {
  if (a.empty()) throw std::invalid_argument("maximum_subarray: empty input");
  std::uint64_t combines = 0;
  Node root = solve(a, 0, a.size(), combines);
  if (counters) counters->combines += combines;
  return to_summary(root);
}

Max1Summary maximum_subarray_parallel(std::span<const Value> a) {
  if (a.empty()) throw std::invalid_argument("maximum_subarray: empty input");
#ifdef _OPENMP
  constexpr std::size_t kMinBlock = 1 << 14;
  std::size_t max_blocks = static_cast<std::size_t>(omp_get_max_threads()) * 4;
  std::size_t nblocks = std::min(max_blocks, (a.size() + kMinBlock - 1) / kMinBlock);
  if (nblocks > 1) {
    std::size_t block = (a.size() + nblocks - 1) / nblocks;
    std::vector<Node> parts(nblocks);
#pragma omp parallel for schedule(static)
    for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
      std::size_t lo = static_cast<std::size_t>(b) * block;
      std::size_t hi = std::min(lo + block, a.size());
      parts[static_cast<std::size_t>(b)] = fold_block(a, lo, hi);
    }
    Node acc = parts[0];
    for (std::size_t b = 1; b < nblocks; ++b) acc = combine(acc, parts[b]);
    return to_summary(acc);
  }
#endif
  return to_summary(fold_block(a, 0, a.size()));
}

}  // namespace kms
