#pragma once

#include <cstdint>

namespace kms {

// Operation counters used by the scaling tests and the bench harness.
// Counters are call-local: the caller owns one and passes a pointer down;
// a null pointer disables counting. The serial algorithm paths report
// into it, the OpenMP variants do not take one.
struct OpCounters {
  std::uint64_t comparisons = 0;  // value-value comparisons in merge/select/heap
  std::uint64_t cell_evals = 0;   // implicit-matrix cell evaluations
  std::uint64_t combines = 0;     // divide-and-conquer combine steps
  std::uint64_t heap_pops = 0;    // pops from the crossing-sum priority queue

  std::uint64_t total() const { return comparisons + cell_evals; }

  OpCounters& operator+=(const OpCounters& o) {
    comparisons += o.comparisons;
    cell_evals += o.cell_evals;
    combines += o.combines;
    heap_pops += o.heap_pops;
    return *this;
  }
};

}  // namespace kms
