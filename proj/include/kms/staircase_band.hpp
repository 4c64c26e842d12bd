#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "kms/sum_matrix.hpp"
#include "kms/value.hpp"

namespace kms {

// Half-open index interval [lo, hi).
struct Interval {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t length() const { return hi - lo; }
  bool empty() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Implicit O(p)-size description of a subset of matrix cells:
//   row_intervals[i] covers cells (i, j) for j in the interval, i < p;
//   col_intervals[j] covers cells (i, j) for i in the interval, j < p,
//     with lo >= p, so the two families are disjoint by construction and
//     cardinality is a plain sum of interval lengths.
// Empty intervals are kept (lo == hi) so a band has fixed shape p.
// Values along any interval are non-increasing, which is what every
// counting operation below exploits.
class StaircaseBand {
public:
  StaircaseBand(ImplicitSumMatrix matrix, std::size_t p,
                std::vector<Interval> row_intervals,
                std::vector<Interval> col_intervals);

  // Band of fixed shape p with all intervals empty.
  static StaircaseBand empty(ImplicitSumMatrix matrix, std::size_t p);

  const ImplicitSumMatrix& matrix() const { return matrix_; }
  std::size_t p() const { return p_; }
  const std::vector<Interval>& row_intervals() const { return row_intervals_; }
  const std::vector<Interval>& col_intervals() const { return col_intervals_; }

  // Value of the t-th cell of interval `idx` (rows first, then columns).
  Value value_at(std::size_t interval_idx, std::size_t pos) const;

private:
  ImplicitSumMatrix matrix_;
  std::size_t p_;
  std::vector<Interval> row_intervals_;  // p entries
  std::vector<Interval> col_intervals_;  // p entries
};

// Exact number of cells (sum of interval lengths; no cell evaluations).
std::size_t band_cardinality(const StaircaseBand& band);

// |{cells c : value(c) >= x}| and the strict variant, via one binary search
// per interval -- O(p log n) cell evaluations, never full enumeration.
std::size_t band_count_ge(const StaircaseBand& band, Value x);
std::size_t band_count_gt(const StaircaseBand& band, Value x);

// All cell values, in band order (row intervals by index, then column
// intervals), in time linear in the cardinality.
std::vector<Value> band_enumerate(const StaircaseBand& band);

// Visits (row, col, value) for every cell; the primitive behind
// band_enumerate, exposed so tests can check cell-level disjointness.
void band_for_each_cell(const StaircaseBand& band,
                        const std::function<void(std::size_t, std::size_t, Value)>& fn);

// Sub-band of exactly the cells with low_exclusive < value <= high_inclusive
// (absent bound = unbounded). Two binary searches per interval.
StaircaseBand band_restrict(const StaircaseBand& band,
                            std::optional<Value> low_exclusive,
                            std::optional<Value> high_inclusive);

// Prefix sub-bands: cells >= x / cells > x. Each interval shrinks to a
// prefix of itself, so results stay anchored at the input's interval starts.
StaircaseBand band_prefix_ge(const StaircaseBand& band, Value x);
StaircaseBand band_prefix_gt(const StaircaseBand& band, Value x);

// One value per non-empty interval: the cell at index floor((lo+hi-1)/2).
std::vector<Value> band_interval_medians(const StaircaseBand& band);

}  // namespace kms
