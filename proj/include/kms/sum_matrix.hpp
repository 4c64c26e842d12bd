#pragma once

#include <cassert>
#include <cstddef>
#include <span>

#include "kms/counters.hpp"
#include "kms/value.hpp"

namespace kms {

// The conceptual matrix M[i][j] = rows[i] + cols[j] over two non-increasing
// arrays. Never materialized: cells are evaluated on demand, and each
// evaluation is tallied into the (optional, caller-owned) counter so the
// sublinearity tests can observe how many cells an algorithm touched.
//
// Holds views only; the caller keeps the arrays alive. rows/cols must be
// sorted non-increasing (checked in debug builds only -- a full scan would
// dominate the sublinear algorithms running on top of this).
class ImplicitSumMatrix {
public:
  ImplicitSumMatrix(std::span<const Value> rows, std::span<const Value> cols,
                    OpCounters* counters = nullptr)
      : rows_(rows), cols_(cols), counters_(counters) {
    assert(is_non_increasing(rows_));
    assert(is_non_increasing(cols_));
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_.size(); }

  Value at(std::size_t i, std::size_t j) const {
    assert(i < rows() && j < cols());
    if (counters_) ++counters_->cell_evals;
    return checked_add(rows_[i], cols_[j]);
  }

  OpCounters* counters() const { return counters_; }

private:
  std::span<const Value> rows_;
  std::span<const Value> cols_;
  OpCounters* counters_;
};

}  // namespace kms
