#include "kms/staircase_band.hpp"

#include <stdexcept>
#include <utility>

namespace kms {

namespace {

// Number of leading cells of the interval whose value satisfies pred
// (pred must hold on a prefix: values along an interval are non-increasing).
template <typename Eval, typename Pred>
std::size_t prefix_count(const Interval& iv, Eval&& eval, Pred&& pred) {
  std::size_t lo = iv.lo, hi = iv.hi;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (pred(eval(mid)))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo - iv.lo;
}

}  // namespace

StaircaseBand::StaircaseBand(ImplicitSumMatrix matrix, std::size_t p,
                             std::vector<Interval> row_intervals,
                             std::vector<Interval> col_intervals)
    : matrix_(matrix),
      p_(p),
      row_intervals_(std::move(row_intervals)),
      col_intervals_(std::move(col_intervals)) {
  if (p_ == 0) throw std::invalid_argument("StaircaseBand: p must be positive");
  if (p_ > matrix_.rows() || p_ > matrix_.cols())
    throw std::invalid_argument("StaircaseBand: p exceeds matrix dimensions");
  if (row_intervals_.size() != p_ || col_intervals_.size() != p_)
    throw std::invalid_argument("StaircaseBand: expected p intervals per family");
  for (std::size_t i = 0; i < p_; ++i) {
    const Interval& r = row_intervals_[i];
    if (r.lo > r.hi || r.hi > matrix_.cols())
      throw std::invalid_argument("StaircaseBand: row interval out of range");
    const Interval& c = col_intervals_[i];
    if (c.lo > c.hi || c.hi > matrix_.rows())
      throw std::invalid_argument("StaircaseBand: column interval out of range");
    if (!c.empty() && c.lo < p_)
      throw std::invalid_argument("StaircaseBand: column interval overlaps header rows");
  }
}

StaircaseBand StaircaseBand::empty(ImplicitSumMatrix matrix, std::size_t p) {
  std::vector<Interval> rows(p), cols(p);
  return StaircaseBand(matrix, p, std::move(rows), std::move(cols));
}

Value StaircaseBand::value_at(std::size_t interval_idx, std::size_t pos) const {
  if (interval_idx < p_) return matrix_.at(interval_idx, pos);
  return matrix_.at(pos, interval_idx - p_);
}

std::size_t band_cardinality(const StaircaseBand& band) {
  std::size_t total = 0;
  for (const Interval& iv : band.row_intervals()) total += iv.length();
  for (const Interval& iv : band.col_intervals()) total += iv.length();
  return total;
}

namespace {

// Applies fn(interval_index, interval) over the 2p intervals in band order.
template <typename Fn>
void for_each_interval(const StaircaseBand& band, Fn&& fn) {
  const std::size_t p = band.p();
  for (std::size_t i = 0; i < p; ++i) fn(i, band.row_intervals()[i]);
  for (std::size_t j = 0; j < p; ++j) fn(p + j, band.col_intervals()[j]);
}

}  // namespace

std::size_t band_count_ge(const StaircaseBand& band, Value x) {
  std::size_t total = 0;
  for_each_interval(band, [&](std::size_t idx, const Interval& iv) {
    total += prefix_count(
        iv, [&](std::size_t t) { return band.value_at(idx, t); },
        [&](Value v) { return v >= x; });
  });
  return total;
}

std::size_t band_count_gt(const StaircaseBand& band, Value x) {
  std::size_t total = 0;
  for_each_interval(band, [&](std::size_t idx, const Interval& iv) {
    total += prefix_count(
        iv, [&](std::size_t t) { return band.value_at(idx, t); },
        [&](Value v) { return v > x; });
  });
  return total;
}

void band_for_each_cell(const StaircaseBand& band,
                        const std::function<void(std::size_t, std::size_t, Value)>& fn) {
  const std::size_t p = band.p();
  for (std::size_t i = 0; i < p; ++i) {
    const Interval& iv = band.row_intervals()[i];
    for (std::size_t j = iv.lo; j < iv.hi; ++j) fn(i, j, band.matrix().at(i, j));
  }
  for (std::size_t j = 0; j < p; ++j) {
    const Interval& iv = band.col_intervals()[j];
    for (std::size_t i = iv.lo; i < iv.hi; ++i) fn(i, j, band.matrix().at(i, j));
  }
}

std::vector<Value> band_enumerate(const StaircaseBand& band) {
  std::vector<Value> out;
  out.reserve(band_cardinality(band));
  band_for_each_cell(band, [&](std::size_t, std::size_t, Value v) { out.push_back(v); });
  return out;
}

namespace {

StaircaseBand make_sub_band(const StaircaseBand& band,
                            const std::function<Interval(std::size_t, const Interval&)>& shrink) {
  const std::size_t p = band.p();
  std::vector<Interval> rows(p), cols(p);
  for (std::size_t i = 0; i < p; ++i) rows[i] = shrink(i, band.row_intervals()[i]);
  for (std::size_t j = 0; j < p; ++j) cols[j] = shrink(p + j, band.col_intervals()[j]);
  return StaircaseBand(band.matrix(), p, std::move(rows), std::move(cols));
}

}  // namespace

StaircaseBand band_restrict(const StaircaseBand& band,
                            std::optional<Value> low_exclusive,
                            std::optional<Value> high_inclusive) {
  if (low_exclusive && high_inclusive && *low_exclusive >= *high_inclusive)
    throw std::invalid_argument("band_restrict: low_exclusive must be < high_inclusive");
  return make_sub_band(band, [&](std::size_t idx, const Interval& iv) {
    auto eval = [&](std::size_t t) { return band.value_at(idx, t); };
    // Values along the interval are non-increasing: cells > high form a
    // prefix, cells > low a longer prefix; the slice between is the result.
    std::size_t begin = high_inclusive
                            ? prefix_count(iv, eval, [&](Value v) { return v > *high_inclusive; })
                            : 0;
    std::size_t end = low_exclusive
                          ? prefix_count(iv, eval, [&](Value v) { return v > *low_exclusive; })
                          : iv.length();
    return Interval{iv.lo + begin, iv.lo + end};
  });
}

StaircaseBand band_prefix_ge(const StaircaseBand& band, Value x) {
  return make_sub_band(band, [&](std::size_t idx, const Interval& iv) {
    std::size_t n = prefix_count(
        iv, [&](std::size_t t) { return band.value_at(idx, t); },
        [&](Value v) { return v >= x; });
    return Interval{iv.lo, iv.lo + n};
  });
}

StaircaseBand band_prefix_gt(const StaircaseBand& band, Value x) {
  return make_sub_band(band, [&](std::size_t idx, const Interval& iv) {
    std::size_t n = prefix_count(
        iv, [&](std::size_t t) { return band.value_at(idx, t); },
        [&](Value v) { return v > x; });
    return Interval{iv.lo, iv.lo + n};
  });
}

std::vector<Value> band_interval_medians(const StaircaseBand& band) {
  std::vector<Value> medians;
  medians.reserve(2 * band.p());
  for_each_interval(band, [&](std::size_t idx, const Interval& iv) {
    if (!iv.empty()) medians.push_back(band.value_at(idx, (iv.lo + iv.hi - 1) / 2));
  });
  return medians;
}

}  // namespace kms
