#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace kms {

// Sum values are exact 64-bit integers. Every addition on the algorithm
// paths goes through checked_add so an overflow surfaces as an error
// instead of wrapping.
using Value = std::int64_t;

class overflow_error : public std::overflow_error {
public:
  explicit overflow_error(const std::string& what) : std::overflow_error(what) {}
};

inline Value checked_add(Value a, Value b) {
  Value out;
  if (__builtin_add_overflow(a, b, &out))
    throw overflow_error("value sum overflows 64-bit range");
  return out;
}

inline bool is_non_increasing(std::span<const Value> v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i]) return false;
  return true;
}

// Largest magnitude allowed per element so that any sum of up to n of them
// stays in range. Used by input validation at API/CLI boundaries.
inline Value max_safe_magnitude(std::size_t n) {
  if (n == 0) return INT64_MAX;
  return INT64_MAX / static_cast<Value>(n);
}

}  // namespace kms
