#include "kms/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace kms::oracle {

Value kadane(std::span<const Value> a) {
  if (a.empty()) throw std::invalid_argument("kadane: empty input");
  Value best = a[0];
  Value cur = a[0];
  for (std::size_t i = 1; i < a.size(); ++i) {
    cur = std::max(a[i], checked_add(cur, a[i]));
    best = std::max(best, cur);
  }
  return best;
}

TopList brute_top_k_subarrays(std::span<const Value> a, std::size_t k) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("brute_top_k_subarrays: empty input");
  const std::size_t total = n * (n + 1) / 2;
  if (k == 0 || k > total)
    throw std::invalid_argument("brute_top_k_subarrays: k out of range");

  std::vector<Value> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = checked_add(prefix[i], a[i]);

  std::vector<Value> sums;
  sums.reserve(total);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) sums.push_back(prefix[j] - prefix[i]);

  return TopList::top_k_of(std::move(sums), k);
}

TopList brute_xy_top_k(std::span<const Value> x, std::span<const Value> y,
                       std::size_t k) {
  if (x.empty() || y.empty())
    throw std::invalid_argument("brute_xy_top_k: empty input");
  if (k == 0 || k > x.size() * y.size())
    throw std::invalid_argument("brute_xy_top_k: k out of range");

  std::vector<Value> sums;
  sums.reserve(x.size() * y.size());
  for (Value xv : x)
    for (Value yv : y) sums.push_back(checked_add(xv, yv));

  return TopList::top_k_of(std::move(sums), k);
}

}  // namespace kms::oracle
