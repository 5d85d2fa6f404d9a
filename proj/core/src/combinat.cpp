#include "coskel/combinat.hpp"

#include <cassert>

namespace coskel {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i; // exact: product of i consecutive integers
  }
  return out;
}

void for_each_subset_of_size(const std::vector<int>& elems, int k,
                             const std::function<void(const std::vector<int>&)>& fn) {
  const int n = static_cast<int>(elems.size());
  if (k < 0 || k > n) return;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int start, int chosen) {
    if (chosen == k) { fn(pick); return; }
    for (int i = start; i <= n - (k - chosen); ++i) {
      pick[static_cast<std::size_t>(chosen)] = elems[static_cast<std::size_t>(i)];
      rec(i + 1, chosen + 1);
    }
  };
  rec(0, 0);
}

void for_each_composition(int length, int total, int cap,
                          const std::function<void(const std::vector<int>&)>& fn) {
  assert(length >= 0 && cap >= 0);
  if (total < 0 || total > length * cap) return;
  std::vector<int> c(static_cast<std::size_t>(length));
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == length) {
      if (remaining == 0) fn(c);
      return;
    }
    const int left = length - pos - 1;
    for (int v = 0; v <= cap; ++v) {
      const int rest = remaining - v;
      if (rest < 0) break;
      if (rest > left * cap) continue;
      c[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, rest);
    }
    return;
  };
  rec(0, total);
}

} // namespace coskel
