#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace coskel {

// Floor division toward minus infinity; the piecewise bounds below rely on
// this for negative numerators (truncation would be off by one).
constexpr int floor_div(int a, int b) {
  const int q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

std::int64_t binomial(int n, int k);

// Calls fn once per size-k subset of the sorted element vector, in
// lexicographic order.
void for_each_subset_of_size(const std::vector<int>& elems, int k,
                             const std::function<void(const std::vector<int>&)>& fn);

// Calls fn once per vector c of the given length with entries in [0, cap]
// and Σc_i = total, in lexicographic order.  No calls when infeasible.
void for_each_composition(int length, int total, int cap,
                          const std::function<void(const std::vector<int>&)>& fn);

} // namespace coskel
