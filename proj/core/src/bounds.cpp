#include "coskel/bounds.hpp"

#include <algorithm>
#include <cassert>

#include "coskel/combinat.hpp"
#include "coskel/errors.hpp"
#include "coskel/kneser.hpp"

namespace coskel {

KnapsackSolution knapsack_bound(const KnapsackInstance& instance) {
  const int nc = static_cast<int>(instance.classes.size());
  KnapsackSolution best;
  std::vector<int> mu(static_cast<std::size_t>(nc), 0);
  // exhaustive, ascending multiplicity per class: the first optimum found is
  // lexicographically least, so strict improvement is the only update rule
  auto rec = [&](auto&& self, int pos, int count_left, int weight_left,
                 std::int64_t value) -> void {
    if (pos == nc) {
      if (count_left == 0 && weight_left == 0 &&
          (!best.feasible || value > best.value)) {
        best.feasible = true;
        best.value = value;
        best.multiplicities = mu;
      }
      return;
    }
    const KnapsackClass& c = instance.classes[static_cast<std::size_t>(pos)];
    for (int q = 0; q <= std::min(c.cap, count_left); ++q) {
      const int w = weight_left - q * c.weight;
      if (w < 0 && c.weight > 0) break;
      mu[static_cast<std::size_t>(pos)] = q;
      self(self, pos + 1, count_left - q, w, value + q * c.value);
    }
    mu[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, instance.total_count, instance.total_weight, 0);
  return best;
}

KnapsackInstance simplex_product_instance(int n, int r, int k) {
  if (n < 2) throw input_error("simplex needs at least 2 facets");
  if (r < 1) throw input_error("product needs at least one factor");
  if (k < 0 || k > r * (n - 1))
    throw input_error("skeleton dimension out of range for the product");
  KnapsackInstance inst;
  inst.total_weight = k;
  inst.total_count = r;
  for (int j = 0; j <= n - 1; ++j) {
    inst.classes.push_back(KnapsackClass{
        "lambda=" + std::to_string(j), sind_simplex_coskeleton(n, j), j, r});
  }
  return inst;
}

KnapsackInstance polygon_product_cost_instance(int r_e, int r_o, int k) {
  if (r_e < 0 || r_o < 0 || r_e + r_o < 1)
    throw input_error("polygon product needs at least one factor");
  const int r = r_e + r_o;
  if (k < 0 || k > 2 * r)
    throw input_error("skeleton dimension out of range for the product");
  KnapsackInstance inst;
  inst.total_weight = k;
  inst.total_count = r;
  inst.classes = {
      KnapsackClass{"even,lambda=0", -2, 0, r_e},
      KnapsackClass{"odd,lambda=0", -1, 0, r_o},
      KnapsackClass{"lambda=1", -1, 1, r},
      KnapsackClass{"lambda=2", 0, 2, r},
  };
  return inst;
}

int polygon_mu_star(int r_e, int r_o, int k) {
  const int r = r_e + r_o;
  if (r_e < 0 || r_o < 0 || r < 1)
    throw input_error("polygon product needs at least one factor");
  if (k < 0 || k > 2 * r)
    throw input_error("skeleton dimension out of range for the product");
  return r - k / 2 + std::max(0, r_e - (k + 1) / 2);
}

int edim_lower_polygon_products(int m, int r_e, int r_o, int k) {
  const int r = r_e + r_o;
  if (m < 4 * r_e + 3 * r_o)
    throw input_error("total edge count below the minimum for the factor mix");
  return m - 1 - polygon_mu_star(r_e, r_o, k); // validates r and k
}

int edim_upper_polygon_products(int m, int r, int r_e, int k) {
  if (r < 1 || r_e < 0 || r_e > r)
    throw input_error("polygon product needs 0 <= r_e <= r, r >= 1");
  if (m < 4 * r_e + 3 * (r - r_e))
    throw input_error("total edge count below the minimum for the factor mix");
  if (k < 0 || k >= 2 * r)
    throw input_error("upper bound needs a proper skeleton, 0 <= k < 2r");
  if (k == 0) return m - r - r_e - 1;
  if (k == 1) return m - r - 1;
  return m - 2;
}

int edim_lower_simplex_products(int n, int r, int k) {
  if (n < 2) throw input_error("simplex needs at least 2 facets");
  if (r < 1) throw input_error("product needs at least one factor");
  if (k < 0 || k > r * (n - 1))
    throw input_error("skeleton dimension out of range for the product");
  const int low = r * floor_div(n - 3, 2);
  const int mid = r * floor_div(n - 2, 2);
  if (k <= low) return 2 * r + 2 * k - 1;
  if (k <= mid) {
    assert(r * n % 2 == 0); // this branch only arises for even n
    return r * n / 2 + k - 1;
  }
  const int alpha = floor_div(k - mid, floor_div(n + 1, 2));
  return r * (n - 1) + alpha - 1;
}

int edim_upper_simplex_products(int n, int r, int k) {
  if (n < 2) throw input_error("simplex needs at least 2 facets");
  if (r < 1) throw input_error("product needs at least one factor");
  if (k < 0 || k > r * (n - 1))
    throw input_error("skeleton dimension out of range for the product");
  return std::min(2 * k + 2 * r - 1, r * n - 1);
}

} // namespace coskel
