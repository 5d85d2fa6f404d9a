#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coskel {

// Two-constraint integer program: choose multiplicities μ_i in [0, cap_i]
// with Σ μ_i = total_count and Σ weight_i μ_i = total_weight, maximizing
// Σ value_i μ_i.  Instances here are tiny (a handful of classes, counts
// bounded by the number of factors), so the solver enumerates exhaustively.
struct KnapsackClass {
  std::string label;
  std::int64_t value = 0;
  int weight = 0;
  int cap = 0;
};

struct KnapsackInstance {
  std::vector<KnapsackClass> classes;
  int total_weight = 0; // the face dimension k
  int total_count = 0;  // the number of factors r
};

struct KnapsackSolution {
  bool feasible = false;
  std::int64_t value = 0;
  std::vector<int> multiplicities; // lexicographically least among optima
};

KnapsackSolution knapsack_bound(const KnapsackInstance& instance);

// Product of r simplices with n facets each, skeleton dimension k: class j
// has value sind_simplex_coskeleton(n, j), weight j, cap r.
KnapsackInstance simplex_product_instance(int n, int r, int k);

// Product of r_e even and r_o odd polygons: minimizing cost classes
// (even, λ=0) cost 2, (odd, λ=0) cost 1, (λ=1) cost 1, (λ=2) cost 0,
// expressed as a maximization with negated values.  The optimum μ* turns
// into the bound m - 1 - μ*; the m - r baseline is applied by the caller
// because the per-class values are size-independent.
KnapsackInstance polygon_product_cost_instance(int r_e, int r_o, int k);

// Closed forms.  All validate their ranges and throw input_error outside.
// Product of polygons, m total edges, r = r_e + r_o factors, 0 <= k <= 2r:
// lower bound m - 1 - μ* with μ* = r - ⌊k/2⌋ + max{0, r_e - ⌈k/2⌉}.
int polygon_mu_star(int r_e, int r_o, int k);
int edim_lower_polygon_products(int m, int r_e, int r_o, int k);
// Upper bound: k=0: m - r - r_e - 1; k=1: m - r - 1; 2 <= k < 2r: m - 2.
int edim_upper_polygon_products(int m, int r, int r_e, int k);

// Product of r simplices with n facets each, 0 <= k <= r(n-1):
//   2r + 2k - 1                 for k <= r*⌊(n-3)/2⌋
//   rn/2 + k - 1                for r*⌊(n-3)/2⌋ < k <= r*⌊(n-2)/2⌋
//   r(n-1) + α - 1 otherwise,   α = ⌊(k - r*⌊(n-2)/2⌋) / ⌊(n+1)/2⌋⌋
int edim_lower_simplex_products(int n, int r, int k);
// Upper bound min{2k + 2r - 1, rn - 1}.
int edim_upper_simplex_products(int n, int r, int k);

} // namespace coskel
