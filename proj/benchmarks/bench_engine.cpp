#include <benchmark/benchmark.h>

#include <vector>

#include "coskel/combinat.hpp"
#include "coskel/engine.hpp"
#include "coskel/kneser.hpp"
#include "coskel/obstructions.hpp"
#include "coskel/polytopes.hpp"

namespace {

coskel::KneserGraph subsets_graph(int n, int ell) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  std::vector<coskel::Face> sets;
  coskel::for_each_subset_of_size(all, ell, [&](const std::vector<int>& pick) {
    sets.push_back(coskel::Face(pick));
  });
  return coskel::kneser_graph(sets);
}

void BM_MinimalNonFaces(benchmark::State& state) {
  const coskel::ProductType p({coskel::FactorType{coskel::PolygonType(6)},
                               coskel::FactorType{coskel::PolygonType(6)}});
  const coskel::SimplicialComplex c = coskel::coskeleton(coskel::PolytopeType{p}, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(c.minimal_non_faces());
}
BENCHMARK(BM_MinimalNonFaces);

void BM_MinimalNonFacesTransversal(benchmark::State& state) {
  const coskel::ProductType p({coskel::FactorType{coskel::PolygonType(6)},
                               coskel::FactorType{coskel::PolygonType(6)}});
  const coskel::SimplicialComplex c = coskel::coskeleton(coskel::PolytopeType{p}, 0);
  coskel::NonFaceOptions opts;
  opts.exhaustive_ground_limit = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(c.minimal_non_faces(opts));
}
BENCHMARK(BM_MinimalNonFacesTransversal);

void BM_ExactColoring(benchmark::State& state) {
  const coskel::KneserGraph g =
      subsets_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  coskel::ColoringOptions opts;
  opts.budget = 128;
  for (auto _ : state)
    benchmark::DoNotOptimize(coskel::chromatic_number_exact(g, opts));
}
BENCHMARK(BM_ExactColoring)->Args({7, 3})->Args({8, 3})->Args({8, 4});

void BM_WedgeVertexEnumeration(benchmark::State& state) {
  const coskel::WedgeProductType w(5, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(w.faces_of_dim(0));
}
BENCHMARK(BM_WedgeVertexEnumeration);

void BM_ClosedFormSweep(benchmark::State& state) {
  for (auto _ : state) {
    int acc = 0;
    for (int r_e = 0; r_e <= 4; ++r_e)
      for (int r_o = (r_e == 0 ? 1 : 0); r_o <= 4; ++r_o)
        for (int k = 0; k < 2 * (r_e + r_o); ++k)
          acc += *coskel::obstruct_polygon_products(r_e, r_o, k, 2).threshold_e;
    for (int n = 2; n <= 6; ++n)
      for (int r = 1; r <= 4; ++r)
        for (int k = 0; k < r * (n - 1); ++k)
          acc += *coskel::obstruct_simplex_products(n, r, k, 2).threshold_e;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ClosedFormSweep);

void BM_FullQueryAllPaths(benchmark::State& state) {
  coskel::Query q;
  q.spec = "product:(polygon:5,polygon:5)";
  q.target = coskel::Target::skeleton;
  q.k = 0;
  q.e = 2;
  for (auto _ : state)
    benchmark::DoNotOptimize(coskel::run_query(q));
}
BENCHMARK(BM_FullQueryAllPaths);

} // namespace

BENCHMARK_MAIN();
