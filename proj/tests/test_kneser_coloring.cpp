#include <doctest.h>

#include <vector>

#include "coskel/combinat.hpp"
#include "coskel/errors.hpp"
#include "coskel/kneser.hpp"
#include "coskel/polytopes.hpp"

using namespace coskel;

namespace {

KneserGraph subsets_graph(int n, int ell) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  std::vector<Face> sets;
  for_each_subset_of_size(all, ell,
                          [&](const std::vector<int>& pick) { sets.push_back(Face(pick)); });
  return kneser_graph(sets);
}

int chi(const KneserGraph& g, int budget = 128) {
  ColoringOptions opts;
  opts.budget = budget;
  return chromatic_number_exact(g, opts).chromatic_number;
}

} // namespace

TEST_CASE("kneser graph connects disjoint sets") {
  const KneserGraph g = kneser_graph({Face{0}, Face{1}, Face{0, 1}});
  REQUIRE(g.vertices.size() == 3);
  // canonical vertex order: {0}, {0,1}, {1}
  CHECK(g.vertices[1] == Face{0, 1});
  CHECK(g.edge_count == 1);
  CHECK(g.adjacency[0] == std::vector<int>{2});
  CHECK(g.adjacency[1].empty());
  CHECK(g.adjacency[2] == std::vector<int>{0});
}

TEST_CASE("duplicate sets collapse to one vertex") {
  const KneserGraph g = kneser_graph({Face{0}, Face{0}, Face{1}});
  CHECK(g.vertices.size() == 2);
  CHECK(g.edge_count == 1);
}

TEST_CASE("petersen graph needs three colors") {
  const KneserGraph g = subsets_graph(5, 2);
  CHECK(g.vertices.size() == 10);
  CHECK(g.edge_count == 15);
  CHECK(chi(g) == 3);
}

TEST_CASE("frozen chromatic numbers of subset kneser graphs") {
  CHECK(chi(subsets_graph(6, 2)) == 4);
  CHECK(chi(subsets_graph(7, 2)) == 5);
  CHECK(chi(subsets_graph(7, 3)) == 3);
  CHECK(chi(subsets_graph(8, 2)) == 6);
  CHECK(chi(subsets_graph(8, 3)) == 4);
  CHECK(chi(subsets_graph(8, 4)) == 2);
}

TEST_CASE("closed form matches on the full grid") {
  for (int n = 1; n <= 7; ++n)
    for (int ell = 1; ell <= n; ++ell)
      CHECK(chi(subsets_graph(n, ell)) == lovasz_kneser_chi(n, ell));
  CHECK_THROWS_AS(lovasz_kneser_chi(4, 0), input_error);
  CHECK_THROWS_AS(lovasz_kneser_chi(4, 5), input_error);
}

TEST_CASE("coloring witness is proper and tight") {
  const KneserGraph g = subsets_graph(6, 2);
  const ColoringResult res = chromatic_number_exact(g, ColoringOptions{128});
  REQUIRE(res.colors.size() == g.vertices.size());
  int used = 0;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    CHECK(res.colors[v] >= 0);
    CHECK(res.colors[v] < res.chromatic_number);
    used = std::max(used, res.colors[v] + 1);
    for (int u : g.adjacency[v])
      CHECK(res.colors[static_cast<std::size_t>(u)] != res.colors[v]);
  }
  CHECK(used == res.chromatic_number);
}

TEST_CASE("empty graph has chromatic number zero") {
  const KneserGraph g = kneser_graph({});
  CHECK(chromatic_number_exact(g).chromatic_number == 0);
}

TEST_CASE("coloring budget guard") {
  const KneserGraph g = subsets_graph(6, 1); // complete graph on 6 vertices
  CHECK(chi(g) == 6);
  ColoringOptions tight;
  tight.budget = 5;
  CHECK_THROWS_AS(chromatic_number_exact(g, tight), resource_error);
}

TEST_CASE("sarkaria detail on the pentagon vertex coskeleton") {
  const SimplicialComplex k = coskeleton(PolytopeType{PolygonType(5)}, 0);
  const SarkariaDetail detail = sarkaria_index_detail(k);
  CHECK(detail.ground == 5);
  CHECK(detail.nonface_count == 5);
  CHECK(detail.chromatic_number == 1); // triples in a 5-set pairwise intersect
  CHECK(detail.sind == 3);
}

TEST_CASE("full simplex has index m-1") {
  const SimplicialComplex full = SimplicialComplex::full_simplex(GroundSet(6));
  CHECK(sarkaria_index(full) == 5);
}

TEST_CASE("polygon closed form matches the explicit computation") {
  for (int m = 3; m <= 7; ++m)
    for (int k = 0; k <= 2; ++k)
      CHECK(sarkaria_index(coskeleton(PolytopeType{PolygonType(m)}, k)) ==
            sind_polygon_coskeleton(m, k));
  CHECK(sind_polygon_coskeleton(4, 0) == 1);
  CHECK(sind_polygon_coskeleton(5, 0) == 3);
  CHECK(sind_polygon_coskeleton(6, 0) == 3);
  CHECK(sind_polygon_coskeleton(7, 1) == 5);
  CHECK(sind_polygon_coskeleton(7, 2) == 6);
  CHECK_THROWS_AS(sind_polygon_coskeleton(2, 0), input_error);
  CHECK_THROWS_AS(sind_polygon_coskeleton(5, 3), input_error);
}

TEST_CASE("simplex closed form matches the explicit computation") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k <= n - 1; ++k)
      CHECK(sarkaria_index(coskeleton(PolytopeType{SimplexType(n)}, k),
                           SarkariaOptions{{}, {128}}) ==
            sind_simplex_coskeleton(n, k));
  CHECK(sind_simplex_coskeleton(5, 1) == 3);
  CHECK(sind_simplex_coskeleton(5, 2) == 3);
  CHECK(sind_simplex_coskeleton(5, 3) == 3);
  CHECK(sind_simplex_coskeleton(5, 4) == 4);
  CHECK_THROWS_AS(sind_simplex_coskeleton(5, 5), input_error);
  CHECK_THROWS_AS(sind_simplex_coskeleton(1, 0), input_error);
}

TEST_CASE("index is additive over joins") {
  const SimplicialComplex a = coskeleton(PolytopeType{PolygonType(4)}, 0);
  const SimplicialComplex b = coskeleton(PolytopeType{PolygonType(5)}, 0);
  CHECK(sarkaria_index(a.join(a)) == 3);
  CHECK(sarkaria_index(a.join(b)) == sarkaria_index(a) + sarkaria_index(b) + 1);
}

TEST_CASE("desargues certificate cotype") {
  const ProductType p({FactorType{SimplexType(2)}, FactorType{SimplexType(3)}});
  CHECK(sarkaria_index(p.cotype_complex({1, 0})) == 3);
  CHECK(sarkaria_index(p.cotype_complex({0, 1})) == 2);
}
