#include <doctest.h>

#include <algorithm>
#include <vector>

#include "coskel/combinat.hpp"
#include "coskel/errors.hpp"
#include "coskel/polytopes.hpp"

using namespace coskel;

TEST_CASE("polygon faces") {
  const PolygonType p(4);
  CHECK(p.dim() == 2);
  CHECK(p.num_facets() == 4);
  CHECK(p.faces_of_dim(-1) == std::vector<Face>{Face{0, 1, 2, 3}});
  CHECK(p.faces_of_dim(0) ==
        std::vector<Face>{Face{0, 1}, Face{0, 3}, Face{1, 2}, Face{2, 3}});
  CHECK(p.faces_of_dim(1) ==
        std::vector<Face>{Face{0}, Face{1}, Face{2}, Face{3}});
  CHECK(p.faces_of_dim(2) == std::vector<Face>{Face{}});
  CHECK(p.faces_of_dim(3).empty());
  CHECK(PolygonType(5).odd());
  CHECK_FALSE(p.odd());
  CHECK_THROWS_AS(PolygonType(2), input_error);
}

TEST_CASE("simplex faces are the small subsets") {
  const SimplexType s(4);
  CHECK(s.dim() == 3);
  for (int k = -1; k <= 3; ++k) {
    const auto faces = s.faces_of_dim(k);
    CHECK(static_cast<std::int64_t>(faces.size()) == binomial(4, k + 1));
    for (const Face& f : faces) CHECK(f.size() == 4 - k - 1);
  }
  CHECK_THROWS_AS(SimplexType(1), input_error);
}

TEST_CASE("product dimensions and face types") {
  const ProductType p({FactorType{PolygonType(4)}, FactorType{PolygonType(5)}});
  CHECK(p.dim() == 4);
  CHECK(p.num_facets() == 9);
  CHECK(p.face_types(2) ==
        std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(p.face_types(0) == std::vector<std::vector<int>>{{0, 0}});
  CHECK(p.face_types(4) == std::vector<std::vector<int>>{{2, 2}});
  CHECK_THROWS_AS(p.face_types(5), input_error);
  CHECK_THROWS_AS(p.face_types(-1), input_error);
  CHECK_THROWS_AS(p.cotype_complex({0}), input_error);
  CHECK_THROWS_AS(p.cotype_complex({0, 3}), input_error);
  CHECK_THROWS_AS(ProductType({}), input_error);
}

TEST_CASE("product faces are blockwise unions") {
  const ProductType p({FactorType{PolygonType(3)}, FactorType{PolygonType(3)}});
  const auto vertices = p.faces_of_dim(0);
  CHECK(vertices.size() == 9);
  for (const Face& v : vertices) {
    CHECK(v.size() == 4); // two edges of each triangle
    CHECK(v.intersected_with(Face{0, 1, 2}).size() == 2);
  }
  CHECK(p.faces_of_dim(-1) == std::vector<Face>{Face::full(6)});
  CHECK(p.faces_of_dim(4) == std::vector<Face>{Face{}});
  // edge count of the 4-polytope: 9 vertical + 9 horizontal
  CHECK(p.faces_of_dim(1).size() == 18);
}

TEST_CASE("coskeleton extremes") {
  const PolytopeType p{PolygonType(5)};
  CHECK(coskeleton(p, -1) == SimplicialComplex::empty_complex(GroundSet(5)));
  CHECK(coskeleton(p, 2) == SimplicialComplex::full_simplex(GroundSet(5)));
  const SimplicialComplex boundary = coskeleton(p, 1);
  CHECK(boundary.facets().size() == 5);
  CHECK(boundary.dim() == 3);
  CHECK_THROWS_AS(coskeleton(p, 3), input_error);
  CHECK_THROWS_AS(coskeleton(p, -2), input_error);
}

TEST_CASE("simplex coskeleton is a skeleton of the facet simplex") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k < n - 1; ++k) {
      const SimplicialComplex c = coskeleton(PolytopeType{SimplexType(n)}, k);
      CHECK(c == SimplicialComplex::full_simplex(GroundSet(n)).skeleton(k));
    }
}

TEST_CASE("product coskeleton agrees with the cotype union") {
  const ProductType p({FactorType{PolygonType(4)}, FactorType{SimplexType(3)}});
  for (int k = -1; k <= p.dim(); ++k)
    CHECK(coskeleton(PolytopeType{p}, k) == coskeleton_by_types(p, k));
}

TEST_CASE("cotype complex is the join of factor coskeleta") {
  const ProductType p({FactorType{PolygonType(4)}, FactorType{PolygonType(5)}});
  const SimplicialComplex direct = p.cotype_complex({0, 1});
  const SimplicialComplex left = coskeleton(PolytopeType{PolygonType(4)}, 0);
  const SimplicialComplex right = coskeleton(PolytopeType{PolygonType(5)}, 1);
  CHECK(direct == left.join(right));
}

TEST_CASE("wedge sizes") {
  const WedgeProductType w(4, 3);
  CHECK(w.dim() == 10);
  CHECK(w.num_facets() == 12);
  CHECK(w.facet_index(1, 2) == 5);
  CHECK(w.facet_ground().label(5) == "(1,2)");
  CHECK_THROWS_AS(WedgeProductType(2, 2), input_error);
  CHECK_THROWS_AS(WedgeProductType(3, 1), input_error);
}

TEST_CASE("wedge face lattice matches the exhaustive oracle") {
  for (const auto& [r, n] : {std::pair{3, 2}, {4, 2}, {3, 3}}) {
    const WedgeProductType w(r, n);
    for (int k = -1; k <= w.dim(); ++k)
      CHECK(w.faces_of_dim(k) == w.faces_of_dim_oracle(k));
  }
}

TEST_CASE("wedge vertex counts") {
  auto count = [](int r, int n) {
    return static_cast<std::int64_t>(WedgeProductType(r, n).faces_of_dim(0).size());
  };
  CHECK(count(3, 2) == 6);  // 3 * 2^1
  CHECK(count(4, 2) == 16); // 4 * 2^2
  CHECK(count(4, 3) == 36); // 4 * 3^2
  CHECK(count(5, 3) == 135);
}

TEST_CASE("wedge special faces") {
  const WedgeProductType w(4, 2);
  CHECK_THROWS_AS(w.special_faces(1), input_error);
  const auto special = w.special_faces(2);
  CHECK(special.size() == 16); // one per defect tuple, 2^4
  for (const Face& f : special) CHECK(f.size() == 4);
  // the complement complex is the vertex coskeleton of the 4-cube
  std::vector<FactorType> cube(4, FactorType{SimplexType(2)});
  CHECK(w.special_faces_complex(2) ==
        coskeleton(PolytopeType{ProductType(cube)}, 0));
}

TEST_CASE("wedge surface") {
  const WedgeProductType digon(3, 2);
  CHECK(digon.surface_faces().size() == 8); // every defect tuple when n = 2

  const WedgeProductType w(4, 3);
  const auto surf = w.surface_faces();
  CHECK(surf.size() == 54); // 2 * 3^3
  const auto special = w.special_faces(2);
  for (const Face& f : surf) {
    CHECK(std::binary_search(special.begin(), special.end(), f));
    CHECK(f.size() == 8); // r(n-1)
  }
  CHECK(w.surface_complex().ground_size() == 12);
}

TEST_CASE("polytope variant helpers") {
  const PolytopeType w{WedgeProductType(4, 3)};
  CHECK(poly_dim(w) == 10);
  CHECK(poly_num_facets(w) == 12);
  CHECK_THROWS_AS(as_product(w), input_error);
  const ProductType p = as_product(PolytopeType{PolygonType(5)});
  CHECK(p.num_factors() == 1);
  CHECK(p.dim() == 2);
}
