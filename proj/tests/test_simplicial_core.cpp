#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "coskel/complex.hpp"
#include "coskel/errors.hpp"
#include "coskel/face.hpp"
#include "coskel/polytopes.hpp"

using namespace coskel;

TEST_CASE("faces sort and deduplicate") {
  const Face f(std::vector<int>{3, 1, 3, 0, 1});
  CHECK(f.elements() == std::vector<int>{0, 1, 3});
  CHECK(f.size() == 3);
  CHECK(f.contains(1));
  CHECK_FALSE(f.contains(2));
  CHECK(to_string(f) == "{0,1,3}");
  CHECK(Face{}.empty());
  CHECK(Face{}.max_element() == -1);
}

TEST_CASE("face set predicates agree between the word and generic paths") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> elem(0, 9);
  std::uniform_int_distribution<int> size(0, 6);
  for (int it = 0; it < 200; ++it) {
    std::vector<int> av, bv;
    for (int i = size(rng); i > 0; --i) av.push_back(elem(rng));
    for (int i = size(rng); i > 0; --i) bv.push_back(elem(rng));
    const Face a(av), b(bv);
    // the same sets pushed past bit 63 take the generic path
    const Face a_big = a.shifted(100), b_big = b.shifted(100);
    CHECK(a.subset_of(b) == a_big.subset_of(b_big));
    CHECK(a.disjoint_with(b) == a_big.disjoint_with(b_big));
    CHECK(a.united_with(b).shifted(100) == a_big.united_with(b_big));
    CHECK(a.intersected_with(b).shifted(100) == a_big.intersected_with(b_big));
  }
}

TEST_CASE("face mask round trip and complement") {
  const Face f{0, 2, 5};
  CHECK(f.fits_word());
  CHECK(Face::from_mask(f.mask()) == f);
  CHECK(f.complement_in(6) == Face{1, 3, 4});
  CHECK(Face::full(3) == Face{0, 1, 2});
  CHECK(f.without(2) == Face{0, 5});
  CHECK(f.without(3) == f);
}

TEST_CASE("from_generators absorbs dominated generators") {
  const SimplicialComplex k = SimplicialComplex::from_generators(
      GroundSet(4), {Face{0, 1}, Face{0}, Face{1, 2}, Face{0, 1}});
  CHECK(k.facets() == std::vector<Face>{Face{0, 1}, Face{1, 2}});
  CHECK(k.dim() == 1);
  CHECK(k.contains(Face{}));
  CHECK(k.contains(Face{0}));
  CHECK(k.contains(Face{1, 2}));
  CHECK_FALSE(k.contains(Face{0, 2}));
  CHECK_FALSE(k.contains(Face{3}));
}

TEST_CASE("the empty complex and the full simplex") {
  const SimplicialComplex e = SimplicialComplex::empty_complex(GroundSet(5));
  CHECK(e.dim() == -1);
  CHECK(e.facets() == std::vector<Face>{Face{}});
  CHECK(e.f_vector().empty());
  CHECK(e.euler_characteristic() == 0);
  CHECK(e.minimal_non_faces().size() == 5); // each vertex

  const SimplicialComplex full = SimplicialComplex::full_simplex(GroundSet(4));
  CHECK(full.dim() == 3);
  CHECK(full.minimal_non_faces().empty());
  CHECK(full.f_vector() == std::vector<std::int64_t>{4, 6, 4, 1});
  CHECK(full.euler_characteristic() == 1);
}

TEST_CASE("generators outside the ground set are rejected") {
  CHECK_THROWS_AS(SimplicialComplex::from_generators(GroundSet(3), {Face{3}}),
                  input_error);
}

TEST_CASE("skeleton") {
  const SimplicialComplex full = SimplicialComplex::full_simplex(GroundSet(4));
  const SimplicialComplex boundary = full.skeleton(2);
  CHECK(boundary.f_vector() == std::vector<std::int64_t>{4, 6, 4});
  CHECK(boundary.euler_characteristic() == 2); // a 2-sphere
  CHECK(boundary.minimal_non_faces() == std::vector<Face>{Face{0, 1, 2, 3}});
  CHECK(full.skeleton(7) == full);
  CHECK(full.skeleton(-1) == SimplicialComplex::empty_complex(GroundSet(4)));
  CHECK_THROWS_AS(full.skeleton(-2), input_error);
}

TEST_CASE("union requires a shared ground set") {
  const SimplicialComplex a = SimplicialComplex::full_simplex(GroundSet(3));
  const SimplicialComplex b = SimplicialComplex::full_simplex(GroundSet(4));
  CHECK_THROWS_AS(a.union_with(b), input_error);
  const SimplicialComplex c = SimplicialComplex::from_generators(
      GroundSet(3), {Face{0, 1}});
  const SimplicialComplex d = SimplicialComplex::from_generators(
      GroundSet(3), {Face{1, 2}, Face{0}});
  CHECK(c.union_with(d).facets() == std::vector<Face>{Face{0, 1}, Face{1, 2}});
}

TEST_CASE("join shifts the right factor and convolves f-vectors") {
  const SimplicialComplex a = SimplicialComplex::from_generators(
      GroundSet(2), {Face{0}, Face{1}}); // two points
  const SimplicialComplex j = a.join(a); // a 4-cycle
  CHECK(j.ground_size() == 4);
  CHECK(j.facets() == std::vector<Face>{Face{0, 2}, Face{0, 3}, Face{1, 2}, Face{1, 3}});
  CHECK(j.f_vector() == std::vector<std::int64_t>{4, 4});
  CHECK(j.euler_characteristic() == 0);
  CHECK(j.minimal_non_faces() == std::vector<Face>{Face{0, 1}, Face{2, 3}});
}

TEST_CASE("square vertex coskeleton has the two diagonals as non-faces") {
  const SimplicialComplex k = coskeleton(PolytopeType{PolygonType(4)}, 0);
  CHECK(k.minimal_non_faces() == std::vector<Face>{Face{0, 2}, Face{1, 3}});
}

TEST_CASE("pentagon vertex coskeleton fingerprint") {
  const SimplicialComplex k = coskeleton(PolytopeType{PolygonType(5)}, 0);
  CHECK(k.f_vector() == std::vector<std::int64_t>{5, 10, 5});
  CHECK(k.euler_characteristic() == 0);
  const std::vector<Face> nf = k.minimal_non_faces();
  REQUIRE(nf.size() == 5);
  for (const Face& f : nf) CHECK(f.size() == 3);
}

// The minimal non-faces of a complex generated by edge complements of a
// cycle are its minimal vertex covers; the counts below were enumerated
// directly from the cover definition.
TEST_CASE("cycle cover counts") {
  auto cover_count = [](int n) {
    std::vector<Face> gens;
    for (int i = 0; i < n; ++i)
      gens.push_back(Face{i, (i + 1) % n}.complement_in(n));
    const SimplicialComplex k =
        SimplicialComplex::from_generators(GroundSet(n), std::move(gens));
    return static_cast<int>(k.minimal_non_faces().size());
  };
  CHECK(cover_count(5) == 5);
  CHECK(cover_count(6) == 5);
  CHECK(cover_count(7) == 7);
  CHECK(cover_count(9) == 12);
}

namespace {

SimplicialComplex random_complex(std::mt19937& rng, int m, int gens) {
  std::uniform_int_distribution<int> elem(0, m - 1);
  std::uniform_int_distribution<int> size(0, m);
  std::vector<Face> generators;
  for (int g = 0; g < gens; ++g) {
    std::vector<int> elems;
    for (int s = size(rng); s > 0; --s) elems.push_back(elem(rng));
    generators.push_back(Face(std::move(elems)));
  }
  return SimplicialComplex::from_generators(GroundSet(m), std::move(generators));
}

} // namespace

TEST_CASE("non-face enumeration paths agree") {
  std::mt19937 rng(12);
  NonFaceOptions exhaustive, transversal;
  transversal.exhaustive_ground_limit = 0;
  for (int it = 0; it < 60; ++it) {
    const SimplicialComplex k = random_complex(rng, 4 + it % 6, 5);
    const auto a = k.minimal_non_faces(exhaustive);
    const auto b = k.minimal_non_faces(transversal);
    REQUIRE(a == b);
    for (const Face& f : a) {
      CHECK_FALSE(k.contains(f));
      for (int v : f.elements()) CHECK(k.contains(f.without(v)));
    }
  }
}

TEST_CASE("grounds beyond 64 use the generic transversal path") {
  const SimplicialComplex small = SimplicialComplex::from_generators(
      GroundSet(4), {Face{0, 1}, Face{1, 2}, Face{2, 3}, Face{0, 3}});
  std::vector<Face> gens;
  for (const Face& f : small.facets()) gens.push_back(f.shifted(64));
  const SimplicialComplex big =
      SimplicialComplex::from_generators(GroundSet(68), gens);
  std::vector<Face> expected;
  for (int i = 0; i < 64; ++i) expected.push_back(Face{i});
  for (const Face& f : small.minimal_non_faces()) expected.push_back(f.shifted(64));
  std::sort(expected.begin(), expected.end());
  CHECK(big.minimal_non_faces() == expected);
}

TEST_CASE("non-face guards") {
  NonFaceOptions opts;
  opts.exhaustive_ground_limit = 29;
  const SimplicialComplex k = SimplicialComplex::from_generators(
      GroundSet(6), {Face{0, 1, 2}, Face{2, 3, 4}, Face{4, 5, 0}});
  CHECK_THROWS_AS(k.minimal_non_faces(opts), input_error);

  NonFaceOptions tight;
  tight.exhaustive_ground_limit = 0;
  tight.work_limit = 1;
  CHECK_THROWS_AS(k.minimal_non_faces(tight), resource_error);
}

TEST_CASE("maximal and minimal face filters") {
  const std::vector<Face> faces = {Face{0}, Face{0, 1}, Face{2}, Face{0, 1}, Face{1, 2}};
  CHECK(maximal_faces(faces) == std::vector<Face>{Face{0, 1}, Face{1, 2}});
  CHECK(minimal_faces(faces) == std::vector<Face>{Face{0}, Face{2}});
}

TEST_CASE("ground labels survive joins but never affect equality") {
  const GroundSet a(2, {"a0", "a1"});
  const GroundSet b(1, {"b0"});
  const GroundSet c = concat(a, b);
  REQUIRE(c.size() == 3);
  CHECK(c.label(0) == "a0");
  CHECK(c.label(2) == "b0");
  const SimplicialComplex with_labels =
      SimplicialComplex::from_generators(c, {Face{0, 2}});
  const SimplicialComplex without =
      SimplicialComplex::from_generators(GroundSet(3), {Face{0, 2}});
  CHECK(with_labels == without);
}
