#pragma once

#include <cstdint>
#include <vector>

#include "coskel/face.hpp"

namespace coskel {

// Guards for the minimal-non-face enumeration.  Grounds up to
// exhaustive_ground_limit use a full down-closure table (2^m bytes); larger
// grounds fall back to incremental minimal-transversal enumeration over the
// facet complements, which is guarded by work_limit on the number of
// intermediate partial transversals.  Exceeding a guard raises resource_error.
struct NonFaceOptions {
  int exhaustive_ground_limit = 24;
  std::uint64_t work_limit = std::uint64_t{1} << 22;
};

// Abstract simplicial complex given by its facets (inclusion-maximal faces).
// The facet list is always a canonically sorted antichain.  The complex {∅}
// (one empty facet, dimension -1) is distinct from a complex with no faces at
// all, which does not arise here: every complex contains the empty face.
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  // Down-closure of the generator list.  Non-maximal and duplicate generators
  // are absorbed.  An empty generator list yields {∅}.
  static SimplicialComplex from_generators(GroundSet ground,
                                           std::vector<Face> generators);
  static SimplicialComplex empty_complex(GroundSet ground); // {∅}
  static SimplicialComplex full_simplex(GroundSet ground);

  const GroundSet& ground() const { return ground_; }
  int ground_size() const { return ground_.size(); }
  const std::vector<Face>& facets() const { return facets_; }
  int dim() const; // -1 for {∅}

  bool contains(const Face& f) const;

  // Join on the disjoint union of the grounds; the other complex's indices
  // are shifted by this ground's size.  Facets(K*L) = {σ ⊎ τ}.
  SimplicialComplex join(const SimplicialComplex& other) const;

  // Union of face sets over a shared ground (ground sizes must match).
  SimplicialComplex union_with(const SimplicialComplex& other) const;

  // Faces of dimension <= j.  j >= dim returns the complex unchanged.
  SimplicialComplex skeleton(int j) const;

  // f[i] = number of i-dimensional faces, i = 0..dim.  Empty for {∅}.
  std::vector<std::int64_t> f_vector() const;
  std::int64_t euler_characteristic() const; // alternating sum of f_vector

  // Inclusion-minimal non-faces, canonically sorted.
  std::vector<Face> minimal_non_faces(const NonFaceOptions& opts = {}) const;

  // Equality compares ground size and facet lists; labels are ignored.
  bool operator==(const SimplicialComplex& other) const {
    return ground_.size() == other.ground_.size() && facets_ == other.facets_;
  }

private:
  GroundSet ground_;
  std::vector<Face> facets_;
};

// Keeps only inclusion-maximal faces, sorted canonically.
std::vector<Face> maximal_faces(std::vector<Face> faces);

// Keeps only inclusion-minimal faces, sorted canonically.
std::vector<Face> minimal_faces(std::vector<Face> faces);

} // namespace coskel
