#pragma once

#include <string>
#include <variant>
#include <vector>

#include "coskel/complex.hpp"
#include "coskel/face.hpp"

namespace coskel {

// Combinatorial types are identified with their facet-incidence data: a
// d-dimensional type with m facets assigns to every face F the set
// I(F) ⊆ {0..m-1} of facets containing it.  I is inclusion-reversing,
// I(empty face) is the whole facet set, I(whole polytope) is empty.

// Convex m-gon.  Facets are the m edges; vertex i lies on edges {i-1, i}
// taken cyclically, so I(vertex i) = {i, i+1 mod m} under the convention
// that edge i joins vertices i and i+1.
class PolygonType {
public:
  explicit PolygonType(int m);
  int size() const { return m_; }
  bool odd() const { return m_ % 2 == 1; }
  int dim() const { return 2; }
  int num_facets() const { return m_; }
  std::vector<Face> faces_of_dim(int k) const; // k in [-1, 2]
  friend bool operator==(const PolygonType&, const PolygonType&) = default;

private:
  int m_;
};

// Simplex with n facets (dimension n-1).  k-faces correspond to their
// incidence sets, the (n-k-1)-element subsets of {0..n-1}.
class SimplexType {
public:
  explicit SimplexType(int n);
  int num_facets() const { return n_; }
  int dim() const { return n_ - 1; }
  std::vector<Face> faces_of_dim(int k) const; // k in [-1, n-1]
  friend bool operator==(const SimplexType&, const SimplexType&) = default;

private:
  int n_;
};

using FactorType = std::variant<PolygonType, SimplexType>;

int factor_dim(const FactorType& f);
int factor_num_facets(const FactorType& f);
std::vector<Face> factor_faces_of_dim(const FactorType& f, int k);

// Finite product of polygons and simplices.  Facets are the disjoint union
// of the factors' facets, in factor order; nonempty faces are products of
// nonempty factor faces and their incidence sets are blockwise unions.
class ProductType {
public:
  explicit ProductType(std::vector<FactorType> factors);
  const std::vector<FactorType>& factors() const { return factors_; }
  int num_factors() const { return static_cast<int>(factors_.size()); }
  int dim() const;
  int num_facets() const;
  std::vector<Face> faces_of_dim(int k) const;

  // Dimension vectors λ with 0 <= λ_i <= dim(P_i) and Σλ_i = k, in
  // lexicographic order.
  std::vector<std::vector<int>> face_types(int k) const;

  // Join of the factors' λ_i-coskeleta on the blocked facet ground.
  SimplicialComplex cotype_complex(const std::vector<int>& lambda) const;

  friend bool operator==(const ProductType&, const ProductType&) = default;

private:
  std::vector<FactorType> factors_;
};

// Wedge product of an r-gon with a simplex on n facets: dimension
// r(n-1) + 2, facets indexed by pairs (i, j) with i in [r], j in [n],
// linearized as i*n + j.  Faces are the tuples (H_1, ..., H_r) with
// H_i ⊆ [n] where {i : H_i = [n]} is a face-incidence set of the r-gon;
// the incidence set of a tuple is {(i, j) : j ∈ H_i} and its dimension is
// Σ_{H_i ≠ [n]} (n - 1 - |H_i|) + dim(polygon face).
class WedgeProductType {
public:
  WedgeProductType(int r, int n); // r >= 3, n >= 2
  int gon() const { return r_; }
  int simplex_facets() const { return n_; }
  int dim() const { return r_ * (n_ - 1) + 2; }
  int num_facets() const { return r_ * n_; }
  int facet_index(int i, int j) const { return i * n_ + j; }

  std::vector<Face> faces_of_dim(int k) const;

  // Oracle used by the verify suite: enumerates the whole tuple lattice and
  // filters by dimension.  Only valid for r*n small enough to iterate 2^(rn).
  std::vector<Face> faces_of_dim_oracle(int k) const;

  // Special faces: tuples with every H_i a proper subset of [n].  Their
  // dimensions start at 2.  Complements of special k-faces generate a complex
  // equal to the (k-2)-coskeleton of the n^r product of simplices.
  std::vector<Face> special_faces(int k) const; // k >= 2
  SimplicialComplex special_faces_complex(int k) const;

  // The surface: special 2-faces (H_i = [n] \ {j_i}) whose defect vector
  // satisfies j_1 + ... + j_r ≡ 0 or 1 (mod n).  There are 2*n^(r-1) of them.
  std::vector<Face> surface_faces() const;
  SimplicialComplex surface_complex() const;

  GroundSet facet_ground() const; // labels "(i,j)"

  friend bool operator==(const WedgeProductType&, const WedgeProductType&) = default;

private:
  int r_, n_;
};

using PolytopeType =
    std::variant<PolygonType, SimplexType, ProductType, WedgeProductType>;

int poly_dim(const PolytopeType& p);
int poly_num_facets(const PolytopeType& p);
std::vector<Face> poly_faces_of_dim(const PolytopeType& p, int k);
GroundSet poly_facet_ground(const PolytopeType& p);

// Complex on the facet set generated by complements of k-face incidence
// sets.  k = -1 gives {∅}, k = dim gives the full simplex, k = dim-1 the
// boundary of the facet simplex.
SimplicialComplex coskeleton(const PolytopeType& p, int k);

// Same complex computed as the union over face types of cotype joins.
// Agrees with coskeleton() on products; exercised by the verify suite.
SimplicialComplex coskeleton_by_types(const ProductType& p, int k);

// Wraps single polygons and simplices as one-factor products.
ProductType as_product(const PolytopeType& p);

} // namespace coskel
