#pragma once

#include <optional>
#include <string>
#include <vector>

namespace coskel {

// A lower (and optionally upper) bound on the embeddability dimension of a
// coskeleton-type complex, together with where it came from.  When the bound
// was obtained by an explicit Sarkaria computation, sind records it and
// equals edim_lower.
struct BoundResult {
  enum class Source { closed_form, ilp, brute_force };
  int edim_lower = 0;
  std::optional<int> edim_upper;
  std::optional<int> sind;
  Source source = Source::closed_form;
};

const char* to_string(BoundResult::Source s);

// Verdict for "can a d-polytope with m facets be projected to e-space keeping
// all its k-faces".  obstructed means NO such projection exists.  threshold_e
// is the least e for which the argument is silent: obstructed iff
// e < threshold_e.  Predicates that are independent of the facet count leave
// m and bound empty and record the cancellation in the note.
struct ObstructionCertificate {
  int d = 0;
  std::optional<int> m;
  int k = 0;
  int e = 0;
  bool obstruction_available = true;
  bool obstructed = false;
  std::optional<int> threshold_e;
  std::optional<BoundResult> bound;
  std::optional<std::vector<int>> face_type;
  std::string note;
};

// Applies the codimension argument: obstructed iff e < edim_lower + d - m + 2.
ObstructionCertificate obstruction_verdict(int d, int m, int k, int e,
                                           const BoundResult& bound);

// Re-derives the verdict from the stored fields; false means the certificate
// is internally inconsistent (always a bug).
bool certificate_consistent(const ObstructionCertificate& cert);

// Products of r_e even and r_o odd polygons, 0 <= k < 2r.  The total edge
// count cancels out of the verdict: e < r + 1 + ⌊k/2⌋ + min{0, ⌈k/2⌉ - r_e}.
ObstructionCertificate obstruct_polygon_products(int r_e, int r_o, int k, int e);

// Products of r simplices with n facets each, 0 <= k < r(n-1).
ObstructionCertificate obstruct_simplex_products(int n, int r, int k, int e);

// Single-simplex case r = 1 specialized to n = 2k + 3: the k-skeleton
// admits no skeleton-preserving projection to e-space iff e <= 2k + 1.
bool van_kampen_flores(int k, int e);

// Neighborliness: retaining the ⌊e/2⌋-1 skeleton under projection to
// e-space.  Obstructed iff
//   r_e <  ⌊e/4⌋ and ⌈(3e-2)/4⌉ < r, or
//   r_e >= ⌊e/4⌋ and ⌊e/2⌋ < r_o.
ObstructionCertificate obstruct_neighborly_polygons(int r_e, int r_o, int e);

// Wedge products W(r, n) of an r-gon with a simplex on n facets.
// Thresholds come from certificate complexes embedded in the coskeleton;
// r = 3 has no certificate complex and reports "no obstruction available",
// as does the surface over digons (n = 2).

// Special k-faces, k >= 2: piecewise threshold
//   r + 2k - 1          for k - 2 <= r*⌊(n-3)/2⌋
//   r(n-2)/2 + k + 1    for k - 2 <= r*⌊(n-2)/2⌋
//   r(n-2) + α + 3      otherwise, α = ⌊(k - 2 - r*⌊(n-2)/2⌋) / ⌊(n+1)/2⌋⌋
int wedge_special_threshold(int r, int n, int k);
ObstructionCertificate obstruct_wedge_special_faces(int r, int n, int k, int e);

// Full k-skeleton of the wedge.  k >= 2 reuses the special-face certificate;
// k = 0 and k = 1 use vertex coskeleta of products with r-2 resp. r-1
// factors, giving e < r - 1 resp. e < r + 1 whenever n >= 3.
ObstructionCertificate obstruct_wedge_skeleton(int r, int n, int k, int e);

// The surface (the distinguished family of special 2-faces): e < r + 1 for
// r >= 4, n >= 3.
ObstructionCertificate obstruct_wedge_surface(int r, int n, int e);

} // namespace coskel
