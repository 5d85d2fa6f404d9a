#include "coskel/obstructions.hpp"

#include <algorithm>

#include "coskel/bounds.hpp"
#include "coskel/combinat.hpp"
#include "coskel/errors.hpp"

namespace coskel {

namespace {

void check_e(int e) {
  if (e < 0) throw input_error("target dimension e must be nonnegative");
}

ObstructionCertificate unavailable(int d, int m, int k, int e, std::string why) {
  ObstructionCertificate cert;
  cert.d = d;
  cert.m = m;
  cert.k = k;
  cert.e = e;
  cert.obstruction_available = false;
  cert.obstructed = false;
  cert.note = std::move(why);
  return cert;
}

} // namespace

const char* to_string(BoundResult::Source s) {
  switch (s) {
    case BoundResult::Source::closed_form: return "closed_form";
    case BoundResult::Source::ilp: return "ilp";
    case BoundResult::Source::brute_force: return "brute_force";
  }
  return "?";
}

ObstructionCertificate obstruction_verdict(int d, int m, int k, int e,
                                           const BoundResult& bound) {
  if (d < 1 || m <= d) throw input_error("verdict needs 1 <= d < m");
  if (k < 0 || k >= d) throw input_error("verdict needs 0 <= k < d");
  check_e(e);
  ObstructionCertificate cert;
  cert.d = d;
  cert.m = m;
  cert.k = k;
  cert.e = e;
  cert.threshold_e = bound.edim_lower + d - m + 2;
  cert.obstructed = e < *cert.threshold_e;
  cert.bound = bound;
  return cert;
}

bool certificate_consistent(const ObstructionCertificate& cert) {
  if (!cert.obstruction_available)
    return !cert.obstructed && !cert.threshold_e && !cert.bound;
  if (cert.threshold_e && cert.obstructed != (cert.e < *cert.threshold_e))
    return false;
  if (cert.bound) {
    if (!cert.threshold_e) return false;
    if (cert.bound->edim_upper && cert.bound->edim_lower > *cert.bound->edim_upper)
      return false;
    if (cert.bound->sind && *cert.bound->sind != cert.bound->edim_lower)
      return false;
    if (cert.m && *cert.threshold_e != cert.bound->edim_lower + cert.d - *cert.m + 2)
      return false;
  }
  return true;
}

ObstructionCertificate obstruct_polygon_products(int r_e, int r_o, int k, int e) {
  const int r = r_e + r_o;
  if (r_e < 0 || r_o < 0 || r < 1)
    throw input_error("polygon product needs at least one factor");
  if (k < 0 || k >= 2 * r)
    throw input_error("skeleton obstruction needs 0 <= k < 2r");
  check_e(e);
  ObstructionCertificate cert;
  cert.d = 2 * r;
  cert.k = k;
  cert.e = e;
  cert.threshold_e = r + 1 + k / 2 + std::min(0, (k + 1) / 2 - r_e);
  cert.obstructed = e < *cert.threshold_e;
  cert.note = "edge count cancels against the codimension shift; verdict holds "
              "for every product of " + std::to_string(r_e) + " even and " +
              std::to_string(r_o) + " odd polygons";
  return cert;
}

ObstructionCertificate obstruct_simplex_products(int n, int r, int k, int e) {
  if (k < 0 || k >= r * (n - 1))
    throw input_error("skeleton obstruction needs 0 <= k < r(n-1)");
  check_e(e);
  BoundResult bound;
  bound.source = BoundResult::Source::closed_form;
  bound.edim_lower = edim_lower_simplex_products(n, r, k); // validates n, r
  bound.edim_upper = edim_upper_simplex_products(n, r, k);
  return obstruction_verdict(r * (n - 1), r * n, k, e, bound);
}

bool van_kampen_flores(int k, int e) {
  if (k < 0) throw input_error("skeleton dimension must be nonnegative");
  check_e(e);
  return e <= 2 * k + 1;
}

ObstructionCertificate obstruct_neighborly_polygons(int r_e, int r_o, int e) {
  const int r = r_e + r_o;
  if (r_e < 0 || r_o < 0 || r < 1)
    throw input_error("polygon product needs at least one factor");
  if (e < 2) throw input_error("neighborliness needs e >= 2");
  const int k = e / 2 - 1;
  if (k >= 2 * r)
    throw input_error("required skeleton exceeds the product dimension");
  ObstructionCertificate cert;
  cert.d = 2 * r;
  cert.k = k;
  cert.e = e;
  if (r_e < e / 4) {
    cert.obstructed = (3 * e - 2 + 3) / 4 < r; // ⌈(3e-2)/4⌉ < r
    cert.note = "few even factors: obstructed iff ceil((3e-2)/4) < r";
  } else {
    cert.obstructed = e / 2 < r_o;
    cert.note = "many even factors: obstructed iff floor(e/2) < r_o";
  }
  // the branch conditions do not reduce to one threshold in e; none is set
  return cert;
}

int wedge_special_threshold(int r, int n, int k) {
  if (r < 4) throw input_error("special-face threshold needs r >= 4");
  if (n < 2) throw input_error("wedge product needs n >= 2");
  if (k < 2 || k >= r * (n - 1) + 2)
    throw input_error("special faces need 2 <= k < dim");
  const int low = r * floor_div(n - 3, 2);
  const int mid = r * floor_div(n - 2, 2);
  if (k - 2 <= low) return r + 2 * k - 1;
  if (k - 2 <= mid) return r * (n - 2) / 2 + k + 1;
  const int alpha = floor_div(k - 2 - mid, floor_div(n + 1, 2));
  return r * (n - 2) + alpha + 3;
}

ObstructionCertificate obstruct_wedge_special_faces(int r, int n, int k, int e) {
  if (r < 3) throw input_error("wedge product needs an r-gon with r >= 3");
  if (n < 2) throw input_error("wedge product needs a simplex with n >= 2 facets");
  const int d = r * (n - 1) + 2;
  const int m = r * n;
  if (k < 2 || k >= d)
    throw input_error("special faces need 2 <= k < dim");
  check_e(e);
  if (r == 3)
    return unavailable(d, m, k, e,
                       "no obstruction available: the triangle wedge has no "
                       "certificate complex");
  BoundResult bound;
  bound.source = BoundResult::Source::closed_form;
  bound.edim_lower = edim_lower_simplex_products(n, r, k - 2);
  ObstructionCertificate cert = obstruction_verdict(d, m, k, e, bound);
  if (*cert.threshold_e != wedge_special_threshold(r, n, k))
    throw consistency_error("wedge special-face threshold mismatch between "
                            "piecewise form and certificate complex");
  cert.note = "certificate: (k-2)-coskeleton of the r-fold simplex product "
              "embedded among the special-face complements";
  return cert;
}

ObstructionCertificate obstruct_wedge_skeleton(int r, int n, int k, int e) {
  if (r < 3) throw input_error("wedge product needs an r-gon with r >= 3");
  if (n < 2) throw input_error("wedge product needs a simplex with n >= 2 facets");
  const int d = r * (n - 1) + 2;
  const int m = r * n;
  if (k < 0 || k >= d) throw input_error("skeleton obstruction needs 0 <= k < dim");
  check_e(e);
  if (r == 3)
    return unavailable(d, m, k, e,
                       "no obstruction available: the triangle wedge has no "
                       "certificate complex");
  if (k >= 2) {
    ObstructionCertificate cert = obstruct_wedge_special_faces(r, n, k, e);
    cert.note += "; special faces lie in the k-skeleton";
    return cert;
  }
  // k = 0 or 1: vertex coskeleton of a product with r-2 resp. r-1 factors
  const int factors = r - 2 + k;
  BoundResult bound;
  bound.source = BoundResult::Source::closed_form;
  bound.edim_lower = edim_lower_simplex_products(n, factors, 0);
  ObstructionCertificate cert = obstruction_verdict(d, m, k, e, bound);
  cert.note = "certificate: vertex coskeleton of the " + std::to_string(factors) +
              "-fold simplex product embedded in the wedge coskeleton";
  return cert;
}

ObstructionCertificate obstruct_wedge_surface(int r, int n, int e) {
  if (r < 3) throw input_error("wedge product needs an r-gon with r >= 3");
  if (n < 2) throw input_error("wedge product needs a simplex with n >= 2 facets");
  const int d = r * (n - 1) + 2;
  const int m = r * n;
  check_e(e);
  if (r == 3)
    return unavailable(d, m, 2, e,
                       "no obstruction available: the triangle wedge has no "
                       "certificate complex");
  if (n == 2)
    return unavailable(d, m, 2, e,
                       "no obstruction available: the digon wedge surface has "
                       "no certificate complex");
  BoundResult bound;
  bound.source = BoundResult::Source::closed_form;
  bound.edim_lower = edim_lower_simplex_products(n, r - 1, 0); // = 2r - 3
  ObstructionCertificate cert = obstruction_verdict(d, m, 2, e, bound);
  cert.note = "certificate: vertex coskeleton of the " + std::to_string(r - 1) +
              "-fold simplex product embedded among the surface complements";
  return cert;
}

} // namespace coskel
