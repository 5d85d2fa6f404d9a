#include "coskel/complex.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <set>

#include "coskel/combinat.hpp"
#include "coskel/errors.hpp"

namespace coskel {

namespace {

bool all_fit_word(const std::vector<Face>& faces) {
  return std::all_of(faces.begin(), faces.end(),
                     [](const Face& f) { return f.fits_word(); });
}

// Exhaustive minimal-non-face scan over the full down-closure table.
std::vector<Face> nf_exhaustive(int m, const std::vector<Face>& facets) {
  assert(m >= 0 && m <= 28);
  const std::uint32_t n = std::uint32_t{1} << m;
  std::vector<std::uint8_t> is_face(n, 0);
  for (const Face& f : facets) is_face[static_cast<std::uint32_t>(f.mask())] = 1;
  for (std::uint32_t s = n; s-- > 0;) {
    if (!is_face[s]) continue;
    for (std::uint32_t t = s; t;) {
      const std::uint32_t low = t & (~t + 1);
      is_face[s ^ low] = 1;
      t ^= low;
    }
  }
  std::vector<Face> out;
  for (std::uint32_t s = 1; s < n; ++s) {
    if (is_face[s]) continue;
    bool minimal = true;
    for (std::uint32_t t = s; t;) {
      const std::uint32_t low = t & (~t + 1);
      if (!is_face[s ^ low]) { minimal = false; break; }
      t ^= low;
    }
    if (minimal) out.push_back(Face::from_mask(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Incremental minimal-transversal enumeration (Berge) over facet complements,
// packed-mask variant for grounds of at most 64 elements.
std::vector<Face> nf_transversal_mask(int m, const std::vector<Face>& facets,
                                      std::uint64_t work_limit) {
  const std::uint64_t full =
      m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  std::vector<std::uint64_t> edges;
  edges.reserve(facets.size());
  for (const Face& f : facets) {
    const std::uint64_t e = full & ~f.mask();
    if (e == 0) return {}; // a full-ground facet: no non-face can exist
    edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<std::uint64_t> trans = {0};
  std::vector<std::uint64_t> hit, cand, keep;
  for (const std::uint64_t e : edges) {
    hit.clear();
    cand.clear();
    for (const std::uint64_t t : trans) {
      if (t & e) { hit.push_back(t); continue; }
      for (std::uint64_t rest = e; rest;) {
        const std::uint64_t low = rest & (~rest + 1);
        cand.push_back(t | low);
        rest ^= low;
      }
    }
    if (hit.size() + cand.size() > work_limit)
      throw resource_error("minimal non-face enumeration exceeded work limit");
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    keep.clear();
    for (const std::uint64_t c : cand) {
      bool minimal = true;
      for (const std::uint64_t h : hit)
        if ((h & ~c) == 0) { minimal = false; break; }
      if (minimal)
        for (const std::uint64_t c2 : cand)
          if (c2 != c && (c2 & ~c) == 0) { minimal = false; break; }
      if (minimal) keep.push_back(c);
    }
    trans = hit;
    trans.insert(trans.end(), keep.begin(), keep.end());
  }
  std::vector<Face> out;
  out.reserve(trans.size());
  for (const std::uint64_t t : trans) out.push_back(Face::from_mask(t));
  std::sort(out.begin(), out.end());
  return out;
}

// Generic-set variant of the transversal path for grounds beyond 64 elements.
std::vector<Face> nf_transversal_generic(int m, const std::vector<Face>& facets,
                                         std::uint64_t work_limit) {
  std::vector<Face> edges;
  edges.reserve(facets.size());
  for (const Face& f : facets) {
    Face e = f.complement_in(m);
    if (e.empty()) return {};
    edges.push_back(std::move(e));
  }
  std::sort(edges.begin(), edges.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<Face> trans = {Face{}};
  for (const Face& e : edges) {
    std::vector<Face> hit, cand;
    for (const Face& t : trans) {
      if (!t.disjoint_with(e)) { hit.push_back(t); continue; }
      for (int v : e.elements()) cand.push_back(t.united_with(Face{v}));
    }
    if (hit.size() + cand.size() > work_limit)
      throw resource_error("minimal non-face enumeration exceeded work limit");
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<Face> keep;
    for (const Face& c : cand) {
      bool minimal = true;
      for (const Face& h : hit)
        if (h.subset_of(c)) { minimal = false; break; }
      if (minimal)
        for (const Face& c2 : cand)
          if (!(c2 == c) && c2.subset_of(c)) { minimal = false; break; }
      if (minimal) keep.push_back(c);
    }
    trans = std::move(hit);
    trans.insert(trans.end(), keep.begin(), keep.end());
  }
  std::sort(trans.begin(), trans.end());
  return trans;
}

} // namespace

std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::stable_sort(faces.begin(), faces.end(),
                   [](const Face& a, const Face& b) { return a.size() > b.size(); });
  std::vector<Face> out;
  for (const Face& f : faces) {
    bool covered = false;
    for (const Face& g : out)
      if (f.subset_of(g)) { covered = true; break; }
    if (!covered) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> minimal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::stable_sort(faces.begin(), faces.end(),
                   [](const Face& a, const Face& b) { return a.size() < b.size(); });
  std::vector<Face> out;
  for (const Face& f : faces) {
    bool covered = false;
    for (const Face& g : out)
      if (g.subset_of(f)) { covered = true; break; }
    if (!covered) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex SimplicialComplex::from_generators(GroundSet ground,
                                                     std::vector<Face> generators) {
  SimplicialComplex k;
  k.ground_ = std::move(ground);
  for (const Face& f : generators)
    if (f.max_element() >= k.ground_.size())
      throw input_error("generator element outside the ground set");
  if (generators.empty()) generators.push_back(Face{});
  k.facets_ = maximal_faces(std::move(generators));
  return k;
}

SimplicialComplex SimplicialComplex::empty_complex(GroundSet ground) {
  return from_generators(std::move(ground), {});
}

SimplicialComplex SimplicialComplex::full_simplex(GroundSet ground) {
  const int m = ground.size();
  return from_generators(std::move(ground), {Face::full(m)});
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const Face& f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

bool SimplicialComplex::contains(const Face& f) const {
  for (const Face& g : facets_)
    if (f.subset_of(g)) return true;
  return false;
}

SimplicialComplex SimplicialComplex::join(const SimplicialComplex& other) const {
  const int offset = ground_.size();
  std::vector<Face> gens;
  gens.reserve(facets_.size() * other.facets_.size());
  for (const Face& f : facets_)
    for (const Face& g : other.facets_)
      gens.push_back(f.united_with(g.shifted(offset)));
  // facet-antichain property is preserved by blockwise unions
  return from_generators(concat(ground_, other.ground_), std::move(gens));
}

SimplicialComplex SimplicialComplex::union_with(const SimplicialComplex& other) const {
  if (ground_.size() != other.ground_.size())
    throw input_error("union of complexes over different ground sizes");
  std::vector<Face> gens = facets_;
  gens.insert(gens.end(), other.facets_.begin(), other.facets_.end());
  return from_generators(ground_, std::move(gens));
}

SimplicialComplex SimplicialComplex::skeleton(int j) const {
  if (j < -1) throw input_error("skeleton dimension below -1");
  if (j >= dim()) return *this;
  std::vector<Face> gens;
  for (const Face& f : facets_) {
    if (f.size() <= j + 1) { gens.push_back(f); continue; }
    for_each_subset_of_size(f.elements(), j + 1, [&](const std::vector<int>& pick) {
      gens.push_back(Face(pick));
    });
  }
  return from_generators(ground_, std::move(gens));
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
  const int d = dim();
  std::vector<std::int64_t> f(static_cast<std::size_t>(d + 1), 0);
  if (d < 0) return f;
  const int m = ground_.size();
  if (m <= 24) {
    const std::uint32_t n = std::uint32_t{1} << m;
    std::vector<std::uint8_t> is_face(n, 0);
    for (const Face& g : facets_) is_face[static_cast<std::uint32_t>(g.mask())] = 1;
    for (std::uint32_t s = n; s-- > 0;) {
      if (!is_face[s]) continue;
      for (std::uint32_t t = s; t;) {
        const std::uint32_t low = t & (~t + 1);
        is_face[s ^ low] = 1;
        t ^= low;
      }
    }
    for (std::uint32_t s = 1; s < n; ++s)
      if (is_face[s]) ++f[static_cast<std::size_t>(std::popcount(s) - 1)];
    return f;
  }
  std::set<Face> seen;
  constexpr std::size_t kGuard = std::size_t{1} << 22;
  for (const Face& g : facets_) {
    const auto& elems = g.elements();
    for (int k = 1; k <= g.size(); ++k)
      for_each_subset_of_size(elems, k, [&](const std::vector<int>& pick) {
        seen.insert(Face(pick));
        if (seen.size() > kGuard)
          throw resource_error("f-vector enumeration exceeded work limit");
      });
  }
  for (const Face& s : seen) ++f[static_cast<std::size_t>(s.size() - 1)];
  return f;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  int sign = 1;
  for (std::int64_t fi : f_vector()) {
    chi += sign * fi;
    sign = -sign;
  }
  return chi;
}

std::vector<Face> SimplicialComplex::minimal_non_faces(const NonFaceOptions& opts) const {
  if (opts.exhaustive_ground_limit < 0 || opts.exhaustive_ground_limit > 28)
    throw input_error("exhaustive ground limit must lie in [0, 28]");
  const int m = ground_.size();
  if (m <= opts.exhaustive_ground_limit) return nf_exhaustive(m, facets_);
  if (m <= 64 && all_fit_word(facets_))
    return nf_transversal_mask(m, facets_, opts.work_limit);
  return nf_transversal_generic(m, facets_, opts.work_limit);
}

} // namespace coskel
