#include "coskel/polytopes.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "coskel/combinat.hpp"
#include "coskel/errors.hpp"

namespace coskel {

namespace {

SimplicialComplex coskeleton_from_faces(GroundSet ground,
                                        const std::vector<Face>& faces) {
  const int m = ground.size();
  std::vector<Face> gens;
  gens.reserve(faces.size());
  for (const Face& f : faces) gens.push_back(f.complement_in(m));
  return SimplicialComplex::from_generators(std::move(ground), std::move(gens));
}

} // namespace

PolygonType::PolygonType(int m) : m_(m) {
  if (m < 3) throw input_error("polygon needs at least 3 edges");
}

std::vector<Face> PolygonType::faces_of_dim(int k) const {
  std::vector<Face> out;
  switch (k) {
    case -1:
      out.push_back(Face::full(m_));
      break;
    case 0:
      for (int i = 0; i < m_; ++i) out.push_back(Face{i, (i + 1) % m_});
      break;
    case 1:
      for (int i = 0; i < m_; ++i) out.push_back(Face{i});
      break;
    case 2:
      out.push_back(Face{});
      break;
    default:
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplexType::SimplexType(int n) : n_(n) {
  if (n < 2) throw input_error("simplex needs at least 2 facets");
}

std::vector<Face> SimplexType::faces_of_dim(int k) const {
  std::vector<Face> out;
  if (k < -1 || k > n_ - 1) return out;
  std::vector<int> all(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) all[static_cast<std::size_t>(i)] = i;
  for_each_subset_of_size(all, n_ - k - 1, [&](const std::vector<int>& pick) {
    out.push_back(Face(pick));
  });
  std::sort(out.begin(), out.end());
  return out;
}

int factor_dim(const FactorType& f) {
  return std::visit([](const auto& x) { return x.dim(); }, f);
}

int factor_num_facets(const FactorType& f) {
  return std::visit([](const auto& x) { return x.num_facets(); }, f);
}

std::vector<Face> factor_faces_of_dim(const FactorType& f, int k) {
  return std::visit([k](const auto& x) { return x.faces_of_dim(k); }, f);
}

ProductType::ProductType(std::vector<FactorType> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw input_error("product needs at least one factor");
}

int ProductType::dim() const {
  int d = 0;
  for (const auto& f : factors_) d += factor_dim(f);
  return d;
}

int ProductType::num_facets() const {
  int m = 0;
  for (const auto& f : factors_) m += factor_num_facets(f);
  return m;
}

std::vector<std::vector<int>> ProductType::face_types(int k) const {
  if (k < 0 || k > dim()) throw input_error("face type dimension out of range");
  std::vector<std::vector<int>> out;
  std::vector<int> lambda(factors_.size());
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos == factors_.size()) {
      if (remaining == 0) out.push_back(lambda);
      return;
    }
    int tail = 0;
    for (std::size_t q = pos + 1; q < factors_.size(); ++q)
      tail += factor_dim(factors_[q]);
    const int cap = factor_dim(factors_[pos]);
    for (int v = 0; v <= cap && v <= remaining; ++v) {
      if (remaining - v > tail) continue;
      lambda[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, k);
  return out;
}

SimplicialComplex ProductType::cotype_complex(const std::vector<int>& lambda) const {
  if (lambda.size() != factors_.size())
    throw input_error("cotype length differs from the number of factors");
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] < 0 || lambda[i] > factor_dim(factors_[i]))
      throw input_error("cotype entry out of range for its factor");
  SimplicialComplex out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int mi = factor_num_facets(factors_[i]);
    SimplicialComplex part = coskeleton_from_faces(
        GroundSet(mi), factor_faces_of_dim(factors_[i], lambda[i]));
    out = (i == 0) ? std::move(part) : out.join(part);
  }
  return out;
}

std::vector<Face> ProductType::faces_of_dim(int k) const {
  std::vector<Face> out;
  if (k == -1) {
    out.push_back(Face::full(num_facets()));
    return out;
  }
  if (k < -1 || k > dim()) return out;
  for (const std::vector<int>& lambda : face_types(k)) {
    // cartesian product of factor face lists, blockwise shifted
    std::vector<std::vector<Face>> lists;
    lists.reserve(factors_.size());
    int offset = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      std::vector<Face> fl = factor_faces_of_dim(factors_[i], lambda[i]);
      for (Face& f : fl) f = f.shifted(offset);
      offset += factor_num_facets(factors_[i]);
      lists.push_back(std::move(fl));
    }
    Face acc;
    auto rec = [&](auto&& self, std::size_t pos, const Face& sofar) -> void {
      if (pos == lists.size()) { out.push_back(sofar); return; }
      for (const Face& f : lists[pos]) self(self, pos + 1, sofar.united_with(f));
    };
    rec(rec, 0, acc);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WedgeProductType::WedgeProductType(int r, int n) : r_(r), n_(n) {
  if (r < 3) throw input_error("wedge product needs an r-gon with r >= 3");
  if (n < 2) throw input_error("wedge product needs a simplex with n >= 2 facets");
}

GroundSet WedgeProductType::facet_ground() const {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(r_ * n_));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < n_; ++j)
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  return GroundSet(r_ * n_, std::move(labels));
}

std::vector<Face> WedgeProductType::faces_of_dim(int k) const {
  std::vector<Face> out;
  if (k == -1) {
    out.push_back(Face::full(r_ * n_));
    return out;
  }
  if (k < -1 || k > dim()) return out;

  std::vector<int> all(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) all[static_cast<std::size_t>(j)] = j;

  // J = set of positions carrying the whole block [n]; it must be the
  // incidence set of an r-gon face.  Remaining positions carry proper
  // subsets H with deficiency c = n - 1 - |H| in [0, n-1].
  auto emit_class = [&](const std::vector<int>& whole_positions, int gon_dim) {
    const int target = k - gon_dim;
    std::vector<int> free_positions;
    for (int i = 0; i < r_; ++i)
      if (!std::binary_search(whole_positions.begin(), whole_positions.end(), i))
        free_positions.push_back(i);
    for_each_composition(
        static_cast<int>(free_positions.size()), target, n_ - 1,
        [&](const std::vector<int>& c) {
          // choose, per free position, a subset of size n-1-c
          std::vector<std::vector<Face>> choices(free_positions.size());
          for (std::size_t p = 0; p < free_positions.size(); ++p) {
            for_each_subset_of_size(all, n_ - 1 - c[p], [&](const std::vector<int>& h) {
              choices[p].push_back(Face(h));
            });
          }
          Face base;
          for (int i : whole_positions)
            base = base.united_with(Face::full(n_).shifted(i * n_));
          auto rec = [&](auto&& self, std::size_t pos, const Face& sofar) -> void {
            if (pos == choices.size()) { out.push_back(sofar); return; }
            const int block = free_positions[pos] * n_;
            for (const Face& h : choices[pos])
              self(self, pos + 1, sofar.united_with(h.shifted(block)));
          };
          rec(rec, 0, base);
        });
  };

  emit_class({}, 2);                                     // whole polygon
  for (int i = 0; i < r_; ++i) emit_class({i}, 1);       // polygon edges
  for (int i = 0; i < r_; ++i) {                         // polygon vertices
    std::vector<int> pair = {i, (i + 1) % r_};
    std::sort(pair.begin(), pair.end());
    emit_class(pair, 0);
  }

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> WedgeProductType::faces_of_dim_oracle(int k) const {
  const int total = r_ * n_;
  if (total > 20)
    throw resource_error("wedge lattice oracle refused: 2^(r*n) too large");
  std::vector<Face> out;
  const std::uint64_t full_block = (std::uint64_t{1} << n_) - 1;
  const std::uint64_t end = std::uint64_t{1} << total;
  for (std::uint64_t word = 0; word < end; ++word) {
    // block i is bits [i*n, (i+1)*n); J = positions with a full block
    std::vector<int> whole;
    int deficiency = 0;
    for (int i = 0; i < r_; ++i) {
      const std::uint64_t block = (word >> (i * n_)) & full_block;
      if (block == full_block) {
        whole.push_back(i);
      } else {
        deficiency += n_ - 1 - std::popcount(block);
      }
    }
    int gon_dim;
    if (whole.empty()) {
      gon_dim = 2;
    } else if (whole.size() == 1) {
      gon_dim = 1;
    } else if (whole.size() == 2) {
      const int a = whole[0], b = whole[1];
      const bool adjacent = (b - a == 1) || (a == 0 && b == r_ - 1);
      if (!adjacent) continue;
      gon_dim = 0;
    } else if (static_cast<int>(whole.size()) == r_) {
      gon_dim = -1;
    } else {
      continue;
    }
    if (deficiency + gon_dim == k) out.push_back(Face::from_mask(word));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> WedgeProductType::special_faces(int k) const {
  if (k < 2) throw input_error("special faces exist in dimensions >= 2");
  std::vector<Face> out;
  if (k - 2 > r_ * (n_ - 1)) return out;
  std::vector<int> all(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) all[static_cast<std::size_t>(j)] = j;
  for_each_composition(r_, k - 2, n_ - 1, [&](const std::vector<int>& c) {
    std::vector<std::vector<Face>> choices(static_cast<std::size_t>(r_));
    for (int i = 0; i < r_; ++i) {
      for_each_subset_of_size(all, n_ - 1 - c[static_cast<std::size_t>(i)],
                              [&](const std::vector<int>& h) {
                                choices[static_cast<std::size_t>(i)].push_back(Face(h));
                              });
    }
    auto rec = [&](auto&& self, int pos, const Face& sofar) -> void {
      if (pos == r_) { out.push_back(sofar); return; }
      for (const Face& h : choices[static_cast<std::size_t>(pos)])
        self(self, pos + 1, sofar.united_with(h.shifted(pos * n_)));
    };
    rec(rec, 0, Face{});
  });
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex WedgeProductType::special_faces_complex(int k) const {
  return coskeleton_from_faces(facet_ground(), special_faces(k));
}

std::vector<Face> WedgeProductType::surface_faces() const {
  std::vector<Face> out;
  std::vector<int> defect(static_cast<std::size_t>(r_));
  auto rec = [&](auto&& self, int pos, int sum) -> void {
    if (pos == r_ - 1) {
      for (int t = 0; t <= 1; ++t) {
        defect[static_cast<std::size_t>(r_ - 1)] = ((t - sum) % n_ + n_) % n_;
        Face dropped;
        for (int i = 0; i < r_; ++i)
          dropped = dropped.united_with(
              Face{i * n_ + defect[static_cast<std::size_t>(i)]});
        out.push_back(dropped.complement_in(r_ * n_));
      }
      return;
    }
    for (int j = 0; j < n_; ++j) {
      defect[static_cast<std::size_t>(pos)] = j;
      self(self, pos + 1, sum + j);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialComplex WedgeProductType::surface_complex() const {
  return coskeleton_from_faces(facet_ground(), surface_faces());
}

int poly_dim(const PolytopeType& p) {
  return std::visit([](const auto& x) { return x.dim(); }, p);
}

int poly_num_facets(const PolytopeType& p) {
  return std::visit([](const auto& x) { return x.num_facets(); }, p);
}

std::vector<Face> poly_faces_of_dim(const PolytopeType& p, int k) {
  return std::visit([k](const auto& x) { return x.faces_of_dim(k); }, p);
}

GroundSet poly_facet_ground(const PolytopeType& p) {
  if (const auto* w = std::get_if<WedgeProductType>(&p)) return w->facet_ground();
  if (const auto* pr = std::get_if<ProductType>(&p)) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < pr->factors().size(); ++i) {
      const int mi = factor_num_facets(pr->factors()[i]);
      for (int j = 0; j < mi; ++j)
        labels.push_back(std::to_string(i) + ":" + std::to_string(j));
    }
    return GroundSet(pr->num_facets(), std::move(labels));
  }
  return GroundSet(poly_num_facets(p));
}

SimplicialComplex coskeleton(const PolytopeType& p, int k) {
  const int d = poly_dim(p);
  if (k < -1 || k > d) throw input_error("coskeleton dimension out of range");
  return coskeleton_from_faces(poly_facet_ground(p), poly_faces_of_dim(p, k));
}

SimplicialComplex coskeleton_by_types(const ProductType& p, int k) {
  const int d = p.dim();
  if (k < -1 || k > d) throw input_error("coskeleton dimension out of range");
  if (k == -1) return SimplicialComplex::empty_complex(GroundSet(p.num_facets()));
  SimplicialComplex out;
  bool first = true;
  for (const std::vector<int>& lambda : p.face_types(k)) {
    SimplicialComplex part = p.cotype_complex(lambda);
    out = first ? std::move(part) : out.union_with(part);
    first = false;
  }
  return out;
}

ProductType as_product(const PolytopeType& p) {
  if (const auto* poly = std::get_if<PolygonType>(&p))
    return ProductType({FactorType{*poly}});
  if (const auto* simp = std::get_if<SimplexType>(&p))
    return ProductType({FactorType{*simp}});
  if (const auto* pr = std::get_if<ProductType>(&p)) return *pr;
  throw input_error("wedge products are not plain products of factors");
}

} // namespace coskel
