#include "coskel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "coskel/bounds.hpp"
#include "coskel/combinat.hpp"
#include "coskel/engine.hpp"
#include "coskel/errors.hpp"
#include "coskel/kneser.hpp"
#include "coskel/obstructions.hpp"
#include "coskel/polytopes.hpp"
#include "coskel/specparse.hpp"

namespace coskel {

namespace {

// Budgets raised above the defaults: the verify grids include Kneser graphs
// with up to 128 vertices.
SarkariaOptions verify_budget() {
  SarkariaOptions opts;
  opts.coloring.budget = 128;
  return opts;
}

struct Suite {
  std::vector<CheckResult> results;

  // body returns "" on pass, a counterexample string on failure
  void run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    try {
      r.detail = body();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
};

std::string show(const Face& f) { return to_string(f); }

std::string show_faces(const std::vector<Face>& fs) {
  std::string out = "[";
  for (std::size_t i = 0; i < fs.size() && i < 8; ++i) {
    if (i) out += ' ';
    out += show(fs[i]);
  }
  if (fs.size() > 8) out += " ...";
  return out + "]";
}

bool is_antichain_sorted(const std::vector<Face>& fs) {
  if (!std::is_sorted(fs.begin(), fs.end())) return false;
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t b = 0; b < fs.size(); ++b)
      if (a != b && fs[a].subset_of(fs[b])) return false;
  return true;
}

bool is_subcomplex(const SimplicialComplex& inner, const SimplicialComplex& outer) {
  for (const Face& f : inner.facets())
    if (!outer.contains(f)) return false;
  return true;
}

SimplicialComplex random_complex(std::mt19937& rng, int ground_lo, int ground_hi,
                                 int max_generators) {
  std::uniform_int_distribution<int> ground_dist(ground_lo, ground_hi);
  const int m = ground_dist(rng);
  std::uniform_int_distribution<int> count_dist(1, max_generators);
  std::uniform_int_distribution<int> elem_dist(0, m - 1);
  const int gens = count_dist(rng);
  std::vector<Face> generators;
  std::uniform_int_distribution<int> size_dist(0, m);
  for (int g = 0; g < gens; ++g) {
    const int size = size_dist(rng);
    std::vector<int> elems;
    for (int s = 0; s < size; ++s) elems.push_back(elem_dist(rng));
    generators.push_back(Face(std::move(elems)));
  }
  return SimplicialComplex::from_generators(GroundSet(m), std::move(generators));
}

// -------------------------------------------------------------------------
// simplicial_core

void add_simplicial_core(Suite& s) {
  s.run("core.facet_antichain_after_ops", [] {
    std::mt19937 rng(2001);
    for (int it = 0; it < 120; ++it) {
      const SimplicialComplex k = random_complex(rng, 3, 9, 6);
      const SimplicialComplex l = random_complex(rng, 3, 7, 5);
      if (!is_antichain_sorted(k.facets())) return "generators: " + show_faces(k.facets());
      if (!is_antichain_sorted(k.join(l).facets())) return std::string("join broke the antichain");
      const SimplicialComplex l2 = random_complex(rng, k.ground_size(), k.ground_size(), 5);
      if (!is_antichain_sorted(k.union_with(l2).facets())) return std::string("union broke the antichain");
      if (!is_antichain_sorted(k.skeleton(1).facets())) return std::string("skeleton broke the antichain");
    }
    return std::string{};
  });

  s.run("core.join_nonface_law", [] {
    std::mt19937 rng(2002);
    for (int it = 0; it < 80; ++it) {
      const SimplicialComplex k = random_complex(rng, 3, 7, 4);
      const SimplicialComplex l = random_complex(rng, 3, 7, 4);
      std::vector<Face> expected = k.minimal_non_faces();
      for (const Face& f : l.minimal_non_faces())
        expected.push_back(f.shifted(k.ground_size()));
      std::sort(expected.begin(), expected.end());
      const std::vector<Face> got = k.join(l).minimal_non_faces();
      if (got != expected)
        return "join nf mismatch: got " + show_faces(got) + " expected " + show_faces(expected);
    }
    return std::string{};
  });

  s.run("core.skeleton_tower", [] {
    std::mt19937 rng(2003);
    for (int it = 0; it < 60; ++it) {
      const SimplicialComplex k = random_complex(rng, 3, 9, 5);
      for (int j = -1; j < k.dim(); ++j) {
        const SimplicialComplex lo = k.skeleton(j);
        const SimplicialComplex hi = k.skeleton(j + 1);
        if (!is_subcomplex(lo, hi)) return std::string("skeleton tower violated");
        if (lo.dim() > j) return std::string("skeleton dimension exceeds bound");
      }
      if (!(k.skeleton(k.dim()) == k)) return std::string("full skeleton differs");
    }
    return std::string{};
  });

  s.run("core.join_f_vector_convolution", [] {
    std::mt19937 rng(2004);
    for (int it = 0; it < 60; ++it) {
      const SimplicialComplex k = random_complex(rng, 3, 7, 4);
      const SimplicialComplex l = random_complex(rng, 3, 7, 4);
      // augmented vectors include the empty face at index 0
      auto augmented = [](const SimplicialComplex& c) {
        std::vector<std::int64_t> f = c.f_vector();
        f.insert(f.begin(), 1);
        return f;
      };
      const auto fk = augmented(k), fl = augmented(l), fj = augmented(k.join(l));
      std::vector<std::int64_t> conv(fk.size() + fl.size() - 1, 0);
      for (std::size_t a = 0; a < fk.size(); ++a)
        for (std::size_t b = 0; b < fl.size(); ++b)
          conv[a + b] += fk[a] * fl[b];
      while (conv.size() > fj.size() && conv.back() == 0) conv.pop_back();
      if (conv != fj) return std::string("join f-vector is not the convolution");
    }
    return std::string{};
  });

  s.run("core.nonface_soundness", [] {
    std::mt19937 rng(2005);
    for (int it = 0; it < 80; ++it) {
      const SimplicialComplex k = random_complex(rng, 3, 9, 5);
      for (const Face& nf : k.minimal_non_faces()) {
        if (k.contains(nf)) return "declared non-face is a face: " + show(nf);
        for (int v : nf.elements())
          if (!k.contains(nf.without(v)))
            return "non-face is not minimal: " + show(nf);
      }
    }
    return std::string{};
  });

  s.run("core.nonface_paths_agree", [] {
    std::mt19937 rng(2006);
    NonFaceOptions exhaustive;
    exhaustive.exhaustive_ground_limit = 28;
    NonFaceOptions transversal;
    transversal.exhaustive_ground_limit = 0;
    for (int it = 0; it < 80; ++it) {
      const SimplicialComplex k = random_complex(rng, 3, 10, 6);
      if (k.minimal_non_faces(exhaustive) != k.minimal_non_faces(transversal))
        return std::string("exhaustive and transversal paths differ");
    }
    return std::string{};
  });

  s.run("core.nonface_generic_ground", [] {
    // shifting a complex beyond 64 elements forces the generic-set path;
    // the low 64 elements become isolated, so they join as singletons
    std::mt19937 rng(2007);
    for (int it = 0; it < 12; ++it) {
      const SimplicialComplex small = random_complex(rng, 3, 6, 4);
      std::vector<Face> shifted_gens;
      for (const Face& f : small.facets()) shifted_gens.push_back(f.shifted(64));
      const SimplicialComplex big = SimplicialComplex::from_generators(
          GroundSet(64 + small.ground_size()), shifted_gens);
      std::vector<Face> expected;
      for (int i = 0; i < 64; ++i) expected.push_back(Face{i});
      for (const Face& f : small.minimal_non_faces()) expected.push_back(f.shifted(64));
      std::sort(expected.begin(), expected.end());
      if (big.minimal_non_faces() != expected)
        return std::string("generic-ground non-faces differ from the shifted law");
    }
    return std::string{};
  });

  s.run("core.pentagon_vertex_coskeleton_fingerprint", [] {
    const SimplicialComplex k = coskeleton(PolytopeType{PolygonType(5)}, 0);
    const std::vector<std::int64_t> f = k.f_vector();
    if (f != std::vector<std::int64_t>{5, 10, 5})
      return std::string("f-vector differs from (5,10,5)");
    if (k.euler_characteristic() != 0) return std::string("Euler characteristic not 0");
    const std::vector<Face> nf = k.minimal_non_faces();
    if (nf.size() != 5) return std::string("expected 5 minimal non-faces");
    for (const Face& f2 : nf)
      if (f2.size() != 3) return std::string("expected all non-faces of size 3");
    return std::string{};
  });
}

// -------------------------------------------------------------------------
// polytope_types

std::vector<PolytopeType> polytope_suite() {
  std::vector<PolytopeType> out;
  for (int m = 3; m <= 7; ++m) out.push_back(PolygonType(m));
  for (int n = 2; n <= 6; ++n) out.push_back(SimplexType(n));
  out.push_back(ProductType({FactorType{PolygonType(4)}, FactorType{PolygonType(5)}}));
  out.push_back(ProductType({FactorType{PolygonType(3)}, FactorType{PolygonType(3)}, FactorType{PolygonType(5)}}));
  out.push_back(ProductType({FactorType{SimplexType(3)}, FactorType{SimplexType(3)}}));
  out.push_back(ProductType({FactorType{SimplexType(2)}, FactorType{SimplexType(4)}}));
  out.push_back(ProductType({FactorType{PolygonType(4)}, FactorType{SimplexType(3)}}));
  out.push_back(WedgeProductType(3, 2));
  out.push_back(WedgeProductType(4, 2));
  out.push_back(WedgeProductType(4, 3));
  return out;
}

void add_polytope_types(Suite& s) {
  s.run("poly.incidence_poset", [] {
    for (const PolytopeType& p : polytope_suite()) {
      const int d = poly_dim(p);
      const int m = poly_num_facets(p);
      if (poly_faces_of_dim(p, -1) != std::vector<Face>{Face::full(m)})
        return std::string("empty face incidence is not the whole facet set");
      if (poly_faces_of_dim(p, d) != std::vector<Face>{Face{}})
        return std::string("whole-polytope incidence is not empty");
      std::vector<Face> below = poly_faces_of_dim(p, -1);
      for (int k = 0; k <= d; ++k) {
        const std::vector<Face> here = poly_faces_of_dim(p, k);
        if (here.empty()) return "no faces in dimension " + std::to_string(k);
        for (const Face& g : here) {
          const bool has_subface = std::any_of(
              below.begin(), below.end(),
              [&](const Face& f) { return g.subset_of(f); });
          if (!has_subface)
            return "face " + show(g) + " of dim " + std::to_string(k) +
                   " lacks a subface";
        }
        for (const Face& f : below) {
          const bool has_superface = std::any_of(
              here.begin(), here.end(),
              [&](const Face& g) { return g.subset_of(f); });
          if (!has_superface)
            return "face " + show(f) + " of dim " + std::to_string(k - 1) +
                   " lies under no " + std::to_string(k) + "-face";
        }
        below = here;
      }
    }
    return std::string{};
  });

  s.run("poly.coskeleton_tower_and_extremes", [] {
    for (const PolytopeType& p : polytope_suite()) {
      const int d = poly_dim(p);
      const int m = poly_num_facets(p);
      if (!(coskeleton(p, -1) == SimplicialComplex::empty_complex(GroundSet(m))))
        return std::string("coskeleton(-1) is not {empty}");
      if (!(coskeleton(p, d) == SimplicialComplex::full_simplex(GroundSet(m))))
        return std::string("coskeleton(dim) is not the full simplex");
      const SimplicialComplex boundary = coskeleton(p, d - 1);
      if (boundary.dim() != m - 2 ||
          static_cast<int>(boundary.facets().size()) != m)
        return std::string("coskeleton(dim-1) is not the facet-simplex boundary");
      SimplicialComplex prev = coskeleton(p, -1);
      for (int k = 0; k <= d; ++k) {
        const SimplicialComplex cur = coskeleton(p, k);
        if (!is_subcomplex(prev, cur)) return std::string("coskeleton tower violated");
        prev = cur;
      }
    }
    return std::string{};
  });

  s.run("poly.simplex_coskeleton_is_skeleton", [] {
    for (int n = 2; n <= 7; ++n) {
      for (int k = 0; k < n - 1; ++k) {
        const SimplicialComplex c = coskeleton(PolytopeType{SimplexType(n)}, k);
        if (static_cast<std::int64_t>(c.facets().size()) != binomial(n, k + 1))
          return "facet count differs for n=" + std::to_string(n) +
                 " k=" + std::to_string(k);
        for (const Face& f : c.facets())
          if (f.size() != k + 1) return std::string("facet size differs from k+1");
      }
    }
    return std::string{};
  });

  s.run("poly.product_coskeleton_paths_agree", [] {
    std::vector<ProductType> grid;
    for (int a = 3; a <= 6; ++a)
      for (int b = a; b <= 6; ++b)
        grid.push_back(ProductType({FactorType{PolygonType(a)}, FactorType{PolygonType(b)}}));
    for (int n = 2; n <= 4; ++n)
      grid.push_back(ProductType({FactorType{SimplexType(n)}, FactorType{SimplexType(n)}}));
    grid.push_back(ProductType({FactorType{PolygonType(4)}, FactorType{SimplexType(4)}}));
    grid.push_back(ProductType(
        {FactorType{PolygonType(3)}, FactorType{PolygonType(4)}, FactorType{SimplexType(2)}}));
    for (const ProductType& p : grid) {
      if (p.num_facets() > 20) continue;
      for (int k = -1; k <= p.dim(); ++k) {
        if (!(coskeleton(PolytopeType{p}, k) == coskeleton_by_types(p, k)))
          return "paths disagree on " + render_polytope_spec(PolytopeType{p}) +
                 " k=" + std::to_string(k);
      }
    }
    return std::string{};
  });

  s.run("poly.wedge_lattice_matches_oracle", [] {
    for (const auto& [r, n] : {std::pair{3, 2}, {4, 2}, {4, 3}, {5, 3}, {6, 2}}) {
      const WedgeProductType w(r, n);
      for (int k = -1; k <= w.dim(); ++k)
        if (w.faces_of_dim(k) != w.faces_of_dim_oracle(k))
          return "lattice mismatch at W(" + std::to_string(r) + "," +
                 std::to_string(n) + ") k=" + std::to_string(k);
    }
    return std::string{};
  });

  s.run("poly.wedge_vertex_count", [] {
    for (const auto& [r, n] : {std::pair{3, 2}, {4, 2}, {4, 3}, {5, 3}}) {
      const WedgeProductType w(r, n);
      const auto count = static_cast<std::int64_t>(w.faces_of_dim(0).size());
      std::int64_t expected = r;
      for (int i = 0; i < r - 2; ++i) expected *= n;
      if (count != expected)
        return "vertex count " + std::to_string(count) + " at W(" +
               std::to_string(r) + "," + std::to_string(n) + "), expected " +
               std::to_string(expected);
    }
    return std::string{};
  });

  s.run("poly.wedge_special_complex_identity", [] {
    for (const auto& [r, n] : {std::pair{4, 2}, {4, 3}, {5, 3}}) {
      const WedgeProductType w(r, n);
      std::vector<FactorType> fs(static_cast<std::size_t>(r),
                                 FactorType{SimplexType(n)});
      const ProductType simplices(std::move(fs));
      const int kmax = std::min(w.dim() - 1, 4);
      for (int k = 2; k <= kmax; ++k) {
        if (!(w.special_faces_complex(k) == coskeleton(PolytopeType{simplices}, k - 2)))
          return "special-face complex differs from the product coskeleton at "
                 "W(" + std::to_string(r) + "," + std::to_string(n) + ") k=" +
                 std::to_string(k);
      }
    }
    return std::string{};
  });

  s.run("poly.wedge_surface_properties", [] {
    for (const auto& [r, n] : {std::pair{3, 2}, {4, 2}, {4, 3}, {5, 3}, {5, 2}}) {
      const WedgeProductType w(r, n);
      const std::vector<Face> surf = w.surface_faces();
      std::int64_t expected = 2;
      for (int i = 0; i < r - 1; ++i) expected *= n;
      if (static_cast<std::int64_t>(surf.size()) != expected)
        return "surface count differs at W(" + std::to_string(r) + "," +
               std::to_string(n) + ")";
      if (n == 2 && static_cast<std::int64_t>(surf.size()) !=
                        static_cast<std::int64_t>(std::pow(2.0, r)))
        return std::string("digon surface must keep every defect tuple");
      const std::vector<Face> special = w.special_faces(2);
      for (const Face& f : surf) {
        if (!std::binary_search(special.begin(), special.end(), f))
          return std::string("surface face is not a special 2-face");
        if (f.size() != r * n - r)
          return std::string("surface face has the wrong incidence size");
      }
      if (n >= 3 && r >= 4) {
        // the vertex coskeleton of the (r-1)-fold product embeds blockwise
        std::vector<FactorType> fs(static_cast<std::size_t>(r - 1),
                                   FactorType{SimplexType(n)});
        const SimplicialComplex emb =
            coskeleton(PolytopeType{ProductType(std::move(fs))}, 0);
        const SimplicialComplex surface = w.surface_complex();
        for (const Face& f : emb.facets())
          if (!surface.contains(f.shifted(n)))
            return std::string("embedded certificate facet missing from the surface complex");
      }
    }
    return std::string{};
  });
}

// -------------------------------------------------------------------------
// kneser_coloring

void add_kneser_coloring(Suite& s) {
  s.run("kneser.lovasz_grid", [] {
    for (int n = 1; n <= 8; ++n) {
      for (int ell = 1; ell <= n; ++ell) {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
        std::vector<Face> sets;
        for_each_subset_of_size(all, ell, [&](const std::vector<int>& pick) {
          sets.push_back(Face(pick));
        });
        ColoringOptions opts;
        opts.budget = 128;
        const ColoringResult res = chromatic_number_exact(kneser_graph(sets), opts);
        if (res.chromatic_number != lovasz_kneser_chi(n, ell))
          return "chi(KG_{" + std::to_string(n) + "," + std::to_string(ell) +
                 "}) = " + std::to_string(res.chromatic_number) +
                 " differs from the closed form " +
                 std::to_string(lovasz_kneser_chi(n, ell));
      }
    }
    return std::string{};
  });

  s.run("kneser.coloring_witness_proper", [] {
    std::mt19937 rng(3001);
    for (int it = 0; it < 40; ++it) {
      const SimplicialComplex k = random_complex(rng, 4, 9, 5);
      const KneserGraph g = kneser_graph(k.minimal_non_faces());
      ColoringOptions opts;
      opts.budget = 128;
      const ColoringResult res = chromatic_number_exact(g, opts);
      if (static_cast<int>(res.colors.size()) != static_cast<int>(g.vertices.size()))
        return std::string("witness length differs from the vertex count");
      int used = 0;
      for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (res.colors[v] < 0 || res.colors[v] >= res.chromatic_number)
          return std::string("witness color out of range");
        used = std::max(used, res.colors[v] + 1);
        for (int u : g.adjacency[v])
          if (res.colors[static_cast<std::size_t>(u)] == res.colors[v])
            return std::string("witness is not a proper coloring");
      }
      if (used != res.chromatic_number)
        return std::string("witness does not use every color");
    }
    return std::string{};
  });

  s.run("kneser.sind_polygon_closed_form", [] {
    for (int m = 3; m <= 9; ++m)
      for (int k = 0; k <= 2; ++k) {
        const int got = sarkaria_index(coskeleton(PolytopeType{PolygonType(m)}, k),
                                       verify_budget());
        if (got != sind_polygon_coskeleton(m, k))
          return "polygon m=" + std::to_string(m) + " k=" + std::to_string(k) +
                 ": " + std::to_string(got) + " vs closed form " +
                 std::to_string(sind_polygon_coskeleton(m, k));
      }
    return std::string{};
  });

  s.run("kneser.sind_simplex_closed_form", [] {
    for (int n = 2; n <= 7; ++n)
      for (int k = 0; k <= n - 1; ++k) {
        const int got = sarkaria_index(coskeleton(PolytopeType{SimplexType(n)}, k),
                                       verify_budget());
        if (got != sind_simplex_coskeleton(n, k))
          return "simplex n=" + std::to_string(n) + " k=" + std::to_string(k) +
                 ": " + std::to_string(got) + " vs closed form " +
                 std::to_string(sind_simplex_coskeleton(n, k));
      }
    return std::string{};
  });

  s.run("kneser.join_additivity_random", [] {
    std::mt19937 rng(3002);
    int done = 0;
    while (done < 120) {
      const SimplicialComplex k = random_complex(rng, 3, 8, 4);
      const SimplicialComplex l = random_complex(rng, 3, 8, 4);
      const auto nfk = k.minimal_non_faces().size();
      const auto nfl = l.minimal_non_faces().size();
      if (nfk + nfl > 110) continue; // keep the exact solve inside the budget
      ++done;
      const SarkariaOptions opts = verify_budget();
      const int left = sarkaria_index(k.join(l), opts);
      const int right = sarkaria_index(k, opts) + sarkaria_index(l, opts) + 1;
      if (left != right)
        return "join additivity failed: " + std::to_string(left) + " vs " +
               std::to_string(right);
    }
    return std::string{};
  });

  s.run("kneser.cotype_linearity_random", [] {
    std::mt19937 rng(3003);
    const SarkariaOptions opts = verify_budget();
    for (int it = 0; it < 80; ++it) {
      // random product with 2 or 3 small factors, random face type
      std::uniform_int_distribution<int> nfac_dist(2, 3);
      std::uniform_int_distribution<int> pick_dist(0, 4);
      std::vector<FactorType> fs;
      const int nfac = nfac_dist(rng);
      for (int i = 0; i < nfac; ++i) {
        switch (pick_dist(rng)) {
          case 0: fs.push_back(FactorType{PolygonType(3)}); break;
          case 1: fs.push_back(FactorType{PolygonType(4)}); break;
          case 2: fs.push_back(FactorType{PolygonType(5)}); break;
          case 3: fs.push_back(FactorType{SimplexType(2)}); break;
          default: fs.push_back(FactorType{SimplexType(3)}); break;
        }
      }
      const ProductType p(fs);
      std::vector<int> lambda;
      for (const FactorType& f : fs) {
        std::uniform_int_distribution<int> ld(0, factor_dim(f));
        lambda.push_back(ld(rng));
      }
      const int whole = sarkaria_index(p.cotype_complex(lambda), opts);
      int parts = static_cast<int>(fs.size()) - 1;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        const SimplicialComplex ci = SimplicialComplex::from_generators(
            GroundSet(factor_num_facets(fs[i])), [&] {
              std::vector<Face> gens;
              for (const Face& f : factor_faces_of_dim(fs[i], lambda[i]))
                gens.push_back(f.complement_in(factor_num_facets(fs[i])));
              return gens;
            }());
        parts += sarkaria_index(ci, opts);
      }
      if (whole != parts)
        return "cotype linearity failed on " + render_polytope_spec(PolytopeType{p});
    }
    return std::string{};
  });

  s.run("kneser.sind_dimension_cap", [] {
    std::mt19937 rng(3004);
    for (int it = 0; it < 60; ++it) {
      const SimplicialComplex k = random_complex(rng, 3, 9, 5);
      if (sarkaria_index(k, verify_budget()) > 2 * k.dim() + 1)
        return std::string("index exceeded twice the dimension plus one");
    }
    return std::string{};
  });
}

// -------------------------------------------------------------------------
// obstruction_engine

// brute-force threshold: max cotype Sarkaria index + d - m + 2
int brute_threshold(const ProductType& p, int k, const SarkariaOptions& opts) {
  int best = -2;
  for (const std::vector<int>& lambda : p.face_types(k))
    best = std::max(best, sarkaria_index(p.cotype_complex(lambda), opts));
  return best + p.dim() - p.num_facets() + 2;
}

void add_obstruction_engine(Suite& s) {
  s.run("obstruct.polygon_ilp_matches_closed_form", [] {
    for (int r_e = 0; r_e <= 4; ++r_e)
      for (int r_o = (r_e == 0 ? 1 : 0); r_o <= 4; ++r_o)
        for (int m_e : {4, 6})
          for (int m_o : {3, 5, 7}) {
            const int r = r_e + r_o;
            const int m = r_e * m_e + r_o * m_o;
            for (int k = 0; k <= 2 * r; ++k) {
              const KnapsackSolution sol =
                  knapsack_bound(polygon_product_cost_instance(r_e, r_o, k));
              if (!sol.feasible) return std::string("polygon knapsack infeasible");
              const int ilp = m - 1 + static_cast<int>(sol.value);
              const int closed = edim_lower_polygon_products(m, r_e, r_o, k);
              const int mu = m - 1 - polygon_mu_star(r_e, r_o, k);
              if (ilp != closed || closed != mu)
                return "polygon bound mismatch at r_e=" + std::to_string(r_e) +
                       " r_o=" + std::to_string(r_o) + " k=" + std::to_string(k);
            }
          }
    return std::string{};
  });

  s.run("obstruct.simplex_ilp_matches_closed_form", [] {
    for (int n = 2; n <= 6; ++n)
      for (int r = 1; r <= 4; ++r)
        for (int k = 0; k <= r * (n - 1); ++k) {
          const KnapsackSolution sol =
              knapsack_bound(simplex_product_instance(n, r, k));
          if (!sol.feasible) return std::string("simplex knapsack infeasible");
          const int ilp = static_cast<int>(sol.value) + r - 1;
          const int closed = edim_lower_simplex_products(n, r, k);
          if (ilp != closed)
            return "simplex bound mismatch at n=" + std::to_string(n) + " r=" +
                   std::to_string(r) + " k=" + std::to_string(k) + ": ilp " +
                   std::to_string(ilp) + " closed " + std::to_string(closed);
        }
    return std::string{};
  });

  s.run("obstruct.lower_at_most_upper", [] {
    for (int r_e = 0; r_e <= 3; ++r_e)
      for (int r_o = (r_e == 0 ? 1 : 0); r_o <= 3; ++r_o) {
        const int r = r_e + r_o;
        const int m = 4 * r_e + 5 * r_o;
        for (int k = 0; k < 2 * r; ++k)
          if (edim_lower_polygon_products(m, r_e, r_o, k) >
              edim_upper_polygon_products(m, r, r_e, k))
            return std::string("polygon lower bound exceeds the upper bound");
      }
    for (int n = 2; n <= 6; ++n)
      for (int r = 1; r <= 4; ++r)
        for (int k = 0; k <= r * (n - 1); ++k)
          if (edim_lower_simplex_products(n, r, k) >
              edim_upper_simplex_products(n, r, k))
            return std::string("simplex lower bound exceeds the upper bound");
    return std::string{};
  });

  s.run("obstruct.three_paths_polygon_products", [] {
    const SarkariaOptions opts = verify_budget();
    std::vector<std::vector<int>> size_lists;
    for (int a = 3; a <= 6; ++a) {
      size_lists.push_back({a});
      for (int b = a; b <= 6; ++b) {
        size_lists.push_back({a, b});
        for (int c = b; c <= 6; ++c) size_lists.push_back({a, b, c});
      }
    }
    for (const std::vector<int>& sizes : size_lists) {
      std::vector<FactorType> fs;
      int r_e = 0, r_o = 0, m = 0;
      for (int sz : sizes) {
        fs.push_back(FactorType{PolygonType(sz)});
        (sz % 2 == 1 ? r_o : r_e) += 1;
        m += sz;
      }
      const ProductType p(fs);
      const int r = static_cast<int>(sizes.size());
      for (int k = 0; k < 2 * r; ++k) {
        const int closed = *obstruct_polygon_products(r_e, r_o, k, 0).threshold_e;
        const KnapsackSolution sol =
            knapsack_bound(polygon_product_cost_instance(r_e, r_o, k));
        const int ilp = (m - 1 + static_cast<int>(sol.value)) + 2 * r - m + 2;
        const int brute = brute_threshold(p, k, opts);
        if (closed != ilp || ilp != brute)
          return "thresholds differ on " + render_polytope_spec(PolytopeType{p}) +
                 " k=" + std::to_string(k) + ": closed " + std::to_string(closed) +
                 " ilp " + std::to_string(ilp) + " brute " + std::to_string(brute);
      }
    }
    return std::string{};
  });

  s.run("obstruct.three_paths_simplex_products", [] {
    const SarkariaOptions opts = verify_budget();
    for (int n = 2; n <= 5; ++n)
      for (int r = 1; r <= 3; ++r) {
        std::vector<FactorType> fs(static_cast<std::size_t>(r),
                                   FactorType{SimplexType(n)});
        const ProductType p(fs);
        for (int k = 0; k < r * (n - 1); ++k) {
          const ObstructionCertificate cert = obstruct_simplex_products(n, r, k, 0);
          const KnapsackSolution sol = knapsack_bound(simplex_product_instance(n, r, k));
          const int ilp = (static_cast<int>(sol.value) + r - 1) + r * (n - 1) - r * n + 2;
          const int brute = brute_threshold(p, k, opts);
          if (*cert.threshold_e != ilp || ilp != brute)
            return "thresholds differ on " + render_polytope_spec(PolytopeType{p}) +
                   " k=" + std::to_string(k);
        }
      }
    return std::string{};
  });

  s.run("obstruct.three_paths_wedges", [] {
    const EngineOptions opts{verify_budget()};
    for (const auto& [r, n] : {std::pair{4, 2}, {4, 3}, {5, 3}, {6, 3}}) {
      const WedgeProductType w(r, n);
      const int kmax = std::min(w.dim() - 1, 6);
      for (int k = 0; k <= kmax; ++k) {
        Query q{"wedge:" + std::to_string(r) + "," + std::to_string(n),
                Target::skeleton, k, 2, Mode::all};
        const Report rep = run_query(q, opts); // throws on disagreement
        if (!rep.agreement) return std::string("skeleton paths disagree");
      }
      for (int k = 2; k <= kmax; ++k) {
        Query q{"wedge:" + std::to_string(r) + "," + std::to_string(n),
                Target::special_faces, k, 2, Mode::all};
        if (!run_query(q, opts).agreement)
          return std::string("special-face paths disagree");
      }
      Query q{"wedge:" + std::to_string(r) + "," + std::to_string(n),
              Target::surface, std::nullopt, 2, Mode::all};
      if (!run_query(q, opts).agreement) return std::string("surface paths disagree");
    }
    return std::string{};
  });

  s.run("obstruct.wedge_piecewise_matches_certificate", [] {
    for (int r = 4; r <= 7; ++r)
      for (int n = 2; n <= 5; ++n)
        for (int k = 2; k < r * (n - 1) + 2; ++k) {
          const int direct = wedge_special_threshold(r, n, k);
          const int derived = edim_lower_simplex_products(n, r, k - 2) - r + 4;
          if (direct != derived)
            return "piecewise form differs at r=" + std::to_string(r) + " n=" +
                   std::to_string(n) + " k=" + std::to_string(k);
        }
    return std::string{};
  });

  s.run("obstruct.threshold_monotone_in_k", [] {
    for (int r_e = 0; r_e <= 3; ++r_e)
      for (int r_o = (r_e == 0 ? 1 : 0); r_o <= 3; ++r_o) {
        const int r = r_e + r_o;
        for (int k = 0; k + 1 < 2 * r; ++k)
          if (*obstruct_polygon_products(r_e, r_o, k, 0).threshold_e >
              *obstruct_polygon_products(r_e, r_o, k + 1, 0).threshold_e)
            return std::string("polygon threshold is not monotone in k");
      }
    for (int n = 2; n <= 6; ++n)
      for (int r = 1; r <= 4; ++r)
        for (int k = 0; k + 1 < r * (n - 1); ++k)
          if (*obstruct_simplex_products(n, r, k, 0).threshold_e >
              *obstruct_simplex_products(n, r, k + 1, 0).threshold_e)
            return std::string("simplex threshold is not monotone in k");
    for (int r = 4; r <= 7; ++r)
      for (int n = 2; n <= 4; ++n)
        for (int k = 0; k + 1 < r * (n - 1) + 2; ++k)
          if (*obstruct_wedge_skeleton(r, n, k, 0).threshold_e >
              *obstruct_wedge_skeleton(r, n, k + 1, 0).threshold_e)
            return std::string("wedge threshold is not monotone in k");
    return std::string{};
  });

  s.run("obstruct.certificates_consistent", [] {
    for (int r_e = 0; r_e <= 3; ++r_e)
      for (int r_o = (r_e == 0 ? 1 : 0); r_o <= 3; ++r_o)
        for (int k = 0; k < 2 * (r_e + r_o); ++k)
          for (int e = 0; e <= 8; ++e)
            if (!certificate_consistent(obstruct_polygon_products(r_e, r_o, k, e)))
              return std::string("polygon certificate inconsistent");
    for (int n = 2; n <= 5; ++n)
      for (int r = 1; r <= 3; ++r)
        for (int k = 0; k < r * (n - 1); ++k)
          for (int e = 0; e <= 8; ++e)
            if (!certificate_consistent(obstruct_simplex_products(n, r, k, e)))
              return std::string("simplex certificate inconsistent");
    for (int r = 3; r <= 6; ++r)
      for (int n = 2; n <= 4; ++n) {
        for (int k = 0; k < r * (n - 1) + 2; ++k)
          for (int e = 0; e <= 8; ++e)
            if (!certificate_consistent(obstruct_wedge_skeleton(r, n, k, e)))
              return std::string("wedge skeleton certificate inconsistent");
        for (int e = 0; e <= 8; ++e)
          if (!certificate_consistent(obstruct_wedge_surface(r, n, e)))
            return std::string("wedge surface certificate inconsistent");
      }
    return std::string{};
  });

  s.run("obstruct.van_kampen_flores_specialization", [] {
    for (int k = 0; k <= 4; ++k)
      for (int e = 0; e <= 12; ++e) {
        const bool direct = van_kampen_flores(k, e);
        const bool derived =
            obstruct_simplex_products(2 * k + 3, 1, k, e).obstructed;
        if (direct != derived)
          return "VKF mismatch at k=" + std::to_string(k) + " e=" + std::to_string(e);
      }
    return std::string{};
  });

  s.run("obstruct.neighborly_even_e_matches_threshold", [] {
    for (int r_e = 0; r_e <= 4; ++r_e)
      for (int r_o = (r_e == 0 ? 1 : 0); r_o <= 4; ++r_o)
        for (int e = 2; e <= 10; e += 2) {
          const int k = e / 2 - 1;
          if (k >= 2 * (r_e + r_o)) continue;
          const bool corollary = obstruct_neighborly_polygons(r_e, r_o, e).obstructed;
          const bool threshold = obstruct_polygon_products(r_e, r_o, k, e).obstructed;
          if (corollary != threshold)
            return "neighborly corollary differs from the threshold at r_e=" +
                   std::to_string(r_e) + " r_o=" + std::to_string(r_o) +
                   " e=" + std::to_string(e);
        }
    return std::string{};
  });

  s.run("obstruct.knapsack_reference_points", [] {
    {
      const KnapsackSolution sol = knapsack_bound(simplex_product_instance(3, 2, 0));
      if (!sol.feasible || sol.value != 2 ||
          sol.multiplicities != std::vector<int>{2, 0, 0})
        return std::string("two-triangle instance differs");
    }
    {
      const KnapsackSolution sol =
          knapsack_bound(polygon_product_cost_instance(0, 2, 0));
      if (!sol.feasible || -sol.value != 2)
        return std::string("two-odd-polygon instance differs");
    }
    {
      // a single factor with k = dim is the forced top class
      const KnapsackSolution sol = knapsack_bound(simplex_product_instance(4, 1, 3));
      if (!sol.feasible || sol.multiplicities != std::vector<int>{0, 0, 0, 1})
        return std::string("single-factor top instance differs");
    }
    {
      KnapsackInstance inst; // infeasible on purpose: odd weight, even-only classes
      inst.total_count = 1;
      inst.total_weight = 1;
      inst.classes = {KnapsackClass{"w2", 1, 2, 1}};
      if (knapsack_bound(inst).feasible)
        return std::string("infeasible instance reported feasible");
    }
    return std::string{};
  });
}

// -------------------------------------------------------------------------
// cli_reports

void add_cli_reports(Suite& s) {
  s.run("cli.spec_round_trip", [] {
    const std::vector<std::string> specs = {
        "polygon:3", "polygon:17", "simplex:2", "simplex:9",
        "product:(polygon:4,polygon:5)", "product:(simplex:3,simplex:3)",
        "product:(polygon:3,simplex:4,polygon:6)", "wedge:3,2", "wedge:5,4"};
    for (const std::string& text : specs) {
      const PolytopeType p = parse_polytope_spec(text);
      if (render_polytope_spec(p) != text)
        return "render differs for '" + text + "'";
      if (!(parse_polytope_spec(render_polytope_spec(p)) == p))
        return "round trip differs for '" + text + "'";
    }
    return std::string{};
  });

  s.run("cli.parse_errors_carry_position", [] {
    const std::vector<std::string> bad = {
        "",          "polygon:",        "polygon:2",          "simplex:1",
        "wedge:2,2", "wedge:4",         "product:()",         "product:(wedge:4,2)",
        "gon:5",     "polygon:5extra",  "product:(polygon:4", "polygon:99999999"};
    for (const std::string& text : bad) {
      try {
        parse_polytope_spec(text);
        return "accepted malformed spec '" + text + "'";
      } catch (const input_error&) {
        // expected
      }
    }
    return std::string{};
  });

  s.run("cli.target_round_trip", [] {
    const std::vector<std::string> targets = {"skeleton:0", "skeleton:12",
                                              "special:3", "surface", "neighborly"};
    for (const std::string& t : targets) {
      const auto [target, k] = parse_target(t);
      if (render_target(target, k) != t) return "target round trip differs for " + t;
    }
    for (const std::string& bad : {"skeleton", "skeleton:", "skeleton:x", "faces:2"}) {
      try {
        parse_target(bad);
        return "accepted malformed target '" + bad + "'";
      } catch (const input_error&) {
      }
    }
    return std::string{};
  });

  s.run("cli.report_deterministic", [] {
    const Query q{"product:(polygon:5,polygon:5)", Target::skeleton, 0, 2, Mode::all};
    const std::string a = report_to_json(run_query(q)).dump(2);
    const std::string b = report_to_json(run_query(q)).dump(2);
    if (a != b) return std::string("two runs produced different reports");
    return std::string{};
  });

  s.run("cli.report_round_trip", [] {
    const std::vector<Query> queries = {
        {"product:(polygon:5,polygon:5)", Target::skeleton, 0, 2, Mode::all},
        {"product:(simplex:3,simplex:3)", Target::skeleton, 0, 3, Mode::all},
        {"wedge:4,3", Target::surface, std::nullopt, 4, Mode::all},
        {"wedge:3,2", Target::surface, std::nullopt, 4, Mode::all},
        {"product:(polygon:4,polygon:4,polygon:4)", Target::neighborly,
         std::nullopt, 4, Mode::closed_form},
        {"product:(polygon:4,simplex:3)", Target::skeleton, 1, 3, Mode::all},
    };
    for (const Query& q : queries) {
      const nlohmann::ordered_json j = report_to_json(run_query(q));
      const nlohmann::ordered_json j2 = report_to_json(report_from_json(j));
      if (j.dump() != j2.dump())
        return "serialization round trip differs for " + q.spec;
    }
    return std::string{};
  });

  s.run("cli.mode_requests_respected", [] {
    const Query closed{"product:(polygon:5,polygon:5)", Target::skeleton, 0, 2,
                       Mode::closed_form};
    const Report rep = run_query(closed);
    if (!rep.closed_form.ran || rep.ilp.ran || rep.brute_force.ran)
      return std::string("single-mode query ran extra paths");
    try {
      run_query(Query{"product:(polygon:4,simplex:3)", Target::skeleton, 0, 2,
                      Mode::closed_form});
      return std::string("closed form accepted a mixed product");
    } catch (const input_error&) {
    }
    return std::string{};
  });
}

} // namespace

std::vector<CheckResult> verify_suite(const std::string& scope) {
  Suite s;
  bool known = false;
  const bool all = scope == "all";
  if (all || scope == "simplicial_core") { add_simplicial_core(s); known = true; }
  if (all || scope == "polytope_types") { add_polytope_types(s); known = true; }
  if (all || scope == "kneser_coloring") { add_kneser_coloring(s); known = true; }
  if (all || scope == "obstruction_engine") { add_obstruction_engine(s); known = true; }
  if (all || scope == "cli_reports") { add_cli_reports(s); known = true; }
  if (!known)
    throw input_error("unknown verify scope '" + scope +
                      "' (expected all, simplicial_core, polytope_types, "
                      "kneser_coloring, obstruction_engine or cli_reports)");
  return s.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

} // namespace coskel
