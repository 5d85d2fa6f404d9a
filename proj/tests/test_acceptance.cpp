// Acceptance gate: eight end-to-end criteria, one printed line each.
// Exit code 0 only if every criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "coskel/bounds.hpp"
#include "coskel/combinat.hpp"
#include "coskel/engine.hpp"
#include "coskel/errors.hpp"
#include "coskel/kneser.hpp"
#include "coskel/obstructions.hpp"
#include "coskel/polytopes.hpp"
#include "coskel/verify.hpp"

using namespace coskel;

namespace {

SarkariaOptions wide_budget() {
  SarkariaOptions opts;
  opts.coloring.budget = 128;
  return opts;
}

EngineOptions wide_engine() { return EngineOptions{wide_budget()}; }

SimplicialComplex random_complex(std::mt19937& rng, int ground_lo, int ground_hi,
                                 int max_generators) {
  std::uniform_int_distribution<int> ground_dist(ground_lo, ground_hi);
  const int m = ground_dist(rng);
  std::uniform_int_distribution<int> count_dist(1, max_generators);
  std::uniform_int_distribution<int> elem_dist(0, m - 1);
  std::uniform_int_distribution<int> size_dist(0, m);
  std::vector<Face> generators;
  for (int g = count_dist(rng); g > 0; --g) {
    std::vector<int> elems;
    for (int s = size_dist(rng); s > 0; --s) elems.push_back(elem_dist(rng));
    generators.push_back(Face(std::move(elems)));
  }
  return SimplicialComplex::from_generators(GroundSet(m), std::move(generators));
}

// quick verdict helper; expect_* are what the run must produce
std::string check_verdict(const std::string& spec, Target target,
                          std::optional<int> k, int e, bool expect_obstructed) {
  Query q;
  q.spec = spec;
  q.target = target;
  q.k = k;
  q.e = e;
  const auto start = std::chrono::steady_clock::now();
  const Report rep = run_query(q, wide_engine());
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 10.0)
    return spec + " took " + std::to_string(secs) + "s";
  if (!rep.agreement) return spec + ": paths disagree";
  if (!rep.obstructed.has_value()) return spec + ": no verdict";
  if (*rep.obstructed != expect_obstructed)
    return spec + " e=" + std::to_string(e) + ": expected " +
           (expect_obstructed ? "obstructed" : "not obstructed");
  return {};
}

} // namespace

int main() {
  int failed = 0;
  const auto criterion = [&](int num, const std::string& label,
                             const std::function<std::string()>& body) {
    std::string detail;
    try {
      detail = body();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
      std::cout << "PASS criterion " << num << ": " << label << "\n";
    } else {
      ++failed;
      std::cout << "FAIL criterion " << num << ": " << label << " [" << detail
                << "]\n";
    }
  };

  criterion(1, "polygon coskeleton indices match the closed form (m=3..9, k=0..2)",
            []() -> std::string {
    for (int m = 3; m <= 9; ++m)
      for (int k = 0; k <= 2; ++k) {
        const int brute = sarkaria_index(
            coskeleton(PolytopeType{PolygonType(m)}, k), wide_budget());
        const int closed = sind_polygon_coskeleton(m, k);
        if (brute != closed)
          return "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " +
                 std::to_string(brute) + " vs " + std::to_string(closed);
      }
    return {};
  });

  criterion(2, "simplex coskeleton indices (n=2..7) and the Kneser grid (n<=8)",
            []() -> std::string {
    for (int n = 2; n <= 7; ++n)
      for (int k = 0; k <= n - 1; ++k) {
        const int brute = sarkaria_index(
            coskeleton(PolytopeType{SimplexType(n)}, k), wide_budget());
        const int closed = sind_simplex_coskeleton(n, k);
        if (brute != closed)
          return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                 std::to_string(brute) + " vs " + std::to_string(closed);
      }
    for (int n = 1; n <= 8; ++n)
      for (int ell = 1; ell <= n; ++ell) {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
        std::vector<Face> sets;
        for_each_subset_of_size(all, ell, [&](const std::vector<int>& pick) {
          sets.push_back(Face(pick));
        });
        ColoringOptions opts;
        opts.budget = 128;
        const int exact = chromatic_number_exact(kneser_graph(sets), opts).chromatic_number;
        if (exact != lovasz_kneser_chi(n, ell))
          return "KG(" + std::to_string(n) + "," + std::to_string(ell) + "): " +
                 std::to_string(exact) + " vs " +
                 std::to_string(lovasz_kneser_chi(n, ell));
      }
    return {};
  });

  criterion(3, "200 randomized join-additivity and cotype-linearity cases",
            []() -> std::string {
    const SarkariaOptions opts = wide_budget();
    std::mt19937 rng(900);
    int done = 0;
    while (done < 120) { // join additivity on grounds up to 16
      const SimplicialComplex k = random_complex(rng, 3, 8, 4);
      const SimplicialComplex l = random_complex(rng, 3, 8, 4);
      if (k.minimal_non_faces().size() + l.minimal_non_faces().size() > 110) continue;
      ++done;
      if (sarkaria_index(k.join(l), opts) !=
          sarkaria_index(k, opts) + sarkaria_index(l, opts) + 1)
        return "join additivity failed at case " + std::to_string(done);
    }
    std::uniform_int_distribution<int> nfac_dist(2, 3);
    std::uniform_int_distribution<int> pick_dist(0, 3);
    for (int it = 0; it < 80; ++it) { // cotype linearity on grounds up to 15
      std::vector<FactorType> fs;
      for (int i = nfac_dist(rng); i > 0; --i) {
        switch (pick_dist(rng)) {
          case 0: fs.push_back(FactorType{PolygonType(3)}); break;
          case 1: fs.push_back(FactorType{PolygonType(5)}); break;
          case 2: fs.push_back(FactorType{SimplexType(3)}); break;
          default: fs.push_back(FactorType{SimplexType(4)}); break;
        }
      }
      const ProductType p(fs);
      std::vector<int> lambda;
      for (const FactorType& f : fs) {
        std::uniform_int_distribution<int> ld(0, factor_dim(f));
        lambda.push_back(ld(rng));
      }
      int parts = static_cast<int>(fs.size()) - 1;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        std::vector<Face> gens;
        for (const Face& f : factor_faces_of_dim(fs[i], lambda[i]))
          gens.push_back(f.complement_in(factor_num_facets(fs[i])));
        parts += sarkaria_index(SimplicialComplex::from_generators(
                                    GroundSet(factor_num_facets(fs[i])), gens),
                                opts);
      }
      if (sarkaria_index(p.cotype_complex(lambda), opts) != parts)
        return "cotype linearity failed at case " + std::to_string(it);
    }
    return {};
  });

  criterion(4, "closed form, integer program and explicit search agree on the grids",
            []() -> std::string {
    const EngineOptions opts = wide_engine();
    std::vector<std::vector<int>> size_lists;
    for (int a = 3; a <= 6; ++a) {
      size_lists.push_back({a});
      for (int b = a; b <= 6; ++b) {
        size_lists.push_back({a, b});
        for (int c = b; c <= 6; ++c) size_lists.push_back({a, b, c});
      }
    }
    for (const std::vector<int>& sizes : size_lists) {
      std::string spec = "product:(";
      for (std::size_t i = 0; i < sizes.size(); ++i)
        spec += (i ? ",polygon:" : "polygon:") + std::to_string(sizes[i]);
      spec += ")";
      if (sizes.size() == 1) spec = "polygon:" + std::to_string(sizes[0]);
      for (int k = 0; k < 2 * static_cast<int>(sizes.size()); ++k) {
        Query q;
        q.spec = spec;
        q.target = Target::skeleton;
        q.k = k;
        q.e = 0;
        const Report rep = run_query(q, opts); // throws on any disagreement
        if (!rep.closed_form.ran || !rep.ilp.ran || !rep.brute_force.ran)
          return spec + " k=" + std::to_string(k) + ": a path did not run";
        if (!rep.agreement) return spec + ": paths disagree";
      }
    }
    for (int n = 2; n <= 5; ++n)
      for (int r = 1; r <= 3; ++r) {
        std::string spec;
        if (r == 1) {
          spec = "simplex:" + std::to_string(n);
        } else {
          spec = "product:(";
          for (int i = 0; i < r; ++i)
            spec += (i ? ",simplex:" : "simplex:") + std::to_string(n);
          spec += ")";
        }
        for (int k = 0; k < r * (n - 1); ++k) {
          Query q;
          q.spec = spec;
          q.target = Target::skeleton;
          q.k = k;
          q.e = 0;
          const Report rep = run_query(q, opts);
          if (!rep.closed_form.ran || !rep.ilp.ran || !rep.brute_force.ran)
            return spec + " k=" + std::to_string(k) + ": a path did not run";
          if (!rep.agreement) return spec + ": paths disagree";
        }
      }
    return {};
  });

  criterion(5, "canonical verdicts resolve correctly and quickly",
            []() -> std::string {
    // (a) two odd polygons, vertices, the plane
    std::string s = check_verdict("product:(polygon:3,polygon:5)",
                                  Target::skeleton, 0, 2, true);
    if (!s.empty()) return s;
    // (b) five odd polygons, vertices, e = r
    s = check_verdict("product:(polygon:3,polygon:3,polygon:3,polygon:3,polygon:3)",
                      Target::skeleton, 0, 5, true);
    if (!s.empty()) return s;
    // (c) two triangles, vertices
    s = check_verdict("product:(simplex:3,simplex:3)", Target::skeleton, 0, 2, true);
    if (!s.empty()) return s;
    s = check_verdict("product:(simplex:3,simplex:3)", Target::skeleton, 0, 3, false);
    if (!s.empty()) return s;
    // (d) segment times tetrahedron-facet simplex, edge skeleton, the plane
    {
      Query q;
      q.spec = "product:(simplex:2,simplex:3)";
      q.target = Target::skeleton;
      q.k = 1;
      q.e = 2;
      const Report rep = run_query(q, wide_engine());
      if (rep.obstructed != true) return "mixed product verdict wrong";
      if (rep.brute_force.face_type != std::vector<int>{1, 0})
        return "mixed product certificate cotype wrong";
      const ProductType p({FactorType{SimplexType(2)}, FactorType{SimplexType(3)}});
      if (sarkaria_index(p.cotype_complex({1, 0}), wide_budget()) != 3)
        return "certificate cotype index is not 3";
    }
    // (e) single simplexes across the flores family
    for (int k = 0; k <= 3; ++k) {
      const std::string spec = "simplex:" + std::to_string(2 * k + 3);
      s = check_verdict(spec, Target::skeleton, k, 2 * k + 1, true);
      if (!s.empty()) return s;
      s = check_verdict(spec, Target::skeleton, k, 2 * k + 2, false);
      if (!s.empty()) return s;
      if (!van_kampen_flores(k, 2 * k + 1) || van_kampen_flores(k, 2 * k + 2))
        return "flores predicate disagrees at k=" + std::to_string(k);
    }
    // (f) wedge surfaces
    for (int r = 4; r <= 6; ++r)
      for (int n = 3; n <= 4; ++n) {
        const std::string spec =
            "wedge:" + std::to_string(r) + "," + std::to_string(n);
        s = check_verdict(spec, Target::surface, std::nullopt, r, true);
        if (!s.empty()) return s;
        s = check_verdict(spec, Target::surface, std::nullopt, r + 1, false);
        if (!s.empty()) return s;
      }
    // (g) digon wedges have no surface certificate
    for (int r = 4; r <= 6; ++r) {
      Query q;
      q.spec = "wedge:" + std::to_string(r) + ",2";
      q.target = Target::surface;
      q.e = 4;
      const Report rep = run_query(q, wide_engine());
      if (rep.obstruction_available) return q.spec + ": expected no certificate";
      if (rep.obstructed != false) return q.spec + ": verdict must default to no";
    }
    return {};
  });

  criterion(6, "pentagon vertex coskeleton fingerprint", []() -> std::string {
    const SimplicialComplex k = coskeleton(PolytopeType{PolygonType(5)}, 0);
    if (k.f_vector() != std::vector<std::int64_t>{5, 10, 5}) return "f-vector";
    if (k.euler_characteristic() != 0) return "euler characteristic";
    const std::vector<Face> nf = k.minimal_non_faces();
    if (nf.size() != 5) return "non-face count";
    for (const Face& f : nf)
      if (f.size() != 3) return "non-face size";
    return {};
  });

  criterion(7, "wedge combinatorics: vertices, surface counts, special complexes",
            []() -> std::string {
    for (const auto& [r, n] : {std::pair{3, 2}, {4, 2}, {4, 3}, {5, 3}}) {
      const WedgeProductType w(r, n);
      std::int64_t vertices = r;
      for (int i = 0; i < r - 2; ++i) vertices *= n;
      if (static_cast<std::int64_t>(w.faces_of_dim(0).size()) != vertices)
        return "vertex count at wedge:" + std::to_string(r) + "," + std::to_string(n);
      std::int64_t surface = 2;
      for (int i = 0; i < r - 1; ++i) surface *= n;
      if (static_cast<std::int64_t>(w.surface_faces().size()) != surface)
        return "surface count at wedge:" + std::to_string(r) + "," + std::to_string(n);
    }
    for (const auto& [r, n] : {std::pair{4, 2}, {4, 3}}) {
      const WedgeProductType w(r, n);
      std::vector<FactorType> fs(static_cast<std::size_t>(r), FactorType{SimplexType(n)});
      const PolytopeType product{ProductType(std::move(fs))};
      for (int k = 2; k <= 4; ++k)
        if (!(w.special_faces_complex(k) == coskeleton(product, k - 2)))
          return "special complex at wedge:" + std::to_string(r) + "," +
                 std::to_string(n) + " k=" + std::to_string(k);
    }
    return {};
  });

  criterion(8, "full self-check suite", []() -> std::string {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<CheckResult> results = verify_suite("all");
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 600.0) return "suite took " + std::to_string(secs) + "s";
    for (const CheckResult& r : results)
      if (!r.passed) return r.name + ": " + r.detail;
    return {};
  });

  if (failed != 0) {
    std::cout << failed << " criteria failed\n";
    return 1;
  }
  return 0;
}
