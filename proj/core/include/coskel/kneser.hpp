#pragma once

#include <cstdint>
#include <vector>

#include "coskel/complex.hpp"
#include "coskel/face.hpp"

namespace coskel {

// Kneser graph of a set system: one vertex per set, edges between disjoint
// sets.  Vertex order is the canonical sorted order of the input sets.
struct KneserGraph {
  std::vector<Face> vertices;
  std::vector<std::vector<int>> adjacency; // sorted neighbor lists
  std::int64_t edge_count = 0;
};

KneserGraph kneser_graph(std::vector<Face> sets);

// Exact chromatic number via DSATUR branch and bound with a greedy-clique
// lower bound.  Deterministic: fixed tie-breaking, no randomness.  budget
// guards the exact solve (resource_error above it); 256 is a hard cap.
struct ColoringOptions {
  int budget = 64;
};

struct ColoringResult {
  int chromatic_number = 0;
  std::vector<int> colors;       // proper, uses exactly chromatic_number colors
  std::int64_t search_nodes = 0; // branch-and-bound nodes expanded
};

ColoringResult chromatic_number_exact(const KneserGraph& graph,
                                      const ColoringOptions& opts = {});

// χ(KG_{n,ℓ}) = n - 2ℓ + 2 when 2ℓ <= n + 1, and 1 otherwise (the graph has
// no edges when ℓ > n/2; singleton convention: one color).
int lovasz_kneser_chi(int n, int ell);

// Sarkaria bound data for a complex on m ground elements:
// sind = m - χ(KG(minimal non-faces)) - 1.  A complex with no non-faces
// (the full simplex) has a zero-vertex Kneser graph, χ = 0, sind = m - 1.
struct SarkariaOptions {
  NonFaceOptions nonface;
  ColoringOptions coloring;
};

struct SarkariaDetail {
  int ground = 0;
  std::int64_t nonface_count = 0;
  int chromatic_number = 0;
  int sind = 0;
};

SarkariaDetail sarkaria_index_detail(const SimplicialComplex& k,
                                     const SarkariaOptions& opts = {});
int sarkaria_index(const SimplicialComplex& k, const SarkariaOptions& opts = {});

// Closed forms for coskeleta of a single polygon and a single simplex.
// Polygon, k = 0: m - 3 for even m, m - 2 for odd m; k = 1: m - 2;
// k = 2: m - 1 (full simplex).
int sind_polygon_coskeleton(int m, int k);
// Simplex on n facets: 2k + 1 for 2k <= n - 3; n - 2 for larger k < n - 1;
// n - 1 at k = n - 1.
int sind_simplex_coskeleton(int n, int k);

} // namespace coskel
