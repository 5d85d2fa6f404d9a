#include "coskel/kneser.hpp"

#include <algorithm>
#include <bitset>
#include <cassert>

#include "coskel/errors.hpp"

namespace coskel {

namespace {

constexpr int kHardVertexCap = 256;
using VertexSet = std::bitset<kHardVertexCap>;

struct ExactSolver {
  int n = 0;
  std::vector<VertexSet> adj;
  std::vector<int> degree;
  std::vector<int> color;
  std::vector<int> best_color;
  int best = 0; // best upper bound found so far
  std::int64_t nodes = 0;

  // Saturation = number of distinct colors among colored neighbors.
  int saturation(int v) const {
    VertexSet seen; // colors never exceed the vertex count
    int count = 0;
    for (int u = 0; u < n; ++u) {
      if (!adj[v][u]) continue;
      const int c = color[u];
      if (c >= 0 && !seen[c]) { seen.set(c); ++count; }
    }
    return count;
  }

  // Vertex with maximum (saturation, degree, -index) among uncolored ones.
  int select_vertex() const {
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      const int s = saturation(v);
      if (s > pick_sat || (s == pick_sat && degree[v] > pick_deg)) {
        pick = v;
        pick_sat = s;
        pick_deg = degree[v];
      }
    }
    return pick;
  }

  void search(int colored, int used) {
    if (used >= best) return; // cannot improve
    if (colored == n) {
      best = used;
      best_color = color;
      return;
    }
    ++nodes;
    const int v = select_vertex();
    VertexSet forbidden;
    for (int u = 0; u < n; ++u)
      if (adj[v][u] && color[u] >= 0) forbidden.set(color[u]);
    const int limit = std::min(used + 1, best - 1); // new color breaks symmetry
    for (int c = 0; c < limit; ++c) {
      if (forbidden[c]) continue;
      color[v] = c;
      search(colored + 1, std::max(used, c + 1));
      color[v] = -1;
    }
  }
};

// Greedy clique: repeatedly add the candidate of maximum degree (lowest index
// on ties).  Gives a lower bound and a sound precoloring.
std::vector<int> greedy_clique(const std::vector<VertexSet>& adj,
                               const std::vector<int>& degree, int n) {
  std::vector<int> clique;
  VertexSet cand;
  for (int v = 0; v < n; ++v) cand.set(v);
  while (cand.any()) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (cand[v] && (pick < 0 || degree[v] > degree[pick])) pick = v;
    clique.push_back(pick);
    cand &= adj[pick];
  }
  return clique;
}

// DSATUR greedy coloring for the initial upper bound.
std::vector<int> dsatur_greedy(const std::vector<VertexSet>& adj,
                               const std::vector<int>& degree, int n) {
  std::vector<int> color(n, -1);
  for (int step = 0; step < n; ++step) {
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      VertexSet seen;
      int s = 0;
      for (int u = 0; u < n; ++u)
        if (adj[v][u] && color[u] >= 0 && !seen[color[u]]) {
          seen.set(color[u]);
          ++s;
        }
      if (s > pick_sat || (s == pick_sat && degree[v] > pick_deg)) {
        pick = v;
        pick_sat = s;
        pick_deg = degree[v];
      }
    }
    VertexSet forbidden;
    for (int u = 0; u < n; ++u)
      if (adj[pick][u] && color[u] >= 0) forbidden.set(color[u]);
    int c = 0;
    while (forbidden[c]) ++c;
    color[pick] = c;
  }
  return color;
}

} // namespace

KneserGraph kneser_graph(std::vector<Face> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  KneserGraph g;
  g.vertices = std::move(sets);
  const int n = static_cast<int>(g.vertices.size());
  g.adjacency.assign(static_cast<std::size_t>(n), {});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g.vertices[static_cast<std::size_t>(a)].disjoint_with(
              g.vertices[static_cast<std::size_t>(b)])) {
        g.adjacency[static_cast<std::size_t>(a)].push_back(b);
        g.adjacency[static_cast<std::size_t>(b)].push_back(a);
        ++g.edge_count;
      }
  return g;
}

ColoringResult chromatic_number_exact(const KneserGraph& graph,
                                      const ColoringOptions& opts) {
  const int n = static_cast<int>(graph.vertices.size());
  ColoringResult result;
  if (n == 0) return result; // zero colors for the empty graph
  if (n > opts.budget)
    throw resource_error("exact coloring refused: " + std::to_string(n) +
                         " vertices exceed the budget of " +
                         std::to_string(opts.budget));
  if (n > kHardVertexCap)
    throw resource_error("exact coloring refused: hard cap of 256 vertices");

  ExactSolver s;
  s.n = n;
  s.adj.assign(static_cast<std::size_t>(n), VertexSet{});
  s.degree.assign(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (int u : graph.adjacency[static_cast<std::size_t>(v)])
      s.adj[static_cast<std::size_t>(v)].set(u);
    s.degree[static_cast<std::size_t>(v)] =
        static_cast<int>(graph.adjacency[static_cast<std::size_t>(v)].size());
  }

  const std::vector<int> ub_coloring = dsatur_greedy(s.adj, s.degree, n);
  int ub = 0;
  for (int c : ub_coloring) ub = std::max(ub, c + 1);
  s.best = ub;
  s.best_color = ub_coloring;

  const std::vector<int> clique = greedy_clique(s.adj, s.degree, n);
  const int lb = static_cast<int>(clique.size());

  if (lb < ub) {
    s.color.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < clique.size(); ++i)
      s.color[static_cast<std::size_t>(clique[i])] = static_cast<int>(i);
    // precoloring a clique is sound: colors of a clique can always be renamed
    s.search(lb, lb);
  }

  result.chromatic_number = s.best;
  result.colors = s.best_color;
  result.search_nodes = s.nodes;
  return result;
}

int lovasz_kneser_chi(int n, int ell) {
  if (n < 1 || ell < 1 || ell > n)
    throw input_error("Kneser parameters need 1 <= ell <= n");
  if (2 * ell <= n + 1) return n - 2 * ell + 2;
  return 1;
}

SarkariaDetail sarkaria_index_detail(const SimplicialComplex& k,
                                     const SarkariaOptions& opts) {
  SarkariaDetail out;
  out.ground = k.ground_size();
  const std::vector<Face> nf = k.minimal_non_faces(opts.nonface);
  out.nonface_count = static_cast<std::int64_t>(nf.size());
  const KneserGraph g = kneser_graph(nf);
  out.chromatic_number = chromatic_number_exact(g, opts.coloring).chromatic_number;
  out.sind = out.ground - out.chromatic_number - 1;
  return out;
}

int sarkaria_index(const SimplicialComplex& k, const SarkariaOptions& opts) {
  return sarkaria_index_detail(k, opts).sind;
}

int sind_polygon_coskeleton(int m, int k) {
  if (m < 3) throw input_error("polygon needs at least 3 edges");
  switch (k) {
    case 0: return m % 2 == 0 ? m - 3 : m - 2;
    case 1: return m - 2;
    case 2: return m - 1;
    default: throw input_error("polygon coskeleton index needs k in {0,1,2}");
  }
}

int sind_simplex_coskeleton(int n, int k) {
  if (n < 2) throw input_error("simplex needs at least 2 facets");
  if (k < 0 || k > n - 1) throw input_error("simplex coskeleton index needs 0 <= k <= n-1");
  if (2 * k <= n - 3) return 2 * k + 1;
  if (k <= n - 2) return n - 2;
  return n - 1;
}

} // namespace coskel
