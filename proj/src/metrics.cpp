#include "rama/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace rama {

namespace {

constexpr std::uint32_t kUnvisited = UINT32_MAX;

}  // namespace

std::vector<std::uint32_t> bfs_distances(const CayleyGraph& g,
                                         std::uint32_t root,
                                         std::uint32_t stop_at) {
  if (root >= g.n) throw std::invalid_argument("bfs: root out of range");
  std::vector<std::uint32_t> dist(g.n, kUnvisited);
  // flat frontier arrays, no per-vertex allocation
  std::vector<std::uint32_t> frontier, next;
  frontier.reserve(1024);
  next.reserve(1024);
  dist[root] = 0;
  frontier.push_back(root);
  std::uint32_t level = 0;
  while (!frontier.empty()) {
    if (stop_at != kUnvisited && dist[stop_at] != kUnvisited) break;
    ++level;
    next.clear();
    for (std::uint32_t u : frontier) {
      for (std::uint32_t w : g.row(u)) {
        if (dist[w] == kUnvisited) {
          dist[w] = level;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

LevelProfile bfs_levels(const CayleyGraph& g, std::uint32_t root) {
  auto dist = bfs_distances(g, root);
  LevelProfile lp;
  lp.root = root;
  std::uint32_t ecc = 0;
  for (std::uint32_t d : dist)
    if (d != kUnvisited) ecc = std::max(ecc, d);
  lp.eccentricity = ecc;
  lp.counts.assign(ecc + 1, 0);
  for (std::uint32_t d : dist)
    if (d != kUnvisited) ++lp.counts[d];
  return lp;
}

std::uint32_t eccentricity(const CayleyGraph& g, std::uint32_t root) {
  auto dist = bfs_distances(g, root);
  std::uint32_t ecc = 0;
  for (std::uint32_t d : dist) {
    if (d == kUnvisited)
      throw std::invalid_argument("eccentricity: graph not connected");
    ecc = std::max(ecc, d);
  }
  return ecc;
}

std::uint32_t diameter(const CayleyGraph& g) { return eccentricity(g, 0); }

std::uint32_t diameter_exhaustive(const CayleyGraph& g) {
  std::uint32_t d = 0;
  for (std::uint64_t v = 0; v < g.n; ++v)
    d = std::max(d, eccentricity(g, static_cast<std::uint32_t>(v)));
  return d;
}

std::uint32_t girth(const CayleyGraph& g) {
  if (g.n < 1) throw std::invalid_argument("girth: empty graph");
  const std::uint32_t k = g.k;
  std::vector<std::uint32_t> dist(g.n, kUnvisited);
  // parent edge of w = (u << 16) | slot, so the reverse traversal of the
  // tree edge can be skipped exactly once
  std::vector<std::uint64_t> parent(g.n, UINT64_MAX);
  std::vector<std::uint32_t> frontier, next;
  dist[0] = 0;
  frontier.push_back(0);
  std::uint32_t best = kUnvisited;
  std::uint32_t level = 0;
  while (!frontier.empty()) {
    // any candidate found while scanning level L is >= 2L, so stop early
    if (best != kUnvisited && best <= 2 * level) break;
    for (std::uint32_t u : frontier) {
      auto row = g.row(u);
      // parallel edges from u: cycle of length 2
      for (std::uint32_t s = 0; s + 1 < k && best > 2; ++s)
        for (std::uint32_t t = s + 1; t < k; ++t)
          if (row[s] == row[t]) best = 2;
      bool parent_skipped = false;
      for (std::uint32_t s = 0; s < k; ++s) {
        std::uint32_t w = row[s];
        if (dist[w] == kUnvisited) {
          dist[w] = level + 1;
          parent[w] = (static_cast<std::uint64_t>(u) << 16) | s;
          next.push_back(w);
        } else if (!parent_skipped && parent[u] != UINT64_MAX &&
                   (parent[u] >> 16) == w) {
          parent_skipped = true;  // reverse of u's own tree edge
        } else {
          std::uint32_t cand = dist[u] + dist[w] + 1;
          best = std::min(best, cand);
        }
      }
    }
    frontier.swap(next);
    next.clear();
    ++level;
  }
  return best;
}

std::uint32_t distance(const CayleyGraph& g, std::uint32_t u, std::uint32_t v) {
  if (u >= g.n || v >= g.n)
    throw std::invalid_argument("distance: vertex out of range");
  if (u == v) return 0;
  auto dist = bfs_distances(g, u, v);
  if (dist[v] == kUnvisited)
    throw std::invalid_argument("distance: vertices not connected");
  return dist[v];
}

Bipartition is_bipartite(const CayleyGraph& g) {
  auto dist = bfs_distances(g, 0);
  Bipartition bp;
  bp.color.resize(g.n);
  for (std::uint64_t v = 0; v < g.n; ++v)
    bp.color[v] = static_cast<std::uint8_t>(dist[v] & 1);
  bp.bipartite = true;
  for (std::uint64_t v = 0; v < g.n && bp.bipartite; ++v)
    for (std::uint32_t w : g.row(v))
      if (bp.color[v] == bp.color[w]) {
        bp.bipartite = false;
        break;
      }
  if (!bp.bipartite) bp.color.clear();
  return bp;
}

}  // namespace rama
