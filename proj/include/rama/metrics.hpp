#pragma once

#include <cstdint>
#include <vector>

#include "rama/cayley.hpp"

namespace rama {

// Census of BFS distances from a root; counts[r] = #vertices at distance r.
struct LevelProfile {
  std::uint32_t root = 0;
  std::vector<std::uint64_t> counts;
  std::uint32_t eccentricity = 0;
};

LevelProfile bfs_levels(const CayleyGraph& g, std::uint32_t root);

// Exact BFS distances from root; stops early once stop_at is reached.
// 0xFFFFFFFF marks unreached vertices (possible only with early exit).
std::vector<std::uint32_t> bfs_distances(const CayleyGraph& g,
                                         std::uint32_t root,
                                         std::uint32_t stop_at = UINT32_MAX);

// Eccentricity of vertex 0. Equals the diameter for vertex-transitive
// graphs, i.e. every Cayley graph this library builds.
std::uint32_t diameter(const CayleyGraph& g);

// All-sources diameter; quadratic, for small oracle graphs in tests.
std::uint32_t diameter_exhaustive(const CayleyGraph& g);

std::uint32_t eccentricity(const CayleyGraph& g, std::uint32_t root);

// Shortest cycle length via BFS from vertex 0 with parent-edge tracking;
// exact on vertex-transitive graphs. Parallel edges between distinct
// vertices count as 2-cycles. Returns UINT32_MAX for acyclic input.
std::uint32_t girth(const CayleyGraph& g);

std::uint32_t distance(const CayleyGraph& g, std::uint32_t u, std::uint32_t v);

struct Bipartition {
  bool bipartite = false;
  std::vector<std::uint8_t> color;  // valid when bipartite
};

Bipartition is_bipartite(const CayleyGraph& g);

}  // namespace rama
