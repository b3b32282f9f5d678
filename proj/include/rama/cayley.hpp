#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <vector>

#include "rama/pgl.hpp"

namespace rama {

enum class Provenance : std::uint8_t { LPS = 0, Random = 1 };

// Immutable k-regular Cayley graph in compressed-row layout: row v holds
// the k neighbors v*s, one slot per generator in fixed order. The generator
// set is closed under inverse, so the adjacency multiset is symmetric.
//
// Binary file format (all integers little-endian):
//   offset 0   magic "LPSG" (4 bytes)
//   offset 4   format version, u16 (currently 1)
//   offset 6   kind byte: 0 = LPS/PSL, 1 = LPS/PGL, 2 = Random/PSL
//   offset 7   reserved (0)
//   offset 8   p, u64 (0 for random graphs)
//   offset 16  m, u64 (the modulus; equals q for random graphs)
//   offset 24  seed, u64 (0 for LPS graphs)
//   offset 32  n, u64
//   offset 40  k, u16; then u16 reserved (0)
//   offset 44  generators: k matrices, entries a,b,c,d as u32 each
//   offset 44+16k  adjacency: n*k u32 entries, row-major
//   trailing   FNV-1a 64 checksum of all preceding bytes, u64
struct CayleyGraph {
  std::uint64_t n = 0;
  std::uint16_t k = 0;
  Kind kind = Kind::PSL;
  Provenance prov = Provenance::LPS;
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
  std::vector<ProjMatrix> generators;
  std::vector<std::uint32_t> adjacency;  // n*k

  std::span<const std::uint32_t> row(std::uint64_t v) const {
    return {adjacency.data() + v * k, static_cast<std::size_t>(k)};
  }

  // Matrix <-> index bijection. Cheap when the graph was just built; after
  // load() the table is rebuilt on first use by re-running the orbit
  // closure (deterministic, so indices match the stored adjacency).
  // First call is not thread-safe; call once before sharing across threads.
  const VertexTable& vertex_table() const;

  mutable std::shared_ptr<const VertexTable> table;
};

// LPS graph X_{p,m}: p = 1 mod 4 prime, m odd >= 5 coprime to p, -1 a
// square mod m. p square mod m gives the non-bipartite PSL graph; p a
// non-residue mod a prime m gives the bipartite PGL graph. Anything else
// throws ConstructionError naming the failing condition.
CayleyGraph build_lps(long long p, long long m);

// Random 6-regular Cayley graph of PSL2(Z/qZ): three elements drawn
// uniformly via a seeded SplitMix64 stream plus their inverses. Resamples
// (advancing the stream) until the six generators are distinct non-identity
// elements and generate the group; gives up after 1000 attempts.
CayleyGraph build_random_cayley(long long q, std::uint64_t seed);

void save(const CayleyGraph& g, const std::filesystem::path& path);
CayleyGraph load(const std::filesystem::path& path);

// FNV-1a 64 over the serialized byte stream (identical to the checksum
// stored at the end of a saved file).
std::uint64_t checksum(const CayleyGraph& g);

}  // namespace rama
