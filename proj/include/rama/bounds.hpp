#pragma once

#include <cstdint>
#include <optional>

#include "rama/cayley.hpp"
#include "rama/ntheory.hpp"

namespace rama {

struct Thm1Threshold {
  double proof_threshold;  // log_p(q^4 / 4), what the proof bounds distances by
  double headline;         // (4/3)log_p((q^3-q)/2) - (2/3)log_p(2)
};

// The proof-side and headline lower-bound expressions. The headline uses
// the proof's vertex count (q^3-q)/2 in both cases, which keeps it below
// the proof threshold.
Thm1Threshold thm1_threshold(long long p, long long q, bool bipartite);

struct WitnessPair {
  ProjMatrix W;                      // [0 1; -1 0]
  std::optional<ProjMatrix> Iprime;  // [1 q; 0 1], absent in the PGL case
  bool iprime_degenerate = false;    // m = q makes I' the identity
};

// Canonical witness matrices mod m. Throws std::invalid_argument unless
// q divides m.
WitnessPair witness_vertices(long long m, long long q, Kind kind);

struct BoundReport {
  long long p = 0, m = 0, q = 0;
  std::uint64_t n = 0;
  bool bipartite = false;
  double threshold = 0;  // log_p(q^4/4)
  double headline = 0;
  std::uint32_t ceil_threshold = 0;
  std::uint32_t dist_W = 0;
  std::optional<std::uint32_t> dist_Iprime;
  bool iprime_degenerate = false;
  std::uint32_t diameter = 0;
  bool satisfied = false;
  long long floor_bound = 0;  // floor((4/3) log_p n)
  bool floor_holds = false;   // diameter >= floor_bound
  bool corollary_hypothesis = false;  // p > 1250, m = 5 q^j, p = q = 1 mod 4
};

// Runs the distance checks behind the diameter lower bound on an LPS graph:
// BFS distances to the witnesses, the proof threshold, and the floor bound.
// Bipartite case: dist(I,W) must exceed the threshold. Non-bipartite with
// q | m, q != m: max of the two witness distances must reach ceil(threshold).
// Prime m = q degenerates I' to the identity; the check then falls back to
// the diameter itself.
BoundReport verify_thm1(const CayleyGraph& g);

enum class PatternKind { bipartite_W, nonbip_Iprime, nonbip_W };

// The proof's congruence pattern for a witness type at modulus q.
CongruencePattern witness_pattern(long long q, PatternKind kind);

// Smallest k <= K such that a^2+b^2+c^2+d^2 = p^k has a solution matching
// the witness pattern; nullopt when none exists up to K (then every
// non-backtracking walk to the witness is longer than K, so its graph
// distance is > K). Throws ResourceError when the enumeration for some k
// would exceed the desk-scale budget.
std::optional<int> diophantine_distance_floor(long long p, long long q,
                                              PatternKind kind, int K);

}  // namespace rama
