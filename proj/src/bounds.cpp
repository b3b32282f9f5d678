#include "rama/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rama/errors.hpp"
#include "rama/metrics.hpp"

namespace rama {

namespace {

constexpr double kGuard = 1e-9;  // shields integer ceilings from FP noise

double log_base(double x, double base) { return std::log(x) / std::log(base); }

}  // namespace

Thm1Threshold thm1_threshold(long long p, long long q, bool bipartite) {
  (void)bipartite;  // same expressions; the proof names q as p' when bipartite
  if (p < 2 || q < 2) throw std::invalid_argument("thm1_threshold: p, q >= 2");
  double lp = static_cast<double>(p);
  double proof = 4.0 * log_base(static_cast<double>(q), lp) - log_base(4.0, lp);
  double n_proof = (static_cast<double>(q) * q * q - q) / 2.0;
  double headline =
      (4.0 / 3.0) * log_base(n_proof, lp) - (2.0 / 3.0) * log_base(2.0, lp);
  return {proof, headline};
}

WitnessPair witness_vertices(long long m, long long q, Kind kind) {
  if (m < 3 || q < 2 || m % q != 0)
    throw std::invalid_argument("witness_vertices: q must divide m");
  WitnessPair wp;
  wp.W = canonical(0, 1, -1, 0, m, kind);
  if (kind == Kind::PSL) {
    wp.Iprime = canonical(1, q % m, 0, 1, m, kind);
    wp.iprime_degenerate = (q % m == 0);
  }
  return wp;
}

BoundReport verify_thm1(const CayleyGraph& g) {
  if (g.prov != Provenance::LPS)
    throw std::invalid_argument("verify_thm1: graph must have LPS provenance");
  BoundReport rep;
  rep.p = static_cast<long long>(g.p);
  rep.m = static_cast<long long>(g.m);
  rep.n = g.n;
  rep.bipartite = g.kind == Kind::PGL;

  // q: the modulus itself when prime, else its largest prime factor
  rep.q = is_prime(rep.m) ? rep.m : factorize(rep.m).back().first;

  auto th = thm1_threshold(rep.p, rep.q, rep.bipartite);
  rep.threshold = th.proof_threshold;
  rep.ceil_threshold =
      static_cast<std::uint32_t>(std::ceil(th.proof_threshold - kGuard));

  // headline with the graph's own n and the m/q correction term
  double lp = static_cast<double>(rep.p);
  double n_formula = rep.bipartite
                         ? (static_cast<double>(rep.q) * rep.q * rep.q - rep.q) / 2.0
                         : static_cast<double>(rep.n);
  rep.headline = (4.0 / 3.0) * log_base(n_formula, lp) -
                 4.0 * log_base(static_cast<double>(rep.m) / rep.q, lp) -
                 (2.0 / 3.0) * log_base(2.0, lp);

  const auto& table = g.vertex_table();
  auto wp = witness_vertices(rep.m, rep.q, g.kind);
  rep.iprime_degenerate = wp.iprime_degenerate;
  rep.dist_W = distance(g, 0, table.index_of(wp.W));
  if (wp.Iprime && !wp.iprime_degenerate)
    rep.dist_Iprime = distance(g, 0, table.index_of(*wp.Iprime));

  rep.diameter = rama::diameter(g);

  if (rep.bipartite) {
    rep.satisfied = static_cast<double>(rep.dist_W) > rep.threshold - kGuard;
  } else if (rep.dist_Iprime) {
    std::uint32_t mx = std::max(rep.dist_W, *rep.dist_Iprime);
    rep.satisfied = mx >= rep.ceil_threshold;
  } else {
    // m = q: the two-witness argument degenerates, fall back to the diameter
    rep.satisfied = rep.diameter >= rep.ceil_threshold;
  }

  rep.floor_bound = static_cast<long long>(std::floor(
      (4.0 / 3.0) * log_base(static_cast<double>(rep.n), lp) + kGuard));
  rep.floor_holds = rep.diameter >= rep.floor_bound;

  // Corollary family X^{p,5q^j} with p > 1250 and p, q = 1 mod 4
  bool family = false;
  if (rep.m % 5 == 0) {
    long long rest = rep.m / 5;
    long long qq = rep.q;
    while (rest % qq == 0) rest /= qq;
    family = rest == 1 && is_prime(rep.q) && rep.q % 4 == 1;
  }
  rep.corollary_hypothesis = family && rep.p > 1250 && rep.p % 4 == 1;
  return rep;
}

CongruencePattern witness_pattern(long long q, PatternKind kind) {
  CongruencePattern pat;
  switch (kind) {
    case PatternKind::bipartite_W:
    case PatternKind::nonbip_Iprime:
      // b = c = d = 0 mod 2q, a odd, at least one of b, c, d nonzero
      pat.a.parity = Parity::odd;
      pat.b.modulus = pat.c.modulus = pat.d.modulus = 2 * q;
      pat.require_bcd_nonzero = true;
      break;
    case PatternKind::nonbip_W:
      // a = b = d = 0 mod q with a odd, c even
      pat.a.modulus = q;
      pat.a.parity = Parity::odd;
      pat.b.modulus = q;
      pat.d.modulus = q;
      pat.c.parity = Parity::even;
      break;
  }
  return pat;
}

std::optional<int> diophantine_distance_floor(long long p, long long q,
                                              PatternKind kind, int K) {
  if (p < 2 || q < 2 || K < 1)
    throw std::invalid_argument("diophantine_distance_floor: bad arguments");
  CongruencePattern pat = witness_pattern(q, kind);
  long long N = 1;
  for (int k = 1; k <= K; ++k) {
    if (N > (4'000'000'000'000'000'000LL) / p)
      throw ResourceError("diophantine_distance_floor: p^k overflows at k=" +
                          std::to_string(k));
    N *= p;
    // enumeration touches ~ (2 sqrt(N)/mb)(2 sqrt(N)/mc)(2 sqrt(N)/md) tuples
    double root = std::sqrt(static_cast<double>(N));
    double work = (2 * root / static_cast<double>(pat.b.modulus) + 1) *
                  (2 * root / static_cast<double>(pat.c.modulus) + 1) *
                  (2 * root / static_cast<double>(pat.d.modulus) + 1);
    if (work > 4e8)
      throw ResourceError(
          "diophantine_distance_floor: enumeration budget exceeded at k=" +
          std::to_string(k));
    auto sols = four_squares_with_pattern(
        N, pat, static_cast<long long>(root) + 1);
    if (!sols.empty()) return k;
  }
  return std::nullopt;
}

}  // namespace rama
