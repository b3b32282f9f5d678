#include "rama/metrics.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "rama/splitmix64.hpp"

using namespace rama;
using testutil::make_complete;
using testutil::make_cycle;
using testutil::make_graph;
using testutil::make_petersen;
using testutil::make_theta2;

TEST_CASE("bfs_levels on X_{5,29} reproduces the level census") {
  auto g = build_lps(5, 29);
  auto lp = bfs_levels(g, 0);
  std::vector<std::uint64_t> expected = {1, 6, 30, 150, 750, 3026, 5970, 2195, 52};
  CHECK(lp.counts == expected);
  CHECK(lp.eccentricity == 8);

  std::uint64_t total = 0;
  for (auto c : lp.counts) total += c;
  CHECK(total == g.n);

  // the first girth/2 levels grow like the 6-regular tree
  for (std::uint32_t r = 1; r <= 4; ++r) {
    std::uint64_t tree = 6;
    for (std::uint32_t i = 1; i < r; ++i) tree *= 5;
    CHECK(lp.counts[r] == tree);
  }
}

TEST_CASE("tree bound dominates every level") {
  auto g = build_lps(5, 29);
  auto lp = bfs_levels(g, 0);
  for (std::uint32_t r = 1; r < lp.counts.size(); ++r) {
    double bound = 6.0 * std::pow(5.0, r - 1.0);
    CHECK(static_cast<double>(lp.counts[r]) <= bound);
  }
}

TEST_CASE("diameter on small oracle graphs") {
  CHECK(diameter(make_complete(4)) == 1);
  CHECK(diameter(make_cycle(6)) == 3);
  CHECK(diameter(make_petersen()) == 2);
  CHECK(diameter_exhaustive(make_petersen()) == 2);
  CHECK(diameter_exhaustive(make_cycle(7)) == 3);
}

TEST_CASE("diameter of X_{5,29} is 8 and X_{5,13} is 7") {
  CHECK(diameter(build_lps(5, 29)) == 8);
  CHECK(diameter(build_lps(5, 13)) == 7);
}

TEST_CASE("eccentricity is root-independent on Cayley graphs") {
  auto g = build_lps(5, 29);
  auto z = build_random_cayley(29, 1);
  std::uint32_t ecc_g = eccentricity(g, 0);
  std::uint32_t ecc_z = eccentricity(z, 0);
  SplitMix64 rng(99);
  for (int i = 0; i < 20; ++i) {
    CHECK(eccentricity(g, static_cast<std::uint32_t>(rng.next_below(g.n))) == ecc_g);
    CHECK(eccentricity(z, static_cast<std::uint32_t>(rng.next_below(z.n))) == ecc_z);
  }
}

TEST_CASE("diameter sandwich on LPS graphs") {
  for (auto [p, m] : std::vector<std::pair<long long, long long>>{
           {5, 13}, {5, 29}, {13, 17}}) {
    auto g = build_lps(p, m);
    double n = static_cast<double>(g.n);
    double d = diameter(g);
    double lo = std::log(n) / std::log(static_cast<double>(g.k - 1));
    double hi = 2.0 * std::log(n) / std::log(static_cast<double>(p)) +
                2.0 * std::log(2.0) / std::log(static_cast<double>(p)) + 1.0;
    CHECK(d >= std::floor(lo - 1e-9));
    CHECK(d <= hi + 1e-9);
  }
}

TEST_CASE("girth on oracle graphs") {
  CHECK(girth(make_complete(4)) == 3);
  CHECK(girth(make_cycle(4)) == 4);
  CHECK(girth(make_cycle(5)) == 5);
  CHECK(girth(make_petersen()) == 5);
  CHECK(girth(make_theta2()) == 2);  // parallel edges
}

TEST_CASE("girth of LPS graphs") {
  CHECK(girth(build_lps(5, 29)) == 9);
  CHECK(girth(build_lps(5, 13)) == 8);
  CHECK(girth(build_lps(13, 17)) == 6);
  CHECK(girth(build_lps(29, 5)) == 2);  // colliding generators: 2-cycles
}

TEST_CASE("girth respects the logarithmic lower bound") {
  for (long long q : {13, 29, 41}) {
    auto g = build_lps(5, q);
    double n = static_cast<double>(g.n);
    double bound = (2.0 / 3.0) * std::log(n) / std::log(5.0) -
                   2.0 * std::log(2.0) / std::log(5.0);
    CHECK(static_cast<double>(girth(g)) >= bound - 1e-9);
  }
}

TEST_CASE("distance basics") {
  auto g = build_lps(5, 29);
  CHECK(distance(g, 0, 0) == 0);
  for (std::uint32_t w : g.row(0)) CHECK(distance(g, 0, w) == 1);
}

TEST_CASE("distance is symmetric on random pairs") {
  auto g = build_lps(5, 13);
  SplitMix64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto u = static_cast<std::uint32_t>(rng.next_below(g.n));
    auto v = static_cast<std::uint32_t>(rng.next_below(g.n));
    CHECK(distance(g, u, v) == distance(g, v, u));
  }
}

TEST_CASE("bipartiteness detection") {
  CHECK(is_bipartite(make_cycle(4)).bipartite);
  CHECK(!is_bipartite(make_cycle(5)).bipartite);
  CHECK(!is_bipartite(make_complete(4)).bipartite);
  CHECK(is_bipartite(build_lps(5, 13)).bipartite);
  CHECK(!is_bipartite(build_lps(5, 29)).bipartite);

  auto bp = is_bipartite(make_cycle(6));
  REQUIRE(bp.bipartite);
  auto g = make_cycle(6);
  for (std::uint32_t u = 0; u < g.n; ++u)
    for (std::uint32_t w : g.row(u)) CHECK(bp.color[u] != bp.color[w]);
}

TEST_CASE("level profile partitions every constructed graph") {
  for (auto g : {build_lps(5, 13), build_lps(13, 17), build_random_cayley(13, 2)}) {
    auto lp = bfs_levels(g, 0);
    std::uint64_t total = 0;
    for (auto c : lp.counts) {
      CHECK(c >= 1);
      total += c;
    }
    CHECK(total == g.n);
    CHECK(lp.counts[0] == 1);
  }
}
