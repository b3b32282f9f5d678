#pragma once

// Test-only oracles, kept independent of the code paths they check:
// hand-coded graphs, a dense Jacobi eigensolver, and exhaustive
// non-backtracking walk enumeration.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rama/cayley.hpp"

namespace testutil {

// k-regular graph from an explicit adjacency table; provenance fields are
// dummies (oracle graphs never hit provenance-dependent code).
inline rama::CayleyGraph make_graph(const std::vector<std::vector<std::uint32_t>>& adj) {
  rama::CayleyGraph g;
  g.n = adj.size();
  g.k = static_cast<std::uint16_t>(adj.at(0).size());
  for (const auto& row : adj) {
    if (row.size() != g.k) throw std::logic_error("make_graph: not regular");
    for (std::uint32_t w : row) g.adjacency.push_back(w);
  }
  return g;
}

inline rama::CayleyGraph make_complete(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v)
      if (u != v) adj[u].push_back(v);
  return make_graph(adj);
}

inline rama::CayleyGraph make_cycle(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    adj[u].push_back((u + 1) % n);
    adj[u].push_back((u + n - 1) % n);
  }
  return make_graph(adj);
}

inline rama::CayleyGraph make_petersen() {
  std::vector<std::vector<std::uint32_t>> adj(10);
  for (std::uint32_t i = 0; i < 5; ++i) {
    adj[i] = {(i + 1) % 5, (i + 4) % 5, i + 5};
    adj[i + 5] = {5 + (i + 2) % 5, 5 + (i + 3) % 5, i};
  }
  return make_graph(adj);
}

// prism over C_n (3-regular); for odd n >= 17 it is connected,
// non-bipartite and not Ramanujan (lambda_2 = 2cos(2pi/n) + 1 > 2 sqrt 2)
inline rama::CayleyGraph make_prism(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> adj(2 * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    adj[i] = {(i + 1) % n, (i + n - 1) % n, n + i};
    adj[n + i] = {n + (i + 1) % n, n + (i + n - 1) % n, i};
  }
  return make_graph(adj);
}

// two parallel 3-edge bundles: the smallest 3-regular multigraph, girth 2
inline rama::CayleyGraph make_theta2() {
  return make_graph({{1, 1, 1}, {0, 0, 0}});
}

inline std::vector<std::vector<double>> dense_adjacency(const rama::CayleyGraph& g) {
  std::vector<std::vector<double>> a(g.n, std::vector<double>(g.n, 0.0));
  for (std::uint64_t u = 0; u < g.n; ++u)
    for (std::uint32_t w : g.row(u)) a[u][w] += 1.0;
  return a;
}

// Cyclic Jacobi eigensolver for small dense symmetric matrices.
// Returns eigenvalues ascending; vectors[j] is the eigenvector of values[j].
struct DenseEig {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};

inline DenseEig jacobi_eigensolve(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-24) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-30) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = std::copysign(1.0, theta) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          double aip = a[i][p], aiq = a[i][q];
          a[i][p] = c * aip - s * aiq;
          a[i][q] = s * aip + c * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          double api = a[p][i], aqi = a[q][i];
          a[p][i] = c * api - s * aqi;
          a[q][i] = s * api + c * aqi;
        }
        for (std::size_t i = 0; i < n; ++i) {
          double vip = v[i][p], viq = v[i][q];
          v[i][p] = c * vip - s * viq;
          v[i][q] = s * vip + c * viq;
        }
      }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a[x][x] < a[y][y]; });
  DenseEig out;
  for (std::size_t j : order) {
    out.values.push_back(a[j][j]);
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v[i][j];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

// max |lambda| over nontrivial eigenvalues of a k-regular graph, from the
// dense spectrum (drops one copy of k, and one of -k when bipartite)
inline double dense_lambda_star(const rama::CayleyGraph& g, bool bipartite) {
  auto eig = jacobi_eigensolve(dense_adjacency(g));
  bool dropped_top = false, dropped_bottom = !bipartite;
  double best = 0;
  for (std::size_t i = eig.values.size(); i-- > 0;) {  // descending
    double lam = eig.values[i];
    if (!dropped_top && std::abs(lam - g.k) < 1e-8) {
      dropped_top = true;
      continue;
    }
    if (!dropped_bottom && std::abs(lam + g.k) < 1e-8) {
      dropped_bottom = true;
      continue;
    }
    best = std::max(best, std::abs(lam));
  }
  return best;
}

// counts of vertex-non-backtracking walks of length exactly R from x;
// valid as an oracle on simple graphs only
inline std::vector<std::int64_t> nbw_brute(const rama::CayleyGraph& g,
                                           std::uint32_t x, std::uint32_t R) {
  std::vector<std::int64_t> counts(g.n, 0);
  if (R == 0) {
    counts[x] = 1;
    return counts;
  }
  struct Frame {
    std::uint32_t vertex, prev;
  };
  // iterative DFS over walks
  std::vector<std::pair<Frame, std::uint32_t>> stack;  // frame, depth
  for (std::uint32_t w : g.row(x)) stack.push_back({{w, x}, 1});
  while (!stack.empty()) {
    auto [f, depth] = stack.back();
    stack.pop_back();
    if (depth == R) {
      ++counts[f.vertex];
      continue;
    }
    for (std::uint32_t w : g.row(f.vertex))
      if (w != f.prev) stack.push_back({{w, f.vertex}, depth + 1});
  }
  return counts;
}

// S(R) entries from the brute-force walks: sum_i N_{R-2i}
inline std::vector<std::int64_t> sphere_brute(const rama::CayleyGraph& g,
                                              std::uint32_t x, std::uint32_t R) {
  std::vector<std::int64_t> acc(g.n, 0);
  for (std::uint32_t r = R % 2; r <= R; r += 2) {
    auto nr = nbw_brute(g, x, r);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += nr[i];
  }
  return acc;
}

// dense-spectral S(R): (k-1)^(R/2) U_R(A / 2 sqrt(k-1)) applied entrywise
inline std::vector<double> sphere_dense(const rama::CayleyGraph& g,
                                        std::uint32_t x, std::uint32_t R) {
  auto eig = jacobi_eigensolve(dense_adjacency(g));
  const double scale = 2.0 * std::sqrt(static_cast<double>(g.k - 1));
  std::vector<double> out(g.n, 0.0);
  for (std::size_t j = 0; j < eig.values.size(); ++j) {
    double t = eig.values[j] / scale;
    // U_R by the scalar three-term recurrence
    double u0 = 1.0, u1 = 2.0 * t;
    double ur = R == 0 ? u0 : u1;
    for (std::uint32_t r = 1; r < R; ++r) {
      double u2 = 2.0 * t * u1 - u0;
      u0 = u1;
      u1 = u2;
      ur = u2;
    }
    double coef = std::pow(static_cast<double>(g.k - 1), R / 2.0) * ur *
                  eig.vectors[j][x];
    for (std::uint64_t y = 0; y < g.n; ++y) out[y] += coef * eig.vectors[j][y];
  }
  return out;
}

}  // namespace testutil
