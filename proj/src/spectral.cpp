#include "rama/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "rama/errors.hpp"
#include "rama/metrics.hpp"
#include "rama/splitmix64.hpp"
#include "rama/threads.hpp"

namespace rama {

namespace {

std::atomic<unsigned> g_threads{1};

// y = A x, rows partitioned across workers; per-row slot order is fixed so
// the result is bit-identical for any worker count.
template <typename T>
void matvec(const CayleyGraph& g, const std::vector<T>& x, std::vector<T>& y) {
  const std::uint64_t n = g.n;
  const std::uint32_t k = g.k;
  unsigned workers = thread_count();
  auto run = [&](std::uint64_t lo, std::uint64_t hi) {
    const std::uint32_t* adj = g.adjacency.data() + lo * k;
    for (std::uint64_t u = lo; u < hi; ++u) {
      T acc = x[*adj++];
      for (std::uint32_t s = 1; s < k; ++s) acc += x[*adj++];
      y[u] = std::move(acc);
    }
  };
  if (workers <= 1 || n < 4096) {
    run(0, n);
    return;
  }
  std::vector<std::thread> pool;
  std::uint64_t chunk = (n + workers - 1) / workers;
  for (unsigned t = 0; t < workers; ++t) {
    std::uint64_t lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(run, lo, hi);
  }
  for (auto& th : pool) th.join();
}

// envelope check: the largest intermediate while computing vectors up to
// radius R stays below k * 2k(k-1)^(R-1); keep the int64 path only when
// that provably fits
bool needs_wide(std::uint32_t k, std::uint32_t R) {
  if (R < 2) return false;
  double bits = (R - 1) * std::log2(static_cast<double>(k - 1)) +
                std::log2(2.0 * k * k);
  return bits > 62.0;
}

template <typename T>
std::vector<T> sphere_recurrence(const CayleyGraph& g, std::uint32_t x,
                                 std::uint32_t R, bool nbw) {
  const std::uint64_t n = g.n;
  const T km1 = static_cast<T>(g.k - 1);
  std::vector<T> prev(n, T(0)), cur(n, T(0)), next(n, T(0));
  prev[x] = 1;
  if (R == 0) return prev;
  matvec(g, prev, cur);
  for (std::uint32_t r = 1; r < R; ++r) {
    matvec(g, cur, next);
    // N_2 subtracts k copies of N_0 (any first step may be undone);
    // all later steps and the whole Chebyshev recurrence subtract k-1
    const T coef = (nbw && r == 1) ? static_cast<T>(g.k) : km1;
    for (std::uint64_t i = 0; i < n; ++i) next[i] -= coef * prev[i];
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  return cur;
}

}  // namespace

SphereVector SphereVector::build(const CayleyGraph& g, std::uint32_t x,
                                 std::uint32_t R, bool nbw) {
  if (x >= g.n) throw std::invalid_argument("sphere: root out of range");
  SphereVector v;
  v.root_ = x;
  v.radius_ = R;
  v.wide_ = needs_wide(g.k, R);
  if (v.wide_)
    v.big_ = sphere_recurrence<mpz_class>(g, x, R, nbw);
  else
    v.narrow_ = sphere_recurrence<std::int64_t>(g, x, R, nbw);
  return v;
}

void set_thread_count(unsigned n) { g_threads.store(n == 0 ? 1 : n); }
unsigned thread_count() { return g_threads.load(); }

std::size_t SphereVector::zero_count() const {
  std::size_t z = 0;
  if (wide_) {
    for (const auto& v : big_) z += (v == 0);
  } else {
    for (auto v : narrow_) z += (v == 0);
  }
  return z;
}

mpz_class SphereVector::mass() const {
  mpz_class s = 0;
  if (wide_)
    for (const auto& v : big_) s += v;
  else
    for (auto v : narrow_) s += static_cast<long>(v);
  return s;
}

mpz_class SphereVector::sum_of_squares() const {
  mpz_class s = 0;
  if (wide_) {
    for (const auto& v : big_) s += v * v;
  } else {
    mpz_class t;
    for (auto v : narrow_) {
      t = static_cast<long>(v);
      s += t * t;
    }
  }
  return s;
}

bool SphereVector::operator==(const SphereVector& o) const {
  if (size() != o.size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (value(i) != o.value(i)) return false;
  return true;
}

SphereVector chebyshev_sphere_vector(const CayleyGraph& g, std::uint32_t x,
                                     std::uint32_t R) {
  return SphereVector::build(g, x, R, false);
}

SphereVector nbw_count_vector(const CayleyGraph& g, std::uint32_t x,
                              std::uint32_t R) {
  return SphereVector::build(g, x, R, true);
}

UnreachableReport unreachable_count(const CayleyGraph& g, std::uint32_t x,
                                    std::uint32_t R) {
  auto s = chebyshev_sphere_vector(g, x, R);
  UnreachableReport rep;
  rep.unreachable = s.zero_count();

  mpz_class lhs = rep.unreachable;
  mpz_class pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), g.k - 1, R);
  lhs *= pw;
  mpz_class rhs = mpz_class(static_cast<unsigned long>(g.n));
  rhs *= static_cast<unsigned long>(g.n);
  rhs *= static_cast<unsigned long>(R + 1);
  rhs *= static_cast<unsigned long>(R + 1);
  rep.raw_bound_holds = lhs < rhs;
  rep.lhs_log2 = lhs == 0 ? -HUGE_VAL
                          : static_cast<double>(mpz_sizeinbase(lhs.get_mpz_t(), 2));
  rep.rhs_log2 = static_cast<double>(mpz_sizeinbase(rhs.get_mpz_t(), 2));

  double logn = std::log(static_cast<double>(g.n)) / std::log(static_cast<double>(g.k - 1));
  rep.epsilon = static_cast<double>(R) / logn - 1.0;
  rep.theorem_applicable = rep.epsilon > 0;
  if (rep.theorem_applicable) {
    // |M| <= n^(1-eps) (1+R)^2, compared in log space
    double lhs_log = rep.unreachable == 0
                         ? -HUGE_VAL
                         : std::log2(static_cast<double>(rep.unreachable));
    double rhs_log = (1.0 - rep.epsilon) * std::log2(static_cast<double>(g.n)) +
                     2.0 * std::log2(static_cast<double>(R + 1));
    rep.theorem_bound_holds = lhs_log <= rhs_log + 1e-9;
  }
  return rep;
}

SphereVariance sphere_variance(const CayleyGraph& g, std::uint32_t x,
                               std::uint32_t R) {
  if (R < 1) throw std::invalid_argument("sphere_variance: R >= 1 required");
  if (is_bipartite(g).bipartite)
    throw ConstructionError(
        "sphere_variance: unsupported for bipartite graphs (the bound's "
        "derivation excludes the -k eigenvalue)");
  auto s = chebyshev_sphere_vector(g, x, R);
  mpz_class mass = s.mass();
  mpz_class sq = s.sum_of_squares();
  // Var = sum (v - mass/n)^2 = (n * sum v^2 - mass^2) / n
  mpz_class num = mpz_class(static_cast<unsigned long>(g.n)) * sq - mass * mass;

  SphereVariance out;
  out.numerator = num;
  out.denominator = g.n;
  out.value = mpq_class(num, mpz_class(static_cast<unsigned long>(g.n))).get_d();

  // bound: Var <= (R+1)^2 (k-1)^R, i.e. num <= n (R+1)^2 (k-1)^R exactly
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), g.k - 1, R);
  bound *= static_cast<unsigned long>(R + 1);
  bound *= static_cast<unsigned long>(R + 1);
  out.bound_log2 = static_cast<double>(mpz_sizeinbase(bound.get_mpz_t(), 2));
  bound *= static_cast<unsigned long>(g.n);
  out.bound_holds = num <= bound;
  return out;
}

namespace {

// Eigenvalues of a symmetric tridiagonal matrix by QL with implicit shifts;
// when z is non-null it accumulates eigenvectors (z must start as identity).
void tridiag_ql(std::vector<double>& d, std::vector<double>& e,
                std::vector<double>* z) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return;
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == 50)
          throw ConvergenceError("tridiagonal QL exceeded 50 sweeps", 0, 0, 0, 0);
        double gshift = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(gshift, 1.0);
        gshift = d[m] - d[l] + e[l] / (gshift + std::copysign(r, gshift));
        double si = 1.0, co = 1.0, p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = si * e[i];
          double b = co * e[i];
          r = std::hypot(f, gshift);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          si = f / r;
          co = gshift / r;
          double di1 = d[i + 1] - p;
          r = (d[i] - di1) * si + 2.0 * co * b;
          p = si * r;
          d[i + 1] = di1 + p;
          gshift = co * r - b;
          if (z) {
            for (int row = 0; row < n; ++row) {
              double zi1 = (*z)[static_cast<std::size_t>(row) * n + i + 1];
              double zi0 = (*z)[static_cast<std::size_t>(row) * n + i];
              (*z)[static_cast<std::size_t>(row) * n + i + 1] = si * zi0 + co * zi1;
              (*z)[static_cast<std::size_t>(row) * n + i] = co * zi0 - si * zi1;
            }
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = gshift;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  e.pop_back();
}

}  // namespace

SpectralSummary extreme_nontrivial_eigenvalue(const CayleyGraph& g, double tol) {
  if (tol <= 0) throw std::invalid_argument("tol must be positive");
  const std::uint64_t n = g.n;
  auto bp = is_bipartite(g);

  std::vector<double> sign;
  if (bp.bipartite) {
    sign.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) sign[i] = bp.color[i] ? -1.0 : 1.0;
  }
  auto deflate = [&](std::vector<double>& v) {
    double mean = 0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(n);
    for (double& x : v) x -= mean;
    if (!sign.empty()) {
      double dot = 0;
      for (std::uint64_t i = 0; i < n; ++i) dot += sign[i] * v[i];
      dot /= static_cast<double>(n);
      for (std::uint64_t i = 0; i < n; ++i) v[i] -= dot * sign[i];
    }
  };
  auto norm2 = [&](const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  };
  auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::uint64_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
  };

  // deterministic seeded start vector
  std::vector<double> q(n);
  SplitMix64 rng(0x52414D414A414E31ULL);
  for (double& x : q) x = rng.next_symmetric();
  deflate(q);
  double nq = norm2(q);
  if (nq == 0) throw std::runtime_error("start vector vanished");
  for (double& x : q) x /= nq;

  const std::uint32_t dim_cap = static_cast<std::uint32_t>(
      std::min<std::uint64_t>(n, 600));
  std::vector<std::vector<double>> basis;
  basis.push_back(q);
  std::vector<double> alpha, beta;
  std::vector<double> w(n);
  double theta_lo = 0, theta_hi = 0, res_lo = HUGE_VAL, res_hi = HUGE_VAL;
  double prev_lo = HUGE_VAL, prev_hi = -HUGE_VAL;
  std::uint32_t stagnant = 0;
  bool exhausted = false;
  std::uint32_t j = 0;

  while (j < dim_cap) {
    matvec(g, basis[j], w);
    deflate(w);
    double a = dot(basis[j], w);
    alpha.push_back(a);
    for (std::uint64_t i = 0; i < n; ++i) w[i] -= a * basis[j][i];
    if (j > 0)
      for (std::uint64_t i = 0; i < n; ++i) w[i] -= beta[j - 1] * basis[j - 1][i];
    // full reorthogonalization, two passes
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& qi : basis) {
        double c = dot(qi, w);
        for (std::uint64_t i = 0; i < n; ++i) w[i] -= c * qi[i];
      }
    double b = norm2(w);
    ++j;

    std::vector<double> d = alpha, e = beta;
    tridiag_ql(d, e, nullptr);
    theta_lo = *std::min_element(d.begin(), d.end());
    theta_hi = *std::max_element(d.begin(), d.end());

    if (b < 1e-12 * g.k) {
      // deflated Krylov space exhausted: Ritz values are exact
      exhausted = true;
      res_lo = res_hi = 0;
      break;
    }

    bool stalled = std::abs(theta_lo - prev_lo) < tol * 0.01 &&
                   std::abs(theta_hi - prev_hi) < tol * 0.01;
    prev_lo = theta_lo;
    prev_hi = theta_hi;
    stagnant = stalled ? stagnant + 1 : 0;
    if (stagnant >= 3 || j + 1 >= dim_cap) {
      // residuals beta_j |last eigenvector component| at both ends
      std::vector<double> dd = alpha, ee = beta;
      std::vector<double> z(static_cast<std::size_t>(j) * j, 0.0);
      for (std::uint32_t i = 0; i < j; ++i) z[static_cast<std::size_t>(i) * j + i] = 1.0;
      tridiag_ql(dd, ee, &z);
      std::uint32_t ilo = 0, ihi = 0;
      for (std::uint32_t i = 1; i < j; ++i) {
        if (dd[i] < dd[ilo]) ilo = i;
        if (dd[i] > dd[ihi]) ihi = i;
      }
      res_lo = std::abs(b * z[static_cast<std::size_t>(j - 1) * j + ilo]);
      res_hi = std::abs(b * z[static_cast<std::size_t>(j - 1) * j + ihi]);
      theta_lo = dd[ilo];
      theta_hi = dd[ihi];
      if (res_lo < tol && res_hi < tol) break;
      stagnant = 0;
    }

    beta.push_back(b);
    for (double& x : w) x /= b;
    basis.push_back(w);
  }

  if (!exhausted && (res_lo >= tol || res_hi >= tol))
    throw ConvergenceError("extreme_nontrivial_eigenvalue: no convergence in " +
                               std::to_string(j) + " iterations",
                           theta_lo, theta_hi, res_lo, res_hi);

  SpectralSummary out;
  out.k = g.k;
  out.lambda_star = std::max(std::abs(theta_lo), std::abs(theta_hi));
  double edge = 2.0 * std::sqrt(static_cast<double>(g.k - 1));
  out.theta_star = out.lambda_star <= edge
                       ? std::acos(out.lambda_star / edge)
                       : std::nan("");
  out.ramanujan = out.lambda_star <= edge + tol;
  out.bipartite = bp.bipartite;
  out.tol = tol;
  out.iterations = j;
  return out;
}

}  // namespace rama
