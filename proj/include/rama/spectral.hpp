#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "rama/cayley.hpp"

namespace rama {

struct SpectralSummary {
  std::uint16_t k = 0;
  double lambda_star = 0;  // max |lambda| over nontrivial eigenvalues
  double theta_star = 0;   // lambda_star = 2 sqrt(k-1) cos(theta_star); NaN outside
  bool ramanujan = false;  // lambda_star <= 2 sqrt(k-1) + tol
  bool bipartite = false;
  double tol = 0;
  std::uint32_t iterations = 0;
};

// Extreme nontrivial eigenvalue by Lanczos iteration with full
// reorthogonalization and a deterministic seeded start vector. The constant
// vector (and the bipartition sign vector when bipartite) is projected out
// every iteration. Converges when the Ritz residual at both spectrum ends
// drops below tol; throws ConvergenceError past the iteration cap.
SpectralSummary extreme_nontrivial_eigenvalue(const CayleyGraph& g, double tol);

// Exact integer vector indexed by vertex: either S(R)(x,.) (Chebyshev
// sphere operator) or N_R(x,.) (non-backtracking walk counts). Values are
// held in int64 while a proven envelope fits and in arbitrary precision
// beyond it.
class SphereVector {
 public:
  std::uint32_t root() const { return root_; }
  std::uint32_t radius() const { return radius_; }
  std::size_t size() const { return wide_ ? big_.size() : narrow_.size(); }
  bool wide() const { return wide_; }

  bool is_zero(std::size_t i) const {
    return wide_ ? big_[i] == 0 : narrow_[i] == 0;
  }
  mpz_class value(std::size_t i) const {
    return wide_ ? big_[i] : mpz_class(static_cast<long>(narrow_[i]));
  }
  std::size_t zero_count() const;
  mpz_class mass() const;            // sum of all entries
  mpz_class sum_of_squares() const;
  bool operator==(const SphereVector& o) const;

 private:
  friend SphereVector chebyshev_sphere_vector(const CayleyGraph&,
                                              std::uint32_t, std::uint32_t);
  friend SphereVector nbw_count_vector(const CayleyGraph&, std::uint32_t,
                                       std::uint32_t);
  static SphereVector build(const CayleyGraph& g, std::uint32_t x,
                            std::uint32_t R, bool nbw);
  std::uint32_t root_ = 0, radius_ = 0;
  bool wide_ = false;
  std::vector<std::int64_t> narrow_;
  std::vector<mpz_class> big_;
};

// S(R)(x,.) via the integer three-term recurrence
//   s_0 = delta_x, s_1 = A s_0, s_{r+1} = A s_r - (k-1) s_{r-1}.
SphereVector chebyshev_sphere_vector(const CayleyGraph& g, std::uint32_t x,
                                     std::uint32_t R);

// N_R(x,.) = number of non-backtracking walks of length exactly R:
//   N_0 = delta_x, N_1 = A N_0, N_2 = A N_1 - k N_0,
//   N_{r+1} = A N_r - (k-1) N_{r-1} for r >= 2.
SphereVector nbw_count_vector(const CayleyGraph& g, std::uint32_t x,
                              std::uint32_t R);

struct UnreachableReport {
  std::uint64_t unreachable = 0;  // |M(x,R)| = #{y : S(R)(x,y) = 0}
  // |M| (k-1)^R < n^2 (R+1)^2, exact integer comparison
  bool raw_bound_holds = false;
  double lhs_log2 = 0, rhs_log2 = 0;
  // theorem form |M| <= n^(1-eps) (1+R)^2 with eps = R/log_{k-1}(n) - 1,
  // evaluated only when eps > 0
  double epsilon = 0;
  bool theorem_applicable = false;
  bool theorem_bound_holds = false;
};

UnreachableReport unreachable_count(const CayleyGraph& g, std::uint32_t x,
                                    std::uint32_t R);

struct SphereVariance {
  double value = 0;       // exact rational reported as double
  mpz_class numerator;    // variance = numerator / n
  std::uint64_t denominator = 1;
  bool bound_holds = false;  // value <= (R+1)^2 (k-1)^R, exact comparison
  double bound_log2 = 0;
};

// Var(x) = sum_y (S(R)(x,y) - mean)^2 with mean = mass(S(R))/n, the exact
// coefficient of the constant eigenfunction. Throws for bipartite input
// (the bound's derivation excludes the -k eigenvalue).
SphereVariance sphere_variance(const CayleyGraph& g, std::uint32_t x,
                               std::uint32_t R);

}  // namespace rama
