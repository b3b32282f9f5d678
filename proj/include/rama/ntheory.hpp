#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rama {

bool is_prime(long long n);

// Prime factorization by trial division, (prime, exponent) pairs ascending.
std::vector<std::pair<long long, int>> factorize(long long n);

// Legendre symbol (a|q) for an odd prime q:
//   1  a is a nonzero quadratic residue mod q
//  -1  a is a non-residue
//   0  q divides a
// Throws std::invalid_argument when q is not an odd prime.
int legendre(long long a, long long q);

// Deterministic square root modulo an odd m >= 1: Tonelli-Shanks at each
// prime, Hensel lifting to prime powers, CRT recombination. At every prime
// power the smaller of the two roots is chosen before recombining, so the
// result is a fixed function of (a, m). Returns nullopt when no root exists.
// Throws std::invalid_argument when m is even or m < 1.
std::optional<long long> sqrt_mod(long long a, long long m);

// Integral solution of x0^2+x1^2+x2^2+x3^2 = p with x0 > 0 odd and
// x1, x2, x3 even. Seeds one Cayley generator.
struct QuaternionSolution {
  long long x0, x1, x2, x3;
  long long p;

  // The conjugate solution lifts to the inverse generator.
  QuaternionSolution conjugate() const { return {x0, -x1, -x2, -x3, p}; }

  friend bool operator==(const QuaternionSolution&, const QuaternionSolution&) = default;
  friend auto operator<=>(const QuaternionSolution&, const QuaternionSolution&) = default;
};

// All p+1 solutions for a prime p = 1 mod 4, sorted. Throws
// std::invalid_argument for other p (the count/parity structure differs).
std::vector<QuaternionSolution> enumerate_generator_solutions(long long p);

enum class Parity : std::uint8_t { any, odd, even };

// Constraint on one coordinate: divisibility, parity, sign.
struct CoordConstraint {
  long long modulus = 1;  // coordinate must be divisible by this
  Parity parity = Parity::any;
  bool positive = false;
};

struct CongruencePattern {
  CoordConstraint a, b, c, d;
  bool require_bcd_nonzero = false;  // at least one of b, c, d nonzero
};

// Complete list of integer 4-tuples (a,b,c,d) with a^2+b^2+c^2+d^2 = N
// meeting the pattern. b, c, d are enumerated over [-B, B] with
// B = min(limit, isqrt(N)), so any limit >= ceil(sqrt(N)) certifies the
// list complete; in particular an empty result is a non-existence proof.
// Throws std::invalid_argument for N < 1 or a zero modulus in the pattern.
std::vector<std::array<long long, 4>> four_squares_with_pattern(
    long long N, const CongruencePattern& pattern, long long limit);

}  // namespace rama
