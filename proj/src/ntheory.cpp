#include "rama/ntheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rama {

namespace {

long long mod_norm(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

long long mul_mod(long long a, long long b, long long m) {
  return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

long long pow_mod(long long base, long long exp, long long m) {
  long long r = 1 % m;
  base = mod_norm(base, m);
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// inverse of a unit mod m via extended gcd; -1 when gcd(a, m) != 1
long long inv_mod(long long a, long long m) {
  long long r0 = m, r1 = mod_norm(a, m);
  long long t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) return -1;
  return mod_norm(t0, m);
}

long long isqrt_ll(long long n) {
  if (n < 0) return -1;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Tonelli-Shanks for an odd prime p. Returns the smaller of the two roots,
// or nullopt when a is a non-residue.
std::optional<long long> sqrt_mod_prime(long long a, long long p) {
  a = mod_norm(a, p);
  if (a == 0) return 0;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  long long r;
  if (p % 4 == 3) {
    r = pow_mod(a, (p + 1) / 4, p);
  } else {
    long long q = p - 1;
    int s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    long long z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    long long m = s;
    long long c = pow_mod(z, q, p);
    long long t = pow_mod(a, q, p);
    r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
      long long t2 = t;
      long long i = 0;
      while (t2 != 1) { t2 = mul_mod(t2, t2, p); ++i; }
      long long b = pow_mod(c, 1LL << (m - i - 1), p);
      r = mul_mod(r, b, p);
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      m = i;
    }
  }
  return std::min(r, p - r);
}

// Square root mod p^e for an odd prime p: unit case by Hensel lifting,
// p-divisible case by splitting off the even part of the valuation.
std::optional<long long> sqrt_mod_prime_power(long long a, long long p, int e) {
  long long pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  a = mod_norm(a, pe);
  if (a == 0) {
    long long r = 1;
    for (int i = 0; i < (e + 1) / 2; ++i) r *= p;
    return r % pe;
  }
  int v = 0;
  long long u = a;
  while (u % p == 0) { u /= p; ++v; }
  if (v % 2 != 0) return std::nullopt;
  // u is a unit mod p^(e-v); a root of u there scales back by p^(v/2)
  int eu = e - v;
  long long peu = 1;
  for (int i = 0; i < eu; ++i) peu *= p;
  auto r0 = sqrt_mod_prime(u % p, p);
  if (!r0) return std::nullopt;
  long long r = *r0;
  long long mod = p;
  while (mod < peu) {
    // Newton step doubles the precision
    long long mod2 = mod * mod <= peu ? mod * mod : peu;
    // recompute modulo mod2 (mod2 <= p^eu <= p^e fits long long at desk scale)
    long long inv2r = inv_mod(mod_norm(2 * r, mod2), mod2);
    __int128 rr = static_cast<__int128>(r) * r - u % mod2;
    long long diff = static_cast<long long>(rr % mod2);
    diff = mod_norm(diff, mod2);
    r = mod_norm(r - mul_mod(diff, inv2r, mod2), mod2);
    mod = mod2;
  }
  r %= peu;
  r = std::min(r, peu - r);
  long long scale = 1;
  for (int i = 0; i < v / 2; ++i) scale *= p;
  return (r * scale) % pe;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<long long, int>> out;
  for (long long d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) { n /= d; ++e; }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int legendre(long long a, long long q) {
  if (q < 3 || q % 2 == 0 || !is_prime(q))
    throw std::invalid_argument("legendre: q must be an odd prime");
  a = mod_norm(a, q);
  if (a == 0) return 0;
  return pow_mod(a, (q - 1) / 2, q) == 1 ? 1 : -1;
}

std::optional<long long> sqrt_mod(long long a, long long m) {
  if (m < 1 || m % 2 == 0)
    throw std::invalid_argument("sqrt_mod: m must be odd and >= 1");
  if (m == 1) return 0;
  a = mod_norm(a, m);
  // CRT over the prime powers of m, smaller root chosen at each factor
  long long result = 0, mod_so_far = 1;
  for (auto [p, e] : factorize(m)) {
    long long pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    auto r = sqrt_mod_prime_power(a, p, e);
    if (!r) return std::nullopt;
    // combine: x = result mod mod_so_far, x = *r mod pe
    long long inv = inv_mod(mod_so_far % pe, pe);
    long long diff = mod_norm(*r - result, pe);
    long long t = mul_mod(diff, inv, pe);
    result = result + mod_so_far * t;
    mod_so_far *= pe;
  }
  return result;
}

std::vector<QuaternionSolution> enumerate_generator_solutions(long long p) {
  if (!is_prime(p) || p % 4 != 1)
    throw std::invalid_argument(
        "enumerate_generator_solutions: p must be a prime = 1 mod 4");
  std::vector<QuaternionSolution> out;
  long long b = isqrt_ll(p);
  for (long long x1 = -b; x1 <= b; ++x1) {
    if (x1 % 2 != 0) continue;
    for (long long x2 = -b; x2 <= b; ++x2) {
      if (x2 % 2 != 0) continue;
      for (long long x3 = -b; x3 <= b; ++x3) {
        if (x3 % 2 != 0) continue;
        long long s = p - x1 * x1 - x2 * x2 - x3 * x3;
        if (s <= 0) continue;
        long long x0 = isqrt_ll(s);
        if (x0 * x0 == s && x0 % 2 == 1)
          out.push_back({x0, x1, x2, x3, p});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool coord_ok(long long v, const CoordConstraint& cc) {
  if (cc.modulus != 0 && v % cc.modulus != 0) return false;
  if (cc.parity == Parity::odd && mod_norm(v, 2) != 1) return false;
  if (cc.parity == Parity::even && mod_norm(v, 2) != 0) return false;
  if (cc.positive && v <= 0) return false;
  return true;
}

}  // namespace

std::vector<std::array<long long, 4>> four_squares_with_pattern(
    long long N, const CongruencePattern& pattern, long long limit) {
  if (N < 1) throw std::invalid_argument("four_squares_with_pattern: N >= 1");
  for (const auto* cc : {&pattern.a, &pattern.b, &pattern.c, &pattern.d})
    if (cc->modulus < 1)
      throw std::invalid_argument("four_squares_with_pattern: zero modulus");

  long long B = std::min(limit, isqrt_ll(N));
  std::vector<std::array<long long, 4>> out;

  auto lo_of = [&](const CoordConstraint& cc) {
    return cc.positive ? cc.modulus : -(B / cc.modulus) * cc.modulus;
  };
  for (long long bb = lo_of(pattern.b); bb <= B; bb += pattern.b.modulus) {
    if (!coord_ok(bb, pattern.b)) continue;
    long long rb = N - bb * bb;
    if (rb < 0) continue;
    for (long long cc = lo_of(pattern.c); cc <= B; cc += pattern.c.modulus) {
      if (!coord_ok(cc, pattern.c)) continue;
      long long rc = rb - cc * cc;
      if (rc < 0) continue;
      for (long long dd = lo_of(pattern.d); dd <= B; dd += pattern.d.modulus) {
        if (!coord_ok(dd, pattern.d)) continue;
        long long rd = rc - dd * dd;
        if (rd < 0) continue;
        if (pattern.require_bcd_nonzero && bb == 0 && cc == 0 && dd == 0)
          continue;
        long long a0 = isqrt_ll(rd);
        if (a0 * a0 != rd) continue;
        if (coord_ok(a0, pattern.a)) out.push_back({a0, bb, cc, dd});
        if (a0 != 0 && coord_ok(-a0, pattern.a)) out.push_back({-a0, bb, cc, dd});
      }
    }
  }
  return out;
}

}  // namespace rama
