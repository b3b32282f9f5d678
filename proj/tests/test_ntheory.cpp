#include "rama/ntheory.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "doctest.h"

using namespace rama;

namespace {

// exhaustive squaring oracle for residues mod q
std::set<long long> squares_mod(long long q) {
  std::set<long long> s;
  for (long long r = 1; r < q; ++r) s.insert(r * r % q);
  return s;
}

}  // namespace

TEST_CASE("legendre examples") {
  CHECK(legendre(5, 29) == 1);   // 11^2 = 121 = 5 mod 29
  CHECK(legendre(5, 13) == -1);
  CHECK(legendre(0, 29) == 0);
  CHECK(legendre(-1, 29) == 1);
  CHECK(legendre(-1, 19) == -1);  // 19 = 3 mod 4
}

TEST_CASE("legendre rejects non-prime or even q") {
  CHECK_THROWS_AS(legendre(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(legendre(3, 15), std::invalid_argument);
  CHECK_THROWS_AS(legendre(3, 1), std::invalid_argument);
}

TEST_CASE("legendre agrees with exhaustive square enumeration up to 101") {
  for (long long q : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                      59, 61, 67, 71, 73, 79, 83, 89, 97, 101}) {
    auto sq = squares_mod(q);
    for (long long a = 0; a < q; ++a) {
      int expected = a == 0 ? 0 : (sq.count(a) ? 1 : -1);
      CHECK(legendre(a, q) == expected);
    }
  }
}

TEST_CASE("sqrt_mod examples and tie-break") {
  CHECK(sqrt_mod(-1, 29) == 12);  // roots 12 and 17; smaller wins
  CHECK(sqrt_mod(5, 29) == 11);
  CHECK(sqrt_mod(4, 29) == 2);
  CHECK(!sqrt_mod(2, 29).has_value());
  CHECK(sqrt_mod(0, 29) == 0);
  CHECK(sqrt_mod(7, 1) == 0);
}

TEST_CASE("sqrt_mod rejects even or nonpositive m") {
  CHECK_THROWS_AS(sqrt_mod(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(sqrt_mod(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(sqrt_mod(1, -3), std::invalid_argument);
}

TEST_CASE("sqrt_mod roundtrip and completeness over odd m") {
  std::vector<long long> moduli;
  for (long long m = 1; m <= 401; m += 2) moduli.push_back(m);
  // prime powers and mixed composites near the top of the tested range
  for (long long m : {441, 625, 729, 1029, 1089, 1875, 1925, 1999})
    moduli.push_back(m);
  for (long long m : moduli) {
    std::set<long long> sq;
    for (long long r = 0; r < m; ++r) sq.insert(r * r % m);
    for (long long a = 0; a < m; ++a) {
      auto r = sqrt_mod(a, m);
      if (r) {
        REQUIRE(*r >= 0);
        REQUIRE(*r < m);
        REQUIRE((*r * *r) % m == a);
      } else {
        REQUIRE(!sq.count(a));
      }
    }
  }
}

TEST_CASE("sqrt_mod is deterministic") {
  for (long long a : {2, 3, 5, 7, 11}) {
    auto r1 = sqrt_mod(a, 1925);  // 5^2 * 7 * 11
    auto r2 = sqrt_mod(a, 1925);
    CHECK(r1 == r2);
  }
}

TEST_CASE("generator solutions for p = 5 match the known six") {
  auto sols = enumerate_generator_solutions(5);
  std::vector<QuaternionSolution> expected = {
      {1, -2, 0, 0, 5}, {1, 0, -2, 0, 5}, {1, 0, 0, -2, 5},
      {1, 0, 0, 2, 5},  {1, 0, 2, 0, 5},  {1, 2, 0, 0, 5}};
  CHECK(sols == expected);
}

TEST_CASE("generator solution counts are p + 1") {
  for (long long p : {5, 13, 17, 29}) {
    auto sols = enumerate_generator_solutions(p);
    CHECK(sols.size() == static_cast<std::size_t>(p + 1));
    std::set<QuaternionSolution> uniq(sols.begin(), sols.end());
    CHECK(uniq.size() == sols.size());
    for (const auto& s : sols) {
      CHECK(s.x0 * s.x0 + s.x1 * s.x1 + s.x2 * s.x2 + s.x3 * s.x3 == p);
      CHECK(s.x0 > 0);
      CHECK(s.x0 % 2 == 1);
      CHECK(s.x1 % 2 == 0);
      CHECK(s.x2 % 2 == 0);
      CHECK(s.x3 % 2 == 0);
      CHECK(uniq.count(s.conjugate()) == 1);  // closed under conjugation
    }
  }
}

TEST_CASE("generator solutions for p = 13 match a brute-force census") {
  // independent loop structure: try every x0 and every magnitude split
  std::set<std::array<long long, 4>> brute;
  for (long long x0 = 1; x0 * x0 <= 13; x0 += 2)
    for (long long x1 = -4; x1 <= 4; ++x1)
      for (long long x2 = -4; x2 <= 4; ++x2)
        for (long long x3 = -4; x3 <= 4; ++x3)
          if (x1 % 2 == 0 && x2 % 2 == 0 && x3 % 2 == 0 &&
              x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3 == 13)
            brute.insert({x0, x1, x2, x3});
  auto sols = enumerate_generator_solutions(13);
  REQUIRE(sols.size() == brute.size());
  for (const auto& s : sols) CHECK(brute.count({s.x0, s.x1, s.x2, s.x3}) == 1);
}

TEST_CASE("generator solutions reject p = 3 mod 4") {
  CHECK_THROWS_AS(enumerate_generator_solutions(7), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_generator_solutions(4), std::invalid_argument);
}

TEST_CASE("four squares: unit norm") {
  CongruencePattern pat;
  pat.a.parity = Parity::odd;
  pat.a.positive = true;
  auto sols = four_squares_with_pattern(1, pat, 1);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] == std::array<long long, 4>{1, 0, 0, 0});
}

TEST_CASE("four squares with the generator pattern reproduces p = 5") {
  CongruencePattern pat;
  pat.a.parity = Parity::odd;
  pat.a.positive = true;
  pat.b.parity = pat.c.parity = pat.d.parity = Parity::even;
  auto sols = four_squares_with_pattern(5, pat, 3);
  auto gen = enumerate_generator_solutions(5);
  REQUIRE(sols.size() == gen.size());
  std::set<std::array<long long, 4>> got(sols.begin(), sols.end());
  for (const auto& s : gen) CHECK(got.count({s.x0, s.x1, s.x2, s.x3}) == 1);
}

TEST_CASE("four squares: certified emptiness when the modulus is too big") {
  CongruencePattern pat;
  pat.a.parity = Parity::odd;
  pat.b.modulus = pat.c.modulus = pat.d.modulus = 26;
  pat.require_bcd_nonzero = true;
  CHECK(four_squares_with_pattern(25, pat, 5).empty());
}

TEST_CASE("four squares with empty pattern matches direct enumeration") {
  for (long long n = 1; n <= 200; ++n) {
    // direct four-loop census
    std::size_t direct = 0;
    for (long long a = -14; a <= 14; ++a)
      for (long long b = -14; b <= 14; ++b)
        for (long long c = -14; c <= 14; ++c)
          for (long long d = -14; d <= 14; ++d)
            if (a * a + b * b + c * c + d * d == n) ++direct;
    auto sols = four_squares_with_pattern(n, CongruencePattern{}, 15);
    CHECK(sols.size() == direct);
  }
}

TEST_CASE("four squares rejects bad arguments") {
  CHECK_THROWS_AS(four_squares_with_pattern(0, CongruencePattern{}, 5),
                  std::invalid_argument);
  CongruencePattern bad;
  bad.b.modulus = 0;
  CHECK_THROWS_AS(four_squares_with_pattern(5, bad, 5), std::invalid_argument);
}

TEST_CASE("primality and factorization helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(229));
  CHECK(!is_prime(1));
  CHECK(!is_prime(841));
  auto f = factorize(1925);  // 5^2 * 7 * 11
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<long long, int>{5, 2});
  CHECK(f[1] == std::pair<long long, int>{7, 1});
  CHECK(f[2] == std::pair<long long, int>{11, 1});
}
