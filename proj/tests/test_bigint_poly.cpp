#include <doctest.h>

#include <string>

#include "specnet/bigint.hpp"
#include "specnet/matrix.hpp"
#include "specnet/poly.hpp"
#include "specnet/rng.hpp"
#include "specnet/spread.hpp"

#include "oracles.hpp"

using namespace specnet;

static std::string i128_str(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
  std::string s;
  while (u) {
    s.insert(s.begin(), char('0' + (int)(u % 10)));
    u /= 10;
  }
  return neg ? "-" + s : s;
}

TEST_CASE("bigint small arithmetic matches int64") {
  SplitMix64 rng(12345);
  for (int t = 0; t < 20000; ++t) {
    long long a = rng.between(-1000000000ll, 1000000000ll);
    long long b = rng.between(-1000000000ll, 1000000000ll);
    CHECK((BigInt(a) + BigInt(b)).to_ll() == a + b);
    CHECK((BigInt(a) - BigInt(b)).to_ll() == a - b);
    CHECK((BigInt(a) * BigInt(b)).to_string() == i128_str((__int128)a * b));
    CHECK(cmp(BigInt(a), BigInt(b)) == (a < b ? -1 : a > b ? 1 : 0));
  }
}

TEST_CASE("bigint wide products against frozen values") {
  BigInt two(2), p = BigInt(1);
  for (int i = 0; i < 200; ++i) p = p * two;
  CHECK(p.to_string() == "1606938044258990275541962092341162602522202993782792835301376");

  BigInt x = BigInt::from_string("1000000000000000000000000000007");
  CHECK((x * x).to_string() ==
        "1000000000000000000000000000014000000000000000000000000000049");

  BigInt t3(1);
  for (int i = 0; i < 80; ++i) t3 = t3 * BigInt(3);
  CHECK(t3.to_string() == "147808829414345923316083210206383297601");

  BigInt s7(-1);
  for (int i = 0; i < 25; ++i) s7 = s7 * BigInt(7);
  CHECK(s7.to_string() == "-1341068619663964900807");
  CHECK(s7 == BigInt::from_string("-1341068619663964900807"));
}

TEST_CASE("bigint add/sub across limb boundaries") {
  BigInt big = BigInt::from_string("340282366920938463463374607431768211456");  // 2^128
  CHECK((big - BigInt(1)).to_string() == "340282366920938463463374607431768211455");
  CHECK((big + BigInt(-1)).to_string() == "340282366920938463463374607431768211455");
  CHECK((big - big).is_zero());
  CHECK((big - big - BigInt(5)).to_string() == "-5");
  CHECK((BigInt(0) - big).to_string() == "-340282366920938463463374607431768211456");
}

TEST_CASE("bigint heap spill and value semantics") {
  // grow past the inline capacity (5 limbs = 320 bits) and come back down
  BigInt big(1);
  for (int i = 0; i < 40; ++i) big = big * BigInt(1000000000000000000ll);  // ~ 10^720
  BigInt copy = big;
  CHECK(copy == big);
  BigInt moved = std::move(copy);
  CHECK(moved == big);
  copy = moved;  // reassign a moved-from object
  CHECK(copy == big);
  CHECK((big - big).is_zero());
  BigInt down = big - (big - BigInt(12345));
  CHECK(down.to_ll() == 12345);
  // decimal round trip at heap size
  CHECK(BigInt::from_string(big.to_string()) == big);
  big = big;  // self-assignment
  CHECK(BigInt::from_string(big.to_string()) == big);
  BigInt sq = big * big;
  CHECK(sq.divexact(1).to_string() == sq.to_string());
}

TEST_CASE("bigint exact division") {
  SplitMix64 rng(777);
  for (int t = 0; t < 5000; ++t) {
    long long a = rng.between(-1000000000000ll, 1000000000000ll);
    long long d = rng.between(1, 50);
    if (rng.next() & 1) d = -d;
    BigInt prod = BigInt(a) * BigInt(d);
    CHECK(prod.divexact(d).to_ll() == a);
  }
  CHECK_THROWS(BigInt(7).divexact(2));
}

TEST_CASE("bigint int64 edges") {
  CHECK(BigInt(INT64_MIN).to_string() == "-9223372036854775808");
  CHECK(BigInt(INT64_MIN).to_ll() == INT64_MIN);
  CHECK(BigInt(INT64_MAX).to_ll() == INT64_MAX);
  CHECK(!(BigInt(INT64_MAX) + BigInt(1)).fits_ll());
  CHECK((BigInt(INT64_MIN)).fits_ll());
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt::from_string("0").is_zero());
  CHECK(BigInt(1000).to_double() == doctest::Approx(1000.0));
  BigInt p60 = BigInt(1) ;
  for (int i = 0; i < 60; ++i) p60 = p60 * BigInt(2);
  CHECK(p60.to_double() == doctest::Approx(1152921504606846976.0));
}

TEST_CASE("poly arithmetic and synthetic division") {
  Poly<long long> p = Poly<long long>::linear_root(1) * Poly<long long>::linear_root(2);
  CHECK(p.to_line() == "2 -3 1");
  CHECK(p.eval(3) == 2);
  CHECK(p.eval(1) == 0);
  Poly<long long> q = p;
  CHECK(q.divide_by_root(1));
  CHECK(q.to_line() == "-2 1");
  CHECK(!q.divide_by_root(5));
  CHECK(q.divide_by_root(2));
  CHECK(q.degree() == 0);

  IntPoly parsed = parse_poly_line("0 16 -32 24 -8 1");
  CHECK(parsed.to_line() == "0 16 -32 24 -8 1");
  CHECK(parsed.degree() == 5);
  CHECK(parsed.is_monic());
  CHECK_THROWS_AS(parse_poly_line("1 2 x"), Error);
}

TEST_CASE("char poly: frozen examples") {
  // single arc (1,2): L = [[0,0],[-1,1]]
  Matrix<long long> l1(2);
  l1.at(1, 0) = -1;
  l1.at(1, 1) = 1;
  CHECK(char_poly(l1).to_line() == "0 -1 1");  // λ² − λ

  Matrix<long long> z(3);
  CHECK(char_poly(z).to_line() == "0 0 0 1");  // λ³

  Matrix<long long> d(3);
  d.at(0, 0) = 1;
  d.at(1, 1) = 2;
  d.at(2, 2) = 3;
  CHECK(char_poly(d).to_line() == "-6 11 -6 1");  // (λ−1)(λ−2)(λ−3)
}

TEST_CASE("char poly matches brute-force determinant expansion") {
  SplitMix64 rng(2024);
  for (int t = 0; t < 10000; ++t) {
    int n = (int)rng.between(1, 5);
    Matrix<long long> m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = rng.between(-3, 3);
    Poly<long long> fast = char_poly(m);
    Poly<long long> slow = oracles::char_poly_bruteforce(m);
    REQUIRE(fast == slow);
    // BigInt instantiation agrees with the int64 one
    Matrix<BigInt> mb(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mb.at(i, j) = BigInt(m.at(i, j));
    CHECK(char_poly(mb).to_line() == fast.to_line());
  }
}

TEST_CASE("optimal char poly expansion") {
  // (5,8): κ=2 → λ(λ−2)^4
  CHECK(optimal_char_poly<long long>(spread_parameters(5, 8)).to_line() == "0 16 -32 24 -8 1");
  // (2,1): λ(λ−1)
  CHECK(optimal_char_poly<long long>(spread_parameters(2, 1)).to_line() == "0 -1 1");
  // m = 0: λ^n
  CHECK(optimal_char_poly<long long>(spread_parameters(4, 0)).to_line() == "0 0 0 0 1");
}
