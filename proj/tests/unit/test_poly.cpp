#include <doctest.h>

#include <random>

#include "cyctor/fq.hpp"
#include "cyctor/poly.hpp"

using namespace cyctor;

namespace {

using QPoly = Polynomial<mpq_class>;

QPoly qp(std::initializer_list<long> coeffs) {
  std::vector<mpq_class> v;
  for (long c : coeffs) v.emplace_back(c);
  return QPoly(std::move(v));
}

QPoly random_qpoly(std::mt19937_64& rng, int deg) {
  std::vector<mpq_class> v;
  for (int i = 0; i <= deg; ++i)
    v.push_back(make_rat(Int(static_cast<long>(rng() % 21) - 10),
                         Int(static_cast<long>(rng() % 4) + 1)));
  return QPoly(std::move(v));
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("zero polynomial conventions") {
  QPoly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(poly_add(z, z).is_zero());
  CHECK(poly_mul(z, qp({1, 2})).is_zero());
  CHECK(qp({0, 0, 0}).is_zero());  // trailing zeros trimmed on construction
}

TEST_CASE("karatsuba agrees with schoolbook on random inputs") {
  std::mt19937_64 rng(101);
  int saved = karatsuba_threshold();
  for (int trial = 0; trial < 40; ++trial) {
    QPoly a = random_qpoly(rng, 20 + static_cast<int>(rng() % 80));
    QPoly b = random_qpoly(rng, 20 + static_cast<int>(rng() % 80));
    karatsuba_threshold() = 1000000;  // force schoolbook
    QPoly s(mul_school(a.c, b.c));
    karatsuba_threshold() = 2;        // force karatsuba all the way down
    QPoly k = poly_mul(a, b);
    CHECK(s == k);
  }
  karatsuba_threshold() = saved;
}

TEST_CASE("divrem invariant f = q*g + r") {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 60; ++trial) {
    QPoly f = random_qpoly(rng, static_cast<int>(rng() % 12));
    QPoly g = random_qpoly(rng, static_cast<int>(rng() % 6));
    if (g.is_zero()) continue;
    auto [q, r] = poly_divrem(f, g);
    CHECK(poly_add(poly_mul(q, g), r) == f);
    CHECK(r.degree() < g.degree());
  }
  CHECK_THROWS_AS(poly_divrem(qp({1}), QPoly{}), domain_error);
}

TEST_CASE("poly_gcd frozen examples") {
  // gcd(x^2-1, x-1) = x-1
  CHECK(poly_gcd(qp({-1, 0, 1}), qp({-1, 1})) == qp({-1, 1}));
  // f = (x-1)^2 (x+2) = x^3 - 3x + 2 ; gcd(f, f') = x-1
  QPoly f = qp({2, -3, 0, 1});
  CHECK(poly_gcd(f, poly_derivative(f)) == qp({-1, 1}));
  // gcd(f, 0) = monic(f)
  CHECK(poly_gcd(qp({2, 4}), QPoly{}) == QPoly(std::vector<mpq_class>{mpq_class(1, 2), 1}));
}

TEST_CASE("poly_gcd over F_5 frozen example") {
  auto F = FqField::prime_field(5);
  auto mk = [&](std::initializer_list<int> cs) {
    std::vector<FqElem> v;
    for (int c : cs) v.push_back(F->from_int(c));
    return FqPoly(std::move(v));
  };
  // gcd(x^2+1, x+2) over F_5 = x+2 since (-2)^2+1 = 5 = 0
  CHECK(poly_gcd(mk({1, 0, 1}), mk({2, 1})) == mk({2, 1}));
}

TEST_CASE("gcd divides both arguments") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    QPoly g = random_qpoly(rng, 1 + static_cast<int>(rng() % 3));
    QPoly a = poly_mul(g, random_qpoly(rng, static_cast<int>(rng() % 4)));
    QPoly b = poly_mul(g, random_qpoly(rng, static_cast<int>(rng() % 4)));
    if (a.is_zero() || b.is_zero()) continue;
    QPoly d = poly_gcd(a, b);
    CHECK(d.degree() >= g.degree());
    CHECK(poly_divrem(a, d).second.is_zero());
    CHECK(poly_divrem(b, d).second.is_zero());
  }
}

TEST_CASE("xgcd bezout identity") {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 30; ++trial) {
    QPoly a = random_qpoly(rng, 1 + static_cast<int>(rng() % 5));
    QPoly b = random_qpoly(rng, 1 + static_cast<int>(rng() % 5));
    auto [g, s, t] = poly_xgcd(a, b);
    CHECK(poly_add(poly_mul(s, a), poly_mul(t, b)) == g);
  }
}

TEST_CASE("powmod frozen examples") {
  QPoly mod = qp({1, 0, 1});  // x^2+1
  QPoly x = qp({0, 1});
  CHECK(powmod(x, Int(2), mod) == qp({-1}));
  CHECK(powmod(x, Int(4), mod) == qp({1}));
  // over F_2: x^5 mod (x^2+x+1) = x+1
  auto F2 = FqField::prime_field(2);
  auto mk = [&](std::initializer_list<int> cs) {
    std::vector<FqElem> v;
    for (int c : cs) v.push_back(F2->from_int(c));
    return FqPoly(std::move(v));
  };
  CHECK(powmod(mk({0, 1}), Int(5), mk({1, 1, 1})) == mk({1, 1}));
  CHECK_THROWS_AS(powmod(x, Int(3), QPoly{}), domain_error);
}

TEST_CASE("powmod matches naive repeated multiplication") {
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 25; ++trial) {
    QPoly b = random_qpoly(rng, static_cast<int>(rng() % 5));
    QPoly m = random_qpoly(rng, 2 + static_cast<int>(rng() % 3));
    if (m.is_zero() || b.is_zero()) continue;
    unsigned e = static_cast<unsigned>(rng() % 12);
    QPoly naive = qp({1});
    for (unsigned i = 0; i < e; ++i) naive = poly_rem(poly_mul(naive, b), m);
    CHECK(powmod(b, Int(e), m) == naive);
  }
}

TEST_CASE("discriminant frozen examples") {
  CHECK(discriminant(qp({1, 0, 1})) == Rat(-4));   // x^2+1
  CHECK(discriminant(qp({-5, 0, 1})) == Rat(20));  // x^2-5
  // x^3 + Ax + B with (A,B) = (-1,0): -4A^3 - 27B^2 = 4
  CHECK(discriminant(qp({0, -1, 0, 1})) == Rat(4));
  CHECK_THROWS_AS(discriminant(qp({3})), domain_error);
}

TEST_CASE("discriminant detects repeated roots") {
  std::mt19937_64 rng(106);
  for (int trial = 0; trial < 25; ++trial) {
    QPoly r = random_qpoly(rng, 1);
    if (r.degree() != 1) continue;
    QPoly sq = poly_mul(r, r);
    QPoly with_rep = poly_mul(sq, random_qpoly(rng, 1 + static_cast<int>(rng() % 2)));
    if (with_rep.degree() < 1) continue;
    CHECK(discriminant(with_rep) == 0);
  }
  // short-curve cubic discriminant formula on random (A, B)
  for (int trial = 0; trial < 25; ++trial) {
    long A = static_cast<long>(rng() % 19) - 9, B = static_cast<long>(rng() % 19) - 9;
    Rat expect = Rat(-4) * A * A * A - Rat(27) * B * B;
    CHECK(discriminant(qp({B, A, 0, 1})) == expect);
  }
}

TEST_CASE("resultant is multiplicative in the first argument") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 20; ++trial) {
    QPoly a = random_qpoly(rng, 1 + static_cast<int>(rng() % 3));
    QPoly b = random_qpoly(rng, 1 + static_cast<int>(rng() % 3));
    QPoly h = random_qpoly(rng, 1 + static_cast<int>(rng() % 3));
    if (a.is_zero() || b.is_zero() || h.is_zero()) continue;
    CHECK(poly_resultant(poly_mul(a, b), h) ==
          poly_resultant(a, h) * poly_resultant(b, h));
  }
}

TEST_CASE("clear_denominators round-trip") {
  QPoly f(std::vector<mpq_class>{mpq_class(1, 2), mpq_class(-2, 3), mpq_class(5)});
  auto [g, den] = clear_denominators(f);
  CHECK(den == 6);
  CHECK(g == Polynomial<mpz_class>(std::vector<mpz_class>{3, -4, 30}));
  for (std::size_t i = 0; i < f.c.size(); ++i)
    CHECK(Rat(g.c[i]) / Rat(den) == f.c[i]);
}

}  // TEST_SUITE
