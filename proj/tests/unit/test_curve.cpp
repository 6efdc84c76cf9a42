#include <doctest.h>

#include "cyctor/curve.hpp"

using namespace cyctor;

namespace {

CurveModel qcurve(long a1, long a2, long a3, long a4, long a6) {
  return CurveModel::from_rationals(
      {Rat(a1), Rat(a2), Rat(a3), Rat(a4), Rat(a6)});
}

PointOnCurve qpt(const CurveModel& E, const Rat& x, const Rat& y) {
  return PointOnCurve::affine(E.field()->from_rat(x), E.field()->from_rat(y));
}

}  // namespace

TEST_SUITE("curve") {

TEST_CASE("discriminants and j-invariants") {
  auto E1 = qcurve(0, 0, 0, -1, 0);  // y^2 = x^3 - x
  CHECK(E1.disc().rational_value() == 64);
  CHECK(E1.j_invariant().rational_value() == 1728);

  auto E2 = qcurve(0, 0, 0, 0, 1);  // y^2 = x^3 + 1
  CHECK(E2.j_invariant().rational_value() == 0);
  CHECK(E2.disc().rational_value() == -432);

  auto E3 = qcurve(0, -1, 1, 0, 0);  // y^2 + y = x^3 - x^2
  CHECK(E3.disc().rational_value() == -11);
  CHECK(E3.j_invariant().rational_value() == make_rat(-4096, 11));
}

TEST_CASE("singular models are rejected") {
  CHECK_THROWS_AS(qcurve(0, 0, 0, 0, 0), domain_error);
  CHECK_THROWS_AS(qcurve(0, 0, 0, -3, 2), domain_error);  // (x-1)^2(x+2)
}

TEST_CASE("integral short form with minimal scaling") {
  auto E = qcurve(0, 0, 0, -1, 0);  // already short and integral
  CHECK(E.short_u() == 1);
  CHECK(E.shortA_int() == -1);
  CHECK(E.shortB_int() == 0);
  CHECK(E.is_short());

  auto E3 = qcurve(0, -1, 1, 0, 0);
  CHECK_FALSE(E3.is_short());
  CHECK(E3.short_u() == 6);
  CHECK(E3.shortA_int() == -432);
  CHECK(E3.shortB_int() == 8208);
  // the short discriminant picks up u^12 = 6^12
  auto S = E3.short_model();
  CHECK(S.disc().rational_value() == Rat(-11) * Rat(2176782336L));
  // coefficient denominators force a larger u
  auto Ed = CurveModel::from_rationals({Rat(0), Rat(0), Rat(0), make_rat(1, 5), Rat(0)});
  CHECK(Ed.short_u() == 5);
  CHECK(Ed.shortA_int() == 125);
}

TEST_CASE("long-to-short substitution maps points to points") {
  auto E3 = qcurve(0, -1, 1, 0, 0);
  auto P = qpt(E3, 0, 0);
  REQUIRE(on_curve(E3, P));
  auto Ps = E3.to_short(P);
  CHECK(Ps.x.rational_value() == -12);
  CHECK(Ps.y.rational_value() == 108);
  CHECK(on_curve(E3.short_model(), Ps));
  CHECK(E3.from_short(Ps) == P);
  // infinity maps to infinity
  CHECK(E3.to_short(PointOnCurve::infinity()).at_infinity);
}

TEST_CASE("group law hand oracles on y^2 = x^3 - x") {
  auto E = qcurve(0, 0, 0, -1, 0);
  auto P = qpt(E, 0, 0), Q = qpt(E, 1, 0);
  auto S = add_points(E, P, Q);
  REQUIRE_FALSE(S.at_infinity);
  CHECK(S == qpt(E, -1, 0));
  // all three are 2-torsion
  CHECK(add_points(E, P, P).at_infinity);
  CHECK(scalar_mul(E, 2, Q).at_infinity);
  CHECK(add_points(E, P, PointOnCurve::infinity()) == P);
  CHECK(add_points(E, P, negate_point(E, P)).at_infinity);
}

TEST_CASE("multiples of (0,0) on y^2 + y = x^3 - x") {
  auto E = qcurve(0, 0, 1, -1, 0);  // rank-one curve, P has infinite order
  auto P = qpt(E, 0, 0);
  REQUIRE(on_curve(E, P));
  CHECK(scalar_mul(E, 2, P) == qpt(E, 1, 0));
  CHECK(scalar_mul(E, 3, P) == qpt(E, -1, -1));
  CHECK(scalar_mul(E, 4, P) == qpt(E, 2, -3));
  CHECK(scalar_mul(E, 6, P) == qpt(E, 6, 14));
  CHECK(scalar_mul(E, 0, P).at_infinity);
  CHECK(scalar_mul(E, -3, P) == negate_point(E, scalar_mul(E, 3, P)));
  // 5P = P + 4P, and the group is torsion-free here
  CHECK(scalar_mul(E, 5, P) == add_points(E, P, scalar_mul(E, 4, P)));
  for (int k = 1; k <= 8; ++k) CHECK_FALSE(scalar_mul(E, k, P).at_infinity);
  // associativity on sampled multiples
  auto A = P, B = scalar_mul(E, 2, P), C = scalar_mul(E, 3, P);
  CHECK(add_points(E, add_points(E, A, B), C) ==
        add_points(E, A, add_points(E, B, C)));
  // the substitution commutes with addition
  auto S = E.short_model();
  CHECK(add_points(S, E.to_short(A), E.to_short(B)) == E.to_short(add_points(E, A, B)));
  CHECK(add_points(S, E.to_short(B), E.to_short(C)) == E.to_short(add_points(E, B, C)));
}

TEST_CASE("five-torsion of the conductor-11 curve") {
  auto E = qcurve(0, -1, 1, 0, 0);
  auto P = qpt(E, 0, 0);
  REQUIRE(on_curve(E, P));
  CHECK(scalar_mul(E, 5, P).at_infinity);
  for (int k = 1; k <= 4; ++k) CHECK_FALSE(scalar_mul(E, k, P).at_infinity);
  CHECK(scalar_mul(E, 4, P) == negate_point(E, P));
}

TEST_CASE("off-curve inputs are rejected") {
  auto E = qcurve(0, 0, 0, -1, 0);
  auto bad = qpt(E, 2, 3);
  CHECK_FALSE(on_curve(E, bad));
  CHECK_THROWS_AS(add_points(E, bad, qpt(E, 0, 0)), domain_error);
  CHECK_THROWS_AS(scalar_mul(E, 2, bad), domain_error);
}

TEST_CASE("quadratic twists") {
  auto E = qcurve(0, 0, 0, -1, 0);
  auto Em1 = quadratic_twist(E, -1);
  CHECK(Em1.shortA_int() == -1);  // d^2 A = -1: the curve is its own twist
  CHECK(Em1.shortB_int() == 0);
  CHECK(quadratic_twist(E, 1).shortA_int() == -1);

  auto E3 = qcurve(0, -1, 1, 0, 0);
  for (long d : {-1L, 2L, -7L, 5L}) {
    auto T = quadratic_twist(E3, d);
    CHECK(T.j_invariant() == E3.j_invariant());
    CHECK(T.shortA_int() == d * d * (-432));
    CHECK(T.shortB_int() == d * d * d * 8208);
  }
  // square factors of d are stripped
  CHECK(quadratic_twist(E3, 8).shortA_int() == quadratic_twist(E3, 2).shortA_int());
  CHECK_THROWS_AS(quadratic_twist(E3, 0), domain_error);
}

TEST_CASE("curves over a cyclotomic field") {
  auto K = NumberField::cyclotomic(5);
  auto z = K->gen();
  // y^2 = x^3 + (1 - z^3): carries the obvious point (z, 1)
  auto a6 = K->one() - z.pow(3);
  auto E = CurveModel::from_a_invariants(
      K, {K->zero(), K->zero(), K->zero(), K->zero(), a6});
  CHECK(E.disc() == a6 * a6 * Rat(-432));
  auto P = PointOnCurve::affine(z, K->one());
  REQUIRE(on_curve(E, P));
  // closure under the group law
  auto P2 = add_points(E, P, P);
  auto P3 = add_points(E, P2, P);
  CHECK(on_curve(E, P2));
  CHECK(on_curve(E, P3));
  CHECK(add_points(E, P2, negate_point(E, P2)).at_infinity);
  CHECK(scalar_mul(E, 3, P) == P3);
  // singular curve over K rejected
  CHECK_THROWS_AS(CurveModel::from_a_invariants(
                      K, {K->zero(), K->zero(), K->zero(), K->zero(), K->zero()}),
                  domain_error);
}

TEST_CASE("invariants agree with a from-scratch recomputation") {
  struct A5 { long a1, a2, a3, a4, a6; };
  for (auto a : {A5{1, 2, 3, 4, 5}, A5{0, -1, 1, -10, -20},
                 A5{1, 0, 0, -45, 81}, A5{0, 0, 1, -1, 0}}) {
    Rat b2 = Rat(a.a1) * a.a1 + 4 * Rat(a.a2);
    Rat b4 = 2 * Rat(a.a4) + Rat(a.a1) * a.a3;
    Rat b6 = Rat(a.a3) * a.a3 + 4 * Rat(a.a6);
    Rat b8 = Rat(a.a1) * a.a1 * a.a6 + 4 * Rat(a.a2) * a.a6 -
             Rat(a.a1) * a.a3 * a.a4 + Rat(a.a2) * a.a3 * a.a3 -
             Rat(a.a4) * a.a4;
    Rat c4 = b2 * b2 - 24 * b4;
    Rat c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    Rat disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    REQUIRE(disc != 0);
    CHECK(1728 * disc == c4 * c4 * c4 - c6 * c6);
    auto E = qcurve(a.a1, a.a2, a.a3, a.a4, a.a6);
    CHECK(E.disc().rational_value() == disc);
    CHECK(E.j_invariant().rational_value() == c4 * c4 * c4 / disc);
  }
}

}  // TEST_SUITE
