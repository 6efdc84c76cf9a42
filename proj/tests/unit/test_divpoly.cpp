#include <doctest.h>

#include "cyctor/curve.hpp"
#include "cyctor/divpoly.hpp"
#include "cyctor/reduction.hpp"

using namespace cyctor;

namespace {

using ZPoly = Polynomial<mpz_class>;

ZPoly zpoly(std::vector<long> c) {
  std::vector<Int> v(c.begin(), c.end());
  return ZPoly(std::move(v));
}

// every affine point of y^2 = x^3 + Ax + B over a small prime field
std::vector<FqPoint> all_points(const ReducedCurve& E) {
  std::vector<FqPoint> pts;
  for (std::uint64_t i = 0; i < E.F->q(); ++i)
    for (std::uint64_t j = 0; j < E.F->q(); ++j) {
      auto P = FqPoint::affine(E.F->from_int(Int(i)), E.F->from_int(Int(j)));
      if (fq_on_curve(E, P)) pts.push_back(P);
    }
  return pts;
}

}  // namespace

TEST_SUITE("divpoly") {

TEST_CASE("seeds and small closed forms") {
  DivisionPolyTable tab(Int(2), Int(3));
  auto d1 = tab.get(1);
  CHECK_FALSE(d1.times_y);
  CHECK(d1.x_part == zpoly({1}));
  CHECK(d1.x_only == zpoly({1}));

  auto d2 = tab.get(2);
  CHECK(d2.times_y);
  CHECK(d2.x_part == zpoly({2}));
  CHECK(d2.x_only == zpoly({6, 4, 0, 2}));  // 2(x^3 + 2x + 3)

  auto d3 = tab.get(3);  // 3x^4 + 6Ax^2 + 12Bx - A^2
  CHECK_FALSE(d3.times_y);
  CHECK(d3.x_only == zpoly({-4, 36, 12, 0, 3}));

  auto d4 = tab.get(4);  // y * 4(x^6 + 5Ax^4 + 20Bx^3 - 5A^2x^2 - 4ABx - 8B^2 - A^3)
  CHECK(d4.times_y);
  CHECK(d4.x_part == zpoly({-320, -96, -80, 240, 40, 0, 4}));

  DivisionPolyTable neg(Int(-1), Int(0));
  CHECK(neg.get(3).x_only == zpoly({-1, 0, -6, 0, 3}));
  DivisionPolyTable cusp(Int(0), Int(1));
  CHECK(cusp.get(3).x_only == zpoly({0, 12, 0, 0, 3}));
}

TEST_CASE("degrees and leading coefficients") {
  DivisionPolyTable tab(Int(-1), Int(0));
  for (long n = 1; n <= 13; n += 2) {
    auto d = tab.get(n);
    CHECK(d.x_part.degree() == (n * n - 1) / 2);
    CHECK(d.x_part.lc() == n);
    CHECK(d.x_only == d.x_part);
  }
  for (long n = 2; n <= 12; n += 2) {
    auto d = tab.get(n);
    CHECK(d.x_part.degree() == (n * n - 4) / 2);
    CHECK(d.x_part.lc() == n);
    CHECK(d.x_only.degree() == (n * n + 2) / 2);
    CHECK(d.x_only.lc() == n);
  }
  // deep entries still obey the degree law (exercises the full recurrence)
  DivisionPolyTable big(Int(2), Int(3));
  CHECK(big.get(39).x_part.degree() == (39 * 39 - 1) / 2);
  CHECK(big.get(39).x_part.lc() == 39);
  CHECK(big.get(40).x_part.degree() == (40 * 40 - 4) / 2);
  CHECK(big.get(40).x_part.lc() == 40);
}

TEST_CASE("roots match point orders over finite fields") {
  struct Cfg { std::uint64_t q; long A, B; };
  for (auto cfg : {Cfg{7, 0, 1}, Cfg{11, 3, 4}, Cfg{13, -1, 0}}) {
    CAPTURE(cfg.q);
    auto F = FqField::prime_field(cfg.q);
    ReducedCurve E{F, F->from_int(Int(cfg.A)), F->from_int(Int(cfg.B))};
    DivisionPolyTable tab(Int(cfg.A), Int(cfg.B));
    auto pts = all_points(E);
    REQUIRE_FALSE(pts.empty());
    for (long n = 2; n <= 13; ++n) {
      if (n % static_cast<long>(cfg.q) == 0) continue;  // stay separable
      auto red = fq_poly_from_integers(tab.get(n).x_only, F);
      for (const auto& P : pts) {
        bool killed = fq_scalar_mul(E, n, P).at_infinity;
        bool vanishes = poly_eval(red, P.x).is_zero();
        CHECK(killed == vanishes);
      }
    }
  }
}

TEST_CASE("curve-level convenience uses the integral short form") {
  auto E = CurveModel::from_rationals({Rat(0), Rat(-1), Rat(1), Rat(0), Rat(0)});
  // short form is y^2 = x^3 - 432x + 8208
  auto d3 = division_poly(E, 3);
  CHECK(d3.x_only == zpoly({-186624, 98496, -2592, 0, 3}));

  auto K = NumberField::cyclotomic(5);
  auto EK = CurveModel::from_a_invariants(
      K, {K->zero(), K->zero(), K->zero(), K->zero(), K->one()});
  CHECK_THROWS_AS(division_poly(EK, 3), domain_error);
}

TEST_CASE("index validation and cap") {
  DivisionPolyTable tab(Int(1), Int(1));
  CHECK_THROWS_AS(tab.get(0), domain_error);
  CHECK_THROWS_AS(tab.get(-5), domain_error);
  CHECK_THROWS_AS(tab.get(41), domain_error);
  CHECK_NOTHROW(tab.get(40));
  DivisionPolyTable wide(Int(1), Int(1), 45);
  CHECK(wide.get(43).x_part.degree() == (43 * 43 - 1) / 2);
}

}  // TEST_SUITE
