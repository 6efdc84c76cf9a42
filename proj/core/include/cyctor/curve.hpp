#pragma once
#include <array>

#include "cyctor/numfield.hpp"

namespace cyctor {

struct PointOnCurve {
  bool at_infinity = true;
  FieldElement x, y;

  static PointOnCurve infinity() { return {}; }
  static PointOnCurve affine(FieldElement px, FieldElement py) {
    return {false, std::move(px), std::move(py)};
  }
  bool operator==(const PointOnCurve& o) const {
    if (at_infinity || o.at_infinity) return at_infinity == o.at_infinity;
    return x == o.x && y == o.y;
  }
};

// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with
// the standard derived quantities and a recorded isomorphism to an integral
// short model Y^2 = X^3 + AX + B (X = u^2 (x + r), Y = u^3 (y + s x + t)).
class CurveModel {
 public:
  static CurveModel from_a_invariants(const FieldPtr& K,
                                      std::array<FieldElement, 5> a);
  static CurveModel from_rationals(const std::array<Rat, 5>& a);  // over Q

  const FieldPtr& field() const { return K_; }
  const FieldElement& a1() const { return a_[0]; }
  const FieldElement& a2() const { return a_[1]; }
  const FieldElement& a3() const { return a_[2]; }
  const FieldElement& a4() const { return a_[3]; }
  const FieldElement& a6() const { return a_[4]; }
  const std::array<FieldElement, 5>& a_invariants() const { return a_; }

  const FieldElement& disc() const { return disc_; }
  const FieldElement& j_invariant() const { return j_; }

  // short-form coefficients; over Q these are integers scaled by the minimal
  // positive integer u, over other fields u = 1
  const FieldElement& shortA() const { return A_; }
  const FieldElement& shortB() const { return B_; }
  const Rat& short_u() const { return u_; }
  Int shortA_int() const;  // over Q only
  Int shortB_int() const;

  CurveModel short_model() const;  // [0,0,0,A,B] over the same field
  bool is_short() const;
  PointOnCurve to_short(const PointOnCurve& p) const;
  PointOnCurve from_short(const PointOnCurve& p) const;

 private:
  CurveModel() = default;
  FieldPtr K_;
  std::array<FieldElement, 5> a_;
  FieldElement disc_, j_, A_, B_;
  Rat u_;
  FieldElement r_, s_, t_;  // substitution data
};

bool on_curve(const CurveModel& E, const PointOnCurve& p);
PointOnCurve negate_point(const CurveModel& E, const PointOnCurve& p);
PointOnCurve add_points(const CurveModel& E, const PointOnCurve& p,
                        const PointOnCurve& q);
PointOnCurve scalar_mul(const CurveModel& E, const Int& k, const PointOnCurve& p);

// y^2 = x^3 + d^2 A x + d^3 B for the integral short form of E over Q;
// isomorphic to E over Q(sqrt d), with j preserved
CurveModel quadratic_twist(const CurveModel& E, const Int& d);

// Isomorphic-over-Q short model with excess p^4 | A, p^6 | B content divided
// out (trial division over small primes). Shrinks coefficient heights before
// division-polynomial work; the group over any extension is unchanged.
CurveModel reduce_short_model(const CurveModel& E);

}  // namespace cyctor
