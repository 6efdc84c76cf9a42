#pragma once
#include "cyctor/curve.hpp"
#include "cyctor/fq.hpp"

namespace cyctor {

// Short-form curve y^2 = x^3 + Ax + B over a finite field of char > 3.
struct ReducedCurve {
  FqFieldPtr F;
  FqElem A, B;
};

struct FqPoint {
  bool at_infinity = true;
  FqElem x, y;
  static FqPoint infinity() { return {}; }
  static FqPoint affine(FqElem px, FqElem py) {
    return {false, std::move(px), std::move(py)};
  }
  bool operator==(const FqPoint& o) const {
    if (at_infinity || o.at_infinity) return at_infinity == o.at_infinity;
    return x == o.x && y == o.y;
  }
};

bool fq_on_curve(const ReducedCurve& E, const FqPoint& p);
FqPoint fq_negate(const ReducedCurve& E, const FqPoint& p);
FqPoint fq_add_points(const ReducedCurve& E, const FqPoint& p, const FqPoint& q);
FqPoint fq_scalar_mul(const ReducedCurve& E, const Int& k, const FqPoint& p);

struct CountBudget {
  std::uint64_t exhaustive_threshold = 1000;  // full character sum up to here
  std::uint64_t max_q = 1000000;              // beyond: resource_error
};

// Reduction of the integral short form of E/Q at a good prime q > 3.
// domain_error when q <= 3, q divides the short discriminant, or q divides a
// denominator of the original model's coefficients.
ReducedCurve reduce_mod_q(const CurveModel& E, std::uint64_t q);

// |E(F_q)| for a prime-field ReducedCurve: exhaustive character sum below the
// threshold, baby-step giant-step order finding above it.
Int count_points(const ReducedCurve& E, const CountBudget& budget = {},
                 std::uint64_t seed = 0);

// |E(F_{q^f})| from N = |E(F_q)| via the Frobenius trace recurrence
// s_0 = 2, s_1 = a = q+1-N, s_{k+1} = a s_k - q s_{k-1}; returns q^f + 1 - s_f.
Int order_over_extension(const Int& N, std::uint64_t q, int f);

}  // namespace cyctor
