#pragma once
#include "cyctor/curve.hpp"

namespace cyctor {

// A member of one of the parametric quadratic-field families: the curve over
// Q together with the squarefree integer d identifying the field Q(sqrt d)
// the family's torsion statement refers to.
struct FamilyCurve {
  CurveModel curve;
  Int d;        // squarefree part of d(t)
  Rat d_value;  // the raw rational d(t)
};

// squarefree part of a nonzero rational: the unique squarefree integer d
// such that r = d * s^2 with s rational
Int rational_squarefree_part(const Rat& r);

// Tate normal form y^2 + (1-c) xy - b y = x^3 - b x^2 with
//   b = t^3 (2t^2 - 3t + 1) / (t^2 - 3t + 1)^2,
//   c = -t (2t^2 - 3t + 1) / (t^2 - 3t + 1),
// whose torsion over Q(sqrt(8t^3 - 8t^2 + 1)) contains Z/2 x Z/10.
// Degenerate parameters (t in {0, 1/2, 1}, t^2 - 3t + 1 = 0, or d(t) a
// rational square or zero) raise domain_error.
FamilyCurve family_z2z10(const Rat& t);

// Same Tate form with b = c + c^2 and c = (1 - t^2) / (t^4 + 3t^2); torsion
// over Q(sqrt((t^2 - 1)/(t^2 + 3))) contains Z/2 x Z/12. Degenerate
// parameters (t in {-1, 0, 1} or d(t) a rational square) raise domain_error.
FamilyCurve family_z2z12(const Rat& t);

// named lookup used by the command line ("jkl10" / "jkl12")
FamilyCurve family_by_name(const std::string& name, const Rat& t);

}  // namespace cyctor
