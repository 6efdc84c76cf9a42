#pragma once
#include <array>
#include <json.hpp>
#include <string>

#include "cyctor/curve.hpp"
#include "cyctor/jkl.hpp"
#include "cyctor/kernel_field.hpp"
#include "cyctor/torsion.hpp"
#include "cyctor/verify.hpp"

namespace cyctor {

// Insertion-ordered JSON so every renderer below is byte-deterministic.
using ojson = nlohmann::ordered_json;

// Exact values travel as strings ("3/4", "-11"), never as floating point.
std::string rat_string(const Rat& r);
Rat parse_rat_string(const std::string& s);  // domain_error on malformed input

ojson to_json(const FieldElement& a);  // coordinate strings, degree 0 first
ojson to_json(const PointOnCurve& p);  // {"x": [...], "y": [...]} or "infinity"
ojson to_json(const Polynomial<Rat>& f);  // coefficient strings, ascending
ojson to_json(const CurveModel& E);
ojson to_json(const TorsionBound& b);
ojson to_json(const TorsionGroup& g);
ojson to_json(const TwistDescentReport& r);
ojson to_json(const KernelFieldReport& r);
ojson to_json(const CertifiedRoots& r);
ojson to_json(const FamilyCurve& f);

// include_timing=false drops wall-clock fields so repeated runs with the same
// seed serialize identically
ojson to_json(const ClaimOutcome& c, bool include_timing = true);
ojson to_json(const VerificationReport& r, bool include_timing = true);

// array of 5 rational strings [a1, a2, a3, a4, a6]
std::array<Rat, 5> parse_ainvs(const ojson& j);
// array of rational strings, constant coefficient first
Polynomial<Rat> parse_poly(const ojson& j);

}  // namespace cyctor
