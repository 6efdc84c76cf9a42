#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyctor/curve.hpp"
#include "cyctor/field_roots.hpp"

namespace cyctor {

struct TorsionConfig {
  int prime_budget = 5;       // admissible primes entering the gcd bound
  int stability_window = 3;   // extra primes that must leave the bound unchanged
  std::uint64_t prime_cap = 100000;  // admissible-prime search ceiling
  int divpoly_cap = 40;
  RootsConfig roots{};        // seed and precision knobs for root searches
};

struct TorsionBound {
  Int B = 0;
  struct PrimeUse {
    std::uint64_t q;
    int f;      // residue degree used
    Int count;  // |E(F_{q^f})|
  };
  std::vector<PrimeUse> primes;
};

// one exact-order search: which x-roots exist in K and how many points they
// yield; `undecided` counts candidates the precision cap could not settle
struct LevelReport {
  std::uint64_t ell = 0;
  long level = 0;  // exact order searched (ell^k)
  int roots_in_k = 0;
  int points = 0;
  int undecided = 0;
};

struct TorsionGroup {
  // invariants (m, n): the group is Z/m x Z/mn, m = 1 for cyclic groups
  long m = 1;
  long n = 1;
  // generators on the input model over K: [order mn] or [order mn, order m]
  std::vector<PointOnCurve> generators;
  Int bound = 0;
  std::vector<std::uint64_t> aux_primes;
  std::vector<LevelReport> levels;
  std::vector<std::string> flags;  // e.g. "unresolved:ell=5,level=25"

  long order() const { return m * m * n; }
  long exponent() const { return m * n; }
  std::pair<long, long> invariants() const { return {m, m * n}; }
  bool unresolved() const;  // any "unresolved:" flag present
};

// gcd of |E(F_{q^f})| over admissible primes q (good reduction, q not dividing
// 2*3*p*disc) with f the residue degree of q in K; iteration runs until at
// least prime_budget primes are used and the gcd has been stable for
// stability_window consecutive primes.
TorsionBound torsion_bound(const CurveModel& E, const FieldPtr& K,
                           const TorsionConfig& cfg = {});

// Full torsion subgroup of E(K) for a curve defined over Q: bound first, then
// per-prime-power division-polynomial root searches with y-membership tests.
TorsionGroup torsion_subgroup(const CurveModel& E, const FieldPtr& K,
                              const TorsionConfig& cfg = {});

// |E(K)[n]| for odd n: counts the roots of the x-only division polynomial
// lying in K whose y-coordinates also lie in K. resource_error when
// undecided candidates make the count uncertifiable.
Int n_torsion_order(const CurveModel& E, const FieldPtr& K, int n,
                    const TorsionConfig& cfg = {});

// discriminant of the unique quadratic subfield of Q(zeta_p): p for
// p = 1 mod 4, -p for p = 3 mod 4
Int quadratic_subfield_disc(std::uint64_t p);

// true iff K contains the m-th roots of unity
bool weil_admissible(long m, const FieldPtr& K);

// Verifies the descent identity for the ell-primary part at the quadratic
// subfield Q(sqrt d*) of Q(zeta_p): the part over Q(sqrt d*) must equal the
// direct sum of the parts of E and of the twist E_{d*} over Q. The part over
// Q(zeta_p) itself is reported for context (it may be strictly larger).
struct TwistDescentReport {
  std::uint64_t p = 0;
  Int q_power;
  Int d_star;
  std::pair<long, long> cyclo_invariants{1, 1};
  std::pair<long, long> quad_invariants{1, 1};
  std::pair<long, long> rational_invariants{1, 1};
  std::pair<long, long> twist_invariants{1, 1};
  bool product_identity = false;    // |quad| = |rational| * |twist|
  bool equals_larger_side = false;  // quad part equals the larger Q-side part
  std::vector<std::string> flags;
};

TwistDescentReport twist_descent_check(const CurveModel& E, std::uint64_t p,
                                       const Int& q_power,
                                       const TorsionConfig& cfg = {});

}  // namespace cyctor
