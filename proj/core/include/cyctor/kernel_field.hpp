#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyctor/curve.hpp"
#include "cyctor/field_roots.hpp"

namespace cyctor {

struct KernelRootInfo {
  FieldElement root;         // x-coordinate on the integral short model
  int orbit_degree = 0;      // [Q(root) : Q] = Galois orbit size
  Polynomial<Rat> min_poly;  // monic minimal polynomial over Q
  // Dedekind verdict per prime dividing the discriminant of the monic
  // integral polynomial attached to the root (scaled generator when the
  // minimal polynomial itself is not integral): "ramified" / "unramified" /
  // "indeterminate", primes ascending
  std::vector<std::pair<Int, std::string>> ramification;
  bool disc_fully_factored = true;
  int y_in_field = 0;  // 1 = yes, 0 = no, -1 = undecided at the precision cap
};

struct KernelFieldConfig {
  int divpoly_cap = 40;
  RootsConfig roots{};
  std::uint64_t disc_trial_bound = 1000000;  // trial division on discriminants
};

struct KernelFieldReport {
  std::uint64_t ell = 0;
  std::string field;  // spec string of K
  bool has_root = false;
  std::vector<KernelRootInfo> roots;  // sorted by coordinates
  bool certified = false;             // the root list is provably complete
  int undecided = 0;
  std::vector<std::string> flags;
};

// Where the x-coordinates of the order-ell points of E sit relative to K:
// finds the roots of the ell-division polynomial (x-only form, taken on E's
// integral short model) that lie in K, and reports each root's Galois orbit
// degree, minimal polynomial over Q, and the ramification picture of that
// polynomial's discriminant. K-membership, orbit degrees and ramification at
// ell are unchanged by the rational rescaling to the short model.
//
// E must be defined over Q and ell an odd prime; ell beyond the
// division-polynomial cap raises resource_error, undecided lifts are counted
// and flagged rather than dropped.
KernelFieldReport isogeny_kernel_field(const CurveModel& E, std::uint64_t ell,
                                       const FieldPtr& K,
                                       const KernelFieldConfig& cfg = {});

}  // namespace cyctor
