#pragma once
#include "cyctor/curve.hpp"
#include "cyctor/poly.hpp"

namespace cyctor {

// Division polynomial of y^2 = x^3 + Ax + B in parity-split form:
// psi_n = x_part(x) for odd n and y * x_part(x) for even n.
struct DivisionPoly {
  int n;
  bool times_y;
  Polynomial<mpz_class> x_part;
  // x-only polynomial whose roots are the x-coordinates of the nontrivial
  // points killed by n: x_part for odd n, (x^3+Ax+B) * x_part for even n
  Polynomial<mpz_class> x_only;
};

// Cached table of the A_n / B_n recurrences over Z for one short curve.
class DivisionPolyTable {
 public:
  DivisionPolyTable(Int A, Int B, int cap = 40);

  const Int& A() const { return A_; }
  const Int& B() const { return B_; }
  int cap() const { return cap_; }

  DivisionPoly get(int n) const;  // n in [1, cap]; domain_error outside

 private:
  const Polynomial<mpz_class>& odd_part(int n) const;   // n odd, n >= -1
  const Polynomial<mpz_class>& even_part(int n) const;  // n even, n >= 0

  Int A_, B_;
  int cap_;
  Polynomial<mpz_class> F_;  // x^3 + Ax + B
  mutable std::vector<Polynomial<mpz_class>> odd_, even_;  // by n/2 index
  mutable int built_ = 1;
  void build_to(int n) const;
};

// convenience for a curve over Q (uses its integral short form)
DivisionPoly division_poly(const CurveModel& E, int n, int cap = 40);

}  // namespace cyctor
