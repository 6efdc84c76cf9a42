#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cyctor/poly.hpp"

namespace cyctor {

enum class FieldKind { rationals, cyclotomic, quadratic };

class FieldElement;
class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Monogenic field Q[t]/m(t): the rationals (m = t), a prime-power cyclotomic
// Q(zeta_{p^k}) (m = Phi_p(t^{p^{k-1}})), or a quadratic Q(sqrt d) (m = t^2-d,
// d squarefree). Composite non-prime-power conductors are rejected: without a
// cyclic unit group there is no inert rational prime, and the whole
// root-reconstruction strategy leans on one.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  static FieldPtr rationals();
  static FieldPtr cyclotomic(std::uint64_t n);      // n = p^k, p odd or 2? p prime
  static FieldPtr quadratic(const Int& d);          // d != 0; normalized to squarefree
  static FieldPtr from_spec(const std::string& s);  // "Q" | "cyclo:n" | "quad:d"

  FieldKind kind() const { return kind_; }
  int degree() const { return degree_; }
  const Polynomial<mpz_class>& defining_poly() const { return m_; }
  std::string spec_string() const;

  // cyclotomic only
  std::uint64_t conductor() const { return n_; }
  std::uint64_t conductor_prime() const { return p_; }
  int conductor_exponent() const { return k_; }
  // quadratic only
  const Int& quad_d() const { return d_; }

  // Galois group generators' parameters: units a of (Z/n)* for cyclotomic
  // (t -> t^a); {1, -1} encoded as {1, n-1}-style for quadratic handled by
  // galois_apply(-1). Returns every unit, identity included.
  std::vector<std::uint64_t> galois_units() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement gen() const;  // residue of t (zeta, sqrt d, or 0 over Q)
  FieldElement from_rat(const Rat& r) const;
  FieldElement element(std::vector<Rat> coords) const;
  bool same(const NumberField& o) const;

 private:
  NumberField() = default;
  FieldKind kind_ = FieldKind::rationals;
  int degree_ = 1;
  std::uint64_t n_ = 1, p_ = 0;
  int k_ = 0;
  Int d_ = 0;
  Polynomial<mpz_class> m_;
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr K, std::vector<Rat> coords);

  const FieldPtr& field() const { return K_; }
  const std::vector<Rat>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;  // all coords beyond degree 0 vanish
  Rat rational_value() const;  // pre is_rational
  bool operator==(const FieldElement& o) const;
  bool lex_less(const FieldElement& o) const { return c_ < o.c_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator*(const Rat& s) const;
  FieldElement inverse() const;  // extended Euclid against m(t)
  FieldElement pow(const Int& e) const;

 private:
  void check_same(const FieldElement& o) const;
  FieldPtr K_;
  std::vector<Rat> c_;
};

inline FieldElement elem_inverse(const FieldElement& a) { return a.inverse(); }

inline bool coeff_is_zero(const FieldElement& a) { return a.is_zero(); }
FieldElement coeff_zero_like(const FieldElement& a);
FieldElement coeff_one_like(const FieldElement& a);
inline FieldElement coeff_inv(const FieldElement& a) { return a.inverse(); }

using KPoly = Polynomial<FieldElement>;

// Galois action. Cyclotomic: a must be a unit mod the conductor, acts by
// t -> t^a. Quadratic and Q: a in {+1, -1} (as +1 / -1), acts by t -> a*t.
FieldElement galois_apply(long a, const FieldElement& alpha);

struct OrbitMinpoly {
  int degree;                    // orbit size = [Q(alpha):Q]
  Polynomial<mpq_class> minpoly; // monic, product over the orbit
};
OrbitMinpoly galois_orbit_minpoly(const FieldElement& alpha);

// promote a rational polynomial to K coefficients
KPoly kpoly_from_rational(const Polynomial<mpq_class>& f, const FieldPtr& K);

}  // namespace cyctor
