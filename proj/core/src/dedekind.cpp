#include "cyctor/dedekind.hpp"

#include "cyctor/fq.hpp"
#include "cyctor/fq_roots.hpp"
#include "cyctor/intmath.hpp"

namespace cyctor {

const char* to_string(Ramification r) {
  switch (r) {
    case Ramification::ramified: return "ramified";
    case Ramification::unramified: return "unramified";
    case Ramification::indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

// lift a polynomial over a prime field back to Z with coefficients in [0, p)
Polynomial<mpz_class> lift_to_z(const FqPoly& a) {
  std::vector<mpz_class> v;
  v.reserve(a.c.size());
  for (const auto& e : a.c) v.emplace_back(static_cast<unsigned long>(e.coords()[0]));
  return Polynomial<mpz_class>(std::move(v));
}

}  // namespace

Ramification dedekind_ramified(const Polynomial<mpz_class>& g, std::uint64_t p) {
  if (g.degree() < 1 || g.lc() != 1)
    throw domain_error("dedekind_ramified: polynomial must be monic and nonconstant");
  if (!is_prime_u64(p)) throw domain_error("dedekind_ramified: modulus must be prime");

  auto F = FqField::prime_field(p);
  FqPoly gbar = fq_poly_from_integers(g, F);
  auto parts = squarefree_decomposition(gbar);

  bool squarefree = true;
  FqPoly radical(std::vector<FqElem>{F->one()});
  for (const auto& [comp, mult] : parts) {
    if (mult > 1) squarefree = false;
    radical = poly_mul(radical, comp);
  }
  if (squarefree) return Ramification::unramified;

  auto [cof, rem] = poly_divrem(gbar, radical);
  if (!rem.is_zero())
    throw domain_error("dedekind_ramified: radical does not divide (bug)");

  // T = (g1*h1 - g)/p with g1, h1 the integer lifts of radical and cofactor
  Polynomial<mpz_class> g1 = lift_to_z(radical), h1 = lift_to_z(cof);
  Polynomial<mpz_class> num = poly_sub(poly_mul(g1, h1), g);
  std::vector<mpz_class> tq;
  tq.reserve(num.c.size());
  for (const auto& c : num.c) {
    mpz_class quo, rm;
    mpz_fdiv_qr_ui(quo.get_mpz_t(), rm.get_mpz_t(), c.get_mpz_t(), p);
    if (rm != 0)
      throw domain_error("dedekind_ramified: lift product mismatch (bug)");
    tq.push_back(quo);
  }
  FqPoly tbar = fq_poly_from_integers(Polynomial<mpz_class>(std::move(tq)), F);

  FqPoly u = poly_gcd(poly_gcd(tbar, radical), cof);
  return u.degree() == 0 ? Ramification::ramified : Ramification::indeterminate;
}

}  // namespace cyctor
