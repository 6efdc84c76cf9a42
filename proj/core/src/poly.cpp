#include "cyctor/poly.hpp"

namespace cyctor {

Rat discriminant(const Polynomial<mpq_class>& f) {
  if (f.degree() < 1) throw domain_error("discriminant: degree must be >= 1");
  int n = f.degree();
  if (n == 1) return Rat(1);
  Rat res = poly_resultant(f, poly_derivative(f));
  Rat d = res / f.lc();
  if (((static_cast<long>(n) * (n - 1)) / 2) % 2) d = -d;
  return d;
}

Int poly_content(const Polynomial<mpz_class>& f) {
  Int g = 0;
  for (const auto& a : f.c) g = gcd(g, a);
  return g;
}

Polynomial<mpz_class> poly_primitive_part(const Polynomial<mpz_class>& f) {
  if (f.is_zero()) return f;
  Int g = poly_content(f);
  if (f.lc() < 0) g = -g;
  std::vector<mpz_class> r = f.c;
  for (auto& a : r) a /= g;
  return Polynomial<mpz_class>(std::move(r));
}

std::pair<Polynomial<mpz_class>, Int> clear_denominators(
    const Polynomial<mpq_class>& f) {
  Int den = 1;
  for (const auto& a : f.c) den = lcm(den, a.get_den());
  std::vector<mpz_class> r;
  r.reserve(f.c.size());
  for (const auto& a : f.c) {
    Rat scaled = a * Rat(den);
    r.push_back(scaled.get_num());
  }
  return {Polynomial<mpz_class>(std::move(r)), den};
}

Polynomial<mpq_class> to_rational_poly(const Polynomial<mpz_class>& f) {
  std::vector<mpq_class> r;
  r.reserve(f.c.size());
  for (const auto& a : f.c) r.emplace_back(a);
  return Polynomial<mpq_class>(std::move(r));
}

}  // namespace cyctor
