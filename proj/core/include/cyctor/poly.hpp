#pragma once
#include <gmpxx.h>

#include <utility>
#include <vector>

#include "cyctor/errors.hpp"
#include "cyctor/intmath.hpp"

namespace cyctor {

// Coefficient hooks. Every coefficient domain provides is-zero / zero / one
// "like" an existing value, because residue and extension-field elements carry
// their context. coeff_inv is only defined where division is.
inline bool coeff_is_zero(const mpq_class& a) { return a == 0; }
inline mpq_class coeff_zero_like(const mpq_class&) { return mpq_class(0); }
inline mpq_class coeff_one_like(const mpq_class&) { return mpq_class(1); }
inline mpq_class coeff_inv(const mpq_class& a) {
  if (a == 0) throw domain_error("division by zero rational");
  return mpq_class(1) / a;
}
inline bool coeff_is_zero(const mpz_class& a) { return a == 0; }
inline mpz_class coeff_zero_like(const mpz_class&) { return mpz_class(0); }
inline mpz_class coeff_one_like(const mpz_class&) { return mpz_class(1); }

// Karatsuba kicks in at this many coefficients (both operands).
inline int& karatsuba_threshold() {
  static int t = 32;
  return t;
}

// Dense univariate polynomial, degree-0 coefficient first; empty == zero.
// Immutable by convention: operations return new values.
template <class C>
class Polynomial {
 public:
  std::vector<C> c;

  Polynomial() = default;
  explicit Polynomial(std::vector<C> cc) : c(std::move(cc)) { trim(); }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const C& lc() const {
    if (c.empty()) throw domain_error("leading coefficient of zero polynomial");
    return c.back();
  }
  const C& operator[](std::size_t i) const { return c[i]; }
  bool operator==(const Polynomial& o) const {
    if (c.size() != o.c.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!(c[i] == o.c[i])) return false;
    return true;
  }
  void trim() {
    while (!c.empty() && coeff_is_zero(c.back())) c.pop_back();
  }
};

template <class C>
Polynomial<C> poly_from(std::vector<C> v) {
  return Polynomial<C>(std::move(v));
}

template <class C>
Polynomial<C> poly_add(const Polynomial<C>& a, const Polynomial<C>& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<C> r(std::max(a.c.size(), b.c.size()), coeff_zero_like(a.c[0]));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
  return Polynomial<C>(std::move(r));
}

template <class C>
Polynomial<C> poly_neg(const Polynomial<C>& a) {
  std::vector<C> r = a.c;
  for (auto& x : r) x = coeff_zero_like(x) - x;
  return Polynomial<C>(std::move(r));
}

template <class C>
Polynomial<C> poly_sub(const Polynomial<C>& a, const Polynomial<C>& b) {
  return poly_add(a, poly_neg(b));
}

template <class C>
Polynomial<C> poly_scale(const Polynomial<C>& a, const C& s) {
  if (coeff_is_zero(s)) return {};
  std::vector<C> r = a.c;
  for (auto& x : r) x = x * s;
  return Polynomial<C>(std::move(r));
}

// multiply by x^k
template <class C>
Polynomial<C> poly_shift(const Polynomial<C>& a, int k) {
  if (a.is_zero()) return a;
  std::vector<C> r(a.c.size() + k, coeff_zero_like(a.c[0]));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i + k] = a.c[i];
  return Polynomial<C>(std::move(r));
}

template <class C>
std::vector<C> mul_school(const std::vector<C>& a, const std::vector<C>& b) {
  std::vector<C> r(a.size() + b.size() - 1, coeff_zero_like(a[0]));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (coeff_is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}

template <class C>
std::vector<C> mul_dispatch(std::vector<C> a, std::vector<C> b);

template <class C>
std::vector<C> mul_karatsuba(const std::vector<C>& a, const std::vector<C>& b) {
  std::size_t h = (std::max(a.size(), b.size()) + 1) / 2;
  auto lo = [&](const std::vector<C>& v) {
    return std::vector<C>(v.begin(), v.begin() + std::min(h, v.size()));
  };
  auto hi = [&](const std::vector<C>& v) {
    if (v.size() <= h) return std::vector<C>{};
    return std::vector<C>(v.begin() + h, v.end());
  };
  auto vadd = [](std::vector<C> x, const std::vector<C>& y) {
    if (x.size() < y.size()) x.resize(y.size(), coeff_zero_like(y[0]));
    for (std::size_t i = 0; i < y.size(); ++i) x[i] = x[i] + y[i];
    return x;
  };
  std::vector<C> a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
  std::vector<C> z0 = mul_dispatch(a0, b0);
  std::vector<C> z2 = mul_dispatch(a1, b1);
  std::vector<C> z1 = mul_dispatch(vadd(a0, a1), vadd(b0, b1));
  // z1 -= z0 + z2
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = z1[i] - z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = z1[i] - z2[i];
  std::vector<C> r(a.size() + b.size() - 1, coeff_zero_like(a[0]));
  for (std::size_t i = 0; i < z0.size(); ++i) r[i] = r[i] + z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i)
    if (i + h < r.size()) r[i + h] = r[i + h] + z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i)
    if (i + 2 * h < r.size()) r[i + 2 * h] = r[i + 2 * h] + z2[i];
  return r;
}

template <class C>
std::vector<C> mul_dispatch(std::vector<C> a, std::vector<C> b) {
  if (a.empty() || b.empty()) return {};
  if (static_cast<int>(std::min(a.size(), b.size())) < karatsuba_threshold())
    return mul_school(a, b);
  return mul_karatsuba(a, b);
}

template <class C>
Polynomial<C> poly_mul(const Polynomial<C>& a, const Polynomial<C>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return Polynomial<C>(mul_dispatch(a.c, b.c));
}

// Long division; requires an invertible leading coefficient in the divisor.
template <class C>
std::pair<Polynomial<C>, Polynomial<C>> poly_divrem(const Polynomial<C>& f,
                                                    const Polynomial<C>& g) {
  if (g.is_zero()) throw domain_error("polynomial division by zero");
  if (f.degree() < g.degree()) return {{}, f};
  C gi = coeff_inv(g.lc());
  std::vector<C> r = f.c;
  std::vector<C> q(f.degree() - g.degree() + 1, coeff_zero_like(f.c[0]));
  for (int k = f.degree() - g.degree(); k >= 0; --k) {
    C t = r[k + g.degree()] * gi;
    if (coeff_is_zero(t)) continue;
    q[k] = t;
    for (int j = 0; j <= g.degree(); ++j) r[k + j] = r[k + j] - t * g.c[j];
  }
  return {Polynomial<C>(std::move(q)), Polynomial<C>(std::move(r))};
}

template <class C>
Polynomial<C> poly_rem(const Polynomial<C>& f, const Polynomial<C>& g) {
  return poly_divrem(f, g).second;
}

template <class C>
Polynomial<C> poly_monic(const Polynomial<C>& f) {
  if (f.is_zero()) return f;
  return poly_scale(f, coeff_inv(f.lc()));
}

// Monic gcd over a field; gcd(f, 0) = monic(f).
template <class C>
Polynomial<C> poly_gcd(Polynomial<C> a, Polynomial<C> b) {
  while (!b.is_zero()) {
    Polynomial<C> r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
template <class C>
std::tuple<Polynomial<C>, Polynomial<C>, Polynomial<C>> poly_xgcd(
    Polynomial<C> a, Polynomial<C> b) {
  if (a.is_zero() && b.is_zero()) return {{}, {}, {}};
  const C one = coeff_one_like(a.is_zero() ? b.c[0] : a.c[0]);
  Polynomial<C> s0(std::vector<C>{one}), s1, t0, t1(std::vector<C>{one});
  while (!b.is_zero()) {
    auto [q, r] = poly_divrem(a, b);
    a = std::move(b);
    b = std::move(r);
    Polynomial<C> s2 = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    Polynomial<C> t2 = poly_sub(t0, poly_mul(q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  C scale = coeff_inv(a.lc());
  return {poly_scale(a, scale), poly_scale(s0, scale), poly_scale(t0, scale)};
}

template <class C>
Polynomial<C> poly_derivative(const Polynomial<C>& f) {
  if (f.degree() < 1) return {};
  std::vector<C> r;
  r.reserve(f.c.size() - 1);
  C k = coeff_zero_like(f.c[0]);
  const C one = coeff_one_like(f.c[0]);
  for (std::size_t i = 1; i < f.c.size(); ++i) {
    k = k + one;
    r.push_back(f.c[i] * k);
  }
  return Polynomial<C>(std::move(r));
}

template <class C>
C poly_eval(const Polynomial<C>& f, const C& x) {
  if (f.is_zero()) return coeff_zero_like(x);
  C acc = f.c.back();
  for (int i = f.degree() - 1; i >= 0; --i) acc = acc * x + f.c[i];
  return acc;
}

// base^e mod f by square-and-multiply; e >= 0.
template <class C>
Polynomial<C> powmod(const Polynomial<C>& base, const Int& e,
                     const Polynomial<C>& f) {
  if (f.is_zero()) throw domain_error("powmod: zero modulus");
  if (e < 0) throw domain_error("powmod: negative exponent");
  Polynomial<C> b = poly_rem(base, f);
  if (f.degree() == 0) return {};
  Polynomial<C> r(std::vector<C>{coeff_one_like(f.c[0])});
  if (e == 0) return r;
  std::size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = nbits; i-- > 0;) {
    r = poly_rem(poly_mul(r, r), f);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = poly_rem(poly_mul(r, b), f);
  }
  return r;
}

// substitute x -> x^k (used to build prime-power cyclotomics)
template <class C>
Polynomial<C> poly_compose_xpow(const Polynomial<C>& f, int k) {
  if (f.is_zero()) return f;
  std::vector<C> r(static_cast<std::size_t>(f.degree()) * k + 1,
                   coeff_zero_like(f.c[0]));
  for (std::size_t i = 0; i < f.c.size(); ++i) r[i * k] = f.c[i];
  return Polynomial<C>(std::move(r));
}

// Resultant over a field via the Euclidean remainder sequence.
template <class C>
C poly_resultant(Polynomial<C> a, Polynomial<C> b) {
  if (a.is_zero() || b.is_zero())
    throw domain_error("resultant of zero polynomial");
  const C one = coeff_one_like(a.c[0]);
  C res = one;
  auto cpow = [&](C base, int e) {
    C r = one;
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
  };
  while (b.degree() > 0) {
    Polynomial<C> r = poly_rem(a, b);
    int da = a.degree(), db = b.degree(), dr = r.degree();
    C factor = cpow(b.lc(), da - (dr < 0 ? 0 : dr));
    if ((da & 1) && (db & 1)) factor = coeff_zero_like(one) - factor;
    res = res * factor;
    if (r.is_zero()) return coeff_zero_like(one);
    a = std::move(b);
    b = std::move(r);
  }
  return res * cpow(b.c[0], a.degree());
}

Rat discriminant(const Polynomial<mpq_class>& f);

// integer-polynomial helpers
Int poly_content(const Polynomial<mpz_class>& f);
Polynomial<mpz_class> poly_primitive_part(const Polynomial<mpz_class>& f);
// returns (g, den) with f == g / den, g integral and primitive-scaled by den
std::pair<Polynomial<mpz_class>, Int> clear_denominators(
    const Polynomial<mpq_class>& f);
Polynomial<mpq_class> to_rational_poly(const Polynomial<mpz_class>& f);

}  // namespace cyctor
