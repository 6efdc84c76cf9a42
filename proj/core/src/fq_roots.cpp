#include "cyctor/fq_roots.hpp"

#include <algorithm>

namespace cyctor {

namespace {

// f with f' == 0 is g(x^q); over F_{q^f} the coefficients of g are the p-th
// roots of those of f.
FqPoly pth_root_poly(const FqPoly& f) {
  std::uint64_t q = f.c[0].field()->q();
  std::vector<FqElem> r;
  for (std::size_t i = 0; i < f.c.size(); i += q) r.push_back(f.c[i].pth_root());
  return FqPoly(std::move(r));
}

void sqfree_rec(const FqPoly& f, int mult_scale,
                std::vector<std::pair<FqPoly, int>>& out) {
  FqPoly fp = poly_derivative(f);
  if (fp.is_zero()) {
    if (f.degree() == 0) return;
    sqfree_rec(pth_root_poly(f), mult_scale * static_cast<int>(f.c[0].field()->q()), out);
    return;
  }
  FqPoly c = poly_gcd(f, fp);
  FqPoly w = poly_divrem(f, c).first;
  int m = 1;
  while (w.degree() > 0) {
    FqPoly y = poly_gcd(w, c);
    FqPoly z = poly_divrem(w, y).first;
    if (z.degree() > 0) out.emplace_back(poly_monic(z), m * mult_scale);
    w = std::move(y);
    c = poly_divrem(c, w).first;
    ++m;
  }
  if (c.degree() > 0) sqfree_rec(c, mult_scale, out);
}

// h is a product of distinct monic linear factors; collect the roots.
void split_linear(const FqPoly& h, std::mt19937_64& rng, std::vector<FqElem>& roots) {
  if (h.degree() <= 0) return;
  if (h.degree() == 1) {
    // monic x + c -> root -c
    roots.push_back(coeff_zero_like(h.c[0]) - h.c[0]);
    return;
  }
  const auto F = h.c[0].field();
  const Int& Q = F->cardinality();
  FqPoly g;
  while (true) {
    // random affine map: a nonzero multiplier is needed in characteristic 2,
    // where the trace of x+b cannot separate roots differing by an element of
    // the trace kernel
    FqElem a = F->random_element(rng);
    while (a.is_zero()) a = F->random_element(rng);
    FqElem b = F->random_element(rng);
    FqPoly v(std::vector<FqElem>{b, a});  // a*x + b
    FqPoly w;
    if (F->q() == 2) {
      // characteristic 2: trace polynomial T(v) = v + v^2 + ... + v^{2^{k-1}},
      // k = log2(Q); gcd(h, T(v)) splits h whenever T separates the roots.
      std::size_t k = mpz_sizeinbase(Q.get_mpz_t(), 2) - 1;
      FqPoly acc = poly_rem(v, h), term = acc;
      for (std::size_t i = 1; i < k; ++i) {
        term = poly_rem(poly_mul(term, term), h);
        acc = poly_add(acc, term);
      }
      w = acc;
    } else {
      Int e = (Q - 1) / 2;
      FqPoly p = powmod(v, e, h);
      w = poly_sub(p, FqPoly(std::vector<FqElem>{F->one()}));
    }
    g = poly_gcd(w, h);
    if (g.degree() > 0 && g.degree() < h.degree()) break;
  }
  split_linear(g, rng, roots);
  split_linear(poly_divrem(h, g).first, rng, roots);
}

}  // namespace

std::vector<std::pair<FqPoly, int>> squarefree_decomposition(const FqPoly& f) {
  if (f.is_zero()) throw domain_error("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<FqPoly, int>> out;
  sqfree_rec(poly_monic(f), 1, out);
  return out;
}

std::vector<FqRoot> roots_in_finite_field(const FqPoly& f, std::mt19937_64& rng) {
  if (f.is_zero()) throw domain_error("roots_in_finite_field: zero polynomial");
  std::vector<FqRoot> result;
  if (f.degree() == 0) return result;
  const auto F = f.c[0].field();
  for (auto& [g, mult] : squarefree_decomposition(f)) {
    // linear-root part of g: gcd(g, x^Q - x)
    FqPoly x(std::vector<FqElem>{F->zero(), F->one()});
    FqPoly frob = powmod(x, F->cardinality(), g);
    FqPoly lin = poly_gcd(poly_sub(frob, x), g);
    std::vector<FqElem> roots;
    split_linear(lin, rng, roots);
    for (auto& r : roots) result.push_back({r, mult});
  }
  std::sort(result.begin(), result.end(), [](const FqRoot& a, const FqRoot& b) {
    return a.value.lex_less(b.value);
  });
  return result;
}

}  // namespace cyctor
