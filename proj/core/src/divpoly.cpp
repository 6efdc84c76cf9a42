#include "cyctor/divpoly.hpp"

#include <stdexcept>
#include <utility>

namespace cyctor {

namespace {

using ZPoly = Polynomial<mpz_class>;

ZPoly half(const ZPoly& f) {
  std::vector<Int> r = f.c;
  for (auto& c : r) {
    if (mpz_odd_p(c.get_mpz_t()))
      throw std::logic_error("divpoly: recurrence produced an odd coefficient");
    c /= 2;
  }
  return ZPoly(std::move(r));
}

ZPoly sq(const ZPoly& f) { return poly_mul(f, f); }
ZPoly cube(const ZPoly& f) { return poly_mul(poly_mul(f, f), f); }

}  // namespace

DivisionPolyTable::DivisionPolyTable(Int A, Int B, int cap)
    : A_(std::move(A)), B_(std::move(B)), cap_(cap) {
  if (cap_ < 4) throw domain_error("divpoly: cap must be at least 4");
  F_ = ZPoly({B_, A_, Int(0), Int(1)});
  odd_ = {ZPoly({Int(-1)}),  // A_{-1}
          ZPoly({Int(1)}),   // A_1
          ZPoly({-A_ * A_, 12 * B_, 6 * A_, Int(0), Int(3)})};
  even_ = {ZPoly(),           // B_0
           ZPoly({Int(2)}),  // B_2
           ZPoly({-32 * B_ * B_ - 4 * A_ * A_ * A_, -16 * A_ * B_,
                  -20 * A_ * A_, 80 * B_, 20 * A_, Int(0), Int(4)})};
  built_ = 4;
}

const Polynomial<mpz_class>& DivisionPolyTable::odd_part(int n) const {
  return odd_[static_cast<std::size_t>(n + 1) / 2];
}

const Polynomial<mpz_class>& DivisionPolyTable::even_part(int n) const {
  return even_[static_cast<std::size_t>(n) / 2];
}

void DivisionPolyTable::build_to(int n) const {
  if (n <= built_) return;
  ZPoly F2 = sq(F_);
  for (int t = built_ + 1; t <= n; ++t) {
    if (t % 2) {
      int m = (t - 1) / 2;
      ZPoly v;
      if (m % 2) {
        v = poly_sub(poly_mul(odd_part(m + 2), cube(odd_part(m))),
                     poly_mul(F2, poly_mul(even_part(m - 1),
                                           cube(even_part(m + 1)))));
      } else {
        v = poly_sub(poly_mul(F2, poly_mul(even_part(m + 2),
                                           cube(even_part(m)))),
                     poly_mul(odd_part(m - 1), cube(odd_part(m + 1))));
      }
      odd_.push_back(std::move(v));
    } else {
      int m = t / 2;
      ZPoly v;
      if (m % 2) {
        v = poly_mul(odd_part(m),
                     poly_sub(poly_mul(odd_part(m + 2), sq(even_part(m - 1))),
                              poly_mul(odd_part(m - 2), sq(even_part(m + 1)))));
      } else {
        v = poly_mul(even_part(m),
                     poly_sub(poly_mul(even_part(m + 2), sq(odd_part(m - 1))),
                              poly_mul(even_part(m - 2), sq(odd_part(m + 1)))));
      }
      even_.push_back(half(v));
    }
  }
  built_ = n;
}

DivisionPoly DivisionPolyTable::get(int n) const {
  if (n < 1 || n > cap_)
    throw domain_error("divpoly: index " + std::to_string(n) +
                       " outside [1, " + std::to_string(cap_) + "]");
  build_to(n);
  DivisionPoly d;
  d.n = n;
  d.times_y = (n % 2 == 0);
  d.x_part = d.times_y ? even_part(n) : odd_part(n);
  d.x_only = d.times_y ? poly_mul(F_, d.x_part) : d.x_part;
  return d;
}

DivisionPoly division_poly(const CurveModel& E, int n, int cap) {
  DivisionPolyTable tab(E.shortA_int(), E.shortB_int(), cap);
  return tab.get(n);
}

}  // namespace cyctor
