#include "cyctor/curve.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "cyctor/intmath.hpp"

namespace cyctor {

namespace {

// smallest positive u such that u^4 * A1 and u^6 * B1 are integers
Int minimal_scale(const Rat& A1, const Rat& B1) {
  std::map<Int, int> exp;
  for (const auto& [p, v] : factorize(Int(A1.get_den())))
    exp[p] = std::max(exp[p], (v + 3) / 4);
  for (const auto& [p, v] : factorize(Int(B1.get_den())))
    exp[p] = std::max(exp[p], (v + 5) / 6);
  Int u = 1;
  for (const auto& [p, k] : exp)
    for (int i = 0; i < k; ++i) u *= p;
  return u;
}

void check_point(const CurveModel& E, const PointOnCurve& p, const char* who) {
  if (p.at_infinity) return;
  if (!p.x.field() || !E.field()->same(*p.x.field()))
    throw domain_error(std::string(who) + ": point from a different field");
  if (!on_curve(E, p))
    throw domain_error(std::string(who) + ": point does not satisfy the curve equation");
}

}  // namespace

CurveModel CurveModel::from_a_invariants(const FieldPtr& K,
                                         std::array<FieldElement, 5> a) {
  if (!K) throw domain_error("curve: null field");
  for (const auto& ai : a)
    if (!ai.field() || !K->same(*ai.field()))
      throw domain_error("curve: a-invariant from a different field");

  CurveModel E;
  E.K_ = K;
  E.a_ = std::move(a);
  const auto& a1 = E.a_[0];
  const auto& a2 = E.a_[1];
  const auto& a3 = E.a_[2];
  const auto& a4 = E.a_[3];
  const auto& a6 = E.a_[4];

  auto b2 = a1 * a1 + a2 * Rat(4);
  auto b4 = a4 * Rat(2) + a1 * a3;
  auto b6 = a3 * a3 + a6 * Rat(4);
  auto b8 = a1 * a1 * a6 + a2 * a6 * Rat(4) - a1 * a3 * a4 + a2 * a3 * a3 -
            a4 * a4;
  auto c4 = b2 * b2 - b4 * Rat(24);
  auto c6 = b2 * b4 * Rat(36) - b2 * b2 * b2 - b6 * Rat(216);
  E.disc_ = b2 * b4 * b6 * Rat(9) - b2 * b2 * b8 - b4 * b4 * b4 * Rat(8) -
            b6 * b6 * Rat(27);
  if (E.disc_.is_zero())
    throw domain_error("curve: singular model (discriminant vanishes)");
  E.j_ = c4 * c4 * c4 * E.disc_.inverse();

  // complete the square, then shift x: the composite substitution
  // X = u^2 (x + r), Y = u^3 (y + s x + t) lands on Y^2 = X^3 + AX + B
  E.r_ = b2 * make_rat(1, 12);
  E.s_ = a1 * make_rat(1, 2);
  E.t_ = a3 * make_rat(1, 2);
  auto A1 = c4 * make_rat(-1, 48);
  auto B1 = c6 * make_rat(-1, 864);
  E.u_ = Rat(1);
  if (K->kind() == FieldKind::rationals)
    E.u_ = Rat(minimal_scale(A1.rational_value(), B1.rational_value()));
  Rat u2 = E.u_ * E.u_;
  Rat u4 = u2 * u2;
  E.A_ = A1 * u4;
  E.B_ = B1 * (u4 * u2);
  return E;
}

CurveModel CurveModel::from_rationals(const std::array<Rat, 5>& a) {
  auto Q = NumberField::rationals();
  return from_a_invariants(Q, {Q->from_rat(a[0]), Q->from_rat(a[1]),
                               Q->from_rat(a[2]), Q->from_rat(a[3]),
                               Q->from_rat(a[4])});
}

Int CurveModel::shortA_int() const {
  if (K_->kind() != FieldKind::rationals)
    throw domain_error("curve: integral short form requires a curve over Q");
  return Int(A_.rational_value());
}

Int CurveModel::shortB_int() const {
  if (K_->kind() != FieldKind::rationals)
    throw domain_error("curve: integral short form requires a curve over Q");
  return Int(B_.rational_value());
}

CurveModel CurveModel::short_model() const {
  return from_a_invariants(K_, {K_->zero(), K_->zero(), K_->zero(), A_, B_});
}

bool CurveModel::is_short() const {
  return a_[0].is_zero() && a_[1].is_zero() && a_[2].is_zero() && u_ == 1;
}

PointOnCurve CurveModel::to_short(const PointOnCurve& p) const {
  if (p.at_infinity) return p;
  Rat u2 = u_ * u_;
  auto X = (p.x + r_) * u2;
  auto Y = (p.y + s_ * p.x + t_) * (u2 * u_);
  return PointOnCurve::affine(std::move(X), std::move(Y));
}

PointOnCurve CurveModel::from_short(const PointOnCurve& p) const {
  if (p.at_infinity) return p;
  Rat u2 = u_ * u_;
  auto x = p.x * (1 / u2) - r_;
  auto y = p.y * (1 / (u2 * u_)) - s_ * x - t_;
  return PointOnCurve::affine(std::move(x), std::move(y));
}

bool on_curve(const CurveModel& E, const PointOnCurve& p) {
  if (p.at_infinity) return true;
  const auto& x = p.x;
  const auto& y = p.y;
  auto lhs = y * y + E.a1() * x * y + E.a3() * y;
  auto rhs = x * x * x + E.a2() * x * x + E.a4() * x + E.a6();
  return lhs == rhs;
}

PointOnCurve negate_point(const CurveModel& E, const PointOnCurve& p) {
  if (p.at_infinity) return p;
  auto ny = E.field()->zero() - p.y - E.a1() * p.x - E.a3();
  return PointOnCurve::affine(p.x, std::move(ny));
}

PointOnCurve add_points(const CurveModel& E, const PointOnCurve& p,
                        const PointOnCurve& q) {
  check_point(E, p, "add_points");
  check_point(E, q, "add_points");
  if (p.at_infinity) return q;
  if (q.at_infinity) return p;

  const auto& x1 = p.x;
  const auto& y1 = p.y;
  const auto& x2 = q.x;
  const auto& y2 = q.y;
  FieldElement lambda;
  if (x1 == x2) {
    auto neg_y1 = E.field()->zero() - y1 - E.a1() * x1 - E.a3();
    if (y2 == neg_y1) return PointOnCurve::infinity();
    // tangent line (p == q with 2p != O)
    auto num = x1 * x1 * Rat(3) + E.a2() * x1 * Rat(2) + E.a4() - E.a1() * y1;
    auto den = y1 * Rat(2) + E.a1() * x1 + E.a3();
    lambda = num * den.inverse();
  } else {
    lambda = (y2 - y1) * (x2 - x1).inverse();
  }
  auto x3 = lambda * lambda + E.a1() * lambda - E.a2() - x1 - x2;
  auto y3 = lambda * (x1 - x3) - y1 - E.a1() * x3 - E.a3();
  return PointOnCurve::affine(std::move(x3), std::move(y3));
}

PointOnCurve scalar_mul(const CurveModel& E, const Int& k,
                        const PointOnCurve& p) {
  check_point(E, p, "scalar_mul");
  Int n = k;
  PointOnCurve base = p;
  if (n < 0) {
    n = -n;
    base = negate_point(E, base);
  }
  PointOnCurve acc = PointOnCurve::infinity();
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc = add_points(E, acc, base);
    n >>= 1;
    if (n > 0) base = add_points(E, base, base);
  }
  return acc;
}

CurveModel quadratic_twist(const CurveModel& E, const Int& d) {
  if (d == 0) throw domain_error("quadratic_twist: d must be nonzero");
  Int ds = squarefree_part(d);
  Rat A = Rat(ds) * ds * E.shortA_int();
  Rat B = Rat(ds) * ds * ds * E.shortB_int();
  return CurveModel::from_rationals({Rat(0), Rat(0), Rat(0), A, B});
}

CurveModel reduce_short_model(const CurveModel& E) {
  Int A = E.shortA_int(), B = E.shortB_int();
  auto valuation = [](const Int& n, std::uint64_t p) {
    if (n == 0) return 1 << 30;
    int v = 0;
    Int m = n;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++v;
    }
    return v;
  };
  Int probe = abs(A == 0 ? B : (B == 0 ? A : gcd(A, B)));
  for (std::uint64_t p = 2; p <= 100000 && probe > 1; p = next_prime_u64(p)) {
    if (!mpz_divisible_ui_p(probe.get_mpz_t(), p)) continue;
    int k = std::min(valuation(A, p) / 4, valuation(B, p) / 6);
    for (int i = 0; i < k; ++i) {
      Int p4 = Int(p) * p * p * p;
      if (A != 0) mpz_divexact(A.get_mpz_t(), A.get_mpz_t(), p4.get_mpz_t());
      if (B != 0) {
        Int p6 = p4 * p * p;
        mpz_divexact(B.get_mpz_t(), B.get_mpz_t(), p6.get_mpz_t());
      }
    }
    while (mpz_divisible_ui_p(probe.get_mpz_t(), p))
      mpz_divexact_ui(probe.get_mpz_t(), probe.get_mpz_t(), p);
  }
  return CurveModel::from_rationals({Rat(0), Rat(0), Rat(0), Rat(A), Rat(B)});
}

}  // namespace cyctor
