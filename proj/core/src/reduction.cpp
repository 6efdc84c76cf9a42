#include "cyctor/reduction.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyctor/fq_roots.hpp"
#include "cyctor/intmath.hpp"

namespace cyctor {

namespace {

FqElem curve_disc_part(const ReducedCurve& E) {
  // 4A^3 + 27B^2; vanishes exactly for singular short models
  auto A3 = E.A * E.A * E.A;
  auto B2 = E.B * E.B;
  return A3 * E.F->from_int(Int(4)) + B2 * E.F->from_int(Int(27));
}

void check_curve(const ReducedCurve& E, const char* who) {
  if (!E.F) throw domain_error(std::string(who) + ": null field");
  if (E.F->q() < 3) throw domain_error(std::string(who) + ": even characteristic");
  if (curve_disc_part(E).is_zero())
    throw domain_error(std::string(who) + ": singular curve (4A^3 + 27B^2 = 0)");
}

void check_pt(const ReducedCurve& E, const FqPoint& p, const char* who) {
  if (p.at_infinity) return;
  if (!p.x.field() || !E.F->same(*p.x.field()))
    throw domain_error(std::string(who) + ": point from a different field");
  if (!fq_on_curve(E, p))
    throw domain_error(std::string(who) + ": point not on the curve");
}

// chord-tangent addition without revalidation, for inner loops
FqPoint add_raw(const ReducedCurve& E, const FqPoint& p, const FqPoint& q) {
  if (p.at_infinity) return q;
  if (q.at_infinity) return p;
  FqElem lambda;
  if (p.x == q.x) {
    if ((p.y + q.y).is_zero()) return FqPoint::infinity();
    auto num = p.x * p.x * E.F->from_int(Int(3)) + E.A;
    lambda = num * (p.y + p.y).inverse();
  } else {
    lambda = (q.y - p.y) * (q.x - p.x).inverse();
  }
  auto x3 = lambda * lambda - p.x - q.x;
  auto y3 = lambda * (p.x - x3) - p.y;
  return FqPoint::affine(std::move(x3), std::move(y3));
}

FqPoint mul_raw(const ReducedCurve& E, const Int& k, const FqPoint& p) {
  Int n = k;
  FqPoint base = p;
  if (n < 0) {
    n = -n;
    if (!base.at_infinity) base.y = base.x.field()->zero() - base.y;
  }
  FqPoint acc = FqPoint::infinity();
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc = add_raw(E, acc, base);
    n >>= 1;
    if (n > 0) base = add_raw(E, base, base);
  }
  return acc;
}

// iterate every element of E.F via a coordinate odometer
template <typename Fn>
void for_each_element(const FqFieldPtr& F, Fn&& fn) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(F->f()), 0);
  for (;;) {
    fn(F->from_coords(c));
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == F->q()) c[i++] = 0;
    if (i == c.size()) return;
  }
}

Int charsum_count(const ReducedCurve& E) {
  Int n = E.F->cardinality() + 1;
  Int half = (E.F->cardinality() - 1) / 2;
  auto one = E.F->one();
  for_each_element(E.F, [&](const FqElem& x) {
    auto fx = x * x * x + E.A * x + E.B;
    if (fx.is_zero()) return;  // chi(0) = 0
    if (fx.pow(half) == one) ++n; else --n;
  });
  return n;
}

FqPoint random_point(const ReducedCurve& E, std::mt19937_64& rng) {
  for (;;) {
    auto x = E.F->random_element(rng);
    auto rhs = x * x * x + E.A * x + E.B;
    FqPoly eq({E.F->zero() - rhs, E.F->zero(), E.F->one()});
    auto ys = roots_in_finite_field(eq, rng);
    if (!ys.empty()) return FqPoint::affine(std::move(x), ys.front().value);
  }
}

std::vector<std::uint64_t> point_key(const FqPoint& p) {
  auto k = p.x.coords();
  k.insert(k.end(), p.y.coords().begin(), p.y.coords().end());
  return k;
}

// every k in [lo, hi] with k*P = O, via baby-step giant-step
std::vector<Int> kill_multiples(const ReducedCurve& E, const FqPoint& P,
                                const Int& lo, const Int& hi) {
  Int width = hi - lo;
  Int m_int;
  mpz_sqrt(m_int.get_mpz_t(), width.get_mpz_t());
  std::uint64_t m = m_int.get_ui() + 1;

  std::map<std::vector<std::uint64_t>, std::vector<std::uint64_t>> baby;
  std::vector<std::uint64_t> inf_indices;
  FqPoint bp = FqPoint::infinity();
  for (std::uint64_t b = 0; b < m; ++b) {
    if (bp.at_infinity) inf_indices.push_back(b);
    else baby[point_key(bp)].push_back(b);
    bp = add_raw(E, bp, P);
  }

  std::vector<Int> hits;
  auto record = [&](const Int& k) {
    if (k >= lo && k <= hi) hits.push_back(k);
  };
  FqPoint G = mul_raw(E, Int(m), P);
  FqPoint T = mul_raw(E, lo, P);
  // k = lo + a*m - b with 0 <= b < m requires T_a == b*P
  for (Int a = 0; a * m <= width + Int(m); a += 1) {
    if (T.at_infinity) {
      for (auto b : inf_indices) record(lo + a * m - b);
    } else {
      auto it = baby.find(point_key(T));
      if (it != baby.end())
        for (auto b : it->second) record(lo + a * m - b);
    }
    T = add_raw(E, T, G);
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  return hits;
}

// exact order of P given the multiples of ord(P) inside the Hasse window
Int point_order(const ReducedCurve& E, const FqPoint& P,
                const std::vector<Int>& hits) {
  Int g = 0;
  for (const auto& h : hits)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
  for (const auto& [r, e] : factorize(g)) {
    for (int i = 0; i < e; ++i) {
      Int cand = g / r;
      if (mul_raw(E, cand, P).at_infinity) g = cand; else break;
    }
  }
  return g;
}

// number of multiples of M in [lo, hi], and the smallest one
std::pair<Int, Int> multiples_in(const Int& M, const Int& lo, const Int& hi) {
  Int first = ((lo + M - 1) / M) * M;
  if (first > hi) return {Int(0), Int(0)};
  return {(hi - first) / M + 1, first};
}

Int bsgs_count(const ReducedCurve& E, std::mt19937_64& rng, bool allow_twist) {
  const Int& Q = E.F->cardinality();
  Int s;
  mpz_sqrt(s.get_mpz_t(), Int(4 * Q).get_mpz_t());
  Int lo = Q + 1 - s, hi = Q + 1 + s;

  Int M = 1;
  for (int attempt = 0; attempt < 12; ++attempt) {
    auto P = random_point(E, rng);
    auto hits = kill_multiples(E, P, lo, hi);
    // |E| lies in the window and kills P, so hits is never empty
    Int ord = point_order(E, P, hits);
    mpz_lcm(M.get_mpz_t(), M.get_mpz_t(), ord.get_mpz_t());
    auto [cnt, first] = multiples_in(M, lo, hi);
    if (cnt == 1) return first;
  }
  if (allow_twist) {
    // |E| + |twist| = 2Q + 2; a non-square twist usually breaks the tie
    FqElem d;
    Int half = (Q - 1) / 2;
    do {
      d = E.F->random_element(rng);
    } while (d.is_zero() || d.pow(half) == E.F->one());
    ReducedCurve Et{E.F, E.A * d * d, E.B * d * d * d};
    return 2 * Q + 2 - bsgs_count(Et, rng, false);
  }
  return charsum_count(E);  // rare; always correct, bounded by max_q work
}

}  // namespace

bool fq_on_curve(const ReducedCurve& E, const FqPoint& p) {
  if (p.at_infinity) return true;
  return p.y * p.y == p.x * p.x * p.x + E.A * p.x + E.B;
}

FqPoint fq_negate(const ReducedCurve& E, const FqPoint& p) {
  if (p.at_infinity) return p;
  return FqPoint::affine(p.x, E.F->zero() - p.y);
}

FqPoint fq_add_points(const ReducedCurve& E, const FqPoint& p, const FqPoint& q) {
  check_pt(E, p, "fq_add_points");
  check_pt(E, q, "fq_add_points");
  return add_raw(E, p, q);
}

FqPoint fq_scalar_mul(const ReducedCurve& E, const Int& k, const FqPoint& p) {
  check_pt(E, p, "fq_scalar_mul");
  return mul_raw(E, k, p);
}

ReducedCurve reduce_mod_q(const CurveModel& E, std::uint64_t q) {
  if (E.field()->kind() != FieldKind::rationals)
    throw domain_error("reduce_mod_q: curve must be defined over Q");
  if (q <= 3 || !is_prime_u64(q))
    throw domain_error("reduce_mod_q: modulus must be a prime greater than 3");
  Int A = E.shortA_int(), B = E.shortB_int();
  if ((4 * A * A * A + 27 * B * B) % Int(q) == 0)
    throw domain_error("reduce_mod_q: bad reduction at " + std::to_string(q));
  auto F = FqField::prime_field(q);
  return ReducedCurve{F, F->from_int(A), F->from_int(B)};
}

Int count_points(const ReducedCurve& E, const CountBudget& budget,
                 std::uint64_t seed) {
  check_curve(E, "count_points");
  const Int& Q = E.F->cardinality();
  if (Q > Int(budget.max_q))
    throw resource_error("count_points: field size exceeds the budget of " +
                         std::to_string(budget.max_q));
  if (Q <= Int(budget.exhaustive_threshold)) return charsum_count(E);
  std::mt19937_64 rng(derive_seed(seed, "count-points:q=" + Q.get_str()));
  return bsgs_count(E, rng, true);
}

Int order_over_extension(const Int& N, std::uint64_t q, int f) {
  if (f < 1) throw domain_error("order_over_extension: extension degree must be >= 1");
  Int a = Int(q) + 1 - N;
  Int s_prev = 2, s_cur = a;
  for (int k = 1; k < f; ++k) {
    Int s_next = a * s_cur - Int(q) * s_prev;
    s_prev = std::move(s_cur);
    s_cur = std::move(s_next);
  }
  Int qf = 1;
  for (int k = 0; k < f; ++k) qf *= q;
  return qf + 1 - s_cur;
}

}  // namespace cyctor
