#include "cyctor/kernel_field.hpp"

#include <algorithm>
#include <map>

#include "cyctor/divpoly.hpp"
#include "cyctor/dedekind.hpp"
#include "cyctor/errors.hpp"
#include "cyctor/intmath.hpp"

namespace cyctor {

namespace {

// minimal positive lambda such that lambda^deg * f(x / lambda) is integral
// for monic rational f; the scaled polynomial is the minimal polynomial of
// lambda * root, still monic
std::pair<Polynomial<Int>, Int> monic_integral_form(const Polynomial<Rat>& f) {
  int d = f.degree();
  std::map<Int, int> need;  // prime -> exponent of lambda
  for (int i = 0; i < d; ++i) {
    Int den = f[i].get_den();
    if (den == 1) continue;
    for (const auto& [p, v] : factorize(den)) {
      // v_p(c_i) = -v; need lambda^(d - i) to absorb it
      int k = (v + (d - i) - 1) / (d - i);
      need[p] = std::max(need[p], k);
    }
  }
  Int lambda = 1;
  for (const auto& [p, k] : need)
    for (int i = 0; i < k; ++i) lambda *= p;
  std::vector<Int> g(d + 1);
  Int pw = 1;  // lambda^(d - i)
  for (int i = d; i >= 0; --i) {
    Rat ci = f[i] * pw;
    if (ci.get_den() != 1)
      throw std::logic_error("monic_integral_form: scaling left a denominator");
    g[i] = Int(ci);
    pw *= lambda;
  }
  return {Polynomial<Int>(std::move(g)), lambda};
}

// factor |n| by trial division up to `bound`, then primality/perfect-power
// splitting with a capped Pollard rho; the unfactored composite cofactor (if
// any) is returned separately
struct BoundedFactors {
  std::vector<Int> primes;  // distinct, ascending
  Int cofactor = 1;         // composite remainder, 1 when fully factored
};

Int rho_step(const Int& x, const Int& c, const Int& n) { return (x * x + c) % n; }

Int pollard_rho_capped(const Int& n, long max_iter) {
  for (int attempt = 1; attempt <= 4; ++attempt) {
    Int x = 2 + attempt, y = x, c = attempt, d = 1;
    for (long i = 0; i < max_iter && d == 1; ++i) {
      x = rho_step(x, c, n);
      y = rho_step(rho_step(y, c, n), c, n);
      Int diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      d = gcd(diff, n);
    }
    if (d > 1 && d < n) return d;
  }
  return 1;
}

BoundedFactors bounded_factor(Int n, std::uint64_t trial_bound) {
  BoundedFactors out;
  n = abs(n);
  if (n <= 1) return out;
  std::vector<Int> stack;
  for (std::uint64_t p = 2; p <= trial_bound && n > 1;
       p = next_prime_u64(p)) {
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
    out.primes.push_back(Int(p));
    while (mpz_divisible_ui_p(n.get_mpz_t(), p))
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    Int pp(p);
    if (pp * pp > n) break;  // remainder is 1 or prime
  }
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    Int m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (is_prime(m)) {
      out.primes.push_back(m);
      continue;
    }
    unsigned long k = 2;
    if (mpz_perfect_power_p(m.get_mpz_t())) {
      Int r;
      for (k = 2; k < 64; ++k)
        if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), k) != 0) break;
      if (k < 64) {
        stack.push_back(r);
        continue;
      }
    }
    Int d = pollard_rho_capped(m, 1 << 18);
    if (d == 1) {
      out.cofactor *= m;  // give up on this piece
      continue;
    }
    stack.push_back(d);
    stack.push_back(m / d);
  }
  std::sort(out.primes.begin(), out.primes.end());
  out.primes.erase(std::unique(out.primes.begin(), out.primes.end()),
                   out.primes.end());
  return out;
}

}  // namespace

KernelFieldReport isogeny_kernel_field(const CurveModel& E, std::uint64_t ell,
                                       const FieldPtr& K,
                                       const KernelFieldConfig& cfg) {
  if (E.field()->kind() != FieldKind::rationals)
    throw domain_error("isogeny_kernel_field: the curve must be defined over Q");
  if (ell < 3 || ell % 2 == 0 || !is_prime_u64(ell))
    throw domain_error("isogeny_kernel_field: ell must be an odd prime");
  if (ell > static_cast<std::uint64_t>(cfg.divpoly_cap))
    throw resource_error(
        "isogeny_kernel_field: ell exceeds the division-polynomial cap " +
        std::to_string(cfg.divpoly_cap));

  auto psi = division_poly(E, static_cast<int>(ell), cfg.divpoly_cap);
  auto f = to_rational_poly(psi.x_only);

  RootsConfig rc = cfg.roots;
  rc.seed = derive_seed(cfg.roots.seed,
                        "kernel:" + std::to_string(ell) + ":" + K->spec_string());
  auto found = roots_in_field_certified(f, K, rc);

  KernelFieldReport rep;
  rep.ell = ell;
  rep.field = K->spec_string();
  rep.certified = found.certified;
  rep.undecided = static_cast<int>(found.undecided.size());
  if (rep.undecided > 0)
    rep.flags.push_back("undecided-roots:" + std::to_string(rep.undecided));
  rep.has_root = !found.roots.empty();

  Int A = E.shortA_int(), B = E.shortB_int();
  int idx = 0;
  for (const auto& x0 : found.roots) {
    KernelRootInfo info;
    info.root = x0;
    auto orbit = galois_orbit_minpoly(x0);
    info.orbit_degree = orbit.degree;
    info.min_poly = orbit.minpoly;

    auto [g, lambda] = monic_integral_form(orbit.minpoly);
    if (lambda != 1)
      rep.flags.push_back("scaled-generator:lambda=" + to_dec(lambda));
    if (g.degree() >= 1) {
      Rat disc = discriminant(to_rational_poly(g));
      Int disc_z(disc);  // monic integral => integral discriminant
      if (disc_z == 0)
        throw std::logic_error(
            "isogeny_kernel_field: vanishing discriminant of a minimal "
            "polynomial");
      auto fac = bounded_factor(disc_z, cfg.disc_trial_bound);
      info.disc_fully_factored = (fac.cofactor == 1);
      if (!info.disc_fully_factored)
        rep.flags.push_back("unfactored-discriminant-cofactor:" +
                            std::to_string(fac.cofactor.get_str().size()) +
                            "-digits");
      for (const auto& p : fac.primes) {
        if (p.fits_ulong_p()) {
          auto verdict = dedekind_ramified(g, p.get_ui());
          info.ramification.emplace_back(p, to_string(verdict));
        } else {
          info.ramification.emplace_back(p, "indeterminate");
        }
      }
    }

    // y^2 = x0^3 + A x0 + B on the short model
    FieldElement rhs =
        x0 * x0 * x0 + x0 * Rat(A) + K->from_rat(Rat(B));
    RootsConfig yc = cfg.roots;
    yc.seed = derive_seed(rc.seed, "y:" + std::to_string(idx++));
    auto sq = is_square_certified(rhs, yc);
    info.y_in_field = sq.root ? 1 : (sq.certified ? 0 : -1);
    if (info.y_in_field == -1) rep.flags.push_back("undecided-y-membership");

    rep.roots.push_back(std::move(info));
  }
  return rep;
}

}  // namespace cyctor
