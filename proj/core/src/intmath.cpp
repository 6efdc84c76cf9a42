#include "cyctor/intmath.hpp"

#include <algorithm>
#include <numeric>

namespace cyctor {

std::string to_dec(const Int& v) { return v.get_str(); }

std::string to_dec(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

static bool valid_decimal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Int parse_int(const std::string& s) {
  if (!valid_decimal(s)) throw domain_error("invalid integer literal: '" + s + "'");
  return Int(s);
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw domain_error("zero denominator in rational literal: '" + s + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m) {
  // extended Euclid on signed 128-bit to dodge overflow
  __int128 t = 0, newt = 1, r = m, newr = a % m;
  while (newr != 0) {
    __int128 q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) throw domain_error("invmod_u64: argument not invertible");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // this base set is a proven deterministic witness set for all n < 2^64
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::uint64_t next_prime_u64(std::uint64_t n) {
  std::uint64_t c = n + 1;
  if (c <= 2) return 2;
  if ((c & 1) == 0) ++c;
  while (!is_prime_u64(c)) c += 2;
  return c;
}

namespace {

Int pollard_rho(const Int& n) {
  // Brent's cycle variant; deterministic restarts with increasing c
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1, diff;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      diff = x - y;
      if (diff == 0) break;  // cycle without factor; restart with next c
      d = gcd(diff, n);
    }
    if (d != 0 && d != 1 && d != n) return d;
  }
}

void factor_rec(const Int& n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) { out.push_back(n); return; }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    factor_rec(r, out);
    factor_rec(r, out);
    return;
  }
  Int d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(const Int& n) {
  if (n == 0) throw domain_error("factorize: argument is zero");
  Int m = abs(n);
  std::vector<Int> primes;
  for (std::uint64_t d : {2ull, 3ull, 5ull}) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      m /= static_cast<unsigned long>(d);
      primes.push_back(Int(static_cast<unsigned long>(d)));
    }
  }
  // 2,3,5-wheel trial division up to 10^5
  static const int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  std::uint64_t d = 7;
  int wi = 0;
  while (d <= 100000 && Int(d) * d <= m) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      m /= static_cast<unsigned long>(d);
      primes.push_back(Int(static_cast<unsigned long>(d)));
    }
    d += wheel[wi];
    wi = (wi + 1) & 7;
  }
  factor_rec(m, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Int, int>> out;
  for (auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

Int squarefree_part(const Int& n) {
  if (n == 0) throw domain_error("squarefree_part: argument is zero");
  Int r = (n < 0) ? -1 : 1;
  for (auto& [p, e] : factorize(n))
    if (e & 1) r *= p;
  return r;
}

std::uint64_t euler_phi_u64(std::uint64_t n) {
  if (n == 0) throw domain_error("euler_phi: argument is zero");
  std::uint64_t phi = 1;
  for (auto& [p, e] : factorize(Int(static_cast<unsigned long>(n)))) {
    std::uint64_t pu = p.get_ui();
    std::uint64_t pe = 1;
    for (int i = 1; i < e; ++i) pe *= pu;
    phi *= pe * (pu - 1);
  }
  return phi;
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t n) {
  if (n == 0) throw domain_error("mult_order: zero modulus");
  if (n == 1) return 1;
  a %= n;
  if (std::gcd(a, n) != 1)
    throw domain_error("mult_order: arguments not coprime");
  std::uint64_t order = euler_phi_u64(n);
  for (auto& [p, e] : factorize(Int(static_cast<unsigned long>(order)))) {
    std::uint64_t pu = p.get_ui();
    for (int i = 0; i < e; ++i) {
      if (powmod_u64(a, order / pu, n) == 1)
        order /= pu;
      else
        break;
    }
  }
  return order;
}

bool is_primitive_root(std::uint64_t q, std::uint64_t n) {
  if (n <= 1) return false;
  if (std::gcd(q % n, n) != 1) return false;
  return mult_order(q, n) == euler_phi_u64(n);
}

std::optional<Rat> rational_reconstruct(const Int& residue, const Int& M,
                                        const Int& bound) {
  if (M <= 0 || residue < 0 || residue >= M)
    throw domain_error("rational_reconstruct: residue out of range");
  if (bound < 1 || 2 * bound * bound > M)
    throw domain_error("rational_reconstruct: bound violates 2*bound^2 <= M");
  Int r0 = M, r1 = residue, t0 = 0, t1 = 1;
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  Int num = r1, den = t1;
  if (den == 0) return std::nullopt;
  if (den < 0) { num = -num; den = -den; }
  if (den > bound || abs(num) > bound) return std::nullopt;
  if (gcd(num, den) != 1) return std::nullopt;
  if (gcd(den, M) != 1) return std::nullopt;
  Rat out(num, den);
  out.canonicalize();
  return out;
}

ModularInt::ModularInt(Int value, Int modulus) : v_(std::move(value)), m_(std::move(modulus)) {
  if (m_ <= 0) throw domain_error("ModularInt: modulus must be positive");
  v_ %= m_;
  if (v_ < 0) v_ += m_;
}

void ModularInt::check_same(const ModularInt& o) const {
  if (m_ != o.m_) throw domain_error("ModularInt: mixed moduli");
}

ModularInt ModularInt::operator+(const ModularInt& o) const {
  check_same(o);
  return ModularInt(v_ + o.v_, m_);
}

ModularInt ModularInt::operator-(const ModularInt& o) const {
  check_same(o);
  return ModularInt(v_ - o.v_, m_);
}

ModularInt ModularInt::operator*(const ModularInt& o) const {
  check_same(o);
  return ModularInt(v_ * o.v_, m_);
}

ModularInt ModularInt::inverse() const {
  Int inv;
  if (!mpz_invert(inv.get_mpz_t(), v_.get_mpz_t(), m_.get_mpz_t()))
    throw domain_error("ModularInt: value not invertible");
  return ModularInt(inv, m_);
}

ModularInt ModularInt::pow(const Int& e) const {
  if (e < 0) return inverse().pow(-e);
  Int r;
  mpz_powm(r.get_mpz_t(), v_.get_mpz_t(), e.get_mpz_t(), m_.get_mpz_t());
  return ModularInt(r, m_);
}

bool ModularInt::operator==(const ModularInt& o) const {
  return m_ == o.m_ && v_ == o.v_;
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t global_seed, const std::string& job_key) {
  std::string buf;
  for (int i = 0; i < 8; ++i)
    buf.push_back(static_cast<char>((global_seed >> (8 * i)) & 0xff));
  buf += job_key;
  return fnv1a64(buf);
}

}  // namespace cyctor
