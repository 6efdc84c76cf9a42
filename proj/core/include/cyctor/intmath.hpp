#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyctor/errors.hpp"

namespace cyctor {

// Arbitrary-precision integers and rationals. mpq_class keeps the canonical
// form we rely on everywhere: gcd-reduced, denominator positive.
using Int = mpz_class;
using Rat = mpq_class;

// mpq_class's two-argument constructor does not reduce; route all
// numerator/denominator construction through here.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_dec(const Int& v);
std::string to_dec(const Rat& v);
Int parse_int(const std::string& s);   // decimal, optional leading '-'
Rat parse_rat(const std::string& s);   // "n" or "n/d", normalized on parse

// --- machine-word modular helpers (m < 2^63) ---
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m);  // pre gcd(a,m)=1

// Deterministic below 2^64 (strong-pseudoprime base set); fixed-base
// Miller-Rabin above that.
bool is_prime(const Int& n);
bool is_prime_u64(std::uint64_t n);
std::uint64_t next_prime_u64(std::uint64_t n);  // smallest prime > n

// Full factorization of |n|, n != 0; trial division then Pollard rho.
// Returned primes ascending, exponents >= 1.
std::vector<std::pair<Int, int>> factorize(const Int& n);

// Sign-preserving: result * (perfect square) == n; squarefree_part(-1) == -1.
Int squarefree_part(const Int& n);

// Multiplicative order of a modulo n; pre gcd(a,n) == 1.
std::uint64_t mult_order(std::uint64_t a, std::uint64_t n);

// True iff q generates (Z/n)^*; n must have a cyclic unit group caller-side
// (we only ever pass prime powers, 2, or 4).
bool is_primitive_root(std::uint64_t q, std::uint64_t n);

std::uint64_t euler_phi_u64(std::uint64_t n);

// Balanced rational reconstruction: the unique p/q with residue == p * q^-1
// (mod M), |p| <= bound, 0 < q <= bound, gcd(q, M) = 1, if it exists.
// pre: 0 <= residue < M and 2 * bound^2 <= M (uniqueness).
std::optional<Rat> rational_reconstruct(const Int& residue, const Int& M,
                                        const Int& bound);

// Residue with an explicit modulus. Mixing moduli is a programming error.
class ModularInt {
 public:
  ModularInt() : v_(0), m_(0) {}
  ModularInt(Int value, Int modulus);
  const Int& value() const { return v_; }
  const Int& modulus() const { return m_; }
  ModularInt operator+(const ModularInt& o) const;
  ModularInt operator-(const ModularInt& o) const;
  ModularInt operator*(const ModularInt& o) const;
  ModularInt inverse() const;  // domain_error when not invertible
  ModularInt pow(const Int& e) const;
  bool operator==(const ModularInt& o) const;
  bool is_zero() const { return v_ == 0; }

 private:
  void check_same(const ModularInt& o) const;
  Int v_, m_;
};

// Stable 64-bit FNV-1a over bytes; used to derive per-job seeds so batch
// results do not depend on scheduling.
std::uint64_t fnv1a64(const std::string& data);
std::uint64_t derive_seed(std::uint64_t global_seed, const std::string& job_key);

}  // namespace cyctor
