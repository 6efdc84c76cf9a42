#pragma once
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "cyctor/poly.hpp"

namespace cyctor {

class FqElem;

// F_{q^f} = F_q[u]/(modulus), modulus monic irreducible of degree f.
// f == 1 with modulus u gives the prime field itself, so one element type
// serves both the residue fields of Q and of number rings.
class FqField : public std::enable_shared_from_this<FqField> {
 public:
  // modulus coefficients degree-0 first, length f+1, monic after reduction
  // mod q. Verifies irreducibility (domain_error if reducible).
  static std::shared_ptr<const FqField> make(std::uint64_t q,
                                             std::vector<std::uint64_t> modulus);
  static std::shared_ptr<const FqField> prime_field(std::uint64_t q);

  std::uint64_t q() const { return q_; }
  int f() const { return f_; }
  const std::vector<std::uint64_t>& modulus() const { return mod_; }
  const Int& cardinality() const { return card_; }

  FqElem zero() const;
  FqElem one() const;
  FqElem gen() const;                       // residue of u
  FqElem from_int(const Int& n) const;      // image of an integer
  FqElem from_coords(std::vector<std::uint64_t> c) const;
  FqElem random_element(std::mt19937_64& rng) const;
  bool same(const FqField& o) const { return q_ == o.q_ && mod_ == o.mod_; }

 private:
  FqField(std::uint64_t q, std::vector<std::uint64_t> mod);
  std::uint64_t q_;
  int f_;
  std::vector<std::uint64_t> mod_;
  Int card_;
};

using FqFieldPtr = std::shared_ptr<const FqField>;

class FqElem {
 public:
  FqElem() = default;
  FqElem(FqFieldPtr F, std::vector<std::uint64_t> coords);

  const FqFieldPtr& field() const { return F_; }
  const std::vector<std::uint64_t>& coords() const { return c_; }
  bool is_zero() const;
  bool operator==(const FqElem& o) const;

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator*(const FqElem& o) const;
  FqElem inverse() const;       // domain_error on zero
  FqElem pow(const Int& e) const;
  FqElem frobenius() const;     // x -> x^q
  FqElem pth_root() const;      // inverse of frobenius

  // lexicographic on coordinate vectors; for deterministic orderings
  bool lex_less(const FqElem& o) const { return c_ < o.c_; }

 private:
  void check_same(const FqElem& o) const;
  FqFieldPtr F_;
  std::vector<std::uint64_t> c_;
};

inline bool coeff_is_zero(const FqElem& a) { return a.is_zero(); }
FqElem coeff_zero_like(const FqElem& a);
FqElem coeff_one_like(const FqElem& a);
inline FqElem coeff_inv(const FqElem& a) { return a.inverse(); }

using FqPoly = Polynomial<FqElem>;

// lift a rational-coefficient polynomial into F (denominators must be
// invertible mod q; domain_error otherwise)
FqPoly fq_poly_from_rational(const Polynomial<mpq_class>& f, const FqFieldPtr& F);
FqPoly fq_poly_from_integers(const Polynomial<mpz_class>& f, const FqFieldPtr& F);

}  // namespace cyctor
