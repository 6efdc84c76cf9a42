#include "cyctor/fq.hpp"

#include <algorithm>

namespace cyctor {

namespace {

// raw F_q[u] helpers on coefficient vectors (degree-0 first, not trimmed)
void trim_vec(std::vector<std::uint64_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<std::uint64_t> vec_mul(const std::vector<std::uint64_t>& a,
                                   const std::vector<std::uint64_t>& b,
                                   std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
  }
  std::vector<std::uint64_t> r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint64_t>(acc[i] % q);
  return r;
}

// reduce by monic modulus in place
void vec_reduce(std::vector<std::uint64_t>& v,
                const std::vector<std::uint64_t>& mod, std::uint64_t q) {
  int f = static_cast<int>(mod.size()) - 1;
  for (int i = static_cast<int>(v.size()) - 1; i >= f; --i) {
    std::uint64_t c = v[i];
    if (!c) continue;
    v[i] = 0;
    for (int j = 0; j < f; ++j) {
      std::uint64_t sub = mulmod_u64(c, mod[j], q);
      v[i - f + j] = (v[i - f + j] + q - sub) % q;
    }
  }
  v.resize(f, 0);
}

}  // namespace

FqField::FqField(std::uint64_t q, std::vector<std::uint64_t> mod)
    : q_(q), mod_(std::move(mod)) {
  f_ = static_cast<int>(mod_.size()) - 1;
  card_ = 1;
  for (int i = 0; i < f_; ++i) card_ *= static_cast<unsigned long>(q_);
}

std::shared_ptr<const FqField> FqField::make(std::uint64_t q,
                                             std::vector<std::uint64_t> modulus) {
  if (q < 2 || !is_prime_u64(q)) throw domain_error("FqField: characteristic must be prime");
  for (auto& c : modulus) c %= q;
  trim_vec(modulus);
  if (modulus.size() < 2) throw domain_error("FqField: modulus must have degree >= 1");
  if (modulus.back() != 1) {
    std::uint64_t inv = invmod_u64(modulus.back(), q);
    for (auto& c : modulus) c = mulmod_u64(c, inv, q);
  }
  auto F = std::shared_ptr<FqField>(new FqField(q, std::move(modulus)));
  // Rabin irreducibility: u^{q^f} == u mod m, and gcd(u^{q^{f/r}} - u, m) = 1
  // for each prime r | f. Uses the field arithmetic itself on FqPoly over the
  // prime field.
  int f = F->f_;
  if (f > 1) {
    auto P = FqField::prime_field(q);
    std::vector<FqElem> mc;
    for (auto c : F->mod_) mc.push_back(P->from_coords({c}));
    FqPoly m(std::move(mc));
    FqPoly x(std::vector<FqElem>{P->zero(), P->one()});
    Int qf = 1;
    for (int i = 0; i < f; ++i) qf *= static_cast<unsigned long>(q);
    if (!(powmod(x, qf, m) == poly_rem(x, m)))
      throw domain_error("FqField: modulus is not irreducible");
    for (auto& [r, e] : factorize(Int(f))) {
      Int qe = 1;
      for (int i = 0; i < f / static_cast<int>(r.get_ui()); ++i)
        qe *= static_cast<unsigned long>(q);
      FqPoly frob = powmod(x, qe, m);
      if (poly_gcd(poly_sub(frob, x), m).degree() != 0)
        throw domain_error("FqField: modulus is not irreducible");
    }
  }
  return F;
}

std::shared_ptr<const FqField> FqField::prime_field(std::uint64_t q) {
  if (q < 2 || !is_prime_u64(q)) throw domain_error("FqField: characteristic must be prime");
  return std::shared_ptr<FqField>(new FqField(q, {0, 1}));
}

FqElem FqField::zero() const {
  return FqElem(shared_from_this(), std::vector<std::uint64_t>(f_, 0));
}

FqElem FqField::one() const { return from_int(1); }

FqElem FqField::gen() const {
  std::vector<std::uint64_t> c(f_, 0);
  if (f_ == 1) {
    // residue of u == residue of the modulus root: u = -mod_[0]
    c[0] = (q_ - mod_[0] % q_) % q_;
  } else {
    c[1] = 1;
  }
  return FqElem(shared_from_this(), std::move(c));
}

FqElem FqField::from_int(const Int& n) const {
  Int r = n % static_cast<unsigned long>(q_);
  if (r < 0) r += static_cast<unsigned long>(q_);
  std::vector<std::uint64_t> c(f_, 0);
  c[0] = r.get_ui();
  return FqElem(shared_from_this(), std::move(c));
}

FqElem FqField::from_coords(std::vector<std::uint64_t> c) const {
  for (auto& x : c) x %= q_;
  vec_reduce(c, mod_, q_);
  return FqElem(shared_from_this(), std::move(c));
}

FqElem FqField::random_element(std::mt19937_64& rng) const {
  std::vector<std::uint64_t> c(f_);
  for (auto& x : c) x = rng() % q_;
  return FqElem(shared_from_this(), std::move(c));
}

FqElem::FqElem(FqFieldPtr F, std::vector<std::uint64_t> coords)
    : F_(std::move(F)), c_(std::move(coords)) {
  c_.resize(F_->f(), 0);
}

bool FqElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint64_t x) { return x == 0; });
}

bool FqElem::operator==(const FqElem& o) const {
  return F_->same(*o.F_) && c_ == o.c_;
}

void FqElem::check_same(const FqElem& o) const {
  if (!F_ || !o.F_ || !F_->same(*o.F_))
    throw domain_error("FqElem: elements from different fields");
}

FqElem FqElem::operator+(const FqElem& o) const {
  check_same(o);
  std::vector<std::uint64_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + o.c_[i]) % F_->q();
  return FqElem(F_, std::move(r));
}

FqElem FqElem::operator-(const FqElem& o) const {
  check_same(o);
  std::vector<std::uint64_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    r[i] = (c_[i] + F_->q() - o.c_[i]) % F_->q();
  return FqElem(F_, std::move(r));
}

FqElem FqElem::operator*(const FqElem& o) const {
  check_same(o);
  auto r = vec_mul(c_, o.c_, F_->q());
  vec_reduce(r, F_->modulus(), F_->q());
  return FqElem(F_, std::move(r));
}

FqElem FqElem::pow(const Int& e) const {
  if (e < 0) return inverse().pow(-e);
  FqElem r = F_->one();
  if (e == 0) return r;
  std::size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = nbits; i-- > 0;) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
  }
  return r;
}

FqElem FqElem::inverse() const {
  if (is_zero()) throw domain_error("FqElem: inverse of zero");
  return pow(F_->cardinality() - 2);
}

FqElem FqElem::frobenius() const { return pow(Int(static_cast<unsigned long>(F_->q()))); }

FqElem FqElem::pth_root() const {
  // x -> x^{q^{f-1}} inverts Frobenius in F_{q^f}
  Int e = 1;
  for (int i = 0; i < F_->f() - 1; ++i) e *= static_cast<unsigned long>(F_->q());
  return pow(e);
}

FqElem coeff_zero_like(const FqElem& a) { return a.field()->zero(); }
FqElem coeff_one_like(const FqElem& a) { return a.field()->one(); }

FqPoly fq_poly_from_rational(const Polynomial<mpq_class>& f, const FqFieldPtr& F) {
  std::vector<FqElem> c;
  c.reserve(f.c.size());
  unsigned long q = F->q();
  for (const auto& a : f.c) {
    if (mpz_divisible_ui_p(a.get_den().get_mpz_t(), q))
      throw domain_error("fq_poly_from_rational: denominator not invertible mod q");
    FqElem num = F->from_int(a.get_num());
    FqElem den = F->from_int(a.get_den());
    c.push_back(num * den.inverse());
  }
  return FqPoly(std::move(c));
}

FqPoly fq_poly_from_integers(const Polynomial<mpz_class>& f, const FqFieldPtr& F) {
  std::vector<FqElem> c;
  c.reserve(f.c.size());
  for (const auto& a : f.c) c.push_back(F->from_int(a));
  return FqPoly(std::move(c));
}

}  // namespace cyctor
