#include "cyctor/numfield.hpp"

#include <algorithm>
#include <numeric>

namespace cyctor {

FieldPtr NumberField::rationals() {
  auto K = std::shared_ptr<NumberField>(new NumberField());
  K->kind_ = FieldKind::rationals;
  K->degree_ = 1;
  K->m_ = Polynomial<mpz_class>(std::vector<mpz_class>{0, 1});  // t
  return K;
}

FieldPtr NumberField::cyclotomic(std::uint64_t n) {
  if (n < 3) throw domain_error("cyclotomic: conductor must be >= 3");
  auto fac = factorize(Int(static_cast<unsigned long>(n)));
  if (fac.size() != 1)
    throw domain_error("cyclotomic: conductor must be a prime power, got " +
                       std::to_string(n));
  std::uint64_t p = fac[0].first.get_ui();
  int k = fac[0].second;
  auto K = std::shared_ptr<NumberField>(new NumberField());
  K->kind_ = FieldKind::cyclotomic;
  K->n_ = n;
  K->p_ = p;
  K->k_ = k;
  // Phi_p = 1 + t + ... + t^{p-1}; Phi_{p^k}(t) = Phi_p(t^{p^{k-1}})
  Polynomial<mpz_class> phi_p(std::vector<mpz_class>(p, 1));
  std::uint64_t step = n / p;
  K->m_ = poly_compose_xpow(phi_p, static_cast<int>(step));
  K->degree_ = K->m_.degree();
  return K;
}

FieldPtr NumberField::quadratic(const Int& d_in) {
  if (d_in == 0) throw domain_error("quadratic: d must be nonzero");
  Int d = squarefree_part(d_in);
  if (d == 1) throw domain_error("quadratic: d is a perfect square");
  auto K = std::shared_ptr<NumberField>(new NumberField());
  K->kind_ = FieldKind::quadratic;
  K->d_ = d;
  K->degree_ = 2;
  K->m_ = Polynomial<mpz_class>(std::vector<mpz_class>{-d, 0, 1});
  return K;
}

FieldPtr NumberField::from_spec(const std::string& s) {
  if (s == "Q") return rationals();
  auto colon = s.find(':');
  if (colon != std::string::npos) {
    std::string head = s.substr(0, colon), tail = s.substr(colon + 1);
    if (head == "cyclo") {
      auto caret = tail.find('^');
      Int n;
      if (caret == std::string::npos) {
        n = parse_int(tail);
      } else {
        Int p = parse_int(tail.substr(0, caret));
        Int k = parse_int(tail.substr(caret + 1));
        if (k < 1 || k > 30) throw domain_error("field spec: bad exponent in '" + s + "'");
        n = 1;
        for (long i = 0; i < k.get_si(); ++i) n *= p;
      }
      if (n < 3 || !n.fits_ulong_p())
        throw domain_error("field spec: bad conductor in '" + s + "'");
      return cyclotomic(n.get_ui());
    }
    if (head == "quad") return quadratic(parse_int(tail));
  }
  throw domain_error("unrecognized field spec '" + s + "' (expect Q, cyclo:n, quad:d)");
}

std::string NumberField::spec_string() const {
  switch (kind_) {
    case FieldKind::rationals: return "Q";
    case FieldKind::cyclotomic: return "cyclo:" + std::to_string(n_);
    case FieldKind::quadratic: return "quad:" + to_dec(d_);
  }
  return "?";
}

std::vector<std::uint64_t> NumberField::galois_units() const {
  std::vector<std::uint64_t> units;
  if (kind_ == FieldKind::cyclotomic) {
    for (std::uint64_t a = 1; a < n_; ++a)
      if (a % p_ != 0) units.push_back(a);
  } else {
    units.push_back(1);
  }
  return units;
}

FieldElement NumberField::zero() const {
  return FieldElement(shared_from_this(), std::vector<Rat>(degree_, Rat(0)));
}

FieldElement NumberField::one() const { return from_rat(Rat(1)); }

FieldElement NumberField::gen() const {
  std::vector<Rat> c(degree_, Rat(0));
  if (degree_ > 1) c[1] = 1;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::from_rat(const Rat& r) const {
  std::vector<Rat> c(degree_, Rat(0));
  c[0] = r;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::element(std::vector<Rat> coords) const {
  if (static_cast<int>(coords.size()) != degree_)
    throw domain_error("FieldElement: coordinate vector has wrong length");
  return FieldElement(shared_from_this(), std::move(coords));
}

bool NumberField::same(const NumberField& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == FieldKind::cyclotomic) return n_ == o.n_;
  if (kind_ == FieldKind::quadratic) return d_ == o.d_;
  return true;
}

FieldElement::FieldElement(FieldPtr K, std::vector<Rat> coords)
    : K_(std::move(K)), c_(std::move(coords)) {
  c_.resize(K_->degree(), Rat(0));
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat FieldElement::rational_value() const {
  if (!is_rational()) throw domain_error("FieldElement: not rational");
  return c_[0];
}

bool FieldElement::operator==(const FieldElement& o) const {
  return K_->same(*o.K_) && c_ == o.c_;
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!K_ || !o.K_ || !K_->same(*o.K_))
    throw domain_error("FieldElement: elements from different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  std::vector<Rat> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
  return FieldElement(K_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  std::vector<Rat> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
  return FieldElement(K_, std::move(r));
}

namespace {

// reduce a rational-coefficient polynomial mod the (monic integer) defining
// polynomial, returning coords of length degree
std::vector<Rat> reduce_mod_m(std::vector<Rat> v, const NumberField& K) {
  const auto& m = K.defining_poly();
  int deg = m.degree();
  for (int i = static_cast<int>(v.size()) - 1; i >= deg; --i) {
    Rat c = v[i];
    if (c == 0) continue;
    v[i] = 0;
    for (int j = 0; j < deg; ++j) v[i - deg + j] -= c * Rat(m.c[j]);
  }
  v.resize(deg, Rat(0));
  return v;
}

}  // namespace

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  std::vector<Rat> prod(2 * c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  return FieldElement(K_, reduce_mod_m(std::move(prod), *K_));
}

FieldElement FieldElement::operator*(const Rat& s) const {
  std::vector<Rat> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
  return FieldElement(K_, std::move(r));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw domain_error("FieldElement: division by zero");
  if (K_->degree() == 1) return FieldElement(K_, {Rat(1) / c_[0]});
  std::vector<mpq_class> a(c_.begin(), c_.end());
  Polynomial<mpq_class> alpha(std::move(a));
  Polynomial<mpq_class> m = to_rational_poly(K_->defining_poly());
  auto [g, s, t] = poly_xgcd(alpha, m);
  (void)t;
  if (g.degree() != 0)
    throw domain_error("FieldElement: defining polynomial not coprime (bug)");
  // g is monic constant 1 after normalization, so s is the inverse already
  std::vector<Rat> r(s.c.begin(), s.c.end());
  return FieldElement(K_, reduce_mod_m(std::move(r), *K_));
}

FieldElement FieldElement::pow(const Int& e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement r = K_->one();
  if (e == 0) return r;
  std::size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = nbits; i-- > 0;) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
  }
  return r;
}

FieldElement coeff_zero_like(const FieldElement& a) { return a.field()->zero(); }
FieldElement coeff_one_like(const FieldElement& a) { return a.field()->one(); }

FieldElement galois_apply(long a, const FieldElement& alpha) {
  const auto& K = alpha.field();
  switch (K->kind()) {
    case FieldKind::rationals:
      if (a != 1 && a != -1) throw domain_error("galois_apply: unit must be +-1 over Q");
      return alpha;
    case FieldKind::quadratic: {
      if (a != 1 && a != -1)
        throw domain_error("galois_apply: unit must be +-1 for quadratic fields");
      if (a == 1) return alpha;
      std::vector<Rat> c = alpha.coords();
      c[1] = -c[1];
      return K->element(std::move(c));
    }
    case FieldKind::cyclotomic: {
      std::uint64_t n = K->conductor();
      long am = a % static_cast<long>(n);
      if (am < 0) am += static_cast<long>(n);
      std::uint64_t au = static_cast<std::uint64_t>(am);
      if (au == 0 || std::gcd(au, n) != 1)
        throw domain_error("galois_apply: exponent is not a unit mod conductor");
      // t^i -> t^{(i*a) mod n}, using t^n = 1, then reduce mod m
      std::vector<Rat> big(n, Rat(0));
      const auto& c = alpha.coords();
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        big[(i * au) % n] += c[i];
      }
      return K->element(reduce_mod_m(std::move(big), *K));
    }
  }
  throw domain_error("galois_apply: unreachable");
}

OrbitMinpoly galois_orbit_minpoly(const FieldElement& alpha) {
  const auto& K = alpha.field();
  std::vector<FieldElement> orbit;
  auto push_unique = [&](const FieldElement& e) {
    for (const auto& o : orbit)
      if (o == e) return;
    orbit.push_back(e);
  };
  if (K->kind() == FieldKind::cyclotomic) {
    for (auto a : K->galois_units())
      push_unique(galois_apply(static_cast<long>(a), alpha));
  } else if (K->kind() == FieldKind::quadratic) {
    push_unique(alpha);
    push_unique(galois_apply(-1, alpha));
  } else {
    push_unique(alpha);
  }
  KPoly prod(std::vector<FieldElement>{K->one()});
  for (const auto& o : orbit) {
    KPoly lin(std::vector<FieldElement>{K->zero() - o, K->one()});
    prod = poly_mul(prod, lin);
  }
  std::vector<mpq_class> q;
  q.reserve(prod.c.size());
  for (const auto& coeff : prod.c) {
    if (!coeff.is_rational())
      throw domain_error(
          "galois_orbit_minpoly: non-rational coefficient after expansion (bug)");
    q.push_back(coeff.rational_value());
  }
  OrbitMinpoly out{static_cast<int>(orbit.size()), Polynomial<mpq_class>(std::move(q))};
  return out;
}

KPoly kpoly_from_rational(const Polynomial<mpq_class>& f, const FieldPtr& K) {
  std::vector<FieldElement> c;
  c.reserve(f.c.size());
  for (const auto& a : f.c) c.push_back(K->from_rat(a));
  return KPoly(std::move(c));
}

}  // namespace cyctor
