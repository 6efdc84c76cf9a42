#include <doctest.h>

#include <random>

#include "cyctor/numfield.hpp"

using namespace cyctor;

namespace {

FieldElement elem(const FieldPtr& K, std::initializer_list<long> coords) {
  std::vector<Rat> v;
  for (long c : coords) v.emplace_back(c);
  return K->element(std::move(v));
}

FieldElement random_element(const FieldPtr& K, std::mt19937_64& rng) {
  std::vector<Rat> v;
  for (int i = 0; i < K->degree(); ++i)
    v.push_back(make_rat(Int(static_cast<long>(rng() % 19) - 9),
                         Int(static_cast<long>(rng() % 3) + 1)));
  return K->element(std::move(v));
}

}  // namespace

TEST_SUITE("numfield") {

TEST_CASE("field construction and defining polynomials") {
  auto K5 = NumberField::cyclotomic(5);
  CHECK(K5->degree() == 4);
  CHECK(K5->defining_poly() ==
        Polynomial<mpz_class>(std::vector<mpz_class>{1, 1, 1, 1, 1}));
  CHECK(K5->conductor() == 5);
  CHECK(K5->conductor_prime() == 5);
  CHECK(K5->conductor_exponent() == 1);

  auto K9 = NumberField::cyclotomic(9);
  CHECK(K9->degree() == 6);
  CHECK(K9->defining_poly() ==
        Polynomial<mpz_class>(std::vector<mpz_class>{1, 0, 0, 1, 0, 0, 1}));
  CHECK(K9->conductor_prime() == 3);
  CHECK(K9->conductor_exponent() == 2);

  auto K8 = NumberField::cyclotomic(8);
  CHECK(K8->degree() == 4);  // phi(8)
  CHECK(K8->defining_poly() ==
        Polynomial<mpz_class>(std::vector<mpz_class>{1, 0, 0, 0, 1}));

  auto Q = NumberField::rationals();
  CHECK(Q->degree() == 1);
  CHECK(Q->spec_string() == "Q");

  // non-squarefree d is normalized
  auto K12 = NumberField::quadratic(12);
  CHECK(K12->quad_d() == 3);
  CHECK(K12->spec_string() == "quad:3");
  auto Km4 = NumberField::quadratic(-4);
  CHECK(Km4->quad_d() == -1);

  CHECK_THROWS_AS(NumberField::cyclotomic(6), domain_error);   // not a prime power
  CHECK_THROWS_AS(NumberField::cyclotomic(15), domain_error);
  CHECK_THROWS_AS(NumberField::quadratic(0), domain_error);
  CHECK_THROWS_AS(NumberField::quadratic(9), domain_error);    // perfect square
}

TEST_CASE("from_spec round-trips and rejects junk") {
  CHECK(NumberField::from_spec("Q")->kind() == FieldKind::rationals);
  CHECK(NumberField::from_spec("cyclo:25")->spec_string() == "cyclo:25");
  CHECK(NumberField::from_spec("quad:12")->spec_string() == "quad:3");
  CHECK(NumberField::from_spec("quad:-59")->quad_d() == -59);
  CHECK_THROWS_AS(NumberField::from_spec("cubic:2"), domain_error);
  CHECK_THROWS_AS(NumberField::from_spec("cyclo:6"), domain_error);
  CHECK_THROWS_AS(NumberField::from_spec(""), domain_error);
}

TEST_CASE("arithmetic in Q(zeta_3): (1+zeta)^-1 == -zeta") {
  auto K = NumberField::cyclotomic(3);
  auto z = K->gen();
  auto one_plus = K->one() + z;
  CHECK(one_plus.inverse() == K->zero() - z);
  CHECK(one_plus * (K->zero() - z) == K->one());
  // zeta^3 = 1, zeta^2 + zeta + 1 = 0
  CHECK(z.pow(3) == K->one());
  CHECK(z * z + z + K->one() == K->zero());
}

TEST_CASE("inverses: rational and cyclotomic") {
  auto Q = NumberField::rationals();
  CHECK(Q->from_rat(Rat(2)).inverse() == Q->from_rat(make_rat(1, 2)));
  CHECK_THROWS_AS(Q->zero().inverse(), domain_error);

  auto K5 = NumberField::cyclotomic(5);
  auto z = K5->gen();
  CHECK(z.inverse() == z.pow(4));
  CHECK(z.pow(-1) == z.pow(4));
  CHECK_THROWS_AS(K5->zero().inverse(), domain_error);

  std::mt19937_64 rng(20260823);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_element(K5, rng);
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == K5->one());
  }
}

TEST_CASE("field axioms sampled in Q(zeta_9) and Q(sqrt -59)") {
  std::mt19937_64 rng(7);
  for (auto K : {NumberField::cyclotomic(9), NumberField::quadratic(-59)}) {
    for (int trial = 0; trial < 15; ++trial) {
      auto a = random_element(K, rng);
      auto b = random_element(K, rng);
      auto c = random_element(K, rng);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a - a == K->zero());
      CHECK(a * K->one() == a);
    }
  }
}

TEST_CASE("quadratic generator squares to d") {
  auto K = NumberField::quadratic(-59);
  auto s = K->gen();
  CHECK(s * s == K->from_rat(Rat(-59)));
  auto K5 = NumberField::quadratic(5);
  CHECK(K5->gen() * K5->gen() == K5->from_rat(Rat(5)));
}

TEST_CASE("galois action on Q(zeta_5)") {
  auto K = NumberField::cyclotomic(5);
  auto z = K->gen();
  CHECK(galois_apply(2, z) == z * z);
  CHECK(galois_apply(1, z) == z);
  // rationals are fixed
  auto r = K->from_rat(make_rat(7, 3));
  for (auto a : K->galois_units()) CHECK(galois_apply(static_cast<long>(a), r) == r);
  // sigma_3 maps zeta + zeta^-1 to zeta^3 + zeta^2
  auto alpha = z + z.inverse();
  CHECK(galois_apply(3, alpha) == z.pow(3) + z.pow(2));
  // composition law: sigma_a . sigma_b = sigma_{ab}
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    auto x = random_element(K, rng);
    CHECK(galois_apply(2, galois_apply(3, x)) == galois_apply(6, x));
  }
  CHECK_THROWS_AS(galois_apply(5, z), domain_error);   // not a unit mod 5
  CHECK_THROWS_AS(galois_apply(10, z), domain_error);
}

TEST_CASE("galois action is a field automorphism") {
  std::mt19937_64 rng(41);
  auto K = NumberField::cyclotomic(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_element(K, rng);
    auto b = random_element(K, rng);
    CHECK(galois_apply(2, a + b) == galois_apply(2, a) + galois_apply(2, b));
    CHECK(galois_apply(2, a * b) == galois_apply(2, a) * galois_apply(2, b));
  }
}

TEST_CASE("quadratic conjugation") {
  auto K = NumberField::quadratic(5);
  auto s = K->gen();
  CHECK(galois_apply(-1, s) == K->zero() - s);
  CHECK(galois_apply(-1, K->from_rat(Rat(3))) == K->from_rat(Rat(3)));
  CHECK(galois_apply(1, s) == s);
  CHECK_THROWS_AS(galois_apply(2, s), domain_error);
}

TEST_CASE("galois unit lists") {
  CHECK(NumberField::cyclotomic(5)->galois_units() ==
        std::vector<std::uint64_t>{1, 2, 3, 4});
  CHECK(NumberField::cyclotomic(9)->galois_units() ==
        std::vector<std::uint64_t>{1, 2, 4, 5, 7, 8});
  CHECK(NumberField::cyclotomic(8)->galois_units() ==
        std::vector<std::uint64_t>{1, 3, 5, 7});
}

TEST_CASE("orbit minimal polynomials: frozen examples") {
  // zeta_11 + zeta_11^-1 generates the real subfield, degree 5
  auto K11 = NumberField::cyclotomic(11);
  auto z11 = K11->gen();
  auto got = galois_orbit_minpoly(z11 + z11.inverse());
  CHECK(got.degree == 5);
  CHECK(got.minpoly.degree() == 5);
  CHECK(got.minpoly.lc() == 1);
  // known minimal polynomial of 2cos(2pi/11): x^5 + x^4 - 4x^3 - 3x^2 + 3x + 1
  CHECK(got.minpoly ==
        Polynomial<mpq_class>(std::vector<mpq_class>{1, 3, -3, -4, 1, 1}));

  // a rational element has a degree-1 orbit
  auto r = galois_orbit_minpoly(K11->from_rat(make_rat(7, 3)));
  CHECK(r.degree == 1);
  CHECK(r.minpoly ==
        Polynomial<mpq_class>(std::vector<mpq_class>{make_rat(-7, 3), 1}));

  // the generator of Q(zeta_5) has the cyclotomic polynomial itself
  auto K5 = NumberField::cyclotomic(5);
  auto full = galois_orbit_minpoly(K5->gen());
  CHECK(full.degree == 4);
  CHECK(full.minpoly ==
        Polynomial<mpq_class>(std::vector<mpq_class>{1, 1, 1, 1, 1}));

  // zeta_9^3 is a primitive cube root of unity: degree 2, x^2 + x + 1
  auto K9 = NumberField::cyclotomic(9);
  auto omega = galois_orbit_minpoly(K9->gen().pow(3));
  CHECK(omega.degree == 2);
  CHECK(omega.minpoly == Polynomial<mpq_class>(std::vector<mpq_class>{1, 1, 1}));

  // golden ratio in Q(sqrt 5): x^2 - x - 1
  auto Kr5 = NumberField::quadratic(5);
  auto phi = (Kr5->one() + Kr5->gen()) * make_rat(1, 2);
  auto g = galois_orbit_minpoly(phi);
  CHECK(g.degree == 2);
  CHECK(g.minpoly == Polynomial<mpq_class>(std::vector<mpq_class>{-1, -1, 1}));
}

TEST_CASE("orbit degree divides field degree") {
  std::mt19937_64 rng(5150);
  for (auto K : {NumberField::cyclotomic(7), NumberField::cyclotomic(8),
                 NumberField::cyclotomic(9), NumberField::quadratic(-2)}) {
    for (int trial = 0; trial < 8; ++trial) {
      auto a = random_element(K, rng);
      auto om = galois_orbit_minpoly(a);
      CHECK(K->degree() % om.degree == 0);
      // alpha is a root of its own minimal polynomial
      auto fk = kpoly_from_rational(om.minpoly, K);
      CHECK(poly_eval(fk, a).is_zero());
    }
  }
}

TEST_CASE("mixed-field arithmetic is rejected") {
  auto K5 = NumberField::cyclotomic(5);
  auto K7 = NumberField::cyclotomic(7);
  CHECK_THROWS_AS(K5->gen() + K7->gen(), domain_error);
  CHECK_THROWS_AS(K5->gen() * K7->one(), domain_error);
  // but two handles to the same field interoperate
  auto K5b = NumberField::cyclotomic(5);
  CHECK(K5->gen() == K5b->gen());
  CHECK((K5->gen() + K5b->gen()) == K5->gen() * Rat(2));
}

TEST_CASE("element coordinate conventions") {
  auto K5 = NumberField::cyclotomic(5);
  // zeta^4 = -1 - zeta - zeta^2 - zeta^3
  CHECK(K5->gen().pow(4) == elem(K5, {-1, -1, -1, -1}));
  CHECK(K5->gen() + K5->gen().inverse() == elem(K5, {-1, 0, -1, -1}));
  CHECK_THROWS_AS(K5->element({Rat(1)}), domain_error);  // wrong length
  CHECK(elem(K5, {0, 0, 1, 1}).lex_less(elem(K5, {0, 1, 0, 0})));
  CHECK(K5->from_rat(make_rat(3, 2)).is_rational());
  CHECK(K5->from_rat(make_rat(3, 2)).rational_value() == make_rat(3, 2));
  CHECK_FALSE(K5->gen().is_rational());
  CHECK_THROWS_AS(K5->gen().rational_value(), domain_error);
}

}  // TEST_SUITE
