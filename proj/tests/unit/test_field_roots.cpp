#include <doctest.h>

#include <algorithm>

#include "cyctor/field_roots.hpp"

using namespace cyctor;

namespace {

using QPoly = Polynomial<mpq_class>;

QPoly qp(std::initializer_list<long> coeffs) {
  std::vector<mpq_class> v;
  for (long c : coeffs) v.emplace_back(c);
  return QPoly(std::move(v));
}

FieldElement elem(const FieldPtr& K, std::initializer_list<long> coords) {
  std::vector<Rat> v;
  for (long c : coords) v.emplace_back(c);
  return K->element(std::move(v));
}

bool contains(const std::vector<FieldElement>& v, const FieldElement& e) {
  return std::find(v.begin(), v.end(), e) != v.end();
}

}  // namespace

TEST_SUITE("field_roots") {

TEST_CASE("x^2 + x - 1 over Q(zeta_5): the golden-ratio conjugates") {
  auto K = NumberField::cyclotomic(5);
  auto roots = roots_in_field(qp({-1, 1, 1}), K);
  REQUIRE(roots.size() == 2);
  auto z = K->gen();
  // zeta + zeta^4 and zeta^2 + zeta^3, sorted by coordinates
  CHECK(roots[0] == z + z.pow(4));
  CHECK(roots[1] == z.pow(2) + z.pow(3));
  CHECK(roots[0] == elem(K, {-1, 0, -1, -1}));
  CHECK(roots[1] == elem(K, {0, 0, 1, 1}));
  for (const auto& r : roots) CHECK(r * r + r - K->one() == K->zero());
}

TEST_CASE("defining polynomial splits completely in its own field") {
  auto K = NumberField::cyclotomic(5);
  auto roots = roots_in_field(qp({1, 1, 1, 1, 1}), K);
  REQUIRE(roots.size() == 4);
  for (int i = 1; i <= 4; ++i) CHECK(contains(roots, K->gen().pow(i)));
}

TEST_CASE("x^2 - 2 over Q(zeta_5): no roots, candidates reported undecided") {
  auto K = NumberField::cyclotomic(5);
  auto rep = roots_in_field_report(qp({-2, 0, 1}), K);
  CHECK(rep.roots.empty());
  // the residue field has square roots of 2 (it contains every quadratic
  // extension of the prime field), so local candidates exist but never
  // reconstruct to elements of K
  CHECK(rep.residue_root_count == 2);
  CHECK(rep.undecided.size() == 2);
  for (const auto& u : rep.undecided) CHECK(u.reached_bits > 4096);
  CHECK(roots_in_field(qp({-2, 0, 1}), K).empty());
}

TEST_CASE("rational roots over Q") {
  auto Q = NumberField::rationals();
  // (x-2)(x+3)(x^2+1)
  auto roots = roots_in_field(qp({-6, 1, -5, 1, 1}), Q);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Q->from_rat(Rat(-3)));
  CHECK(roots[1] == Q->from_rat(Rat(2)));
  // (3x-2)(2x+5): denominators survive reconstruction
  auto fr = roots_in_field(qp({-10, 11, 6}), Q);
  REQUIRE(fr.size() == 2);
  CHECK(fr[0] == Q->from_rat(make_rat(-5, 2)));
  CHECK(fr[1] == Q->from_rat(make_rat(2, 3)));
}

TEST_CASE("repeated roots are returned once") {
  auto Q = NumberField::rationals();
  // (x-1)^3 (x-2) = x^4 - 5x^3 + 9x^2 - 7x + 2
  auto roots = roots_in_field(qp({2, -7, 9, -5, 1}), Q);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Q->from_rat(Rat(1)));
  CHECK(roots[1] == Q->from_rat(Rat(2)));
}

TEST_CASE("polynomials with field coefficients") {
  auto K = NumberField::cyclotomic(5);
  auto z = K->gen();
  // (x - z)(x - z^2) = x^2 - (z + z^2) x + z^3
  KPoly f(std::vector<FieldElement>{z.pow(3), K->zero() - (z + z.pow(2)), K->one()});
  auto roots = roots_in_field(f);
  REQUIRE(roots.size() == 2);
  CHECK(contains(roots, z));
  CHECK(contains(roots, z.pow(2)));
  // linear with a non-rational leading coefficient: z*x - 1 has root z^-1
  KPoly lin(std::vector<FieldElement>{K->zero() - K->one(), z});
  auto lr = roots_in_field(lin);
  REQUIRE(lr.size() == 1);
  CHECK(lr[0] == z.inverse());
}

TEST_CASE("square roots in quadratic fields") {
  auto K5 = NumberField::quadratic(5);
  auto roots = roots_in_field(qp({-5, 0, 1}), K5);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == K5->zero() - K5->gen());
  CHECK(roots[1] == K5->gen());

  auto Km59 = NumberField::quadratic(-59);
  auto r2 = roots_in_field(qp({59, 0, 1}), Km59);
  REQUIRE(r2.size() == 2);
  CHECK(contains(r2, Km59->gen()));
}

TEST_CASE("is_square examples") {
  auto Q = NumberField::rationals();
  auto four = is_square(Q->from_rat(Rat(4)));
  REQUIRE(four.has_value());
  CHECK(*four == Q->from_rat(Rat(2)));  // the larger of +-2

  auto nine_q = is_square(Q->from_rat(make_rat(9, 4)));
  REQUIRE(nine_q.has_value());
  CHECK(*nine_q == Q->from_rat(make_rat(3, 2)));

  CHECK_FALSE(is_square(Q->from_rat(Rat(3))).has_value());

  // 5 is a square in Q(zeta_5): the square of the quadratic Gauss sum
  auto K = NumberField::cyclotomic(5);
  auto g = is_square(K->from_rat(Rat(5)));
  REQUIRE(g.has_value());
  CHECK(*g * *g == K->from_rat(Rat(5)));
  auto z = K->gen();
  auto gauss = z - z.pow(2) - z.pow(3) + z.pow(4);
  CHECK((*g == gauss || *g == K->zero() - gauss));
  CHECK(*g == elem(K, {1, 0, 2, 2}));  // the lexicographically larger root

  // a totally real field has no square root of -1
  auto K5 = NumberField::quadratic(5);
  CHECK_FALSE(is_square(K5->from_rat(Rat(-1))).has_value());

  // 0 and squares of generators
  CHECK(*is_square(K5->zero()) == K5->zero());
  auto Km59 = NumberField::quadratic(-59);
  auto s = is_square(Km59->from_rat(Rat(-59)));
  REQUIRE(s.has_value());
  CHECK(*s == Km59->gen());
}

TEST_CASE("root set is independent of the auxiliary prime") {
  auto K = NumberField::cyclotomic(5);
  auto f = qp({-1, 1, 1});
  auto base = roots_in_field_report(f, K);
  REQUIRE(base.roots.size() == 2);
  for (int hop = 0; hop < 3; ++hop) {
    RootsConfig cfg;
    cfg.aux_prime_min = base.aux_prime + 1 + 10 * hop;
    auto again = roots_in_field_report(f, K, cfg);
    CHECK(again.aux_prime > base.aux_prime);
    CHECK(again.roots == base.roots);
  }
}

TEST_CASE("verified roots never exceed residue roots") {
  auto K = NumberField::cyclotomic(7);
  for (auto f : {qp({-1, 1, 1}), qp({1, 1, 1, 1, 1, 1, 1}), qp({2, 0, 3, 1})}) {
    auto rep = roots_in_field_report(f, K);
    CHECK(static_cast<int>(rep.roots.size() + rep.undecided.size()) <=
          rep.residue_root_count);
  }
}

TEST_CASE("galois action permutes the roots of rational polynomials") {
  auto K = NumberField::cyclotomic(5);
  for (auto f : {qp({-1, 1, 1}), qp({1, 1, 1, 1, 1})}) {
    auto roots = roots_in_field(f, K);
    for (auto a : K->galois_units()) {
      for (const auto& r : roots)
        CHECK(contains(roots, galois_apply(static_cast<long>(a), r)));
    }
  }
}

TEST_CASE("seed does not change the answer") {
  auto K = NumberField::cyclotomic(9);
  auto f = qp({1, 1, 1});  // roots are the primitive cube roots zeta_9^3, zeta_9^6
  RootsConfig a, b;
  a.seed = 1;
  b.seed = 999;
  auto ra = roots_in_field(f, K, a);
  auto rb = roots_in_field(f, K, b);
  CHECK(ra == rb);
  REQUIRE(ra.size() == 2);
  CHECK(contains(ra, K->gen().pow(3)));
}

TEST_CASE("forcing a bad auxiliary prime produces undecided candidates over Q") {
  auto Q = NumberField::rationals();
  auto f = qp({-2, 0, 1});
  // default: q = 3, where 2 is a non-residue, so the absence of roots is
  // visible already in the residue field
  auto clean = roots_in_field_report(f, Q);
  CHECK(clean.aux_prime == 3);
  CHECK(clean.residue_root_count == 0);
  CHECK(clean.undecided.empty());
  CHECK(clean.roots.empty());
  // forcing q = 7 (2 = 3^2 mod 7) manufactures local-only candidates
  RootsConfig cfg;
  cfg.aux_prime_min = 7;
  auto dirty = roots_in_field_report(f, Q, cfg);
  CHECK(dirty.aux_prime == 7);
  CHECK(dirty.residue_root_count == 2);
  CHECK(dirty.undecided.size() == 2);
  CHECK(dirty.roots.empty());
}

TEST_CASE("degenerate inputs") {
  auto K = NumberField::cyclotomic(5);
  CHECK_THROWS_AS(roots_in_field(QPoly{}, K), domain_error);  // zero polynomial
  CHECK(roots_in_field(qp({7}), K).empty());                  // nonzero constant
  RootsConfig tiny;
  tiny.aux_prime_cap = 2;  // only q = 2 allowed; reduction of x^2 - 2 is bad there
  CHECK_THROWS_AS(roots_in_field(qp({-2, 0, 1}), K, tiny), resource_error);
}

TEST_CASE("certified searches screen non-global candidates across primes") {
  auto K = NumberField::cyclotomic(5);
  // (x-1)(x^3-2): the only root in Q(zeta_5) is 1; the cube roots of 2 show up
  // in some residue fields and not in others
  auto f = qp({2, -2, 0, -1, 1});

  // default prime: 2 is not a cube in F_{7^4}, so the residue count is already
  // exact and no probing is needed
  auto easy = roots_in_field_certified(f, K);
  CHECK(easy.aux_prime == 7);
  REQUIRE(easy.roots.size() == 1);
  CHECK(easy.roots[0] == K->one());
  CHECK(easy.certified);
  CHECK(easy.undecided.empty());
  CHECK(easy.probe_primes.empty());

  // force q = 17, where 2 is a cube in F_{17^4}: three local-only candidates
  // appear and are screened away by probing 23 (still a cube) and 37 (not)
  RootsConfig cfg;
  cfg.aux_prime_min = 17;
  auto hard = roots_in_field_certified(f, K, cfg);
  CHECK(hard.aux_prime == 17);
  REQUIRE(hard.roots.size() == 1);
  CHECK(hard.roots[0] == K->one());
  CHECK(hard.certified);
  CHECK(hard.undecided.empty());
  CHECK(hard.probe_primes == std::vector<std::uint64_t>{23, 37});

  // over Q: (x-3)(x^2-2) forced to q = 17 where 2 is a square; the probe at 19
  // (2 a non-residue) certifies that 3 is the only rational root
  auto Q = NumberField::rationals();
  RootsConfig c17;
  c17.aux_prime_min = 17;
  auto rq = roots_in_field_certified(qp({6, -2, -3, 1}), Q, c17);
  CHECK(rq.aux_prime == 17);
  REQUIRE(rq.roots.size() == 1);
  CHECK(rq.roots[0] == Q->from_rat(Rat(3)));
  CHECK(rq.certified);
  CHECK(rq.probe_primes == std::vector<std::uint64_t>{19});
}

TEST_CASE("certification is refused when every residue field is blind") {
  // sqrt(2) lies in every residue field of Q(zeta_5) (they have even degree)
  // but not in the field itself: probing cannot settle this, and the honest
  // answer is an uncertified empty root list
  auto K = NumberField::cyclotomic(5);
  auto rep = roots_in_field_certified(qp({-2, 0, 1}), K);
  CHECK(rep.roots.empty());
  CHECK_FALSE(rep.certified);
  CHECK(rep.undecided.size() == 2);
  CHECK(!rep.probe_primes.empty());
  for (auto q : rep.probe_primes) CHECK(q > rep.aux_prime);
}

TEST_CASE("certified results agree with the raw pipeline") {
  auto K = NumberField::cyclotomic(5);
  for (auto f : {qp({-1, 1, 1}), qp({1, 1, 1, 1, 1})}) {
    auto raw = roots_in_field(f, K);
    auto cert = roots_in_field_certified(f, K);
    CHECK(cert.roots == raw);
    CHECK(cert.certified);
  }
  auto K5 = NumberField::quadratic(5);
  auto cert = roots_in_field_certified(qp({-1, -1, 1}), K5);
  REQUIRE(cert.roots.size() == 2);  // (1 +- sqrt 5)/2
  CHECK(cert.certified);
  for (const auto& r : cert.roots) CHECK(r * r - r - K5->one() == K5->zero());
}

TEST_CASE("certified square checks: rationals") {
  auto Q = NumberField::rationals();
  auto a = is_square_certified(Q->from_rat(make_rat(9, 4)));
  REQUIRE(a.root.has_value());
  CHECK(*a.root == Q->from_rat(make_rat(3, 2)));
  CHECK(a.certified);
  auto b = is_square_certified(Q->from_rat(Rat(-4)));
  CHECK_FALSE(b.root.has_value());
  CHECK(b.certified);
  auto c = is_square_certified(Q->from_rat(Rat(3)));
  CHECK_FALSE(c.root.has_value());
  CHECK(c.certified);
  CHECK(*is_square_certified(Q->zero()).root == Q->zero());
}

TEST_CASE("certified square checks: quadratic fields by norm descent") {
  auto K5 = NumberField::quadratic(5);
  // ((1+s5)/2)^2 = (3+s5)/2
  auto beta = K5->element({make_rat(3, 2), make_rat(1, 2)});
  auto a = is_square_certified(beta);
  REQUIRE(a.root.has_value());
  CHECK(*a.root == K5->element({make_rat(1, 2), make_rat(1, 2)}));
  CHECK(a.certified);
  CHECK(*a.root * *a.root == beta);

  // sqrt(sqrt 5) is not in the field, and the refusal is exact
  auto b = is_square_certified(K5->gen());
  CHECK_FALSE(b.root.has_value());
  CHECK(b.certified);

  auto c = is_square_certified(K5->from_rat(Rat(5)));
  REQUIRE(c.root.has_value());
  CHECK(*c.root == K5->gen());
  CHECK(c.certified);

  CHECK(is_square_certified(K5->from_rat(Rat(-1))).certified);
  CHECK_FALSE(is_square_certified(K5->from_rat(Rat(-1))).root.has_value());

  // (1+i)^2 = 2i
  auto Ki = NumberField::quadratic(-1);
  auto d = is_square_certified(Ki->element({Rat(0), Rat(2)}));
  REQUIRE(d.root.has_value());
  CHECK(*d.root == Ki->element({Rat(1), Rat(1)}));
  CHECK(d.certified);

  auto Km2 = NumberField::quadratic(-2);
  auto e = is_square_certified(Km2->from_rat(Rat(-2)));
  REQUIRE(e.root.has_value());
  CHECK(*e.root == Km2->gen());
  CHECK(e.certified);
}

TEST_CASE("certified square checks: rational arguments over cyclotomic fields") {
  auto K5 = NumberField::cyclotomic(5);
  auto g5 = is_square_certified(K5->from_rat(Rat(5)));
  REQUIRE(g5.root.has_value());
  CHECK(*g5.root == elem(K5, {1, 0, 2, 2}));  // agrees with the raw pipeline
  CHECK(g5.certified);
  CHECK(is_square_certified(K5->from_rat(Rat(2))).certified);
  CHECK_FALSE(is_square_certified(K5->from_rat(Rat(2))).root.has_value());
  CHECK(is_square_certified(K5->from_rat(Rat(-5))).certified);
  CHECK_FALSE(is_square_certified(K5->from_rat(Rat(-5))).root.has_value());

  // Q(zeta_7) contains sqrt(-7) but not sqrt(7)
  auto K7 = NumberField::cyclotomic(7);
  auto g7 = is_square_certified(K7->from_rat(Rat(-7)));
  REQUIRE(g7.root.has_value());
  CHECK(*g7.root == elem(K7, {1, 2, 2, 0, 2, 0}));
  CHECK(*g7.root * *g7.root == K7->from_rat(Rat(-7)));
  CHECK(g7.certified);
  CHECK(is_square_certified(K7->from_rat(Rat(7))).certified);
  CHECK_FALSE(is_square_certified(K7->from_rat(Rat(7))).root.has_value());

  // prime-power conductor: the quadratic subfield of Q(zeta_9) is Q(sqrt -3)
  auto K9 = NumberField::cyclotomic(9);
  auto g9 = is_square_certified(K9->from_rat(Rat(-3)));
  REQUIRE(g9.root.has_value());
  CHECK(*g9.root == elem(K9, {1, 0, 0, 2, 0, 0}));  // 1 + 2 zeta^3
  CHECK(g9.certified);
  CHECK(is_square_certified(K9->from_rat(Rat(3))).certified);
  CHECK_FALSE(is_square_certified(K9->from_rat(Rat(3))).root.has_value());

  // two-power conductors
  auto K4 = NumberField::cyclotomic(4);
  auto m9 = is_square_certified(K4->from_rat(Rat(-9)));
  REQUIRE(m9.root.has_value());
  CHECK(*m9.root == elem(K4, {0, 3}));
  CHECK(m9.certified);
  auto K8 = NumberField::cyclotomic(8);
  auto r2 = is_square_certified(K8->from_rat(Rat(2)));
  REQUIRE(r2.root.has_value());
  CHECK(*r2.root == elem(K8, {0, 1, 0, -1}));  // zeta_8 + zeta_8^-1
  auto rm2 = is_square_certified(K8->from_rat(Rat(-2)));
  REQUIRE(rm2.root.has_value());
  CHECK(*rm2.root == elem(K8, {0, 1, 0, 1}));
  auto rm1 = is_square_certified(K8->from_rat(Rat(-1)));
  REQUIRE(rm1.root.has_value());
  CHECK(*rm1.root == elem(K8, {0, 0, 1, 0}));
  CHECK(is_square_certified(K8->from_rat(Rat(3))).certified);
  CHECK_FALSE(is_square_certified(K8->from_rat(Rat(3))).root.has_value());
}

TEST_CASE("certified square checks: monomials and general elements") {
  auto K = NumberField::cyclotomic(5);
  auto z = K->gen();

  // zeta = (zeta^3)^2 since zeta^6 = zeta
  auto a = is_square_certified(z);
  REQUIRE(a.root.has_value());
  CHECK(*a.root == z.pow(3));
  CHECK(a.certified);

  // 2 zeta would need sqrt(2)
  auto b = is_square_certified(z + z);
  CHECK_FALSE(b.root.has_value());
  CHECK(b.certified);

  // 5 zeta^2 = (gauss sum * zeta)^2
  auto c = is_square_certified(K->from_rat(Rat(5)) * z.pow(2));
  REQUIRE(c.root.has_value());
  CHECK(*c.root == elem(K, {2, 1, 2, 0}));
  CHECK(*c.root * *c.root == K->from_rat(Rat(5)) * z.pow(2));
  CHECK(c.certified);

  // -3 zeta^3 = (1 - zeta^3)^2 over Q(zeta_9)
  auto K9 = NumberField::cyclotomic(9);
  auto z9 = K9->gen();
  auto d = is_square_certified(K9->from_rat(Rat(-3)) * z9.pow(3));
  REQUIRE(d.root.has_value());
  CHECK(*d.root == elem(K9, {1, 0, 0, -1, 0, 0}));
  CHECK(d.certified);

  // general element with a verified square root
  auto sq = (K->one() + z) * (K->one() + z);
  auto e = is_square_certified(sq);
  REQUIRE(e.root.has_value());
  CHECK(*e.root == K->one() + z);
  CHECK(e.certified);

  // 2 (zeta + zeta^4)^2: a square times 2, invisible to every residue field
  // and outside the exact fast paths; the honest answer is uncertified
  auto u = z + z.pow(4);
  auto f = is_square_certified(K->from_rat(Rat(2)) * u * u);
  CHECK_FALSE(f.root.has_value());
  CHECK_FALSE(f.certified);

  // i * zeta_4 special case: sqrt(t * i) exists iff t/2 or -t/2 is a square
  auto K4 = NumberField::cyclotomic(4);
  auto g = is_square_certified(K4->element({Rat(0), Rat(2)}));
  REQUIRE(g.root.has_value());
  CHECK(*g.root == K4->element({Rat(1), Rat(1)}));  // (1+i)^2 = 2i
  CHECK(g.certified);
  auto h = is_square_certified(K4->element({Rat(0), Rat(-2)}));
  REQUIRE(h.root.has_value());
  CHECK(*h.root == K4->element({Rat(1), Rat(-1)}));
  CHECK(h.certified);
}

}  // TEST_SUITE
