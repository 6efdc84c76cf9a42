#include "cyctor/jkl.hpp"

#include "cyctor/errors.hpp"

namespace cyctor {

namespace {

bool rat_is_square(const Rat& r) {
  if (r < 0) return false;
  Int n = r.get_num(), d = r.get_den();
  return mpz_perfect_square_p(n.get_mpz_t()) &&
         mpz_perfect_square_p(d.get_mpz_t());
}

// y^2 + (1-c) xy - b y = x^3 - b x^2
CurveModel tate_curve(const Rat& b, const Rat& c) {
  return CurveModel::from_rationals({Rat(1) - c, -b, -b, Rat(0), Rat(0)});
}

FamilyCurve finish(CurveModel E, const Rat& dval) {
  if (dval == 0)
    throw domain_error("family: d(t) vanishes, no quadratic field attached");
  if (rat_is_square(dval))
    throw domain_error("family: d(t) is a rational square, the attached "
                       "field degenerates to Q");
  FamilyCurve out{std::move(E), rational_squarefree_part(dval), dval};
  return out;
}

}  // namespace

Int rational_squarefree_part(const Rat& r) {
  if (r == 0) throw domain_error("rational_squarefree_part: zero argument");
  return squarefree_part(Int(r.get_num() * r.get_den()));
}

FamilyCurve family_z2z10(const Rat& t) {
  Rat q = t * t - Rat(3) * t + 1;  // pole of b and c
  if (t == 0 || t == make_rat(1, 2) || t == 1 || q == 0)
    throw domain_error("family_z2z10: excluded parameter t = " + to_dec(t));
  Rat w = Rat(2) * t * t - Rat(3) * t + 1;  // (2t-1)(t-1)
  Rat b = t * t * t * w / (q * q);
  Rat c = -t * w / q;
  Rat d = Rat(8) * t * t * t - Rat(8) * t * t + 1;
  return finish(tate_curve(b, c), d);
}

FamilyCurve family_z2z12(const Rat& t) {
  if (t == -1 || t == 0 || t == 1)
    throw domain_error("family_z2z12: excluded parameter t = " + to_dec(t));
  Rat t2 = t * t;
  Rat c = (Rat(1) - t2) / (t2 * t2 + Rat(3) * t2);
  Rat b = c + c * c;
  Rat d = (t2 - 1) / (t2 + 3);
  return finish(tate_curve(b, c), d);
}

FamilyCurve family_by_name(const std::string& name, const Rat& t) {
  if (name == "jkl10") return family_z2z10(t);
  if (name == "jkl12") return family_z2z12(t);
  throw domain_error("unknown family '" + name + "' (expected jkl10 or jkl12)");
}

}  // namespace cyctor
