#include "cyctor/json_io.hpp"

#include <cctype>
#include <cstdio>

#include "cyctor/errors.hpp"

namespace cyctor {

namespace {

std::string int_string(const Int& n) { return n.get_str(); }

// fixed-precision so timing output never depends on locale or default float
// formatting
std::string seconds_string(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

ojson pair_json(const std::pair<long, long>& p) {
  return ojson::array({p.first, p.second});
}

}  // namespace

std::string rat_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat_string(const std::string& s) {
  if (s.empty()) throw domain_error("empty rational literal");
  for (char ch : s)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
      throw domain_error("malformed rational literal: \"" + s + "\"");
  mpq_class r;
  if (r.set_str(s, 10) != 0)
    throw domain_error("malformed rational literal: \"" + s + "\"");
  if (r.get_den() == 0) throw domain_error("zero denominator: \"" + s + "\"");
  r.canonicalize();
  return r;
}

ojson to_json(const FieldElement& a) {
  ojson out = ojson::array();
  for (const Rat& c : a.coords()) out.push_back(rat_string(c));
  return out;
}

ojson to_json(const PointOnCurve& p) {
  if (p.at_infinity) return ojson("infinity");
  ojson out;
  out["x"] = to_json(p.x);
  out["y"] = to_json(p.y);
  return out;
}

ojson to_json(const Polynomial<Rat>& f) {
  ojson out = ojson::array();
  for (const Rat& c : f.c) out.push_back(rat_string(c));
  return out;
}

ojson to_json(const CurveModel& E) {
  ojson out;
  out["field"] = E.field()->spec_string();
  ojson a = ojson::array();
  for (const FieldElement& ai : E.a_invariants()) a.push_back(to_json(ai));
  out["a_invariants"] = a;
  out["discriminant"] = to_json(E.disc());
  out["j_invariant"] = to_json(E.j_invariant());
  out["short_model"] = {{"A", to_json(E.shortA())}, {"B", to_json(E.shortB())}};
  return out;
}

ojson to_json(const TorsionBound& b) {
  ojson out;
  out["bound"] = int_string(b.B);
  ojson primes = ojson::array();
  for (const auto& u : b.primes) {
    ojson p;
    p["q"] = u.q;
    p["residue_degree"] = u.f;
    p["count"] = int_string(u.count);
    primes.push_back(std::move(p));
  }
  out["primes"] = primes;
  return out;
}

ojson to_json(const TorsionGroup& g) {
  ojson out;
  out["invariants"] = pair_json(g.invariants());
  out["order"] = g.order();
  ojson gens = ojson::array();
  for (const auto& p : g.generators) gens.push_back(to_json(p));
  out["generators"] = gens;
  out["bound"] = int_string(g.bound);
  out["aux_primes"] = g.aux_primes;
  ojson levels = ojson::array();
  for (const auto& l : g.levels) {
    ojson lj;
    lj["ell"] = l.ell;
    lj["level"] = l.level;
    lj["roots_in_field"] = l.roots_in_k;
    lj["points"] = l.points;
    lj["undecided"] = l.undecided;
    levels.push_back(std::move(lj));
  }
  out["levels"] = levels;
  out["flags"] = g.flags;
  return out;
}

ojson to_json(const TwistDescentReport& r) {
  ojson out;
  out["p"] = r.p;
  out["ell_power"] = int_string(r.q_power);
  out["twist_d"] = int_string(r.d_star);
  out["cyclotomic_part"] = pair_json(r.cyclo_invariants);
  out["quadratic_part"] = pair_json(r.quad_invariants);
  out["rational_part"] = pair_json(r.rational_invariants);
  out["twist_part"] = pair_json(r.twist_invariants);
  out["product_identity"] = r.product_identity;
  out["equals_larger_side"] = r.equals_larger_side;
  out["flags"] = r.flags;
  return out;
}

ojson to_json(const KernelFieldReport& r) {
  ojson out;
  out["ell"] = r.ell;
  out["field"] = r.field;
  out["has_root"] = r.has_root;
  out["certified"] = r.certified;
  out["undecided"] = r.undecided;
  ojson roots = ojson::array();
  for (const auto& info : r.roots) {
    ojson rj;
    rj["x"] = to_json(info.root);
    rj["orbit_degree"] = info.orbit_degree;
    rj["min_poly"] = to_json(info.min_poly);
    ojson ram = ojson::array();
    for (const auto& [p, verdict] : info.ramification)
      ram.push_back(ojson::array({int_string(p), verdict}));
    rj["ramification"] = ram;
    rj["disc_fully_factored"] = info.disc_fully_factored;
    rj["y_in_field"] = info.y_in_field;
    roots.push_back(std::move(rj));
  }
  out["roots"] = roots;
  out["flags"] = r.flags;
  return out;
}

ojson to_json(const CertifiedRoots& r) {
  ojson out;
  ojson roots = ojson::array();
  for (const auto& x : r.roots) roots.push_back(to_json(x));
  out["roots"] = roots;
  out["certified"] = r.certified;
  out["undecided"] = static_cast<int>(r.undecided.size());
  out["aux_prime"] = r.aux_prime;
  out["probe_primes"] = r.probe_primes;
  return out;
}

ojson to_json(const FamilyCurve& f) {
  ojson out;
  out["curve"] = to_json(f.curve);
  out["d"] = int_string(f.d);
  out["d_value"] = rat_string(f.d_value);
  return out;
}

ojson to_json(const ClaimOutcome& c, bool include_timing) {
  ojson out;
  out["id"] = c.id;
  out["label"] = c.label;
  out["field"] = c.field;
  out["kind"] = c.kind;
  out["status"] = to_string(c.status);
  out["computed"] = c.computed;
  out["expected"] = c.expected;
  if (!c.detail.empty()) out["detail"] = c.detail;
  if (!c.note.empty()) out["note"] = c.note;
  out["seed"] = c.seed;
  out["aux_primes"] = c.aux_primes;
  if (include_timing) out["seconds"] = seconds_string(c.seconds);
  return out;
}

ojson to_json(const VerificationReport& r, bool include_timing) {
  ojson out;
  out["suite"] = r.suite;
  ojson results = ojson::array();
  for (const auto& c : r.results) results.push_back(to_json(c, include_timing));
  out["results"] = results;
  out["passed"] = r.passed;
  out["failed"] = r.failed;
  out["skipped"] = r.skipped;
  out["ok"] = r.ok();
  if (include_timing) out["seconds"] = seconds_string(r.seconds);
  return out;
}

std::array<Rat, 5> parse_ainvs(const ojson& j) {
  if (!j.is_array() || j.size() != 5)
    throw domain_error("a-invariants: expected an array of 5 rational strings");
  std::array<Rat, 5> a;
  for (std::size_t i = 0; i < 5; ++i) {
    if (!j[i].is_string())
      throw domain_error("a-invariants: entries must be rational strings");
    a[i] = parse_rat_string(j[i].get<std::string>());
  }
  return a;
}

Polynomial<Rat> parse_poly(const ojson& j) {
  if (!j.is_array())
    throw domain_error("polynomial: expected an array of rational strings");
  std::vector<Rat> c;
  c.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string())
      throw domain_error("polynomial: coefficients must be rational strings");
    c.push_back(parse_rat_string(e.get<std::string>()));
  }
  return Polynomial<Rat>(std::move(c));
}

}  // namespace cyctor
