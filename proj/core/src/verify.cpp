#include "cyctor/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "cyctor/errors.hpp"
#include "cyctor/intmath.hpp"

namespace cyctor {

namespace {

std::string render_orbit_summary(const KernelFieldReport& rep) {
  std::ostringstream os;
  os << "roots:" << rep.roots.size();
  if (!rep.roots.empty()) {
    os << " orbit-degrees:[";
    for (std::size_t i = 0; i < rep.roots.size(); ++i)
      os << (i ? "," : "") << rep.roots[i].orbit_degree;
    os << "]";
  }
  if (!rep.certified) os << " uncertified";
  return os.str();
}

bool root_matches(const KernelRootInfo& r, const DatasetClaim& c) {
  if (c.expected_orbit_degree > 0 && r.orbit_degree != c.expected_orbit_degree)
    return false;
  if (c.expect_ell_ramified) {
    for (const auto& [p, verdict] : r.ramification)
      if (p == c.ell) return verdict == std::string("ramified");
    return false;
  }
  return true;
}

void run_verifiable(const Dataset& ds, const DatasetClaim& c,
                    const VerifyOptions& opt, ClaimOutcome& out) {
  CurveModel E = ds.snapshot().curve(c.label);
  FieldPtr K = NumberField::from_spec(c.field);
  TorsionConfig tc = opt.torsion;
  tc.roots.seed = out.seed;

  if (c.kind == "torsion-group") {
    auto G = torsion_subgroup(E, K, tc);
    auto [m, n] = G.invariants();
    out.computed = render_group(m, n);
    out.aux_primes = G.aux_primes;
    if (G.unresolved()) {
      out.status = ClaimStatus::fail;
      out.detail = "unresolved candidates: ";
      for (const auto& f : G.flags) out.detail += f + " ";
    } else {
      out.status = (GroupPair{m, n} == c.expected_group) ? ClaimStatus::pass
                                                         : ClaimStatus::fail;
    }
  } else if (c.kind == "n-torsion-order") {
    Int cnt = n_torsion_order(E, K, c.n, tc);
    out.computed = to_dec(cnt);
    out.status =
        (cnt == Int(c.expected_count)) ? ClaimStatus::pass : ClaimStatus::fail;
  } else if (c.kind == "kernel-root" || c.kind == "kernel-no-root") {
    KernelFieldConfig kc;
    kc.divpoly_cap = std::max(tc.divpoly_cap, c.ell + 1);
    kc.roots = tc.roots;
    auto rep = isogeny_kernel_field(E, c.ell, K, kc);
    out.computed = render_orbit_summary(rep);
    if (c.kind == "kernel-no-root") {
      // absence needs a complete root list; an uncertified empty list proves
      // nothing and must not pass
      if (rep.has_root || !rep.certified) {
        out.status = ClaimStatus::fail;
        out.detail = rep.has_root ? "a root exists in the field"
                                  : "root search left undecided candidates";
      } else {
        out.status = ClaimStatus::pass;
      }
    } else {
      bool matched = false;
      for (const auto& r : rep.roots)
        if (root_matches(r, c)) matched = true;
      out.status = matched ? ClaimStatus::pass : ClaimStatus::fail;
      if (!matched)
        out.detail = rep.has_root ? "no root with the expected orbit data"
                                  : "no root found in the field";
    }
  } else {
    throw std::logic_error("run_claim: unhandled kind " + c.kind);
  }
}

std::string render_expectation(const DatasetClaim& c) {
  if (c.kind == "torsion-group")
    return render_group(c.expected_group.m, c.expected_group.n);
  if (c.kind == "n-torsion-order")
    return "|E(K)[" + std::to_string(c.n) +
           "]| = " + std::to_string(c.expected_count);
  if (c.kind == "kernel-root") {
    std::string s = "root with orbit degree " +
                    std::to_string(c.expected_orbit_degree);
    if (c.expect_ell_ramified)
      s += ", " + std::to_string(c.ell) + " ramified";
    return s;
  }
  if (c.kind == "kernel-no-root")
    return "no root of the " + std::to_string(c.ell) +
           "-division polynomial";
  return "";
}

}  // namespace

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass:
      return "PASS";
    case ClaimStatus::fail:
      return "FAIL";
    case ClaimStatus::skip:
      return "SKIP";
  }
  return "?";
}

std::string render_group(long m, long n) {
  if (m == 1) return "Z/" + std::to_string(n);
  return "Z/" + std::to_string(m) + " x Z/" + std::to_string(n);
}

ClaimOutcome run_claim(const Dataset& ds, const DatasetClaim& c,
                       const VerifyOptions& opt) {
  ClaimOutcome out;
  out.id = c.id;
  out.label = c.label;
  out.field = c.field;
  out.kind = c.kind;
  out.note = c.note;
  out.expected = render_expectation(c);
  out.seed = derive_seed(opt.torsion.roots.seed, c.id);

  if (c.unverifiable) {
    out.status = ClaimStatus::skip;
    out.detail = "field outside the engine's constructors (" + c.field + ")";
    return out;
  }
  if (c.stretch && !opt.stretch) {
    out.status = ClaimStatus::skip;
    out.detail = "stretch target (enable with the stretch option)";
    return out;
  }
  const SnapshotEntry* entry = ds.snapshot().find(c.label);
  if (!entry || !entry->has_curve()) {
    out.status = ClaimStatus::skip;
    out.detail = "no offline reconstruction for " + c.label +
                 (entry && !entry->note.empty() ? " (" + entry->note + ")" : "");
    return out;
  }

  auto t0 = std::chrono::steady_clock::now();
  try {
    run_verifiable(ds, c, opt, out);
  } catch (const domain_error& e) {
    out.status = ClaimStatus::fail;
    out.detail = std::string("domain error: ") + e.what();
  } catch (const resource_error& e) {
    out.status = ClaimStatus::fail;
    out.detail = std::string("resource limit: ") + e.what();
  }
  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return out;
}

VerificationReport verify_dataset(const Dataset& ds, const std::string& suite,
                                  const VerifyOptions& opt) {
  const DatasetSuite& s = ds.suite(suite);
  VerificationReport rep;
  rep.suite = suite;
  rep.results.resize(s.claim_ids.size());

  auto t0 = std::chrono::steady_clock::now();
  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < s.claim_ids.size(); ++i)
      rep.results[i] = run_claim(ds, ds.claim(s.claim_ids[i]), opt);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= s.claim_ids.size()) return;
        rep.results[i] = run_claim(ds, ds.claim(s.claim_ids[i]), opt);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  for (const auto& r : rep.results) {
    if (r.status == ClaimStatus::pass) ++rep.passed;
    if (r.status == ClaimStatus::fail) ++rep.failed;
    if (r.status == ClaimStatus::skip) ++rep.skipped;
  }
  return rep;
}

std::string render_report_table(const VerificationReport& rep) {
  std::ostringstream os;
  os << "suite " << rep.suite << "\n";
  for (const auto& r : rep.results) {
    os << "  " << to_string(r.status) << "  " << r.id;
    if (!r.computed.empty()) os << "  computed=" << r.computed;
    if (!r.expected.empty()) os << "  expected=" << r.expected;
    if (!r.detail.empty()) os << "  [" << r.detail << "]";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "  (%.2fs)", r.seconds);
    os << buf << "\n";
  }
  os << "  " << rep.passed << " passed, " << rep.failed << " failed, "
     << rep.skipped << " skipped";
  char buf[32];
  std::snprintf(buf, sizeof(buf), " in %.1fs", rep.seconds);
  os << buf << "\n";
  return os.str();
}

}  // namespace cyctor
