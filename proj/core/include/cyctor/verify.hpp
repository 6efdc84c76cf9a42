#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "cyctor/dataset.hpp"
#include "cyctor/kernel_field.hpp"
#include "cyctor/torsion.hpp"

namespace cyctor {

enum class ClaimStatus { pass, fail, skip };
const char* to_string(ClaimStatus s);

struct ClaimOutcome {
  std::string id, label, field, kind;
  ClaimStatus status = ClaimStatus::skip;
  std::string computed;  // rendered result, empty when skipped
  std::string expected;  // rendered expectation
  std::string detail;    // failure cause or skip reason
  std::string note;      // carried over from the claim
  double seconds = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> aux_primes;
};

struct VerifyOptions {
  TorsionConfig torsion{};  // numeric knobs shared by every engine call
  int jobs = 1;
  bool stretch = false;  // attempt claims marked as stretch targets
};

struct VerificationReport {
  std::string suite;
  std::vector<ClaimOutcome> results;  // dataset order, independent of timing
  int passed = 0, failed = 0, skipped = 0;
  double seconds = 0;
  bool ok() const { return failed == 0; }
};

// "Z/n" or "Z/m x Z/n" for the invariant pair (m, n)
std::string render_group(long m, long n);

// Runs every claim of the suite through the engine. Claims flagged
// unverifiable (fields outside the engine's constructors) and disabled
// stretch targets are reported as skip; engine errors on attempted claims are
// failures, never silently absorbed. Claims fan out to `jobs` workers;
// results keep dataset order.
VerificationReport verify_dataset(const Dataset& ds, const std::string& suite,
                                  const VerifyOptions& opt = {});

ClaimOutcome run_claim(const Dataset& ds, const DatasetClaim& c,
                       const VerifyOptions& opt);

// fixed-width human-readable table (one line per claim plus a summary line)
std::string render_report_table(const VerificationReport& rep);

}  // namespace cyctor
