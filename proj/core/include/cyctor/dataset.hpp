#pragma once
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyctor/curve.hpp"
#include "cyctor/gates.hpp"

namespace cyctor {

// resolution order: CYCTOR_DATA_DIR environment variable, then the
// compiled-in source/installed data directory
std::string data_directory();

// "conductor.isogenyclass curvenumber", e.g. "11.a3"; throws domain_error on
// malformed input, returns the conductor otherwise
Int parse_curve_label(const std::string& label);

// How a snapshot entry's coefficients were obtained without database access:
//   family-search        - located by scanning a parametric torsion family
//                          for stated invariants, then confirmed by its claims
//   reconstructed-from-j - generic model for the stated j-invariant; the twist
//                          is pinned by a stated property, or irrelevant to
//                          every claim carried by the entry
//   unresolved           - no offline derivation path; claims referencing the
//                          entry are reported as skipped, never as passing
struct SnapshotEntry {
  std::string label;
  std::optional<std::array<Rat, 5>> ainvs;
  std::optional<Int> conductor;
  std::string provenance;
  std::string note;

  bool has_curve() const { return ainvs.has_value(); }
};

class Snapshot {
 public:
  static Snapshot load(const std::string& path);
  static Snapshot load_default();  // lmfdb_snapshot.json in the data directory

  const std::string& path() const { return path_; }
  const std::vector<SnapshotEntry>& entries() const { return entries_; }
  const SnapshotEntry* find(const std::string& label) const;
  // entry with coefficients; domain_error when absent or coefficientless
  const SnapshotEntry& require(const std::string& label) const;
  CurveModel curve(const std::string& label) const;

 private:
  std::string path_;
  std::vector<SnapshotEntry> entries_;
  std::map<std::string, std::size_t> index_;
};

// One statement about a labeled curve, tied to a field the engine can build
// (or explicitly marked outside its reach).
struct DatasetClaim {
  std::string id;     // stable key, e.g. "11.a3/cyclo:11/torsion-group"
  std::string label;  // curve label resolved through the snapshot
  std::string field;  // "Q" | "cyclo:n" | "quad:d" | free text if unverifiable
  std::string kind;   // torsion-group | n-torsion-order | kernel-root |
                      // kernel-no-root
  GroupPair expected_group;       // torsion-group
  int n = 0;                      // n-torsion-order
  long expected_count = 0;        // n-torsion-order
  int ell = 0;                    // kernel-root / kernel-no-root
  int expected_orbit_degree = 0;  // kernel-root
  bool expect_ell_ramified = false;
  std::string note;
  bool unverifiable = false;  // outside the engine's field constructors
  bool stretch = false;       // skipped unless stretch targets are enabled
};

struct DatasetSuite {
  std::string name;
  std::string description;
  std::vector<std::string> claim_ids;
};

class Dataset {
 public:
  static Dataset load(const std::string& dataset_path, Snapshot snapshot);
  static Dataset load_default();  // paper_dataset.json + default snapshot

  const Snapshot& snapshot() const { return snap_; }
  const std::vector<DatasetClaim>& claims() const { return claims_; }
  const DatasetClaim& claim(const std::string& id) const;
  const std::vector<DatasetSuite>& suites() const { return suites_; }
  // domain_error listing the registry when the name is unknown
  const DatasetSuite& suite(const std::string& name) const;
  std::vector<std::string> suite_names() const;

 private:
  void validate() const;
  Snapshot snap_;
  std::vector<DatasetClaim> claims_;
  std::vector<DatasetSuite> suites_;
  std::map<std::string, std::size_t> claim_index_, suite_index_;
};

}  // namespace cyctor
