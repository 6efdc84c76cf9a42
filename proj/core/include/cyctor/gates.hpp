#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace cyctor {

// Invariant pair (m, n) with m | n, naming the group Z/m x Z/n; m = 1 for
// cyclic groups. Matches TorsionGroup::invariants() up to the (m, mn)
// convention there: compare against that pair directly.
struct GroupPair {
  long m = 1;
  long n = 1;
  bool operator==(const GroupPair& o) const { return m == o.m && n == o.n; }
  bool operator<(const GroupPair& o) const {
    return m != o.m ? m < o.m : n < o.n;
  }
};

// true iff Z/m1 x Z/n1 embeds into Z/m2 x Z/n2 (invariant pairs, mi | ni)
bool invariant_pair_contains(const GroupPair& big, const GroupPair& small);

struct GateEntry {
  GroupPair group;
  std::vector<std::uint64_t> only_p;  // empty = every prime passing the gate
  bool no_known_example = false;
};

// One classification statement: when p - 1 is divisible by none of
// forbidden_divisors, the torsion of a rational curve over Q(zeta_p) lies in
// rational-list + extra (subject to each entry's only_p restriction).
struct ClassificationGate {
  std::string name;
  std::vector<int> forbidden_divisors;
  std::vector<GateEntry> extra;
  bool applies(std::uint64_t p) const;
};

class GateTable {
 public:
  static GateTable load(const std::string& path);
  static GateTable load_default();  // gates.json in the data directory

  const std::vector<GroupPair>& rational_list() const { return rational_; }
  const std::vector<GroupPair>& master_list() const { return master_; }
  const std::vector<ClassificationGate>& gates() const { return gates_; }

  // sharpest applicable gate; p must be a prime > 3
  const ClassificationGate& gate_for(std::uint64_t p) const;

  // sorted full allowed list at p (rational list plus applicable extras)
  std::vector<GroupPair> allowed_groups(std::uint64_t p) const;
  bool allows(std::uint64_t p, long m, long n) const;
  bool in_rational_list(long m, long n) const;
  bool in_master_list(long m, long n) const;

 private:
  void validate() const;
  std::vector<GroupPair> rational_, master_;
  std::vector<ClassificationGate> gates_;
};

}  // namespace cyctor
