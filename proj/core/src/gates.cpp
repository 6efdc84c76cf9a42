#include "cyctor/gates.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <json.hpp>

#include "cyctor/dataset.hpp"
#include "cyctor/errors.hpp"
#include "cyctor/intmath.hpp"

namespace cyctor {

namespace {

using nlohmann::json;

GroupPair parse_pair(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer())
    throw domain_error(std::string("gates: ") + where +
                       ": group must be an [m, n] integer pair");
  GroupPair g{j[0].get<long>(), j[1].get<long>()};
  if (g.m < 1 || g.n < 1 || g.n % g.m != 0)
    throw domain_error(std::string("gates: ") + where +
                       ": invariant pair needs 1 <= m and m | n");
  return g;
}

std::vector<GroupPair> parse_pair_list(const json& j, const char* where) {
  if (!j.is_array())
    throw domain_error(std::string("gates: ") + where + " must be an array");
  std::vector<GroupPair> out;
  for (const auto& e : j) out.push_back(parse_pair(e, where));
  return out;
}

}  // namespace

bool invariant_pair_contains(const GroupPair& big, const GroupPair& small) {
  return big.m % small.m == 0 && big.n % small.n == 0;
}

bool ClassificationGate::applies(std::uint64_t p) const {
  for (int d : forbidden_divisors)
    if ((p - 1) % static_cast<std::uint64_t>(d) == 0) return false;
  return true;
}

GateTable GateTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("gates: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw domain_error("gates: " + path + ": " + e.what());
  }
  GateTable t;
  t.rational_ = parse_pair_list(j.at("rational"), "rational");
  t.master_ = parse_pair_list(j.at("master"), "master");
  for (const auto& gj : j.at("gates")) {
    ClassificationGate g;
    g.name = gj.at("name").get<std::string>();
    for (const auto& d : gj.at("forbidden_divisors"))
      g.forbidden_divisors.push_back(d.get<int>());
    for (const auto& ej : gj.at("extra")) {
      GateEntry e;
      e.group = parse_pair(ej.at("group"), "gate extra");
      if (ej.contains("only_p"))
        for (const auto& p : ej.at("only_p"))
          e.only_p.push_back(p.get<std::uint64_t>());
      e.no_known_example = ej.value("no_known_example", false);
      g.extra.push_back(std::move(e));
    }
    t.gates_.push_back(std::move(g));
  }
  t.validate();
  return t;
}

GateTable GateTable::load_default() {
  return load(data_directory() + "/gates.json");
}

void GateTable::validate() const {
  if (gates_.empty()) throw domain_error("gates: empty gate list");
  std::set<GroupPair> master(master_.begin(), master_.end());
  std::set<GroupPair> rational(rational_.begin(), rational_.end());
  for (const auto& g : rational_)
    if (!master.count(g))
      throw domain_error("gates: rational list leaves the master list");
  std::set<GroupPair> prev;
  const std::vector<int>* prev_div = nullptr;
  for (const auto& gate : gates_) {
    std::set<GroupPair> cur = rational;
    for (const auto& e : gate.extra) {
      if (!master.count(e.group))
        throw domain_error("gates: gate '" + gate.name +
                           "' leaves the master list");
      if (rational.count(e.group))
        throw domain_error("gates: gate '" + gate.name +
                           "' duplicates a rational-list group");
      if (!cur.insert(e.group).second)
        throw domain_error("gates: gate '" + gate.name + "' repeats a group");
    }
    // each gate must extend the previous (sharper) one, and its divisibility
    // condition must be weaker: fewer forbidden divisors
    if (prev_div) {
      for (const auto& g : prev)
        if (!cur.count(g))
          throw domain_error("gates: gate '" + gate.name +
                             "' is not nested above its predecessor");
      for (int d : gate.forbidden_divisors)
        if (std::find(prev_div->begin(), prev_div->end(), d) == prev_div->end())
          throw domain_error("gates: gate '" + gate.name +
                             "' forbids a divisor its predecessor allows");
    }
    prev = std::move(cur);
    prev_div = &gate.forbidden_divisors;
  }
}

const ClassificationGate& GateTable::gate_for(std::uint64_t p) const {
  if (p <= 3 || !is_prime_u64(p))
    throw domain_error(
        "gates: classification covers primes p > 3 only (p = 2, 3 are settled "
        "by the rational and quadratic classifications)");
  for (const auto& g : gates_)
    if (g.applies(p)) return g;
  throw std::logic_error("gates: no gate applies (missing catch-all)");
}

std::vector<GroupPair> GateTable::allowed_groups(std::uint64_t p) const {
  const auto& gate = gate_for(p);
  std::vector<GroupPair> out = rational_;
  for (const auto& e : gate.extra) {
    if (!e.only_p.empty() &&
        std::find(e.only_p.begin(), e.only_p.end(), p) == e.only_p.end())
      continue;
    out.push_back(e.group);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool GateTable::allows(std::uint64_t p, long m, long n) const {
  auto list = allowed_groups(p);
  return std::find(list.begin(), list.end(), GroupPair{m, n}) != list.end();
}

bool GateTable::in_rational_list(long m, long n) const {
  return std::find(rational_.begin(), rational_.end(), GroupPair{m, n}) !=
         rational_.end();
}

bool GateTable::in_master_list(long m, long n) const {
  return std::find(master_.begin(), master_.end(), GroupPair{m, n}) !=
         master_.end();
}

}  // namespace cyctor
