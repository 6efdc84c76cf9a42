#include "cyctor/dataset.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>

#include <json.hpp>

#include "cyctor/errors.hpp"

#ifndef CYCTOR_SOURCE_DATA_DIR
#define CYCTOR_SOURCE_DATA_DIR "."
#endif

namespace cyctor {

namespace {

using nlohmann::json;

json load_json(const std::string& path, const char* who) {
  std::ifstream in(path);
  if (!in) throw domain_error(std::string(who) + ": cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw domain_error(std::string(who) + ": " + path + ": " + e.what());
  }
  return j;
}

const std::set<std::string> kKinds = {"torsion-group", "n-torsion-order",
                                      "kernel-root", "kernel-no-root"};
const std::set<std::string> kProvenances = {"family-search",
                                            "reconstructed-from-j",
                                            "unresolved"};

}  // namespace

std::string data_directory() {
  if (const char* env = std::getenv("CYCTOR_DATA_DIR"); env && *env)
    return env;
  return CYCTOR_SOURCE_DATA_DIR;
}

Int parse_curve_label(const std::string& label) {
  std::size_t i = 0;
  while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i])))
    ++i;
  if (i == 0 || i + 1 >= label.size() || label[i] != '.')
    throw domain_error("malformed curve label '" + label +
                       "' (expected conductor.classN, e.g. 11.a3)");
  std::size_t j = i + 1;
  while (j < label.size() && std::islower(static_cast<unsigned char>(label[j])))
    ++j;
  if (j == i + 1 || j == label.size())
    throw domain_error("malformed curve label '" + label +
                       "' (expected conductor.classN, e.g. 11.a3)");
  for (std::size_t k = j; k < label.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(label[k])))
      throw domain_error("malformed curve label '" + label +
                         "' (expected conductor.classN, e.g. 11.a3)");
  Int conductor = parse_int(label.substr(0, i));
  if (conductor < 1)
    throw domain_error("malformed curve label '" + label +
                       "' (conductor must be positive)");
  return conductor;
}

Snapshot Snapshot::load(const std::string& path) {
  json j = load_json(path, "snapshot");
  Snapshot s;
  s.path_ = path;
  for (const auto& ej : j.at("entries")) {
    SnapshotEntry e;
    e.label = ej.at("label").get<std::string>();
    parse_curve_label(e.label);
    if (ej.contains("ainvs")) {
      const auto& a = ej.at("ainvs");
      if (!a.is_array() || a.size() != 5)
        throw domain_error("snapshot: entry " + e.label +
                           ": ainvs must be five rationals");
      std::array<Rat, 5> ai;
      for (int k = 0; k < 5; ++k) ai[k] = parse_rat(a[k].get<std::string>());
      e.ainvs = ai;
    }
    if (ej.contains("conductor"))
      e.conductor = parse_int(ej.at("conductor").get<std::string>());
    e.provenance = ej.at("provenance").get<std::string>();
    if (!kProvenances.count(e.provenance))
      throw domain_error("snapshot: entry " + e.label +
                         ": unknown provenance '" + e.provenance + "'");
    if (e.provenance == "unresolved" && e.ainvs)
      throw domain_error("snapshot: entry " + e.label +
                         ": unresolved entries must not carry coefficients");
    if (e.provenance != "unresolved" && !e.ainvs)
      throw domain_error("snapshot: entry " + e.label +
                         ": resolved entries need coefficients");
    e.note = ej.value("note", "");
    if (s.index_.count(e.label))
      throw domain_error("snapshot: duplicate label " + e.label);
    s.index_[e.label] = s.entries_.size();
    s.entries_.push_back(std::move(e));
  }
  return s;
}

Snapshot Snapshot::load_default() {
  return load(data_directory() + "/lmfdb_snapshot.json");
}

const SnapshotEntry* Snapshot::find(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const SnapshotEntry& Snapshot::require(const std::string& label) const {
  const SnapshotEntry* e = find(label);
  if (!e) throw domain_error("snapshot: no entry for label " + label);
  if (!e->has_curve())
    throw domain_error("snapshot: entry " + label +
                       " carries no coefficients (provenance " + e->provenance +
                       ")");
  return *e;
}

CurveModel Snapshot::curve(const std::string& label) const {
  const auto& e = require(label);
  return CurveModel::from_rationals(*e.ainvs);
}

Dataset Dataset::load(const std::string& dataset_path, Snapshot snapshot) {
  json j = load_json(dataset_path, "dataset");
  Dataset d;
  d.snap_ = std::move(snapshot);
  for (const auto& cj : j.at("claims")) {
    DatasetClaim c;
    c.id = cj.at("id").get<std::string>();
    c.label = cj.at("label").get<std::string>();
    c.field = cj.at("field").get<std::string>();
    c.kind = cj.at("kind").get<std::string>();
    if (!kKinds.count(c.kind))
      throw domain_error("dataset: claim " + c.id + ": unknown kind '" +
                         c.kind + "'");
    if (cj.contains("expected")) {
      const auto& g = cj.at("expected");
      c.expected_group = GroupPair{g.at(0).get<long>(), g.at(1).get<long>()};
    }
    c.n = cj.value("n", 0);
    c.expected_count = cj.value("expected_count", 0L);
    c.ell = cj.value("ell", 0);
    c.expected_orbit_degree = cj.value("orbit_degree", 0);
    c.expect_ell_ramified = cj.value("ell_ramified", false);
    c.note = cj.value("note", "");
    c.unverifiable = cj.value("unverifiable", false);
    c.stretch = cj.value("stretch", false);
    if (d.claim_index_.count(c.id))
      throw domain_error("dataset: duplicate claim id " + c.id);
    d.claim_index_[c.id] = d.claims_.size();
    d.claims_.push_back(std::move(c));
  }
  for (const auto& sj : j.at("suites")) {
    DatasetSuite s;
    s.name = sj.at("name").get<std::string>();
    s.description = sj.value("description", "");
    for (const auto& id : sj.at("claims"))
      s.claim_ids.push_back(id.get<std::string>());
    if (d.suite_index_.count(s.name))
      throw domain_error("dataset: duplicate suite " + s.name);
    d.suite_index_[s.name] = d.suites_.size();
    d.suites_.push_back(std::move(s));
  }
  d.validate();
  return d;
}

Dataset Dataset::load_default() {
  return load(data_directory() + "/paper_dataset.json", Snapshot::load_default());
}

void Dataset::validate() const {
  for (const auto& c : claims_) {
    if (!snap_.find(c.label))
      throw domain_error("dataset: claim " + c.id +
                         " references a label missing from the snapshot: " +
                         c.label);
    if (!c.unverifiable) {
      // the field spec must be constructible up front, not at verify time
      NumberField::from_spec(c.field);
      if (c.kind == "torsion-group" &&
          (c.expected_group.m < 1 ||
           c.expected_group.n % c.expected_group.m != 0))
        throw domain_error("dataset: claim " + c.id +
                           ": malformed expected invariant pair");
      if (c.kind == "n-torsion-order" && (c.n < 1 || c.expected_count < 1))
        throw domain_error("dataset: claim " + c.id +
                           ": n-torsion-order needs n and expected_count");
      if ((c.kind == "kernel-root" || c.kind == "kernel-no-root") && c.ell < 3)
        throw domain_error("dataset: claim " + c.id +
                           ": kernel claims need an odd prime ell");
    }
  }
  for (const auto& s : suites_)
    for (const auto& id : s.claim_ids)
      if (!claim_index_.count(id))
        throw domain_error("dataset: suite " + s.name +
                           " references unknown claim " + id);
}

const DatasetClaim& Dataset::claim(const std::string& id) const {
  auto it = claim_index_.find(id);
  if (it == claim_index_.end())
    throw domain_error("dataset: unknown claim id " + id);
  return claims_[it->second];
}

const DatasetSuite& Dataset::suite(const std::string& name) const {
  auto it = suite_index_.find(name);
  if (it == suite_index_.end()) {
    std::string known;
    for (const auto& s : suites_) {
      if (!known.empty()) known += ", ";
      known += s.name;
    }
    throw domain_error("dataset: unknown suite '" + name +
                       "' (available: " + known + ")");
  }
  return suites_[it->second];
}

std::vector<std::string> Dataset::suite_names() const {
  std::vector<std::string> out;
  for (const auto& s : suites_) out.push_back(s.name);
  return out;
}

}  // namespace cyctor
