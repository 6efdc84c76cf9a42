#include "cyctor/config.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>

#include "cyctor/dataset.hpp"
#include "cyctor/errors.hpp"

namespace cyctor {

namespace {

std::uint64_t parse_u64(const std::string& key, const std::string& s) {
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos, 10);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw domain_error(key + ": expected an unsigned integer, got \"" + s + "\"");
  }
}

int parse_int(const std::string& key, const std::string& s) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos, 10);
    if (pos != s.size()) throw std::invalid_argument(s);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw domain_error(key + ": expected an integer, got \"" + s + "\"");
  }
}

bool parse_bool(const std::string& key, const std::string& s) {
  if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
  if (s == "0" || s == "false" || s == "no" || s == "off") return false;
  throw domain_error(key + ": expected a boolean, got \"" + s + "\"");
}

}  // namespace

Config Config::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("config file not readable: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw domain_error("config file " + path + ": " + e.what());
  }
  if (!j.is_object()) throw domain_error("config file " + path + ": expected a JSON object");

  Config c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const auto& v = it.value();
    try {
      if (key == "seed")
        c.seed = v.get<std::uint64_t>();
      else if (key == "hensel_max_bits")
        c.hensel_max_bits = v.get<int>();
      else if (key == "prime_budget")
        c.prime_budget = v.get<int>();
      else if (key == "divpoly_cap")
        c.divpoly_cap = v.get<int>();
      else if (key == "jobs")
        c.jobs = v.get<int>();
      else if (key == "offline")
        c.offline = v.get<bool>();
      else if (key == "cache_dir")
        c.cache_dir = v.get<std::string>();
      else if (key == "data_dir")
        c.data_dir = v.get<std::string>();
      else
        throw domain_error("config file " + path + ": unknown key \"" + key + "\"");
    } catch (const nlohmann::json::exception& e) {
      throw domain_error("config file " + path + ", key \"" + key + "\": " + e.what());
    }
  }
  c.validate();
  return c;
}

void Config::apply_environment() {
  auto env = [](const char* name) -> const char* { return std::getenv(name); };
  if (const char* s = env("CYCTOR_SEED")) seed = parse_u64("CYCTOR_SEED", s);
  if (const char* s = env("CYCTOR_HENSEL_MAX_BITS"))
    hensel_max_bits = parse_int("CYCTOR_HENSEL_MAX_BITS", s);
  if (const char* s = env("CYCTOR_PRIME_BUDGET"))
    prime_budget = parse_int("CYCTOR_PRIME_BUDGET", s);
  if (const char* s = env("CYCTOR_DIVPOLY_CAP"))
    divpoly_cap = parse_int("CYCTOR_DIVPOLY_CAP", s);
  if (const char* s = env("CYCTOR_JOBS")) jobs = parse_int("CYCTOR_JOBS", s);
  if (const char* s = env("CYCTOR_OFFLINE")) offline = parse_bool("CYCTOR_OFFLINE", s);
  if (const char* s = env("CYCTOR_CACHE_DIR")) cache_dir = s;
  if (const char* s = env("CYCTOR_DATA_DIR")) data_dir = s;
  validate();
}

void Config::validate() const {
  if (hensel_max_bits < 64)
    throw domain_error("hensel_max_bits must be at least 64");
  if (prime_budget < 1) throw domain_error("prime_budget must be positive");
  if (divpoly_cap < 3) throw domain_error("divpoly_cap must be at least 3");
  if (jobs < 1 || jobs > 256) throw domain_error("jobs must be in [1, 256]");
}

TorsionConfig Config::torsion() const {
  TorsionConfig t;
  t.prime_budget = prime_budget;
  t.divpoly_cap = divpoly_cap;
  t.roots.seed = seed;
  t.roots.hensel_max_bits = hensel_max_bits;
  return t;
}

KernelFieldConfig Config::kernel() const {
  KernelFieldConfig k;
  k.divpoly_cap = divpoly_cap;
  k.roots.seed = seed;
  k.roots.hensel_max_bits = hensel_max_bits;
  return k;
}

std::string Config::resolved_cache_dir() const {
  if (!cache_dir.empty()) return cache_dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::string(xdg) + "/cyctor";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::string(home) + "/.cache/cyctor";
  return ".cyctor-cache";
}

std::string Config::resolved_data_dir() const {
  if (!data_dir.empty()) return data_dir;
  return data_directory();
}

}  // namespace cyctor
