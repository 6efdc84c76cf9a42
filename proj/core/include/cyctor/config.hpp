#pragma once
#include <cstdint>
#include <string>

#include "cyctor/kernel_field.hpp"
#include "cyctor/torsion.hpp"

namespace cyctor {

// Tool-level runtime configuration. Sources, later wins: built-in defaults,
// a JSON config file, CYCTOR_* environment variables, command-line flags.
struct Config {
  std::uint64_t seed = 0;       // root-search seed (derived per subtask)
  int hensel_max_bits = 4096;   // lifting precision cap
  int prime_budget = 5;         // admissible primes entering torsion bounds
  int divpoly_cap = 40;         // largest division-polynomial index built
  int jobs = 1;                 // batch/verify worker count
  bool offline = false;         // never touch the network
  std::string cache_dir;        // empty: XDG cache resolution
  std::string data_dir;         // empty: CYCTOR_DATA_DIR or bundled data

  // JSON object with any of: seed, hensel_max_bits, prime_budget,
  // divpoly_cap, jobs, offline, cache_dir, data_dir. Unknown keys are
  // rejected so typos fail loudly.
  static Config load_file(const std::string& path);

  // CYCTOR_SEED, CYCTOR_HENSEL_MAX_BITS, CYCTOR_PRIME_BUDGET,
  // CYCTOR_DIVPOLY_CAP, CYCTOR_JOBS, CYCTOR_OFFLINE, CYCTOR_CACHE_DIR,
  // CYCTOR_DATA_DIR
  void apply_environment();

  void validate() const;  // domain_error on out-of-range knobs

  TorsionConfig torsion() const;
  KernelFieldConfig kernel() const;

  // cache_dir, else $XDG_CACHE_HOME/cyctor, else $HOME/.cache/cyctor,
  // else .cyctor-cache in the working directory
  std::string resolved_cache_dir() const;
  // data_dir, else the dataset resolution order
  std::string resolved_data_dir() const;
};

}  // namespace cyctor
