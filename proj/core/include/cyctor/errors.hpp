#pragma once
#include <stdexcept>
#include <string>

namespace cyctor {

// Bad mathematical input (singular curve, composite conductor, precondition
// violation). CLI maps this to exit code 3.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A search or lift hit its configured budget (auxiliary prime cap, Hensel
// precision cap, point-counting budget). CLI maps this to exit code 4.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cyctor
