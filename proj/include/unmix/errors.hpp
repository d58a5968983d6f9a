#pragma once

#include <stdexcept>
#include <string>

namespace unmix {

/// No generic lifting was found within the retry budget.
struct genericity_error : std::runtime_error {
  explicit genericity_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured combinatorial cap was exceeded (e.g. the face cap).
struct resource_limit_error : std::runtime_error {
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Operation requires a full-dimensional polytope but got a degenerate one.
struct degenerate_error : std::runtime_error {
  explicit degenerate_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace unmix
