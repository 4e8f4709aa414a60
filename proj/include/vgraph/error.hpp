#pragma once

#include <stdexcept>
#include <string>

namespace vgraph {

// Malformed input: bad rotation, bad voltages, violated preconditions.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A predicted (coset-theoretic) value disagreed with the brute-force value.
class TheoremFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vgraph
