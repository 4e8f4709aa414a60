#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "vgraph/voltage.hpp"
#include "vgraph/zregion.hpp"

namespace vgraph {

struct FuzzCaps {
  int max_vertices = 4;
  int max_edges = 8;
  int max_cyclic = 12;   // Z_n with n <= max_cyclic
  int max_product = 6;   // Z_2 x Z_n with n <= max_product
  int samples = 3;       // (I, y, W) samples per instance
  int max_circles = 64;  // circles checked per instance
};

struct FuzzTally {
  long confirmed = 0;
  long vacuous = 0;
  long failed = 0;
};

struct FuzzInstanceReport {
  int index = 0;
  std::uint64_t seed = 0;
  std::string summary;
  std::vector<TheoremCheck> checks;
  double seconds = 0;
  std::string reproducer;  // instance text, set when a check failed
  bool failed() const;
};

struct FuzzReport {
  std::uint64_t seed = 0;
  int count = 0;
  std::vector<FuzzInstanceReport> instances;
  std::map<std::string, FuzzTally> tallies;
  double seconds = 0;
  bool ok() const;
};

std::uint64_t instance_seed(std::uint64_t seed, int index);
// Connected signed rotation system with random voltages within the caps.
VoltageEmbedding random_embedding(std::mt19937_64& rng, const FuzzCaps& caps);
// Runs every check on one embedding; `rng` drives the sampled choices.
FuzzInstanceReport fuzz_instance(const VoltageEmbedding& ve, std::mt19937_64& rng, const FuzzCaps& caps);
FuzzReport fuzz(std::uint64_t seed, int count, const FuzzCaps& caps = {});

}  // namespace vgraph
