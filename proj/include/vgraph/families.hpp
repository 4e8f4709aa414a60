#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vgraph/instance.hpp"
#include "vgraph/medial.hpp"
#include "vgraph/voltage.hpp"

namespace vgraph {

// Values a generated example must reproduce; -1 means "not part of this family".
struct FamilyExpectation {
  int components = -1;
  int lifted_circles = -1;                // lifts of z in one component
  int side_components = -1;               // components of (S:I)^alpha per component
  int side_components_c = -1;             // components of (S:I^c)^alpha per component
  int circles_per_side_component = -1;    // lifts of z per component of (S:I)^alpha
  int circles_per_side_component_c = -1;
  int zregions = -1;
  int boundary_circles = -1;              // circles bounding every region, counted per bank
  int zgraph_vertices = -1;
  int zgraph_edges = -1;
  int zgraph_loops = -1;
  int regular_degree = -1;
  int stated_zregions = -1;               // region count stated in the family description, when it disagrees
};

struct ExampleFamily {
  std::string id;  // e.g. "ex44(2,3)"
  Instance instance;  // holds circle "z" and, for ex41, face chain "I"
  FamilyExpectation expected;
};

// One-vertex search: every signed rotation system on one vertex with
// loops_min..loops_max loops where loop 0 is the circle z (its positive dart
// first in the rotation), filtered by surface type, then voltages for the
// other loops drawn from `candidates` (falling back to the whole group).
struct OneVertexSearch {
  GroupPtr group;
  int loops_min = 2;
  int loops_max = 3;
  int euler = 0;
  bool orientable = true;
  int z_sign = 1;
  Element z_voltage = 0;
  std::vector<Element> candidates;
  std::function<bool(const VoltageEmbedding&, const TotalVoltageGraph&, const Circle&)> accept;
};

std::optional<VoltageEmbedding> search_one_vertex(const OneVertexSearch& search);

// Caps: a, b <= 6; n <= 12; k, d <= 4.
ExampleFamily example_separating(int a, int b);      // ex41
ExampleFamily example_projective_two(int n);         // ex42
ExampleFamily example_projective_one(int n);         // ex43
ExampleFamily example_torus_many(int k, int d);      // ex44
ExampleFamily example_torus_bouquet(int n);          // ex45
// Parses "ex41", "ex42", ... with parameters.
ExampleFamily generate_example(const std::string& family, const std::vector<int>& params);

struct FamilyObservation {
  std::string name;
  int expected = 0;
  int observed = 0;
  bool agrees() const { return expected == observed; }
};

struct FamilyResult {
  std::vector<FamilyObservation> observations;
  std::vector<std::string> notes;       // e.g. disagreement between stated and computed counts
  bool zgraphs_equal = false;           // coset construction equals brute force
  std::string zgraph_detail;
  bool ok() const;
};

FamilyResult evaluate_family(const ExampleFamily& ex);

}  // namespace vgraph
