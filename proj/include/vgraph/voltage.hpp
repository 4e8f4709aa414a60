#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vgraph/group.hpp"
#include "vgraph/surface.hpp"

namespace vgraph {

inline constexpr long kDefaultLabelCap = 100000;

// An ordinary voltage graph embedding: an embedded base graph with a voltage
// per dart satisfying voltage(reverse(d)) = voltage(d)^-1.
class VoltageEmbedding {
 public:
  // Throws ValidationError naming the first edge whose darts are not inverse.
  VoltageEmbedding(EmbeddedGraph base, GroupPtr group, std::vector<Element> dart_voltages);
  // Voltages given on positive darts only.
  static VoltageEmbedding from_edge_voltages(EmbeddedGraph base, GroupPtr group,
                                             std::span<const Element> edge_voltages);

  const EmbeddedGraph& base() const { return base_; }
  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  Element voltage(Dart d) const { return alpha_[d]; }
  const std::vector<Element>& voltages() const { return alpha_; }

 private:
  EmbeddedGraph base_;
  GroupPtr group_;
  std::vector<Element> alpha_;
};

// Empty when the involution condition holds on every edge.
std::optional<std::string> find_voltage_violation(const EmbeddedGraph& g, const FiniteGroup& group,
                                                  std::span<const Element> dart_voltages);
// Involution condition plus connectivity of the base graph.
void validate(const VoltageEmbedding& ve);

// Ordered product of voltages; throws unless consecutive darts concatenate.
Element net_voltage(const VoltageEmbedding& ve, std::span<const Dart> walk);
bool is_walk(const EmbeddedGraph& g, std::span<const Dart> walk);
bool is_closed_walk(const EmbeddedGraph& g, std::span<const Dart> walk, int base_vertex);

// The derived embedding on V x A. Vertex (v, a) has index v*|A| + a, and the
// derived edge (e, a) has index e*|A| + a with its positive dart running from
// (tail(e), a) to (head(e), a * voltage(e)).
class DerivedEmbedding {
 public:
  DerivedEmbedding(const VoltageEmbedding& ve, EmbeddedGraph graph);

  const EmbeddedGraph& graph() const { return graph_; }
  const EmbeddedGraph& base() const { return base_; }
  const FiniteGroup& group() const { return *group_; }
  int fiber_size() const { return n_; }

  int vertex(int v, Element a) const { return v * n_ + a; }
  std::pair<int, Element> vertex_label(int dv) const { return {dv / n_, dv % n_}; }
  // The lift of base dart d that starts at (tail(d), a).
  Dart lift(Dart d, Element a) const;
  // Inverse of lift: (base dart, fiber element at the tail).
  std::pair<Dart, Element> dart_label(Dart derived) const;
  // The lift of a base corner to the derived vertex (corner_vertex, a).
  int corner(int base_corner, Element a) const;
  std::pair<int, Element> corner_label(int derived_corner) const;

  // Left multiplication by c.
  int act_vertex(Element c, int dv) const;
  Dart act_dart(Element c, Dart derived) const;
  int act_corner(Element c, int derived_corner) const;

 private:
  EmbeddedGraph base_;
  EmbeddedGraph graph_;
  GroupPtr group_;
  std::vector<Element> alpha_;
  int n_ = 1;
};

DerivedEmbedding derive(const VoltageEmbedding& ve, long label_cap = kDefaultLabelCap);

// Each base face whose boundary net voltage has order n_f lifts to |A|/n_f faces.
struct FaceLiftPrediction {
  long faces = 0;
  long euler = 0;
  std::vector<int> face_orders;
};
FaceLiftPrediction face_lift_prediction(const VoltageEmbedding& ve);
FaceLiftPrediction face_lift_prediction(const VoltageEmbedding& ve, const FaceStructure& base_faces);

// Net voltage of the BFS tree path from root to every vertex of the
// subgraph (minimal-dart tie-breaking); -1 where unreachable.
std::vector<Element> tree_potentials(const VoltageEmbedding& ve, std::span<const int> edges, int root);

// A(v): net voltages of closed walks based at v.
Subgroup local_voltage_group(const VoltageEmbedding& ve, int v);
// Net voltages of closed walks at v that stay inside the given connected
// edge set (A(v, S:I) via a face skeleton, A(v, G:y) via an edge chain).
Subgroup restricted_voltage_group(const VoltageEmbedding& ve, std::span<const int> edges, int v);

// v^a and v^b share a component iff a^-1 b lies in A(v).
bool same_component(const VoltageEmbedding& ve, int v, Element a, Element b);

struct CountCheck {
  long predicted = 0;
  long observed = 0;
  bool agrees() const { return predicted == observed; }
};

// Coset counts for nested subcomplexes, each paired with a brute-force count
// on the derived embedding. Any disagreement raises TheoremFailure.
struct CosetCountReport {
  std::vector<Element> local_group;      // A(v)
  std::vector<Element> region_group;     // A(v, S:I)
  std::vector<Element> subgraph_group;   // A(v, G:y)
  Element walk_voltage = 0;              // omega(W)
  CountCheck components;                 // components of S^alpha
  CountCheck region_components;          // of (S:I)^alpha per component of S^alpha
  CountCheck subgraph_components;        // of (G:y)^alpha per component of (S:I)^alpha
  CountCheck lift_sets;                  // consecutive-lift sets per component of (G:y)^alpha
};

CountCheck component_count(const VoltageEmbedding& ve, const DerivedEmbedding& derived);
CosetCountReport fiber_components(const VoltageEmbedding& ve, const DerivedEmbedding& derived, int v,
                                  std::span<const int> face_chain, std::span<const int> edge_chain,
                                  std::span<const Dart> closed_walk);

struct LiftSet {
  std::vector<Element> starts;             // d, d*w, d*w^2, ...
  std::vector<std::vector<Dart>> lifts;    // derived darts of each lift
};

// Partitions `within` (a union of left <omega(W)>-cosets) into sets of
// consecutive lifts of the closed walk W.
std::vector<LiftSet> consecutive_lift_sets(const VoltageEmbedding& ve, const DerivedEmbedding& derived,
                                           std::span<const Dart> closed_walk, std::span<const Element> within);

// Replaces voltage(d) by c*voltage(d) on darts leaving v. Rejects loops at v.
VoltageEmbedding local_voltage_modification(const VoltageEmbedding& ve, int v, Element c);
// Replaces edge e by a path whose first edge keeps voltage(e) and whose
// second edge carries the identity.
VoltageEmbedding subdivide_voltage(const VoltageEmbedding& ve, int e);
// Voltages in A x Z_n given by (voltage, 0).
VoltageEmbedding lift_to_product(const VoltageEmbedding& ve, int n);

// Vertex and dart correspondences between two embedded graphs.
struct EmbeddingMap {
  std::vector<int> vertices;
  std::vector<Dart> darts;
};

// True when the maps are bijections preserving incidence, dart reversal,
// rotations (cyclically) and signatures. `why` receives the first failure.
bool is_embedding_isomorphism(const EmbeddedGraph& from, const EmbeddedGraph& to, const EmbeddingMap& map,
                              std::string* why = nullptr);

// (u, a) -> (u, a) for u != v and (v, a) -> (v, a c^-1), from derive(ve) to
// derive(local_voltage_modification(ve, v, c)).
EmbeddingMap local_modification_witness(const VoltageEmbedding& ve, int v, Element c);

// The derived embedding with every lift of edge e subdivided (lifts in
// fiber order), as produced by subdivide_edge.
EmbeddedGraph subdivide_lifts(const DerivedEmbedding& derived, int e);
// From subdivide_lifts(derive(ve), e) to derive(subdivide_voltage(ve, e)).
EmbeddingMap subdivision_witness(const VoltageEmbedding& ve, int e);

}  // namespace vgraph
