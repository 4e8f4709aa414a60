#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vgraph/medial.hpp"
#include "vgraph/surface.hpp"
#include "vgraph/voltage.hpp"
#include "vgraph/zgraph.hpp"

namespace vgraph {

// A lift of a base circle together with the left <omega>-coset of fiber
// elements c for which the lift passes through (v, c).
struct LiftedCircle {
  Circle circle;
  std::vector<Element> coset;
  bool preserving = true;
};

// Lifts of a base circle inside the component of S^alpha containing (v, a),
// where v is the circle's base vertex. Built from consecutive lifts of the
// circle's traversal.
struct FiberCircleSet {
  Element omega = 0;
  std::vector<Element> component;  // a * A(v)
  std::vector<LiftedCircle> circles;
};

FiberCircleSet fiber_circles(const VoltageEmbedding& ve, const DerivedEmbedding& derived, const Circle& circle,
                             Element a);

// For an orientation-reversing base circle: true iff |omega(W)| is even.
bool lifts_orientation_preserving(const VoltageEmbedding& ve, const Circle& circle);

// Regions of the derived surface cut along the lifts of a base circle that
// lie in the component of (v, a). Lifted circles are found directly in the
// derived graph and labeled by the fibers over v they pass through.
struct ZRegionAnalysis {
  Element omega = 0;
  std::vector<Element> component;
  std::vector<LiftedCircle> circles;
  RegionPartition partition;   // of the whole derived embedding
  std::vector<int> regions;    // region ids inside the component, sorted
  int w_corner = -1;           // base corners flanking the traversal's first dart
  int y_corner = -1;
};

ZRegionAnalysis zregions(const VoltageEmbedding& ve, const DerivedEmbedding& derived, const Circle& circle, Element a);
int region_count(const ZRegionAnalysis& z);

// |A(v)| / |crossing-free group at the w tip|.
int predict_zregion_count(const VoltageEmbedding& ve, const TotalVoltageGraph& tvg, const Circle& circle);

// z-graph from the derived embedding. Vertex labels list the fibers c in the
// component whose lifted w corner lies in the region (tag "coset").
ZGraph zgraph_brute_tips(const ZRegionAnalysis& z, const DerivedEmbedding& derived);
// Separating case: a region over I is labeled by the fibers of the I-side
// corner it contains (tag "I"), otherwise by the I^c-side corner (tag "I^c").
ZGraph zgraph_brute_sides(const ZRegionAnalysis& z, const DerivedEmbedding& derived, const FaceStructure& base_faces,
                          const std::vector<int>& face_chain);

// The face chain of the region containing the w corner when the circle is
// cut out of the base surface.
std::vector<int> separating_side(const EmbeddedGraph& g, const FaceStructure& faces, const Circle& circle);

// Coset constructions inside the component a * A(v).
ZGraph zgraph_coset_separating(const VoltageEmbedding& ve, const Circle& circle, const std::vector<int>& face_chain,
                               Element a);
ZGraph zgraph_coset_reversing(const VoltageEmbedding& ve, const TotalVoltageGraph& tvg, const Circle& circle,
                              Element a);
ZGraph zgraph_coset_preserving(const VoltageEmbedding& ve, const TotalVoltageGraph& tvg, const Circle& circle,
                               Element a);

// Empty when the graphs agree as labeled multigraphs; otherwise a description
// of the first difference.
std::optional<std::string> compare_zgraphs(const ZGraph& coset, const ZGraph& brute);

enum class CheckStatus { confirmed, vacuous, failed };
const char* status_name(CheckStatus s);

struct TheoremCheck {
  std::string name;
  CheckStatus status = CheckStatus::vacuous;
  std::string detail;
};

struct CircleReport {
  std::string kind;  // "separating", "reversing", "preserving"
  int predicted_regions = -1;
  int observed_regions = -1;
  std::vector<TheoremCheck> checks;
  std::optional<ZGraph> coset;
  std::optional<ZGraph> brute;
};

// Runs every applicable circle check: lift parity, region structure, region
// count, nonseparating lifts and the matching coset z-graph construction.
CircleReport check_circle(const VoltageEmbedding& ve, const DerivedEmbedding& derived, const TotalVoltageGraph& tvg,
                          const Circle& circle, Element a);

}  // namespace vgraph
