#pragma once

#include <string>
#include <vector>

#include "vgraph/surface.hpp"
#include "vgraph/voltage.hpp"

namespace vgraph {

// Medial graph: vertex e sits on base edge e and edge k runs through base
// corner k, from the medial vertex of corner_first(k) to that of
// corner_second(k). The rotation at vertex e lists the four corner edges
// as (head side, tail side, tail side, head side), the first two on one side
// of e and the last two on the other.
struct MedialEmbedding {
  EmbeddedGraph graph;
  std::vector<bool> vertex_face;  // per medial face: true for faces around base vertices
  std::vector<int> face_source;   // base vertex or base face index
};

MedialEmbedding medial(const EmbeddedGraph& g);
// Sign of the medial edge through corner k.
int medial_sign(const EmbeddedGraph& g, int corner);

// The medial graph with every edge subdivided. Vertex e (< E) is the medial
// vertex of base edge e, vertex E + k subdivides the medial edge of corner k.
// Edge 2k runs from E + k to the medial vertex of corner_first(k), edge 2k+1
// to that of corner_second(k).
EmbeddedGraph subdivided_medial(const EmbeddedGraph& g);

// Voltages transferred to the subdivided medial graph: the half-edge from
// corner k toward edge e carries voltage(preferred dart of e) when the corner
// sits at the preferred dart's tail, and the identity otherwise. The
// preferred dart is the positive one unless prefer_negative[e] is set.
VoltageEmbedding transferred_voltages(const VoltageEmbedding& ve, const std::vector<bool>& prefer_negative = {});

enum class TotalVertexKind { base, edge_midpoint, corner_midpoint };

// Total graph: the subdivided base graph together with the subdivided medial
// graph. Vertices: base v (< V), edge midpoints V + e, corner midpoints
// V + E + k. Edges: e = tail half of base edge e, E + e = head half, 2E + j =
// edge j of the subdivided medial graph.
struct TotalVoltageGraph {
  VoltageEmbedding medial;  // subdivided medial graph with transferred voltages
  VoltageEmbedding total;
  std::vector<TotalVertexKind> kinds;
  std::vector<Dart> psi;  // total dart -> dart of the subdivided base graph
  int base_vertices = 0;
  int base_edges = 0;

  int total_vertex_of_medial(int m) const { return base_vertices + m; }
  Dart total_dart_of_medial(Dart d) const { return 4 * base_edges + d; }
};

TotalVoltageGraph total_graph_with_voltages(const VoltageEmbedding& ve);
// voltage(psi(d)) == voltage(d) on every dart of the total graph.
bool psi_preserves_voltages(const TotalVoltageGraph& tvg);

// Checks that the derived graph of the subdivided medial graph equals the
// subdivided medial graph of the derived embedding under the label
// correspondence; throws TheoremFailure otherwise.
void verify_derived_medial(const VoltageEmbedding& ve);
EmbeddingMap derived_medial_map(const VoltageEmbedding& ve);

// The claw at the tail v of base dart d: the half of edge(d) at v plus the
// two medial half-edges from the medial vertex of edge(d) to the corners on
// either side of d at v.
struct SpecialClaw {
  Dart dart = -1;
  int base_vertex = -1;
  int edge = -1;
  int w_corner = -1;  // corner between d and its rotation successor
  int y_corner = -1;  // corner between the predecessor and d
  int w_tip = -1;     // subdivided-medial vertex E + w_corner
  int y_tip = -1;
  int medial_vertex = -1;
  std::vector<Dart> total_darts;  // total-graph darts from v, w_tip, y_tip toward the medial vertex
};

SpecialClaw special_claw(const TotalVoltageGraph& tvg, const EmbeddedGraph& base, Dart d);
SpecialClaw special_claw(const TotalVoltageGraph& tvg, const EmbeddedGraph& base, int edge, bool at_tail);
// Every walk inside the claw between two of its ends has identity voltage.
bool claw_is_trivial(const TotalVoltageGraph& tvg, const SpecialClaw& claw);

// Splits the medial vertex of every circle edge into its two sides. With M
// vertices in the subdivided medial graph, vertex M + i is the second side of
// circle edge i (in circle.edges order).
VoltageEmbedding crossing_free_split(const TotalVoltageGraph& tvg, const Circle& circle);
// Net voltages of closed walks at the tip avoiding transverse crossings.
Subgroup crossing_free_group(const TotalVoltageGraph& tvg, const Circle& circle, int tip);
// Net voltages of crossing-free walks from the claw's w tip to either tip (sorted).
std::vector<Element> crossing_free_tip_set(const TotalVoltageGraph& tvg, const Circle& circle, const SpecialClaw& claw);

}  // namespace vgraph
