#pragma once

#include <span>
#include <vector>

#include "vgraph/zgraph.hpp"

namespace vgraph {

// Edge e owns the positive dart 2e and the negative dart 2e+1.
using Dart = int;

constexpr int edge_of(Dart d) { return d >> 1; }
constexpr Dart reverse(Dart d) { return d ^ 1; }
constexpr bool is_positive(Dart d) { return (d & 1) == 0; }
constexpr Dart positive_dart(int e) { return 2 * e; }
constexpr Dart negative_dart(int e) { return 2 * e + 1; }

struct EdgeEnds {
  int tail = 0;
  int head = 0;
};

// A graph embedded in a closed surface, encoded by a signed rotation system:
// a cyclic order of darts around each vertex plus a +1/-1 signature per edge.
// The graph need not be connected (derived embeddings often are not).
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  // Throws ValidationError on malformed rotations, signs or endpoints.
  EmbeddedGraph(int vertex_count, std::vector<EdgeEnds> edges, std::vector<int> signs,
                std::vector<std::vector<Dart>> rotation);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 2 * edge_count(); }

  int tail(Dart d) const { return is_positive(d) ? edges_[edge_of(d)].tail : edges_[edge_of(d)].head; }
  int head(Dart d) const { return tail(reverse(d)); }
  const EdgeEnds& edge(int e) const { return edges_[e]; }
  bool is_loop(int e) const { return edges_[e].tail == edges_[e].head; }
  int sign(int e) const { return signs_[e]; }
  const std::vector<int>& signs() const { return signs_; }

  const std::vector<Dart>& rotation(int v) const { return rotation_[v]; }
  int degree(int v) const { return static_cast<int>(rotation_[v].size()); }
  int slot(Dart d) const { return slot_[d]; }
  Dart next_in_rotation(Dart d) const;
  Dart prev_in_rotation(Dart d) const;

  // Corner (v, i) lies between rotation(v)[i] and rotation(v)[i+1 mod deg].
  int corner_count() const { return dart_count(); }
  int corner_id(int v, int slot) const;
  int corner_vertex(int c) const { return corner_vertex_[c]; }
  int corner_slot(int c) const { return c - corner_offset_[corner_vertex_[c]]; }
  Dart corner_first(int c) const { return rotation_[corner_vertex(c)][corner_slot(c)]; }
  Dart corner_second(int c) const;

  // Component id per vertex, numbered in order of smallest vertex.
  std::vector<int> vertex_components() const;
  int component_count() const;
  bool is_connected() const { return component_count() <= 1; }

 private:
  int vertex_count_ = 0;
  std::vector<EdgeEnds> edges_;
  std::vector<int> signs_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<int> slot_;
  std::vector<int> corner_offset_;
  std::vector<int> corner_vertex_;
};

// One face boundary walk. corners[i] is the corner at head(darts[i]) that the
// walk passes through before darts[i+1]; sides[i] is the local orientation
// carried while traversing darts[i].
struct FaceWalk {
  std::vector<Dart> darts;
  std::vector<int> corners;
  std::vector<int> sides;
  int length() const { return static_cast<int>(darts.size()); }
};

struct FaceStructure {
  std::vector<FaceWalk> faces;
  std::vector<int> corner_face;
  int face_count() const { return static_cast<int>(faces.size()); }
};

FaceStructure trace_faces(const EmbeddedGraph& g);

struct SurfaceType {
  int euler = 0;
  bool orientable = true;
  int genus = 0;  // orientable genus, or crosscap number when nonorientable
};

int euler_characteristic(const EmbeddedGraph& g);
int euler_characteristic(const EmbeddedGraph& g, const FaceStructure& faces);
// Requires a connected graph.
SurfaceType genus_report(const EmbeddedGraph& g);
// One entry per component, in component-id order.
std::vector<SurfaceType> component_surfaces(const EmbeddedGraph& g, const FaceStructure& faces);
std::vector<int> face_components(const EmbeddedGraph& g, const FaceStructure& faces);

bool is_orientable(const EmbeddedGraph& g);
EmbeddedGraph local_sign_switch(const EmbeddedGraph& g, int v);
// Edge e keeps its index and runs tail -> new vertex with sign(e); the new
// edge (index edge_count()) runs new vertex -> head with sign +1.
EmbeddedGraph subdivide_edge(const EmbeddedGraph& g, int e);

// Mod-2 chains are sorted index sets.
using EdgeChain = std::vector<int>;
using FaceChain = std::vector<int>;

EdgeChain boundary(const EmbeddedGraph& g, const FaceStructure& faces, std::span<const int> face_chain);
FaceChain complement(const FaceStructure& faces, std::span<const int> face_chain);

struct Skeleton {
  std::vector<int> vertices;
  std::vector<int> edges;
  bool connected = false;
};

// G:I for a face chain I.
Skeleton subcomplex_skeleton(const EmbeddedGraph& g, const FaceStructure& faces, std::span<const int> face_chain);
// G:X for an edge set X.
Skeleton edge_skeleton(const EmbeddedGraph& g, std::span<const int> edges);

struct Circle {
  std::vector<int> edges;      // sorted
  std::vector<Dart> traversal; // Eulerian walk d1..dk
  int base_vertex = -1;
  int length() const { return static_cast<int>(traversal.size()); }
};

enum class OrientationType { preserving, reversing };

// The traversal starts at base_vertex with the smallest circle dart leaving it.
Circle circle_from_edges(const EmbeddedGraph& g, std::span<const int> edges, int base_vertex);
OrientationType circle_orientation_type(const EmbeddedGraph& g, const Circle& c);
// All circles of g (connected 2-regular edge sets), each based at its
// smallest vertex; intended for desk-scale graphs.
std::vector<Circle> enumerate_circles(const EmbeddedGraph& g, int max_edges = 16);

struct Banks {
  int left = -1;
  int right = -1;
};

struct RegionPartition {
  int region_count = 0;
  std::vector<int> corner_region;
  std::vector<int> face_region;
  std::vector<Banks> banks;  // per cut circle
};

// Regions are the components of the corner graph: corners of one face are
// joined, and rotation-adjacent corners are joined unless the dart between
// them lies on a cut circle. Circles must have property Delta.
RegionPartition cut_regions(const EmbeddedGraph& g, const FaceStructure& faces, std::span<const Circle> circles);
RegionPartition cut_regions(const EmbeddedGraph& g, std::span<const Circle> circles);
bool is_separating(const EmbeddedGraph& g, const FaceStructure& faces, const Circle& c);
bool is_separating(const EmbeddedGraph& g, const Circle& c);
ZGraph zgraph_bruteforce(const EmbeddedGraph& g, const FaceStructure& faces, std::span<const Circle> circles);

}  // namespace vgraph
