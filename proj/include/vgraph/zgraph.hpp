#pragma once

#include <string>
#include <vector>

#include "vgraph/group.hpp"

namespace vgraph {

// A labeled multigraph whose vertices are z-regions (or the cosets that
// stand for them) and whose edges are lifted circles (or <omega>-cosets).
struct ZVertex {
  std::string tag;             // "region", "coset", "I", "I^c"
  std::vector<Element> label;  // region id or sorted coset elements
};

struct ZEdge {
  int a = -1;
  int b = -1;                  // a == b for a loop
  std::vector<Element> label;  // circle id or sorted coset elements
};

struct ZGraph {
  std::vector<ZVertex> vertices;
  std::vector<ZEdge> edges;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  // Loops count twice.
  std::vector<int> degrees() const;
  int loop_count() const;
  bool is_connected() const;
  bool is_bipartite() const;
};

}  // namespace vgraph
