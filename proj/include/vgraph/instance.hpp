#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vgraph/surface.hpp"
#include "vgraph/voltage.hpp"

namespace vgraph {

struct NamedCircle {
  std::string name;
  std::vector<int> edges;  // sorted edge indices
};

struct NamedFaces {
  std::string name;
  std::vector<int> faces;
};

// A voltage embedding plus the edge names and optional named circles and
// face chains from an instance file.
struct Instance {
  VoltageEmbedding embedding;
  std::vector<std::string> edge_names;
  std::vector<NamedCircle> circles;
  std::vector<NamedFaces> face_chains;

  int edge_index(const std::string& name) const;  // -1 when unknown
};

// Edges are named e0, e1, ...
Instance make_instance(VoltageEmbedding ve);

// Line-oriented format:
//   group cyclic <n> | group product <group> <group> | group table <n> + rows
//   vertices <n>
//   edge <name> <tail> <head> sign=<+|-> voltage=<element>
//   rotation <v>: <name>+ <name>- ...
//   circle <name>: <edge names>
//   faces <name>: <face indices>
// '#' starts a comment. Errors are ValidationError with "line N: ...".
Instance parse_instance(std::string_view text);
std::string print_instance(const Instance& inst);

// Circle through the named edges, based at its smallest vertex.
Circle instance_circle(const Instance& inst, const NamedCircle& c);
// Parses a comma- or space-separated list of edge names or indices.
std::vector<int> parse_edge_list(const Instance& inst, std::string_view text);

struct CatalogEntry {
  std::string name;
  std::string text;
};

// Small reference embeddings: sphere theta, projective-plane loop, torus
// bouquet and Klein-bottle bouquet.
const std::vector<CatalogEntry>& builtin_catalog();
Instance catalog_instance(const std::string& name);

}  // namespace vgraph
