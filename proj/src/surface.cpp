#include "vgraph/surface.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "union_find.hpp"
#include "vgraph/error.hpp"

namespace vgraph {

EmbeddedGraph::EmbeddedGraph(int vertex_count, std::vector<EdgeEnds> edges, std::vector<int> signs,
                             std::vector<std::vector<Dart>> rotation)
    : vertex_count_(vertex_count), edges_(std::move(edges)), signs_(std::move(signs)), rotation_(std::move(rotation)) {
  if (vertex_count_ < 0) throw ValidationError("negative vertex count");
  if (signs_.size() != edges_.size()) throw ValidationError("one sign per edge is required");
  if (static_cast<int>(rotation_.size()) != vertex_count_)
    throw ValidationError("one rotation per vertex is required");
  for (int e = 0; e < edge_count(); ++e) {
    const auto& [t, h] = edges_[e];
    if (t < 0 || t >= vertex_count_ || h < 0 || h >= vertex_count_)
      throw ValidationError("edge " + std::to_string(e) + " has an endpoint out of range");
    if (signs_[e] != 1 && signs_[e] != -1)
      throw ValidationError("edge " + std::to_string(e) + " has a sign other than +1/-1");
  }
  slot_.assign(dart_count(), -1);
  corner_offset_.resize(vertex_count_ + 1, 0);
  for (int v = 0; v < vertex_count_; ++v) {
    corner_offset_[v + 1] = corner_offset_[v] + static_cast<int>(rotation_[v].size());
    for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) {
      const Dart d = rotation_[v][i];
      if (d < 0 || d >= dart_count())
        throw ValidationError("rotation at vertex " + std::to_string(v) + " names an unknown dart");
      if (slot_[d] >= 0)
        throw ValidationError("dart " + std::to_string(d) + " appears twice in the rotation system");
      if (tail(d) != v)
        throw ValidationError("dart " + std::to_string(d) + " listed at vertex " + std::to_string(v) +
                              " but its tail is " + std::to_string(tail(d)));
      slot_[d] = i;
    }
  }
  for (Dart d = 0; d < dart_count(); ++d)
    if (slot_[d] < 0) throw ValidationError("dart " + std::to_string(d) + " is missing from the rotation system");
  corner_vertex_.resize(dart_count());
  for (int v = 0; v < vertex_count_; ++v)
    for (int c = corner_offset_[v]; c < corner_offset_[v + 1]; ++c) corner_vertex_[c] = v;
}

Dart EmbeddedGraph::next_in_rotation(Dart d) const {
  const auto& rot = rotation_[tail(d)];
  return rot[(slot_[d] + 1) % rot.size()];
}

Dart EmbeddedGraph::prev_in_rotation(Dart d) const {
  const auto& rot = rotation_[tail(d)];
  return rot[(slot_[d] + rot.size() - 1) % rot.size()];
}

int EmbeddedGraph::corner_id(int v, int slot) const {
  const int deg = degree(v);
  return corner_offset_[v] + ((slot % deg) + deg) % deg;
}

Dart EmbeddedGraph::corner_second(int c) const {
  const auto& rot = rotation_[corner_vertex(c)];
  return rot[(corner_slot(c) + 1) % rot.size()];
}

std::vector<int> EmbeddedGraph::vertex_components() const {
  detail::UnionFind uf(vertex_count_);
  for (const auto& [t, h] : edges_) uf.unite(t, h);
  return uf.labels();
}

int EmbeddedGraph::component_count() const {
  detail::UnionFind uf(vertex_count_);
  for (const auto& [t, h] : edges_) uf.unite(t, h);
  int count = 0;
  uf.labels(&count);
  return count;
}

// Face tracing on dart-side states (d, s): with s' = s * sign(d), the walk
// continues at head(d) with the rotation successor of reverse(d) when s' = +1
// and with its predecessor otherwise. The reversal (d, s) -> (reverse(d),
// -s * sign(d)) pairs the two directed orbits of each face.
FaceStructure trace_faces(const EmbeddedGraph& g) {
  const int darts = g.dart_count();
  auto state = [](Dart d, int s) { return 2 * d + (s > 0 ? 0 : 1); };
  std::vector<bool> seen(2 * static_cast<size_t>(darts), false);
  FaceStructure out;
  out.corner_face.assign(g.corner_count(), -1);
  for (Dart d0 = 0; d0 < darts; ++d0) {
    for (int s0 : {1, -1}) {
      if (seen[state(d0, s0)]) continue;
      FaceWalk walk;
      Dart d = d0;
      int s = s0;
      const int face = out.face_count();
      do {
        seen[state(d, s)] = true;
        const Dart back = reverse(d);
        seen[state(back, -s * g.sign(edge_of(d)))] = true;
        const int s_next = s * g.sign(edge_of(d));
        Dart next;
        int corner;
        if (s_next > 0) {
          next = g.next_in_rotation(back);
          corner = g.corner_id(g.tail(back), g.slot(back));
        } else {
          next = g.prev_in_rotation(back);
          corner = g.corner_id(g.tail(back), g.slot(next));
        }
        walk.darts.push_back(d);
        walk.sides.push_back(s);
        walk.corners.push_back(corner);
        if (out.corner_face[corner] >= 0)
          throw ValidationError("malformed rotation system: corner visited by two faces");
        out.corner_face[corner] = face;
        d = next;
        s = s_next;
      } while (d != d0 || s != s0);
      out.faces.push_back(std::move(walk));
    }
  }
  int total = 0;
  for (const auto& f : out.faces) total += f.length();
  if (total != darts) throw ValidationError("malformed rotation system: face lengths do not sum to 2E");
  return out;
}

int euler_characteristic(const EmbeddedGraph& g, const FaceStructure& faces) {
  return g.vertex_count() - g.edge_count() + faces.face_count();
}

int euler_characteristic(const EmbeddedGraph& g) { return euler_characteristic(g, trace_faces(g)); }

namespace {

// Vertex signs from a BFS forest; an edge is consistent when its signature
// equals the product of its endpoint signs.
std::vector<int> propagate_vertex_signs(const EmbeddedGraph& g) {
  std::vector<int> vsign(g.vertex_count(), 0);
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (vsign[root] != 0) continue;
    vsign[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (Dart d : g.rotation(v)) {
        const int u = g.head(d);
        if (vsign[u] == 0) {
          vsign[u] = vsign[v] * g.sign(edge_of(d));
          q.push(u);
        }
      }
    }
  }
  return vsign;
}

SurfaceType classify(int euler, bool orientable) {
  SurfaceType t;
  t.euler = euler;
  t.orientable = orientable;
  t.genus = orientable ? (2 - euler) / 2 : 2 - euler;
  return t;
}

}  // namespace

bool is_orientable(const EmbeddedGraph& g) {
  const auto vsign = propagate_vertex_signs(g);
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.sign(e) != vsign[g.edge(e).tail] * vsign[g.edge(e).head]) return false;
  return true;
}

std::vector<int> face_components(const EmbeddedGraph& g, const FaceStructure& faces) {
  const auto comp = g.vertex_components();
  std::vector<int> out;
  out.reserve(faces.faces.size());
  for (const auto& f : faces.faces) out.push_back(comp[g.tail(f.darts.front())]);
  return out;
}

std::vector<SurfaceType> component_surfaces(const EmbeddedGraph& g, const FaceStructure& faces) {
  const auto comp = g.vertex_components();
  const int n = g.vertex_count() == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> euler(n, 0);
  std::vector<bool> orientable(n, true);
  for (int v = 0; v < g.vertex_count(); ++v) ++euler[comp[v]];
  for (int e = 0; e < g.edge_count(); ++e) --euler[comp[g.edge(e).tail]];
  for (int c : face_components(g, faces)) ++euler[c];
  const auto vsign = propagate_vertex_signs(g);
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.sign(e) != vsign[g.edge(e).tail] * vsign[g.edge(e).head]) orientable[comp[g.edge(e).tail]] = false;
  std::vector<SurfaceType> out;
  for (int c = 0; c < n; ++c) out.push_back(classify(euler[c], orientable[c]));
  return out;
}

SurfaceType genus_report(const EmbeddedGraph& g) {
  if (!g.is_connected()) throw ValidationError("genus_report requires a connected graph");
  return classify(euler_characteristic(g), is_orientable(g));
}

EmbeddedGraph local_sign_switch(const EmbeddedGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw ValidationError("vertex out of range");
  std::vector<EdgeEnds> edges;
  std::vector<int> signs = g.signs();
  std::vector<std::vector<Dart>> rotation;
  for (int e = 0; e < g.edge_count(); ++e) {
    edges.push_back(g.edge(e));
    if (!g.is_loop(e) && (g.edge(e).tail == v || g.edge(e).head == v)) signs[e] = -signs[e];
  }
  for (int u = 0; u < g.vertex_count(); ++u) {
    rotation.push_back(g.rotation(u));
    if (u == v) std::reverse(rotation.back().begin(), rotation.back().end());
  }
  return EmbeddedGraph(g.vertex_count(), std::move(edges), std::move(signs), std::move(rotation));
}

EmbeddedGraph subdivide_edge(const EmbeddedGraph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw ValidationError("edge out of range");
  const int mid = g.vertex_count();
  const int added = g.edge_count();
  std::vector<EdgeEnds> edges;
  for (int i = 0; i < g.edge_count(); ++i) edges.push_back(g.edge(i));
  edges[e].head = mid;
  edges.push_back({mid, g.edge(e).head});
  std::vector<int> signs = g.signs();
  signs.push_back(1);
  std::vector<std::vector<Dart>> rotation;
  for (int v = 0; v < g.vertex_count(); ++v) {
    rotation.push_back(g.rotation(v));
    for (Dart& d : rotation.back())
      if (d == negative_dart(e)) d = negative_dart(added);
  }
  rotation.push_back({negative_dart(e), positive_dart(added)});
  return EmbeddedGraph(mid + 1, std::move(edges), std::move(signs), std::move(rotation));
}

EdgeChain boundary(const EmbeddedGraph& g, const FaceStructure& faces, std::span<const int> face_chain) {
  std::vector<int> parity(g.edge_count(), 0);
  for (int f : face_chain) {
    if (f < 0 || f >= faces.face_count()) throw ValidationError("face index out of range");
    for (Dart d : faces.faces[f].darts) parity[edge_of(d)] ^= 1;
  }
  EdgeChain out;
  for (int e = 0; e < g.edge_count(); ++e)
    if (parity[e]) out.push_back(e);
  return out;
}

FaceChain complement(const FaceStructure& faces, std::span<const int> face_chain) {
  std::vector<bool> in(faces.face_count(), false);
  for (int f : face_chain) in[f] = true;
  FaceChain out;
  for (int f = 0; f < faces.face_count(); ++f)
    if (!in[f]) out.push_back(f);
  return out;
}

namespace {

Skeleton skeleton_from_edges(const EmbeddedGraph& g, std::vector<bool> edge_in) {
  Skeleton s;
  std::vector<bool> vin(g.vertex_count(), false);
  detail::UnionFind uf(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!edge_in[e]) continue;
    s.edges.push_back(e);
    vin[g.edge(e).tail] = vin[g.edge(e).head] = true;
    uf.unite(g.edge(e).tail, g.edge(e).head);
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (vin[v]) s.vertices.push_back(v);
  s.connected = true;
  for (int v : s.vertices)
    if (!uf.same(v, s.vertices.front())) s.connected = false;
  if (s.vertices.empty()) s.connected = false;
  return s;
}

}  // namespace

Skeleton subcomplex_skeleton(const EmbeddedGraph& g, const FaceStructure& faces, std::span<const int> face_chain) {
  std::vector<bool> edge_in(g.edge_count(), false);
  for (int f : face_chain) {
    if (f < 0 || f >= faces.face_count()) throw ValidationError("face index out of range");
    for (Dart d : faces.faces[f].darts) edge_in[edge_of(d)] = true;
  }
  return skeleton_from_edges(g, std::move(edge_in));
}

Skeleton edge_skeleton(const EmbeddedGraph& g, std::span<const int> edges) {
  std::vector<bool> edge_in(g.edge_count(), false);
  for (int e : edges) {
    if (e < 0 || e >= g.edge_count()) throw ValidationError("edge index out of range");
    edge_in[e] = true;
  }
  return skeleton_from_edges(g, std::move(edge_in));
}

Circle circle_from_edges(const EmbeddedGraph& g, std::span<const int> edges, int base_vertex) {
  if (edges.empty()) throw ValidationError("a circle needs at least one edge");
  std::vector<int> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("circle lists an edge twice");
  std::vector<bool> in(g.edge_count(), false);
  std::vector<int> ends(g.vertex_count(), 0);
  for (int e : sorted) {
    if (e < 0 || e >= g.edge_count()) throw ValidationError("circle edge out of range");
    in[e] = true;
    ++ends[g.edge(e).tail];
    ++ends[g.edge(e).head];
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (ends[v] != 0 && ends[v] != 2)
      throw ValidationError("edge set is not 2-regular at vertex " + std::to_string(v));
  if (base_vertex < 0 || base_vertex >= g.vertex_count() || ends[base_vertex] == 0)
    throw ValidationError("base vertex is not on the circle");

  Circle c;
  c.edges = sorted;
  c.base_vertex = base_vertex;
  Dart first = -1;
  for (Dart d : g.rotation(base_vertex))
    if (in[edge_of(d)] && (first < 0 || d < first)) first = d;
  Dart d = first;
  std::vector<bool> used(g.edge_count(), false);
  for (size_t step = 0; step < sorted.size(); ++step) {
    if (used[edge_of(d)]) throw ValidationError("edge set is not a connected circle");
    used[edge_of(d)] = true;
    c.traversal.push_back(d);
    if (step + 1 == sorted.size()) break;
    Dart next = -1;
    for (Dart x : g.rotation(g.head(d)))
      if (in[edge_of(x)] && edge_of(x) != edge_of(d)) {
        next = x;
        break;
      }
    if (next < 0) throw ValidationError("edge set is not a connected circle");
    d = next;
  }
  if (g.head(c.traversal.back()) != base_vertex) throw ValidationError("edge set is not a connected circle");
  return c;
}

OrientationType circle_orientation_type(const EmbeddedGraph& g, const Circle& c) {
  int product = 1;
  for (int e : c.edges) product *= g.sign(e);
  return product > 0 ? OrientationType::preserving : OrientationType::reversing;
}

std::vector<Circle> enumerate_circles(const EmbeddedGraph& g, int max_edges) {
  std::set<std::vector<int>> found;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) found.insert({e});
  // Simple cycles through their smallest vertex s; other vertices exceed s.
  std::vector<int> path_edges;
  std::vector<bool> on_path(g.vertex_count(), false);
  auto dfs = [&](auto&& self, int s, int v) -> void {
    if (static_cast<int>(path_edges.size()) >= max_edges) return;
    for (Dart d : g.rotation(v)) {
      const int e = edge_of(d);
      if (g.is_loop(e)) continue;
      if (!path_edges.empty() && e == path_edges.back()) continue;
      const int u = g.head(d);
      if (u == s && !path_edges.empty()) {
        std::vector<int> cyc = path_edges;
        cyc.push_back(e);
        std::sort(cyc.begin(), cyc.end());
        if (std::adjacent_find(cyc.begin(), cyc.end()) == cyc.end()) found.insert(cyc);
        continue;
      }
      if (u <= s || on_path[u]) continue;
      on_path[u] = true;
      path_edges.push_back(e);
      self(self, s, u);
      path_edges.pop_back();
      on_path[u] = false;
    }
  };
  for (int s = 0; s < g.vertex_count(); ++s) {
    on_path[s] = true;
    dfs(dfs, s, s);
    on_path[s] = false;
  }
  std::vector<Circle> out;
  for (const auto& edges : found) {
    int base = g.vertex_count();
    for (int e : edges) base = std::min({base, g.edge(e).tail, g.edge(e).head});
    out.push_back(circle_from_edges(g, edges, base));
  }
  return out;
}

RegionPartition cut_regions(const EmbeddedGraph& g, const FaceStructure& faces, std::span<const Circle> circles) {
  std::vector<int> on_circle(g.vertex_count(), -1);
  std::vector<bool> cut_edge(g.edge_count(), false);
  for (int i = 0; i < static_cast<int>(circles.size()); ++i) {
    const Circle& c = circles[i];
    if (circle_orientation_type(g, c) == OrientationType::reversing)
      throw ValidationError("cut circle " + std::to_string(i) + " is orientation-reversing (property Delta)");
    for (int e : c.edges) {
      cut_edge[e] = true;
      for (int v : {g.edge(e).tail, g.edge(e).head}) {
        if (on_circle[v] >= 0 && on_circle[v] != i)
          throw ValidationError("cut circles share vertex " + std::to_string(v) + " (property Delta)");
        on_circle[v] = i;
      }
    }
  }
  detail::UnionFind uf(g.corner_count());
  for (const auto& f : faces.faces)
    for (int c : f.corners) uf.unite(c, f.corners.front());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int deg = g.degree(v);
    for (int i = 0; i < deg; ++i) {
      const Dart d = g.rotation(v)[i];
      if (!cut_edge[edge_of(d)]) uf.unite(g.corner_id(v, i - 1), g.corner_id(v, i));
    }
  }
  RegionPartition part;
  part.corner_region = uf.labels(&part.region_count);
  for (const auto& f : faces.faces) part.face_region.push_back(part.corner_region[f.corners.front()]);

  // Banks: walking the traversal while carrying the local orientation, the
  // corner beside the outgoing dart on the positive side is on the left.
  for (const Circle& c : circles) {
    Banks b;
    int s = 1;
    for (int i = 0; i < c.length(); ++i) {
      const Dart out = c.traversal[i];
      const int v = g.tail(out);
      const int forward = g.corner_id(v, g.slot(out));
      const int backward = g.corner_id(v, g.slot(out) - 1);
      const int left = part.corner_region[s > 0 ? forward : backward];
      const int right = part.corner_region[s > 0 ? backward : forward];
      if (i == 0) {
        b.left = left;
        b.right = right;
      } else if (b.left != left || b.right != right) {
        throw ValidationError("inconsistent circle banks; rotation system is malformed");
      }
      s *= g.sign(edge_of(out));
    }
    part.banks.push_back(b);
  }
  return part;
}

RegionPartition cut_regions(const EmbeddedGraph& g, std::span<const Circle> circles) {
  return cut_regions(g, trace_faces(g), circles);
}

bool is_separating(const EmbeddedGraph& g, const FaceStructure& faces, const Circle& c) {
  if (circle_orientation_type(g, c) == OrientationType::reversing) return false;
  const Circle one[] = {c};
  return cut_regions(g, faces, one).region_count > g.component_count();
}

bool is_separating(const EmbeddedGraph& g, const Circle& c) { return is_separating(g, trace_faces(g), c); }

ZGraph zgraph_bruteforce(const EmbeddedGraph& g, const FaceStructure& faces, std::span<const Circle> circles) {
  const RegionPartition part = cut_regions(g, faces, circles);
  ZGraph z;
  for (int r = 0; r < part.region_count; ++r) z.vertices.push_back({"region", {r}});
  for (int i = 0; i < static_cast<int>(circles.size()); ++i)
    z.edges.push_back({part.banks[i].left, part.banks[i].right, {i}});
  return z;
}

}  // namespace vgraph
