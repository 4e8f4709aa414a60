#include "vgraph/medial.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "vgraph/error.hpp"

namespace vgraph {

namespace {

int end_sign(const EmbeddedGraph& g, Dart x) { return is_positive(x) ? 1 : g.sign(edge_of(x)); }

// Medial darts around the medial vertex of e: (head side A, tail side A,
// tail side B, head side B). Medial dart 2k leaves the vertex of
// corner_first(k); 2k+1 leaves the vertex of corner_second(k).
std::array<Dart, 4> medial_rotation(const EmbeddedGraph& g, int e) {
  const Dart out = positive_dart(e);
  const Dart in = negative_dart(e);
  const int t = g.tail(out);
  const int h = g.tail(in);
  const Dart u_north = 2 * g.corner_id(t, g.slot(out));
  const Dart u_south = 2 * g.corner_id(t, g.slot(out) - 1) + 1;
  const Dart head_a = 2 * g.corner_id(h, g.slot(in));
  const Dart head_b = 2 * g.corner_id(h, g.slot(in) - 1) + 1;
  if (g.sign(e) > 0) return {head_b, u_north, u_south, head_a};
  return {head_a, u_north, u_south, head_b};
}

}  // namespace

int medial_sign(const EmbeddedGraph& g, int corner) {
  return end_sign(g, g.corner_first(corner)) * end_sign(g, g.corner_second(corner));
}

MedialEmbedding medial(const EmbeddedGraph& g) {
  const int edges = g.edge_count();
  const int corners = g.corner_count();
  std::vector<EdgeEnds> ends(corners);
  std::vector<int> signs(corners);
  for (int k = 0; k < corners; ++k) {
    ends[k] = {edge_of(g.corner_first(k)), edge_of(g.corner_second(k))};
    signs[k] = medial_sign(g, k);
  }
  std::vector<std::vector<Dart>> rotation(edges);
  for (int e = 0; e < edges; ++e) {
    const auto r = medial_rotation(g, e);
    rotation[e].assign(r.begin(), r.end());
  }
  MedialEmbedding m{EmbeddedGraph(edges, std::move(ends), std::move(signs), std::move(rotation)), {}, {}};

  const FaceStructure base_faces = trace_faces(g);
  const FaceStructure faces = trace_faces(m.graph);
  std::set<int> seen_vertices, seen_faces;
  for (const auto& f : faces.faces) {
    int kind = -1, source = -1;
    for (int c : f.corners) {
      const int e = m.graph.corner_vertex(c);
      const int slot = m.graph.corner_slot(c);
      const Dart out = positive_dart(e);
      const int t = g.tail(out);
      int k, s;
      if (slot == 1) {
        k = 1, s = t;
      } else if (slot == 3) {
        k = 1, s = g.head(out);
      } else if (slot == 0) {
        k = 0, s = base_faces.corner_face[g.corner_id(t, g.slot(out))];
      } else {
        k = 0, s = base_faces.corner_face[g.corner_id(t, g.slot(out) - 1)];
      }
      if (kind < 0) {
        kind = k;
        source = s;
      } else if (kind != k || source != s) {
        throw TheoremFailure("medial face mixes vertex and face corners");
      }
    }
    if (!(kind ? seen_vertices : seen_faces).insert(source).second)
      throw TheoremFailure("two medial faces come from the same base cell");
    m.vertex_face.push_back(kind == 1);
    m.face_source.push_back(source);
  }
  int nonisolated = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) ++nonisolated;
  if (static_cast<int>(seen_vertices.size()) != nonisolated || static_cast<int>(seen_faces.size()) != base_faces.face_count())
    throw TheoremFailure("medial faces do not match base vertices and faces");
  return m;
}

EmbeddedGraph subdivided_medial(const EmbeddedGraph& g) {
  const int edges = g.edge_count();
  const int corners = g.corner_count();
  std::vector<EdgeEnds> ends(2 * corners);
  std::vector<int> signs(2 * corners);
  std::vector<std::vector<Dart>> rotation(edges + corners);
  for (int k = 0; k < corners; ++k) {
    const Dart a = g.corner_first(k);
    const Dart b = g.corner_second(k);
    ends[2 * k] = {edges + k, edge_of(a)};
    ends[2 * k + 1] = {edges + k, edge_of(b)};
    signs[2 * k] = end_sign(g, a);
    signs[2 * k + 1] = end_sign(g, b);
    rotation[edges + k] = {positive_dart(2 * k), positive_dart(2 * k + 1)};
  }
  for (int e = 0; e < edges; ++e)
    for (Dart d : medial_rotation(g, e)) rotation[e].push_back(2 * d + 1);
  return EmbeddedGraph(edges + corners, std::move(ends), std::move(signs), std::move(rotation));
}

VoltageEmbedding transferred_voltages(const VoltageEmbedding& ve, const std::vector<bool>& prefer_negative) {
  const EmbeddedGraph& g = ve.base();
  const FiniteGroup& grp = ve.group();
  std::vector<Element> alpha(4 * static_cast<size_t>(g.corner_count()));
  for (int k = 0; k < g.corner_count(); ++k) {
    const Dart ends[2] = {g.corner_first(k), g.corner_second(k)};
    for (int i = 0; i < 2; ++i) {
      const int e = edge_of(ends[i]);
      const bool negative = !prefer_negative.empty() && prefer_negative[e];
      const Dart preferred = negative ? negative_dart(e) : positive_dart(e);
      const Element x = ends[i] == preferred ? ve.voltage(preferred) : grp.identity();
      alpha[positive_dart(2 * k + i)] = x;
      alpha[negative_dart(2 * k + i)] = grp.inv(x);
    }
  }
  return VoltageEmbedding(subdivided_medial(g), ve.group_ptr(), std::move(alpha));
}

TotalVoltageGraph total_graph_with_voltages(const VoltageEmbedding& ve) {
  const EmbeddedGraph& g = ve.base();
  const FiniteGroup& grp = ve.group();
  const int nv = g.vertex_count();
  const int ne = g.edge_count();
  VoltageEmbedding med = transferred_voltages(ve);
  const EmbeddedGraph& m = med.base();
  const int medial_edges = m.edge_count();

  std::vector<EdgeEnds> ends;
  std::vector<int> signs;
  std::vector<Element> alpha;
  for (int e = 0; e < ne; ++e) {
    ends.push_back({g.edge(e).tail, nv + e});
    signs.push_back(1);
    alpha.push_back(ve.voltage(positive_dart(e)));
    alpha.push_back(ve.voltage(negative_dart(e)));
  }
  for (int e = 0; e < ne; ++e) {
    ends.push_back({nv + e, g.edge(e).head});
    signs.push_back(g.sign(e));
    alpha.push_back(grp.identity());
    alpha.push_back(grp.identity());
  }
  for (int j = 0; j < medial_edges; ++j) {
    ends.push_back({nv + m.edge(j).tail, nv + m.edge(j).head});
    signs.push_back(m.sign(j));
    alpha.push_back(med.voltage(positive_dart(j)));
    alpha.push_back(med.voltage(negative_dart(j)));
  }
  const Dart medial_offset = 4 * ne;
  std::vector<std::vector<Dart>> rotation(nv + m.vertex_count());
  for (int v = 0; v < nv; ++v)
    for (Dart d : g.rotation(v))
      rotation[v].push_back(is_positive(d) ? positive_dart(edge_of(d)) : negative_dart(ne + edge_of(d)));
  for (int e = 0; e < ne; ++e) {
    const auto& r = m.rotation(e);
    rotation[nv + e] = {positive_dart(ne + e), medial_offset + r[0], medial_offset + r[1],
                        negative_dart(e),      medial_offset + r[2], medial_offset + r[3]};
  }
  for (int x = ne; x < m.vertex_count(); ++x)
    for (Dart d : m.rotation(x)) rotation[nv + x].push_back(medial_offset + d);

  TotalVoltageGraph tvg{
      std::move(med),
      VoltageEmbedding(EmbeddedGraph(nv + ne + g.corner_count(), std::move(ends), std::move(signs), std::move(rotation)),
                       ve.group_ptr(), std::move(alpha)),
      {},
      {},
      nv,
      ne};
  tvg.kinds.assign(nv, TotalVertexKind::base);
  tvg.kinds.resize(nv + ne, TotalVertexKind::edge_midpoint);
  tvg.kinds.resize(nv + ne + g.corner_count(), TotalVertexKind::corner_midpoint);
  for (Dart d = 0; d < medial_offset; ++d) tvg.psi.push_back(d);
  for (int j = 0; j < medial_edges; ++j) {
    const int k = j / 2;
    const Dart x = j % 2 == 0 ? g.corner_first(k) : g.corner_second(k);
    const Dart toward = is_positive(x) ? positive_dart(edge_of(x)) : negative_dart(ne + edge_of(x));
    tvg.psi.push_back(toward);
    tvg.psi.push_back(reverse(toward));
  }
  return tvg;
}

bool psi_preserves_voltages(const TotalVoltageGraph& tvg) {
  for (Dart d = 0; d < tvg.total.base().dart_count(); ++d)
    if (tvg.total.voltage(tvg.psi[d]) != tvg.total.voltage(d)) return false;
  return true;
}

EmbeddingMap derived_medial_map(const VoltageEmbedding& ve) {
  const EmbeddedGraph& g = ve.base();
  const FiniteGroup& grp = ve.group();
  const int n = grp.order();
  const int ne = g.edge_count();
  const DerivedEmbedding derived = derive(ve);
  const int derived_edges = derived.graph().edge_count();
  EmbeddingMap map;
  for (int e = 0; e < ne; ++e)
    for (Element b = 0; b < n; ++b)
      map.vertices.push_back(e * n + grp.mul(b, grp.inv(ve.voltage(positive_dart(e)))));
  for (int k = 0; k < g.corner_count(); ++k)
    for (Element b = 0; b < n; ++b) map.vertices.push_back(derived_edges + derived.corner(k, b));
  for (int j = 0; j < 2 * g.corner_count(); ++j)
    for (Element b = 0; b < n; ++b) {
      const int target = 2 * derived.corner(j / 2, b) + j % 2;
      map.darts.push_back(positive_dart(target));
      map.darts.push_back(negative_dart(target));
    }
  return map;
}

void verify_derived_medial(const VoltageEmbedding& ve) {
  const DerivedEmbedding left = derive(transferred_voltages(ve));
  const EmbeddedGraph right = subdivided_medial(derive(ve).graph());
  std::string why;
  if (!is_embedding_isomorphism(left.graph(), right, derived_medial_map(ve), &why))
    throw TheoremFailure("derived medial differs from medial of derived: " + why);
}

SpecialClaw special_claw(const TotalVoltageGraph& tvg, const EmbeddedGraph& base, Dart d) {
  if (d < 0 || d >= base.dart_count()) throw ValidationError("dart out of range");
  const int ne = base.edge_count();
  SpecialClaw c;
  c.dart = d;
  c.base_vertex = base.tail(d);
  c.edge = edge_of(d);
  c.w_corner = base.corner_id(c.base_vertex, base.slot(d));
  c.y_corner = base.corner_id(c.base_vertex, base.slot(d) - 1);
  c.w_tip = ne + c.w_corner;
  c.y_tip = ne + c.y_corner;
  c.medial_vertex = c.edge;
  c.total_darts = {is_positive(d) ? positive_dart(c.edge) : negative_dart(ne + c.edge),
                   tvg.total_dart_of_medial(positive_dart(2 * c.w_corner)),
                   tvg.total_dart_of_medial(positive_dart(2 * c.y_corner + 1))};
  return c;
}

SpecialClaw special_claw(const TotalVoltageGraph& tvg, const EmbeddedGraph& base, int edge, bool at_tail) {
  if (edge < 0 || edge >= base.edge_count()) throw ValidationError("edge out of range");
  return special_claw(tvg, base, at_tail ? positive_dart(edge) : negative_dart(edge));
}

bool claw_is_trivial(const TotalVoltageGraph& tvg, const SpecialClaw& claw) {
  const EmbeddedGraph& t = tvg.total.base();
  const int mid = tvg.base_vertices + claw.medial_vertex;
  for (Dart d : claw.total_darts)
    if (t.head(d) != mid || tvg.total.voltage(d) != tvg.total.voltage(claw.total_darts.front())) return false;
  return true;
}

VoltageEmbedding crossing_free_split(const TotalVoltageGraph& tvg, const Circle& circle) {
  const EmbeddedGraph& m = tvg.medial.base();
  std::vector<EdgeEnds> ends;
  for (int j = 0; j < m.edge_count(); ++j) ends.push_back(m.edge(j));
  std::vector<std::vector<Dart>> rotation;
  for (int x = 0; x < m.vertex_count(); ++x) rotation.push_back(m.rotation(x));
  for (int e : circle.edges) {
    if (e < 0 || e >= tvg.base_edges) throw ValidationError("circle edge out of range");
    const int side = static_cast<int>(rotation.size());
    const auto r = m.rotation(e);
    rotation[e] = {r[0], r[1]};
    rotation.push_back({r[2], r[3]});
    for (Dart d : {r[2], r[3]}) ends[edge_of(d)].head = side;
  }
  const int count = static_cast<int>(rotation.size());
  return VoltageEmbedding(EmbeddedGraph(count, std::move(ends), m.signs(), std::move(rotation)),
                          tvg.medial.group_ptr(), tvg.medial.voltages());
}

namespace {

void require_tip(const TotalVoltageGraph& tvg, int tip) {
  if (tip < tvg.base_edges || tip >= tvg.medial.base().vertex_count())
    throw ValidationError("vertex " + std::to_string(tip) + " is not a corner vertex of the subdivided medial graph");
}

}  // namespace

Subgroup crossing_free_group(const TotalVoltageGraph& tvg, const Circle& circle, int tip) {
  require_tip(tvg, tip);
  return local_voltage_group(crossing_free_split(tvg, circle), tip);
}

std::vector<Element> crossing_free_tip_set(const TotalVoltageGraph& tvg, const Circle& circle, const SpecialClaw& claw) {
  const int w_tip = claw.w_tip, y_tip = claw.y_tip;
  require_tip(tvg, w_tip);
  require_tip(tvg, y_tip);
  const VoltageEmbedding split = crossing_free_split(tvg, circle);
  const Subgroup h = local_voltage_group(split, w_tip);
  std::vector<int> all(split.base().edge_count());
  for (int j = 0; j < split.base().edge_count(); ++j) all[j] = j;
  const auto pot = tree_potentials(split, all, w_tip);
  std::vector<Element> out = h.elements();
  if (pot[y_tip] >= 0)
    for (Element x : h.elements()) out.push_back(split.group().mul(x, pot[y_tip]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace vgraph
