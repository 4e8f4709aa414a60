#include "vgraph/voltage.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "union_find.hpp"
#include "vgraph/error.hpp"

namespace vgraph {

namespace {

Dart lift_index(const FiniteGroup& g, std::span<const Element> alpha, int n, Dart d, Element a) {
  const int e = edge_of(d);
  if (is_positive(d)) return positive_dart(e * n + a);
  return negative_dart(e * n + g.mul(a, alpha[d]));
}

std::string edge_name(int e) { return "edge " + std::to_string(e); }

}  // namespace

VoltageEmbedding::VoltageEmbedding(EmbeddedGraph base, GroupPtr group, std::vector<Element> dart_voltages)
    : base_(std::move(base)), group_(std::move(group)), alpha_(std::move(dart_voltages)) {
  if (!group_) throw ValidationError("voltage embedding needs a group");
  if (static_cast<int>(alpha_.size()) != base_.dart_count())
    throw ValidationError("one voltage per dart is required");
  if (auto why = find_voltage_violation(base_, *group_, alpha_)) throw ValidationError(*why);
}

VoltageEmbedding VoltageEmbedding::from_edge_voltages(EmbeddedGraph base, GroupPtr group,
                                                      std::span<const Element> edge_voltages) {
  if (static_cast<int>(edge_voltages.size()) != base.edge_count())
    throw ValidationError("one voltage per edge is required");
  std::vector<Element> alpha(base.dart_count());
  for (int e = 0; e < base.edge_count(); ++e) {
    if (!group->contains(edge_voltages[e])) throw ValidationError(edge_name(e) + " has a voltage outside the group");
    alpha[positive_dart(e)] = edge_voltages[e];
    alpha[negative_dart(e)] = group->inv(edge_voltages[e]);
  }
  return VoltageEmbedding(std::move(base), std::move(group), std::move(alpha));
}

std::optional<std::string> find_voltage_violation(const EmbeddedGraph& g, const FiniteGroup& group,
                                                  std::span<const Element> dart_voltages) {
  if (static_cast<int>(dart_voltages.size()) != g.dart_count()) return "one voltage per dart is required";
  for (int e = 0; e < g.edge_count(); ++e) {
    const Element x = dart_voltages[positive_dart(e)];
    const Element y = dart_voltages[negative_dart(e)];
    if (!group.contains(x) || !group.contains(y)) return edge_name(e) + " has a voltage outside the group";
    if (group.mul(x, y) != group.identity())
      return edge_name(e) + ": voltage of the negative dart (" + group.name(y) +
             ") is not the inverse of the positive dart's (" + group.name(x) + ")";
  }
  return std::nullopt;
}

void validate(const VoltageEmbedding& ve) {
  if (auto why = find_voltage_violation(ve.base(), ve.group(), ve.voltages())) throw ValidationError(*why);
  if (!ve.base().is_connected()) throw ValidationError("base graph is not connected");
}

bool is_walk(const EmbeddedGraph& g, std::span<const Dart> walk) {
  for (size_t i = 0; i < walk.size(); ++i) {
    if (walk[i] < 0 || walk[i] >= g.dart_count()) return false;
    if (i > 0 && g.head(walk[i - 1]) != g.tail(walk[i])) return false;
  }
  return true;
}

bool is_closed_walk(const EmbeddedGraph& g, std::span<const Dart> walk, int base_vertex) {
  if (!is_walk(g, walk)) return false;
  if (walk.empty()) return true;
  return g.tail(walk.front()) == base_vertex && g.head(walk.back()) == base_vertex;
}

Element net_voltage(const VoltageEmbedding& ve, std::span<const Dart> walk) {
  if (!is_walk(ve.base(), walk)) throw ValidationError("darts do not form a walk");
  Element x = ve.group().identity();
  for (Dart d : walk) x = ve.group().mul(x, ve.voltage(d));
  return x;
}

DerivedEmbedding::DerivedEmbedding(const VoltageEmbedding& ve, EmbeddedGraph graph)
    : base_(ve.base()), graph_(std::move(graph)), group_(ve.group_ptr()), alpha_(ve.voltages()),
      n_(ve.group().order()) {}

Dart DerivedEmbedding::lift(Dart d, Element a) const { return lift_index(*group_, alpha_, n_, d, a); }

std::pair<Dart, Element> DerivedEmbedding::dart_label(Dart derived) const {
  const int edge = edge_of(derived);
  const int e = edge / n_;
  const Element a0 = edge % n_;
  if (is_positive(derived)) return {positive_dart(e), a0};
  return {negative_dart(e), group_->mul(a0, alpha_[positive_dart(e)])};
}

int DerivedEmbedding::corner(int base_corner, Element a) const {
  return graph_.corner_id(vertex(base_.corner_vertex(base_corner), a), base_.corner_slot(base_corner));
}

std::pair<int, Element> DerivedEmbedding::corner_label(int derived_corner) const {
  const auto [v, a] = vertex_label(graph_.corner_vertex(derived_corner));
  return {base_.corner_id(v, graph_.corner_slot(derived_corner)), a};
}

int DerivedEmbedding::act_vertex(Element c, int dv) const {
  const auto [v, a] = vertex_label(dv);
  return vertex(v, group_->mul(c, a));
}

Dart DerivedEmbedding::act_dart(Element c, Dart derived) const {
  const auto [d, a] = dart_label(derived);
  return lift(d, group_->mul(c, a));
}

int DerivedEmbedding::act_corner(Element c, int derived_corner) const {
  const auto [k, a] = corner_label(derived_corner);
  return corner(k, group_->mul(c, a));
}

DerivedEmbedding derive(const VoltageEmbedding& ve, long label_cap) {
  const EmbeddedGraph& g = ve.base();
  const FiniteGroup& grp = ve.group();
  const int n = grp.order();
  const long vertices = static_cast<long>(g.vertex_count()) * n;
  const long edges = static_cast<long>(g.edge_count()) * n;
  if (vertices > label_cap || edges > label_cap)
    throw ValidationError("derived embedding would exceed the size cap of " + std::to_string(label_cap));
  std::vector<EdgeEnds> ends(edges);
  std::vector<int> signs(edges);
  for (int e = 0; e < g.edge_count(); ++e)
    for (Element a = 0; a < n; ++a) {
      ends[e * n + a] = {g.edge(e).tail * n + a, g.edge(e).head * n + grp.mul(a, ve.voltage(positive_dart(e)))};
      signs[e * n + a] = g.sign(e);
    }
  std::vector<std::vector<Dart>> rotation(vertices);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (Element a = 0; a < n; ++a)
      for (Dart d : g.rotation(v)) rotation[v * n + a].push_back(lift_index(grp, ve.voltages(), n, d, a));
  return DerivedEmbedding(ve, EmbeddedGraph(static_cast<int>(vertices), std::move(ends), std::move(signs),
                                            std::move(rotation)));
}

FaceLiftPrediction face_lift_prediction(const VoltageEmbedding& ve, const FaceStructure& base_faces) {
  const FiniteGroup& grp = ve.group();
  FaceLiftPrediction out;
  for (const auto& f : base_faces.faces) {
    const int order = element_order(grp, net_voltage(ve, f.darts));
    out.face_orders.push_back(order);
    out.faces += grp.order() / order;
  }
  out.euler = static_cast<long>(grp.order()) * (ve.base().vertex_count() - ve.base().edge_count()) + out.faces;
  return out;
}

FaceLiftPrediction face_lift_prediction(const VoltageEmbedding& ve) {
  return face_lift_prediction(ve, trace_faces(ve.base()));
}

std::vector<Element> tree_potentials(const VoltageEmbedding& ve, std::span<const int> edges, int root) {
  const EmbeddedGraph& g = ve.base();
  const FiniteGroup& grp = ve.group();
  std::vector<bool> in(g.edge_count(), false);
  for (int e : edges) in[e] = true;
  std::vector<Element> pot(g.vertex_count(), -1);
  pot[root] = grp.identity();
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    std::vector<Dart> darts = g.rotation(u);
    std::sort(darts.begin(), darts.end());
    for (Dart d : darts) {
      if (!in[edge_of(d)]) continue;
      const int w = g.head(d);
      if (pot[w] >= 0) continue;
      pot[w] = grp.mul(pot[u], ve.voltage(d));
      q.push(w);
    }
  }
  return pot;
}

Subgroup restricted_voltage_group(const VoltageEmbedding& ve, std::span<const int> edges, int v) {
  const EmbeddedGraph& g = ve.base();
  if (v < 0 || v >= g.vertex_count()) throw ValidationError("vertex out of range");
  if (edges.empty()) return subgroup_generated(ve.group_ptr(), {});
  const Skeleton sk = edge_skeleton(g, edges);
  if (!sk.connected) throw ValidationError("subgraph is not connected");
  if (!std::binary_search(sk.vertices.begin(), sk.vertices.end(), v))
    throw ValidationError("subgraph does not contain vertex " + std::to_string(v));
  const FiniteGroup& grp = ve.group();
  const auto pot = tree_potentials(ve, sk.edges, v);
  std::vector<Element> gens;
  for (int e : sk.edges) {
    const Dart d = positive_dart(e);
    const Element x = grp.mul(grp.mul(pot[g.tail(d)], ve.voltage(d)), grp.inv(pot[g.head(d)]));
    if (x != grp.identity()) gens.push_back(x);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return subgroup_generated(ve.group_ptr(), gens);
}

Subgroup local_voltage_group(const VoltageEmbedding& ve, int v) {
  std::vector<int> all(ve.base().edge_count());
  for (int e = 0; e < ve.base().edge_count(); ++e) all[e] = e;
  if (!ve.base().is_connected()) {
    // Restrict to the component of v.
    const auto comp = ve.base().vertex_components();
    std::erase_if(all, [&](int e) { return comp[ve.base().edge(e).tail] != comp[v]; });
  }
  return restricted_voltage_group(ve, all, v);
}

bool same_component(const VoltageEmbedding& ve, int v, Element a, Element b) {
  const FiniteGroup& grp = ve.group();
  return local_voltage_group(ve, v).contains(grp.mul(grp.inv(a), b));
}

CountCheck component_count(const VoltageEmbedding& ve, const DerivedEmbedding& derived) {
  if (!ve.base().is_connected()) throw ValidationError("base graph is not connected");
  CountCheck c;
  c.predicted = ve.group().order() / local_voltage_group(ve, 0).size();
  c.observed = derived.graph().component_count();
  return c;
}

namespace {

// Counts, for every class of `outer`, the number of distinct `inner` classes
// among the given items; the count must be the same for every outer class.
long uniform_count(std::span<const int> items, std::span<const int> outer, std::span<const int> inner,
                   const std::string& what, long predicted) {
  std::map<int, std::set<int>> per;
  for (int x : items) per[outer[x]].insert(inner[x]);
  long value = -1;
  for (const auto& [o, s] : per) {
    const long count = static_cast<long>(s.size());
    if (value < 0) value = count;
    if (count != value || count != predicted)
      throw TheoremFailure(what + ": predicted " + std::to_string(predicted) + " per component, found " +
                           std::to_string(count));
  }
  return value;
}

std::vector<int> lift_classes(const DerivedEmbedding& derived, std::span<const int> base_edges) {
  const int n = derived.fiber_size();
  detail::UnionFind uf(derived.graph().vertex_count());
  for (int e : base_edges)
    for (Element a = 0; a < n; ++a) {
      const EdgeEnds& ends = derived.graph().edge(e * n + a);
      uf.unite(ends.tail, ends.head);
    }
  return uf.labels();
}

}  // namespace

CosetCountReport fiber_components(const VoltageEmbedding& ve, const DerivedEmbedding& derived, int v,
                                  std::span<const int> face_chain, std::span<const int> edge_chain,
                                  std::span<const Dart> closed_walk) {
  const EmbeddedGraph& g = ve.base();
  const FiniteGroup& grp = ve.group();
  const int n = grp.order();
  if (v < 0 || v >= g.vertex_count()) throw ValidationError("vertex out of range");
  const FaceStructure faces = trace_faces(g);
  const Skeleton sk_i = subcomplex_skeleton(g, faces, face_chain);
  if (!sk_i.connected || !std::binary_search(sk_i.vertices.begin(), sk_i.vertices.end(), v))
    throw ValidationError("S:I must be connected and contain the base vertex");
  const Skeleton sk_y = edge_skeleton(g, edge_chain);
  if (!sk_y.connected || !std::binary_search(sk_y.vertices.begin(), sk_y.vertices.end(), v))
    throw ValidationError("G:y must be connected and contain the base vertex");
  for (int e : sk_y.edges)
    if (!std::binary_search(sk_i.edges.begin(), sk_i.edges.end(), e))
      throw ValidationError("edge " + std::to_string(e) + " of y lies outside S:I");
  if (!is_closed_walk(g, closed_walk, v)) throw ValidationError("W is not a closed walk at the base vertex");
  for (Dart d : closed_walk)
    if (!std::binary_search(sk_y.edges.begin(), sk_y.edges.end(), edge_of(d)))
      throw ValidationError("W leaves G:y");

  const Subgroup av = local_voltage_group(ve, v);
  const Subgroup ai = restricted_voltage_group(ve, sk_i.edges, v);
  const Subgroup ay = restricted_voltage_group(ve, sk_y.edges, v);
  const Element omega = net_voltage(ve, closed_walk);
  const Subgroup aw = cyclic_subgroup(ve.group_ptr(), omega);
  if (!aw.is_subgroup_of(ay) || !ay.is_subgroup_of(ai) || !ai.is_subgroup_of(av))
    throw TheoremFailure("restricted voltage groups are not nested");

  CosetCountReport r;
  r.local_group = av.elements();
  r.region_group = ai.elements();
  r.subgraph_group = ay.elements();
  r.walk_voltage = omega;

  const EmbeddedGraph& dg = derived.graph();
  const auto comp = dg.vertex_components();
  r.components.predicted = n / av.size();
  r.components.observed = dg.component_count();
  if (!r.components.agrees())
    throw TheoremFailure("components of the derived surface: predicted " + std::to_string(r.components.predicted) +
                         ", found " + std::to_string(r.components.observed));

  const auto cls_i = lift_classes(derived, sk_i.edges);
  std::vector<int> over_i;
  for (int u : sk_i.vertices)
    for (Element a = 0; a < n; ++a) over_i.push_back(derived.vertex(u, a));
  r.region_components.predicted = av.size() / ai.size();
  r.region_components.observed =
      uniform_count(over_i, comp, cls_i, "components of (S:I) lifts", r.region_components.predicted);

  const auto cls_y = lift_classes(derived, sk_y.edges);
  std::vector<int> over_y;
  for (int u : sk_y.vertices)
    for (Element a = 0; a < n; ++a) over_y.push_back(derived.vertex(u, a));
  r.subgraph_components.predicted = ai.size() / ay.size();
  r.subgraph_components.observed =
      uniform_count(over_y, cls_i, cls_y, "components of (G:y) lifts", r.subgraph_components.predicted);

  // Walk every lift of W through the derived graph by matching dart labels.
  std::vector<int> step(n);
  for (Element a = 0; a < n; ++a) {
    int x = derived.vertex(v, a);
    for (Dart d : closed_walk) {
      Dart found = -1;
      for (Dart cand : dg.rotation(x))
        if (derived.dart_label(cand).first == d) found = cand;
      if (found < 0) throw TheoremFailure("a lift of W is missing from the derived graph");
      x = dg.head(found);
    }
    step[a] = derived.vertex_label(x).second;
  }
  std::vector<int> orbit(n, -1);
  int orbits = 0;
  for (Element a = 0; a < n; ++a) {
    if (orbit[a] >= 0) continue;
    for (Element b = a; orbit[b] < 0; b = step[b]) orbit[b] = orbits;
    ++orbits;
  }
  std::vector<int> over_v, orbit_of_vertex(dg.vertex_count(), -1);
  for (Element a = 0; a < n; ++a) {
    over_v.push_back(derived.vertex(v, a));
    orbit_of_vertex[derived.vertex(v, a)] = orbit[a];
  }
  r.lift_sets.predicted = ay.size() / aw.size();
  r.lift_sets.observed =
      uniform_count(over_v, cls_y, orbit_of_vertex, "sets of consecutive lifts of W", r.lift_sets.predicted);
  return r;
}

std::vector<LiftSet> consecutive_lift_sets(const VoltageEmbedding& ve, const DerivedEmbedding& derived,
                                           std::span<const Dart> closed_walk, std::span<const Element> within) {
  const EmbeddedGraph& g = ve.base();
  const FiniteGroup& grp = ve.group();
  if (closed_walk.empty()) throw ValidationError("W is empty");
  if (!is_closed_walk(g, closed_walk, g.tail(closed_walk.front()))) throw ValidationError("W is not closed");
  const Element omega = net_voltage(ve, closed_walk);
  const Subgroup aw = cyclic_subgroup(ve.group_ptr(), omega);
  std::vector<Element> sorted(within.begin(), within.end());
  std::sort(sorted.begin(), sorted.end());
  const CosetPartition part = left_cosets(sorted, aw);
  std::vector<LiftSet> out;
  for (Element d : part.representatives) {
    LiftSet s;
    Element start = d;
    for (int k = 0; k < aw.size(); ++k) {
      s.starts.push_back(start);
      std::vector<Dart> lift;
      Element cur = start;
      for (Dart x : closed_walk) {
        lift.push_back(derived.lift(x, cur));
        cur = grp.mul(cur, ve.voltage(x));
      }
      s.lifts.push_back(std::move(lift));
      start = cur;
    }
    out.push_back(std::move(s));
  }
  return out;
}

VoltageEmbedding local_voltage_modification(const VoltageEmbedding& ve, int v, Element c) {
  const EmbeddedGraph& g = ve.base();
  const FiniteGroup& grp = ve.group();
  if (v < 0 || v >= g.vertex_count()) throw ValidationError("vertex out of range");
  if (!grp.contains(c)) throw ValidationError("element outside the group");
  std::vector<Element> alpha = ve.voltages();
  for (Dart d : g.rotation(v)) {
    if (g.is_loop(edge_of(d))) throw ValidationError("local voltage modification needs a vertex without loops");
    alpha[d] = grp.mul(c, ve.voltage(d));
    alpha[reverse(d)] = grp.inv(alpha[d]);
  }
  return VoltageEmbedding(g, ve.group_ptr(), std::move(alpha));
}

VoltageEmbedding subdivide_voltage(const VoltageEmbedding& ve, int e) {
  EmbeddedGraph g = subdivide_edge(ve.base(), e);
  std::vector<Element> alpha = ve.voltages();
  alpha.push_back(ve.group().identity());
  alpha.push_back(ve.group().identity());
  return VoltageEmbedding(std::move(g), ve.group_ptr(), std::move(alpha));
}

VoltageEmbedding lift_to_product(const VoltageEmbedding& ve, int n) {
  GroupPtr big = direct_product(ve.group_ptr(), make_cyclic(n));
  std::vector<Element> alpha;
  for (Element x : ve.voltages()) alpha.push_back(x * n);
  return VoltageEmbedding(ve.base(), std::move(big), std::move(alpha));
}

bool is_embedding_isomorphism(const EmbeddedGraph& from, const EmbeddedGraph& to, const EmbeddingMap& map,
                              std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (from.vertex_count() != to.vertex_count() || from.edge_count() != to.edge_count())
    return fail("vertex or edge counts differ");
  if (static_cast<int>(map.vertices.size()) != from.vertex_count() ||
      static_cast<int>(map.darts.size()) != from.dart_count())
    return fail("map sizes do not match the graphs");
  std::vector<bool> hit_v(to.vertex_count(), false), hit_d(to.dart_count(), false);
  for (int v : map.vertices) {
    if (v < 0 || v >= to.vertex_count() || hit_v[v]) return fail("vertex map is not a bijection");
    hit_v[v] = true;
  }
  for (Dart d : map.darts) {
    if (d < 0 || d >= to.dart_count() || hit_d[d]) return fail("dart map is not a bijection");
    hit_d[d] = true;
  }
  for (Dart d = 0; d < from.dart_count(); ++d) {
    const Dart m = map.darts[d];
    if (map.darts[reverse(d)] != reverse(m)) return fail("dart " + std::to_string(d) + ": reversal not preserved");
    if (to.tail(m) != map.vertices[from.tail(d)]) return fail("dart " + std::to_string(d) + ": tail not preserved");
    if (to.sign(edge_of(m)) != from.sign(edge_of(d))) return fail("dart " + std::to_string(d) + ": sign differs");
  }
  for (int v = 0; v < from.vertex_count(); ++v) {
    const auto& target = to.rotation(map.vertices[v]);
    const auto& source = from.rotation(v);
    if (source.size() != target.size()) return fail("vertex " + std::to_string(v) + ": degree differs");
    if (source.empty()) continue;
    const int shift = to.slot(map.darts[source.front()]);
    for (size_t i = 0; i < source.size(); ++i)
      if (target[(shift + i) % target.size()] != map.darts[source[i]])
        return fail("vertex " + std::to_string(v) + ": rotation not preserved");
  }
  return true;
}

EmbeddingMap local_modification_witness(const VoltageEmbedding& ve, int v, Element c) {
  const VoltageEmbedding mod = local_voltage_modification(ve, v, c);
  const EmbeddedGraph& g = ve.base();
  const FiniteGroup& grp = ve.group();
  const int n = grp.order();
  auto phi = [&](int u, Element a) { return u == v ? grp.mul(a, grp.inv(c)) : a; };
  EmbeddingMap m;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (Element a = 0; a < n; ++a) m.vertices.push_back(u * n + phi(u, a));
  m.darts.assign(static_cast<size_t>(g.dart_count()) * n, -1);
  for (Dart d = 0; d < g.dart_count(); ++d)
    for (Element a = 0; a < n; ++a)
      m.darts[lift_index(grp, ve.voltages(), n, d, a)] = lift_index(grp, mod.voltages(), n, d, phi(g.tail(d), a));
  return m;
}

EmbeddedGraph subdivide_lifts(const DerivedEmbedding& derived, int e) {
  EmbeddedGraph g = derived.graph();
  for (Element a = 0; a < derived.fiber_size(); ++a) g = subdivide_edge(g, e * derived.fiber_size() + a);
  return g;
}

EmbeddingMap subdivision_witness(const VoltageEmbedding& ve, int e) {
  const EmbeddedGraph& g = ve.base();
  const FiniteGroup& grp = ve.group();
  const int n = grp.order();
  const int base_vertices = g.vertex_count() * n;
  const int base_edges = g.edge_count() * n;
  EmbeddingMap m;
  for (int x = 0; x < base_vertices; ++x) m.vertices.push_back(x);
  for (Element a = 0; a < n; ++a) m.vertices.push_back(base_vertices + grp.mul(a, ve.voltage(positive_dart(e))));
  for (Dart d = 0; d < 2 * base_edges; ++d) m.darts.push_back(d);
  for (Element a = 0; a < n; ++a) {
    const int target = base_edges + grp.mul(a, ve.voltage(positive_dart(e)));
    m.darts.push_back(positive_dart(target));
    m.darts.push_back(negative_dart(target));
  }
  return m;
}

}  // namespace vgraph
